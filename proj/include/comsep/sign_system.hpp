#pragma once

#include <span>
#include <vector>

#include "comsep/sign_vector.hpp"

namespace comsep {

/// Mask pair backing a covector inside a SignSystem.
struct Packed {
  std::uint64_t plus = 0;
  std::uint64_t minus = 0;

  std::uint64_t support() const { return plus | minus; }
  friend bool operator==(Packed, Packed) = default;
};

/// Ground set plus a finite set of sign vectors on it. Covectors are kept
/// deduplicated in canonical order; the empty set is a valid system.
class SignSystem {
 public:
  explicit SignSystem(GroundPtr ground);
  SignSystem(GroundPtr ground, std::vector<Packed> covectors);
  SignSystem(GroundPtr ground, const std::vector<SignVector>& covectors);
  /// Builds a system on e1..en from string encodings.
  static SignSystem from_strings(std::size_t n, const std::vector<std::string>& covectors);

  const GroundPtr& ground() const { return ground_; }
  std::size_t ground_size() const { return ground_->size(); }
  std::size_t size() const { return covectors_.size(); }
  bool empty() const { return covectors_.empty(); }

  std::span<const Packed> packed() const { return covectors_; }
  SignVector at(std::size_t i) const { return vector_of(covectors_.at(i)); }
  SignVector vector_of(Packed p) const { return SignVector(ground_, p.plus, p.minus); }
  std::vector<SignVector> covectors() const;
  std::vector<std::string> encoded() const;

  bool contains(Packed p) const;
  bool contains(const SignVector& x) const;

  friend bool operator==(const SignSystem& a, const SignSystem& b);

 private:
  GroundPtr ground_;
  std::vector<Packed> covectors_;
};

bool check_c(const SignSystem& m);
bool check_fs(const SignSystem& m);
bool check_se(const SignSystem& m);
bool is_com(const SignSystem& m);
bool is_om(const SignSystem& m);
bool is_simple(const SignSystem& m);

SignSystem topes(const SignSystem& m);
bool system_equals(const SignSystem& a, const SignSystem& b);

/// True iff -L = L.
bool negation_closed(const SignSystem& m);

/// Throws Error unless is_com(m).
void require_com(const SignSystem& m);

}  // namespace comsep
