#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace comsep {

/// Raised for malformed arguments: ground-set mismatches, subsets that are
/// not subsets, bad encodings.
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Sign : std::int8_t { minus = -1, zero = 0, plus = 1 };

constexpr Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

/// Product used by the simplicity check: ++ and -- give +, mixed gives -,
/// anything with a zero gives 0.
constexpr Sign sign_product(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

char to_char(Sign s);
Sign sign_from_char(char c);

/// A subset of a ground set, stored as a bit mask over ground indices.
/// Ground sets are capped at 64 elements.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<std::size_t> indices);

  static constexpr ElementSet all(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool is_subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }

  ElementSet& insert(std::size_t i) {
    bits_ |= std::uint64_t{1} << i;
    return *this;
  }

  std::vector<std::size_t> indices() const;

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend constexpr ElementSet operator^(ElementSet a, ElementSet b) { return ElementSet(a.bits_ ^ b.bits_); }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  // Size first, then lexicographic in ground order.
  friend bool operator<(ElementSet a, ElementSet b);

 private:
  std::uint64_t bits_ = 0;
};

/// Ordered finite set of distinct element identifiers.
class GroundSet {
 public:
  static constexpr std::size_t max_size = 64;

  explicit GroundSet(std::vector<std::string> names);
  /// Ground set named e1..en.
  static std::shared_ptr<const GroundSet> indexed(std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  ElementSet all() const { return ElementSet::all(size()); }

  /// Index of an identifier; throws Error when absent.
  std::size_t index_of(std::string_view id) const;
  ElementSet subset(const std::vector<std::string>& ids) const;
  std::vector<std::string> names_of(ElementSet s) const;

  /// Ground set on the complement of `removed`, order preserved.
  std::shared_ptr<const GroundSet> without(ElementSet removed) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using GroundPtr = std::shared_ptr<const GroundSet>;

bool same_ground(const GroundPtr& a, const GroundPtr& b);

/// Packs the bits of `mask` selected by `keep` into the low bits, in order.
std::uint64_t compress_bits(std::uint64_t mask, std::uint64_t keep);

/// Total map from a ground set to {+, 0, -}, stored as a pair of masks.
class SignVector {
 public:
  SignVector(GroundPtr ground, std::uint64_t plus, std::uint64_t minus);
  /// Zero vector.
  explicit SignVector(GroundPtr ground);
  /// Parses the one-character-per-element encoding, e.g. "+-0".
  static SignVector parse(GroundPtr ground, std::string_view text);

  const GroundPtr& ground() const { return ground_; }
  std::size_t size() const { return ground_->size(); }
  std::uint64_t plus_mask() const { return plus_; }
  std::uint64_t minus_mask() const { return minus_; }

  Sign operator[](std::size_t i) const;
  ElementSet positive() const { return ElementSet(plus_); }
  ElementSet negative() const { return ElementSet(minus_); }
  bool is_zero() const { return (plus_ | minus_) == 0; }
  bool is_full() const { return (plus_ | minus_) == ground_->all().bits(); }

  std::string to_string() const;

  friend bool operator==(const SignVector& a, const SignVector& b);
  /// Canonical order: lexicographic in ground order with + < - < 0.
  friend bool operator<(const SignVector& a, const SignVector& b);

 private:
  GroundPtr ground_;
  std::uint64_t plus_ = 0;
  std::uint64_t minus_ = 0;
};

SignVector compose(const SignVector& x, const SignVector& y);
SignVector negate(const SignVector& x);
ElementSet separator(const SignVector& x, const SignVector& y);
ElementSet support(const SignVector& x);
/// Drops the entries on `removed`; the result lives on E \ removed.
SignVector restrict_vector(const SignVector& x, ElementSet removed);
SignVector reorient_vector(const SignVector& x, ElementSet flipped);

/// Throws Error unless `s` is a subset of the ground.
void require_subset(const GroundSet& ground, ElementSet s, const char* what);

/// Canonical comparison on raw mask pairs, matching SignVector::operator<.
bool canonical_less(std::uint64_t plus_a, std::uint64_t minus_a, std::uint64_t plus_b,
                    std::uint64_t minus_b);

}  // namespace comsep
