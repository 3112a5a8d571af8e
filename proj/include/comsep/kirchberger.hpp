#pragma once

#include <optional>
#include <string>
#include <vector>

#include "comsep/minors.hpp"

namespace comsep {

/// Asks for a covector that is + on `v` and - on `w`.
struct SeparationQuery {
  ElementSet v;
  ElementSet w;

  bool is_full(const GroundSet& ground) const { return (v | w) == ground.all(); }
  friend bool operator==(const SeparationQuery&, const SeparationQuery&) = default;
};

/// Throws Error unless V and W are disjoint subsets of the ground.
void validate(const SeparationQuery& q, const GroundSet& ground);

/// + on V, - on W, 0 elsewhere.
SignVector target_vector(const GroundPtr& ground, const SeparationQuery& q);
/// The query whose target is `x` (V = X+, W = X-).
SeparationQuery query_of(const SignVector& x);

enum class Variant { contraction, deletion };
const char* to_string(Variant v);

/// A covector + on V and - on W, of least support (ties: canonical order).
std::optional<SignVector> is_separable(const SignSystem& m, const SeparationQuery& q);

/// Requires V u W = E.
bool target_tope_present(const SignSystem& m, const SeparationQuery& q);

/// Per-subset outcome of the hypothesis scan.
struct HypothesisRow {
  ElementSet c;
  bool contraction_ok = false;
  bool deletion_ok = false;
};

struct HypothesisResult {
  bool holds = true;
  std::size_t rank = 0;
  /// min(rank + 1, |E|).
  std::size_t subset_size = 0;
  /// First C (size, then ground order) whose restricted target fails.
  std::optional<ElementSet> first_failure;
};

/// For every C of size min(r+1, |E|): is the target restricted to C a tope
/// of M/(E\C) (contraction) or of M\(E\C) (deletion)?
/// Requires V u W = E and a nonempty COM.
HypothesisResult hypothesis_holds(const SignSystem& m, const SeparationQuery& q, Variant variant);

/// Both variants for every C, in scan order.
std::vector<HypothesisRow> hypothesis_table(const SignSystem& m, const SeparationQuery& q);

/// Does the target restricted to `d` fail to be a tope of M/(E\D)?
bool fails_on(const SignSystem& m, const SignVector& target, ElementSet d);

struct WitnessReport {
  /// Minimum-cardinality failing set, first in (size, ground order).
  ElementSet d;
  /// M/(E\D), on the elements of D.
  SignSystem contraction_snapshot;
  bool circuit_verified = false;
  /// After reorienting so the target is all-plus, every vector on D with a
  /// single minus is a tope of the contraction (the premise the circuit
  /// argument needs). False for D = {}.
  bool single_minus_topes = false;
  /// D extended by the first elements of E \ D up to min(r+1, |E|); equal
  /// to D when |D| already exceeds that size or the rank is undefined.
  ElementSet extension_c;
  bool extension_fails = false;
  /// Absent for the empty system.
  std::optional<std::size_t> rank;
};

/// Certificate for a non-separable full query. Throws Error when the target
/// is a tope.
WitnessReport minimal_witness(const SignSystem& m, const SeparationQuery& q);

/// Is M/(E\D), reoriented on W n D so the target is all-plus, exactly C_|D|?
bool verify_circuit_structure(const SignSystem& m, ElementSet d, const SeparationQuery& q);

/// If every single-minus tope exists and the all-plus vector is not a tope,
/// then M must equal C_|E|. Returns whether that implication holds.
bool check_proposition7(const SignSystem& m);
/// True when the implication's premise holds (the check is non-vacuous).
bool proposition7_applies(const SignSystem& m);

enum class Claim { theorem8, prop7, monotonicity, circuit };
const char* to_string(Claim c);

struct CounterexampleRecord {
  SignSystem system;
  std::optional<SignVector> target;
  Variant variant = Variant::contraction;
  Claim claim = Claim::theorem8;
  std::optional<ElementSet> d;
  std::optional<ElementSet> c;
  std::string note;
};

/// Every full partition of E whose contraction hypothesis holds while the
/// target is not a tope. Empty on every COM if the theorem is right.
std::vector<CounterexampleRecord> audit_theorem(const SignSystem& m);

/// For each non-tope target, checks that every C containing the minimal
/// witness D also fails.
std::vector<CounterexampleRecord> audit_monotonicity(const SignSystem& m);

}  // namespace comsep
