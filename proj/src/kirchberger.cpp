#include "comsep/kirchberger.hpp"

#include <algorithm>
#include <bit>

#include "comsep/generators.hpp"
#include "comsep/subsets.hpp"

namespace comsep {

void validate(const SeparationQuery& q, const GroundSet& ground) {
  if (!(q.v & q.w).empty()) throw Error("V and W are not disjoint");
  if (!(q.v | q.w).is_subset_of(ground.all())) throw Error("V or W is not a subset of the ground set");
}

SignVector target_vector(const GroundPtr& ground, const SeparationQuery& q) {
  validate(q, *ground);
  return SignVector(ground, q.v.bits(), q.w.bits());
}

SeparationQuery query_of(const SignVector& x) { return {x.positive(), x.negative()}; }

const char* to_string(Variant v) { return v == Variant::contraction ? "contraction" : "deletion"; }

const char* to_string(Claim c) {
  switch (c) {
    case Claim::theorem8:
      return "theorem8";
    case Claim::prop7:
      return "prop7";
    case Claim::monotonicity:
      return "monotonicity";
    case Claim::circuit:
      break;
  }
  return "circuit";
}

std::optional<SignVector> is_separable(const SignSystem& m, const SeparationQuery& q) {
  validate(q, *m.ground());
  // Smallest support wins, then canonical order, so witnesses stay minimal.
  std::optional<Packed> best;
  for (auto x : m.packed()) {
    if ((x.plus & q.v.bits()) != q.v.bits() || (x.minus & q.w.bits()) != q.w.bits()) continue;
    if (!best || std::popcount(x.support()) < std::popcount(best->support())) best = x;
  }
  if (!best) return std::nullopt;
  return m.vector_of(*best);
}

namespace {

void require_full(const SignSystem& m, const SeparationQuery& q) {
  validate(q, *m.ground());
  if (!q.is_full(*m.ground())) throw Error("query does not cover the ground set (V u W != E)");
}

// The restricted target R|D is a tope of M/(E\D) iff L holds the vector equal
// to R on D and zero elsewhere.
bool fails_unchecked(const SignSystem& m, const SeparationQuery& q, std::uint64_t d) {
  return !m.contains(Packed{q.v.bits() & d, q.w.bits() & d});
}

bool deletion_ok(const SignSystem& m, const SeparationQuery& q, std::uint64_t c) {
  const std::uint64_t plus = q.v.bits() & c, minus = q.w.bits() & c;
  for (auto x : m.packed())
    if ((x.plus & c) == plus && (x.minus & c) == minus) return true;
  return false;
}

std::size_t hypothesis_size(std::size_t r, std::size_t n) { return std::min(r + 1, n); }

HypothesisResult hypothesis_unchecked(const SignSystem& m, const SeparationQuery& q, Variant variant,
                                      std::size_t r) {
  HypothesisResult out;
  out.rank = r;
  out.subset_size = hypothesis_size(r, m.ground_size());
  any_subset_lex(m.ground_size(), out.subset_size, [&](std::uint64_t c) {
    const bool ok = variant == Variant::contraction ? !fails_unchecked(m, q, c) : deletion_ok(m, q, c);
    if (!ok) {
      out.holds = false;
      out.first_failure = ElementSet(c);
    }
    return !ok;
  });
  return out;
}

std::optional<ElementSet> minimal_failing_set(const SignSystem& m, const SeparationQuery& q) {
  const std::size_t n = m.ground_size();
  for (std::size_t k = 0; k <= n; ++k) {
    std::optional<ElementSet> found;
    any_subset_lex(n, k, [&](std::uint64_t d) {
      if (fails_unchecked(m, q, d)) found = ElementSet(d);
      return found.has_value();
    });
    if (found) return found;
  }
  return std::nullopt;
}

bool circuit_unchecked(const SignSystem& m, ElementSet d, const SeparationQuery& q) {
  if (d.empty()) return false;
  const ElementSet rest = m.ground()->all() - d;
  const SignSystem reduced = contraction(m, rest);
  const ElementSet flip(compress_bits(q.w.bits(), d.bits()));
  const SignSystem oriented = reorient_system(reduced, flip);
  const SignSystem circuit = directed_circuit(d.size());
  const auto a = oriented.packed();
  const auto b = circuit.packed();
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

bool prop7_premise_topes(const SignSystem& m) {
  const std::size_t n = m.ground_size();
  const std::uint64_t all = m.ground()->all().bits();
  for (std::size_t f = 0; f < n; ++f) {
    const std::uint64_t bit = std::uint64_t{1} << f;
    if (!m.contains(Packed{all & ~bit, bit})) return false;
  }
  return true;
}

bool prop7_premise(const SignSystem& m) {
  return !m.contains(Packed{m.ground()->all().bits(), 0}) && prop7_premise_topes(m);
}

WitnessReport witness_unchecked(const SignSystem& m, const SeparationQuery& q) {
  const auto d = minimal_failing_set(m, q);
  // D = E always fails once the target is not a tope.
  if (!d) throw Error("target is a tope; no witness exists");
  WitnessReport out{*d, contraction(m, m.ground()->all() - *d), false, false, *d, true, std::nullopt};
  out.circuit_verified = circuit_unchecked(m, *d, q);
  if (!d->empty()) {
    const SignSystem oriented =
        reorient_system(out.contraction_snapshot, ElementSet(compress_bits(q.w.bits(), d->bits())));
    out.single_minus_topes = prop7_premise_topes(oriented);
  }
  if (!m.empty()) {
    out.rank = rank(m);
    const std::size_t target = hypothesis_size(*out.rank, m.ground_size());
    ElementSet c = *d;
    for (std::size_t i = 0; i < m.ground_size() && c.size() < target; ++i) c.insert(i);
    out.extension_c = c;
    out.extension_fails = fails_unchecked(m, q, c.bits());
  }
  return out;
}

}  // namespace

bool target_tope_present(const SignSystem& m, const SeparationQuery& q) {
  require_full(m, q);
  return m.contains(Packed{q.v.bits(), q.w.bits()});
}

HypothesisResult hypothesis_holds(const SignSystem& m, const SeparationQuery& q, Variant variant) {
  require_full(m, q);
  require_com(m);
  return hypothesis_unchecked(m, q, variant, rank(m));
}

std::vector<HypothesisRow> hypothesis_table(const SignSystem& m, const SeparationQuery& q) {
  require_full(m, q);
  require_com(m);
  std::vector<HypothesisRow> rows;
  const std::size_t k = hypothesis_size(rank(m), m.ground_size());
  for_each_subset_lex(m.ground_size(), k, [&](std::uint64_t c) {
    rows.push_back({ElementSet(c), !fails_unchecked(m, q, c), deletion_ok(m, q, c)});
  });
  return rows;
}

bool fails_on(const SignSystem& m, const SignVector& target, ElementSet d) {
  if (!same_ground(target.ground(), m.ground())) throw Error("target lives on a different ground set");
  if (!target.is_full()) throw Error("target must have full support");
  require_subset(*m.ground(), d, "witness set");
  return fails_unchecked(m, query_of(target), d.bits());
}

WitnessReport minimal_witness(const SignSystem& m, const SeparationQuery& q) {
  require_full(m, q);
  require_com(m);
  if (m.contains(Packed{q.v.bits(), q.w.bits()})) throw Error("query is separable; no witness exists");
  return witness_unchecked(m, q);
}

bool verify_circuit_structure(const SignSystem& m, ElementSet d, const SeparationQuery& q) {
  require_full(m, q);
  require_subset(*m.ground(), d, "witness set");
  return circuit_unchecked(m, d, q);
}

bool proposition7_applies(const SignSystem& m) { return prop7_premise(m); }

bool check_proposition7(const SignSystem& m) {
  require_com(m);
  // C_0 is undefined; on an empty ground the implication is taken as vacuous.
  if (m.ground_size() == 0 || !prop7_premise(m)) return true;
  const SignSystem circuit = directed_circuit(m.ground_size());
  const auto a = m.packed();
  const auto b = circuit.packed();
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<CounterexampleRecord> audit_theorem(const SignSystem& m) {
  require_com(m);
  std::vector<CounterexampleRecord> out;
  // The hypothesis needs the rank, which the empty system lacks.
  if (m.empty()) return out;
  const std::size_t r = rank(m);
  for (const auto& q : all_targets(m)) {
    const auto hyp = hypothesis_unchecked(m, q, Variant::contraction, r);
    if (hyp.holds && !m.contains(Packed{q.v.bits(), q.w.bits()})) {
      out.push_back({m, target_vector(m.ground(), q), Variant::contraction, Claim::theorem8, std::nullopt,
                     std::nullopt, "hypothesis holds but the target is not a tope"});
    }
  }
  return out;
}

std::vector<CounterexampleRecord> audit_monotonicity(const SignSystem& m) {
  require_com(m);
  std::vector<CounterexampleRecord> out;
  // Every set fails in the empty system, supersets included.
  if (m.empty()) return out;
  const std::size_t n = m.ground_size();
  const std::uint64_t all = m.ground()->all().bits();
  for (const auto& q : all_targets(m)) {
    if (m.contains(Packed{q.v.bits(), q.w.bits()})) continue;
    const ElementSet d = *minimal_failing_set(m, q);
    const std::uint64_t rest = all & ~d.bits();
    for (std::size_t k = 0; k <= n - d.size(); ++k) {
      for_each_subset_lex(n - d.size(), k, [&](std::uint64_t extra) {
        // Spread the extra bits over E \ D.
        std::uint64_t c = d.bits();
        std::size_t j = 0;
        for (std::uint64_t r = rest; r != 0; r &= r - 1, ++j)
          if ((extra >> j) & 1u) c |= r & -r;
        if (!fails_unchecked(m, q, c)) {
          out.push_back({m, target_vector(m.ground(), q), Variant::contraction, Claim::monotonicity, d,
                         ElementSet(c), "superset of the minimal failing set does not fail"});
        }
      });
    }
  }
  return out;
}

}  // namespace comsep
