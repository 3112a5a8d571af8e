#include "comsep/minors.hpp"

#include <unordered_set>

#include "comsep/subsets.hpp"

namespace comsep {

SignSystem contraction(const SignSystem& m, ElementSet f) {
  require_subset(*m.ground(), f, "contraction set");
  if (f.empty()) return m;
  const std::uint64_t keep = m.ground()->all().bits() & ~f.bits();
  std::vector<Packed> out;
  for (auto x : m.packed())
    if ((x.support() & f.bits()) == 0) out.push_back({compress_bits(x.plus, keep), compress_bits(x.minus, keep)});
  return SignSystem(m.ground()->without(f), std::move(out));
}

SignSystem deletion(const SignSystem& m, ElementSet f) {
  require_subset(*m.ground(), f, "deletion set");
  if (f.empty()) return m;
  const std::uint64_t keep = m.ground()->all().bits() & ~f.bits();
  std::vector<Packed> out;
  out.reserve(m.size());
  for (auto x : m.packed()) out.push_back({compress_bits(x.plus, keep), compress_bits(x.minus, keep)});
  return SignSystem(m.ground()->without(f), std::move(out));
}

SignSystem reorient_system(const SignSystem& m, ElementSet s) {
  require_subset(*m.ground(), s, "reorientation set");
  const std::uint64_t f = s.bits();
  std::vector<Packed> out;
  out.reserve(m.size());
  for (auto x : m.packed()) out.push_back({(x.plus & ~f) | (x.minus & f), (x.minus & ~f) | (x.plus & f)});
  return SignSystem(m.ground(), std::move(out));
}

SignSystem open_halfspace(const SignSystem& m, std::size_t element, Sign side) {
  if (element >= m.ground_size()) throw Error("halfspace element out of range");
  if (side == Sign::zero) throw Error("halfspace side must be + or -");
  const std::uint64_t bit = std::uint64_t{1} << element;
  const std::uint64_t keep = m.ground()->all().bits() & ~bit;
  std::vector<Packed> out;
  for (auto x : m.packed()) {
    const bool on_side = side == Sign::plus ? (x.plus & bit) != 0 : (x.minus & bit) != 0;
    if (on_side) out.push_back({compress_bits(x.plus, keep), compress_bits(x.minus, keep)});
  }
  return SignSystem(m.ground()->without(ElementSet(bit)), std::move(out));
}

namespace {

std::size_t pow3(std::size_t k) {
  std::size_t r = 1;
  while (k-- > 0) r *= 3;
  return r;
}

bool shattered_unchecked(const SignSystem& m, std::uint64_t a) {
  const std::size_t k = static_cast<std::size_t>(std::popcount(a));
  const std::size_t need = pow3(k);
  if (m.size() < need) return false;
  std::unordered_set<std::uint64_t> seen;
  for (auto x : m.packed()) {
    // Two k-bit masks fit in one word for k <= 32.
    seen.insert(compress_bits(x.plus, a) | (compress_bits(x.minus, a) << 32));
    if (seen.size() == need) return true;
  }
  return false;
}

}  // namespace

bool is_shattered(const SignSystem& m, ElementSet a) {
  require_subset(*m.ground(), a, "shattering set");
  if (a.size() > 32) throw Error("shattering check limited to 32 elements");
  return shattered_unchecked(m, a.bits());
}

std::size_t rank(const SignSystem& m) {
  if (m.empty()) throw Error("rank of the empty system is undefined");
  const std::size_t n = m.ground_size();
  if (n > 32) throw Error("rank search limited to 32 elements");
  std::size_t r = 0;
  // Shattered sets are downward closed, so an empty level ends the search.
  for (std::size_t k = 1; k <= n; ++k) {
    if (!any_subset_lex(n, k, [&](std::uint64_t a) { return shattered_unchecked(m, a); })) break;
    r = k;
  }
  return r;
}

SignSystem directed_circuit(std::size_t n) {
  if (n < 1) throw Error("directed circuit needs n >= 1");
  if (n > 20) throw Error("directed circuit limited to n <= 20");
  auto ground = GroundSet::indexed(n);
  std::vector<Packed> out{Packed{}};
  if (n >= 2) {
    const std::uint64_t all = ground->all().bits();
    // Every (plus, minus) pair of disjoint nonempty masks.
    for (std::uint64_t plus = 1; plus <= all; ++plus) {
      const std::uint64_t rest = all & ~plus;
      for (std::uint64_t minus = rest; minus != 0; minus = (minus - 1) & rest) out.push_back({plus, minus});
    }
  }
  return SignSystem(ground, std::move(out));
}

}  // namespace comsep
