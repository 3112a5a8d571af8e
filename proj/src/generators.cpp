#include "comsep/generators.hpp"

#include <limits>
#include <set>

#include "comsep/minors.hpp"

namespace comsep {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

bool SplitMix64::coin(std::uint64_t numerator, std::uint64_t denominator) {
  return static_cast<std::uint64_t>(uniform(0, static_cast<std::int64_t>(denominator) - 1)) < numerator;
}

SplitMix64 instance_rng(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mixer(seed);
  const std::uint64_t base = mixer.next();
  SplitMix64 rng(base ^ (index * 0xD1B54A32D192ED03ULL));
  rng.next();
  return rng;
}

void CorpusSpec::validate() const {
  if (count == 0 || max_points == 0 || max_dim == 0 || coord_bound <= 0)
    throw Error("corpus bounds must be positive");
  if (max_points > 8) throw Error("corpus max_points is limited to 8");
  if (max_dim > 3) throw Error("corpus max_dim is limited to 3");
}

namespace {

bool fits(std::size_t m, std::size_t d, std::int64_t bound) {
  double cells = 1;
  for (std::size_t k = 0; k < d; ++k) cells *= static_cast<double>(2 * bound + 1);
  return static_cast<double>(m) <= cells;
}

std::optional<std::vector<std::vector<std::int64_t>>> draw_points(SplitMix64& rng, std::size_t m, std::size_t d,
                                                                  std::int64_t bound, bool snap) {
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::vector<std::int64_t>> pts;
  for (std::size_t attempt = 0; pts.size() < m && attempt < 1000 * m; ++attempt) {
    std::vector<std::int64_t> v(d);
    for (auto& c : v) c = rng.uniform(-bound, bound);
    if (snap) v[d - 1] = v[0];
    if (seen.insert(v).second) pts.push_back(std::move(v));
  }
  if (pts.size() < m) return std::nullopt;
  return pts;
}

}  // namespace

PointConfiguration random_point_config(std::uint64_t seed, std::uint64_t index, std::size_t m, std::size_t d,
                                       std::int64_t bound) {
  if (m == 0 || d == 0 || bound <= 0) throw Error("point configuration bounds must be positive");
  if (!fits(m, d, bound)) throw Error("cannot place " + std::to_string(m) + " distinct points in the box");
  SplitMix64 rng = instance_rng(seed, index);
  const bool snap = d >= 2 && rng.coin(1, 4) && fits(m, d - 1, bound);
  auto pts = draw_points(rng, m, d, bound, snap);
  if (!pts) pts = draw_points(rng, m, d, bound, false);
  if (!pts) throw Error("failed to draw distinct points");
  std::vector<LabeledPoint> out;
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector coords;
    for (auto c : (*pts)[i]) coords.emplace_back(static_cast<long>(c));
    out.push_back({"p" + std::to_string(i + 1), std::move(coords), rng.coin(1, 2) ? Label::v : Label::w});
  }
  return PointConfiguration(d, std::move(out));
}

CorpusInstance generate_instance(const CorpusSpec& spec, std::uint64_t index) {
  spec.validate();
  SplitMix64 rng = instance_rng(~spec.seed, index);
  const auto m = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(spec.max_points)));
  const auto d = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(spec.max_dim)));
  const PointConfiguration points = random_point_config(spec.seed, index, m, d, spec.coord_bound);
  const bool affine = spec.allow_affine && rng.coin(1, 2);
  SignSystem system = affine ? affine_com(points) : linear_om(points);
  std::string recipe = std::string(affine ? "affine" : "linear") + "(m=" + std::to_string(m) +
                       ",d=" + std::to_string(d) + ")";

  const auto steps = rng.uniform(0, static_cast<std::int64_t>(spec.minor_depth));
  for (std::int64_t step = 0; step < steps && system.ground_size() > 1; ++step) {
    const std::size_t n = system.ground_size();
    const auto op = rng.uniform(0, spec.allow_halfspace ? 2 : 1);
    if (op == 2) {
      const auto e = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
      const Sign side = rng.coin(1, 2) ? Sign::plus : Sign::minus;
      recipe += std::string(" half") + to_char(side) + "{" + system.ground()->name(e) + "}";
      system = open_halfspace(system, e, side);
      continue;
    }
    const auto k = static_cast<std::size_t>(rng.uniform(1, std::min<std::int64_t>(2, static_cast<std::int64_t>(n) - 1)));
    ElementSet f;
    while (f.size() < k) f.insert(static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1)));
    std::string names;
    for (const auto& id : system.ground()->names_of(f)) names += (names.empty() ? "" : ",") + id;
    recipe += (op == 0 ? " /{" : " \\{") + names + "}";
    system = op == 0 ? contraction(system, f) : deletion(system, f);
  }
  ElementSet flip;
  for (std::size_t i = 0; i < system.ground_size(); ++i)
    if (rng.coin(1, 2)) flip.insert(i);
  if (!flip.empty()) {
    std::string names;
    for (const auto& id : system.ground()->names_of(flip)) names += (names.empty() ? "" : ",") + id;
    recipe += " reorient{" + names + "}";
    system = reorient_system(system, flip);
  }

  if (!is_com(system)) throw std::logic_error("corpus instance " + std::to_string(index) + " is not a COM: " + recipe);
  CorpusInstance out{spec.seed, index, system, recipe, false, false, false};
  out.om = system.contains(Packed{});
  out.simple = is_simple(system);
  out.circuit_sized = !system.empty() && system.ground_size() == rank(system) + 1;
  return out;
}

std::vector<CorpusInstance> com_corpus(const CorpusSpec& spec) {
  spec.validate();
  std::vector<CorpusInstance> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) out.push_back(generate_instance(spec, i));
  return out;
}

std::vector<SeparationQuery> all_targets(const SignSystem& m) {
  if (m.empty()) throw Error("targets of the empty system are not enumerated");
  const std::size_t n = m.ground_size();
  if (n > 30) throw Error("target enumeration limited to 30 elements");
  const std::uint64_t all = m.ground()->all().bits();
  const bool symmetric = n > 0 && negation_closed(m);
  std::vector<SeparationQuery> out;
  for (std::uint64_t w = 0; w <= all; ++w) {
    if (symmetric && (w & 1u)) continue;
    out.push_back({ElementSet(all & ~w), ElementSet(w)});
  }
  return out;
}

}  // namespace comsep
