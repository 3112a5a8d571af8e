#include "comsep/sign_system.hpp"

#include <algorithm>
#include <unordered_map>

namespace comsep {

namespace {

bool packed_less(Packed a, Packed b) { return canonical_less(a.plus, a.minus, b.plus, b.minus); }

struct PackedHash {
  std::size_t operator()(Packed p) const noexcept {
    std::uint64_t h = p.plus * 0x9E3779B97F4A7C15ULL;
    h ^= (p.minus + 0x632BE59BD9B4E019ULL) + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

Packed compose_packed(Packed x, Packed y) {
  const std::uint64_t free = ~x.support();
  return {x.plus | (y.plus & free), x.minus | (y.minus & free)};
}

Packed negate_packed(Packed x) { return {x.minus, x.plus}; }

}  // namespace

SignSystem::SignSystem(GroundPtr ground) : ground_(std::move(ground)) {
  if (!ground_) throw Error("sign system without ground set");
}

SignSystem::SignSystem(GroundPtr ground, std::vector<Packed> covectors)
    : ground_(std::move(ground)), covectors_(std::move(covectors)) {
  if (!ground_) throw Error("sign system without ground set");
  const std::uint64_t all = ground_->all().bits();
  for (auto p : covectors_) {
    if ((p.plus & p.minus) != 0 || (p.support() & ~all) != 0) throw Error("malformed covector");
  }
  std::sort(covectors_.begin(), covectors_.end(), packed_less);
  covectors_.erase(std::unique(covectors_.begin(), covectors_.end()), covectors_.end());
}

SignSystem::SignSystem(GroundPtr ground, const std::vector<SignVector>& covectors) : SignSystem(std::move(ground)) {
  std::vector<Packed> packed;
  packed.reserve(covectors.size());
  for (const auto& x : covectors) {
    if (!same_ground(x.ground(), ground_)) throw Error("covector ground set differs from system ground set");
    packed.push_back({x.plus_mask(), x.minus_mask()});
  }
  *this = SignSystem(ground_, std::move(packed));
}

SignSystem SignSystem::from_strings(std::size_t n, const std::vector<std::string>& covectors) {
  auto ground = GroundSet::indexed(n);
  std::vector<SignVector> xs;
  for (const auto& s : covectors) xs.push_back(SignVector::parse(ground, s));
  return SignSystem(ground, xs);
}

std::vector<SignVector> SignSystem::covectors() const {
  std::vector<SignVector> out;
  out.reserve(covectors_.size());
  for (auto p : covectors_) out.push_back(vector_of(p));
  return out;
}

std::vector<std::string> SignSystem::encoded() const {
  std::vector<std::string> out;
  out.reserve(covectors_.size());
  for (auto p : covectors_) out.push_back(vector_of(p).to_string());
  return out;
}

bool SignSystem::contains(Packed p) const {
  return std::binary_search(covectors_.begin(), covectors_.end(), p, packed_less);
}

bool SignSystem::contains(const SignVector& x) const {
  if (!same_ground(x.ground(), ground_)) throw Error("sign vector ground set differs from system ground set");
  return contains(Packed{x.plus_mask(), x.minus_mask()});
}

bool operator==(const SignSystem& a, const SignSystem& b) {
  return *a.ground_ == *b.ground_ && a.covectors_ == b.covectors_;
}

bool check_c(const SignSystem& m) {
  for (auto x : m.packed())
    for (auto y : m.packed())
      if (!m.contains(compose_packed(x, y))) return false;
  return true;
}

bool check_fs(const SignSystem& m) {
  for (auto x : m.packed())
    for (auto y : m.packed())
      if (!m.contains(compose_packed(x, negate_packed(y)))) return false;
  return true;
}

// For a pair with separator S, the elimination targets are the covectors
// matching X o Y off S. Pairs are grouped by S so that each group needs one
// index over L keyed by the off-S part; the index stores which elements of S
// are zeroed by some matching covector.
bool check_se(const SignSystem& m) {
  const auto cov = m.packed();
  std::unordered_map<std::uint64_t, std::vector<Packed>> demands;
  for (auto x : cov) {
    for (auto y : cov) {
      const std::uint64_t s = (x.plus & y.minus) | (x.minus & y.plus);
      if (s == 0) continue;
      const Packed xy = compose_packed(x, y);
      demands[s].push_back({xy.plus & ~s, xy.minus & ~s});
    }
  }
  for (auto& [s, keys] : demands) {
    std::unordered_map<Packed, std::uint64_t, PackedHash> zeroed;
    for (auto z : cov) zeroed[Packed{z.plus & ~s, z.minus & ~s}] |= s & ~z.support();
    for (auto key : keys) {
      auto it = zeroed.find(key);
      if (it == zeroed.end() || it->second != s) return false;
    }
  }
  return true;
}

bool is_com(const SignSystem& m) { return check_fs(m) && check_se(m); }

bool is_om(const SignSystem& m) { return m.contains(Packed{}) && is_com(m); }

bool is_simple(const SignSystem& m) {
  const std::size_t n = m.ground_size();
  const auto cov = m.packed();
  for (std::size_t e = 0; e < n; ++e) {
    const std::uint64_t bit = std::uint64_t{1} << e;
    bool p = false, q = false, z = false;
    for (auto x : cov) {
      p |= (x.plus & bit) != 0;
      q |= (x.minus & bit) != 0;
      z |= (x.support() & bit) == 0;
    }
    if (!(p && q && z)) return false;
  }
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t f = e + 1; f < n; ++f) {
      const std::uint64_t pair = (std::uint64_t{1} << e) | (std::uint64_t{1} << f);
      bool same = false, opposite = false, zero = false;
      for (auto x : cov) {
        if ((x.support() & pair) != pair) {
          zero = true;
        } else if ((x.plus & pair) == pair || (x.minus & pair) == pair) {
          same = true;
        } else {
          opposite = true;
        }
      }
      if (!(same && opposite && zero)) return false;
    }
  }
  return true;
}

SignSystem topes(const SignSystem& m) {
  const std::uint64_t all = m.ground()->all().bits();
  std::vector<Packed> out;
  for (auto x : m.packed())
    if (x.support() == all) out.push_back(x);
  return SignSystem(m.ground(), std::move(out));
}

bool system_equals(const SignSystem& a, const SignSystem& b) { return a == b; }

bool negation_closed(const SignSystem& m) {
  for (auto x : m.packed())
    if (!m.contains(negate_packed(x))) return false;
  return true;
}

void require_com(const SignSystem& m) {
  if (!is_com(m)) throw Error("sign system is not a COM");
}

}  // namespace comsep
