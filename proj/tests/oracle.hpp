#pragma once

// Brute-force reference implementations on plain strings over {'+','-','0'}.
// Deliberately naive and independent of the library's mask representation.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "comsep/sign_system.hpp"

namespace oracle {

using Vec = std::string;
using Sys = std::set<std::string>;

inline char neg(char c) { return c == '+' ? '-' : c == '-' ? '+' : '0'; }

inline Vec compose(const Vec& x, const Vec& y) {
  Vec z = x;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] == '0') z[i] = y[i];
  return z;
}

inline Vec negate(const Vec& x) {
  Vec z = x;
  for (auto& c : z) c = neg(c);
  return z;
}

inline std::vector<std::size_t> sep(const Vec& x, const Vec& y) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != '0' && y[i] == neg(x[i])) s.push_back(i);
  return s;
}

inline bool fs(const Sys& l) {
  for (const auto& x : l)
    for (const auto& y : l)
      if (!l.count(compose(x, negate(y)))) return false;
  return true;
}

inline bool c_axiom(const Sys& l) {
  for (const auto& x : l)
    for (const auto& y : l)
      if (!l.count(compose(x, y))) return false;
  return true;
}

// Direct transcription: for all X, Y and e in S(X,Y) some Z in L has Z_e = 0
// and Z_f = (X o Y)_f for every f outside S(X,Y).
inline bool se(const Sys& l) {
  for (const auto& x : l)
    for (const auto& y : l) {
      const auto s = sep(x, y);
      const Vec xy = compose(x, y);
      for (auto e : s) {
        bool found = false;
        for (const auto& z : l) {
          if (z[e] != '0') continue;
          bool ok = true;
          for (std::size_t f = 0; f < x.size() && ok; ++f) {
            bool in_s = false;
            for (auto t : s) in_s |= t == f;
            if (!in_s && z[f] != xy[f]) ok = false;
          }
          if (ok) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  return true;
}

inline bool com(const Sys& l) { return fs(l) && se(l); }

inline Sys from(const comsep::SignSystem& m) {
  const auto enc = m.encoded();
  return Sys(enc.begin(), enc.end());
}

inline comsep::SignSystem to_system(std::size_t n, const Sys& l) {
  return comsep::SignSystem::from_strings(n, std::vector<std::string>(l.begin(), l.end()));
}

// Covectors vanishing on the index set `f`, with those entries removed.
inline Sys contract(const Sys& l, const std::vector<bool>& f) {
  Sys out;
  for (const auto& x : l) {
    bool zero = true;
    Vec y;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (f[i])
        zero &= x[i] == '0';
      else
        y += x[i];
    }
    if (zero) out.insert(y);
  }
  return out;
}

inline Sys del(const Sys& l, const std::vector<bool>& f) {
  Sys out;
  for (const auto& x : l) {
    Vec y;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!f[i]) y += x[i];
    out.insert(y);
  }
  return out;
}

inline std::vector<bool> mask_bits(std::uint64_t mask, std::size_t n) {
  std::vector<bool> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = (mask >> i) & 1u;
  return b;
}

inline std::uint64_t pow3(std::size_t k) {
  std::uint64_t p = 1;
  while (k--) p *= 3;
  return p;
}

// Largest k such that some k-subset projects onto all 3^k patterns; checks
// every subset of every size, no early exit.
inline int rank(const Sys& l, std::size_t n) {
  if (l.empty()) return -1;
  int best = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    const auto comp = mask_bits(~a, n);
    const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(a));
    if (del(l, comp).size() == pow3(k)) best = std::max(best, static_cast<int>(k));
  }
  return best;
}

inline Sys all_vectors(std::size_t n) {
  Sys out{""};
  for (std::size_t i = 0; i < n; ++i) {
    Sys next;
    for (const auto& x : out)
      for (char c : {'+', '-', '0'}) next.insert(x + c);
    out = next;
  }
  return out;
}

// Sign patterns of (a1-a2, a2-a3, ..., an-a1) over an integer grid; these are
// the covectors of the linear functionals on the cyclic difference vectors.
inline Sys cyclic_difference_patterns(std::size_t n, int bound) {
  Sys out;
  std::vector<int> a(n, -bound);
  while (true) {
    Vec x;
    for (std::size_t i = 0; i < n; ++i) {
      const int d = a[i] - a[(i + 1) % n];
      x += d > 0 ? '+' : d < 0 ? '-' : '0';
    }
    out.insert(x);
    std::size_t i = 0;
    while (i < n && a[i] == bound) a[i++] = -bound;
    if (i == n) break;
    ++a[i];
  }
  return out;
}

// Deterministic stream for property tests.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  char sign() { return "+-0"[uniform(0, 2)]; }
  Vec vec(std::size_t n) {
    Vec x;
    for (std::size_t i = 0; i < n; ++i) x += sign();
    return x;
  }
};

}  // namespace oracle
