#include <doctest.h>

#include "comsep/generators.hpp"
#include "comsep/minors.hpp"
#include "oracle.hpp"

using namespace comsep;

namespace {

SignSystem sys(std::size_t n, std::vector<std::string> xs) { return SignSystem::from_strings(n, xs); }

SignSystem circuit_oracle(std::size_t n) { return oracle::to_system(n, oracle::cyclic_difference_patterns(n, 3)); }

std::vector<std::string> enc(const SignSystem& m) { return m.encoded(); }

// A spread of small COMs from the seeded corpus.
std::vector<SignSystem> sample_coms(std::size_t count) {
  CorpusSpec spec;
  spec.seed = 101;
  spec.count = count;
  spec.max_points = 6;
  std::vector<SignSystem> out;
  for (const auto& inst : com_corpus(spec)) out.push_back(inst.system);
  return out;
}

}  // namespace

TEST_CASE("contraction examples") {
  const auto c3 = circuit_oracle(3);
  CHECK(c3.size() == 13);
  CHECK(enc(contraction(c3, ElementSet{2})) == std::vector<std::string>{"+-", "-+", "00"});
  CHECK(contraction(c3, ElementSet{2}).ground()->names() == std::vector<std::string>{"e1", "e2"});
  CHECK(system_equals(contraction(c3, ElementSet{}), c3));
  const auto loop = contraction(c3, ElementSet{1, 2});
  CHECK(enc(loop) == std::vector<std::string>{"0"});
  CHECK(loop.ground()->names() == std::vector<std::string>{"e1"});
  CHECK_THROWS_AS(contraction(c3, ElementSet{3}), Error);
  // Contraction can empty a system.
  CHECK(contraction(sys(2, {"++", "--"}), ElementSet{0}).empty());
}

TEST_CASE("deletion examples") {
  const auto c3 = circuit_oracle(3);
  CHECK(deletion(c3, ElementSet{2}).size() == 9);
  CHECK(system_equals(deletion(c3, ElementSet{}), c3));
  CHECK(enc(deletion(sys(2, {"+-"}), ElementSet{0})) == std::vector<std::string>{"-"});
}

TEST_CASE("reorientation examples") {
  const auto c2 = sys(2, {"00", "+-", "-+"});
  CHECK(enc(reorient_system(c2, ElementSet{0})) == std::vector<std::string>{"++", "--", "00"});
  CHECK(system_equals(reorient_system(c2, ElementSet{}), c2));
  const auto c3 = circuit_oracle(3);
  CHECK(system_equals(reorient_system(reorient_system(c3, ElementSet{0, 1}), ElementSet{0, 1}), c3));
}

TEST_CASE("open halfspace") {
  const auto c3 = circuit_oracle(3);
  const auto h = open_halfspace(c3, 2, Sign::plus);
  CHECK(h.ground()->names() == std::vector<std::string>{"e1", "e2"});
  CHECK(enc(h) == std::vector<std::string>{"+-", "-+", "--", "-0", "0-"});
  CHECK(is_com(h));
  CHECK_FALSE(is_om(h));
}

TEST_CASE("shattering examples") {
  const auto c3 = circuit_oracle(3);
  CHECK(is_shattered(c3, ElementSet{0, 1}));
  CHECK(is_shattered(c3, ElementSet{1, 2}));
  CHECK_FALSE(is_shattered(c3, ElementSet{0, 1, 2}));
  CHECK(is_shattered(c3, ElementSet{}));
  CHECK_FALSE(is_shattered(SignSystem(GroundSet::indexed(2)), ElementSet{}));
}

TEST_CASE("rank examples") {
  CHECK(rank(oracle::to_system(2, oracle::all_vectors(2))) == 2);
  CHECK(rank(sys(2, {"00"})) == 0);
  CHECK_THROWS_AS(rank(SignSystem(GroundSet::indexed(2))), Error);
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto c = circuit_oracle(n);
    CHECK(rank(c) == n - 1);
    CHECK(oracle::rank(oracle::from(c), n) == static_cast<int>(n - 1));
  }
}

TEST_CASE("directed circuit against the cyclic-difference oracle") {
  CHECK(enc(directed_circuit(2)) == std::vector<std::string>{"+-", "-+", "00"});
  const auto c3 = directed_circuit(3);
  CHECK(c3.size() == 13);
  CHECK(c3.contains(SignVector::parse(c3.ground(), "+-+")));
  CHECK_FALSE(c3.contains(SignVector::parse(c3.ground(), "+++")));
  CHECK(enc(directed_circuit(1)) == std::vector<std::string>{"0"});
  CHECK_THROWS_AS(directed_circuit(0), Error);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto c = directed_circuit(n);
    CHECK(system_equals(c, circuit_oracle(n)));
    const std::uint64_t p3 = oracle::pow3(n), p2 = std::uint64_t{1} << (n + 1);
    if (n >= 2) {
      CHECK(c.size() == p3 - p2 + 2);
      CHECK(topes(c).size() == (std::size_t{1} << n) - 2);
    }
    CHECK(is_om(c));
  }
}

TEST_CASE("minor identities on corpus COMs") {
  oracle::Rng rng(17);
  int checked = 0;
  for (const auto& m : sample_coms(200)) {
    const std::size_t n = m.ground_size();
    if (n < 2) continue;
    const auto l = oracle::from(m);
    const std::uint64_t all = ElementSet::all(n).bits();
    const std::uint64_t f = static_cast<std::uint64_t>(rng.uniform(0, 255)) & all;
    const std::uint64_t rest = all & ~f;
    // G is drawn in the coordinates of E \ F.
    const std::size_t n2 = n - static_cast<std::size_t>(__builtin_popcountll(f));
    const std::uint64_t g2 = static_cast<std::uint64_t>(rng.uniform(0, 255)) & ElementSet::all(n2).bits();
    std::uint64_t g = 0;
    {
      std::size_t j = 0;
      for (std::size_t i = 0; i < n; ++i)
        if ((rest >> i) & 1u) {
          if ((g2 >> j) & 1u) g |= std::uint64_t{1} << i;
          ++j;
        }
    }
    const ElementSet F(f), G(g), G2(g2);
    CHECK(system_equals(contraction(contraction(m, F), G2), contraction(m, F | G)));
    CHECK(system_equals(deletion(deletion(m, F), G2), deletion(m, F | G)));
    // Contract F then delete G equals delete G then contract F.
    std::uint64_t f_after_g = 0;
    {
      std::size_t j = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (!((g >> i) & 1u)) {
          if ((f >> i) & 1u) f_after_g |= std::uint64_t{1} << j;
          ++j;
        }
    }
    CHECK(system_equals(deletion(contraction(m, F), G2), contraction(deletion(m, G), ElementSet(f_after_g))));

    // Oracle agreement and closure, checked with the naive axioms.
    const auto fb = oracle::mask_bits(f, n);
    CHECK(oracle::from(contraction(m, F)) == oracle::contract(l, fb));
    CHECK(oracle::from(deletion(m, F)) == oracle::del(l, fb));
    CHECK(oracle::com(oracle::from(contraction(m, F))));
    CHECK(oracle::com(oracle::from(deletion(m, F))));

    if (!m.empty()) {
      CHECK(rank(m) == static_cast<std::size_t>(oracle::rank(l, n)));
      CHECK(rank(deletion(m, F)) <= rank(m));
      CHECK(rank(reorient_system(m, G)) == rank(m));
    }
    ++checked;
  }
  CHECK(checked > 80);
}

TEST_CASE("shattering is downward closed") {
  for (const auto& m : sample_coms(40)) {
    const std::size_t n = m.ground_size();
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
      if (!is_shattered(m, ElementSet(a))) continue;
      for (std::uint64_t b = a;; b = (b - 1) & a) {
        CHECK(is_shattered(m, ElementSet(b)));
        if (b == 0) break;
      }
    }
  }
}
