#include <doctest.h>

#include "comsep/linear_feasibility.hpp"
#include "oracle.hpp"

using namespace comsep;

namespace {

Rational q(const char* s) { return parse_rational(s); }

Constraint ge(RationalVector c, Rational rhs) { return {std::move(c), Relation::greater_equal, std::move(rhs)}; }
Constraint eq(RationalVector c, Rational rhs) { return {std::move(c), Relation::equal, std::move(rhs)}; }

}  // namespace

TEST_CASE("rational parsing is exact and strict") {
  CHECK(q("6/4") == Rational(3, 2));
  CHECK(to_string(q("6/4")) == "3/2");
  CHECK(to_string(q("-0")) == "0");
  CHECK(to_string(q("-7")) == "-7");
  for (const char* bad : {"", "1.5", "1e3", " 1", "1/0", "1/", "/2", "--1", "+1", "1/-2", "0x10", "abc"})
    CHECK_THROWS_AS(parse_rational(bad), Error);
  CHECK(sign_of(q("-1/3")) == Sign::minus);
  CHECK(sign_of(q("0")) == Sign::zero);
  CHECK(dot({q("1/2"), q("2")}, {q("2"), q("-1/4")}) == Rational(1, 2));
}

TEST_CASE("lp examples") {
  LinearConstraintSystem s1{1, {ge({1}, 1), ge({-1}, 0)}};
  CHECK_FALSE(lp_feasible(s1));

  LinearConstraintSystem s2{1, {ge({1}, 1)}};
  const auto w2 = lp_feasible(s2);
  REQUIRE(w2);
  CHECK(*w2 == RationalVector{1});

  LinearConstraintSystem s3{2, {ge({1, 1}, 1), eq({1, -1}, 0)}};
  const auto w3 = lp_feasible(s3);
  REQUIRE(w3);
  CHECK(*w3 == RationalVector{q("1/2"), q("1/2")});
}

TEST_CASE("lp edge cases") {
  CHECK(lp_feasible(LinearConstraintSystem{0, {}}) == RationalVector{});
  CHECK(lp_feasible(LinearConstraintSystem{2, {}}) == RationalVector{0, 0});
  CHECK_FALSE(lp_feasible(LinearConstraintSystem{1, {ge({0}, 1)}}));
  CHECK(lp_feasible(LinearConstraintSystem{1, {ge({0}, 0)}}));
  CHECK_FALSE(lp_feasible(LinearConstraintSystem{2, {eq({1, 1}, 1), eq({2, 2}, 3)}}));
  CHECK_THROWS_AS(lp_feasible(LinearConstraintSystem{2, {ge({1}, 0)}}), Error);
}

TEST_CASE("lp agrees with a grid rehearsal on random small systems") {
  oracle::Rng rng(23);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t vars = static_cast<std::size_t>(rng.uniform(1, 3));
    LinearConstraintSystem sys{vars, {}};
    const int rows = rng.uniform(1, 5);
    for (int r = 0; r < rows; ++r) {
      RationalVector c;
      for (std::size_t v = 0; v < vars; ++v) c.push_back(rng.uniform(-2, 2));
      sys.rows.push_back({c, rng.uniform(0, 5) == 0 ? Relation::equal : Relation::greater_equal, rng.uniform(-2, 2)});
    }
    const auto witness = lp_feasible(sys);
    // Grid over halves in [-4, 4]: anything found here must be seen by the solver.
    bool grid_hit = false;
    std::vector<int> pt(vars, -8);
    while (!grid_hit) {
      RationalVector x;
      for (int v : pt) x.push_back(Rational(v, 2));
      grid_hit = sys.satisfied_by(x);
      std::size_t i = 0;
      while (i < vars && pt[i] == 8) pt[i++] = -8;
      if (i == vars) break;
      ++pt[i];
    }
    if (witness) {
      ++feasible;
      CHECK(sys.satisfied_by(*witness));
    } else {
      ++infeasible;
      CHECK_FALSE(grid_hit);
    }
  }
  CHECK(feasible > 50);
  CHECK(infeasible > 50);
}
