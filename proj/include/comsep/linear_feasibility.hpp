#pragma once

#include <optional>

#include "comsep/rational.hpp"

namespace comsep {

enum class Relation { greater_equal, equal };

/// coefficients . x  (>= | =)  rhs
struct Constraint {
  RationalVector coefficients;
  Relation relation = Relation::greater_equal;
  Rational rhs;
};

struct LinearConstraintSystem {
  std::size_t variables = 0;
  std::vector<Constraint> rows;

  /// Throws Error when a row has the wrong coefficient count.
  void validate() const;
  bool satisfied_by(const RationalVector& x) const;
};

/// Exact feasibility by Fourier-Motzkin elimination. Equalities are solved
/// first by substitution; inequalities are then eliminated from the last
/// variable down. The witness is rebuilt by back-substitution, taking the
/// largest lower bound for each variable (the smallest upper bound if it has
/// none, zero if unconstrained), so it is deterministic.
std::optional<RationalVector> lp_feasible(const LinearConstraintSystem& sys);

}  // namespace comsep
