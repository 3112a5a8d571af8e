#include "comsep/linear_feasibility.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace comsep {

void LinearConstraintSystem::validate() const {
  for (const auto& row : rows)
    if (row.coefficients.size() != variables) throw Error("constraint row has wrong coefficient count");
}

bool LinearConstraintSystem::satisfied_by(const RationalVector& x) const {
  if (x.size() != variables) return false;
  for (const auto& row : rows) {
    const Rational lhs = dot(row.coefficients, x);
    if (row.relation == Relation::equal ? lhs != row.rhs : lhs < row.rhs) return false;
  }
  return true;
}

namespace {

struct Row {
  RationalVector c;
  Rational rhs;
};

// row -= factor * other
void axpy(Row& row, const Rational& factor, const Row& other) {
  for (std::size_t k = 0; k < row.c.size(); ++k) row.c[k] -= factor * other.c[k];
  row.rhs -= factor * other.rhs;
}

std::optional<std::size_t> first_nonzero(const Row& row) {
  for (std::size_t k = 0; k < row.c.size(); ++k)
    if (sgn(row.c[k]) != 0) return k;
  return std::nullopt;
}

struct Substitution {
  std::size_t var;
  Row row;  // row.c . x = row.rhs with row.c[var] != 0
};

struct Elimination {
  std::size_t var;
  std::vector<Row> lower;  // c[var] > 0
  std::vector<Row> upper;  // c[var] < 0
};

// x_var from the bound `row` given the other coordinates.
Rational bound_of(const Row& row, std::size_t var, const RationalVector& x) {
  Rational rest = row.rhs;
  for (std::size_t k = 0; k < row.c.size(); ++k)
    if (k != var) rest -= row.c[k] * x[k];
  return rest / row.c[var];
}

// Scales to unit leading coefficient magnitude and merges rows with equal
// left-hand sides, keeping the tightest right-hand side. Returns false on a
// contradictory constant row.
bool normalize(std::vector<Row>& rows) {
  std::map<std::vector<std::string>, std::size_t> seen;
  std::vector<Row> out;
  for (auto& row : rows) {
    const auto lead = first_nonzero(row);
    if (!lead) {
      if (sgn(row.rhs) > 0) return false;
      continue;
    }
    const Rational scale = abs(row.c[*lead]);
    for (auto& v : row.c) v /= scale;
    row.rhs /= scale;
    std::vector<std::string> key;
    key.reserve(row.c.size());
    for (const auto& v : row.c) key.push_back(v.get_str());
    auto [it, inserted] = seen.emplace(std::move(key), out.size());
    if (inserted) {
      out.push_back(std::move(row));
    } else if (row.rhs > out[it->second].rhs) {
      out[it->second].rhs = row.rhs;
    }
  }
  rows = std::move(out);
  return true;
}

}  // namespace

std::optional<RationalVector> lp_feasible(const LinearConstraintSystem& sys) {
  sys.validate();
  const std::size_t n = sys.variables;
  std::vector<Row> equalities, inequalities;
  for (const auto& r : sys.rows)
    (r.relation == Relation::equal ? equalities : inequalities).push_back({r.coefficients, r.rhs});

  std::vector<Substitution> subs;
  std::vector<bool> substituted(n, false);
  for (std::size_t i = 0; i < equalities.size(); ++i) {
    Row& eq = equalities[i];
    const auto pivot = first_nonzero(eq);
    if (!pivot) {
      if (sgn(eq.rhs) != 0) return std::nullopt;
      continue;
    }
    const Rational& p = eq.c[*pivot];
    for (std::size_t j = i + 1; j < equalities.size(); ++j)
      if (sgn(equalities[j].c[*pivot]) != 0) axpy(equalities[j], equalities[j].c[*pivot] / p, eq);
    for (auto& row : inequalities)
      if (sgn(row.c[*pivot]) != 0) axpy(row, row.c[*pivot] / p, eq);
    substituted[*pivot] = true;
    subs.push_back({*pivot, eq});
  }

  std::vector<Elimination> eliminations;
  if (!normalize(inequalities)) return std::nullopt;
  for (std::size_t var = n; var-- > 0;) {
    if (substituted[var]) continue;
    Elimination step{var, {}, {}};
    std::vector<Row> untouched;
    for (auto& row : inequalities) {
      const int s = sgn(row.c[var]);
      if (s > 0)
        step.lower.push_back(row);
      else if (s < 0)
        step.upper.push_back(row);
      else
        untouched.push_back(std::move(row));
    }
    for (const auto& lo : step.lower) {
      for (const auto& up : step.upper) {
        Row combined{RationalVector(n), -up.c[var] * lo.rhs + lo.c[var] * up.rhs};
        for (std::size_t k = 0; k < n; ++k) combined.c[k] = -up.c[var] * lo.c[k] + lo.c[var] * up.c[k];
        combined.c[var] = 0;
        untouched.push_back(std::move(combined));
      }
    }
    inequalities = std::move(untouched);
    if (!normalize(inequalities)) return std::nullopt;
    eliminations.push_back(std::move(step));
  }

  RationalVector x(n, Rational(0));
  for (auto it = eliminations.rbegin(); it != eliminations.rend(); ++it) {
    const auto& step = *it;
    if (!step.lower.empty()) {
      Rational best = bound_of(step.lower.front(), step.var, x);
      for (const auto& row : step.lower) best = std::max(best, bound_of(row, step.var, x));
      x[step.var] = best;
    } else if (!step.upper.empty()) {
      Rational best = bound_of(step.upper.front(), step.var, x);
      for (const auto& row : step.upper) best = std::min(best, bound_of(row, step.var, x));
      x[step.var] = best;
    }
  }
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) x[it->var] = bound_of(it->row, it->var, x);

  if (!sys.satisfied_by(x)) throw std::logic_error("Fourier-Motzkin witness violates a constraint");
  return x;
}

}  // namespace comsep
