#include "comsep/realizable.hpp"

#include <stdexcept>

#include "comsep/subsets.hpp"

namespace comsep {

PointConfiguration::PointConfiguration(std::size_t dim, std::vector<LabeledPoint> points)
    : dim_(dim), points_(std::move(points)) {
  std::vector<std::string> ids;
  ids.reserve(points_.size());
  for (const auto& pt : points_) {
    if (pt.coords.size() != dim_)
      throw Error("point '" + pt.id + "' has " + std::to_string(pt.coords.size()) + " coordinates, expected " +
                  std::to_string(dim_));
    ids.push_back(pt.id);
  }
  ground_ = std::make_shared<const GroundSet>(std::move(ids));
}

ElementSet PointConfiguration::labeled(Label l) const {
  ElementSet s;
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i].label == l) s.insert(i);
  return s;
}

PointConfiguration PointConfiguration::subconfiguration(ElementSet keep) const {
  require_subset(*ground_, keep, "point subset");
  std::vector<LabeledPoint> kept;
  for (auto i : keep.indices()) kept.push_back(points_[i]);
  return PointConfiguration(dim_, std::move(kept));
}

SignVector induced_sign_vector(const PointConfiguration& p, const AffineFunctional& f) {
  std::uint64_t plus = 0, minus = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int s = sgn(f.value(p[i].coords));
    if (s > 0) plus |= std::uint64_t{1} << i;
    if (s < 0) minus |= std::uint64_t{1} << i;
  }
  return SignVector(p.ground(), plus, minus);
}

namespace {

// Variables are (a_1..a_d, alpha), or just a when `linear`.
Constraint sign_constraint(const RationalVector& v, Sign s, bool linear) {
  Constraint row;
  row.coefficients = v;
  if (!linear) row.coefficients.push_back(Rational(-1));
  switch (s) {
    case Sign::plus:
      row.rhs = 1;
      break;
    case Sign::minus:
      for (auto& c : row.coefficients) c = -c;
      row.rhs = 1;
      break;
    case Sign::zero:
      row.relation = Relation::equal;
      row.rhs = 0;
      break;
  }
  return row;
}

AffineFunctional functional_of(const RationalVector& x, std::size_t dim, bool linear) {
  AffineFunctional f{RationalVector(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(dim)), Rational(0)};
  if (!linear) f.alpha = x[dim];
  return f;
}

std::optional<AffineFunctional> realize(const PointConfiguration& p, const SignVector& x, bool linear) {
  if (!same_ground(x.ground(), p.ground())) throw Error("sign vector does not live on the configuration's points");
  LinearConstraintSystem sys{p.dim() + (linear ? 0 : 1), {}};
  for (std::size_t i = 0; i < p.size(); ++i) sys.rows.push_back(sign_constraint(p[i].coords, x[i], linear));
  const auto sol = lp_feasible(sys);
  if (!sol) return std::nullopt;
  auto f = functional_of(*sol, p.dim(), linear);
  if (!(induced_sign_vector(p, f) == x)) throw std::logic_error("functional does not reproduce the sign vector");
  return f;
}

// Depth-first over points; an infeasible prefix prunes every extension.
void enumerate(const PointConfiguration& p, bool linear, std::size_t i, LinearConstraintSystem& sys,
               std::uint64_t plus, std::uint64_t minus, std::vector<Packed>& out) {
  if (i == p.size()) {
    out.push_back({plus, minus});
    return;
  }
  const std::uint64_t bit = std::uint64_t{1} << i;
  for (Sign s : {Sign::zero, Sign::plus, Sign::minus}) {
    sys.rows.push_back(sign_constraint(p[i].coords, s, linear));
    if (lp_feasible(sys)) {
      enumerate(p, linear, i + 1, sys, plus | (s == Sign::plus ? bit : 0), minus | (s == Sign::minus ? bit : 0),
                out);
    }
    sys.rows.pop_back();
  }
}

SignSystem enumerate_all(const PointConfiguration& p, bool linear) {
  if (p.size() > max_enumeration_points)
    throw Error("sign-pattern enumeration limited to " + std::to_string(max_enumeration_points) + " points");
  LinearConstraintSystem sys{p.dim() + (linear ? 0 : 1), {}};
  std::vector<Packed> out;
  enumerate(p, linear, 0, sys, 0, 0, out);
  return SignSystem(p.ground(), std::move(out));
}

using Matrix = std::vector<RationalVector>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && sgn(m[sel][col]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational lead = m[row][col];
    for (auto& v : m[row]) v /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= factor * m[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<AffineFunctional> feasible_sign_vector(const PointConfiguration& p, const SignVector& x) {
  return realize(p, x, false);
}

std::optional<AffineFunctional> feasible_linear_sign_vector(const PointConfiguration& p, const SignVector& x) {
  return realize(p, x, true);
}

SignSystem affine_com(const PointConfiguration& p) { return enumerate_all(p, false); }

SignSystem linear_om(const PointConfiguration& p) { return enumerate_all(p, true); }

std::optional<AffineFunctional> separating_functional(const PointConfiguration& p, ElementSet v, ElementSet w) {
  require_subset(*p.ground(), v | w, "separation sets");
  if (!(v & w).empty()) throw Error("a point carries both labels");
  const ElementSet used = v | w;
  const PointConfiguration sub = p.subconfiguration(used);
  const SignVector x(sub.ground(), compress_bits(w.bits(), used.bits()), compress_bits(v.bits(), used.bits()));
  return feasible_sign_vector(sub, x);
}

std::optional<AffineFunctional> separating_functional(const PointConfiguration& p) {
  return separating_functional(p, p.labeled(Label::v), p.labeled(Label::w));
}

std::optional<ElementSet> failing_subset(const PointConfiguration& p, ElementSet v, ElementSet w,
                                         std::size_t max_size) {
  const auto members = (v | w).indices();
  for (std::size_t k = 1; k <= std::min(max_size, members.size()); ++k) {
    std::optional<ElementSet> found;
    any_subset_lex(members.size(), k, [&](std::uint64_t pick) {
      ElementSet c;
      for (std::size_t j = 0; j < members.size(); ++j)
        if ((pick >> j) & 1u) c.insert(members[j]);
      if (!separating_functional(p, v & c, w & c)) found = c;
      return found.has_value();
    });
    if (found) return found;
  }
  return std::nullopt;
}

FaceSymmetryWitness example3_fs_witness(const PointConfiguration& p, const AffineFunctional& fa,
                                        const AffineFunctional& fb) {
  std::optional<Rational> eps;
  for (const auto& pt : p.points()) {
    const Rational a = fa.value(pt.coords), b = fb.value(pt.coords);
    if (sgn(a) == 0 || sgn(b) == 0) continue;
    const Rational ratio = abs(a) / abs(b);
    if (!eps || ratio < *eps) eps = ratio;
  }
  if (!eps) {
    const SignVector target = compose(induced_sign_vector(p, fa), negate(induced_sign_vector(p, fb)));
    auto f = feasible_sign_vector(p, target);
    if (!f) throw std::logic_error("X o -Y is not realizable");
    return {std::move(*f), true};
  }
  const Rational t = *eps / 2;
  AffineFunctional c{fa.a, fa.alpha - t * fb.alpha};
  for (std::size_t k = 0; k < c.a.size(); ++k) c.a[k] -= t * fb.a.at(k);
  return {std::move(c), false};
}

EliminationWitness example3_se_witness(const PointConfiguration& p, const AffineFunctional& fa,
                                       const AffineFunctional& fb, std::size_t e) {
  if (e >= p.size()) throw Error("element out of range");
  const SignVector x = induced_sign_vector(p, fa), y = induced_sign_vector(p, fb);
  if (!separator(x, y).contains(e)) throw Error("element is not in the separator S(X,Y)");
  const bool swapped = sgn(fa.value(p[e].coords)) > 0;
  const AffineFunctional& f = swapped ? fb : fa;
  const AffineFunctional& g = swapped ? fa : fb;
  const Rational fe = f.value(p[e].coords), ge = g.value(p[e].coords);
  AffineFunctional z{RationalVector(p.dim()), ge * f.alpha - fe * g.alpha};
  for (std::size_t k = 0; k < p.dim(); ++k) z.a[k] = ge * f.a.at(k) - fe * g.a.at(k);
  return {induced_sign_vector(p, z), std::move(z), swapped};
}

std::optional<std::pair<ElementSet, ElementSet>> radon_partition(const PointConfiguration& p) {
  const std::size_t m = p.size();
  if (m == 0) return std::nullopt;
  Matrix mat(p.dim() + 1, RationalVector(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < p.dim(); ++k) mat[k][i] = p[i].coords[k];
    mat[p.dim()][i] = 1;
  }
  const auto pivots = rref(mat);
  std::optional<std::size_t> free_col;
  for (std::size_t col = 0, j = 0; col < m; ++col) {
    if (j < pivots.size() && pivots[j] == col) {
      ++j;
      continue;
    }
    free_col = col;
    break;
  }
  if (!free_col) return std::nullopt;
  RationalVector lambda(m, Rational(0));
  lambda[*free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) lambda[pivots[r]] = -mat[r][*free_col];
  int orientation = 0;
  for (const auto& l : lambda)
    if ((orientation = sgn(l)) != 0) break;
  ElementSet pos, rest;
  for (std::size_t i = 0; i < m; ++i) (sgn(lambda[i]) * orientation > 0 ? pos : rest).insert(i);
  return std::make_pair(pos, rest);
}

int affine_span_dimension(const PointConfiguration& p) {
  if (p.size() == 0) return -1;
  Matrix mat;
  for (std::size_t i = 1; i < p.size(); ++i) {
    RationalVector row(p.dim());
    for (std::size_t k = 0; k < p.dim(); ++k) row[k] = p[i].coords[k] - p[0].coords[k];
    mat.push_back(std::move(row));
  }
  return static_cast<int>(rref(mat).size());
}

}  // namespace comsep
