#pragma once

#include <optional>
#include <utility>

#include "comsep/linear_feasibility.hpp"
#include "comsep/sign_system.hpp"

namespace comsep {

enum class Label { v, w };

struct LabeledPoint {
  std::string id;
  RationalVector coords;
  std::optional<Label> label;
};

/// Labeled points with exact coordinates in Q^dim.
class PointConfiguration {
 public:
  PointConfiguration(std::size_t dim, std::vector<LabeledPoint> points);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<LabeledPoint>& points() const { return points_; }
  const LabeledPoint& operator[](std::size_t i) const { return points_.at(i); }
  /// Ground set of point ids, in point order.
  const GroundPtr& ground() const { return ground_; }

  ElementSet labeled(Label l) const;
  /// The points in `keep`, order preserved.
  PointConfiguration subconfiguration(ElementSet keep) const;

 private:
  std::size_t dim_;
  std::vector<LabeledPoint> points_;
  GroundPtr ground_;
};

/// Induces the sign vector v -> sign(a.v - alpha).
struct AffineFunctional {
  RationalVector a;
  Rational alpha;

  Rational value(const RationalVector& v) const { return dot(a, v) - alpha; }
};

SignVector induced_sign_vector(const PointConfiguration& p, const AffineFunctional& f);

/// Finds (a, alpha) with sign(a.v_i - alpha) = X_i for every point.
///
/// The value a.v - alpha is linear in (a, alpha), so any strict solution
/// scales by a positive factor to one with margin at least 1. X_i = + is
/// therefore posed as a.v_i - alpha >= 1, X_i = - as alpha - a.v_i >= 1 and
/// X_i = 0 as a.v_i - alpha = 0, and the system stays non-strict.
std::optional<AffineFunctional> feasible_sign_vector(const PointConfiguration& p, const SignVector& x);

/// Same with alpha fixed to 0 (linear functionals only).
std::optional<AffineFunctional> feasible_linear_sign_vector(const PointConfiguration& p, const SignVector& x);

inline constexpr std::size_t max_enumeration_points = 12;

/// Every sign vector induced by an affine functional. Throws Error beyond
/// max_enumeration_points.
SignSystem affine_com(const PointConfiguration& p);
/// Every sign vector induced by a linear functional (alpha = 0).
SignSystem linear_om(const PointConfiguration& p);

/// a.v - alpha < 0 on V and > 0 on W; other points unconstrained.
std::optional<AffineFunctional> separating_functional(const PointConfiguration& p, ElementSet v, ElementSet w);
/// Uses the configuration's labels.
std::optional<AffineFunctional> separating_functional(const PointConfiguration& p);

/// First subset (size, then point order) of at most `max_size` points whose
/// labeled parts admit no strict separator.
std::optional<ElementSet> failing_subset(const PointConfiguration& p, ElementSet v, ElementSet w,
                                         std::size_t max_size);

struct FaceSymmetryWitness {
  AffineFunctional functional;
  /// Set when no point had both values nonzero, so the scaling ratio was
  /// undefined and the functional came from the LP instead.
  bool fallback = false;
};

/// (a, alpha) - (eps/2)(b, beta) with eps the least ratio |a.v - alpha| /
/// |b.v - beta| over points where both are nonzero; induces X o -Y.
FaceSymmetryWitness example3_fs_witness(const PointConfiguration& p, const AffineFunctional& fa,
                                        const AffineFunctional& fb);

struct EliminationWitness {
  SignVector z;
  AffineFunctional functional;
  /// Set when the pair was swapped so the first functional is negative at e.
  bool swapped = false;
};

/// Z_i = sign(B_e A_i - A_e B_i) where A, B are the two functionals' values
/// and A_e < 0 < B_e. Requires e in S(X, Y).
EliminationWitness example3_se_witness(const PointConfiguration& p, const AffineFunctional& fa,
                                       const AffineFunctional& fb, std::size_t e);

/// Splits the points by the sign of a nonzero affine dependence (positive
/// part first, normalized so the first nonzero coefficient is positive).
/// Absent iff the points are affinely independent.
std::optional<std::pair<ElementSet, ElementSet>> radon_partition(const PointConfiguration& p);

/// Dimension of the affine hull; -1 for no points.
int affine_span_dimension(const PointConfiguration& p);

}  // namespace comsep
