#pragma once

#include <Eigen/Dense>

#include <vector>

#include "curvkit/error.hpp"

namespace curvkit {

/// Coordinate vector in the ambient space R^{n+1}. All model points of all
/// three geometries are carried as such vectors.
using Vec = Eigen::VectorXd;

/// The two bilinear forms on R^{n+1}. Minkowski has signature (n, 1) with the
/// minus sign on the last coordinate.
enum class FormKind { Euclidean, Minkowski };

/// Relative singular-value cutoff used for all rank decisions.
inline constexpr double kRankTol = 1e-9;

/// <u,v> under the chosen form. Throws DimensionMismatch if sizes differ.
double dot(FormKind form, const Vec& u, const Vec& v);

/// <u,u><v,v> - <u,v>^2. Euclidean: the squared parallelogram area spanned by
/// u and v. Minkowski: the negative of that square for a time-like pair. The
/// sign interpretation is the caller's concern.
double gram2(FormKind form, const Vec& u, const Vec& v);

/// Number of singular values of the stacked matrix above tol times the
/// largest one. Empty input has rank 0.
int numeric_rank(const std::vector<Vec>& vectors, double tol = kRankTol);

/// A two-dimensional linear subspace through the origin, i.e. a geodesic of
/// any of the three geometries under the projective correspondence.
class TwoPlane {
public:
    /// Throws DegeneratePair unless {u, v} has numeric rank 2.
    TwoPlane(Vec u, Vec v);

    const Vec& u() const noexcept { return u_; }
    const Vec& v() const noexcept { return v_; }
    Eigen::Index dim() const noexcept { return u_.size(); }

private:
    Vec u_;
    Vec v_;
};

/// Unit direction spanning p1 ∩ p2 for two distinct 2-planes inside a common
/// 3-dimensional subspace. Sign convention: last coordinate >= 0, ties broken
/// by the first nonzero coordinate being positive.
///
/// Throws IdenticalPlanes when the spans agree within tolerance and
/// NoCommon3Space when the joint span has rank 4.
Vec plane_intersect_in_3space(const TwoPlane& p1, const TwoPlane& p2);

}  // namespace curvkit
