#pragma once

#include "curvkit/model.hpp"

namespace curvkit {

/// A geodesic ball of radius rho centered at the reference point
/// (0, ..., 0, 1) of its model (chart origin / north pole / hyperboloid
/// apex). Spherical radii must satisfy 0 < rho < pi/2 strictly; at pi/2 the
/// projected ball is all of R^n and the construction degenerates.
class BallSpec {
public:
    BallSpec(Geometry geometry, double radius, int n);

    Geometry geometry() const noexcept { return geometry_; }
    double radius() const noexcept { return radius_; }
    int n() const noexcept { return n_; }
    const ModelPoint& center() const noexcept { return center_; }
    /// Radius of the ball's image chart ball: rho / tan(rho) / tanh(rho).
    double chart_radius() const noexcept { return chart_radius_; }

private:
    Geometry geometry_;
    double radius_;
    int n_;
    double chart_radius_;
    ModelPoint center_;
};

/// Where the geodesic ray from x through y meets the ball boundary.
struct BoundaryHit {
    ModelPoint point;      // on the boundary sphere: distance(center, point) = rho
    double ray_parameter;  // arc length from x, > 0
};

/// Unique boundary intersection of the ray R(x, y). Solved as the chord
/// quadratic in the projected chart ball and lifted back; the Euclidean case
/// is the chart case itself.
BoundaryHit boundary_hit(const BallSpec& ball, const ModelPoint& x, const ModelPoint& y);

/// The Hilbert distance on the ball: 0 for coincident points, else
///
///   log [ L d(x, b(x,y)) / L d(y, b(x,y)) * L d(y, b(y,x)) / L d(x, b(y,x)) ]
///
/// with L = id / sin / sinh matching the ball's geometry and b the boundary
/// hits of the ray through x and y. Symmetric and positive for x != y.
double hilbert_distance(const BallSpec& ball, const ModelPoint& x, const ModelPoint& y);

/// The generalized Beltrami-Klein isometry of a spherical or hyperbolic ball
/// onto the hyperboloid model: project to the chart, shrink the chart ball to
/// the open unit disc (divide by tan rho or tanh rho), lift to the
/// hyperboloid. Satisfies hilbert_distance(ball, x, y) =
/// 2 * distance(bk_isometry(x), bk_isometry(y)).
ModelPoint bk_isometry(const BallSpec& ball, const ModelPoint& x);

}  // namespace curvkit
