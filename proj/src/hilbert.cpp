#include "curvkit/hilbert.hpp"

#include <cmath>

#include "curvkit/projective.hpp"

namespace curvkit {

namespace {

constexpr double kPi = 3.14159265358979323846;
// Points must keep this much distance from the boundary and from each other.
constexpr double kInteriorMargin = 1e-9;

Vec reference_point(int n) {
    Vec e = Vec::Zero(n + 1);
    e[n] = 1.0;
    return e;
}

/// Chart image of a ball point (identity for Euclidean inputs).
ModelPoint to_chart(const BallSpec& ball, const ModelPoint& p) {
    switch (ball.geometry()) {
        case Geometry::Euclidean: return p;
        case Geometry::Spherical: return project(ProjectionKind::SphereToChart, p);
        case Geometry::Hyperbolic: return project(ProjectionKind::HyperboloidToChart, p);
    }
    throw DomainError("UnknownGeometry", "bad geometry tag");
}

ModelPoint from_chart(const BallSpec& ball, const ModelPoint& u) {
    switch (ball.geometry()) {
        case Geometry::Euclidean: return u;
        case Geometry::Spherical: return lift(ProjectionKind::SphereToChart, u);
        case Geometry::Hyperbolic: return lift(ProjectionKind::HyperboloidToChart, u);
    }
    throw DomainError("UnknownGeometry", "bad geometry tag");
}

void require_inside(const BallSpec& ball, const ModelPoint& p) {
    if (p.geometry() != ball.geometry() || p.n() != ball.n()) {
        throw DomainError("ModelMismatch", "point does not belong to the ball's model");
    }
    if (distance(ball.center(), p) > ball.radius() - kInteriorMargin) {
        throw DomainError("PointOutsideBall", "point is not strictly inside the ball");
    }
}

double stretch(Geometry g, double d) {
    switch (g) {
        case Geometry::Euclidean: return d;
        case Geometry::Spherical: return std::sin(d);
        case Geometry::Hyperbolic: return std::sinh(d);
    }
    return d;
}

}  // namespace

BallSpec::BallSpec(Geometry geometry, double radius, int n)
    : geometry_(geometry),
      radius_(radius),
      n_(n),
      chart_radius_(0.0),
      center_(ModelPoint::make(geometry, reference_point(n))) {
    if (n < 1) throw DomainError("DimensionMismatch", "ball dimension must be >= 1");
    if (!(radius > 0.0)) throw DomainError("RadiusOutOfRange", "ball radius must be positive");
    if (geometry == Geometry::Spherical && radius >= kPi / 2) {
        throw DomainError("RadiusOutOfRange", "spherical ball radius must be < pi/2");
    }
    switch (geometry) {
        case Geometry::Euclidean: chart_radius_ = radius; break;
        case Geometry::Spherical: chart_radius_ = std::tan(radius); break;
        case Geometry::Hyperbolic: chart_radius_ = std::tanh(radius); break;
    }
}

BoundaryHit boundary_hit(const BallSpec& ball, const ModelPoint& x, const ModelPoint& y) {
    require_inside(ball, x);
    require_inside(ball, y);
    if (distance(x, y) < kInteriorMargin) {
        throw DomainError("CoincidentPoints", "the ray through two coincident points is undefined");
    }

    // The projected ball is the Euclidean chart ball of radius R and the
    // geodesic ray projects to the chart ray, so the boundary hit is the
    // positive root of a chord quadratic.
    const Vec u = to_chart(ball, x).space_part();
    const Vec v = to_chart(ball, y).space_part();
    const double R = ball.chart_radius();
    Vec w = v - u;
    w.normalize();
    const double q = u.dot(w);
    const double disc = q * q + R * R - u.squaredNorm();
    const double root = std::sqrt(std::max(0.0, disc));
    // Stable positive root of t^2 + 2qt + (|u|^2 - R^2) = 0.
    const double t = q > 0.0 ? (R * R - u.squaredNorm()) / (q + root) : (root - q);

    Vec chart_hit(u.size() + 1);
    chart_hit.head(u.size()) = u + t * w;
    chart_hit[u.size()] = 1.0;
    const ModelPoint b = from_chart(ball, ModelPoint::chart(std::move(chart_hit)));
    return BoundaryHit{b, distance(x, b)};
}

double hilbert_distance(const BallSpec& ball, const ModelPoint& x, const ModelPoint& y) {
    require_inside(ball, x);
    require_inside(ball, y);
    if (x.same_coords(y)) return 0.0;

    const ModelPoint bxy = boundary_hit(ball, x, y).point;
    const ModelPoint byx = boundary_hit(ball, y, x).point;
    const Geometry g = ball.geometry();
    const double ratio = (stretch(g, distance(x, bxy)) / stretch(g, distance(y, bxy))) *
                         (stretch(g, distance(y, byx)) / stretch(g, distance(x, byx)));
    return std::log(ratio);
}

ModelPoint bk_isometry(const BallSpec& ball, const ModelPoint& x) {
    if (ball.geometry() == Geometry::Euclidean) {
        throw DomainError("ModelMismatch",
                          "bk_isometry is defined for spherical and hyperbolic balls");
    }
    require_inside(ball, x);
    const Vec chart = to_chart(ball, x).space_part();
    Vec disc_point(chart.size() + 1);
    disc_point.head(chart.size()) = chart / ball.chart_radius();
    disc_point[chart.size()] = 1.0;
    return lift(ProjectionKind::HyperboloidToChart, ModelPoint::chart(std::move(disc_point)));
}

}  // namespace curvkit
