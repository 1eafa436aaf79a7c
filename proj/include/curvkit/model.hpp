#pragma once

#include <array>
#include <vector>

#include "curvkit/linalg.hpp"

namespace curvkit {

enum class Geometry { Euclidean, Spherical, Hyperbolic };

const char* geometry_name(Geometry g);
Geometry geometry_from_name(const std::string& name);  // throws UnknownGeometry
FormKind form_of(Geometry g);

/// Acceptance tolerance for the defining quadric of a model point.
inline constexpr double kModelTol = 1e-10;
/// Two points closer than this are treated as indistinct.
inline constexpr double kDistinctTol = 1e-9;

/// A point of one of the three model spaces, carried in ambient R^{n+1}:
///   Euclidean  — chart point on {x_{n+1} = 1}, identified with R^n;
///   Spherical  — unit vector with x_{n+1} > 0 (open upper hemisphere U^n);
///   Hyperbolic — upper-sheet hyperboloid vector, <p,p>_M = -1, x_{n+1} >= 1.
class ModelPoint {
public:
    static ModelPoint chart(Vec u);
    static ModelPoint sphere(Vec p);
    static ModelPoint hyperboloid(Vec p);
    /// Dispatch on the geometry tag; curved inputs must satisfy the quadric.
    static ModelPoint make(Geometry g, Vec p);

    Geometry geometry() const noexcept { return geometry_; }
    const Vec& coords() const noexcept { return p_; }
    /// Intrinsic dimension n (ambient dimension minus one).
    int n() const noexcept { return static_cast<int>(p_.size()) - 1; }
    /// First n coordinates; for chart points these are the R^n coordinates.
    Vec space_part() const { return p_.head(p_.size() - 1); }

    bool same_coords(const ModelPoint& other) const {
        return geometry_ == other.geometry_ && p_ == other.p_;
    }

private:
    ModelPoint(Geometry g, Vec p) : geometry_(g), p_(std::move(p)) {}

    Geometry geometry_;
    Vec p_;
};

/// Geodesic distance between two points of the same model.
///   Euclidean:  |u - v|
///   Spherical:  arc length on S^n, via the chord (2 atan2 form)
///   Hyperbolic: arccosh(-<p,q>_M), evaluated in difference form
double distance(const ModelPoint& p, const ModelPoint& q);

/// sin of the spherical distance between the radial lifts of two chart
/// points, computed on the chart as sqrt(gram2_E(u,v)) / (|u| |v|).
double chart_sin_distance(const ModelPoint& u, const ModelPoint& v);

/// sinh of the hyperbolic distance between the Minkowski lifts of two chart
/// points inside the open unit disc:
/// sqrt(<u,v>_M^2 - <u,u>_M <v,v>_M) / sqrt(<u,u>_M <v,v>_M).
double chart_sinh_distance(const ModelPoint& u, const ModelPoint& v);

/// The 2-plane through the origin containing both position vectors — the
/// geodesic through p and q in the projective correspondence.
TwoPlane geodesic_span(const ModelPoint& p, const ModelPoint& q);

/// True iff the position vectors span a subspace of rank <= 2.
bool collinear_check(Geometry g, const std::vector<ModelPoint>& points, double tol = kRankTol);

/// Unit-speed geodesic ray: base point plus a unit tangent at the base.
/// Tangency and normalization are with respect to the model's form.
class GeodesicRay {
public:
    GeodesicRay(ModelPoint base, Vec direction);

    const ModelPoint& base() const noexcept { return base_; }
    const Vec& direction() const noexcept { return dir_; }

private:
    ModelPoint base_;
    Vec dir_;
};

/// Point at arc length s along the ray.
///   Euclidean:  base + s dir
///   Spherical:  cos(s) base + sin(s) dir  (OutOfHemisphere if it leaves U^n)
///   Hyperbolic: cosh(s) base + sinh(s) dir
ModelPoint geodesic_point(const GeodesicRay& ray, double s);

/// Unit tangent at p pointing toward q along the geodesic through them.
Vec tangent_toward(const ModelPoint& p, const ModelPoint& q);

/// Geodesic triangle. Vertices are pairwise distinct and not on one geodesic;
/// spherical side lengths are capped below pi/2 so the triangle sits well
/// inside one hemisphere.
class Triangle {
public:
    Triangle(ModelPoint a, ModelPoint b, ModelPoint c);

    Geometry geometry() const noexcept { return a_.geometry(); }
    const ModelPoint& a() const noexcept { return a_; }
    const ModelPoint& b() const noexcept { return b_; }
    const ModelPoint& c() const noexcept { return c_; }

    /// Side lengths opposite to vertices A, B, C.
    std::array<double, 3> sides() const;

private:
    ModelPoint a_, b_, c_;
};

/// Interior angles at A, B, C, each in (0, pi), via tangent vectors.
std::array<double, 3> triangle_angles(const Triangle& t);

/// Max pairwise difference of the three Sine Rule ratios L(side)/sin(angle),
/// with L = id / sin / sinh for Euclidean / spherical / hyperbolic. Vanishes
/// for exact triangles.
double sine_rule_residual(const Triangle& t);

}  // namespace curvkit
