#include "curvkit/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace curvkit {

namespace {

constexpr double kPi = 3.14159265358979323846;
// Spherical triangles keep every side below this so the whole triangle stays
// inside one open hemisphere.
constexpr double kMaxSphericalSide = kPi / 2 - 1e-6;

void require_finite(const Vec& p) {
    if (!p.allFinite()) throw DomainError("InvalidModelPoint", "coordinates must be finite");
    if (p.size() < 2) throw DomainError("DimensionMismatch", "ambient dimension must be >= 2");
}

void require_same_model(const ModelPoint& p, const ModelPoint& q) {
    if (p.geometry() != q.geometry() || p.coords().size() != q.coords().size()) {
        throw DomainError("ModelMismatch", "points belong to different models");
    }
}

double clamp01(double x) { return std::min(1.0, std::max(-1.0, x)); }

}  // namespace

const char* geometry_name(Geometry g) {
    switch (g) {
        case Geometry::Euclidean: return "euclidean";
        case Geometry::Spherical: return "spherical";
        case Geometry::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

Geometry geometry_from_name(const std::string& name) {
    if (name == "euclidean") return Geometry::Euclidean;
    if (name == "spherical") return Geometry::Spherical;
    if (name == "hyperbolic") return Geometry::Hyperbolic;
    throw DomainError("UnknownGeometry", "no geometry named '" + name + "'");
}

FormKind form_of(Geometry g) {
    return g == Geometry::Hyperbolic ? FormKind::Minkowski : FormKind::Euclidean;
}

ModelPoint ModelPoint::chart(Vec u) {
    require_finite(u);
    const Eigen::Index last = u.size() - 1;
    if (std::abs(u[last] - 1.0) > kModelTol) {
        throw DomainError("InvalidModelPoint", "chart point needs last coordinate 1");
    }
    u[last] = 1.0;
    return ModelPoint(Geometry::Euclidean, std::move(u));
}

ModelPoint ModelPoint::sphere(Vec p) {
    require_finite(p);
    if (std::abs(p.squaredNorm() - 1.0) > kModelTol) {
        throw DomainError("InvalidModelPoint", "sphere point must have unit Euclidean norm");
    }
    if (p[p.size() - 1] <= 0.0) {
        throw DomainError("OutOfHemisphere", "sphere point must lie in the open upper hemisphere");
    }
    return ModelPoint(Geometry::Spherical, std::move(p));
}

ModelPoint ModelPoint::hyperboloid(Vec p) {
    require_finite(p);
    if (std::abs(dot(FormKind::Minkowski, p, p) + 1.0) >
        kModelTol * std::max(1.0, p.squaredNorm())) {
        throw DomainError("InvalidModelPoint", "hyperboloid point must have Minkowski norm -1");
    }
    if (p[p.size() - 1] < 1.0 - kModelTol) {
        throw DomainError("InvalidModelPoint", "hyperboloid point must lie on the upper sheet");
    }
    return ModelPoint(Geometry::Hyperbolic, std::move(p));
}

ModelPoint ModelPoint::make(Geometry g, Vec p) {
    switch (g) {
        case Geometry::Euclidean: return chart(std::move(p));
        case Geometry::Spherical: return sphere(std::move(p));
        case Geometry::Hyperbolic: return hyperboloid(std::move(p));
    }
    throw DomainError("UnknownGeometry", "bad geometry tag");
}

double distance(const ModelPoint& p, const ModelPoint& q) {
    require_same_model(p, q);
    const Vec& a = p.coords();
    const Vec& b = q.coords();
    switch (p.geometry()) {
        case Geometry::Euclidean:
            return (a - b).norm();
        case Geometry::Spherical:
            // Chord form of arccos(a.b): exact for unit vectors and well
            // conditioned at both ends of [0, pi].
            return 2.0 * std::atan2((a - b).norm(), (a + b).norm());
        case Geometry::Hyperbolic: {
            // <a-b, a-b>_M = 2(cosh d - 1) = 4 sinh^2(d/2); the difference
            // form avoids the catastrophic cancellation of arccosh(-<a,b>)
            // for nearby points far from the apex.
            const double s2 = std::max(0.0, dot(FormKind::Minkowski, a - b, a - b));
            return 2.0 * std::asinh(0.5 * std::sqrt(s2));
        }
    }
    throw DomainError("UnknownGeometry", "bad geometry tag");
}

double chart_sin_distance(const ModelPoint& u, const ModelPoint& v) {
    require_same_model(u, v);
    if (u.geometry() != Geometry::Euclidean) {
        throw DomainError("ModelMismatch", "chart_sin_distance expects chart points");
    }
    const double g = std::max(0.0, gram2(FormKind::Euclidean, u.coords(), v.coords()));
    return std::sqrt(g) / (u.coords().norm() * v.coords().norm());
}

double chart_sinh_distance(const ModelPoint& u, const ModelPoint& v) {
    require_same_model(u, v);
    if (u.geometry() != Geometry::Euclidean) {
        throw DomainError("ModelMismatch", "chart_sinh_distance expects chart points");
    }
    const double uu = dot(FormKind::Minkowski, u.coords(), u.coords());
    const double vv = dot(FormKind::Minkowski, v.coords(), v.coords());
    if (uu > -1e-12 || vv > -1e-12) {
        throw DomainError("OutOfDisc", "chart point outside the open unit disc");
    }
    const double uv = dot(FormKind::Minkowski, u.coords(), v.coords());
    const double num = std::max(0.0, uv * uv - uu * vv);
    return std::sqrt(num) / std::sqrt(uu * vv);
}

TwoPlane geodesic_span(const ModelPoint& p, const ModelPoint& q) {
    require_same_model(p, q);
    return TwoPlane(p.coords(), q.coords());  // throws DegeneratePair if rank < 2
}

bool collinear_check(Geometry g, const std::vector<ModelPoint>& points, double tol) {
    std::vector<Vec> vs;
    vs.reserve(points.size());
    for (const auto& pt : points) {
        if (pt.geometry() != g) throw DomainError("ModelMismatch", "mixed geometries in collinear_check");
        vs.push_back(pt.coords());
    }
    return numeric_rank(vs, tol) <= 2;
}

GeodesicRay::GeodesicRay(ModelPoint base, Vec direction)
    : base_(std::move(base)), dir_(std::move(direction)) {
    require_finite(dir_);
    if (dir_.size() != base_.coords().size()) {
        throw DomainError("DimensionMismatch", "ray direction has wrong length");
    }
    const double tol = 1e-10;
    switch (base_.geometry()) {
        case Geometry::Euclidean:
            if (std::abs(dir_[dir_.size() - 1]) > tol) {
                throw DomainError("InvalidRay", "chart tangent must have last coordinate 0");
            }
            if (std::abs(dir_.norm() - 1.0) > tol) {
                throw DomainError("InvalidRay", "direction must be a unit vector");
            }
            break;
        case Geometry::Spherical:
            if (std::abs(dir_.dot(base_.coords())) > tol) {
                throw DomainError("InvalidRay", "direction must be tangent to the sphere");
            }
            if (std::abs(dir_.norm() - 1.0) > tol) {
                throw DomainError("InvalidRay", "direction must be a unit vector");
            }
            break;
        case Geometry::Hyperbolic:
            if (std::abs(dot(FormKind::Minkowski, dir_, base_.coords())) >
                tol * std::max(1.0, base_.coords().norm() * dir_.norm())) {
                throw DomainError("InvalidRay", "direction must be Minkowski-orthogonal to the base");
            }
            if (std::abs(dot(FormKind::Minkowski, dir_, dir_) - 1.0) > tol) {
                throw DomainError("InvalidRay", "direction must be a unit space-like vector");
            }
            break;
    }
}

ModelPoint geodesic_point(const GeodesicRay& ray, double s) {
    const Vec& b = ray.base().coords();
    const Vec& t = ray.direction();
    switch (ray.base().geometry()) {
        case Geometry::Euclidean:
            return ModelPoint::chart(b + s * t);
        case Geometry::Spherical: {
            Vec p = std::cos(s) * b + std::sin(s) * t;
            if (p[p.size() - 1] <= 0.0) {
                throw DomainError("OutOfHemisphere", "geodesic point left the open upper hemisphere");
            }
            return ModelPoint::sphere(std::move(p));
        }
        case Geometry::Hyperbolic:
            return ModelPoint::hyperboloid(std::cosh(s) * b + std::sinh(s) * t);
    }
    throw DomainError("UnknownGeometry", "bad geometry tag");
}

Vec tangent_toward(const ModelPoint& p, const ModelPoint& q) {
    require_same_model(p, q);
    const Vec& a = p.coords();
    const Vec& b = q.coords();
    switch (p.geometry()) {
        case Geometry::Euclidean: {
            Vec w = b - a;
            const double norm = w.norm();
            if (norm < kDistinctTol) throw DomainError("DegeneratePair", "coincident points have no direction");
            return w / norm;
        }
        case Geometry::Spherical: {
            Vec w = b - a.dot(b) * a;
            const double norm = w.norm();
            if (norm < kDistinctTol) throw DomainError("DegeneratePair", "coincident points have no direction");
            return w / norm;
        }
        case Geometry::Hyperbolic: {
            // Project q onto the tangent space at p: w = q + <q,p>_M p,
            // which is space-like for distinct hyperboloid points.
            Vec w = b + dot(FormKind::Minkowski, a, b) * a;
            const double n2 = dot(FormKind::Minkowski, w, w);
            if (n2 < kDistinctTol * kDistinctTol) {
                throw DomainError("DegeneratePair", "coincident points have no direction");
            }
            return w / std::sqrt(n2);
        }
    }
    throw DomainError("UnknownGeometry", "bad geometry tag");
}

Triangle::Triangle(ModelPoint a, ModelPoint b, ModelPoint c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    require_same_model(a_, b_);
    require_same_model(a_, c_);
    const double ab = distance(a_, b_);
    const double bc = distance(b_, c_);
    const double ca = distance(c_, a_);
    if (ab < kDistinctTol || bc < kDistinctTol || ca < kDistinctTol) {
        throw DomainError("DegenerateTriangle", "vertices are not pairwise distinct");
    }
    if (numeric_rank({a_.coords(), b_.coords(), c_.coords()}) < 3) {
        throw DomainError("DegenerateTriangle", "vertices lie on one geodesic");
    }
    if (geometry() == Geometry::Spherical &&
        std::max({ab, bc, ca}) > kMaxSphericalSide) {
        throw DomainError("DegenerateTriangle",
                          "spherical side exceeds the hemisphere cap pi/2 - 1e-6");
    }
}

std::array<double, 3> Triangle::sides() const {
    return {distance(b_, c_), distance(c_, a_), distance(a_, b_)};
}

std::array<double, 3> triangle_angles(const Triangle& t) {
    const FormKind form = form_of(t.geometry());
    auto angle_at = [&](const ModelPoint& v, const ModelPoint& p, const ModelPoint& q) {
        const Vec tp = tangent_toward(v, p);
        const Vec tq = tangent_toward(v, q);
        // Tangent spaces are positive definite under the model's form, so the
        // form dot of unit tangents is a cosine.
        return std::acos(clamp01(dot(form, tp, tq)));
    };
    return {angle_at(t.a(), t.b(), t.c()),
            angle_at(t.b(), t.c(), t.a()),
            angle_at(t.c(), t.a(), t.b())};
}

double sine_rule_residual(const Triangle& t) {
    const auto sides = t.sides();
    const auto angles = triangle_angles(t);
    auto stretch = [&](double x) {
        switch (t.geometry()) {
            case Geometry::Euclidean: return x;
            case Geometry::Spherical: return std::sin(x);
            case Geometry::Hyperbolic: return std::sinh(x);
        }
        return x;
    };
    std::array<double, 3> ratio{};
    for (int i = 0; i < 3; ++i) {
        const double s = std::sin(angles[static_cast<std::size_t>(i)]);
        if (s <= 0.0) throw DomainError("DegenerateTriangle", "flat angle in sine rule");
        ratio[static_cast<std::size_t>(i)] = stretch(sides[static_cast<std::size_t>(i)]) / s;
    }
    return std::max({std::abs(ratio[0] - ratio[1]),
                     std::abs(ratio[1] - ratio[2]),
                     std::abs(ratio[0] - ratio[2])});
}

}  // namespace curvkit
