#include "curvkit/cross_ratio.hpp"

#include <cmath>
#include <string>

namespace curvkit {

CollinearQuadruple::CollinearQuadruple(ModelPoint a1, ModelPoint a2, ModelPoint a3, ModelPoint a4)
    : points_{std::move(a1), std::move(a2), std::move(a3), std::move(a4)} {
    for (int i = 1; i < 4; ++i) {
        if (points_[static_cast<std::size_t>(i)].geometry() != points_[0].geometry() ||
            points_[static_cast<std::size_t>(i)].coords().size() != points_[0].coords().size()) {
            throw DomainError("ModelMismatch", "quadruple mixes models");
        }
    }
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (distance(points_[static_cast<std::size_t>(i)], points_[static_cast<std::size_t>(j)]) < kDistinctTol) {
                throw DomainError("NotDistinct", "points " + std::to_string(i + 1) + " and " +
                                                     std::to_string(j + 1) + " coincide");
            }
        }
    }
    if (!collinear_check(points_[0].geometry(),
                         {points_[0], points_[1], points_[2], points_[3]})) {
        throw DomainError("NotCollinear", "quadruple does not lie on one geodesic");
    }
}

namespace {

double stretch(Geometry g, double d) {
    switch (g) {
        case Geometry::Euclidean: return d;
        case Geometry::Spherical: return std::sin(d);
        case Geometry::Hyperbolic: return std::sinh(d);
    }
    return d;
}

}  // namespace

double cross_ratio(const CollinearQuadruple& q) {
    const Geometry g = q.geometry();
    const double d24 = stretch(g, distance(q[1], q[3]));
    const double d34 = stretch(g, distance(q[2], q[3]));
    const double d31 = stretch(g, distance(q[2], q[0]));
    const double d21 = stretch(g, distance(q[1], q[0]));
    const double value = (d24 / d34) * (d31 / d21);
    if (!std::isfinite(value) || value <= 0.0) {
        throw DomainError("NotDistinct", "cross ratio is not a positive finite number");
    }
    return value;
}

double cross_ratio_of_parameters(const std::array<double, 4>& t) {
    const double d24 = std::abs(t[1] - t[3]);
    const double d34 = std::abs(t[2] - t[3]);
    const double d31 = std::abs(t[2] - t[0]);
    const double d21 = std::abs(t[1] - t[0]);
    return (d24 / d34) * (d31 / d21);
}

}  // namespace curvkit
