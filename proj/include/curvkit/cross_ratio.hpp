#pragma once

#include <array>

#include "curvkit/model.hpp"

namespace curvkit {

/// Four ordered, pairwise distinct points on one geodesic of a single model.
/// Construction enforces distinctness (pairwise distance >= 1e-9), the rank-2
/// collinearity test at 1e-9, and — through the point type itself — the open
/// upper hemisphere restriction in the spherical case.
class CollinearQuadruple {
public:
    CollinearQuadruple(ModelPoint a1, ModelPoint a2, ModelPoint a3, ModelPoint a4);

    Geometry geometry() const noexcept { return points_[0].geometry(); }
    const ModelPoint& operator[](int i) const { return points_[static_cast<std::size_t>(i)]; }
    const std::array<ModelPoint, 4>& points() const noexcept { return points_; }

private:
    std::array<ModelPoint, 4> points_;
};

/// The bracket [A2, A3, A4, A1] of the ordered quadruple (A1, A2, A3, A4):
///
///     L(A2A4)   L(A3A1)
///     ------- * -------      L = id | sin | sinh per geometry,
///     L(A3A4)   L(A2A1)
///
/// with every A_iA_j a fresh geodesic distance (no chart shortcut). Positive
/// and finite for any valid quadruple.
double cross_ratio(const CollinearQuadruple& q);

/// Same bracket applied to four real line parameters (the Euclidean cross
/// ratio of arc length positions along any geodesic).
double cross_ratio_of_parameters(const std::array<double, 4>& t);

}  // namespace curvkit
