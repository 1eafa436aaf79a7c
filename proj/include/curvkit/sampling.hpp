#pragma once

#include <array>

#include "curvkit/cross_ratio.hpp"
#include "curvkit/hilbert.hpp"
#include "curvkit/rng.hpp"

namespace curvkit {

/// Random collinear quadruple: a geodesic through a random base point and
/// four sorted arc length parameters with pairwise gaps >= 1e-3, assigned to
/// (A1, ..., A4) in increasing order. Spherical draws keep every point at
/// colatitude <= pi/2 - 0.05; hyperbolic parameters stay within |s| <= 3.
CollinearQuadruple sample_quadruple(Geometry g, int n, SampleRng& rng);

/// Same construction with a caller-provided parameter window and gap floor
/// (used by the identity and degenerate-limit sweeps).
struct QuadrupleDraw {
    GeodesicRay ray;
    std::array<double, 4> params;
    CollinearQuadruple quadruple;
};
QuadrupleDraw sample_quadruple_draw(Geometry g, int n, SampleRng& rng,
                                    double param_halfwidth, double min_gap);

/// Random geodesic ray through a random base point of the model.
GeodesicRay sample_ray(Geometry g, int n, SampleRng& rng);

/// Two points on a common random geodesic with arc length separation in
/// [0.05, 1.2]; both stay in the region where the chart identities are well
/// conditioned.
std::pair<ModelPoint, ModelPoint> sample_identity_pair(Geometry g, int n, SampleRng& rng);

/// Random nondegenerate triangle with all sides in [0.1, 1.5], built from a
/// base vertex, two tangent directions and two side lengths; rejects thin
/// triangles (any angle < 0.15) and, in the spherical case, anything leaving
/// the hemisphere cap.
Triangle sample_triangle(Geometry g, int n, SampleRng& rng);

/// Random point strictly inside the ball (radial fraction <= 0.95).
ModelPoint sample_ball_point(const BallSpec& ball, SampleRng& rng);

/// Two distinct points inside the ball (distance >= 1e-3).
std::pair<ModelPoint, ModelPoint> sample_ball_pair(const BallSpec& ball, SampleRng& rng);

/// A full pencil configuration in a random totally geodesic surface: apex,
/// a source quadruple, and a target geodesic plane crossing all four pencil
/// rays inside the model domain.
struct PencilConfig {
    ModelPoint apex;
    CollinearQuadruple source;
    TwoPlane target;
};
PencilConfig sample_pencil_config(Geometry g, int n, SampleRng& rng);

}  // namespace curvkit
