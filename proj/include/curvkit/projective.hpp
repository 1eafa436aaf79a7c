#pragma once

#include <functional>

#include "curvkit/cross_ratio.hpp"
#include "curvkit/report.hpp"

namespace curvkit {

/// The two central projections from the origin of R^{n+1} onto the chart
/// hyperplane {x_{n+1} = 1}: P_s from the open upper hemisphere, P_h from the
/// upper hyperboloid sheet (image: the open unit disc).
enum class ProjectionKind { SphereToChart, HyperboloidToChart };

/// p / p_{n+1}. Throws EquatorPoint when a spherical point is within 1e-12 of
/// the equator (the ray is parallel to the chart).
ModelPoint project(ProjectionKind kind, const ModelPoint& p);

/// Radial lift of a chart point back onto the model: u/|u|_E for the sphere,
/// u/sqrt(-<u,u>_M) for the hyperboloid. Inverse of project on its domain.
ModelPoint lift(ProjectionKind kind, const ModelPoint& u);

/// Project every point of a quadruple to the chart.
CollinearQuadruple project_quadruple(ProjectionKind kind, const CollinearQuadruple& q);

/// Transfer a collinear quadruple along the pencil of geodesics through apex
/// onto the target geodesic: output point i is the intersection of the
/// geodesic through (apex, source_i) with the target plane, mapped into the
/// model. The source order is preserved.
CollinearQuadruple pencil_transfer(const ModelPoint& apex,
                                   const CollinearQuadruple& source,
                                   const TwoPlane& target);

using PointMap = std::function<ModelPoint(const ModelPoint&)>;
using QuadrupleSampler = std::function<CollinearQuadruple(std::uint64_t)>;

/// Numerically check that `map` is a perspectivity: for `count` sampled
/// collinear quadruples, the images must be collinear (rank test) and the
/// cross ratio must be preserved to |CR(images) - CR(source)| <=
/// tol * (1 + |CR(source)|). Violations (and samples where the images fail to
/// form a valid quadruple) become failure records; samples may be evaluated
/// concurrently.
SweepReport perspectivity_check(const PointMap& map, const QuadrupleSampler& sampler,
                                std::uint64_t count, double tol);

}  // namespace curvkit
