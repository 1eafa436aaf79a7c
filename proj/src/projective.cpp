#include "curvkit/projective.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "curvkit/parallel.hpp"

namespace curvkit {

namespace {

constexpr double kEquatorEps = 1e-12;

Geometry source_geometry(ProjectionKind kind) {
    return kind == ProjectionKind::SphereToChart ? Geometry::Spherical : Geometry::Hyperbolic;
}

/// Map an intersection direction (unit Euclidean norm, last coordinate >= 0)
/// into the model of the given geometry.
ModelPoint direction_to_model(Geometry g, const Vec& x) {
    const Eigen::Index last = x.size() - 1;
    switch (g) {
        case Geometry::Euclidean:
            if (x[last] < kEquatorEps) {
                throw DomainError("NoIntersection", "transferred line is parallel to the chart");
            }
            return ModelPoint::chart(x / x[last]);
        case Geometry::Spherical:
            if (x[last] < kEquatorEps) {
                throw DomainError("NoIntersection", "transferred point falls on the equator");
            }
            return ModelPoint::sphere(x / x.norm());
        case Geometry::Hyperbolic: {
            const double m = dot(FormKind::Minkowski, x, x);
            if (m >= -kEquatorEps) {
                throw DomainError("NoIntersection", "transferred line misses the hyperboloid");
            }
            Vec p = x / std::sqrt(-m);
            if (p[last] < 0.0) p = -p;
            return ModelPoint::hyperboloid(std::move(p));
        }
    }
    throw DomainError("UnknownGeometry", "bad geometry tag");
}

std::string quadruple_inputs_json(const CollinearQuadruple& q) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : q.points()) {
        nlohmann::json coords = nlohmann::json::array();
        for (Eigen::Index i = 0; i < p.coords().size(); ++i) coords.push_back(p.coords()[i]);
        pts.push_back(coords);
    }
    return nlohmann::json{{"geometry", geometry_name(q.geometry())}, {"points", pts}}.dump();
}

}  // namespace

ModelPoint project(ProjectionKind kind, const ModelPoint& p) {
    if (p.geometry() != source_geometry(kind)) {
        throw DomainError("ModelMismatch", "point does not belong to the projection's source model");
    }
    const Vec& x = p.coords();
    const double w = x[x.size() - 1];
    if (kind == ProjectionKind::SphereToChart && w < kEquatorEps) {
        throw DomainError("EquatorPoint", "point too close to the equator projects to infinity");
    }
    return ModelPoint::chart(x / w);
}

ModelPoint lift(ProjectionKind kind, const ModelPoint& u) {
    if (u.geometry() != Geometry::Euclidean) {
        throw DomainError("ModelMismatch", "lift expects a chart point");
    }
    const Vec& x = u.coords();
    if (kind == ProjectionKind::SphereToChart) {
        return ModelPoint::sphere(x / x.norm());
    }
    const double m = dot(FormKind::Minkowski, x, x);  // |space|^2 - 1
    if (m > -1e-12) {
        throw DomainError("OutOfDisc", "chart point is not inside the open unit disc");
    }
    return ModelPoint::hyperboloid(x / std::sqrt(-m));
}

CollinearQuadruple project_quadruple(ProjectionKind kind, const CollinearQuadruple& q) {
    return CollinearQuadruple(project(kind, q[0]), project(kind, q[1]),
                              project(kind, q[2]), project(kind, q[3]));
}

CollinearQuadruple pencil_transfer(const ModelPoint& apex,
                                   const CollinearQuadruple& source,
                                   const TwoPlane& target) {
    if (apex.geometry() != source.geometry()) {
        throw DomainError("ModelMismatch", "apex and source quadruple are in different models");
    }
    const Vec& a1 = source[0].coords();
    const Vec& a2 = source[1].coords();
    if (numeric_rank({a1, a2, apex.coords()}) <= 2) {
        throw DomainError("ApexOnLine", "apex lies on the source geodesic");
    }
    if (numeric_rank({a1, a2, apex.coords(), target.u(), target.v()}) > 3) {
        throw DomainError("NonCoplanarConfiguration",
                          "apex, source and target do not share a 3-dimensional subspace");
    }
    std::array<std::optional<ModelPoint>, 4> mapped;
    for (int i = 0; i < 4; ++i) {
        const TwoPlane ray_plane = geodesic_span(apex, source[i]);
        const Vec x = plane_intersect_in_3space(ray_plane, target);
        mapped[static_cast<std::size_t>(i)] = direction_to_model(source.geometry(), x);
    }
    return CollinearQuadruple(*mapped[0], *mapped[1], *mapped[2], *mapped[3]);
}

SweepReport perspectivity_check(const PointMap& map, const QuadrupleSampler& sampler,
                                std::uint64_t count, double tol) {
    SweepReport report;
    report.suite = "perspectivity-check";
    report.tol = tol;
    report.samples.resize(count);
    std::vector<std::optional<FailureRecord>> failures(count);

    parallel_for(count, [&](std::uint64_t i) {
        const CollinearQuadruple source = sampler(i);
        SampleRecord& rec = report.samples[i];
        rec.index = i;
        rec.geometry = geometry_name(source.geometry());
        const double cr_source = cross_ratio(source);
        double residual;
        double cr_image = 0.0;
        std::string note;
        try {
            std::array<std::optional<ModelPoint>, 4> images;
            for (int k = 0; k < 4; ++k) images[static_cast<std::size_t>(k)] = map(source[k]);
            // Images must still be on one geodesic and pairwise distinct;
            // the quadruple constructor is exactly that rank + gap test.
            CollinearQuadruple image_quad(*images[0], *images[1], *images[2], *images[3]);
            cr_image = cross_ratio(image_quad);
            residual = std::abs(cr_image - cr_source) / (1.0 + std::abs(cr_source));
        } catch (const DomainError& e) {
            residual = std::numeric_limits<double>::infinity();
            note = e.name();
        }
        if (!(residual <= tol)) {
            FailureRecord f;
            f.sample_index = i;
            f.geometry = rec.geometry;
            f.inputs = note.empty() ? quadruple_inputs_json(source)
                                    : quadruple_inputs_json(source) + " [" + note + "]";
            f.expected = cr_source;
            f.actual = cr_image;
            f.residual = std::isfinite(residual) ? residual : 9.9e99;
            failures[i] = std::move(f);
            rec.pass = false;
        }
        rec.residual = std::isfinite(residual) ? residual : 9.9e99;
    });

    for (auto& f : failures) {
        if (f) report.failures.push_back(std::move(*f));
    }
    finalize_report(report);
    return report;
}

}  // namespace curvkit
