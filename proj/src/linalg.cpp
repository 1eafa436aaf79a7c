#include "curvkit/linalg.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <string>

namespace curvkit {

namespace {

void require_same_size(const Vec& u, const Vec& v) {
    if (u.size() != v.size() || u.size() < 2) {
        throw DomainError("DimensionMismatch",
                          "vectors have sizes " + std::to_string(u.size()) + " and " +
                              std::to_string(v.size()) + " (need equal, >= 2)");
    }
}

}  // namespace

double dot(FormKind form, const Vec& u, const Vec& v) {
    require_same_size(u, v);
    if (form == FormKind::Euclidean) return u.dot(v);
    const Eigen::Index n = u.size() - 1;
    return u.head(n).dot(v.head(n)) - u[n] * v[n];
}

double gram2(FormKind form, const Vec& u, const Vec& v) {
    const double uu = dot(form, u, u);
    const double vv = dot(form, v, v);
    const double uv = dot(form, u, v);
    return uu * vv - uv * uv;
}

int numeric_rank(const std::vector<Vec>& vectors, double tol) {
    if (vectors.empty()) return 0;
    const Eigen::Index dim = vectors.front().size();
    Eigen::MatrixXd m(static_cast<Eigen::Index>(vectors.size()), dim);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (vectors[static_cast<std::size_t>(i)].size() != dim) {
            throw DomainError("DimensionMismatch", "vectors in rank computation differ in length");
        }
        m.row(i) = vectors[static_cast<std::size_t>(i)];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sigma = svd.singularValues();
    if (sigma.size() == 0 || sigma[0] <= 0.0) return 0;
    const double cutoff = tol * sigma[0];
    int rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        if (sigma[i] > cutoff) ++rank;
    }
    return rank;
}

TwoPlane::TwoPlane(Vec u, Vec v) : u_(std::move(u)), v_(std::move(v)) {
    if (u_.size() != v_.size()) {
        throw DomainError("DimensionMismatch", "plane basis vectors differ in length");
    }
    if (numeric_rank({u_, v_}) != 2) {
        throw DomainError("DegeneratePair", "plane basis is numerically dependent");
    }
}

Vec plane_intersect_in_3space(const TwoPlane& p1, const TwoPlane& p2) {
    if (p1.dim() != p2.dim()) {
        throw DomainError("DimensionMismatch", "planes live in different ambient dimensions");
    }
    const int joint = numeric_rank({p1.u(), p1.v(), p2.u(), p2.v()});
    if (joint <= 2) throw DomainError("IdenticalPlanes", "the two spans coincide");
    if (joint >= 4) throw DomainError("NoCommon3Space", "joint span has rank 4");

    // Solve a*u1 + b*v1 = c*u2 + d*v2: the kernel of the column matrix
    // [u1 v1 -u2 -v2] is one-dimensional exactly when the joint rank is 3.
    Eigen::MatrixXd cols(p1.dim(), 4);
    cols.col(0) = p1.u();
    cols.col(1) = p1.v();
    cols.col(2) = -p2.u();
    cols.col(3) = -p2.v();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(cols, Eigen::ComputeFullV);
    const Eigen::Vector4d coeffs = svd.matrixV().col(3);

    Vec direction = coeffs[0] * p1.u() + coeffs[1] * p1.v();
    const double norm = direction.norm();
    if (norm <= 0.0) {
        // Kernel fell entirely on the second plane's side; use it instead.
        direction = coeffs[2] * p2.u() + coeffs[3] * p2.v();
    }
    direction.normalize();

    const Eigen::Index last = direction.size() - 1;
    double lead = direction[last];
    if (std::abs(lead) <= kRankTol) {
        lead = 0.0;
        for (Eigen::Index i = 0; i < direction.size(); ++i) {
            if (std::abs(direction[i]) > kRankTol) {
                lead = direction[i];
                break;
            }
        }
    }
    if (lead < 0.0) direction = -direction;
    return direction;
}

}  // namespace curvkit
