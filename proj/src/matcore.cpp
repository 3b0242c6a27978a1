// SPDX-License-Identifier: Apache-2.0

#include "nslink/matcore.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace nslink {

void ensure_finite(const CMatrix& a, const char* name) {
    if (!a.allFinite()) {
        throw std::invalid_argument(std::string(name) + ": non-finite entries");
    }
}

SvdResult svd(const CMatrix& a, double tol_unitary, double tol_recon) {
    if (a.rows() < 1 || a.cols() < 1) {
        throw std::invalid_argument("svd: matrix must be at least 1x1");
    }
    ensure_finite(a, "svd input");

    Eigen::JacobiSVD<CMatrix> jsvd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (jsvd.info() != Eigen::Success) {
        throw NumericError("svd: Jacobi iteration did not converge");
    }

    SvdResult r{jsvd.matrixU(), jsvd.singularValues(), jsvd.matrixV()};

    const auto rows = a.rows();
    const auto cols = a.cols();
    const auto k = std::min(rows, cols);

    const double uerr =
        (r.u.adjoint() * r.u - CMatrix::Identity(rows, rows)).norm();
    const double verr =
        (r.v.adjoint() * r.v - CMatrix::Identity(cols, cols)).norm();
    if (uerr > tol_unitary * std::sqrt(double(rows)) ||
        verr > tol_unitary * std::sqrt(double(cols))) {
        throw NumericError("svd: factors failed unitarity check");
    }

    const double rerr = (r.u.leftCols(k) * r.sigma.asDiagonal() *
                             r.v.leftCols(k).adjoint() -
                         a)
                            .norm();
    if (rerr > tol_recon * std::max(1.0, a.norm())) {
        throw NumericError("svd: reconstruction check failed");
    }

    for (Eigen::Index i = 0; i < k; ++i) {
        if (r.sigma(i) < 0.0 || (i > 0 && r.sigma(i) > r.sigma(i - 1))) {
            throw NumericError("svd: singular values not sorted nonnegative");
        }
    }
    return r;
}

double spectral_norm(const CMatrix& a) {
    ensure_finite(a, "spectral_norm input");
    if (a.size() == 0) return 0.0;
    Eigen::JacobiSVD<CMatrix> jsvd(a);
    return jsvd.singularValues()(0);
}

double frobenius_norm(const CMatrix& a) {
    ensure_finite(a, "frobenius_norm input");
    return a.norm();
}

SubspaceBasis make_subspace_basis(const CMatrix& q, double tol) {
    ensure_finite(q, "subspace basis");
    if (q.cols() > 0) {
        const double err =
            (q.adjoint() * q - CMatrix::Identity(q.cols(), q.cols())).norm();
        if (err > tol * std::sqrt(double(q.cols()))) {
            throw std::invalid_argument("make_subspace_basis: columns not orthonormal");
        }
    }
    return SubspaceBasis{q};
}

CMatrix projector(const SubspaceBasis& basis) {
    const auto n = basis.ambient();
    if (basis.dim() == 0) return CMatrix::Zero(n, n);

    const CMatrix gram = basis.q.adjoint() * basis.q;
    Eigen::LLT<CMatrix> llt(gram);
    if (llt.info() != Eigen::Success) {
        throw NumericError("projector: degenerate basis (B^H B not positive definite)");
    }
    return basis.q * llt.solve(basis.q.adjoint());
}

CanonicalAngles canonical_angles_raw(const CMatrix& w, const CMatrix& z) {
    if (w.rows() != z.rows()) {
        throw std::invalid_argument("canonical_angles: ambient dimensions differ");
    }
    if (w.cols() == 0 || z.cols() == 0) return CanonicalAngles{RVector(0)};

    Eigen::JacobiSVD<CMatrix> jsvd(w.adjoint() * z);
    RVector c = jsvd.singularValues();
    RVector angles(c.size());
    for (Eigen::Index i = 0; i < c.size(); ++i) {
        if (c(i) > 1.0 + kAngleClampTol) {
            throw NumericError("canonical_angles: cosine exceeds 1 beyond clamp tolerance");
        }
        angles(i) = std::acos(std::min(c(i), 1.0));
    }
    // Cosines descend, so acos already gives ascending angles.
    return CanonicalAngles{angles};
}

CanonicalAngles canonical_angles(const SubspaceBasis& w, const SubspaceBasis& z) {
    return canonical_angles_raw(w.q, z.q);
}

double sin_theta_norm(const CanonicalAngles& angles, MatNorm norm) {
    const auto& a = angles.angles;
    if (a.size() == 0) return 0.0;
    if (norm == MatNorm::spectral) {
        return std::sin(a(a.size() - 1));  // largest angle is last
    }
    double s = 0.0;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const double si = std::sin(a(i));
        s += si * si;
    }
    return std::sqrt(s);
}

}  // namespace nslink
