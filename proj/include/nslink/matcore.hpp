// SPDX-License-Identifier: Apache-2.0
//
// Complex matrix core: self-checked full SVD, unitarily invariant norms,
// orthonormal subspace bases, projectors, canonical angles.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace nslink {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Library-wide numeric tolerances (overridable per call where it matters).
inline constexpr double kTolUnitary = 1e-10;
inline constexpr double kTolRecon = 1e-10;
inline constexpr double kAngleClampTol = 1e-8;

// Raised when a numeric routine cannot certify its own result
// (non-convergence, postcondition breach, degenerate basis).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

enum class MatNorm { spectral, frobenius };

// Full decomposition A = U diag(sigma) V^H with unitary U (rows x rows) and
// V (cols x cols); sigma descending, length min(rows, cols).
struct SvdResult {
    CMatrix u;
    RVector sigma;
    CMatrix v;
};

// Orthonormal columns spanning a subspace; dim() == 0 is a valid empty basis.
struct SubspaceBasis {
    CMatrix q;

    Eigen::Index ambient() const { return q.rows(); }
    Eigen::Index dim() const { return q.cols(); }
};

// Principal angles between two subspaces, ascending, in [0, pi/2].
struct CanonicalAngles {
    RVector angles;
};

void ensure_finite(const CMatrix& a, const char* name);

// Full SVD with verified postconditions: unitarity of U and V within
// tol_unitary and reconstruction within tol_recon * max(1, ||A||_F).
// Throws NumericError if the factorization cannot be certified.
SvdResult svd(const CMatrix& a, double tol_unitary = kTolUnitary,
              double tol_recon = kTolRecon);

double spectral_norm(const CMatrix& a);
double frobenius_norm(const CMatrix& a);

// Validates orthonormality (Q^H Q = I within tol) and wraps the columns.
SubspaceBasis make_subspace_basis(const CMatrix& q, double tol = kTolUnitary);

// Orthogonal projector B (B^H B)^{-1} B^H. The general formula is kept even
// though orthonormal B reduces it to B B^H. Throws NumericError when B^H B is
// not positive definite (degenerate basis). Empty basis gives the zero matrix.
CMatrix projector(const SubspaceBasis& basis);

// Canonical angles via singular values of W^H Z, clamped to [0, 1]; a clamp
// of more than kAngleClampTol is a numeric error, never silently absorbed.
// The raw overload assumes (and does not verify) orthonormal columns.
CanonicalAngles canonical_angles(const SubspaceBasis& w, const SubspaceBasis& z);
CanonicalAngles canonical_angles_raw(const CMatrix& w, const CMatrix& z);

// ||sin Theta|| in the requested norm; 0 for an empty angle set.
double sin_theta_norm(const CanonicalAngles& angles, MatNorm norm);

}  // namespace nslink
