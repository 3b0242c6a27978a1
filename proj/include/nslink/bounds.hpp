// SPDX-License-Identifier: Apache-2.0
//
// Singular value and singular subspace perturbation bounds, plus the link
// budget formulas that translate subspace misalignment into BER/capacity.
//
// Everything here is verified empirically by the certification harness; the
// operations compute and report bounds even when gap conditions fail, with an
// explicit flag, and never silently clamp.

#pragma once

#include "nslink/channel.hpp"
#include "nslink/matcore.hpp"
#include "nslink/random.hpp"

#include <vector>

namespace nslink {

// Spectra of H and G = H + T with the Weyl (spectral) and Mirsky (Frobenius)
// bounds on the singular value shifts.
struct SingularShift {
    RVector sigma;        // of H, descending
    RVector sigma_tilde;  // of H + T, descending
    double weyl_bound = 0.0;    // ||T||_2, bounds max_i |shift_i|
    double mirsky_bound = 0.0;  // ||T||_F, bounds sqrt(sum shift_i^2)
    double max_shift = 0.0;
    double shift_l2 = 0.0;
    bool weyl_satisfied = false;
    bool mirsky_satisfied = false;
};

SingularShift singular_shift(const CMatrix& h, const CMatrix& t);

// Bounds on the gamma/eta decomposition of a perturbed singular value,
// sigma_tilde_i^2 = (sigma_i + gamma_i)^2 + eta_i^2, with P the projector
// onto the column space of H:  |gamma_i| <= ||P T||_2  and
// sigma_min(P_perp T) <= eta_i <= ||P_perp T||_2.
struct EtaGammaBounds {
    double gamma_abs_bound = 0.0;
    double eta_lo = 0.0;
    double eta_hi = 0.0;
};

EtaGammaBounds eta_gamma_decomposition(const CMatrix& h, const CMatrix& t,
                                       Eigen::Index index);

// Mean smallest perturbed singular value of rank-m matrices (width m+1,
// nonzero singular values pinned at 10) under Gaussian perturbations of
// per-part std rho, for each receive dimension in nr_list. The zero singular
// value grows like rho * sqrt(2 (N_R - m)).
struct GrowthPoint {
    int n_r = 0;
    double mean_sigma_min = 0.0;
};

std::vector<GrowthPoint> sqrt_nr_growth_experiment(int m,
                                                   const std::vector<int>& nr_list,
                                                   double rho, int trials,
                                                   RandomStream& rng);

// Least-squares slope of log(mean) vs log(n_r); points with mean <= 0 are
// rejected (invalid for a log fit).
double growth_log_slope(const std::vector<GrowthPoint>& points);

// Wedin residual bound on the leading-r singular subspaces of H vs G.
struct WedinInput {
    CMatrix h;
    CMatrix g;
    Eigen::Index r = 1;
};

// Shared result shape for the two sin-theta theorems. epsilon is the residual
// magnitude entering the bound (combined Frobenius residual for Wedin, max of
// the two residual norms for the extended theorem); bound is epsilon/delta
// times the theorem constant; measured_sin_theta is the actual subspace
// distance. When the gap fails, delta <= 0 and bound is +inf, flagged.
struct SinThetaBoundResult {
    double epsilon = 0.0;
    double delta = 0.0;
    double bound = 0.0;
    double measured_sin_theta = 0.0;
    bool gap_satisfied = false;
};

SinThetaBoundResult wedin_bound(const WedinInput& in);

// Extended sin-theta theorem for the trailing (null-side) groups: X0/Y0 are
// the trailing right/left singular vectors of G beyond index r (including
// exact null directions), D0 = Y0^H G X0, residuals R01 = H X0 - Y0 D0 and
// R02 = H^H Y0 - X0 D0^H. delta separates the leading spectrum of H from the
// trailing spectrum of G; the theorem constant is sqrt(2) for the spectral
// and Frobenius (Euclidean) norms used here.
SinThetaBoundResult extended_sin_theta_bound(const CMatrix& h, const CMatrix& g,
                                             Eigen::Index r, MatNorm norm);

inline constexpr double kSinThetaConstant = 1.4142135623730951;  // sqrt(2)

// Abstract link budget; interference terms are scaled by
// e_s * distance^(-attenuation).
struct LinkBudget {
    double e_p = 4.0;
    double e_s = 1.0;
    double n_0 = 1.0;
    PathLossParams path;
};

// Gaussian tail Q(x) = 0.5 erfc(x / sqrt(2)).
double q_function(double x);

// Worst-case capacity degradation from Weyl: ||T||_2.
double capacity_degradation_weyl_bound(const CMatrix& t);

// BER upper bound under misalignment eps/delta with theorem constant k:
// Q( sqrt( e_p / (n_0 + e_s * d^-att * (eps/delta) * k) ) ).
// Requires delta > 0 (gap violation otherwise), eps >= 0, k >= 1.
double ber_upper_bound(const LinkBudget& budget, double epsilon, double delta,
                       double k = kSinThetaConstant);

// Capacity figures for a measured misalignment plus the residual-based
// lower/upper bounds; degradation_upper == c_clean - c_tilde_lower.
struct CapacityBounds {
    double c_clean = 0.0;        // log2(e_p / n_0)
    double c_tilde = 0.0;        // log2(e_p / (n_0 + e_s g sin_theta))
    double c_tilde_lower = 0.0;  // log2(e_p / (n_0 + e_s g (eps/delta) k))
    double degradation_upper = 0.0;
};

CapacityBounds capacity_bounds(const LinkBudget& budget, double sin_theta,
                               double epsilon, double delta,
                               double k = kSinThetaConstant);

}  // namespace nslink
