// SPDX-License-Identifier: Apache-2.0

#include "nslink/bounds.hpp"

#include <cmath>
#include <limits>

namespace nslink {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_budget(const LinkBudget& b) {
    if (b.e_p <= 0.0 || !std::isfinite(b.e_p)) {
        throw std::invalid_argument("link budget: e_p must be finite and > 0");
    }
    if (b.e_s < 0.0 || !std::isfinite(b.e_s)) {
        throw std::invalid_argument("link budget: e_s must be finite and >= 0");
    }
    if (b.n_0 <= 0.0 || !std::isfinite(b.n_0)) {
        throw std::invalid_argument("link budget: n_0 must be finite and > 0");
    }
    path_gain(b.path);  // validates distance/attenuation
}
}  // namespace

SingularShift singular_shift(const CMatrix& h, const CMatrix& t) {
    if (h.rows() != t.rows() || h.cols() != t.cols()) {
        throw std::invalid_argument("singular_shift: dimension mismatch");
    }
    SingularShift r;
    r.sigma = svd(h).sigma;
    r.sigma_tilde = svd(h + t).sigma;
    r.weyl_bound = spectral_norm(t);
    r.mirsky_bound = frobenius_norm(t);
    const RVector d = r.sigma_tilde - r.sigma;
    r.max_shift = d.cwiseAbs().maxCoeff();
    r.shift_l2 = d.norm();
    r.weyl_satisfied = r.max_shift <= r.weyl_bound + 1e-10;
    r.mirsky_satisfied = r.shift_l2 <= r.mirsky_bound + 1e-10;
    return r;
}

EtaGammaBounds eta_gamma_decomposition(const CMatrix& h, const CMatrix& t,
                                       Eigen::Index index) {
    if (h.rows() != t.rows() || h.cols() != t.cols()) {
        throw std::invalid_argument("eta_gamma_decomposition: dimension mismatch");
    }
    const auto k = std::min(h.rows(), h.cols());
    if (index < 0 || index >= k) {
        throw std::invalid_argument("eta_gamma_decomposition: index out of range");
    }

    const SvdResult dec = svd(h);
    // Numerical rank of H sets the column-space projector.
    const double tol = std::max(h.rows(), h.cols()) *
                       std::numeric_limits<double>::epsilon() *
                       (dec.sigma.size() > 0 ? dec.sigma(0) : 0.0);
    Eigen::Index rank = 0;
    while (rank < dec.sigma.size() && dec.sigma(rank) > tol) ++rank;

    const CMatrix ur = dec.u.leftCols(rank);
    const CMatrix pt = ur * (ur.adjoint() * t);
    const CMatrix pperp_t = t - pt;

    EtaGammaBounds r;
    r.gamma_abs_bound = spectral_norm(pt);
    if (rank >= h.rows()) {
        // Full row space: the complement is trivial.
        r.eta_lo = 0.0;
        r.eta_hi = 0.0;
    } else {
        const RVector s = svd(pperp_t).sigma;
        r.eta_hi = s(0);
        r.eta_lo = s(s.size() - 1);
    }
    return r;
}

std::vector<GrowthPoint> sqrt_nr_growth_experiment(int m,
                                                   const std::vector<int>& nr_list,
                                                   double rho, int trials,
                                                   RandomStream& rng) {
    if (m < 1) throw std::invalid_argument("growth experiment: m must be >= 1");
    if (rho < 0.0 || !std::isfinite(rho)) {
        throw std::invalid_argument("growth experiment: rho must be finite and >= 0");
    }
    if (trials < 1) throw std::invalid_argument("growth experiment: trials must be >= 1");
    for (int nr : nr_list) {
        if (nr <= m) {
            throw std::invalid_argument(
                "growth experiment: each n_r must exceed m so a zero singular value exists");
        }
    }

    const int width = m + 1;
    RVector spectrum = RVector::Constant(m, 10.0);
    const PerturbationSpec pert{PerturbationFamily::gaussian, rho};

    std::vector<GrowthPoint> out;
    out.reserve(nr_list.size());
    for (std::size_t ni = 0; ni < nr_list.size(); ++ni) {
        const int nr = nr_list[ni];
        auto point_stream = rng.split(ni);
        double acc = 0.0;
        for (int t = 0; t < trials; ++t) {
            auto ts = point_stream.split(t);
            auto sh = ts.split(0);
            auto st = ts.split(1);
            const CMatrix h = matrix_with_spectrum(nr, width, spectrum, sh);
            const CMatrix g = h + draw_perturbation(pert, nr, width, st);
            const RVector s = svd(g).sigma;
            acc += s(s.size() - 1);
        }
        out.push_back({nr, acc / trials});
    }
    return out;
}

double growth_log_slope(const std::vector<GrowthPoint>& points) {
    if (points.size() < 2) {
        throw std::invalid_argument("growth_log_slope: need at least two points");
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& p : points) {
        if (p.mean_sigma_min <= 0.0) {
            throw std::invalid_argument("growth_log_slope: nonpositive mean, log fit invalid");
        }
        const double x = std::log(double(p.n_r));
        const double y = std::log(p.mean_sigma_min);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = double(points.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

SinThetaBoundResult wedin_bound(const WedinInput& in) {
    const auto rows = in.h.rows();
    const auto cols = in.h.cols();
    if (in.g.rows() != rows || in.g.cols() != cols) {
        throw std::invalid_argument("wedin_bound: dimension mismatch");
    }
    const auto k = std::min(rows, cols);
    if (in.r < 1 || in.r > k) {
        throw std::invalid_argument("wedin_bound: split index out of range");
    }

    const SvdResult dh = svd(in.h);
    const SvdResult dg = svd(in.g);
    const auto r = in.r;

    const CMatrix u1t = dg.u.leftCols(r);
    const CMatrix v1t = dg.v.leftCols(r);
    const RVector s1t = dg.sigma.head(r);

    const CMatrix res_r = in.h * v1t - u1t * s1t.asDiagonal();
    const CMatrix res_s = in.h.adjoint() * u1t - v1t * s1t.asDiagonal();

    // Gap: perturbed leading group vs unperturbed trailing group, and vs the
    // (possibly implicit) zero singular values.
    double delta = s1t(r - 1);
    for (Eigen::Index i = 0; i < r; ++i) {
        for (Eigen::Index j = r; j < k; ++j) {
            delta = std::min(delta, std::abs(s1t(i) - dh.sigma(j)));
        }
    }

    SinThetaBoundResult out;
    out.epsilon = std::sqrt(res_r.squaredNorm() + res_s.squaredNorm());
    out.delta = delta;
    out.gap_satisfied = delta > 0.0;
    out.bound = out.gap_satisfied ? out.epsilon / delta : kInf;

    const auto phi = canonical_angles_raw(dh.u.leftCols(r), u1t);
    const auto theta = canonical_angles_raw(dh.v.leftCols(r), v1t);
    const double sf = sin_theta_norm(phi, MatNorm::frobenius);
    const double st = sin_theta_norm(theta, MatNorm::frobenius);
    out.measured_sin_theta = std::sqrt(sf * sf + st * st);
    return out;
}

SinThetaBoundResult extended_sin_theta_bound(const CMatrix& h, const CMatrix& g,
                                             Eigen::Index r, MatNorm norm) {
    const auto rows = h.rows();
    const auto cols = h.cols();
    if (g.rows() != rows || g.cols() != cols) {
        throw std::invalid_argument("extended_sin_theta_bound: dimension mismatch");
    }
    if (r < 1 || r >= rows || r >= cols) {
        throw std::invalid_argument(
            "extended_sin_theta_bound: split leaves an empty leading or null-side block");
    }

    const SvdResult dh = svd(h);
    const SvdResult dg = svd(g);
    const auto k = std::min(rows, cols);

    const CMatrix x0 = dg.v.rightCols(cols - r);
    const CMatrix y0 = dg.u.rightCols(rows - r);
    const CMatrix d0 = y0.adjoint() * g * x0;

    const CMatrix r01 = h * x0 - y0 * d0;
    const CMatrix r02 = h.adjoint() * y0 - x0 * d0.adjoint();

    const double n1 = norm == MatNorm::spectral ? spectral_norm(r01) : r01.norm();
    const double n2 = norm == MatNorm::spectral ? spectral_norm(r02) : r02.norm();

    // Interval condition: trailing singular values of G lie in [0, alpha];
    // the leading r singular values of H must clear alpha by delta.
    const double alpha = r < k ? dg.sigma(r) : 0.0;
    const double delta = dh.sigma(r - 1) - alpha;

    SinThetaBoundResult out;
    out.epsilon = std::max(n1, n2);
    out.delta = delta;
    out.gap_satisfied = delta > 0.0;
    out.bound = out.gap_satisfied ? kSinThetaConstant * out.epsilon / delta : kInf;

    const auto left = canonical_angles_raw(dh.u.rightCols(rows - r), y0);
    const auto right = canonical_angles_raw(dh.v.rightCols(cols - r), x0);
    out.measured_sin_theta =
        std::max(sin_theta_norm(left, norm), sin_theta_norm(right, norm));
    return out;
}

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double capacity_degradation_weyl_bound(const CMatrix& t) {
    return spectral_norm(t);
}

double ber_upper_bound(const LinkBudget& budget, double epsilon, double delta,
                       double k) {
    check_budget(budget);
    if (delta <= 0.0) {
        throw std::invalid_argument("ber_upper_bound: gap violation (delta must be > 0)");
    }
    if (epsilon < 0.0 || !std::isfinite(epsilon)) {
        throw std::invalid_argument("ber_upper_bound: epsilon must be finite and >= 0");
    }
    if (k < 1.0) {
        throw std::invalid_argument("ber_upper_bound: k must be >= 1");
    }
    const double interference =
        budget.e_s * path_gain(budget.path) * (epsilon / delta) * k;
    return q_function(std::sqrt(budget.e_p / (budget.n_0 + interference)));
}

CapacityBounds capacity_bounds(const LinkBudget& budget, double sin_theta,
                               double epsilon, double delta, double k) {
    check_budget(budget);
    if (sin_theta < 0.0 || !std::isfinite(sin_theta)) {
        throw std::invalid_argument("capacity_bounds: sin_theta must be finite and >= 0");
    }
    if (delta <= 0.0) {
        throw std::invalid_argument("capacity_bounds: gap violation (delta must be > 0)");
    }
    if (epsilon < 0.0 || !std::isfinite(epsilon)) {
        throw std::invalid_argument("capacity_bounds: epsilon must be finite and >= 0");
    }
    if (k < 1.0) {
        throw std::invalid_argument("capacity_bounds: k must be >= 1");
    }
    const double g = path_gain(budget.path);
    CapacityBounds out;
    out.c_clean = std::log2(budget.e_p / budget.n_0);
    out.c_tilde = std::log2(budget.e_p / (budget.n_0 + budget.e_s * g * sin_theta));
    const double worst = budget.n_0 + budget.e_s * g * (epsilon / delta) * k;
    out.c_tilde_lower = std::log2(budget.e_p / worst);
    out.degradation_upper = std::log2(worst / budget.n_0);
    return out;
}

}  // namespace nslink
