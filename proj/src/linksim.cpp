// SPDX-License-Identifier: Apache-2.0

#include "nslink/linksim.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "nslink/channel.hpp"
#include "nslink/precoder.hpp"

namespace nslink {

TrialRecord run_trial(const ScenarioConfig& cfg, RandomStream& stream,
                      TrialKind kind) {
    RandomStream s_h = stream.split(0);
    RandomStream s_hp = stream.split(1);
    RandomStream s_t = stream.split(2);
    RandomStream s_bits = stream.split(3);
    RandomStream s_noise = stream.split(4);

    const int n_r = cfg.n_rx;
    const int m = cfg.n_tx;
    if (m + 1 > 63) throw std::invalid_argument("run_trial: n_tx too large");

    const CMatrix h = draw_rician({cfg.rician_k, n_r, m}, s_h);
    CVector h_p = draw_rician({cfg.rician_k, n_r, 1}, s_hp).col(0);
    const double hp_norm = h_p.norm();
    if (!(hp_norm > 0.0)) throw NumericError("run_trial: degenerate primary channel");
    h_p /= hp_norm;  // unit-gain combined primary channel

    CMatrix g_mat = h;
    if (cfg.perturbation.family != PerturbationFamily::none &&
        cfg.perturbation.scale > 0.0) {
        g_mat += draw_perturbation(cfg.perturbation, n_r, m, s_t);
    }

    const NullSpaceResult ns_est =
        extract_null_space(g_mat, cfg.threshold, cfg.threshold_mode);
    const NullSpaceResult ns_true =
        extract_null_space(h, cfg.threshold, cfg.threshold_mode);

    const CMatrix p = (kind == TrialKind::open_loop)
                          ? CMatrix(CMatrix::Identity(m, m))
                          : ns_est.projector;

    const double g_path = path_gain(cfg.budget.path);
    const double e_p = cfg.budget.e_p;
    const double e_s = cfg.budget.e_s;
    const double n_0 = cfg.budget.n_0;

    const CMatrix f = h * p;  // true channel seen through the precoder
    const Eigen::RowVectorXcd w = h_p.adjoint() * f;
    const Eigen::RowVectorXd wr = w.real();
    const double i_z = g_path * (e_s / m) * w.squaredNorm();

    TrialRecord rec;
    rec.sigma_all = ns_true.sigma_all;  // spectrum of the true channel
    rec.null_dim_true = static_cast<int>(ns_true.basis.dim());
    rec.null_dim_est = static_cast<int>(ns_est.basis.dim());
    if (rec.null_dim_true > 0 && rec.null_dim_est > 0) {
        rec.sin_theta_f = sin_theta_norm(
            canonical_angles(ns_true.basis, ns_est.basis), MatNorm::frobenius);
    }
    rec.spillover = g_path * (e_s / m) * f.squaredNorm();
    rec.pu_sinr = e_p / (n_0 + i_z);
    rec.c_tilde_empirical = std::log2(rec.pu_sinr);
    rec.bits = cfg.bits_per_trial;

    const double amp_p = std::sqrt(e_p);
    const double amp_i = std::sqrt(g_path * e_s / m);
    const double sd_n = std::sqrt(n_0 / 2.0);
    long errors = 0;
    for (long i = 0; i < rec.bits; ++i) {
        const std::uint64_t u = s_bits.next_u64();
        const double s = (u & 1u) ? -1.0 : 1.0;
        double interf = 0.0;
        for (int k = 0; k < m; ++k) {
            const double b = ((u >> (1 + k)) & 1u) ? -1.0 : 1.0;
            interf += wr(k) * b;
        }
        const double z = amp_p * s + amp_i * interf + sd_n * s_noise.gaussian();
        if ((z >= 0.0) != (s > 0.0)) ++errors;
    }
    rec.bit_errors = errors;

    // Per-realization analytic bound; only meaningful for projected trials.
    if (kind == TrialKind::projected) {
        if (rec.null_dim_est == 0) {
            // Secondary stays silent: interference-free bound.
            rec.ber_bound = ber_upper_bound(cfg.budget, 0.0, 1.0);
            rec.bound_defined = true;
        } else {
            const int r = m - rec.null_dim_est;
            if (r >= 1 && r < n_r && r < m) {
                const SinThetaBoundResult ext =
                    extended_sin_theta_bound(h, g_mat, r, MatNorm::spectral);
                if (ext.gap_satisfied) {
                    rec.ber_bound =
                        ber_upper_bound(cfg.budget, ext.epsilon, ext.delta);
                    rec.bound_defined = true;
                }
            }
        }
    }
    return rec;
}

TrialRecord run_open_loop_baseline(const ScenarioConfig& cfg,
                                   RandomStream& stream) {
    return run_trial(cfg, stream, TrialKind::open_loop);
}

double reference_ber(const LinkBudget& budget, int diversity_order) {
    if (diversity_order < 1) {
        throw std::invalid_argument("reference_ber: diversity_order must be >= 1");
    }
    if (!(budget.e_p > 0.0) || !(budget.n_0 > 0.0)) {
        throw std::invalid_argument("reference_ber: e_p and n_0 must be > 0");
    }
    return q_function(std::sqrt(2.0 * budget.e_p / budget.n_0));
}

SweepResult run_sweep(const ScenarioConfig& cfg, SweepAxis axis,
                      const std::vector<double>& values, TrialKind kind) {
    if (values.empty()) throw std::invalid_argument("run_sweep: no axis values");
    SweepResult res;
    res.axis = axis_name(axis);
    res.axis_values = values;
    res.trials_per_point = cfg.trials;
    RandomStream base(cfg.master_seed);
    for (std::size_t pi = 0; pi < values.size(); ++pi) {
        ScenarioConfig pc = cfg;
        const double v = values[pi];
        switch (axis) {
            case SweepAxis::distance: pc.budget.path.distance = v; break;
            case SweepAxis::su_power: pc.budget.e_s = v; break;
            case SweepAxis::error_scale: pc.perturbation.scale = v; break;
            case SweepAxis::threshold: pc.threshold = v; break;
        }
        RandomStream point = base.split(pi);
        long errors = 0, bits = 0;
        double cap_sum = 0.0, cap_sq = 0.0, spill_sum = 0.0, bound_sum = 0.0;
        double err_sq = 0.0;  // sum of squared per-trial error counts
        int bound_n = 0;
        bool all_defined = true;
        for (int t = 0; t < pc.trials; ++t) {
            RandomStream ts = point.split(static_cast<std::uint64_t>(t));
            TrialRecord rec = run_trial(pc, ts, kind);
            rec.seed_id = static_cast<std::uint64_t>(t);
            errors += rec.bit_errors;
            bits += rec.bits;
            err_sq += double(rec.bit_errors) * double(rec.bit_errors);
            cap_sum += rec.c_tilde_empirical;
            cap_sq += rec.c_tilde_empirical * rec.c_tilde_empirical;
            spill_sum += rec.spillover;
            if (rec.bound_defined) {
                bound_sum += rec.ber_bound;
                ++bound_n;
            } else {
                all_defined = false;
            }
        }
        const int n = pc.trials;
        const double p = bits > 0 ? double(errors) / double(bits) : 0.0;
        res.ber.push_back(p);
        res.ber_ci.push_back(
            bits > 0 ? 1.96 * std::sqrt(std::max(p * (1.0 - p), 0.0) / double(bits))
                     : 0.0);
        // Bits within a trial share one channel draw; the trial is the
        // independent sampling unit for claim evaluation.
        double ci_cluster = 0.0;
        if (n > 1 && bits > 0) {
            const double mean_err = double(errors) / n;
            const double var_trial =
                std::max(err_sq - n * mean_err * mean_err, 0.0) / (n - 1);
            ci_cluster = 1.96 * std::sqrt(var_trial * n) / double(bits);
        }
        res.ber_ci_cluster.push_back(ci_cluster);
        res.ber_bound.push_back(bound_n > 0
                                    ? bound_sum / bound_n
                                    : std::numeric_limits<double>::quiet_NaN());
        const double mean = cap_sum / n;
        double ci = 0.0;
        if (n > 1) {
            const double var = std::max(cap_sq - n * mean * mean, 0.0) / (n - 1);
            ci = 1.96 * std::sqrt(var / n);
        }
        res.capacity.push_back(mean);
        res.capacity_ci.push_back(ci);
        res.capacity_clean.push_back(std::log2(pc.budget.e_p / pc.budget.n_0));
        res.mean_spillover.push_back(spill_sum / n);
        res.gap_satisfied.push_back(kind == TrialKind::projected && all_defined);
    }
    return res;
}

}  // namespace nslink
