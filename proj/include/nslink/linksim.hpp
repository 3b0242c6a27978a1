// SPDX-License-Identifier: Apache-2.0
//
// Monte Carlo link layer: a BPSK primary pair with maximum-ratio combining,
// sharing the band with a multi-antenna secondary transmitter that projects
// its symbols onto the estimated null space of the secondary-to-primary
// channel.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nslink/bounds.hpp"
#include "nslink/config.hpp"
#include "nslink/matcore.hpp"
#include "nslink/random.hpp"

namespace nslink {

enum class TrialKind { projected, open_loop };

// One channel realization, simulated for cfg.bits_per_trial primary symbols.
struct TrialRecord {
    std::uint64_t seed_id = 0;       // trial index within its sweep point
    RVector sigma_all;               // spectrum of the true channel H
    int null_dim_true = 0;
    int null_dim_est = 0;
    double sin_theta_f = 0.0;        // Frobenius sin-theta, true vs estimated null space
    double spillover = 0.0;          // g * (e_s / n_tx) * ||H P||_F^2
    double pu_sinr = 0.0;            // e_p / (n_0 + residual interference)
    double c_tilde_empirical = 0.0;  // log2(pu_sinr)
    double ber_bound = 0.0;          // per-realization analytic bound on the BER
    bool bound_defined = false;      // gap condition held, bound applicable
    long bit_errors = 0;
    long bits = 0;
};

// Simulate one trial.  `kind` selects projection through the null space of
// the perturbed estimate, or an unprojected open-loop transmission.
TrialRecord run_trial(const ScenarioConfig& cfg, RandomStream& stream,
                      TrialKind kind);

// Open-loop transmission (P = I), same channel/bit/noise draws as the
// projected trial fed the same stream.
TrialRecord run_open_loop_baseline(const ScenarioConfig& cfg,
                                   RandomStream& stream);

// Matched-filter BPSK floor of the primary link when the secondary is
// silent.  The combined primary channel is normalized to unit gain, so the
// floor does not depend on the diversity order.
double reference_ber(const LinkBudget& budget, int diversity_order);

struct SweepResult {
    std::string axis;                 // axis_name() of the swept parameter
    std::vector<double> axis_values;  // as supplied, linear units
    std::vector<double> ber;
    std::vector<double> ber_ci;          // 1.96 * binomial standard error
    std::vector<double> ber_ci_cluster;  // 1.96 * trial-clustered standard error
    std::vector<double> ber_bound;       // mean per-trial analytic bound
    std::vector<double> capacity;        // mean log2(e_p / (n_0 + I))
    std::vector<double> capacity_ci;     // 1.96 * s / sqrt(n)
    std::vector<double> capacity_clean;  // log2(e_p / n_0)
    std::vector<double> mean_spillover;
    std::vector<bool> gap_satisfied;  // bound defined at every trial
    int trials_per_point = 0;
};

// Sweep `axis` over `values` with cfg.trials trials per point.  Streams are
// keyed by (master_seed, point index, trial index), so a sweep is
// reproducible and two sweeps differing only in perturbation settings share
// channel, symbol, and noise realizations.
SweepResult run_sweep(const ScenarioConfig& cfg, SweepAxis axis,
                      const std::vector<double>& values,
                      TrialKind kind = TrialKind::projected);

}  // namespace nslink
