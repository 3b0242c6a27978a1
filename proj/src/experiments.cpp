// SPDX-License-Identifier: Apache-2.0

#include "nslink/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <stdexcept>

#include "nslink/channel.hpp"
#include "nslink/precoder.hpp"

namespace nslink {

namespace {

std::string g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct CsvBuilder {
    std::string text = "axis_value,series,value,ci95_half_width\n";
    void row(double axis, const std::string& series, double value, double ci) {
        text += g12(axis);
        text += ',';
        text += series;
        text += ',';
        text += g12(value);
        text += ',';
        text += g12(ci);
        text += '\n';
    }
    void series(const std::vector<double>& axis, const std::string& name,
                const std::vector<double>& value, const std::vector<double>& ci) {
        for (std::size_t i = 0; i < axis.size(); ++i) {
            row(axis[i], name, value[i], ci.empty() ? 0.0 : ci[i]);
        }
    }
};

struct ClaimSet {
    std::string text;
    bool pass = true;
    void add(bool ok, const std::string& desc) {
        text += ok ? "[PASS] " : "[FAIL] ";
        text += desc;
        text += '\n';
        pass = pass && ok;
    }
    void info(const std::string& desc) {
        text += "[INFO] ";
        text += desc;
        text += '\n';
    }
};

std::vector<double> grid_step(double lo, double hi, double step) {
    std::vector<double> v;
    for (double x = lo; x <= hi + 1e-9; x += step) v.push_back(x);
    return v;
}

std::vector<double> figure_grid(const ScenarioConfig& cfg, SweepAxis axis,
                                std::vector<double> fallback) {
    if (cfg.sweep && cfg.sweep->axis == axis) return cfg.sweep->values;
    return fallback;
}

// ber[i+1] may exceed ber[i] only inside the joint confidence interval.
bool non_increasing_within_ci(const std::vector<double>& v,
                              const std::vector<double>& ci) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i + 1] - v[i] > ci[i] + ci[i + 1]) return false;
    }
    return true;
}

bool non_decreasing_within_ci(const std::vector<double>& v,
                              const std::vector<double>& ci) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] - v[i + 1] > ci[i] + ci[i + 1]) return false;
    }
    return true;
}

std::string scenario_header(const char* name, const ScenarioConfig& cfg,
                            const std::string& axis_desc, std::size_t points) {
    std::string s;
    s += "figure: ";
    s += name;
    s += '\n';
    s += "axis: " + axis_desc + " (" + std::to_string(points) + " points)\n";
    s += "channel: " + std::to_string(cfg.n_rx) + "x" + std::to_string(cfg.n_tx) +
         ", rician_k = " + g12(cfg.rician_k) + ", threshold = " + g12(cfg.threshold) +
         (cfg.threshold_mode == ThresholdMode::relative ? " (relative)" : " (absolute)") +
         "\n";
    s += "budget: e_p = " + g12(cfg.budget.e_p) + ", n_0 = " + g12(cfg.budget.n_0) +
         ", attenuation = " + g12(cfg.budget.path.attenuation) + "\n";
    s += "trials/point: " + std::to_string(cfg.trials) +
         ", bits/trial: " + std::to_string(cfg.bits_per_trial) +
         ", seed: " + std::to_string(cfg.master_seed) + "\n";
    return s;
}

FigureOutput figure_ber_vs_distance(const ScenarioConfig& cfg,
                                    PerturbationFamily family,
                                    const char* name) {
    const std::vector<double> grid = figure_grid(
        cfg, SweepAxis::distance, grid_step(1.0, 10.0, 1.0));

    ScenarioConfig perf = cfg;
    perf.perturbation = {PerturbationFamily::none, 0.0};

    ScenarioConfig pert = cfg;
    pert.perturbation.family = family;
    if (!(pert.perturbation.scale > 0.0)) pert.perturbation.scale = 0.2;

    const SweepResult rp = run_sweep(perf, SweepAxis::distance, grid);
    const SweepResult rq = run_sweep(pert, SweepAxis::distance, grid);
    const double floor = reference_ber(cfg.budget, 1);

    const std::string pert_name =
        std::string("perturbed_scale_") + g12(pert.perturbation.scale);
    CsvBuilder csv;
    csv.series(grid, "perfect_csi", rp.ber, rp.ber_ci);
    csv.series(grid, pert_name, rq.ber, rq.ber_ci);
    csv.series(grid, "reference_floor",
               std::vector<double>(grid.size(), floor),
               std::vector<double>(grid.size(), 0.0));

    ClaimSet claims;
    // Claims compare points at trial granularity (clustered confidence);
    // the CSV rows carry the per-bit binomial widths.
    claims.add(non_increasing_within_ci(rp.ber, rp.ber_ci_cluster),
               "perfect_csi BER non-increasing in distance (within confidence)");
    claims.add(non_increasing_within_ci(rq.ber, rq.ber_ci_cluster),
               pert_name + " BER non-increasing in distance (within confidence)");

    bool exceeds = true;
    double min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double margin = rq.ber[i] - rp.ber[i];
        min_margin = std::min(min_margin, margin);
        if (!(margin > 0.0)) exceeds = false;
    }
    claims.add(exceeds, "perturbed BER exceeds perfect-CSI BER at every distance "
                        "(min margin " + g12(min_margin) + ")");

    bool have_ref = false;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (std::abs(grid[i] - 2.0) < 1e-12) {
            have_ref = true;
            const double ratio = rp.ber[i] > 0.0
                                     ? rq.ber[i] / rp.ber[i]
                                     : std::numeric_limits<double>::infinity();
            claims.add(ratio >= 3.0, "perturbed/perfect BER ratio at d = 2 is " +
                                         g12(ratio) + " (>= 3 required)");
            break;
        }
    }
    if (!have_ref) claims.info("d = 2 not on grid; ratio claim not evaluated");
    claims.info("reference floor " + g12(floor) + ", perfect_csi BER at far end " +
                g12(rp.ber.back()));

    FigureOutput out;
    out.csv = csv.text;
    out.summary = scenario_header(name, cfg, "distance", grid.size()) +
                  "e_s = " + g12(cfg.budget.e_s) + ", perturbation scale = " +
                  g12(pert.perturbation.scale) + " (" + family_name(family) +
                  ")\n" + claims.text +
                  std::string("result: ") + (claims.pass ? "PASS" : "FAIL") + "\n";
    out.pass = claims.pass;
    return out;
}

FigureOutput figure_capacity_vs_su_power(const ScenarioConfig& cfg) {
    const std::vector<double> db = figure_grid(
        cfg, SweepAxis::su_power, grid_step(-10.0, 44.0, 2.0));
    std::vector<double> lin(db.size());
    for (std::size_t i = 0; i < db.size(); ++i) lin[i] = db_to_lin(db[i]);

    ScenarioConfig none = cfg;
    none.perturbation = {PerturbationFamily::none, 0.0};
    ScenarioConfig low = cfg;
    low.perturbation = {PerturbationFamily::gaussian, 0.1};
    // Convergence series: error large enough to wash out the estimate.
    const double hi_scale =
        cfg.perturbation.scale > 0.0 ? cfg.perturbation.scale : 2.0;
    ScenarioConfig high = cfg;
    high.perturbation = {PerturbationFamily::gaussian, hi_scale};
    const std::string hi_name = "gaussian_" + g12(hi_scale);

    const SweepResult sp = run_sweep(none, SweepAxis::su_power, lin);
    const SweepResult s1 = run_sweep(low, SweepAxis::su_power, lin);
    const SweepResult s7 = run_sweep(high, SweepAxis::su_power, lin);
    const SweepResult so =
        run_sweep(none, SweepAxis::su_power, lin, TrialKind::open_loop);

    auto degradation = [](const SweepResult& s) {
        std::vector<double> d(s.capacity.size());
        for (std::size_t i = 0; i < d.size(); ++i) {
            d[i] = s.capacity_clean[i] - s.capacity[i];
        }
        return d;
    };
    const std::vector<double> dp = degradation(sp);
    const std::vector<double> d1 = degradation(s1);
    const std::vector<double> d7 = degradation(s7);
    const std::vector<double> dol = degradation(so);

    CsvBuilder csv;
    csv.series(db, "perfect_csi", dp, sp.capacity_ci);
    csv.series(db, "gaussian_0.1", d1, s1.capacity_ci);
    csv.series(db, hi_name, d7, s7.capacity_ci);
    csv.series(db, "open_loop", dol, so.capacity_ci);

    ClaimSet claims;
    auto bracketed = [&](const std::vector<double>& d,
                         const std::vector<double>& ci) {
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (dp[i] > d[i] + sp.capacity_ci[i] + ci[i]) return false;
            if (d[i] > dol[i] + ci[i] + so.capacity_ci[i]) return false;
        }
        return true;
    };
    claims.add(bracketed(d1, s1.capacity_ci),
               "gaussian_0.1 degradation bracketed between perfect-CSI and "
               "open-loop at every point (within confidence)");
    claims.add(bracketed(d7, s7.capacity_ci),
               hi_name + " degradation bracketed between perfect-CSI and "
               "open-loop at every point (within confidence)");

    const double top_ol = dol.back();
    const double rel_gap7 =
        top_ol > 0.0 ? (top_ol - d7.back()) / top_ol
                     : std::numeric_limits<double>::infinity();
    claims.add(rel_gap7 <= 0.10,
               hi_name + " degradation within 10% of open-loop at top of "
               "power grid (relative gap " + g12(rel_gap7) + ")");
    const double rel_gap1 =
        top_ol > 0.0 ? (top_ol - d1.back()) / top_ol
                     : std::numeric_limits<double>::infinity();
    claims.info("gaussian_0.1 relative gap to open-loop at top of grid: " +
                g12(rel_gap1));

    claims.add(non_decreasing_within_ci(dp, sp.capacity_ci),
               "perfect_csi degradation non-decreasing in SU power (within confidence)");
    claims.add(non_decreasing_within_ci(d1, s1.capacity_ci),
               "gaussian_0.1 degradation non-decreasing in SU power (within confidence)");
    claims.add(non_decreasing_within_ci(d7, s7.capacity_ci),
               hi_name + " degradation non-decreasing in SU power (within confidence)");
    claims.add(non_decreasing_within_ci(dol, so.capacity_ci),
               "open_loop degradation non-decreasing in SU power (within confidence)");

    FigureOutput out;
    out.csv = csv.text;
    out.summary =
        scenario_header("capacity_vs_su_power", cfg, "su_power [dB]", db.size()) +
        claims.text + std::string("result: ") + (claims.pass ? "PASS" : "FAIL") +
        "\n";
    out.pass = claims.pass;
    return out;
}

FigureOutput figure_ber_bound_vs_power(const ScenarioConfig& cfg) {
    const std::vector<double> db = figure_grid(
        cfg, SweepAxis::su_power, grid_step(-10.0, 20.0, 2.0));
    std::vector<double> lin(db.size());
    for (std::size_t i = 0; i < db.size(); ++i) lin[i] = db_to_lin(db[i]);

    ScenarioConfig pert = cfg;
    if (pert.perturbation.family == PerturbationFamily::none) {
        pert.perturbation.family = PerturbationFamily::gaussian;
    }
    if (!(pert.perturbation.scale > 0.0)) pert.perturbation.scale = 0.1;

    const SweepResult s = run_sweep(pert, SweepAxis::su_power, lin);

    CsvBuilder csv;
    csv.series(db, "simulated", s.ber, s.ber_ci);
    csv.series(db, "upper_bound", s.ber_bound, {});
    std::vector<double> gap(db.size());
    for (std::size_t i = 0; i < db.size(); ++i) {
        gap[i] = s.gap_satisfied[i] ? 1.0 : 0.0;
    }
    csv.series(db, "gap_satisfied", gap, {});

    ClaimSet claims;
    int sat = 0, violations = 0;
    for (std::size_t i = 0; i < db.size(); ++i) {
        if (!s.gap_satisfied[i]) continue;
        ++sat;
        if (s.ber[i] > s.ber_bound[i]) ++violations;
    }
    claims.add(violations == 0,
               "simulated BER <= analytic upper bound at every gap-satisfied "
               "point (" + std::to_string(violations) + " violations)");
    claims.add(sat >= 1, "gap condition satisfied at " + std::to_string(sat) +
                             " of " + std::to_string(db.size()) + " points");

    FigureOutput out;
    out.csv = csv.text;
    out.summary =
        scenario_header("ber_bound_vs_power", cfg, "su_power [dB]", db.size()) +
        "e_p = " + g12(cfg.budget.e_p) + ", distance = " +
        g12(cfg.budget.path.distance) + ", perturbation scale = " +
        g12(pert.perturbation.scale) + " (" +
        family_name(pert.perturbation.family) + ")\n" + claims.text +
        std::string("result: ") + (claims.pass ? "PASS" : "FAIL") + "\n";
    out.pass = claims.pass;
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path.string());
    f << text;
    if (!f) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace

const char* figure_name(FigureId id) {
    switch (id) {
        case FigureId::ber_vs_distance_gaussian: return "ber_vs_distance_gaussian";
        case FigureId::ber_vs_distance_uniform: return "ber_vs_distance_uniform";
        case FigureId::capacity_vs_su_power: return "capacity_vs_su_power";
        case FigureId::ber_bound_vs_power: return "ber_bound_vs_power";
    }
    return "?";
}

bool parse_figure_id(const std::string& s, FigureId& out) {
    for (FigureId id : {FigureId::ber_vs_distance_gaussian,
                        FigureId::ber_vs_distance_uniform,
                        FigureId::capacity_vs_su_power,
                        FigureId::ber_bound_vs_power}) {
        if (s == figure_name(id)) {
            out = id;
            return true;
        }
    }
    return false;
}

double db_to_lin(double db) { return std::pow(10.0, db / 10.0); }

ScenarioConfig default_scenario(FigureId id) {
    ScenarioConfig cfg;  // 2x2, K = 3
    cfg.master_seed = 1;
    switch (id) {
        case FigureId::ber_vs_distance_gaussian:
        case FigureId::ber_vs_distance_uniform:
            cfg.threshold = 0.15;
            cfg.trials = 1000;
            cfg.bits_per_trial = 2000;
            cfg.perturbation = {id == FigureId::ber_vs_distance_gaussian
                                    ? PerturbationFamily::gaussian
                                    : PerturbationFamily::uniform,
                                0.2};
            cfg.budget.e_p = 9.0;
            cfg.budget.e_s = 800.0;
            cfg.budget.n_0 = 1.0;
            cfg.sweep = SweepSpec{SweepAxis::distance, grid_step(1.0, 10.0, 1.0)};
            break;
        case FigureId::capacity_vs_su_power:
            // A 2x2 array cannot close the open-loop gap: discarding one of
            // two transmit dimensions costs 1/ln2 bits of interference even
            // for a fully random estimate. Four antennas shrink that floor to
            // 1/(3 ln2) bits, so the washed-out-estimate series can actually
            // meet the open-loop curve on a finite power grid.
            cfg.n_rx = 4;
            cfg.n_tx = 4;
            cfg.threshold = 0.99;
            cfg.trials = 800;
            cfg.bits_per_trial = 16;  // capacity metric; bits are incidental
            cfg.perturbation = {PerturbationFamily::gaussian, 2.0};
            cfg.budget.e_p = 10.0;
            cfg.budget.n_0 = 1.0;
            // Wide grid: the open-loop convergence regime sits above the
            // default 20 dB ceiling.
            cfg.sweep = SweepSpec{SweepAxis::su_power, grid_step(-10.0, 44.0, 2.0)};
            break;
        case FigureId::ber_bound_vs_power:
            cfg.threshold = 0.25;
            cfg.trials = 500;
            cfg.bits_per_trial = 2000;
            cfg.perturbation = {PerturbationFamily::gaussian, 0.1};
            cfg.budget.e_p = 4.0;
            cfg.budget.n_0 = 1.0;
            cfg.budget.path.distance = 2.0;
            cfg.sweep = SweepSpec{SweepAxis::su_power, grid_step(-10.0, 20.0, 2.0)};
            break;
    }
    return cfg;
}

FigureOutput run_figure(FigureId id, const ScenarioConfig& cfg) {
    switch (id) {
        case FigureId::ber_vs_distance_gaussian:
            return figure_ber_vs_distance(cfg, PerturbationFamily::gaussian,
                                          "ber_vs_distance_gaussian");
        case FigureId::ber_vs_distance_uniform:
            return figure_ber_vs_distance(cfg, PerturbationFamily::uniform,
                                          "ber_vs_distance_uniform");
        case FigureId::capacity_vs_su_power:
            return figure_capacity_vs_su_power(cfg);
        case FigureId::ber_bound_vs_power:
            return figure_ber_bound_vs_power(cfg);
    }
    throw std::invalid_argument("run_figure: unknown figure id");
}

int cmd_figure(FigureId id, const ScenarioConfig& cfg,
               const std::string& out_dir) {
    const FigureOutput out = run_figure(id, cfg);
    std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    write_file(dir / (std::string(figure_name(id)) + ".csv"), out.csv);
    write_file(dir / (std::string(figure_name(id)) + "_summary.txt"), out.summary);
    return out.pass ? 0 : 2;
}

namespace {

struct Dim {
    int rows;
    int cols;
};

CMatrix iid_complex(int rows, int cols, RandomStream& rng) {
    return draw_rician({0.0, rows, cols}, rng);  // K = 0: pure scatter
}

}  // namespace

CertifyOutput run_certify(const CertifyOptions& opts) {
    if (opts.ensemble < 1) {
        throw std::invalid_argument("run_certify: ensemble must be >= 1");
    }
    RandomStream root(opts.seed);
    RandomStream wm_stream = root.split(1);
    RandomStream eq_stream = root.split(2);
    RandomStream wedin_stream = root.split(3);
    RandomStream ext_stream = root.split(4);
    RandomStream eg_stream = root.split(5);
    RandomStream growth_stream = root.split(6);

    CertifyOutput out;
    ClaimSet claims;

    // --- Weyl / Mirsky on a mixed random ensemble ---
    const Dim dims[] = {{2, 2}, {3, 5}, {5, 3}, {6, 6}, {8, 4}, {8, 8}};
    const double scales[] = {1e-3, 0.1, 1.0, 10.0};
    std::string wm_csv =
        "trial,rows,cols,family,scale,max_shift,weyl_bound,shift_l2,"
        "mirsky_bound,weyl_ok,mirsky_ok\n";
    int weyl_viol = 0, mirsky_viol = 0;
    for (int i = 0; i < opts.ensemble; ++i) {
        RandomStream ts = wm_stream.split(i);
        const Dim d = dims[i % 6];
        const double scale = scales[(i / 6) % 4];
        const PerturbationFamily fam = (i % 2) ? PerturbationFamily::uniform
                                               : PerturbationFamily::gaussian;
        RandomStream sh = ts.split(0);
        RandomStream st = ts.split(1);
        const CMatrix h = iid_complex(d.rows, d.cols, sh);
        const CMatrix t = draw_perturbation({fam, scale}, d.rows, d.cols, st);
        const SingularShift ss = singular_shift(h, t);
        if (!ss.weyl_satisfied) ++weyl_viol;
        if (!ss.mirsky_satisfied) ++mirsky_viol;
        wm_csv += std::to_string(i) + ',' + std::to_string(d.rows) + ',' +
                  std::to_string(d.cols) + ',' + family_name(fam) + ',' +
                  g12(scale) + ',' + g12(ss.max_shift) + ',' +
                  g12(ss.weyl_bound) + ',' + g12(ss.shift_l2) + ',' +
                  g12(ss.mirsky_bound) + ',' + (ss.weyl_satisfied ? "1" : "0") +
                  ',' + (ss.mirsky_satisfied ? "1" : "0") + '\n';
    }
    claims.add(weyl_viol == 0, "weyl violations: " + std::to_string(weyl_viol) +
                                   " of " + std::to_string(opts.ensemble));
    claims.add(mirsky_viol == 0, "mirsky violations: " +
                                     std::to_string(mirsky_viol) + " of " +
                                     std::to_string(opts.ensemble));
    out.tables.emplace_back("certify_weyl_mirsky.csv", wm_csv);

    // --- Mirsky equality on order-preserving diagonal perturbations ---
    const int n_eq = 400;
    std::string eq_csv = "trial,rows,cols,shift_l2,t_frobenius,abs_deviation\n";
    double eq_max_dev = 0.0;
    for (int i = 0; i < n_eq; ++i) {
        RandomStream ts = eq_stream.split(i);
        const Dim d = (i % 2) ? Dim{5, 3} : Dim{6, 6};
        const int k = std::min(d.rows, d.cols);
        CMatrix h = CMatrix::Zero(d.rows, d.cols);
        CMatrix t = CMatrix::Zero(d.rows, d.cols);
        for (int j = 0; j < k; ++j) {
            // spacing >= 1.5 while |t_j| <= 0.4 keeps the order intact
            h(j, j) = 2.0 * (k - j) + 0.5 * ts.uniform01();
            t(j, j) = 0.4 * (2.0 * ts.uniform01() - 1.0);
        }
        const SingularShift ss = singular_shift(h, t);
        const double dev = std::abs(ss.shift_l2 - frobenius_norm(t));
        eq_max_dev = std::max(eq_max_dev, dev);
        eq_csv += std::to_string(i) + ',' + std::to_string(d.rows) + ',' +
                  std::to_string(d.cols) + ',' + g12(ss.shift_l2) + ',' +
                  g12(frobenius_norm(t)) + ',' + g12(dev) + '\n';
    }
    claims.add(eq_max_dev <= 1e-10,
               "mirsky equality family: max |deviation| = " + g12(eq_max_dev) +
                   " (tol 1e-10) over " + std::to_string(n_eq) + " trials");
    out.tables.emplace_back("certify_mirsky_equality.csv", eq_csv);

    // --- Wedin on a gap-enforced ensemble ---
    const int n_st = 1000;
    std::string wd_csv = "trial,rows,cols,r,epsilon,delta,bound,measured,gap\n";
    int wd_sat = 0, wd_viol = 0;
    double wd_ratio_sum = 0.0;
    int wd_ratio_n = 0;
    for (int i = 0; i < n_st; ++i) {
        RandomStream ts = wedin_stream.split(i);
        RandomStream sh = ts.split(0);
        RandomStream st = ts.split(1);
        RVector sig(4);
        sig << 5.0 + ts.uniform01(), 4.0 + ts.uniform01(),
            0.1 + 0.2 * ts.uniform01(), 0.01 + 0.09 * ts.uniform01();
        const CMatrix h = matrix_with_spectrum(6, 4, sig, sh);
        const CMatrix t = draw_perturbation(
            {PerturbationFamily::gaussian, 0.02 + 0.03 * ts.uniform01()}, 6, 4, st);
        const SinThetaBoundResult r = wedin_bound({h, h + t, 2});
        if (r.gap_satisfied) {
            ++wd_sat;
            if (r.measured_sin_theta > r.bound) ++wd_viol;
            if (r.measured_sin_theta > 1e-15) {
                wd_ratio_sum += r.bound / r.measured_sin_theta;
                ++wd_ratio_n;
            }
        }
        wd_csv += std::to_string(i) + ",6,4,2," + g12(r.epsilon) + ',' +
                  g12(r.delta) + ',' + g12(r.bound) + ',' +
                  g12(r.measured_sin_theta) + ',' + (r.gap_satisfied ? "1" : "0") +
                  '\n';
    }
    claims.add(wd_viol == 0 && wd_sat * 10 >= n_st * 9,
               "wedin: " + std::to_string(wd_sat - wd_viol) + "/" +
                   std::to_string(wd_sat) + " gap-satisfied trials hold (" +
                   std::to_string(n_st) + " total), mean bound/measured " +
                   g12(wd_ratio_n ? wd_ratio_sum / wd_ratio_n : 0.0));
    out.tables.emplace_back("certify_wedin.csv", wd_csv);

    // --- Extended sin-theta on exactly rank-deficient channels ---
    std::string ex_csv = "trial,rows,cols,r,epsilon,delta,bound,measured,gap\n";
    int ex_sat = 0, ex_viol = 0;
    double ex_ratio_sum = 0.0;
    int ex_ratio_n = 0;
    for (int i = 0; i < n_st; ++i) {
        RandomStream ts = ext_stream.split(i);
        RandomStream sh = ts.split(0);
        RandomStream st = ts.split(1);
        RVector sig(4);
        sig << 5.0 + ts.uniform01(), 3.0 + ts.uniform01(), 0.0, 0.0;
        const CMatrix h = matrix_with_spectrum(6, 4, sig, sh);
        const CMatrix t = draw_perturbation(
            {PerturbationFamily::gaussian, 0.02 + 0.03 * ts.uniform01()}, 6, 4, st);
        const SinThetaBoundResult r =
            extended_sin_theta_bound(h, h + t, 2, MatNorm::spectral);
        if (r.gap_satisfied) {
            ++ex_sat;
            if (r.measured_sin_theta > r.bound) ++ex_viol;
            if (r.measured_sin_theta > 1e-15) {
                ex_ratio_sum += r.bound / r.measured_sin_theta;
                ++ex_ratio_n;
            }
        }
        ex_csv += std::to_string(i) + ",6,4,2," + g12(r.epsilon) + ',' +
                  g12(r.delta) + ',' + g12(r.bound) + ',' +
                  g12(r.measured_sin_theta) + ',' + (r.gap_satisfied ? "1" : "0") +
                  '\n';
    }
    claims.add(ex_viol == 0 && ex_sat * 10 >= n_st * 9,
               "extended sin-theta: " + std::to_string(ex_sat - ex_viol) + "/" +
                   std::to_string(ex_sat) + " gap-satisfied trials hold (" +
                   std::to_string(n_st) + " total), mean bound/measured " +
                   g12(ex_ratio_n ? ex_ratio_sum / ex_ratio_n : 0.0));
    out.tables.emplace_back("certify_sin_theta_extended.csv", ex_csv);

    // --- gamma/eta split on rank-deficient channels ---
    const int n_eg = 1000;
    std::string eg_csv =
        "trial,rows,cols,rank,sigma_tilde,gamma_bound,eta_hi,rhs\n";
    int eg_viol = 0;
    for (int i = 0; i < n_eg; ++i) {
        RandomStream ts = eg_stream.split(i);
        RandomStream sh = ts.split(0);
        RandomStream st = ts.split(1);
        const bool tall = (i % 2) == 0;
        const int rows = tall ? 6 : 5;
        const int cols = tall ? 4 : 3;
        const int rank = 2;
        RVector sig(std::min(rows, cols));
        sig.setZero();
        sig(0) = 3.0 + ts.uniform01();
        sig(1) = 1.0 + ts.uniform01();
        const CMatrix h = matrix_with_spectrum(rows, cols, sig, sh);
        const CMatrix t = draw_perturbation(
            {PerturbationFamily::gaussian, 0.1 + 0.2 * ts.uniform01()}, rows,
            cols, st);
        const EtaGammaBounds eg = eta_gamma_decomposition(h, t, rank);
        const double sig_tilde = svd(h + t).sigma(rank);
        const double rhs = std::sqrt(eg.gamma_abs_bound * eg.gamma_abs_bound +
                                     eg.eta_hi * eg.eta_hi);
        if (sig_tilde * sig_tilde > rhs * rhs + 1e-10) ++eg_viol;
        eg_csv += std::to_string(i) + ',' + std::to_string(rows) + ',' +
                  std::to_string(cols) + ',' + std::to_string(rank) + ',' +
                  g12(sig_tilde) + ',' + g12(eg.gamma_abs_bound) + ',' +
                  g12(eg.eta_hi) + ',' + g12(rhs) + '\n';
    }
    claims.add(eg_viol == 0,
               "gamma/eta split: " + std::to_string(eg_viol) +
                   " violations of sigma_tilde^2 <= gamma^2 + eta^2 over " +
                   std::to_string(n_eg) + " trials");
    out.tables.emplace_back("certify_eta_gamma.csv", eg_csv);

    // --- sqrt(N_R) growth law ---
    const std::vector<GrowthPoint> pts =
        sqrt_nr_growth_experiment(2, {4, 16, 64}, 0.05, 500, growth_stream);
    const double slope = growth_log_slope(pts);
    std::string gr_csv = "n_r,mean_sigma_min\n";
    for (const GrowthPoint& p : pts) {
        gr_csv += std::to_string(p.n_r) + ',' + g12(p.mean_sigma_min) + '\n';
    }
    claims.add(slope >= 0.35 && slope <= 0.65,
               "growth-law slope " + g12(slope) + " in [0.35, 0.65]");
    out.tables.emplace_back("certify_growth_law.csv", gr_csv);

    out.summary = "certification summary\nensemble: " +
                  std::to_string(opts.ensemble) +
                  ", seed: " + std::to_string(opts.seed) + "\n" + claims.text +
                  std::string("result: ") + (claims.pass ? "PASS" : "FAIL") + "\n";
    out.pass = claims.pass;
    return out;
}

int cmd_certify(const CertifyOptions& opts, const std::string& out_dir) {
    const CertifyOutput out = run_certify(opts);
    std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    for (const auto& [name, text] : out.tables) write_file(dir / name, text);
    write_file(dir / "certify_summary.txt", out.summary);
    return out.pass ? 0 : 2;
}

std::string info_text() {
    std::string s;
    s += "nslink 1.0.0\n";
    s += "backend: Eigen " + std::to_string(EIGEN_WORLD_VERSION) + "." +
         std::to_string(EIGEN_MAJOR_VERSION) + "." +
         std::to_string(EIGEN_MINOR_VERSION) + "\n";
    s += "tolerance.unitary: " + g12(kTolUnitary) + "\n";
    s += "tolerance.reconstruction: " + g12(kTolRecon) + "\n";
    s += "tolerance.angle_clamp: " + g12(kAngleClampTol) + "\n";
    s += "sin_theta_constant: " + g12(kSinThetaConstant) + "\n";
    const ScenarioConfig d;
    s += "defaults: n_rx=" + std::to_string(d.n_rx) +
         " n_tx=" + std::to_string(d.n_tx) + " rician_k=" + g12(d.rician_k) +
         " threshold=" + g12(d.threshold) + " (relative)\n";
    return s;
}

int cmd_info() {
    std::cout << info_text();
    return 0;
}

}  // namespace nslink
