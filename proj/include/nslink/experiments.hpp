// SPDX-License-Identifier: Apache-2.0
//
// Experiment orchestration behind the CLI: canned figure scenarios, claim
// evaluation, bound certification suites, and CSV emission.  All output is
// produced as strings first so determinism can be checked without touching
// the filesystem.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nslink/config.hpp"
#include "nslink/linksim.hpp"

namespace nslink {

enum class FigureId {
    ber_vs_distance_gaussian,
    ber_vs_distance_uniform,
    capacity_vs_su_power,
    ber_bound_vs_power,
};

const char* figure_name(FigureId id);
bool parse_figure_id(const std::string& s, FigureId& out);

double db_to_lin(double db);

// Built-in scenario behind each figure; a user config replaces it wholesale.
ScenarioConfig default_scenario(FigureId id);

struct FigureOutput {
    std::string csv;      // header + one row per sweep point per series
    std::string summary;  // claim-by-claim report, deterministic text
    bool pass = false;    // every asserted claim held
};

// Run a figure's sweeps and evaluate its claims.  The config supplies
// dimensions, budget, trial counts, seed, and optionally the sweep grid
// (su_power grids are given in dB); the figure id fixes the axis, the series
// and the claims.
FigureOutput run_figure(FigureId id, const ScenarioConfig& cfg);

// Write <figure>.csv and <figure>_summary.txt under out_dir.
// Returns 0 when all claims pass, 2 otherwise.
int cmd_figure(FigureId id, const ScenarioConfig& cfg,
               const std::string& out_dir);

struct CertifyOptions {
    int ensemble = 2000;        // Weyl/Mirsky ensemble size
    std::uint64_t seed = 7;
};

struct CertifyOutput {
    std::vector<std::pair<std::string, std::string>> tables;  // name -> CSV
    std::string summary;
    bool pass = false;
};

// Certification suites for the perturbation theorems: Weyl/Mirsky shift
// bounds (plus the diagonal equality family), Wedin and extended sin-theta
// on gap-enforced ensembles, the gamma/eta split on rank-deficient channels,
// and the sqrt(N_R) growth-law fit.
CertifyOutput run_certify(const CertifyOptions& opts);

// Write the certification CSVs and certify_summary.txt under out_dir.
// Returns 0 when all violation counts are zero and the slope is in range.
int cmd_certify(const CertifyOptions& opts, const std::string& out_dir);

// Version, numeric backend, and master tolerances; stable within a build.
std::string info_text();
int cmd_info();

}  // namespace nslink
