// SPDX-License-Identifier: Apache-2.0
//
// Scenario configuration: INI-style text (key = value with [section] headers,
// '#' comments). Unknown sections or keys are fatal; every defaulted field is
// logged; serialize/parse round-trips to an equal config.
//
// Grammar (all keys optional, shown with defaults):
//
//   n_rx = 2                 # PU receive antennas, 1..64
//   n_tx = 2                 # SU transmit antennas, 1..32
//   rician_k = 3             # Rician K factor, >= 0
//   threshold = 0.1          # null-space singular value threshold, >= 0
//   threshold_mode = relative   # relative | absolute
//   bits_per_trial = 1000    # >= 1
//   trials = 100             # >= 1
//   master_seed = 1
//
//   [perturbation]
//   family = none            # none | gaussian | uniform
//   scale = 0                # > 0 unless family = none (then must be 0)
//
//   [budget]
//   e_p = 4                  # PU energy per bit, > 0
//   e_s = 1                  # SU symbol energy, >= 0
//   n_0 = 1                  # noise spectral density, > 0
//   distance = 1             # SU->PU distance, >= 1
//   attenuation = 2          # path loss exponent, in [2, 4]
//
//   [sweep]                  # optional section
//   axis = distance          # distance | su_power | error_scale | threshold
//   values = 1,2,3           # nonempty, each valid for the axis
//
// su_power sweep values are E_s/N_0 in dB; the other axes are linear.

#pragma once

#include "nslink/bounds.hpp"
#include "nslink/channel.hpp"
#include "nslink/precoder.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nslink {

enum class SweepAxis { distance, su_power, error_scale, threshold };

const char* axis_name(SweepAxis a);

struct SweepSpec {
    SweepAxis axis = SweepAxis::distance;
    std::vector<double> values;

    bool operator==(const SweepSpec&) const = default;
};

struct ScenarioConfig {
    int n_rx = 2;
    int n_tx = 2;
    double rician_k = 3.0;
    double threshold = 0.1;
    ThresholdMode threshold_mode = ThresholdMode::relative;
    int bits_per_trial = 1000;
    int trials = 100;
    std::uint64_t master_seed = 1;
    PerturbationSpec perturbation;
    LinkBudget budget;
    std::optional<SweepSpec> sweep;

    bool operator==(const ScenarioConfig& o) const;
};

struct LoadedConfig {
    ScenarioConfig config;
    std::vector<std::string> defaults_applied;  // "key = value (default)"
};

// Throws std::invalid_argument with a field-precise message on unknown keys,
// malformed values, or invariant violations; std::runtime_error on I/O.
LoadedConfig parse_config_text(const std::string& text);
LoadedConfig parse_config_file(const std::string& path);

std::string serialize_config(const ScenarioConfig& cfg);

void validate_config(const ScenarioConfig& cfg);

}  // namespace nslink
