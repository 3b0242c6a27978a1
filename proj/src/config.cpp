// SPDX-License-Identifier: Apache-2.0

#include "nslink/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace nslink {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw std::invalid_argument("config: " + where + ": " + what);
}

double parse_double(const std::string& where, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) fail(where, "trailing characters in '" + v + "'");
        if (!std::isfinite(d)) fail(where, "value must be finite");
        return d;
    } catch (const std::invalid_argument&) {
        fail(where, "not a number: '" + v + "'");
    } catch (const std::out_of_range&) {
        fail(where, "out of range: '" + v + "'");
    }
}

int parse_int(const std::string& where, const std::string& v) {
    const double d = parse_double(where, v);
    const int i = static_cast<int>(d);
    if (double(i) != d) fail(where, "expected an integer, got '" + v + "'");
    return i;
}

std::uint64_t parse_u64(const std::string& where, const std::string& v) {
    try {
        std::size_t pos = 0;
        const unsigned long long u = std::stoull(v, &pos);
        if (pos != v.size()) fail(where, "trailing characters in '" + v + "'");
        return u;
    } catch (const std::exception&) {
        fail(where, "not an unsigned integer: '" + v + "'");
    }
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

const char* axis_name(SweepAxis a) {
    switch (a) {
        case SweepAxis::distance: return "distance";
        case SweepAxis::su_power: return "su_power";
        case SweepAxis::error_scale: return "error_scale";
        case SweepAxis::threshold: return "threshold";
    }
    return "?";
}

bool ScenarioConfig::operator==(const ScenarioConfig& o) const {
    return n_rx == o.n_rx && n_tx == o.n_tx && rician_k == o.rician_k &&
           threshold == o.threshold && threshold_mode == o.threshold_mode &&
           bits_per_trial == o.bits_per_trial && trials == o.trials &&
           master_seed == o.master_seed &&
           perturbation.family == o.perturbation.family &&
           perturbation.scale == o.perturbation.scale &&
           budget.e_p == o.budget.e_p && budget.e_s == o.budget.e_s &&
           budget.n_0 == o.budget.n_0 &&
           budget.path.distance == o.budget.path.distance &&
           budget.path.attenuation == o.budget.path.attenuation &&
           sweep == o.sweep;
}

void validate_config(const ScenarioConfig& cfg) {
    if (cfg.n_rx < 1 || cfg.n_rx > 64) fail("n_rx", "must lie in [1, 64]");
    if (cfg.n_tx < 1 || cfg.n_tx > 32) fail("n_tx", "must lie in [1, 32]");
    if (cfg.rician_k < 0.0 || !std::isfinite(cfg.rician_k)) {
        fail("rician_k", "must be finite and >= 0");
    }
    if (cfg.threshold < 0.0 || !std::isfinite(cfg.threshold)) {
        fail("threshold", "must be finite and >= 0");
    }
    if (cfg.bits_per_trial < 1) fail("bits_per_trial", "must be >= 1");
    if (cfg.trials < 1) fail("trials", "must be >= 1");

    if (cfg.perturbation.scale < 0.0 || !std::isfinite(cfg.perturbation.scale)) {
        fail("perturbation.scale", "must be finite and >= 0");
    }
    if (cfg.perturbation.family == PerturbationFamily::none &&
        cfg.perturbation.scale != 0.0) {
        fail("perturbation.scale", "must be 0 when family = none");
    }
    if (cfg.perturbation.family != PerturbationFamily::none &&
        cfg.perturbation.scale == 0.0) {
        fail("perturbation.scale", "must be > 0 unless family = none");
    }

    if (cfg.budget.e_p <= 0.0 || !std::isfinite(cfg.budget.e_p)) {
        fail("budget.e_p", "must be finite and > 0");
    }
    if (cfg.budget.e_s < 0.0 || !std::isfinite(cfg.budget.e_s)) {
        fail("budget.e_s", "must be finite and >= 0");
    }
    if (cfg.budget.n_0 <= 0.0 || !std::isfinite(cfg.budget.n_0)) {
        fail("budget.n_0", "must be finite and > 0");
    }
    if (cfg.budget.path.distance < 1.0 || !std::isfinite(cfg.budget.path.distance)) {
        fail("budget.distance", "must be finite and >= 1");
    }
    if (cfg.budget.path.attenuation < 2.0 || cfg.budget.path.attenuation > 4.0) {
        fail("budget.attenuation", "must lie in [2, 4]");
    }

    if (cfg.sweep) {
        if (cfg.sweep->values.empty()) fail("sweep.values", "must be nonempty");
        for (double v : cfg.sweep->values) {
            if (!std::isfinite(v)) fail("sweep.values", "must be finite");
            switch (cfg.sweep->axis) {
                case SweepAxis::distance:
                    if (v < 1.0) fail("sweep.values", "distance values must be >= 1");
                    break;
                case SweepAxis::su_power:
                    break;  // dB scale, negative is fine
                case SweepAxis::error_scale:
                case SweepAxis::threshold:
                    if (v < 0.0) fail("sweep.values", "values must be >= 0");
                    break;
            }
        }
    }
}

LoadedConfig parse_config_text(const std::string& text) {
    ScenarioConfig cfg;
    std::set<std::string> seen;
    std::string section;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    SweepSpec sweep;
    bool sweep_axis_set = false, sweep_values_set = false;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') fail("line " + std::to_string(lineno), "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "perturbation" && section != "budget" && section != "sweep") {
                fail("line " + std::to_string(lineno), "unknown section [" + section + "]");
            }
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            fail("line " + std::to_string(lineno), "expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        const std::string full = section.empty() ? key : section + "." + key;
        if (key.empty()) fail("line " + std::to_string(lineno), "empty key");
        if (val.empty()) fail(full, "empty value");
        if (!seen.insert(full).second) fail(full, "duplicate key");

        if (section.empty()) {
            if (key == "n_rx") cfg.n_rx = parse_int(full, val);
            else if (key == "n_tx") cfg.n_tx = parse_int(full, val);
            else if (key == "rician_k") cfg.rician_k = parse_double(full, val);
            else if (key == "threshold") cfg.threshold = parse_double(full, val);
            else if (key == "threshold_mode") {
                if (val == "relative") cfg.threshold_mode = ThresholdMode::relative;
                else if (val == "absolute") cfg.threshold_mode = ThresholdMode::absolute;
                else fail(full, "expected relative|absolute, got '" + val + "'");
            } else if (key == "bits_per_trial") cfg.bits_per_trial = parse_int(full, val);
            else if (key == "trials") cfg.trials = parse_int(full, val);
            else if (key == "master_seed") cfg.master_seed = parse_u64(full, val);
            else fail(full, "unknown key");
        } else if (section == "perturbation") {
            if (key == "family") {
                if (val == "none") cfg.perturbation.family = PerturbationFamily::none;
                else if (val == "gaussian") cfg.perturbation.family = PerturbationFamily::gaussian;
                else if (val == "uniform") cfg.perturbation.family = PerturbationFamily::uniform;
                else fail(full, "expected none|gaussian|uniform, got '" + val + "'");
            } else if (key == "scale") cfg.perturbation.scale = parse_double(full, val);
            else fail(full, "unknown key");
        } else if (section == "budget") {
            if (key == "e_p") cfg.budget.e_p = parse_double(full, val);
            else if (key == "e_s") cfg.budget.e_s = parse_double(full, val);
            else if (key == "n_0") cfg.budget.n_0 = parse_double(full, val);
            else if (key == "distance") cfg.budget.path.distance = parse_double(full, val);
            else if (key == "attenuation") cfg.budget.path.attenuation = parse_double(full, val);
            else fail(full, "unknown key");
        } else {  // sweep
            if (key == "axis") {
                if (val == "distance") sweep.axis = SweepAxis::distance;
                else if (val == "su_power") sweep.axis = SweepAxis::su_power;
                else if (val == "error_scale") sweep.axis = SweepAxis::error_scale;
                else if (val == "threshold") sweep.axis = SweepAxis::threshold;
                else fail(full, "unknown axis '" + val + "'");
                sweep_axis_set = true;
            } else if (key == "values") {
                std::stringstream vs(val);
                std::string item;
                while (std::getline(vs, item, ',')) {
                    item = trim(item);
                    if (item.empty()) fail(full, "empty list element");
                    sweep.values.push_back(parse_double(full, item));
                }
                sweep_values_set = true;
            } else fail(full, "unknown key");
        }
    }

    if (sweep_axis_set || sweep_values_set) {
        if (!sweep_axis_set) fail("sweep.axis", "missing (sweep.values given)");
        if (!sweep_values_set) fail("sweep.values", "missing (sweep.axis given)");
        cfg.sweep = sweep;
    }

    LoadedConfig out;
    const ScenarioConfig defaults;
    auto log_default = [&](const char* key, const std::string& v) {
        if (!seen.count(key)) out.defaults_applied.push_back(std::string(key) + " = " + v + " (default)");
    };
    log_default("n_rx", std::to_string(defaults.n_rx));
    log_default("n_tx", std::to_string(defaults.n_tx));
    log_default("rician_k", fmt(defaults.rician_k));
    log_default("threshold", fmt(defaults.threshold));
    log_default("threshold_mode", "relative");
    log_default("bits_per_trial", std::to_string(defaults.bits_per_trial));
    log_default("trials", std::to_string(defaults.trials));
    log_default("master_seed", std::to_string(defaults.master_seed));
    log_default("perturbation.family", "none");
    log_default("perturbation.scale", fmt(defaults.perturbation.scale));
    log_default("budget.e_p", fmt(defaults.budget.e_p));
    log_default("budget.e_s", fmt(defaults.budget.e_s));
    log_default("budget.n_0", fmt(defaults.budget.n_0));
    log_default("budget.distance", fmt(defaults.budget.path.distance));
    log_default("budget.attenuation", fmt(defaults.budget.path.attenuation));

    validate_config(cfg);
    out.config = cfg;
    return out;
}

LoadedConfig parse_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("config: cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config_text(ss.str());
}

std::string serialize_config(const ScenarioConfig& cfg) {
    std::ostringstream o;
    o << "n_rx = " << cfg.n_rx << "\n";
    o << "n_tx = " << cfg.n_tx << "\n";
    o << "rician_k = " << fmt(cfg.rician_k) << "\n";
    o << "threshold = " << fmt(cfg.threshold) << "\n";
    o << "threshold_mode = "
      << (cfg.threshold_mode == ThresholdMode::relative ? "relative" : "absolute")
      << "\n";
    o << "bits_per_trial = " << cfg.bits_per_trial << "\n";
    o << "trials = " << cfg.trials << "\n";
    o << "master_seed = " << cfg.master_seed << "\n";
    o << "\n[perturbation]\n";
    o << "family = " << family_name(cfg.perturbation.family) << "\n";
    o << "scale = " << fmt(cfg.perturbation.scale) << "\n";
    o << "\n[budget]\n";
    o << "e_p = " << fmt(cfg.budget.e_p) << "\n";
    o << "e_s = " << fmt(cfg.budget.e_s) << "\n";
    o << "n_0 = " << fmt(cfg.budget.n_0) << "\n";
    o << "distance = " << fmt(cfg.budget.path.distance) << "\n";
    o << "attenuation = " << fmt(cfg.budget.path.attenuation) << "\n";
    if (cfg.sweep) {
        o << "\n[sweep]\n";
        o << "axis = " << axis_name(cfg.sweep->axis) << "\n";
        o << "values = ";
        for (std::size_t i = 0; i < cfg.sweep->values.size(); ++i) {
            if (i) o << ",";
            o << fmt(cfg.sweep->values[i]);
        }
        o << "\n";
    }
    return o.str();
}

}  // namespace nslink
