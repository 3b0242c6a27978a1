// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <string>

#include "nslink/config.hpp"

using namespace nslink;

TEST_CASE("minimal file yields the default scenario and logs every default") {
    const LoadedConfig lc = parse_config_text("master_seed = 5\n");
    ScenarioConfig expect;
    expect.master_seed = 5;
    CHECK(lc.config == expect);
    CHECK(lc.config.n_rx == 2);
    CHECK(lc.config.rician_k == 3.0);
    CHECK(lc.config.threshold == 0.1);
    CHECK(lc.config.threshold_mode == ThresholdMode::relative);
    CHECK_FALSE(lc.config.sweep.has_value());

    CHECK(lc.defaults_applied.size() >= 10);
    bool saw_nrx = false, saw_seed = false;
    for (const auto& line : lc.defaults_applied) {
        if (line.find("n_rx") != std::string::npos) saw_nrx = true;
        if (line.find("master_seed") != std::string::npos) saw_seed = true;
    }
    CHECK(saw_nrx);
    CHECK_FALSE(saw_seed);  // explicitly given, must not be logged as default
}

TEST_CASE("unknown keys and sections are fatal and named") {
    CHECK_THROWS_WITH_AS((void)parse_config_text("wibble = 1\n"),
                         doctest::Contains("wibble"), std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)parse_config_text("[budget]\nwobble = 1\n"),
                         doctest::Contains("budget.wobble"), std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)parse_config_text("[nonsense]\n"),
                         doctest::Contains("nonsense"), std::invalid_argument);
}

TEST_CASE("invariant violations carry the field name") {
    CHECK_THROWS_WITH_AS((void)parse_config_text("n_rx = 0\n"),
                         doctest::Contains("n_rx"), std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)parse_config_text("rician_k = -1\n"),
                         doctest::Contains("rician_k"), std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)parse_config_text("[budget]\ne_p = 0\n"),
                         doctest::Contains("e_p"), std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)parse_config_text("[budget]\nattenuation = 5\n"),
                         doctest::Contains("attenuation"), std::invalid_argument);
}

TEST_CASE("perturbation family and scale must agree") {
    CHECK_THROWS_AS((void)parse_config_text("[perturbation]\nscale = 0.5\n"),
                    std::invalid_argument);  // family stays none
    CHECK_THROWS_AS(
        (void)parse_config_text("[perturbation]\nfamily = gaussian\nscale = 0\n"),
        std::invalid_argument);
    const LoadedConfig ok =
        parse_config_text("[perturbation]\nfamily = uniform\nscale = 0.3\n");
    CHECK(ok.config.perturbation.family == PerturbationFamily::uniform);
    CHECK(ok.config.perturbation.scale == 0.3);
}

TEST_CASE("duplicate keys are rejected") {
    CHECK_THROWS_AS((void)parse_config_text("n_rx = 2\nn_rx = 3\n"),
                    std::invalid_argument);
}

TEST_CASE("malformed values are rejected with the key name") {
    CHECK_THROWS_WITH_AS((void)parse_config_text("trials = banana\n"),
                         doctest::Contains("trials"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_config_text("n_rx\n"), std::invalid_argument);
}

TEST_CASE("sweep needs axis and values together, each valid for the axis") {
    CHECK_THROWS_AS((void)parse_config_text("[sweep]\naxis = distance\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)parse_config_text("[sweep]\nvalues = 1,2\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        (void)parse_config_text("[sweep]\naxis = distance\nvalues = 0.5,2\n"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        (void)parse_config_text("[sweep]\naxis = error_scale\nvalues = -0.1\n"),
        std::invalid_argument);

    // dB axis admits negative values
    const LoadedConfig db =
        parse_config_text("[sweep]\naxis = su_power\nvalues = -10, 0, 10\n");
    REQUIRE(db.config.sweep.has_value());
    CHECK(db.config.sweep->axis == SweepAxis::su_power);
    CHECK(db.config.sweep->values == std::vector<double>{-10.0, 0.0, 10.0});
}

TEST_CASE("comments and blank lines are ignored") {
    const LoadedConfig lc = parse_config_text(
        "# leading comment\n\nn_tx = 3   # trailing comment\n\n");
    CHECK(lc.config.n_tx == 3);
}

TEST_CASE("serialize/parse round-trips to an equal config") {
    ScenarioConfig cfg;
    cfg.n_rx = 4;
    cfg.n_tx = 3;
    cfg.rician_k = 1.5;
    cfg.threshold = 0.25;
    cfg.threshold_mode = ThresholdMode::absolute;
    cfg.bits_per_trial = 123;
    cfg.trials = 7;
    cfg.master_seed = 987654321;
    cfg.perturbation = {PerturbationFamily::uniform, 0.05};
    cfg.budget.e_p = 2.5;
    cfg.budget.e_s = 0.0;
    cfg.budget.n_0 = 0.7;
    cfg.budget.path.distance = 3.0;
    cfg.budget.path.attenuation = 2.5;
    cfg.sweep = SweepSpec{SweepAxis::su_power, {-10.0, -2.0, 0.0, 12.5}};

    const std::string text = serialize_config(cfg);
    const LoadedConfig back = parse_config_text(text);
    CHECK(back.config == cfg);
    CHECK(back.defaults_applied.empty());  // a full file defaults nothing

    // and the round trip is a fixed point of serialization
    CHECK(serialize_config(back.config) == text);
}

TEST_CASE("missing file is an I/O error, not a parse error") {
    CHECK_THROWS_AS((void)parse_config_file("/nonexistent/path/x.cfg"),
                    std::runtime_error);
}

TEST_CASE("axis names round-trip") {
    CHECK(std::string(axis_name(SweepAxis::distance)) == "distance");
    CHECK(std::string(axis_name(SweepAxis::su_power)) == "su_power");
    CHECK(std::string(axis_name(SweepAxis::error_scale)) == "error_scale");
    CHECK(std::string(axis_name(SweepAxis::threshold)) == "threshold");
}
