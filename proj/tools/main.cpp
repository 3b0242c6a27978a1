// SPDX-License-Identifier: Apache-2.0
//
// nslink CLI: figure <id> | certify | info.
// Exit codes: 0 = all asserted claims pass, 2 = claim failure,
// 1 = operational error (bad arguments, unreadable config, I/O).

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nslink/config.hpp"
#include "nslink/experiments.hpp"

int main(int argc, char** argv) {
    CLI::App app{"null-space MIMO precoding under imperfect CSI: "
                 "experiment and certification harness"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    std::optional<std::uint64_t> seed_override;

    std::string figure_id_str;
    CLI::App* fig = app.add_subcommand("figure", "run one figure scenario");
    fig->add_option("id", figure_id_str,
                    "ber_vs_distance_gaussian | ber_vs_distance_uniform | "
                    "capacity_vs_su_power | ber_bound_vs_power")
        ->required();
    fig->add_option("--config", config_path, "scenario config file");
    fig->add_option("--seed", seed_override, "override master seed");
    fig->add_option("--out", out_dir, "output directory (default: out)");

    int ensemble = 2000;
    CLI::App* cert = app.add_subcommand("certify", "run bound certification");
    cert->add_option("--ensemble", ensemble, "Weyl/Mirsky ensemble size")
        ->check(CLI::PositiveNumber);
    cert->add_option("--seed", seed_override, "certification seed");
    cert->add_option("--out", out_dir, "output directory (default: out)");

    CLI::App* info = app.add_subcommand("info", "print version and tolerances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // help exits 0; usage errors are operational
    }

    try {
        if (info->parsed()) return nslink::cmd_info();

        if (cert->parsed()) {
            nslink::CertifyOptions opts;
            opts.ensemble = ensemble;
            if (seed_override) opts.seed = *seed_override;
            const int rc = nslink::cmd_certify(opts, out_dir);
            std::cerr << "certify: wrote tables to " << out_dir << "\n";
            return rc;
        }

        nslink::FigureId id;
        if (!nslink::parse_figure_id(figure_id_str, id)) {
            std::cerr << "error: unknown figure id '" << figure_id_str << "'\n";
            return 1;
        }
        nslink::ScenarioConfig cfg;
        if (!config_path.empty()) {
            const nslink::LoadedConfig loaded =
                nslink::parse_config_file(config_path);
            for (const std::string& line : loaded.defaults_applied) {
                std::cerr << "config: " << line << "\n";
            }
            cfg = loaded.config;
        } else {
            cfg = nslink::default_scenario(id);
        }
        if (seed_override) cfg.master_seed = *seed_override;
        const int rc = nslink::cmd_figure(id, cfg, out_dir);
        std::cerr << "figure " << nslink::figure_name(id) << ": "
                  << (rc == 0 ? "claims PASS" : "claims FAIL") << ", outputs in "
                  << out_dir << "\n";
        return rc;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
