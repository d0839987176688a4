// ramanchain CLI — collective Raman scattering scans for entangled atom
// chains. See `ramanchain --help` for commands.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "ramanchain/cli.hpp"

namespace rc = ramanchain::cli;

int main(int argc, char** argv) {
    CLI::App app{"Stimulated Raman scattering rates for chains of three-level atoms\n"
                 "in collective (W / Dicke / symmetric) states."};
    app.require_subcommand(1);

    rc::RunConfig config;
    std::string format = "csv";
    std::string geometry;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--detuning", config.detuning,
                        "Laser detuning from the intermediate level (default 1.0)");
        cmd->add_option("--format", format, "Output format: csv | json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", config.out_path, "Output path (default: stdout)");
        cmd->add_option("--tolerance", config.tolerance,
                        "Residual tolerance for the exit status (default 1e-9)");
    };

    CLI::App* scan_w =
        app.add_subcommand("scan-w", "W-state enhancement factor for N = 2..n-max");
    scan_w->add_option("--n-max", config.n_max, "Largest chain length (<= 8)");
    add_common(scan_w);

    CLI::App* scan_partitions = app.add_subcommand(
        "scan-partitions", "Enhancement formula vs brute force over every occupation "
                           "partition with at least one absorber, N = 1..n-max");
    scan_partitions->add_option("--n-max", config.n_max, "Largest chain length (<= 8)");
    add_common(scan_partitions);

    CLI::App* dicke = app.add_subcommand(
        "dicke-corr", "Pair correlation of the half-excited Dicke state, even N = 2..n-max");
    dicke->add_option("--n-max", config.n_max, "Largest chain length (<= 8)");
    add_common(dicke);

    CLI::App* geom = app.add_subcommand(
        "geometry-fidelity",
        "Fidelity of the once-scattered W state with its symmetric target");
    geom->add_option("--n", config.n, "Chain length (>= 2)");
    geom->add_option("--geometry", geometry, "Geometry JSON file (default: uniform phases)");
    add_common(geom);

    CLI::App* rate = app.add_subcommand("rate", "Total Raman rate of one collective state");
    rate->add_option("--ni", config.n_i, "Atoms in the initial level (default 1)");
    rate->add_option("--nl", config.n_l, "Atoms in the intermediate level (default 0)");
    rate->add_option("--nf", config.n_f, "Atoms in the final level (default 0)");
    rate->add_option("--geometry", geometry, "Geometry JSON file (default: uniform phases)");
    add_common(rate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad flags are a config error
    }

    if (scan_w->parsed()) config.command = rc::Command::scan_w;
    if (scan_partitions->parsed()) config.command = rc::Command::scan_partitions;
    if (dicke->parsed()) config.command = rc::Command::dicke_corr;
    if (geom->parsed()) config.command = rc::Command::geometry_fidelity;
    if (rate->parsed()) config.command = rc::Command::rate;
    if (!geometry.empty()) config.geometry_path = geometry;
    config.format = (format == "json") ? rc::OutputFormat::json : rc::OutputFormat::csv;

    return rc::run(config);
}
