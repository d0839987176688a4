// cli.hpp — Batch front end: command configs, geometry file ingestion, and
// deterministic CSV/JSON emission.
//
// Exit codes: 0 all residuals within tolerance, 1 residuals above tolerance,
// 2 invalid configuration, 3 resource cap exceeded, 4 singular detuning.

#pragma once

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "ramanchain/analysis.hpp"
#include "ramanchain/collective.hpp"
#include "ramanchain/raman.hpp"

namespace ramanchain {
namespace cli {

using hilbert::StateVector;

enum class Command { scan_w, scan_partitions, dicke_corr, geometry_fidelity, rate };
enum class OutputFormat { csv, json };

inline const char* command_name(Command c) {
    switch (c) {
        case Command::scan_w: return "scan-w";
        case Command::scan_partitions: return "scan-partitions";
        case Command::dicke_corr: return "dicke-corr";
        case Command::geometry_fidelity: return "geometry-fidelity";
        case Command::rate: return "rate";
    }
    return "?";
}

struct RunConfig {
    Command command = Command::scan_partitions;
    int n_max = 6;                 // scan commands
    int n = 3;                     // geometry-fidelity
    int n_i = 1, n_l = 0, n_f = 0; // rate
    double detuning = 1.0;
    std::optional<std::string> geometry_path;
    OutputFormat format = OutputFormat::csv;
    std::string out_path;          // empty: stdout
    double tolerance = 1e-9;
};

// --------------------------- Geometry file ----------------------------------

// {"positions": [[x,y,z],...], "k_laser": [x,y,z], "k_scattered": [x,y,z]}
inline raman::Geometry load_geometry(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("load_geometry: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("load_geometry: " + path + ": " + e.what());
    }

    auto vec3 = [](const nlohmann::json& node, const char* what) {
        if (!node.is_array() || node.size() != 3)
            throw std::invalid_argument(std::string("load_geometry: ") + what +
                                        " must be [x, y, z]");
        return Eigen::Vector3d(node[0].get<double>(), node[1].get<double>(),
                               node[2].get<double>());
    };

    raman::Geometry g;
    if (!j.contains("positions") || !j["positions"].is_array() || j["positions"].empty())
        throw std::invalid_argument("load_geometry: positions array required");
    for (const auto& p : j["positions"]) g.positions.push_back(vec3(p, "position"));
    g.k_laser = vec3(j.at("k_laser"), "k_laser");
    g.k_scattered = vec3(j.at("k_scattered"), "k_scattered");
    return g;
}

// --------------------------- Result table -----------------------------------

using Cell = std::variant<long long, double>;

struct Table {
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    int residual_column = -1;  // index into columns, or -1
};

inline std::string format_cell(const Cell& cell) {
    char buf[48];
    if (std::holds_alternative<long long>(cell))
        std::snprintf(buf, sizeof(buf), "%lld", std::get<long long>(cell));
    else
        std::snprintf(buf, sizeof(buf), "%.12g", std::get<double>(cell));
    return buf;
}

inline std::string to_csv(const Table& t) {
    std::ostringstream out;
    out << "# ramanchain " << t.command << " csv schema v1\n";
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        out << (c ? "," : "") << t.columns[c];
    out << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? "," : "") << format_cell(row[c]);
        out << "\n";
    }
    return out.str();
}

inline std::string to_json(const Table& t) {
    nlohmann::ordered_json j;
    j["command"] = t.command;
    j["schema"] = "v1";
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (std::holds_alternative<long long>(row[c]))
                obj[t.columns[c]] = std::get<long long>(row[c]);
            else
                obj[t.columns[c]] = std::get<double>(row[c]);
        }
        j["rows"].push_back(obj);
    }
    return j.dump(2) + "\n";
}

// --------------------------- Command execution ------------------------------

namespace detail {

inline Table make_scan_w(int n_max, const raman::RamanConfig& cfg) {
    if (n_max < 2) throw std::invalid_argument("scan-w: need n_max >= 2");
    if (n_max > analysis::kScanAtomCap)
        throw resource_limit_error("scan-w: n_max exceeds cap " +
                                   std::to_string(analysis::kScanAtomCap));
    Table t{"scan-w", {"N", "formula", "bruteforce", "residual"}, {}, 3};
    for (int n = 2; n <= n_max; ++n) {
        const double formula = analysis::enhancement_formula(n - 1, 0, 1);
        const double brute = analysis::enhancement_bruteforce(n - 1, 0, 1, cfg);
        t.rows.push_back({static_cast<long long>(n), formula, brute,
                          std::abs(formula - brute)});
    }
    return t;
}

inline Table make_scan_partitions(int n_max, const raman::RamanConfig& cfg) {
    Table t{"scan-partitions",
            {"N", "n_i", "n_l", "n_f", "formula", "bruteforce", "residual"},
            {},
            6};
    for (const auto& rec : analysis::scan_partitions(n_max, cfg)) {
        t.rows.push_back({static_cast<long long>(rec.num_atoms),
                          static_cast<long long>(rec.n_i), static_cast<long long>(rec.n_l),
                          static_cast<long long>(rec.n_f), rec.formula_value,
                          rec.bruteforce_value, rec.residual});
    }
    return t;
}

inline Table make_dicke_corr(int n_max) {
    if (n_max < 2) throw std::invalid_argument("dicke-corr: need n_max >= 2");
    if (n_max > analysis::kScanAtomCap)
        throw resource_limit_error("dicke-corr: n_max exceeds cap " +
                                   std::to_string(analysis::kScanAtomCap));
    Table t{"dicke-corr", {"N", "correlation"}, {}, -1};
    for (int n = 2; n <= n_max; n += 2)  // M = 0 needs an even chain
        t.rows.push_back({static_cast<long long>(n), analysis::dicke_pair_correlation(n, 0.0)});
    return t;
}

inline Table make_geometry_fidelity(const RunConfig& rc, const raman::RamanConfig& cfg) {
    if (rc.n < 2) throw std::invalid_argument("geometry-fidelity: need n >= 2");
    raman::Geometry g =
        rc.geometry_path ? load_geometry(*rc.geometry_path) : raman::Geometry::uniform(rc.n);
    if (g.num_atoms() != rc.n)
        throw std::invalid_argument("geometry-fidelity: geometry atom count differs from --n");

    const StateVector initial = collective::embed_collective({rc.n - 1, 0, 1});
    const StateVector target = collective::embed_collective({rc.n - 2, 0, 2});
    const raman::ScatteredState scattered = raman::scattered_state(initial, cfg, g);
    Table t{"geometry-fidelity", {"N", "fidelity", "squared_norm"}, {}, -1};
    t.rows.push_back({static_cast<long long>(rc.n),
                      states::fidelity(scattered.state, target), scattered.squared_norm});
    return t;
}

inline Table make_rate(const RunConfig& rc, const raman::RamanConfig& cfg) {
    const int num_atoms = rc.n_i + rc.n_l + rc.n_f;
    if (num_atoms < 1 || rc.n_i < 0 || rc.n_l < 0 || rc.n_f < 0)
        throw std::invalid_argument("rate: invalid occupations");
    if (num_atoms > analysis::kScanAtomCap)
        throw resource_limit_error("rate: N exceeds cap " +
                                   std::to_string(analysis::kScanAtomCap));
    raman::Geometry g = rc.geometry_path ? load_geometry(*rc.geometry_path)
                                         : raman::Geometry::uniform(num_atoms);
    if (g.num_atoms() != num_atoms)
        throw std::invalid_argument("rate: geometry atom count differs from occupations");

    const StateVector initial = collective::embed_collective({rc.n_i, rc.n_l, rc.n_f});
    Table t{"rate", {"N", "n_i", "n_l", "n_f", "total_rate"}, {}, -1};
    t.rows.push_back({static_cast<long long>(num_atoms), static_cast<long long>(rc.n_i),
                      static_cast<long long>(rc.n_l), static_cast<long long>(rc.n_f),
                      raman::total_rate(initial, cfg, g)});
    return t;
}

} // namespace detail

inline Table make_table(const RunConfig& rc) {
    const raman::RamanConfig cfg = raman::RamanConfig::with_detuning(rc.detuning);
    switch (rc.command) {
        case Command::scan_w: return detail::make_scan_w(rc.n_max, cfg);
        case Command::scan_partitions: return detail::make_scan_partitions(rc.n_max, cfg);
        case Command::dicke_corr: return detail::make_dicke_corr(rc.n_max);
        case Command::geometry_fidelity: return detail::make_geometry_fidelity(rc, cfg);
        case Command::rate: return detail::make_rate(rc, cfg);
    }
    throw std::invalid_argument("run: unknown command");
}

// Computes the table, writes it, and maps errors to exit codes. Output is a
// pure function of the config: identical bytes across repeat runs.
inline int run(const RunConfig& rc, std::ostream& diagnostics = std::cerr) {
    Table table;
    try {
        if (!(rc.tolerance > 0.0))
            throw std::invalid_argument("run: tolerance must be positive");
        table = make_table(rc);
    } catch (const singular_denominator_error& e) {
        diagnostics << "error: " << e.what() << "\n";
        return 4;
    } catch (const resource_limit_error& e) {
        diagnostics << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        diagnostics << "error: " << e.what() << "\n";
        return 2;
    }

    const std::string payload =
        rc.format == OutputFormat::csv ? to_csv(table) : to_json(table);
    if (rc.out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(rc.out_path, std::ios::binary);
        if (!out) {
            diagnostics << "error: cannot write " << rc.out_path << "\n";
            return 2;
        }
        out << payload;
    }

    if (table.residual_column >= 0) {
        for (const auto& row : table.rows) {
            const double residual = std::get<double>(row[static_cast<std::size_t>(
                table.residual_column)]);
            if (!(residual <= rc.tolerance)) return 1;
        }
    }
    return 0;
}

} // namespace cli
} // namespace ramanchain
