#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ramanchain/cli.hpp"

using namespace ramanchain;
using namespace ramanchain::cli;
using Catch::Matchers::WithinAbs;

namespace {

namespace fs = std::filesystem;

fs::path temp_path(const std::string& name) {
    return fs::temp_directory_path() / ("ramanchain_test_" + name);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split(const std::string& line, char sep = ',') {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, sep)) out.push_back(field);
    return out;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("scan-partitions emits a versioned, deterministic CSV", "[cli]") {
    RunConfig rc;
    rc.command = Command::scan_partitions;
    rc.n_max = 3;
    rc.out_path = temp_path("scan_partitions.csv").string();
    REQUIRE(run(rc) == 0);

    const std::string first = slurp(rc.out_path);
    const auto rows = lines_of(first);
    REQUIRE(rows.size() >= 2 + 10);
    CHECK(rows[0] == "# ramanchain scan-partitions csv schema v1");
    CHECK(rows[1] == "N,n_i,n_l,n_f,formula,bruteforce,residual");

    bool found = false;
    for (std::size_t k = 2; k < rows.size(); ++k) {
        const auto fields = split(rows[k]);
        REQUIRE(fields.size() == 7);
        if (fields[0] == "3" && fields[1] == "2" && fields[2] == "0" && fields[3] == "1") {
            found = true;
            CHECK_THAT(std::stod(fields[4]), WithinAbs(4.0 / 3.0, 1e-9));
            CHECK_THAT(std::stod(fields[5]), WithinAbs(4.0 / 3.0, 1e-9));
            CHECK(std::stod(fields[6]) <= 1e-9);
        }
    }
    REQUIRE(found);

    rc.out_path = temp_path("scan_partitions_again.csv").string();
    REQUIRE(run(rc) == 0);
    REQUIRE(slurp(rc.out_path) == first);
}

TEST_CASE("scan-w reports the W enhancement against the formula", "[cli]") {
    RunConfig rc;
    rc.command = Command::scan_w;
    rc.n_max = 3;
    rc.out_path = temp_path("scan_w.csv").string();
    REQUIRE(run(rc) == 0);

    const auto rows = lines_of(slurp(rc.out_path));
    REQUIRE(rows.size() == 2 + 2);  // N = 2, 3
    CHECK(rows[1] == "N,formula,bruteforce,residual");
    const auto n3 = split(rows[3]);
    REQUIRE(n3.size() == 4);
    CHECK(n3[0] == "3");
    // the CSV keeps 12 significant digits, so allow the serialization loss
    CHECK_THAT(std::stod(n3[1]), WithinAbs(4.0 / 3.0, 1e-11));
    CHECK_THAT(std::stod(n3[2]), WithinAbs(4.0 / 3.0, 1e-9));

    char expected[48];
    std::snprintf(expected, sizeof(expected), "%.12g", 4.0 / 3.0);
    CHECK(n3[1] == expected);
}

TEST_CASE("dicke-corr lists even chains", "[cli]") {
    RunConfig rc;
    rc.command = Command::dicke_corr;
    rc.n_max = 4;
    rc.out_path = temp_path("dicke.csv").string();
    REQUIRE(run(rc) == 0);

    const auto rows = lines_of(slurp(rc.out_path));
    REQUIRE(rows.size() == 2 + 2);
    CHECK(rows[1] == "N,correlation");
    CHECK(rows[2] == "2,0.5");
    const auto n4 = split(rows[3]);
    CHECK(n4[0] == "4");
    CHECK_THAT(std::stod(n4[1]), WithinAbs(4.0 / 12.0, 1e-12));
}

TEST_CASE("json output round-trips", "[cli]") {
    RunConfig rc;
    rc.command = Command::scan_w;
    rc.n_max = 3;
    rc.format = OutputFormat::json;
    rc.out_path = temp_path("scan_w.json").string();
    REQUIRE(run(rc) == 0);

    const nlohmann::json j = nlohmann::json::parse(slurp(rc.out_path));
    CHECK(j.at("command") == "scan-w");
    CHECK(j.at("schema") == "v1");
    REQUIRE(j.at("rows").size() == 2);
    CHECK(j["rows"][1].at("N") == 3);
    CHECK_THAT(j["rows"][1].at("formula").get<double>(), WithinAbs(4.0 / 3.0, 1e-12));
}

TEST_CASE("geometry files feed the scattering pipeline", "[cli]") {
    const fs::path geom = temp_path("geometry.json");
    {
        std::ofstream out(geom);
        out << R"({"positions": [[1,0,0],[0,1,0],[-1,0.5,0]],)"
            << R"( "k_laser": [0,0,2.0], "k_scattered": [0,0,0.5]})";
    }

    SECTION("load_geometry parses positions and wavevectors") {
        const raman::Geometry g = load_geometry(geom.string());
        REQUIRE(g.num_atoms() == 3);
        CHECK_THAT(g.positions[2].y(), WithinAbs(0.5, 1e-15));
        CHECK_THAT(g.k_laser.z(), WithinAbs(2.0, 1e-15));
    }
    SECTION("atoms in the plane normal to the momentum transfer keep fidelity 1") {
        RunConfig rc;
        rc.command = Command::geometry_fidelity;
        rc.n = 3;
        rc.geometry_path = geom.string();
        rc.out_path = temp_path("geom_fid.csv").string();
        REQUIRE(run(rc) == 0);
        const auto row = split(lines_of(slurp(rc.out_path))[2]);
        REQUIRE(row.size() == 3);
        CHECK(row[0] == "3");
        CHECK_THAT(std::stod(row[1]), WithinAbs(1.0, 1e-12));
        CHECK_THAT(std::stod(row[2]), WithinAbs(4.0, 1e-12));
    }
    SECTION("atom count mismatch is a config error") {
        RunConfig rc;
        rc.command = Command::geometry_fidelity;
        rc.n = 4;
        rc.geometry_path = geom.string();
        rc.out_path = temp_path("geom_mismatch.csv").string();
        std::ostringstream sink;
        CHECK(run(rc, sink) == 2);
        CHECK(!sink.str().empty());
    }
    SECTION("malformed geometry is a config error") {
        const fs::path bad = temp_path("bad_geometry.json");
        {
            std::ofstream out(bad);
            out << R"({"positions": [[1,0]], "k_laser": [0,0,1], "k_scattered": [0,0,1]})";
        }
        RunConfig rc;
        rc.command = Command::geometry_fidelity;
        rc.n = 1;
        rc.geometry_path = bad.string();
        std::ostringstream sink;
        CHECK(run(rc, sink) == 2);
    }
}

TEST_CASE("rate reports the configured collective state", "[cli]") {
    RunConfig rc;
    rc.command = Command::rate;
    rc.out_path = temp_path("rate.csv").string();
    REQUIRE(run(rc) == 0);
    const auto row = split(lines_of(slurp(rc.out_path))[2]);
    REQUIRE(row.size() == 5);
    CHECK(row[0] == "1");
    CHECK_THAT(std::stod(row[4]), WithinAbs(1.0, 1e-12));

    rc.n_i = 2;
    rc.n_l = 0;
    rc.n_f = 1;
    rc.out_path = temp_path("rate_w.csv").string();
    REQUIRE(run(rc) == 0);
    const auto w_row = split(lines_of(slurp(rc.out_path))[2]);
    CHECK_THAT(std::stod(w_row[4]), WithinAbs(4.0, 1e-12));
}

TEST_CASE("exit codes separate config, cap, and singular failures", "[cli]") {
    std::ostringstream sink;

    RunConfig singular;
    singular.command = Command::scan_w;
    singular.detuning = 0.0;
    CHECK(run(singular, sink) == 4);

    RunConfig capped;
    capped.command = Command::scan_partitions;
    capped.n_max = 9;
    CHECK(run(capped, sink) == 3);

    RunConfig invalid;
    invalid.command = Command::geometry_fidelity;
    invalid.n = 1;
    CHECK(run(invalid, sink) == 2);

    RunConfig negative;
    negative.command = Command::rate;
    negative.n_i = -1;
    CHECK(run(negative, sink) == 2);

    RunConfig missing;
    missing.command = Command::rate;
    missing.geometry_path = temp_path("does_not_exist.json").string();
    CHECK(run(missing, sink) == 2);

    RunConfig bad_tolerance;
    bad_tolerance.command = Command::scan_w;
    bad_tolerance.tolerance = 0.0;
    CHECK(run(bad_tolerance, sink) == 2);
}

TEST_CASE("exit code 1 flags residuals above tolerance", "[cli]") {
    double max_residual = 0.0;
    for (const auto& r : analysis::scan_partitions(4))
        max_residual = std::max(max_residual, r.residual);
    REQUIRE(max_residual > 0.0);  // floating-point round-off is visible somewhere

    RunConfig rc;
    rc.command = Command::scan_partitions;
    rc.n_max = 4;
    rc.tolerance = max_residual / 2.0;
    rc.out_path = temp_path("tight_tolerance.csv").string();
    CHECK(run(rc) == 1);
}
