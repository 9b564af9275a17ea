#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "landau/io.hpp"
#include "landau/scenario.hpp"

namespace fs = std::filesystem;

namespace {

int cmd_run(const std::string& config_path, const std::string& outdir) {
    std::ifstream in(config_path);
    if (!in) {
        std::cerr << "cannot open config: " << config_path << "\n";
        return 4;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    landau::Scenario scenario;
    try {
        scenario = landau::parse_scenario(buf.str());
    } catch (const landau::ScenarioError& err) {
        std::cerr << "invalid scenario (" << err.violations.size() << " violation(s)):\n";
        for (const auto& v : err.violations) std::cerr << "  - " << v << "\n";
        return 2;
    }
    return landau::run_scenario(scenario, outdir, &std::cerr);
}

int cmd_norms(const std::string& snapshot_dir, double alpha, double q, double radius, std::size_t budget,
              std::uint64_t seed) {
    std::vector<fs::path> files;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(snapshot_dir, ec))
        if (entry.path().extension() == ".dat") files.push_back(entry.path());
    if (ec || files.empty()) {
        std::cerr << "no .dat snapshots under " << snapshot_dir << "\n";
        return 4;
    }
    std::sort(files.begin(), files.end());

    std::vector<landau::DistributionField> snaps;
    try {
        for (const auto& p : files) snaps.push_back(landau::read_snapshot(p));
    } catch (const landau::IoError& e) {
        std::cerr << e.what() << "\n";
        return 4;
    }
    std::sort(snaps.begin(), snaps.end(),
              [](const auto& a, const auto& b) { return a.time < b.time; });

    try {
        const landau::Cylinder cyl(snaps.front().time, snaps.back().time, {}, radius);
        const landau::SampleConfig sc{budget, seed, false, false};
        const landau::HolderReport rep = landau::holder_1plus(snaps, cyl, alpha, sc);
        std::ofstream hout(fs::path(snapshot_dir) / "holder_report.json");
        hout << landau::to_json(rep).dump(2) << "\n";
        std::cout << "holder report: space quotient " << rep.space_quotient << ", time quotient "
                  << rep.time_quotient << "\n";
        if (q > 3.0) {
            const landau::RegularityVerdict v = landau::regularity_verdict(snaps, cyl, q, alpha, sc);
            std::ofstream vout(fs::path(snapshot_dir) / "verdict.json");
            vout << landau::to_json(v).dump(2) << "\n";
            std::cout << "verdict: S0 = " << v.s0 << ", hypothesis "
                      << (v.hypothesis_held ? "held" : "violated") << "\n";
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Landau-Coulomb collision workbench"};
    app.require_subcommand(1);

    std::string config_path, outdir = "out";
    auto* run_cmd = app.add_subcommand("run", "execute a scenario and write its artifacts");
    run_cmd->add_option("config", config_path, "scenario JSON document")->required();
    run_cmd->add_option("-o,--output", outdir, "output directory");

    std::string suite;
    int conv_n = 17, nodes = 64;
    auto* verify_cmd = app.add_subcommand("verify", "run a self-check suite");
    verify_cmd->add_option("suite", suite, "kernel | conv")->required();
    verify_cmd->add_option("--n", conv_n, "grid points per axis for the conv suite");
    verify_cmd->add_option("--nodes", nodes, "sphere quadrature nodes per angle");

    std::string snapshot_dir;
    double alpha = 0.5, q = 4.0, radius = 2.0;
    std::size_t budget = 100000;
    std::uint64_t seed = 1234;
    auto* norms_cmd = app.add_subcommand("norms", "re-run diagnostics on stored snapshots");
    norms_cmd->add_option("dir", snapshot_dir, "directory of LANDAU1 snapshots")->required();
    norms_cmd->add_option("--alpha", alpha, "Hoelder exponent in (0,1)");
    norms_cmd->add_option("--q", q, "Lebesgue exponent for the verdict (needs q > 3)");
    norms_cmd->add_option("--radius", radius, "ball radius of the monitored cylinder");
    norms_cmd->add_option("--budget", budget, "pair sample budget");
    norms_cmd->add_option("--seed", seed, "sampling seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*run_cmd) return cmd_run(config_path, outdir);
    if (*verify_cmd) {
        if (suite == "kernel") return landau::verify_kernel(nodes, std::cout);
        if (suite == "conv") return landau::verify_conv(conv_n, std::cout);
        std::cerr << "unknown suite '" << suite << "' (expected kernel or conv)\n";
        return 2;
    }
    if (*norms_cmd) return cmd_norms(snapshot_dir, alpha, q, radius, budget, seed);
    return 2;
}
