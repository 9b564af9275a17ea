#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "landau/grid.hpp"
#include "landau/holder.hpp"
#include "landau/solver.hpp"

namespace landau {

inline constexpr const char* kVersion = "0.1.0";

struct GridConfig {
    int n{33};
    double extent{8.0};
    bool operator==(const GridConfig&) const = default;
};

struct InitialData {
    enum class Kind { maxwellian, maxwellian_mixture, compact_bump };
    Kind kind{Kind::maxwellian};
    std::vector<MaxwellianSpec> components{MaxwellianSpec{}};  // maxwellian kinds
    Vec3 bump_center{};                                        // compact_bump
    double bump_radius{2.0};
    double bump_height{1.0};
    int bump_power{2};
    bool operator==(const InitialData&) const = default;
};

struct MonitorConfig {
    double q{4.0};
    Ball ball{Vec3{}, 2.0};
    double alpha{0.5};
    Cylinder cylinder{};  // defaults to (0, t_final) x ball
    int snapshot_stride{10};
    std::size_t sample_budget{100000};
    std::uint64_t seed{1234};
    bool verdict{true};
    bool operator==(const MonitorConfig&) const = default;
};

struct Scenario {
    InitialData initial;
    GridConfig grid;
    SolverConfig solver;
    MonitorConfig monitors;
    bool operator==(const Scenario&) const = default;
};

class ScenarioError : public std::runtime_error {
public:
    explicit ScenarioError(std::vector<std::string> violations_);
    std::vector<std::string> violations;
};

/// Parse + validate a scenario document (JSON). Reports every violation,
/// not just the first; unknown keys are named. Defaults: n=33, L=8, dt=1e-3.
Scenario parse_scenario(const std::string& text);

/// Resolved configuration as a JSON document; parse_scenario applied to it
/// reproduces the identical Scenario.
std::string scenario_to_json_text(const Scenario& s);

DistributionField build_initial_data(const Scenario& s);

/// Execute the scenario and emit diagnostics.csv, holder_report.json,
/// verdict.json (when enabled), snapshots/ and manifest.json under outdir.
/// Exit semantics: 0 completed, 3 solver error (partial artifacts flushed),
/// 4 I/O failure.
int run_scenario(const Scenario& s, const std::filesystem::path& outdir, std::ostream* log = nullptr);

/// Self-check suites behind `landau verify`; print a pass/fail table and
/// return 0 iff every line passes.
int verify_kernel(int nodes_per_angle, std::ostream& out);
int verify_conv(int n, std::ostream& out);

}  // namespace landau
