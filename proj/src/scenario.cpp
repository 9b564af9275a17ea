#include "landau/scenario.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "landau/io.hpp"
#include "landau/kernel.hpp"

namespace landau {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += "; ";
        out += p;
    }
    return out;
}

}  // namespace

ScenarioError::ScenarioError(std::vector<std::string> violations_)
    : std::runtime_error("scenario validation failed: " + join(violations_)),
      violations(std::move(violations_)) {}

namespace {

class Validator {
public:
    std::vector<std::string> violations;

    void check_keys(const json& obj, const std::string& scope, std::initializer_list<const char*> allowed) {
        for (const auto& item : obj.items()) {
            bool known = false;
            for (const char* k : allowed)
                if (item.key() == k) known = true;
            if (!known) violations.push_back("unknown key '" + scope + item.key() + "'");
        }
    }

    template <typename T>
    bool fetch(const json& obj, const std::string& scope, const char* key, T& out) {
        if (!obj.contains(key)) return false;
        try {
            out = obj.at(key).get<T>();
            return true;
        } catch (const json::exception&) {
            violations.push_back("key '" + scope + key + "' has the wrong type");
            return false;
        }
    }

    bool fetch_vec3(const json& obj, const std::string& scope, const char* key, Vec3& out) {
        std::array<double, 3> a{};
        if (!fetch(obj, scope, key, a)) return false;
        out = {a[0], a[1], a[2]};
        return true;
    }

    void require(bool ok, const std::string& message) {
        if (!ok) violations.push_back(message);
    }
};

MaxwellianSpec parse_component(Validator& val, const json& obj, const std::string& scope) {
    val.check_keys(obj, scope, {"mass", "temperature", "mean"});
    MaxwellianSpec spec;
    val.fetch(obj, scope, "mass", spec.mass);
    val.fetch(obj, scope, "temperature", spec.temperature);
    val.fetch_vec3(obj, scope, "mean", spec.mean);
    val.require(spec.mass > 0.0, scope + "mass must be positive");
    val.require(spec.temperature > 0.0, scope + "temperature must be positive");
    return spec;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ScenarioError({std::string("not a JSON document: ") + e.what()});
    }
    if (!doc.is_object()) throw ScenarioError({"top level must be a JSON object"});

    Validator val;
    Scenario s;
    val.check_keys(doc, "", {"initial_data", "grid", "solver", "monitors"});

    if (doc.contains("initial_data")) {
        const json& init = doc["initial_data"];
        std::string type = "maxwellian";
        val.fetch(init, "initial_data.", "type", type);
        if (type == "maxwellian") {
            s.initial.kind = InitialData::Kind::maxwellian;
            val.check_keys(init, "initial_data.", {"type", "mass", "temperature", "mean"});
            s.initial.components = {parse_component(val, init, "initial_data.")};
        } else if (type == "maxwellian_mixture") {
            s.initial.kind = InitialData::Kind::maxwellian_mixture;
            val.check_keys(init, "initial_data.", {"type", "components"});
            s.initial.components.clear();
            if (init.contains("components") && init["components"].is_array()) {
                int i = 0;
                for (const auto& c : init["components"]) {
                    s.initial.components.push_back(
                        parse_component(val, c, "initial_data.components[" + std::to_string(i) + "]."));
                    ++i;
                }
            }
            val.require(!s.initial.components.empty(), "maxwellian_mixture needs at least one component");
        } else if (type == "compact_bump") {
            s.initial.kind = InitialData::Kind::compact_bump;
            val.check_keys(init, "initial_data.", {"type", "center", "radius", "height", "power"});
            s.initial.components.clear();
            val.fetch_vec3(init, "initial_data.", "center", s.initial.bump_center);
            val.fetch(init, "initial_data.", "radius", s.initial.bump_radius);
            val.fetch(init, "initial_data.", "height", s.initial.bump_height);
            val.fetch(init, "initial_data.", "power", s.initial.bump_power);
            val.require(s.initial.bump_radius > 0.0, "initial_data.radius must be positive");
            val.require(s.initial.bump_height >= 0.0, "initial_data.height must be nonnegative");
            val.require(s.initial.bump_power >= 1, "initial_data.power must be >= 1");
        } else {
            val.violations.push_back("initial_data.type '" + type + "' is not one of maxwellian, "
                                     "maxwellian_mixture, compact_bump");
        }
    }

    if (doc.contains("grid")) {
        const json& grid = doc["grid"];
        val.check_keys(grid, "grid.", {"n", "L"});
        val.fetch(grid, "grid.", "n", s.grid.n);
        val.fetch(grid, "grid.", "L", s.grid.extent);
    }
    val.require(s.grid.n >= 9 && s.grid.n % 2 == 1, "grid.n must be odd and >= 9");
    val.require(s.grid.extent > 0.0, "grid.L must be positive");

    if (doc.contains("solver")) {
        const json& solver = doc["solver"];
        val.check_keys(solver, "solver.",
                       {"dt", "t_final", "scheme", "linear_tol", "coefficient_path", "picard"});
        val.fetch(solver, "solver.", "dt", s.solver.dt);
        val.fetch(solver, "solver.", "t_final", s.solver.t_final);
        val.fetch(solver, "solver.", "linear_tol", s.solver.linear_tol);
        val.fetch(solver, "solver.", "picard", s.solver.picard);
        std::string scheme = "semi_implicit";
        if (val.fetch(solver, "solver.", "scheme", scheme)) {
            if (scheme == "semi_implicit")
                s.solver.scheme = Scheme::semi_implicit;
            else if (scheme == "explicit")
                s.solver.scheme = Scheme::explicit_euler;
            else
                val.violations.push_back("solver.scheme must be 'semi_implicit' or 'explicit'");
        }
        std::string path = "fast";
        if (val.fetch(solver, "solver.", "coefficient_path", path)) {
            if (path == "fast")
                s.solver.coefficient_path = ConvolutionPath::fast;
            else if (path == "direct")
                s.solver.coefficient_path = ConvolutionPath::direct;
            else
                val.violations.push_back("solver.coefficient_path must be 'fast' or 'direct'");
        }
    }
    val.require(s.solver.dt > 0.0, "solver.dt must be positive");
    val.require(s.solver.t_final >= 0.0, "solver.t_final must be nonnegative");
    val.require(s.solver.linear_tol > 0.0 && s.solver.linear_tol <= 1e-4,
                "solver.linear_tol must lie in (0, 1e-4]");

    bool cylinder_given = false;
    if (doc.contains("monitors")) {
        const json& mon = doc["monitors"];
        val.check_keys(mon, "monitors.",
                       {"q", "ball", "alpha", "cylinder", "snapshot_stride", "sample_budget", "seed",
                        "verdict"});
        val.fetch(mon, "monitors.", "q", s.monitors.q);
        val.fetch(mon, "monitors.", "alpha", s.monitors.alpha);
        val.fetch(mon, "monitors.", "snapshot_stride", s.monitors.snapshot_stride);
        val.fetch(mon, "monitors.", "sample_budget", s.monitors.sample_budget);
        val.fetch(mon, "monitors.", "seed", s.monitors.seed);
        val.fetch(mon, "monitors.", "verdict", s.monitors.verdict);
        if (mon.contains("ball")) {
            val.check_keys(mon["ball"], "monitors.ball.", {"center", "radius"});
            val.fetch_vec3(mon["ball"], "monitors.ball.", "center", s.monitors.ball.center);
            val.fetch(mon["ball"], "monitors.ball.", "radius", s.monitors.ball.radius);
        }
        if (mon.contains("cylinder")) {
            cylinder_given = true;
            const json& cyl = mon["cylinder"];
            val.check_keys(cyl, "monitors.cylinder.", {"t_start", "t_end", "center", "radius"});
            double t0 = 0.0, t1 = s.solver.t_final;
            Vec3 c = s.monitors.ball.center;
            double r = s.monitors.ball.radius;
            val.fetch(cyl, "monitors.cylinder.", "t_start", t0);
            val.fetch(cyl, "monitors.cylinder.", "t_end", t1);
            val.fetch_vec3(cyl, "monitors.cylinder.", "center", c);
            val.fetch(cyl, "monitors.cylinder.", "radius", r);
            if (t0 < t1 && r > 0.0) {
                s.monitors.cylinder = Cylinder(t0, t1, c, r);
            } else {
                val.require(t0 < t1, "monitors.cylinder.t_start must precede t_end");
                val.require(r > 0.0, "monitors.cylinder.radius must be positive");
            }
        }
    }
    if (!cylinder_given && s.solver.t_final > 0.0 && s.monitors.ball.radius > 0.0)
        s.monitors.cylinder =
            Cylinder(0.0, s.solver.t_final, s.monitors.ball.center, s.monitors.ball.radius);

    val.require(s.monitors.ball.radius > 0.0, "monitors.ball.radius must be positive");
    val.require(s.monitors.alpha > 0.0 && s.monitors.alpha < 1.0, "monitors.alpha must lie in (0,1)");
    val.require(s.monitors.snapshot_stride >= 1, "monitors.snapshot_stride must be >= 1");
    val.require(s.monitors.sample_budget >= 1, "monitors.sample_budget must be >= 1");
    if (s.monitors.verdict)
        val.require(s.monitors.q > 3.0, "monitors.q must exceed 3 when the regularity verdict is enabled");
    else
        val.require(s.monitors.q >= 1.0, "monitors.q must be >= 1");

    // geometry must sit inside the grid cube
    auto ball_inside = [&](const Ball& b, const std::string& name) {
        for (int d = 0; d < 3; ++d)
            if (std::abs(b.center[d]) + b.radius > s.grid.extent) {
                val.violations.push_back(name + " must lie inside the grid cube [-L, L]^3");
                return;
            }
    };
    ball_inside(s.monitors.ball, "monitors.ball");
    ball_inside(s.monitors.cylinder.ball(), "monitors.cylinder");
    val.require(s.monitors.cylinder.t_start >= 0.0 && s.monitors.cylinder.t_end <= s.solver.t_final + 1e-12,
                "monitors.cylinder time range must lie inside [0, t_final]");
    if (s.initial.kind == InitialData::Kind::compact_bump)
        ball_inside(Ball{s.initial.bump_center, s.initial.bump_radius}, "initial_data bump");

    if (!val.violations.empty()) throw ScenarioError(std::move(val.violations));
    return s;
}

std::string scenario_to_json_text(const Scenario& s) {
    json init;
    switch (s.initial.kind) {
        case InitialData::Kind::maxwellian: {
            const auto& c = s.initial.components.at(0);
            init = {{"type", "maxwellian"},
                    {"mass", c.mass},
                    {"temperature", c.temperature},
                    {"mean", {c.mean.x, c.mean.y, c.mean.z}}};
            break;
        }
        case InitialData::Kind::maxwellian_mixture: {
            json comps = json::array();
            for (const auto& c : s.initial.components)
                comps.push_back({{"mass", c.mass},
                                 {"temperature", c.temperature},
                                 {"mean", {c.mean.x, c.mean.y, c.mean.z}}});
            init = {{"type", "maxwellian_mixture"}, {"components", comps}};
            break;
        }
        case InitialData::Kind::compact_bump:
            init = {{"type", "compact_bump"},
                    {"center", {s.initial.bump_center.x, s.initial.bump_center.y, s.initial.bump_center.z}},
                    {"radius", s.initial.bump_radius},
                    {"height", s.initial.bump_height},
                    {"power", s.initial.bump_power}};
            break;
    }

    const json doc = {
        {"initial_data", init},
        {"grid", {{"n", s.grid.n}, {"L", s.grid.extent}}},
        {"solver",
         {{"dt", s.solver.dt},
          {"t_final", s.solver.t_final},
          {"scheme", s.solver.scheme == Scheme::semi_implicit ? "semi_implicit" : "explicit"},
          {"linear_tol", s.solver.linear_tol},
          {"coefficient_path", s.solver.coefficient_path == ConvolutionPath::fast ? "fast" : "direct"},
          {"picard", s.solver.picard}}},
        {"monitors",
         {{"q", s.monitors.q},
          {"ball",
           {{"center", {s.monitors.ball.center.x, s.monitors.ball.center.y, s.monitors.ball.center.z}},
            {"radius", s.monitors.ball.radius}}},
          {"alpha", s.monitors.alpha},
          {"cylinder",
           {{"t_start", s.monitors.cylinder.t_start},
            {"t_end", s.monitors.cylinder.t_end},
            {"center",
             {s.monitors.cylinder.center.x, s.monitors.cylinder.center.y, s.monitors.cylinder.center.z}},
            {"radius", s.monitors.cylinder.radius}}},
          {"snapshot_stride", s.monitors.snapshot_stride},
          {"sample_budget", s.monitors.sample_budget},
          {"seed", s.monitors.seed},
          {"verdict", s.monitors.verdict}}},
    };
    return doc.dump(2);
}

DistributionField build_initial_data(const Scenario& s) {
    const VelocityGrid grid(s.grid.n, s.grid.extent);
    switch (s.initial.kind) {
        case InitialData::Kind::maxwellian:
        case InitialData::Kind::maxwellian_mixture:
            return make_maxwellian_mixture(grid, s.initial.components);
        case InitialData::Kind::compact_bump:
            return make_compact_bump(grid, s.initial.bump_center, s.initial.bump_radius,
                                     s.initial.bump_height, s.initial.bump_power);
    }
    throw std::logic_error("unreachable initial data kind");
}

int run_scenario(const Scenario& s, const std::filesystem::path& outdir, std::ostream* log) {
    namespace fs = std::filesystem;
    try {
        std::error_code ec;
        fs::create_directories(outdir, ec);
        fs::create_directories(outdir / "snapshots", ec);
        if (ec) {
            if (log) *log << "cannot create output directory: " << ec.message() << "\n";
            return 4;
        }

        const DistributionField f0 = build_initial_data(s);
        DiagnosticsCsvWriter csv(outdir / "diagnostics.csv");
        const MonitorBall monitor{s.monitors.q, s.monitors.ball};

        auto snapshot_path = [&](int k) {
            char name[32];
            std::snprintf(name, sizeof name, "snapshot_%06d.dat", k);
            return outdir / "snapshots" / name;
        };

        const RunResult result =
            run(f0, s.solver, monitor, s.monitors.snapshot_stride,
                [&](const DiagnosticsRecord& r) { csv.write(r); },
                [&](const DistributionField& f, int k) { write_snapshot(snapshot_path(k), f); });

        json manifest = {
            {"config", json::parse(scenario_to_json_text(s))},
            {"seed", s.monitors.seed},
            {"version", kVersion},
            {"completed", result.completed},
            {"steps", result.records.size()},
        };
        if (!result.error.empty()) manifest["error"] = result.error;

        // Hoelder report over the monitor cylinder from the stored snapshots
        if (result.trajectory.snapshots.size() >= 2) {
            const SampleConfig sc{s.monitors.sample_budget, s.monitors.seed, false, false};
            const HolderReport rep =
                holder_1plus(result.trajectory.snapshots, s.monitors.cylinder, s.monitors.alpha, sc);
            std::ofstream out(outdir / "holder_report.json");
            out << to_json(rep).dump(2) << "\n";
            if (!out) throw IoError("write failure on holder_report.json");
            if (s.monitors.verdict) {
                const RegularityVerdict v = regularity_verdict(result.trajectory.snapshots,
                                                               s.monitors.cylinder, s.monitors.q,
                                                               s.monitors.alpha, sc);
                std::ofstream vout(outdir / "verdict.json");
                vout << to_json(v).dump(2) << "\n";
                if (!vout) throw IoError("write failure on verdict.json");
            }
        }

        {
            std::ofstream mout(outdir / "manifest.json");
            mout << manifest.dump(2) << "\n";
            if (!mout) throw IoError("write failure on manifest.json");
        }

        if (!result.completed) {
            if (log) *log << "solver error: " << result.error << "\n";
            return 3;
        }
        return 0;
    } catch (const IoError& e) {
        if (log) *log << e.what() << "\n";
        return 4;
    } catch (const fs::filesystem_error& e) {
        if (log) *log << e.what() << "\n";
        return 4;
    } catch (const StepError& e) {
        if (log) *log << e.what() << "\n";
        return 3;
    }
}

namespace {

struct CheckTable {
    std::ostream& out;
    int failures = 0;

    void row(const std::string& name, bool pass, const std::string& detail) {
        out << (pass ? "PASS" : "FAIL") << "  " << name << "  " << detail << "\n";
        if (!pass) ++failures;
    }
};

}  // namespace

int verify_kernel(int nodes_per_angle, std::ostream& out) {
    CheckTable table{out};
    const double four_pi_3 = 4.0 * std::numbers::pi / 3.0;
    const double four_pi_15 = 4.0 * std::numbers::pi / 15.0;

    {
        const int idx[2] = {0, 0};
        const double v = sphere_moment(2, idx, nodes_per_angle);
        char d[128];
        std::snprintf(d, sizeof d, "integral P1 P1 dsigma = %.5f (expect %.5f)", v, four_pi_3);
        table.row("sphere moment order 2, diagonal", std::abs(v - four_pi_3) < 1e-8, d);
    }
    {
        const int idx[2] = {0, 1};
        const double v = sphere_moment(2, idx, nodes_per_angle);
        char d[64];
        std::snprintf(d, sizeof d, "integral P1 P2 dsigma = %.2e (expect 0)", v);
        table.row("sphere moment order 2, off-diagonal", std::abs(v) < 1e-8, d);
    }
    {
        const int idx[4] = {0, 0, 1, 1};
        const double v = sphere_moment(4, idx, nodes_per_angle);
        char d[128];
        std::snprintf(d, sizeof d, "integral P1 P1 P2 P2 dsigma = %.6f (expect %.6f)", v, four_pi_15);
        table.row("sphere moment order 4, paired", std::abs(v - four_pi_15) < 1e-8, d);
    }
    {
        const double worst = mu_mean_zero_check(std::max(nodes_per_angle, 16));
        char d[64];
        std::snprintf(d, sizeof d, "max |integral mu_kl| = %.2e", worst);
        table.row("Hessian angular part mean-zero", worst < 1e-8, d);
    }

    // finite-difference certification over seeded random points
    std::mt19937_64 rng(7041);
    auto rand_point = [&]() {
        std::uniform_real_distribution<double> logr(std::log(1e-2), std::log(1e2));
        std::normal_distribution<double> gauss;
        Vec3 u{gauss(rng), gauss(rng), gauss(rng)};
        return u * (std::exp(logr(rng)) / u.norm());
    };
    double worst_alg = 0.0, worst_grad = 0.0, worst_hess = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Vec3 z = rand_point();
        const SymMat3 a = a_kernel(z);
        const Vec3 az = a.apply(z);
        worst_alg = std::max(worst_alg, az.norm() * z.norm());  // relative to |a||z| ~ 1
        worst_alg = std::max(worst_alg, std::abs(a.trace() - 2.0 / z.norm()) * z.norm() / 2.0);

        const double step1 = 1e-5 * z.norm();
        const Rank3Sym g = grad_a_kernel(z);
        for (int k = 0; k < 3; ++k)
            for (int i = 0; i < 3; ++i)
                for (int j = i; j < 3; ++j) {
                    Vec3 zp = z, zm = z;
                    zp[k] += step1;
                    zm[k] -= step1;
                    const double fd = (a_kernel(zp)(i, j) - a_kernel(zm)(i, j)) / (2.0 * step1);
                    const double scale = 1.0 / (z.norm() * z.norm());  // magnitude of grad a
                    worst_grad = std::max(worst_grad, std::abs(g(k, i, j) - fd) / scale);
                }
        const double step2 = 1e-3 * z.norm();
        const Rank4Sym hs = hess_a_kernel(z);
        for (int k = 0; k < 3; ++k)
            for (int l = k; l < 3; ++l)
                for (int i = 0; i < 3; ++i)
                    for (int j = i; j < 3; ++j) {
                        double fd;
                        if (k == l) {
                            Vec3 zp = z, zm = z;
                            zp[k] += step2;
                            zm[k] -= step2;
                            fd = (a_kernel(zp)(i, j) - 2.0 * a_kernel(z)(i, j) + a_kernel(zm)(i, j)) /
                                 (step2 * step2);
                        } else {
                            Vec3 zpp = z, zpm = z, zmp = z, zmm = z;
                            zpp[k] += step2; zpp[l] += step2;
                            zpm[k] += step2; zpm[l] -= step2;
                            zmp[k] -= step2; zmp[l] += step2;
                            zmm[k] -= step2; zmm[l] -= step2;
                            fd = (a_kernel(zpp)(i, j) - a_kernel(zpm)(i, j) - a_kernel(zmp)(i, j) +
                                  a_kernel(zmm)(i, j)) /
                                 (4.0 * step2 * step2);
                        }
                        const double scale = 1.0 / std::pow(z.norm(), 3);
                        worst_hess = std::max(worst_hess, std::abs(hs(k, l, i, j) - fd) / scale);
                    }
    }
    {
        char d[64];
        std::snprintf(d, sizeof d, "max scaled residual %.2e", worst_alg);
        table.row("a(z) z = 0 and trace a = 2/|z|", worst_alg < 1e-12, d);
    }
    {
        char d[64];
        std::snprintf(d, sizeof d, "max scaled deviation %.2e", worst_grad);
        table.row("grad a vs central differences", worst_grad < 1e-5, d);
    }
    {
        char d[64];
        std::snprintf(d, sizeof d, "max scaled deviation %.2e", worst_hess);
        table.row("hess a vs central differences", worst_hess < 1e-5, d);
    }
    return table.failures == 0 ? 0 : 1;
}

int verify_conv(int n, std::ostream& out) {
    CheckTable table{out};
    const VelocityGrid grid(n, 8.0);

    auto max_rel_dev = [&](const DistributionField& f) {
        const MatrixField da = convolve_direct_a(f);
        const VectorField db = convolve_direct_b(f);
        ConvolutionWorkspace ws(grid);
        const MatrixField fa = ws.convolve_a(f);
        const VectorField fb = ws.convolve_b(f);
        double scale = 0.0, dev = 0.0;
        for (int c = 0; c < 6; ++c)
            for (std::size_t i = 0; i < da.comp[c].size(); ++i)
                scale = std::max(scale, std::abs(da.comp[c][i]));
        for (int c = 0; c < 3; ++c)
            for (std::size_t i = 0; i < db.comp[c].size(); ++i)
                scale = std::max(scale, std::abs(db.comp[c][i]));
        for (int c = 0; c < 6; ++c)
            for (std::size_t i = 0; i < da.comp[c].size(); ++i)
                dev = std::max(dev, std::abs(da.comp[c][i] - fa.comp[c][i]));
        for (int c = 0; c < 3; ++c)
            for (std::size_t i = 0; i < db.comp[c].size(); ++i)
                dev = std::max(dev, std::abs(db.comp[c][i] - fb.comp[c][i]));
        return dev / scale;
    };

    {
        const double dev = max_rel_dev(make_maxwellian(grid, {1.0, 1.0, {}}));
        char d[64];
        std::snprintf(d, sizeof d, "max relative deviation %.2e", dev);
        table.row("fast vs direct, Maxwellian", dev < 1e-6, d);
    }
    {
        DistributionField two = make_compact_bump(grid, {2.0, 0.0, 0.0}, 2.0, 1.0, 3);
        const DistributionField other = make_compact_bump(grid, {-2.0, 0.0, 0.0}, 2.0, 0.6, 3);
        for (std::size_t i = 0; i < two.values.size(); ++i) two.values[i] += other.values[i];
        const double dev = max_rel_dev(two);
        char d[64];
        std::snprintf(d, sizeof d, "max relative deviation %.2e", dev);
        table.row("fast vs direct, two-bump", dev < 1e-6, d);
    }
    return table.failures == 0 ? 0 : 1;
}

}  // namespace landau
