#include "landau/io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <sstream>

namespace landau {

namespace {

std::string format_g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void byteswap_doubles(std::vector<double>& values) {
    for (double& v : values) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, 8);
        bits = __builtin_bswap64(bits);
        std::memcpy(&v, &bits, 8);
    }
}

}  // namespace

void write_snapshot(const std::filesystem::path& path, const DistributionField& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open snapshot for writing: " + path.string());
    out << "LANDAU1 n=" << f.grid.n << " L=" << format_g17(f.grid.extent) << " t=" << format_g17(f.time)
        << "\n";
    if constexpr (std::endian::native == std::endian::little) {
        out.write(reinterpret_cast<const char*>(f.values.data()),
                  static_cast<std::streamsize>(f.values.size() * sizeof(double)));
    } else {
        std::vector<double> swapped = f.values;
        byteswap_doubles(swapped);
        out.write(reinterpret_cast<const char*>(swapped.data()),
                  static_cast<std::streamsize>(swapped.size() * sizeof(double)));
    }
    if (!out) throw IoError("short write on snapshot: " + path.string());
}

DistributionField read_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open snapshot: " + path.string());
    std::string header;
    if (!std::getline(in, header)) throw IoError("missing snapshot header: " + path.string());

    int n = 0;
    double extent = 0.0, time = 0.0;
    if (std::sscanf(header.c_str(), "LANDAU1 n=%d L=%lf t=%lf", &n, &extent, &time) != 3)
        throw IoError("unrecognized snapshot header: " + path.string());

    DistributionField f{VelocityGrid(n, extent), time};
    f.values.resize(f.grid.size());
    in.read(reinterpret_cast<char*>(f.values.data()),
            static_cast<std::streamsize>(f.values.size() * sizeof(double)));
    if (in.gcount() != static_cast<std::streamsize>(f.values.size() * sizeof(double)))
        throw IoError("snapshot payload shorter than n^3 values: " + path.string());
    if (in.peek() != std::char_traits<char>::eof())
        throw IoError("snapshot payload longer than n^3 values: " + path.string());
    if constexpr (std::endian::native != std::endian::little) byteswap_doubles(f.values);
    return f;
}

DiagnosticsCsvWriter::DiagnosticsCsvWriter(const std::filesystem::path& path) : out_(path) {
    if (!out_) throw IoError("cannot open diagnostics CSV: " + path.string());
    out_ << header << "\n";
    out_.flush();
}

void DiagnosticsCsvWriter::write(const DiagnosticsRecord& r) {
    const double cols[] = {r.time,   r.mass,    r.px,      r.py,         r.pz,
                           r.energy, r.entropy, r.fisher,  r.lq,         r.ellip_c,
                           r.ellip_C, r.negativity, r.trunc_mass, r.lin_res};
    bool first = true;
    for (double c : cols) {
        if (!first) out_ << ',';
        out_ << format_g17(c);
        first = false;
    }
    out_ << '\n';
    out_.flush();
    if (!out_) throw IoError("write failure on diagnostics CSV");
}

nlohmann::json to_json(const HolderReport& rep) {
    return nlohmann::json{
        {"alpha", rep.alpha},
        {"cylinder",
         {{"t_start", rep.cylinder.t_start},
          {"t_end", rep.cylinder.t_end},
          {"center", {rep.cylinder.center.x, rep.cylinder.center.y, rep.cylinder.center.z}},
          {"radius", rep.cylinder.radius}}},
        {"space_quotient", rep.space_quotient},
        {"time_quotient", rep.time_quotient},
        {"derivative_space_quotients", rep.derivative_space_quotients},
        {"derivative_time_quotients", rep.derivative_time_quotients},
        {"weighted_star_norms", rep.weighted_star_norms},
        {"pair_sample_size", rep.pair_sample_size},
        {"sup_is_lower_bound", true},  // suprema are over the declared sample
    };
}

nlohmann::json to_json(const RegularityVerdict& v) {
    auto cyl = [](const Cylinder& c) {
        return nlohmann::json{{"t_start", c.t_start},
                              {"t_end", c.t_end},
                              {"center", {c.center.x, c.center.y, c.center.z}},
                              {"radius", c.radius}};
    };
    return nlohmann::json{
        {"q", v.q},
        {"alpha", v.alpha},
        {"s0", v.s0},
        {"hypothesis_held", v.hypothesis_held},
        {"monitored", cyl(v.monitored)},
        {"inner", cyl(v.inner)},
        {"norm_f", v.norm_f},
        {"norm_d1", v.norm_d1},
        {"norm_d2", v.norm_d2},
        {"norm_dt", v.norm_dt},
    };
}

}  // namespace landau
