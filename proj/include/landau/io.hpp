#pragma once

#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "landau/diagnostics.hpp"
#include "landau/grid.hpp"
#include "landau/holder.hpp"

namespace landau {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Snapshot raster: one ASCII header line `LANDAU1 n=<n> L=<L> t=<time>`,
/// then n^3 8-byte little-endian IEEE-754 values in x-fastest order.
/// The reader rejects headers it does not understand and payloads whose
/// length is not exactly n^3 values.
void write_snapshot(const std::filesystem::path& path, const DistributionField& f);
DistributionField read_snapshot(const std::filesystem::path& path);

/// One row per step, decimal with 17 significant digits.
class DiagnosticsCsvWriter {
public:
    explicit DiagnosticsCsvWriter(const std::filesystem::path& path);
    void write(const DiagnosticsRecord& r);

    static constexpr const char* header =
        "time,mass,px,py,pz,energy,entropy,fisher,lq,ellip_c,ellip_C,negativity,trunc_mass,lin_res";

private:
    std::ofstream out_;
};

nlohmann::json to_json(const HolderReport& rep);
nlohmann::json to_json(const RegularityVerdict& v);

}  // namespace landau
