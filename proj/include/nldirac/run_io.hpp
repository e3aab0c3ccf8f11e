#pragma once
#include <string>
#include <vector>

#include "nldirac/decay.hpp"
#include "nldirac/dynamics.hpp"

namespace nldirac {

// timeseries.csv: one row per recording, %.17g throughout, LF line endings,
// no timestamps or machine identifiers (reruns must be byte-identical).
// Columns: t, mass, energy, j1, k1t, j2, k2t, j_total, h_total, n1, n2, n3,
// n4, dj_rhs, dh_rhs, linf, l2_rdr, e_delta, then one local_l2@R column per
// tracked radius.
void write_timeseries(const std::string& path, const RunRecord& run);

struct TimeseriesTable {
    std::vector<std::string> columns;
    std::vector<Vec> rows;

    std::size_t column(const std::string& name) const;  // throws DomainError
};
TimeseriesTable read_timeseries(const std::string& path);

// Rebuilds the decay-relevant slice of a RunRecord from a written table
// (times, local series, h_total, coercive terms, j, e_delta).
RunRecord record_from_table(const TimeseriesTable& table);

// snapshots.jsonl: one JSON object per line {"t": ..., "p11": [...], "p12":
// [...], "p21": [...], "p22": [...]}, numbers round-trip exactly.
void write_snapshots(const std::string& path, const RunRecord& run);
std::vector<std::pair<double, SpinorField>> read_snapshots(const std::string& path);

// meta.json: adopted conventions, model/grid echo, closure diagnostics,
// toolchain versions, and a wall-clock timestamp (meta only).
void write_meta(const std::string& path, const ModelSpec& model,
                const RadialGrid& grid, const RunRecord& run,
                const std::string& invocation);

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows);
void write_decay_csv(const std::string& path, const DecayReport& rep);

}  // namespace nldirac
