#include "nldirac/run_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include "nldirac/errors.hpp"
#include "nldirac/operators.hpp"

namespace nldirac {

namespace {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string fmt_radius(double R) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", R);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // LF endings on every platform
    if (!out) throw ConfigError("cannot open output file: " + path);
    return out;
}

}  // namespace

void write_timeseries(const std::string& path, const RunRecord& run) {
    std::ofstream out = open_out(path);
    out << "t,mass,energy,j1,k1t,j2,k2t,j_total,h_total,n1,n2,n3,n4,dj_rhs,"
           "dh_rhs,linf,l2_rdr,e_delta";
    for (double R : run.radii) out << ",local_l2@" << fmt_radius(R);
    out << "\n";
    for (std::size_t i = 0; i < run.times.size(); ++i) {
        const VirialReport& v = run.virial_series[i];
        out << fmt17(run.times[i]) << ',' << fmt17(run.mass_series[i]) << ','
            << fmt17(run.energy_series[i]) << ',' << fmt17(v.j1) << ','
            << fmt17(v.k1t) << ',' << fmt17(v.j2) << ',' << fmt17(v.k2t) << ','
            << fmt17(v.j_total) << ',' << fmt17(v.h_total) << ',' << fmt17(v.n1)
            << ',' << fmt17(v.n2) << ',' << fmt17(v.n3) << ',' << fmt17(v.n4) << ','
            << fmt17(v.dj_rhs) << ',' << fmt17(v.dh_rhs) << ','
            << fmt17(run.linf_series[i]) << ',' << fmt17(run.l2_rdr_series[i]) << ','
            << fmt17(run.e_delta_series[i]);
        for (double x : run.local_series[i]) out << ',' << fmt17(x);
        out << "\n";
    }
}

std::size_t TimeseriesTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return i;
    throw DomainError("timeseries column not found: " + name);
}

TimeseriesTable read_timeseries(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open timeseries file: " + path);
    TimeseriesTable table;
    std::string line;
    if (!std::getline(in, line)) throw DomainError("empty timeseries file");
    {
        std::stringstream ss(line);
        std::string col;
        while (std::getline(ss, col, ',')) {
            if (!col.empty() && col.back() == '\r') col.pop_back();
            table.columns.push_back(col);
        }
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Vec row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            char* end = nullptr;
            const double x = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str())
                throw DomainError("bad numeric cell in timeseries: '" + cell + "'");
            row.push_back(x);
        }
        if (row.size() != table.columns.size())
            throw DomainError("timeseries row width does not match the header");
        table.rows.push_back(row);
    }
    return table;
}

RunRecord record_from_table(const TimeseriesTable& t) {
    RunRecord run;
    const std::size_t ct = t.column("t");
    const std::size_t ch = t.column("h_total");
    const std::size_t cj = t.column("j_total");
    const std::size_t ce = t.column("e_delta");
    const std::size_t cm = t.column("mass");
    const std::size_t cl2 = t.column("l2_rdr");
    const std::size_t cli = t.column("linf");

    std::vector<std::size_t> local_cols;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        const std::string& name = t.columns[i];
        const std::string prefix = "local_l2@";
        if (name.rfind(prefix, 0) == 0) {
            local_cols.push_back(i);
            run.radii.push_back(std::strtod(name.c_str() + prefix.size(), nullptr));
        }
    }

    for (const Vec& row : t.rows) {
        run.times.push_back(row[ct]);
        run.mass_series.push_back(row[cm]);
        run.energy_series.push_back(0.0);
        VirialReport v;
        v.h_total = row[ch];
        v.j_total = row[cj];
        run.virial_series.push_back(v);  // coercive terms are not persisted
        run.linf_series.push_back(row[cli]);
        run.l2_rdr_series.push_back(row[cl2]);
        run.e_delta_series.push_back(row[ce]);
        Vec loc;
        for (std::size_t c : local_cols) loc.push_back(row[c]);
        run.local_series.push_back(loc);
        run.sup_linf = std::max(run.sup_linf, row[cli]);
    }
    return run;
}

void write_snapshots(const std::string& path, const RunRecord& run) {
    std::ofstream out = open_out(path);
    for (std::size_t i = 0; i < run.snapshots.size(); ++i) {
        nlohmann::json obj;
        obj["t"] = run.snapshot_times[i];
        obj["p11"] = run.snapshots[i].p11;
        obj["p12"] = run.snapshots[i].p12;
        obj["p21"] = run.snapshots[i].p21;
        obj["p22"] = run.snapshots[i].p22;
        out << obj.dump() << "\n";
    }
}

std::vector<std::pair<double, SpinorField>> read_snapshots(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open snapshots file: " + path);
    std::vector<std::pair<double, SpinorField>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const nlohmann::json obj = nlohmann::json::parse(line);
        SpinorField f;
        f.p11 = obj.at("p11").get<Vec>();
        f.p12 = obj.at("p12").get<Vec>();
        f.p21 = obj.at("p21").get<Vec>();
        f.p22 = obj.at("p22").get<Vec>();
        out.emplace_back(obj.at("t").get<double>(), std::move(f));
    }
    return out;
}

void write_meta(const std::string& path, const ModelSpec& model,
                const RadialGrid& grid, const RunRecord& run,
                const std::string& invocation) {
    nlohmann::json j;

    j["model"] = {{"family", to_string(model.family)},
                  {"mass", model.mass},
                  {"vorticity", model.vorticity},
                  {"g", model.g},
                  {"beta1", model.beta1},
                  {"beta2", model.beta2},
                  {"power", model.power}};
    j["grid"] = {{"n", grid.n}, {"rmax", grid.rmax}, {"h", grid.h}};
    j["run"] = {{"dt", run.dt},
                {"record_every", run.record_every},
                {"recordings", run.times.size()},
                {"blowup", run.blowup},
                {"sup_linf", run.sup_linf},
                {"energy_defined", run.energy_defined}};

    j["conventions"] = {
        {"angular_measure", "the 2*pi angular factor is dropped from every "
                            "integral, consistently on both sides of each identity"},
        {"quadrature", "composite midpoint plus h^2/24 endpoint-slope correction"},
        {"virial_measure", "J/H functionals and their derivative identities use "
                           "the plain dr measure"},
        {"energy", "conserved energy is defined for the massless honeycomb "
                   "family; the column is written as 0.0 otherwise"},
        {"static_coupling_sign", -1},
        {"operator_adjoint", "Q = -Om^{-1} P^T Om with a diagonal norm Om, so the "
                             "semi-discrete generator is skew and mass is conserved "
                             "identically"}};

    const Closure cl = build_closure(model.vorticity);
    j["closure"] = {{"hard_defect", cl.hard_defect}, {"soft_defect", cl.soft_defect}};

    j["versions"] = {{"compiler", __VERSION__},
                     {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." +
                                   std::to_string(EIGEN_MAJOR_VERSION) + "." +
                                   std::to_string(EIGEN_MINOR_VERSION)}};

    {
        char buf[64];
        const std::time_t now = std::time(nullptr);
        std::tm tm{};
        gmtime_r(&now, &tm);
        std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
        j["written_at"] = buf;
    }
    j["invocation"] = invocation;

    std::ofstream out = open_out(path);
    out << j.dump(2) << "\n";
}

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows) {
    std::ofstream out = open_out(path);
    out << "power,amplitude,blowup,sup_linf,terminal_l2,final_time\n";
    for (const SweepRow& r : rows)
        out << fmt17(r.power) << ',' << fmt17(r.amplitude) << ','
            << (r.blowup ? 1 : 0) << ',' << fmt17(r.sup_linf) << ','
            << fmt17(r.terminal_l2) << ',' << fmt17(r.final_time) << "\n";
}

void write_decay_csv(const std::string& path, const DecayReport& rep) {
    std::ofstream out = open_out(path);
    out << "R,initial,terminal,running_max,terminal_over_max,"
           "h_domination_worst,h_domination_violations,integrated_coercive,"
           "j_sup,e_delta_sup,j_bound_ratio\n";
    for (const DecayRadiusRow& row : rep.radii)
        out << fmt_radius(row.R) << ',' << fmt17(row.initial) << ','
            << fmt17(row.terminal) << ',' << fmt17(row.running_max) << ','
            << fmt17(row.terminal_over_max) << ',' << fmt17(rep.h_domination_worst)
            << ',' << rep.h_domination_violations << ','
            << fmt17(rep.integrated_coercive) << ',' << fmt17(rep.j_sup) << ','
            << fmt17(rep.e_delta_sup) << ',' << fmt17(rep.j_bound_ratio) << "\n";
}

}  // namespace nldirac
