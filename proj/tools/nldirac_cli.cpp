#include <clocale>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nldirac/config.hpp"
#include "nldirac/decay.hpp"
#include "nldirac/dynamics.hpp"
#include "nldirac/errors.hpp"
#include "nldirac/oracles.hpp"
#include "nldirac/run_io.hpp"
#include "nldirac/virial.hpp"
#include "nldirac/weights.hpp"

namespace fs = std::filesystem;
using namespace nldirac;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitBlowup = 2;
constexpr int kExitVerify = 3;

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

std::vector<double> parse_list(const std::string& s, const char* what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        char* end = nullptr;
        const double x = std::strtod(item.c_str(), &end);
        if (end == item.c_str())
            throw ConfigError(std::string("bad ") + what + " list entry: '" + item + "'");
        out.push_back(x);
    }
    if (out.empty()) throw ConfigError(std::string("empty ") + what + " list");
    return out;
}

struct CheckTable {
    struct Row {
        std::string name;
        double residual, budget;
        bool pass;
    };
    std::vector<Row> rows;
    bool all_pass = true;

    void add(const std::string& name, double residual, double budget) {
        const bool ok = residual <= budget;
        rows.push_back(Row{name, residual, budget, ok});
        all_pass = all_pass && ok;
    }
    void write_csv(const std::string& path) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw ConfigError("cannot open output file: " + path);
        out << "check,residual,budget,pass\n";
        char buf[96];
        for (const Row& r : rows) {
            std::snprintf(buf, sizeof(buf), ",%.17g,%.17g,%d\n", r.residual,
                          r.budget, r.pass ? 1 : 0);
            out << r.name << buf;
        }
    }
    void print() const {
        for (const Row& r : rows)
            std::printf("%-44s %11.3e  (budget %8.1e)  %s\n", r.name.c_str(),
                        r.residual, r.budget, r.pass ? "ok" : "FAIL");
    }
};

int cmd_run(const std::string& config_path, const std::string& out_dir,
            const std::string& invocation) {
    const Config cfg = parse_config_file(config_path);
    const RadialGrid grid = make_grid(cfg);
    const SimulationOptions opt = make_options(cfg);

    const RunRecord run = simulate(cfg.model, grid, cfg.init, opt);

    fs::create_directories(out_dir);
    write_timeseries(out_dir + "/timeseries.csv", run);
    write_snapshots(out_dir + "/snapshots.jsonl", run);
    write_meta(out_dir + "/meta.json", cfg.model, grid, run, invocation);

    std::printf("run: %zu recordings to t=%.6g, sup|phi|=%.3e%s\n",
                run.times.size(), run.times.empty() ? 0.0 : run.times.back(),
                run.sup_linf, run.blowup ? "  [BLOW-UP]" : "");
    return run.blowup ? kExitBlowup : kExitOk;
}

int cmd_verify_identities(const std::string& config_path, const std::string& out_dir,
                          const std::string& invocation) {
    const Config cfg = parse_config_file(config_path);
    const RadialGrid grid = make_grid(cfg);
    CheckTable table;

    const std::vector<Weight> families = {
        Weight{WeightFamily::Strong, 0.1},
        Weight{WeightFamily::Delta, 0.1},
        Weight{WeightFamily::Delta, 1.0},
    };
    auto family_tag = [](const Weight& w) {
        return w.family == WeightFamily::Strong
                   ? std::string("strong")
                   : "delta(" + std::to_string(w.delta).substr(0, 3) + ")";
    };

    for (const Weight& w : families)
        table.add("weight_identities/" + family_tag(w),
                  verify_weight_identities(w, grid), 1e-10);

    const std::vector<TestFunction> fns = {
        TestFunction{{{1.0, 2, 1.0}}},
        TestFunction{{{1.0, 3, 2.0}, {-0.5, 2, 1.0}}},
        TestFunction{{{0.7, 4, 1.2}, {0.3, 2, 1.5}}},
    };
    for (std::size_t fi = 0; fi < fns.size(); ++fi) {
        for (const Weight& w : families) {
            for (int K : {1, 2}) {
                for (int which : {1, 2}) {
                    const IdentityValue iv =
                        second_order_identity(fns[fi], w, K, grid, which);
                    table.add("second_order/f" + std::to_string(fi) + "/" +
                                  family_tag(w) + "/K" + std::to_string(K) +
                                  "/order" + std::to_string(which),
                              iv.residual, 1e-6);
                }
            }
            table.add("pairing/f" + std::to_string(fi) + "/" + family_tag(w),
                      pairing_residual(fns[fi], w, grid), 1e-8);
        }
    }

    // Identity checks along an actual evolution of the configured model.
    const SimulationOptions opt = make_options(cfg);
    const RunRecord run = simulate(cfg.model, grid, cfg.init, opt);
    if (run.blowup) {
        std::fprintf(stderr, "verify-identities: the configured run blew up\n");
        return kExitBlowup;
    }

    const IdentityCheck cj = verify_virial_identity(run, 'J');
    const IdentityCheck ch = verify_virial_identity(run, 'H');
    const double bj = 1e-4 * std::max(cj.max_rhs, 1e-300);
    const double bh = 1e-4 * std::max(ch.max_rhs, 1e-300);
    table.add("run/dJ_identity", cj.max_residual, bj);
    table.add("run/dH_identity", ch.max_residual, bh);

    // Per-functional derivative identities and the collapsed-vs-split match.
    double worst[4] = {0, 0, 0, 0};
    double scale[4] = {0, 0, 0, 0};
    double cor_vs_prop = 0.0;
    const std::size_t K = run.times.size();
    for (std::size_t i = 0; i < K; ++i) {
        const VirialReport& v = run.virial_series[i];
        scale[0] = std::max(scale[0], std::abs(v.dj1));
        scale[1] = std::max(scale[1], std::abs(v.dk1));
        scale[2] = std::max(scale[2], std::abs(v.dj2));
        scale[3] = std::max(scale[3], std::abs(v.dk2));
        cor_vs_prop = std::max(cor_vs_prop, std::abs(v.dj_rhs - v.dj_prop));
    }
    for (std::size_t i = 1; i + 1 < K; ++i) {
        const double dt2 = run.times[i + 1] - run.times[i - 1];
        const VirialReport& lo = run.virial_series[i - 1];
        const VirialReport& hi = run.virial_series[i + 1];
        const VirialReport& md = run.virial_series[i];
        worst[0] = std::max(worst[0], std::abs((hi.j1 - lo.j1) / dt2 - md.dj1));
        worst[1] = std::max(worst[1], std::abs((hi.k1t - lo.k1t) / dt2 - md.dk1));
        worst[2] = std::max(worst[2], std::abs((hi.j2 - lo.j2) / dt2 - md.dj2));
        worst[3] = std::max(worst[3], std::abs((hi.k2t - lo.k2t) / dt2 - md.dk2));
    }
    const char* names[4] = {"run/dj1_identity", "run/dk1_identity",
                            "run/dj2_identity", "run/dk2_identity"};
    for (int q = 0; q < 4; ++q)
        table.add(names[q], worst[q],
                  1e-4 * std::max({scale[0], scale[1], scale[2], scale[3], 1e-300}));
    table.add("run/collapsed_vs_split_dJ", cor_vs_prop,
              1e-4 * std::max(cj.max_rhs, 1e-300));

    fs::create_directories(out_dir);
    table.write_csv(out_dir + "/identities.csv");
    write_meta(out_dir + "/meta.json", cfg.model, grid, run, invocation);
    table.print();
    return table.all_pass ? kExitOk : kExitVerify;
}

int cmd_verify_static(const std::string& config_path, const std::string& out_dir,
                      const std::string& invocation) {
    const Config cfg = parse_config_file(config_path);
    const RadialGrid grid = make_grid(cfg);
    const int S = cfg.model.vorticity;
    CheckTable table;

    const SpinorField prof = static_profile(StaticProfileSpec{S, 1.0}, grid);
    const double selected = static_residual(grid, prof, S, kStaticCouplingSign);
    const double rejected = static_residual(grid, prof, S, -kStaticCouplingSign);
    table.add("static/selected_sign_residual", selected, 1e-4);
    table.add("static/rejected_sign_exceeds",
              rejected > 1e-1 ? 0.0 : 1.0, 0.5);
    table.add("static/separation_factor",
              rejected / std::max(selected, 1e-300) > 1e3 ? 0.0 : 1.0, 0.5);

    // Refinement order of the selected-sign residual.
    const RadialGrid half = nldirac::make_grid(grid.rmax, grid.n / 2);
    const SpinorField prof_half = static_profile(StaticProfileSpec{S, 1.0}, half);
    const double coarse = static_residual(half, prof_half, S, kStaticCouplingSign);
    const double order = std::log2(coarse / selected);
    table.add("static/refinement_order_at_least_2", order >= 2.0 ? 0.0 : 1.0, 0.5);

    if (S == 1) {
        const double v1 = static_profile_V(1, 1.0);
        table.add("static/profile_value_at_1",
                  std::abs(v1 - std::sqrt(6.0) / 2.0), 1e-12);
    }

    fs::create_directories(out_dir);
    table.write_csv(out_dir + "/static.csv");
    {
        std::ofstream out(out_dir + "/smallness.csv", std::ios::binary);
        out << "lambda,l_inf,l2_rdr\n";
        for (const SmallnessRow& row : smallness_report(S, grid)) {
            char buf[128];
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", row.lambda,
                          row.l_inf, row.l2_rdr);
            out << buf;
        }
    }
    RunRecord empty;
    write_meta(out_dir + "/meta.json", cfg.model, grid, empty, invocation);
    table.print();
    std::printf("static: selected %.3e rejected %.3e order %.2f\n", selected,
                rejected, order);
    return table.all_pass ? kExitOk : kExitVerify;
}

int cmd_sweep(const std::string& config_path, const std::string& out_dir,
              const std::string& powers_str, const std::string& amps_str) {
    const Config cfg = parse_config_file(config_path);
    const RadialGrid grid = make_grid(cfg);
    const SimulationOptions opt = make_options(cfg);
    const std::vector<double> powers = parse_list(powers_str, "powers");
    const std::vector<double> amps = parse_list(amps_str, "amplitudes");

    const std::vector<SweepRow> rows =
        threshold_sweep(cfg.model, grid, cfg.init, opt, powers, amps);
    fs::create_directories(out_dir);
    write_sweep_csv(out_dir + "/sweep.csv", rows);
    for (const SweepRow& r : rows)
        std::printf("p=%g amp=%g: %s sup|phi|=%.3e\n", r.power, r.amplitude,
                    r.blowup ? "blow-up" : "finite", r.sup_linf);
    return kExitOk;
}

int cmd_decay_report(const std::string& run_dir, const std::string& out_dir) {
    const TimeseriesTable t = read_timeseries(run_dir + "/timeseries.csv");
    const RunRecord run = record_from_table(t);
    const DecayReport rep = decay_report(run);
    const std::string dir = out_dir.empty() ? run_dir : out_dir;
    fs::create_directories(dir);
    write_decay_csv(dir + "/decay.csv", rep);
    for (const DecayRadiusRow& row : rep.radii)
        std::printf("R=%-6g terminal/max=%.4f (initial %.3e terminal %.3e)\n",
                    row.R, row.terminal_over_max, row.initial, row.terminal);
    std::printf("H-domination worst %.4f violations %ld\n", rep.h_domination_worst,
                rep.h_domination_violations);
    return rep.h_domination_violations == 0 ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");
    CLI::App app{"radial 2D nonlinear Dirac laboratory"};
    app.require_subcommand(1);

    std::string config_path, out_dir = "out", run_dir, report_out;
    std::string powers = "3,5", amps = "0.4,0.8,1.2";

    CLI::App* run = app.add_subcommand("run", "evolve a configured model");
    run->add_option("--config", config_path, "INI config file")->required();
    run->add_option("--out", out_dir, "output directory");

    CLI::App* vid = app.add_subcommand(
        "verify-identities", "algebraic, integration-by-parts and run identities");
    vid->add_option("--config", config_path, "INI config file")->required();
    vid->add_option("--out", out_dir, "output directory");

    CLI::App* vst = app.add_subcommand("verify-static",
                                       "stationarity of the explicit profile");
    vst->add_option("--config", config_path, "INI config file")->required();
    vst->add_option("--out", out_dir, "output directory");

    CLI::App* swp = app.add_subcommand("sweep", "power/amplitude scan");
    swp->add_option("--config", config_path, "INI config file")->required();
    swp->add_option("--out", out_dir, "output directory");
    swp->add_option("--powers", powers, "comma list of exponents");
    swp->add_option("--amplitudes", amps, "comma list of amplitudes");

    CLI::App* dcr = app.add_subcommand("decay-report", "summarize a finished run");
    dcr->add_option("--run-dir", run_dir, "directory holding timeseries.csv")
        ->required();
    dcr->add_option("--out", report_out, "output directory (default: run dir)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfig;
    }

    const std::string invocation = join_args(argc, argv);
    try {
        if (run->parsed()) return cmd_run(config_path, out_dir, invocation);
        if (vid->parsed()) return cmd_verify_identities(config_path, out_dir, invocation);
        if (vst->parsed()) return cmd_verify_static(config_path, out_dir, invocation);
        if (swp->parsed()) return cmd_sweep(config_path, out_dir, powers, amps);
        if (dcr->parsed()) return cmd_decay_report(run_dir, report_out);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const BlowUpError& e) {
        std::fprintf(stderr, "blow-up: %s\n", e.what());
        return kExitBlowup;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    }
    return kExitConfig;
}
