#include "nldirac/decay.hpp"

#include <algorithm>
#include <cmath>

#include "nldirac/errors.hpp"

namespace nldirac {

DecayReport decay_report(const RunRecord& run, double c_measure) {
    const std::size_t k = run.times.size();
    if (k < 10) throw DomainError("decay_report needs at least 10 recordings");
    if (run.virial_series.size() != k || run.local_series.size() != k)
        throw DomainError("decay_report: run lacks virial or local recordings");

    DecayReport rep;
    for (std::size_t i = 0; i < run.radii.size(); ++i) {
        DecayRadiusRow row;
        row.R = run.radii[i];
        row.initial = run.local_series.front()[i];
        row.terminal = run.local_series.back()[i];
        for (std::size_t t = 0; t < k; ++t)
            row.running_max = std::max(row.running_max, run.local_series[t][i]);
        row.terminal_over_max =
            row.running_max > 0.0 ? row.terminal / row.running_max : 0.0;
        rep.radii.push_back(row);
    }

    for (std::size_t t = 0; t < k; ++t) {
        const double H = run.virial_series[t].h_total;
        for (std::size_t i = 0; i < run.radii.size(); ++i) {
            const double R = run.radii[i];
            const double opr3 = (1.0 + R) * (1.0 + R) * (1.0 + R);
            const double local2 = run.local_series[t][i] * run.local_series[t][i];
            if (H > 0.0) {
                const double ratio = local2 / (opr3 * H);
                rep.h_domination_worst = std::max(rep.h_domination_worst, ratio);
                if (ratio > c_measure * (1.0 + 1e-12)) ++rep.h_domination_violations;
            } else if (local2 > 0.0) {
                ++rep.h_domination_violations;
            }
        }
    }

    for (std::size_t t = 0; t + 1 < k; ++t) {
        const double a = run.virial_series[t].coercive_grad +
                         run.virial_series[t].coercive_field;
        const double b = run.virial_series[t + 1].coercive_grad +
                         run.virial_series[t + 1].coercive_field;
        rep.integrated_coercive +=
            0.5 * (a + b) * (run.times[t + 1] - run.times[t]);
    }

    for (std::size_t t = 0; t < k; ++t) {
        rep.j_sup = std::max(rep.j_sup, std::abs(run.virial_series[t].j_total));
        rep.e_delta_sup = std::max(rep.e_delta_sup, run.e_delta_series[t]);
    }
    rep.j_bound_ratio = rep.e_delta_sup > 0.0
                            ? rep.j_sup / (rep.e_delta_sup * rep.e_delta_sup)
                            : 0.0;
    return rep;
}

std::vector<SweepRow> threshold_sweep(const ModelSpec& base, const RadialGrid& g,
                                      const InitialData& init,
                                      const SimulationOptions& opt,
                                      const std::vector<double>& powers,
                                      const std::vector<double>& amplitudes) {
    if (powers.empty() || amplitudes.empty())
        throw ConfigError("threshold_sweep needs nonempty powers and amplitudes");
    std::vector<SweepRow> rows;
    for (double p : powers) {
        for (double a : amplitudes) {
            ModelSpec m = base;
            m.family = Nonlinearity::PurePower;
            m.power = p;
            validate(m);
            InitialData id = init;
            id.amplitude = a;
            const RunRecord run = simulate(m, g, id, opt);
            SweepRow row;
            row.power = p;
            row.amplitude = a;
            row.blowup = run.blowup;
            row.sup_linf = run.sup_linf;
            row.terminal_l2 = run.l2_rdr_series.empty() ? 0.0
                                                        : run.l2_rdr_series.back();
            row.final_time = run.times.empty() ? 0.0 : run.times.back();
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace nldirac
