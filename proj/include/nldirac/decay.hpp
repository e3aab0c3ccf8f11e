#pragma once
#include <vector>

#include "nldirac/dynamics.hpp"

namespace nldirac {

// Per-radius decay summary along one run.
struct DecayRadiusRow {
    double R = 0.0;
    double initial = 0.0;       // local_l2 at the first recording
    double terminal = 0.0;      // local_l2 at the last recording
    double running_max = 0.0;   // sup over recordings
    double terminal_over_max = 0.0;
};

struct DecayReport {
    std::vector<DecayRadiusRow> radii;

    // Local mass is dominated by the weighted field functional:
    //   local_l2(R)^2 <= (1+R)^3 * H(t) * c_measure  (c_measure = 1).
    double h_domination_worst = 0.0;  // max of local^2 / ((1+R)^3 H)
    long h_domination_violations = 0;

    double integrated_coercive = 0.0;  // trapezoid of coercive_grad+coercive_field
    double j_sup = 0.0;                // sup |J(t)|
    double e_delta_sup = 0.0;          // sup of the weighted-norm series
    double j_bound_ratio = 0.0;        // j_sup / e_delta_sup^2 (boundedness check)
};

// Requires at least 10 recordings with virial and local series present.
DecayReport decay_report(const RunRecord& run, double c_measure = 1.0);

// Amplitude/power scan for the pure-power family: evolves the base setup for
// every (power, amplitude) pair and reports whether the run stayed finite.
struct SweepRow {
    double power = 0.0, amplitude = 0.0;
    bool blowup = false;
    double sup_linf = 0.0;
    double terminal_l2 = 0.0;
    double final_time = 0.0;
};
std::vector<SweepRow> threshold_sweep(const ModelSpec& base, const RadialGrid& g,
                                      const InitialData& init,
                                      const SimulationOptions& opt,
                                      const std::vector<double>& powers,
                                      const std::vector<double>& amplitudes);

}  // namespace nldirac
