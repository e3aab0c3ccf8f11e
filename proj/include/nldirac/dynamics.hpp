#pragma once
#include <cstddef>
#include <vector>

#include "nldirac/grid.hpp"
#include "nldirac/operators.hpp"
#include "nldirac/spinor.hpp"
#include "nldirac/virial.hpp"
#include "nldirac/weights.hpp"

namespace nldirac {

// Smooth localized initial data: a Gaussian bump of the given width and
// center, multiplied by r^|S| on the first complex component and r^|S+1| on
// the second, so every selected component has the vorticity-correct vanishing
// rate at the origin.
struct InitialData {
    double amplitude = 0.01;
    double width = 1.0;
    double center = 10.0;
    bool in_p11 = true;
    bool in_p12 = false;
    bool in_p21 = false;
    bool in_p22 = false;
};

SpinorField make_initial(const RadialGrid& g, int S, const InitialData& init);

// Right-hand side of the first-order system at one instant.
SpinorField rhs(const ModelSpec& m, const RadialOperators& ops, const SpinorField& f);

// One classical RK4 step.  Guards: dt > 0 and dt <= cfl * h (the transport
// limit), plus a vorticity-aware restriction: the singular-coefficient rows
// scale like 2*max(|S|,|S+1|)/r at the first node, and once that rate exceeds
// the transport one it must itself stay inside the RK4 imaginary-axis radius
// 2*sqrt(2).  Violations throw ConfigError.
SpinorField step_rk4(const ModelSpec& m, const RadialOperators& ops,
                     const SpinorField& f, double dt, double cfl = 0.5);

// int |phi|^2 r dr via the corrected quadrature.
double mass(const RadialGrid& g, const SpinorField& f);

// Conserved energy.  Defined (and accepted) only for the massless Honeycomb
// model:  E = 2 int [(P p21) p11 + (P p22) p12] r dr + int G r dr with
// G = g [beta1 (m1^2 + m2^2)/2 + beta2 m1 m2].  Other models throw DomainError.
double energy(const ModelSpec& m, const RadialGrid& g, const RadialOperators& ops,
              const SpinorField& f);

struct SimulationOptions {
    double dt = 0.0;           // required, validated by step_rk4's guards
    double tmax = 0.0;         // required, > 0
    std::size_t record_every = 1;
    std::size_t snapshot_every = 0;  // 0: keep only first and last snapshots
    Weight weight{};                 // J-functional weight family
    double delta = 0.1;              // e_delta reporting exponent
    Vec radii{5.0, 10.0, 20.0};      // local_l2 tracking radii
    double cfl = 0.5;
};

// Everything recorded along one evolution.
struct RunRecord {
    std::vector<double> times;
    Vec mass_series;
    Vec energy_series;  // 0.0 entries when the model has no conserved energy
    bool energy_defined = false;
    std::vector<VirialReport> virial_series;
    Vec linf_series, l2_rdr_series, e_delta_series;
    std::vector<Vec> local_series;  // local_series[i] = per-radius values at times[i]
    Vec radii;
    std::vector<double> snapshot_times;
    std::vector<SpinorField> snapshots;
    bool blowup = false;
    double dt = 0.0;
    std::size_t record_every = 1;
    double sup_linf = 0.0;
    int vorticity = 0;
};

// Fixed-step RK4 evolution with periodic recording.  On loss of finiteness the
// record is truncated at the last finite recording and blowup is set; no
// exception escapes for that case.
RunRecord simulate(const ModelSpec& m, const RadialGrid& g, const InitialData& init,
                   const SimulationOptions& opt);

// As above but starting from an explicit field.
RunRecord simulate_from(const ModelSpec& m, const RadialGrid& g, const SpinorField& f0,
                        const SimulationOptions& opt);

// Fourth-order finite-difference check of dF/dt = RHS along a recorded run
// for F = J ('J') or F = H ('H').  Needs at least 5 recordings.
struct IdentityCheck {
    Vec residuals;            // one per interior recording
    double max_residual = 0.0;
    double max_rhs = 0.0;     // scale for relative budgets
};
IdentityCheck verify_virial_identity(const RunRecord& run, char which);

// Estimates the coercivity constant  -dJ/dt >= c * (coercive_grad +
// coercive_field)  along a run and counts sign violations.  Requires a
// small-data run: sup_t l_inf < 0.5.
struct CoercivityCheck {
    double c_estimate = 0.0;
    long violations = 0;
    long samples = 0;
    bool applicable = false;
    double sup_linf = 0.0;
};
CoercivityCheck coercivity_check(const RunRecord& run);

}  // namespace nldirac
