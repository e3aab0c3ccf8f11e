#include "nldirac/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "nldirac/errors.hpp"

namespace nldirac {

SpinorField make_initial(const RadialGrid& g, int S, const InitialData& init) {
    if (S == 0 || S == -1) throw ConfigError("vorticity S must avoid 0 and -1");
    if (!(init.amplitude >= 0.0)) throw ConfigError("initial amplitude must be >= 0");
    if (!(init.width > 0.0)) throw ConfigError("initial width must be > 0");
    if (!(init.center >= 0.0)) throw ConfigError("initial center must be >= 0");

    SpinorField f = SpinorField::zeros(g.n);
    const double a1 = std::abs(static_cast<double>(S));
    const double a2 = std::abs(static_cast<double>(S) + 1.0);
    for (std::size_t j = 0; j < g.n; ++j) {
        const double z = (g.r[j] - init.center) / init.width;
        const double bump = init.amplitude * std::exp(-z * z);
        const double b1 = bump * std::pow(g.r[j], a1);
        const double b2 = bump * std::pow(g.r[j], a2);
        if (init.in_p11) f.p11[j] = b1;
        if (init.in_p12) f.p12[j] = b1;
        if (init.in_p21) f.p21[j] = b2;
        if (init.in_p22) f.p22[j] = b2;
    }
    return f;
}

SpinorField rhs(const ModelSpec& m, const RadialOperators& ops, const SpinorField& f) {
    const std::size_t n = f.size();
    const NonlinearityValue w = eval_nonlinearity(m, f);
    SpinorField out = SpinorField::zeros(n);

    Vec Pp22(n), Pp21(n), Qp11(n), Qp12(n);
    ops.apply_P(f.p22, Pp22);
    ops.apply_P(f.p21, Pp21);
    ops.apply_Q(f.p11, Qp11);
    ops.apply_Q(f.p12, Qp12);

    const double mm = m.mass;
    for (std::size_t j = 0; j < n; ++j) {
        out.p11[j] = Pp22[j] - mm * f.p12[j] + w.w12[j];
        out.p22[j] = Qp11[j] - mm * f.p21[j] - w.w21[j];
        out.p12[j] = -Pp21[j] + mm * f.p11[j] - w.w11[j];
        out.p21[j] = -Qp12[j] + mm * f.p22[j] + w.w22[j];
    }
    return out;
}

namespace {

void check_step_guards(const RadialGrid& g, int S, double dt, double cfl) {
    if (!(dt > 0.0)) throw ConfigError("time step must be positive");
    if (!(cfl > 0.0) || cfl > 1.0) throw ConfigError("cfl must lie in (0, 1]");
    if (dt > cfl * g.h * (1.0 + 1e-12))
        throw ConfigError("time step exceeds the transport stability limit cfl*h");
    // Rate of the singular coefficient at the first node r = h/2, in units of
    // 1/h, plus the transport part it rides on.  For |S| <= 2 this stays below
    // the generator radius already covered by the cfl*h bound.
    const double smax = std::max(std::abs(static_cast<double>(S)),
                                 std::abs(static_cast<double>(S) + 1.0));
    const double srad = 2.0 * smax + 0.5;
    if (srad > 5.9 && dt * srad > 2.0 * std::sqrt(2.0) * g.h)
        throw ConfigError(
            "time step too large for this vorticity: the near-origin rows scale "
            "like 2*max(|S|,|S+1|)/h and must stay inside the RK4 stability radius");
}

void axpy(SpinorField& y, double a, const SpinorField& x) {
    for (std::size_t j = 0; j < y.size(); ++j) {
        y.p11[j] += a * x.p11[j];
        y.p12[j] += a * x.p12[j];
        y.p21[j] += a * x.p21[j];
        y.p22[j] += a * x.p22[j];
    }
}

SpinorField shifted(const SpinorField& f, double a, const SpinorField& k) {
    SpinorField out = f;
    axpy(out, a, k);
    return out;
}

bool state_ok(const SpinorField& f) {
    auto ok = [](const Vec& v) {
        for (double x : v)
            if (!std::isfinite(x) || std::abs(x) > 1e8) return false;
        return true;
    };
    return ok(f.p11) && ok(f.p12) && ok(f.p21) && ok(f.p22);
}

}  // namespace

SpinorField step_rk4(const ModelSpec& m, const RadialOperators& ops,
                     const SpinorField& f, double dt, double cfl) {
    check_step_guards(ops.grid(), m.vorticity, dt, cfl);
    const SpinorField k1 = rhs(m, ops, f);
    const SpinorField k2 = rhs(m, ops, shifted(f, 0.5 * dt, k1));
    const SpinorField k3 = rhs(m, ops, shifted(f, 0.5 * dt, k2));
    const SpinorField k4 = rhs(m, ops, shifted(f, dt, k3));
    SpinorField out = f;
    axpy(out, dt / 6.0, k1);
    axpy(out, dt / 3.0, k2);
    axpy(out, dt / 3.0, k3);
    axpy(out, dt / 6.0, k4);
    return out;
}

double mass(const RadialGrid& g, const SpinorField& f) {
    return integrate_rdr(g, modulus_squared(f));
}

double energy(const ModelSpec& m, const RadialGrid& g, const RadialOperators& ops,
              const SpinorField& f) {
    if (m.family != Nonlinearity::Honeycomb || m.mass != 0.0)
        throw DomainError("energy is conserved (and defined here) only for the "
                          "massless honeycomb model");
    const std::size_t n = g.n;
    Vec Pp21(n), Pp22(n), dens(n);
    ops.apply_P(f.p21, Pp21);
    ops.apply_P(f.p22, Pp22);
    for (std::size_t j = 0; j < n; ++j) {
        const double m1 = f.p11[j] * f.p11[j] + f.p12[j] * f.p12[j];
        const double m2 = f.p21[j] * f.p21[j] + f.p22[j] * f.p22[j];
        const double quartic =
            m.g * (0.5 * m.beta1 * (m1 * m1 + m2 * m2) + m.beta2 * m1 * m2);
        dens[j] = 2.0 * (Pp21[j] * f.p11[j] + Pp22[j] * f.p12[j]) + quartic;
    }
    return integrate_rdr(g, dens);
}

RunRecord simulate(const ModelSpec& m, const RadialGrid& g, const InitialData& init,
                   const SimulationOptions& opt) {
    return simulate_from(m, g, make_initial(g, m.vorticity, init), opt);
}

RunRecord simulate_from(const ModelSpec& m, const RadialGrid& g, const SpinorField& f0,
                        const SimulationOptions& opt) {
    validate(m);
    if (!(opt.tmax > 0.0)) throw ConfigError("tmax must be positive");
    if (opt.record_every == 0) throw ConfigError("record_every must be >= 1");
    check_step_guards(g, m.vorticity, opt.dt, opt.cfl);
    for (double R : opt.radii)
        if (!(R > 0.0) || R > g.rmax)
            throw ConfigError("tracking radii must lie in (0, rmax]");

    RadialOperators ops(g, m.vorticity);

    // Step count rounded up to a whole number of recording intervals so that
    // every recorded time is an exact multiple of record_every * dt.
    std::size_t nsteps =
        static_cast<std::size_t>(std::ceil(opt.tmax / opt.dt - 1e-12));
    nsteps = ((nsteps + opt.record_every - 1) / opt.record_every) * opt.record_every;
    if (nsteps == 0) nsteps = opt.record_every;

    RunRecord run;
    run.dt = opt.dt;
    run.record_every = opt.record_every;
    run.radii = opt.radii;
    run.vorticity = m.vorticity;
    run.energy_defined = (m.family == Nonlinearity::Honeycomb && m.mass == 0.0);

    SpinorField f = f0;

    auto record = [&](double t, const SpinorField& field) {
        run.times.push_back(t);
        run.mass_series.push_back(mass(g, field));
        run.energy_series.push_back(run.energy_defined ? energy(m, g, ops, field)
                                                       : 0.0);
        run.virial_series.push_back(virial_report(g, field, m, opt.weight));
        const NormReport nr = norms(g, field, opt.delta);
        run.linf_series.push_back(nr.l_inf);
        run.l2_rdr_series.push_back(nr.l2_rdr);
        run.e_delta_series.push_back(nr.e_delta);
        Vec loc(opt.radii.size());
        for (std::size_t i = 0; i < opt.radii.size(); ++i)
            loc[i] = local_l2(g, field, opt.radii[i]);
        run.local_series.push_back(loc);
        run.sup_linf = std::max(run.sup_linf, nr.l_inf);
    };
    auto snapshot = [&](double t, const SpinorField& field) {
        run.snapshot_times.push_back(t);
        run.snapshots.push_back(field);
    };

    record(0.0, f);
    snapshot(0.0, f);

    std::size_t recordings = 1;
    for (std::size_t step = 1; step <= nsteps; ++step) {
        f = step_rk4(m, ops, f, opt.dt, opt.cfl);
        if (!state_ok(f)) {
            run.blowup = true;
            break;
        }
        if (step % opt.record_every == 0) {
            const double t = static_cast<double>(step) * opt.dt;
            record(t, f);
            ++recordings;
            const bool last = (step == nsteps);
            if (!last && opt.snapshot_every > 0 &&
                (recordings - 1) % opt.snapshot_every == 0)
                snapshot(t, f);
            if (last) snapshot(t, f);
        }
    }
    return run;
}

}  // namespace nldirac
