#include "nldirac/virial.hpp"

#include <cmath>

#include "nldirac/dynamics.hpp"
#include "nldirac/errors.hpp"

namespace nldirac {

namespace {

// phi * f' + (1/2) phi' * f, the weighted multiplier entering every J piece.
Vec mul_weighted(const WeightValues& wv, const Vec& f, const Vec& df) {
    Vec out(f.size());
    for (std::size_t j = 0; j < f.size(); ++j)
        out[j] = wv.phi[j] * df[j] + 0.5 * wv.d1[j] * f[j];
    return out;
}

}  // namespace

VirialReport virial_report(const RadialGrid& g, const SpinorField& f,
                           const ModelSpec& m, const Weight& w) {
    if (w.family == WeightFamily::HWeight)
        throw DomainError("virial_report: the J weight must be Strong or Delta");
    validate(m);
    if (f.size() != g.n)
        throw DomainError("virial_report: field length does not match grid");

    const std::size_t n = g.n;
    const int S = m.vorticity;
    const double mass = m.mass;
    const double Sp = static_cast<double>(S);

    const WeightValues wv = eval_weight(w, g);
    const WeightValues hv = eval_weight(Weight{WeightFamily::HWeight, 0.0}, g);

    const Vec d11 = derivative(g, f.p11);
    const Vec d12 = derivative(g, f.p12);
    const Vec d21 = derivative(g, f.p21);
    const Vec d22 = derivative(g, f.p22);

    const NonlinearityValue W = eval_nonlinearity(m, f);
    const Vec dw11 = derivative(g, W.w11);
    const Vec dw12 = derivative(g, W.w12);
    const Vec dw21 = derivative(g, W.w21);
    const Vec dw22 = derivative(g, W.w22);

    // First-order operators in diagnostic (stencil) form.
    auto Pd = [&](const Vec& u, const Vec& du) {
        Vec out(n);
        for (std::size_t j = 0; j < n; ++j) out[j] = du[j] + (Sp + 1.0) * u[j] / g.r[j];
        return out;
    };
    auto Qd = [&](const Vec& u, const Vec& du) {
        Vec out(n);
        for (std::size_t j = 0; j < n; ++j) out[j] = du[j] - Sp * u[j] / g.r[j];
        return out;
    };

    const Vec P22 = Pd(f.p22, d22), P21 = Pd(f.p21, d21);
    const Vec Q11 = Qd(f.p11, d11), Q12 = Qd(f.p12, d12);
    const Vec PW21 = Pd(W.w21, dw21), PW22 = Pd(W.w22, dw22);
    const Vec QW11 = Qd(W.w11, dw11), QW12 = Qd(W.w12, dw12);

    const Vec mul11 = mul_weighted(wv, f.p11, d11);
    const Vec mul12 = mul_weighted(wv, f.p12, d12);
    const Vec mul21 = mul_weighted(wv, f.p21, d21);
    const Vec mul22 = mul_weighted(wv, f.p22, d22);
    const Vec mulw11 = mul_weighted(wv, W.w11, dw11);
    const Vec mulw12 = mul_weighted(wv, W.w12, dw12);
    const Vec mulw21 = mul_weighted(wv, W.w21, dw21);
    const Vec mulw22 = mul_weighted(wv, W.w22, dw22);

    VirialReport rep;
    Vec tmp(n);

    // The four J pieces: weighted pairings of each component against the
    // operator side of its evolution partner.
    for (std::size_t j = 0; j < n; ++j) tmp[j] = mul11[j] * (P22[j] - mass * f.p12[j]);
    rep.j1 = integrate_dr(g, tmp);
    for (std::size_t j = 0; j < n; ++j) tmp[j] = mul22[j] * (Q11[j] - mass * f.p21[j]);
    rep.k1t = integrate_dr(g, tmp);
    for (std::size_t j = 0; j < n; ++j) tmp[j] = mul12[j] * (P21[j] - mass * f.p11[j]);
    rep.j2 = integrate_dr(g, tmp);
    for (std::size_t j = 0; j < n; ++j) tmp[j] = mul21[j] * (Q12[j] - mass * f.p22[j]);
    rep.k2t = integrate_dr(g, tmp);
    rep.j_total = rep.j1 + rep.k1t - rep.j2 - rep.k2t;

    const Vec msq = modulus_squared(f);
    for (std::size_t j = 0; j < n; ++j) tmp[j] = hv.phi[j] * msq[j];
    rep.h_total = integrate_dr(g, tmp);

    // Collapsed dJ/dt: gradient term, two quadratic-coefficient terms, and
    // the four nonlinear terms.
    Vec gradsum(n);
    for (std::size_t j = 0; j < n; ++j)
        gradsum[j] =
            d11[j] * d11[j] + d12[j] * d12[j] + d21[j] * d21[j] + d22[j] * d22[j];

    Vec cgrad(n), cqS(n), cqS1(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double r = g.r[j];
        cgrad[j] = wv.d1[j] - wv.phi[j] / r;
        const double base = -wv.d1[j] / (r * r) + wv.d2[j] / r - wv.d3[j];
        cqS[j] = 4.0 * Sp * Sp * wv.phi[j] / (r * r * r) + base;
        cqS1[j] = 4.0 * (Sp + 1.0) * (Sp + 1.0) * wv.phi[j] / (r * r * r) + base;
    }

    for (std::size_t j = 0; j < n; ++j) tmp[j] = cgrad[j] * gradsum[j];
    const double grad_term = integrate_dr(g, tmp);
    for (std::size_t j = 0; j < n; ++j)
        tmp[j] = cqS1[j] * (f.p21[j] * f.p21[j] + f.p22[j] * f.p22[j]);
    const double quad_term_2 = integrate_dr(g, tmp);
    for (std::size_t j = 0; j < n; ++j)
        tmp[j] = cqS[j] * (f.p11[j] * f.p11[j] + f.p12[j] * f.p12[j]);
    const double quad_term_1 = integrate_dr(g, tmp);

    // n1: mass-coefficient nonlinear pairing.
    for (std::size_t j = 0; j < n; ++j)
        tmp[j] = wv.d1[j] * (f.p11[j] * W.w11[j] + f.p12[j] * W.w12[j] -
                             f.p21[j] * W.w21[j] - f.p22[j] * W.w22[j]) +
                 2.0 * wv.phi[j] * (W.w11[j] * d11[j] + W.w12[j] * d12[j] -
                                    W.w21[j] * d21[j] - W.w22[j] * d22[j]);
    rep.n1 = integrate_dr(g, tmp);

    // n2: the (2S+1)-weighted cross pairing plus its lower-order partner.
    for (std::size_t j = 0; j < n; ++j) {
        const double r = g.r[j];
        tmp[j] = -(2.0 * Sp + 1.0) * (wv.phi[j] / r) *
                     (d11[j] * W.w21[j] + d21[j] * W.w11[j] + d12[j] * W.w22[j] +
                      d22[j] * W.w12[j]) -
                 (wv.d1[j] / r - wv.phi[j] / (r * r)) *
                     (Sp * W.w21[j] * f.p11[j] + (Sp + 1.0) * W.w11[j] * f.p21[j] +
                      Sp * W.w22[j] * f.p12[j] + (Sp + 1.0) * W.w12[j] * f.p22[j]);
    }
    rep.n2 = integrate_dr(g, tmp);

    // n3: curvature-coefficient antisymmetric pairing.
    for (std::size_t j = 0; j < n; ++j)
        tmp[j] = 0.5 * (wv.d2[j] - wv.d1[j] / g.r[j]) *
                 (W.w21[j] * f.p11[j] - W.w11[j] * f.p21[j] + W.w22[j] * f.p12[j] -
                  W.w12[j] * f.p22[j]);
    rep.n3 = integrate_dr(g, tmp);

    // n4: gradient-gradient antisymmetric pairing.
    for (std::size_t j = 0; j < n; ++j)
        tmp[j] = -2.0 * wv.phi[j] *
                 (dw21[j] * d11[j] - dw11[j] * d21[j] + dw22[j] * d12[j] -
                  dw12[j] * d22[j]);
    rep.n4 = integrate_dr(g, tmp);

    rep.dj_rhs = -grad_term - 0.25 * quad_term_2 - 0.25 * quad_term_1 +
                 mass * rep.n1 + rep.n2 + rep.n3 + rep.n4;

    // Per-functional derivative identities.
    Vec quadS(n), quadS1(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double r = g.r[j];
        const double base =
            wv.d2[j] / (2.0 * r) - wv.d1[j] / (2.0 * r * r) - 0.5 * wv.d3[j];
        quadS[j] = 2.0 * wv.phi[j] * Sp * Sp / (r * r * r) + base;
        quadS1[j] = 2.0 * wv.phi[j] * (Sp + 1.0) * (Sp + 1.0) / (r * r * r) + base;
    }
    auto gterm = [&](const Vec& df) {
        Vec t(n);
        for (std::size_t j = 0; j < n; ++j) t[j] = cgrad[j] * df[j] * df[j];
        return integrate_dr(g, t);
    };
    auto quad_int = [&](const Vec& q, const Vec& u) {
        Vec t(n);
        for (std::size_t j = 0; j < n; ++j) t[j] = q[j] * u[j] * u[j];
        return integrate_dr(g, t);
    };

    for (std::size_t j = 0; j < n; ++j)
        tmp[j] = mulw12[j] * (P22[j] - mass * f.p12[j]) +
                 mul11[j] * (-PW21[j] + mass * W.w11[j]);
    rep.dj1 = integrate_dr(g, tmp) - gterm(d11) - 0.5 * quad_int(quadS, f.p11);

    for (std::size_t j = 0; j < n; ++j)
        tmp[j] = -mulw21[j] * (Q11[j] - mass * f.p21[j]) +
                 mul22[j] * (QW12[j] - mass * W.w22[j]);
    rep.dk1 = integrate_dr(g, tmp) - gterm(d22) - 0.5 * quad_int(quadS1, f.p22);

    for (std::size_t j = 0; j < n; ++j)
        tmp[j] = -mulw11[j] * (P21[j] - mass * f.p11[j]) -
                 mul12[j] * (-PW22[j] + mass * W.w12[j]);
    rep.dj2 = integrate_dr(g, tmp) + gterm(d12) + 0.5 * quad_int(quadS, f.p12);

    for (std::size_t j = 0; j < n; ++j)
        tmp[j] = mulw22[j] * (Q12[j] - mass * f.p22[j]) -
                 mul21[j] * (QW11[j] - mass * W.w21[j]);
    rep.dk2 = integrate_dr(g, tmp) + gterm(d21) + 0.5 * quad_int(quadS1, f.p21);

    rep.dj_prop = rep.dj1 + rep.dk1 - rep.dj2 - rep.dk2;

    // dH/dt identity: a rotation pairing against the HWeight combination plus
    // the nonlinear imaginary pairing (identically zero for all the built-in
    // families, where conj(phi_k) W_k is real).
    for (std::size_t j = 0; j < n; ++j)
        tmp[j] = -2.0 * (hv.d1[j] - hv.phi[j] / g.r[j]) *
                     (f.p11[j] * f.p22[j] - f.p12[j] * f.p21[j]) +
                 2.0 * hv.phi[j] *
                     ((f.p21[j] * W.w22[j] - f.p22[j] * W.w21[j]) +
                      (f.p11[j] * W.w12[j] - f.p12[j] * W.w11[j]));
    rep.dh_rhs = integrate_dr(g, tmp);

    // Reference coercive integrals for the family's lower bounds.
    Vec cg_ref(n), cf_ref(n);
    if (w.family == WeightFamily::Strong) {
        for (std::size_t j = 0; j < n; ++j) {
            const double r = g.r[j], opr = 1.0 + r;
            cg_ref[j] = r * r / (opr * opr * opr);
            cf_ref[j] = 1.0 / (opr * opr * opr);
        }
    } else {
        for (std::size_t j = 0; j < n; ++j) {
            const double r = g.r[j], opr = 1.0 + r;
            cg_ref[j] = std::pow(r, 2.0 + w.delta) / (opr * opr);
            cf_ref[j] = std::pow(r, w.delta) / (opr * opr);
        }
    }
    for (std::size_t j = 0; j < n; ++j) tmp[j] = cg_ref[j] * gradsum[j];
    rep.coercive_grad = integrate_dr(g, tmp);
    for (std::size_t j = 0; j < n; ++j) tmp[j] = cf_ref[j] * msq[j];
    rep.coercive_field = integrate_dr(g, tmp);

    return rep;
}

double compute_j1(const RadialGrid& g, const SpinorField& f, const ModelSpec& m,
                  const Weight& w) {
    return virial_report(g, f, m, w).j1;
}
double compute_k1t(const RadialGrid& g, const SpinorField& f, const ModelSpec& m,
                   const Weight& w) {
    return virial_report(g, f, m, w).k1t;
}
double compute_j2(const RadialGrid& g, const SpinorField& f, const ModelSpec& m,
                  const Weight& w) {
    return virial_report(g, f, m, w).j2;
}
double compute_k2t(const RadialGrid& g, const SpinorField& f, const ModelSpec& m,
                   const Weight& w) {
    return virial_report(g, f, m, w).k2t;
}
double compute_j(const RadialGrid& g, const SpinorField& f, const ModelSpec& m,
                 const Weight& w) {
    return virial_report(g, f, m, w).j_total;
}

double compute_h(const RadialGrid& g, const SpinorField& f) {
    if (f.size() != g.n)
        throw DomainError("compute_h: field length does not match grid");
    const WeightValues hv = eval_weight(Weight{WeightFamily::HWeight, 0.0}, g);
    const Vec msq = modulus_squared(f);
    Vec tmp(g.n);
    for (std::size_t j = 0; j < g.n; ++j) tmp[j] = hv.phi[j] * msq[j];
    return integrate_dr(g, tmp);
}

IdentityCheck verify_virial_identity(const RunRecord& run, char which) {
    const std::size_t k = run.times.size();
    if (k < 5)
        throw DomainError("verify_virial_identity needs at least 5 recordings");
    if (run.virial_series.size() != k)
        throw DomainError("verify_virial_identity: run lacks virial recordings");
    const bool want_j = (which == 'J' || which == 'j');
    if (!want_j && which != 'H' && which != 'h')
        throw DomainError("verify_virial_identity: which must be 'J' or 'H'");

    std::vector<double> f(k), rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        const VirialReport& v = run.virial_series[i];
        f[i] = want_j ? v.j_total : v.h_total;
        rhs[i] = want_j ? v.dj_rhs : v.dh_rhs;
    }

    IdentityCheck out;
    out.residuals.assign(k - 2, 0.0);
    for (double r : rhs) out.max_rhs = std::max(out.max_rhs, std::abs(r));

    // Fourth-order finite differences so the residual reflects the spatial
    // scheme rather than the sampling cadence; recordings are uniformly
    // spaced by construction (see simulate()).
    const double dt = (run.times.back() - run.times.front()) / double(k - 1);
    for (std::size_t i = 1; i + 1 < k; ++i) {
        double dnum;
        if (i == 1) {
            dnum = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) /
                   (12.0 * dt);
        } else if (i + 2 == k) {
            dnum = (3.0 * f[k - 1] + 10.0 * f[k - 2] - 18.0 * f[k - 3] +
                    6.0 * f[k - 4] - f[k - 5]) /
                   (12.0 * dt);
        } else {
            dnum = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) /
                   (12.0 * dt);
        }
        out.residuals[i - 1] = std::abs(dnum - rhs[i]);
        out.max_residual = std::max(out.max_residual, out.residuals[i - 1]);
    }
    return out;
}

CoercivityCheck coercivity_check(const RunRecord& run) {
    const std::size_t k = run.times.size();
    if (k < 3) throw DomainError("coercivity_check needs at least 3 recordings");
    if (run.virial_series.size() != k)
        throw DomainError("coercivity_check: run lacks virial recordings");
    if (!(run.sup_linf < 0.5))
        throw DomainError("coercivity_check requires a small-data run (sup |phi| < 0.5)");

    CoercivityCheck out;
    out.sup_linf = run.sup_linf;
    for (std::size_t i = 1; i + 1 < k; ++i) {
        const double dt2 = run.times[i + 1] - run.times[i - 1];
        const double djdt =
            (run.virial_series[i + 1].j_total - run.virial_series[i - 1].j_total) / dt2;
        const VirialReport& md = run.virial_series[i];
        const double coercive = md.coercive_grad + md.coercive_field;
        if (coercive <= 1e-300) continue;  // zero data: nothing to bound
        out.applicable = true;
        const double ratio = -djdt / coercive;
        if (!(ratio > 0.0)) ++out.violations;
        if (out.samples == 0 || ratio < out.c_estimate) out.c_estimate = ratio;
        ++out.samples;
    }
    return out;
}

}  // namespace nldirac
