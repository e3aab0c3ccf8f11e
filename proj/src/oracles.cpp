#include "nldirac/oracles.hpp"

#include <cmath>

#include "nldirac/errors.hpp"
#include "nldirac/operators.hpp"

namespace nldirac {

void validate(const TestFunction& f) {
    if (f.terms.empty()) throw DomainError("test function needs at least one term");
    for (const auto& t : f.terms) {
        if (t.q < 2) throw DomainError("test function exponent must satisfy q >= 2");
        if (!(t.b > 0.0)) throw DomainError("test function decay rate must be > 0");
    }
}

double TestFunction::value(double r) const {
    double s = 0.0;
    for (const auto& t : terms) s += t.a * std::pow(r, t.q) * std::exp(-t.b * r);
    return s;
}

double TestFunction::deriv1(double r) const {
    double s = 0.0;
    for (const auto& t : terms)
        s += t.a * std::exp(-t.b * r) *
             (t.q * std::pow(r, t.q - 1) - t.b * std::pow(r, t.q));
    return s;
}

double TestFunction::deriv2(double r) const {
    double s = 0.0;
    for (const auto& t : terms)
        s += t.a * std::exp(-t.b * r) *
             (t.q * (t.q - 1) * std::pow(r, t.q - 2) -
              2.0 * t.b * t.q * std::pow(r, t.q - 1) + t.b * t.b * std::pow(r, t.q));
    return s;
}

IdentityValue second_order_identity(const TestFunction& f, const Weight& w, int K,
                                    const RadialGrid& g, int which) {
    validate(f);
    if (which != 1 && which != 2)
        throw DomainError("second_order_identity: which must be 1 or 2");
    const int M = (which == 1) ? K : K + 1;

    const std::size_t n = g.n;
    Vec lhs_dens(n), grad_dens(n), quad_dens(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double r = g.r[j];
        const WeightSample ws = eval_weight(w, r);
        const double fv = f.value(r), f1 = f.deriv1(r), f2 = f.deriv2(r);
        const double Lf =
            f2 + f1 / r - static_cast<double>(M) * static_cast<double>(M) * fv / (r * r);
        lhs_dens[j] = (ws.phi * f1 + 0.5 * ws.d1 * fv) * Lf;
        grad_dens[j] = (ws.d1 - ws.phi / r) * f1 * f1;
        quad_dens[j] = combo_quadratic(w, M, r) * fv * fv;
    }
    IdentityValue out;
    out.lhs = integrate_dr(g, lhs_dens);
    out.rhs = -integrate_dr(g, grad_dens) - 0.25 * integrate_dr(g, quad_dens);
    out.residual = std::abs(out.lhs - out.rhs);
    return out;
}

double pairing_residual(const TestFunction& f, const Weight& w, const RadialGrid& g) {
    validate(f);
    Vec dens(g.n);
    for (std::size_t j = 0; j < g.n; ++j) {
        const double r = g.r[j];
        const WeightSample ws = eval_weight(w, r);
        const double fv = f.value(r), f1 = f.deriv1(r);
        dens[j] = (ws.phi * f1 + 0.5 * ws.d1 * fv) * fv;
    }
    return std::abs(integrate_dr(g, dens));
}

// ---------------------------------------------------------------------------

double static_profile_V(int S, double r) {
    if (S == 0 || S == -1) throw DomainError("static profile needs S outside {0,-1}");
    if (!(r > 0.0)) throw DomainError("static profile is evaluated at r > 0");
    const int q = 2 * S + 1;
    const double aq = std::abs(static_cast<double>(q));
    return std::sqrt(2.0 * aq) * std::pow(r, -(S + 1.0)) /
           (std::pow(r, static_cast<double>(q)) + std::pow(r, -static_cast<double>(q)));
}

double static_profile_U(int S, double r) {
    return std::pow(r, static_cast<double>(2 * S + 1)) * static_profile_V(S, r);
}

SpinorField static_profile(const StaticProfileSpec& spec, const RadialGrid& g) {
    if (spec.S == 0 || spec.S == -1)
        throw DomainError("static profile needs S outside {0,-1}");
    if (!(spec.lambda > 0.0)) throw DomainError("static profile needs lambda > 0");
    const double tau = (2 * spec.S + 1 > 0) ? 1.0 : -1.0;
    const double sigma = 1.0;
    const double scale = 1.0 / std::sqrt(spec.lambda);
    SpinorField f = SpinorField::zeros(g.n);
    for (std::size_t j = 0; j < g.n; ++j) {
        const double s = g.r[j] / spec.lambda;
        f.p11[j] = tau * scale * static_profile_V(spec.S, s);
        f.p21[j] = sigma * scale * static_profile_U(spec.S, s);
    }
    return f;
}

double static_residual(const RadialGrid& g, const SpinorField& profile, int S,
                       int coupling_sign) {
    if (coupling_sign != 1 && coupling_sign != -1)
        throw DomainError("static_residual: coupling sign must be +1 or -1");
    if (profile.size() != g.n)
        throw DomainError("static_residual: profile length does not match grid");
    RadialOperators ops(g, S);
    const std::size_t n = g.n;
    Vec Qp11(n), Pp21(n), dens(n);
    ops.apply_Q(profile.p11, Qp11);
    ops.apply_P(profile.p21, Pp21);
    const double gs = static_cast<double>(coupling_sign);
    for (std::size_t j = 0; j < n; ++j) {
        const double s2 = profile.p11[j] * profile.p11[j] +
                          profile.p21[j] * profile.p21[j];
        // Massless stationarity of a real (p11, p21) pair under W = gs |phi|^2 phi:
        //   d/dt p22 = Q p11 - w21 = Q p11 - gs s2 p21
        //   d/dt p12 = -P p21 - w11 = -P p21 - gs s2 p11
        const double res22 = Qp11[j] - gs * s2 * profile.p21[j];
        const double res12 = -Pp21[j] - gs * s2 * profile.p11[j];
        dens[j] = res22 * res22 + res12 * res12;
    }
    return std::sqrt(std::max(0.0, integrate_rdr(g, dens)));
}

std::vector<SmallnessRow> smallness_report(int S, const RadialGrid& g) {
    std::vector<SmallnessRow> rows;
    for (double lambda : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        const SpinorField f = static_profile(StaticProfileSpec{S, lambda}, g);
        const NormReport nr = norms(g, f, 0.0);
        rows.push_back(SmallnessRow{lambda, nr.l_inf, nr.l2_rdr});
    }
    return rows;
}

SpinorField bessel_field(const RadialGrid& g, int S, double k, double t) {
    if (S < 1) throw DomainError("bessel_field supports S >= 1");
    if (!(k > 0.0)) throw DomainError("bessel_field needs k > 0");
    SpinorField f = SpinorField::zeros(g.n);
    const double c = std::cos(k * t), s = std::sin(k * t);
    for (std::size_t j = 0; j < g.n; ++j) {
        const double x = k * g.r[j];
        f.p11[j] = std::cyl_bessel_j(static_cast<double>(S), x) * c;
        f.p22[j] = -std::cyl_bessel_j(static_cast<double>(S + 1), x) * s;
    }
    return f;
}

}  // namespace nldirac
