#include "nldirac/spinor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nldirac/errors.hpp"

namespace nldirac {

SpinorField SpinorField::zeros(std::size_t n) {
    SpinorField f;
    f.p11.assign(n, 0.0);
    f.p12.assign(n, 0.0);
    f.p21.assign(n, 0.0);
    f.p22.assign(n, 0.0);
    return f;
}

namespace {

void check_field(const SpinorField& f) {
    const std::size_t n = f.p11.size();
    if (n == 0 || f.p12.size() != n || f.p21.size() != n || f.p22.size() != n)
        throw DomainError("spinor field components must share a nonzero length");
}

void check_field_grid(const RadialGrid& g, const SpinorField& f) {
    check_field(f);
    if (f.p11.size() != g.n)
        throw DomainError("spinor field length does not match grid");
}

}  // namespace

Vec modulus_squared(const SpinorField& f) {
    check_field(f);
    const std::size_t n = f.size();
    Vec m(n);
    for (std::size_t j = 0; j < n; ++j)
        m[j] = f.p11[j] * f.p11[j] + f.p12[j] * f.p12[j] + f.p21[j] * f.p21[j] +
               f.p22[j] * f.p22[j];
    return m;
}

Vec gradient_squared(const RadialGrid& g, const SpinorField& f) {
    check_field_grid(g, f);
    const Vec d11 = derivative(g, f.p11);
    const Vec d12 = derivative(g, f.p12);
    const Vec d21 = derivative(g, f.p21);
    const Vec d22 = derivative(g, f.p22);
    Vec out(g.n);
    for (std::size_t j = 0; j < g.n; ++j)
        out[j] = d11[j] * d11[j] + d12[j] * d12[j] + d21[j] * d21[j] + d22[j] * d22[j];
    return out;
}

bool all_finite(const SpinorField& f) {
    auto ok = [](const Vec& v) {
        return std::all_of(v.begin(), v.end(),
                           [](double x) { return std::isfinite(x); });
    };
    return ok(f.p11) && ok(f.p12) && ok(f.p21) && ok(f.p22);
}

std::string to_string(Nonlinearity family) {
    switch (family) {
        case Nonlinearity::Zero: return "zero";
        case Nonlinearity::Honeycomb: return "honeycomb";
        case Nonlinearity::Soler: return "soler";
        case Nonlinearity::PurePower: return "pure_power";
    }
    return "unknown";
}

Nonlinearity nonlinearity_from_string(const std::string& name) {
    if (name == "zero") return Nonlinearity::Zero;
    if (name == "honeycomb") return Nonlinearity::Honeycomb;
    if (name == "soler") return Nonlinearity::Soler;
    if (name == "pure_power") return Nonlinearity::PurePower;
    throw ConfigError("unknown nonlinearity family: " + name);
}

void validate(const ModelSpec& m) {
    if (m.vorticity == 0 || m.vorticity == -1)
        throw ConfigError("vorticity S must avoid 0 and -1 (operator singular rows)");
    if (!std::isfinite(m.mass) || m.mass < 0.0)
        throw ConfigError("mass must be finite and nonnegative");
    if (!std::isfinite(m.g))
        throw ConfigError("coupling g must be finite");
    if (m.family == Nonlinearity::PurePower && !(m.power >= 2.0))
        throw ConfigError("pure_power exponent must satisfy p >= 2");
    if (m.family == Nonlinearity::Honeycomb &&
        (!std::isfinite(m.beta1) || !std::isfinite(m.beta2)))
        throw ConfigError("honeycomb couplings must be finite");
}

double structural_power(const ModelSpec& m) {
    if (m.family == Nonlinearity::PurePower) return m.power;
    return 3.0;
}

NonlinearityValue eval_nonlinearity(const ModelSpec& m, const SpinorField& f) {
    check_field(f);
    const std::size_t n = f.size();
    NonlinearityValue w;
    w.w11.assign(n, 0.0);
    w.w12.assign(n, 0.0);
    w.w21.assign(n, 0.0);
    w.w22.assign(n, 0.0);
    if (m.family == Nonlinearity::Zero) return w;

    for (std::size_t j = 0; j < n; ++j) {
        const double m1 = f.p11[j] * f.p11[j] + f.p12[j] * f.p12[j];
        const double m2 = f.p21[j] * f.p21[j] + f.p22[j] * f.p22[j];
        double c1 = 0.0, c2 = 0.0;  // W1 = c1 * phi1, W2 = c2 * phi2
        switch (m.family) {
            case Nonlinearity::Honeycomb:
                c1 = m.g * (m.beta1 * m1 + m.beta2 * m2);
                c2 = m.g * (m.beta2 * m1 + m.beta1 * m2);
                break;
            case Nonlinearity::Soler:
                c1 = -m.g * (m1 - m2);
                c2 = m.g * (m1 - m2);
                break;
            case Nonlinearity::PurePower:
                c1 = c2 = m.g * std::pow(m1 + m2, 0.5 * (m.power - 1.0));
                break;
            case Nonlinearity::Zero:
                break;
        }
        w.w11[j] = c1 * f.p11[j];
        w.w12[j] = c1 * f.p12[j];
        w.w21[j] = c2 * f.p21[j];
        w.w22[j] = c2 * f.p22[j];
    }
    return w;
}

namespace {

// W on a single complex pair; shares the family switch with the bulk path.
std::array<std::complex<double>, 2> eval_point(const ModelSpec& m,
                                               std::complex<double> z1,
                                               std::complex<double> z2) {
    const double m1 = std::norm(z1);
    const double m2 = std::norm(z2);
    double c1 = 0.0, c2 = 0.0;
    switch (m.family) {
        case Nonlinearity::Zero: break;
        case Nonlinearity::Honeycomb:
            c1 = m.g * (m.beta1 * m1 + m.beta2 * m2);
            c2 = m.g * (m.beta2 * m1 + m.beta1 * m2);
            break;
        case Nonlinearity::Soler:
            c1 = -m.g * (m1 - m2);
            c2 = m.g * (m1 - m2);
            break;
        case Nonlinearity::PurePower:
            c1 = c2 = m.g * std::pow(m1 + m2, 0.5 * (m.power - 1.0));
            break;
    }
    return {c1 * z1, c2 * z2};
}

}  // namespace

double gauge_residual(const ModelSpec& m, const std::array<double, 4>& sample,
                      double theta, int S) {
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> phi1(sample[0], sample[1]);
    const std::complex<double> phi2(sample[2], sample[3]);
    const std::complex<double> e1 = std::exp(i * (static_cast<double>(S) * theta));
    const std::complex<double> e2 = std::exp(i * (static_cast<double>(S + 1) * theta));

    // Full cartesian arguments at angle theta, and the same at theta = 0.
    const auto rotated = eval_point(m, e1 * phi1, i * e2 * phi2);
    const auto base = eval_point(m, phi1, i * phi2);
    const std::complex<double> expect1 = e1 * base[0];
    const std::complex<double> expect2 = e2 * base[1];

    double worst = 0.0;
    worst = std::max(worst, std::abs(rotated[0].real() - expect1.real()));
    worst = std::max(worst, std::abs(rotated[0].imag() - expect1.imag()));
    worst = std::max(worst, std::abs(rotated[1].real() - expect2.real()));
    worst = std::max(worst, std::abs(rotated[1].imag() - expect2.imag()));
    return worst;
}

double power_bound_ratio(const ModelSpec& m, const SpinorField& f) {
    check_field(f);
    const Vec msq = modulus_squared(f);
    const double sup2 = *std::max_element(msq.begin(), msq.end());
    if (sup2 >= 1.0)
        throw DomainError("power_bound_ratio requires sup |phi| < 1");
    const NonlinearityValue w = eval_nonlinearity(m, f);
    const double p = structural_power(m);
    double ratio = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (msq[j] <= 0.0) continue;
        const double aw = std::hypot(w.w11[j], w.w12[j]) + std::hypot(w.w21[j], w.w22[j]);
        ratio = std::max(ratio, aw / std::pow(std::sqrt(msq[j]), p));
    }
    return ratio;
}

NormReport norms(const RadialGrid& g, const SpinorField& f, double delta) {
    check_field_grid(g, f);
    if (delta < 0.0) throw DomainError("norms: delta must be nonnegative");
    const Vec msq = modulus_squared(f);
    const Vec gsq = gradient_squared(g, f);
    const std::size_t n = g.n;

    Vec h1_dens(n), wm(n), wg(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double bracket = std::pow(1.0 + g.r[j] * g.r[j], 0.5 * delta);  // <r>^delta
        h1_dens[j] = msq[j] + gsq[j];
        wm[j] = bracket * msq[j];
        wg[j] = bracket * gsq[j];
    }

    NormReport out;
    out.l2_rdr = std::sqrt(std::max(0.0, integrate_rdr(g, msq)));
    out.h1_rdr = std::sqrt(std::max(0.0, integrate_rdr(g, h1_dens)));
    out.e_delta = std::sqrt(std::max(0.0, integrate_rdr(g, wg))) +
                  std::sqrt(std::max(0.0, integrate_rdr(g, wm)));
    double sup = 0.0;
    for (std::size_t j = 0; j < n; ++j) sup = std::max(sup, msq[j]);
    out.l_inf = std::sqrt(sup);
    return out;
}

double local_l2(const RadialGrid& g, const SpinorField& f, double R) {
    check_field_grid(g, f);
    if (!(R > 0.0) || R > g.rmax * (1.0 + 1e-12))
        throw DomainError("local_l2 requires 0 < R <= rmax");
    const Vec msq = modulus_squared(f);
    double acc = 0.0;
    for (std::size_t j = 0; j < g.n && g.r[j] < R; ++j)
        acc += msq[j] * g.r[j] * g.h;
    return std::sqrt(acc);
}

double strauss_ratio(const RadialGrid& g, const SpinorField& f) {
    check_field_grid(g, f);
    const Vec msq = modulus_squared(f);
    const Vec gsq = gradient_squared(g, f);
    double sup = 0.0;
    Vec h1_dens(g.n);
    for (std::size_t j = 0; j < g.n; ++j) {
        sup = std::max(sup, std::sqrt(g.r[j]) * std::sqrt(msq[j]));
        h1_dens[j] = msq[j] + gsq[j];
    }
    const double h1sq = integrate_rdr(g, h1_dens);
    if (!(h1sq > 0.0))
        throw DomainError("strauss_ratio is undefined for the zero field");
    return sup / std::sqrt(2.0 * M_PI * h1sq);
}

std::vector<std::array<std::complex<double>, 2>> reconstruct_cartesian(
    const RadialGrid& g, const SpinorField& f, int S, std::size_t theta_samples) {
    check_field_grid(g, f);
    if (theta_samples < 4)
        throw DomainError("reconstruct_cartesian requires at least 4 angular samples");
    const std::complex<double> i(0.0, 1.0);
    std::vector<std::array<std::complex<double>, 2>> out(g.n * theta_samples);
    for (std::size_t j = 0; j < g.n; ++j) {
        const std::complex<double> phi1(f.p11[j], f.p12[j]);
        const std::complex<double> phi2(f.p21[j], f.p22[j]);
        for (std::size_t t = 0; t < theta_samples; ++t) {
            const double theta =
                2.0 * M_PI * static_cast<double>(t) / static_cast<double>(theta_samples);
            const std::complex<double> e1 = std::exp(i * (static_cast<double>(S) * theta));
            const std::complex<double> e2 =
                std::exp(i * (static_cast<double>(S + 1) * theta));
            out[j * theta_samples + t] = {e1 * phi1, i * e2 * phi2};
        }
    }
    return out;
}

}  // namespace nldirac
