#include "nldirac/weights.hpp"
#include "nldirac/errors.hpp"

#include <algorithm>
#include <cmath>

namespace nldirac {

static void validate_weight(const Weight& w) {
    if (w.family == WeightFamily::Delta && !(w.delta > 0.0))
        throw ConfigError("Delta weight requires delta > 0");
}

WeightSample eval_weight(const Weight& w, double r) {
    if (!(r > 0.0)) throw DomainError("eval_weight: r must be positive");
    validate_weight(w);
    const double u = 1.0 + r;
    WeightSample s{};
    switch (w.family) {
    case WeightFamily::Strong: {
        const double u3 = u * u * u;
        s.phi = r * r * r / (u * u);
        s.d1 = r * r * (r + 3.0) / u3;
        s.d2 = 6.0 * r / (u3 * u);
        s.d3 = (6.0 - 18.0 * r) / (u3 * u * u);
        break;
    }
    case WeightFamily::HWeight: {
        const double u3 = u * u * u;
        s.phi = r / u3;
        s.d1 = (1.0 - 2.0 * r) / (u3 * u);
        s.d2 = 6.0 * (r - 1.0) / (u3 * u * u);
        s.d3 = (36.0 - 24.0 * r) / (u3 * u3);
        break;
    }
    case WeightFamily::Delta: {
        const double d = w.delta;
        const double rd = std::pow(r, d);
        const double u3 = u * u * u;
        s.phi = rd * r * r * r / (u * u);
        s.d1 = rd * r * r * ((3.0 + d) + (1.0 + d) * r) / u3;
        s.d2 = rd * r *
               ((d * d + d) * r * r + (2.0 * d * d + 6.0 * d) * r +
                (d * d + 5.0 * d + 6.0)) /
               (u3 * u);
        s.d3 = rd *
               ((d * d * d - d) * r * r * r + (3.0 * d * d * d + 6.0 * d * d - 9.0 * d) * r * r +
                (3.0 * d * d * d + 12.0 * d * d + 3.0 * d - 18.0) * r +
                (d * d * d + 6.0 * d * d + 11.0 * d + 6.0)) /
               (u3 * u * u);
        break;
    }
    }
    return s;
}

WeightValues eval_weight(const Weight& w, const RadialGrid& g) {
    WeightValues v;
    v.phi.resize(g.n);
    v.d1.resize(g.n);
    v.d2.resize(g.n);
    v.d3.resize(g.n);
    for (std::size_t j = 0; j < g.n; ++j) {
        const WeightSample s = eval_weight(w, g.r[j]);
        v.phi[j] = s.phi;
        v.d1[j] = s.d1;
        v.d2[j] = s.d2;
        v.d3[j] = s.d3;
    }
    return v;
}

double combo_gradient(const Weight& w, double r) {
    const WeightSample s = eval_weight(w, r);
    return s.d1 - s.phi / r;
}

double combo_quadratic(const Weight& w, int K, double r) {
    const WeightSample s = eval_weight(w, r);
    const double k2 = static_cast<double>(K) * static_cast<double>(K);
    return 4.0 * k2 * s.phi / (r * r * r) - s.d1 / (r * r) + s.d2 / r - s.d3;
}

double m1_coefficient(int S, double r, double epsilon, double C) {
    if (!(r > 0.0)) throw DomainError("m1_coefficient: r must be positive");
    const double s2 = static_cast<double>(S) * static_cast<double>(S);
    const double u = r + 1.0;
    const double e2 = epsilon * epsilon;
    return (4.0 * s2 - 1.0) * u * u * u - 2.0 * u * u + 24.0 * r - 4.0 * C * e2 * e2 * u * u;
}

double verify_weight_identities(const Weight& w, const RadialGrid& g) {
    validate_weight(w);
    if (w.family == WeightFamily::HWeight)
        throw DomainError("verify_weight_identities: defined for Strong and Delta only");
    double worst = 0.0;
    const auto note = [&worst](double a, double b) {
        worst = std::max(worst, std::abs(a - b));
    };
    for (std::size_t j = 0; j < g.n; ++j) {
        const double r = g.r[j];
        const double u = 1.0 + r;
        const double u3 = u * u * u;
        const WeightSample s = eval_weight(w, r);
        if (w.family == WeightFamily::Strong) {
            note(s.d1, r * r * (r + 3.0) / u3);
            note(s.d1 - s.phi / r, 2.0 * r * r / u3);
            note(s.phi / (r * u), r * r / u3);
            note(s.d2 - s.d1 / r, -(r * r * r + 4.0 * r * r - 3.0 * r) / (u3 * u));
            for (int K : {1, 2}) {
                const double k2 = static_cast<double>(K * K);
                note(combo_quadratic(w, K, r),
                     (4.0 * k2 * u3 - r * r * r - 5.0 * r * r + 17.0 * r - 3.0) / (u3 * u * u));
            }
        } else {
            const double d = w.delta;
            const double rd2 = std::pow(r, d) * r * r;
            note(s.d1, rd2 * ((3.0 + d) + (1.0 + d) * r) / u3);
            note(s.d1 - s.phi / r, rd2 * ((2.0 + d) + d * r) / u3);
            note(s.phi / r, rd2 / (u * u));
            note(s.d2 - s.d1 / r,
                 (rd2 / r) *
                     ((d * d - 1.0) * r * r + 2.0 * (d * d + 2.0 * d - 2.0) * r +
                      (3.0 + d * d + 4.0 * d)) /
                     (u3 * u));
        }
    }
    return worst;
}

double fd_cross_check(const Weight& w, const RadialGrid& g, double step) {
    validate_weight(w);
    if (!(step > 0.0)) throw DomainError("fd_cross_check: step must be positive");
    // Richardson-extrapolated central difference: error O(step^4).
    const auto rich = [step](auto&& fn, double r) {
        const double d1 = (fn(r + step) - fn(r - step)) / (2.0 * step);
        const double d2 = (fn(r + 0.5 * step) - fn(r - 0.5 * step)) / step;
        return (4.0 * d2 - d1) / 3.0;
    };
    double worst = 0.0;
    for (std::size_t j = 0; j < g.n; ++j) {
        const double r = g.r[j];
        if (r < 0.05 || r <= 2.0 * step) continue;
        const WeightSample s = eval_weight(w, r);
        const double e1 = rich([&](double x) { return eval_weight(w, x).phi; }, r) - s.d1;
        const double e2 = rich([&](double x) { return eval_weight(w, x).d1; }, r) - s.d2;
        const double e3 = rich([&](double x) { return eval_weight(w, x).d2; }, r) - s.d3;
        worst = std::max({worst, std::abs(e1), std::abs(e2), std::abs(e3)});
    }
    return worst;
}

} // namespace nldirac
