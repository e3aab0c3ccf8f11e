#include "nldirac/grid.hpp"
#include "nldirac/errors.hpp"

#include <cmath>

namespace nldirac {

RadialGrid make_grid(double rmax, std::size_t n) {
    if (!(rmax > 0.0)) throw ConfigError("make_grid: rmax must be positive");
    if (n < 16) throw ConfigError("make_grid: at least 16 nodes are required");
    RadialGrid g;
    g.n = n;
    g.rmax = rmax;
    g.h = rmax / static_cast<double>(n);
    g.r.resize(n);
    for (std::size_t j = 0; j < n; ++j)
        g.r[j] = (static_cast<double>(j) + 0.5) * g.h;
    return g;
}

static void check_len(const RadialGrid& g, const Vec& f, const char* who) {
    if (f.size() != g.n)
        throw DomainError(std::string(who) + ": value array length does not match grid");
}

double edge_deriv_left(const RadialGrid& g, const Vec& f) {
    check_len(g, f, "edge_deriv_left");
    return (-93.0 * f[0] + 229.0 * f[1] - 225.0 * f[2] + 111.0 * f[3] - 22.0 * f[4]) /
           (24.0 * g.h);
}

double edge_deriv_right(const RadialGrid& g, const Vec& f) {
    check_len(g, f, "edge_deriv_right");
    const std::size_t n = g.n;
    return (93.0 * f[n - 1] - 229.0 * f[n - 2] + 225.0 * f[n - 3] - 111.0 * f[n - 4] +
            22.0 * f[n - 5]) /
           (24.0 * g.h);
}

double integrate_dr(const RadialGrid& g, const Vec& f) {
    check_len(g, f, "integrate_dr");
    double s = 0.0;
    for (double v : f) s += v;
    const double corr = (g.h * g.h / 24.0) * (edge_deriv_right(g, f) - edge_deriv_left(g, f));
    return g.h * s + corr;
}

double integrate_rdr(const RadialGrid& g, const Vec& f) {
    check_len(g, f, "integrate_rdr");
    Vec rf(g.n);
    for (std::size_t j = 0; j < g.n; ++j) rf[j] = g.r[j] * f[j];
    return integrate_dr(g, rf);
}

Vec derivative(const RadialGrid& g, const Vec& f) {
    check_len(g, f, "derivative");
    const std::size_t n = g.n;
    const double ih = 1.0 / (12.0 * g.h);
    Vec df(n);
    df[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) * ih;
    df[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) * ih;
    for (std::size_t j = 2; j + 2 < n; ++j)
        df[j] = (f[j - 2] - 8.0 * f[j - 1] + 8.0 * f[j + 1] - f[j + 2]) * ih;
    df[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] -
                 f[n - 5]) * ih;
    df[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] +
                 3.0 * f[n - 5]) * ih;
    return df;
}

} // namespace nldirac
