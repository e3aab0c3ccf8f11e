#pragma once
#include <cstddef>
#include <vector>

namespace nldirac {

using Vec = std::vector<double>;

// Uniform staggered grid on (0, rmax): r_j = (j + 1/2) h.  No node sits on the
// coordinate singularity r = 0, so every 1/r^k coefficient stays finite.
struct RadialGrid {
    std::size_t n = 0;
    double rmax = 0.0;
    double h = 0.0;
    Vec r;  // node radii, strictly increasing, constant spacing h
};

// Validates rmax > 0 and n >= 16.
RadialGrid make_grid(double rmax, std::size_t n);

// One-sided 5-node estimates of f'(0) and f'(rmax) from the nearest nodes
// (exact for polynomials through degree 4).
double edge_deriv_left(const RadialGrid& g, const Vec& f);
double edge_deriv_right(const RadialGrid& g, const Vec& f);

// Composite midpoint quadrature of ∫ f dr over (0, rmax), plus the h²/24
// endpoint-slope correction so smooth integrands converge at order 4.
double integrate_dr(const RadialGrid& g, const Vec& f);

// ∫ f r dr (planar radial measure, angular factor 2π dropped throughout).
double integrate_rdr(const RadialGrid& g, const Vec& f);

// 4th-order differentiation of node data: central stencils at interior nodes,
// one-sided stencils at the two nodes next to each end of the grid.
Vec derivative(const RadialGrid& g, const Vec& f);

} // namespace nldirac
