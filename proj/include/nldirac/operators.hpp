#pragma once
#include "nldirac/grid.hpp"

#include <array>

namespace nldirac {

// Result of the small constrained solve that closes the derivative stencils
// near r = 0 (dimensionless units: node coordinates x_j = j + 1/2, operator
// entries carry a factor 1/h when applied).
struct Closure {
    static constexpr int R = 8;   // solved block rows of P
    static constexpr int C = 14;  // solved block columns of P
    static constexpr int V = 12;  // solved norm weights (first V nodes)

    std::array<double, static_cast<std::size_t>(R) * C> block{};  // row-major
    std::array<double, V> wnorm{};  // multiplies x_j in the diagonal norm
    double hard_defect = 0.0;       // worst residual of the equality classes
    double soft_defect = 0.0;       // worst residual of the least-squares classes
};

// Solves the closure for a given vorticity S.  The block rows of
// P = d/dx + (S+1)/x are chosen so that
//   * P reproduces the classes x and x² exactly and x³, x⁴ in least squares,
//   * Q := -Om^{-1} P^T Om reproduces x exactly and x², x³ in least squares
// on the first C columns, with a positive diagonal norm Om close to x_j.
// Exactness of both members of an antisymmetric class pair is obstructed for
// any positive diagonal norm (the boundary flux of the pair has one sign), so
// the split above keeps every O(1)-critical class exact and the rest soft.
Closure build_closure(int S);

// The discrete operator pair for vorticity S on a staggered grid:
//   apply_P u ≈ (d/dr + (S+1)/r) u,    apply_Q u ≈ (d/dr - S/r) u.
// P uses 4th-order central stencils inside, one-sided rows at the outer
// boundary, and the solved block near the origin; Q is exactly -Om^{-1}P^T Om,
// which makes the first-order system generator skew in the Om inner product:
// semi-discrete mass is conserved identically and the spectrum is imaginary.
class RadialOperators {
public:
    RadialOperators(const RadialGrid& g, int S);

    int vorticity() const { return S_; }
    const RadialGrid& grid() const { return grid_; }
    const Closure& closure() const { return closure_; }

    // Diagonal norm weights (dimensionless; omega_j ≈ x_j = r_j/h).  The
    // associated quadrature for ∫ f r dr is h² · Σ omega_j f_j.
    const Vec& omega() const { return omega_; }

    void apply_P(const Vec& u, Vec& out) const;
    void apply_Q(const Vec& u, Vec& out) const;
    Vec apply_P(const Vec& u) const;
    Vec apply_Q(const Vec& u) const;

private:
    RadialGrid grid_;
    int S_;
    Closure closure_;
    Vec omega_;  // size n
    Vec diag_;   // (S+1)/r_j, used by the non-block rows of P
};

} // namespace nldirac
