#pragma once
#include "nldirac/grid.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace nldirac {

// Real components of the reduced radial spinor.  The two complex components
// are phi1 = p11 + i p12 and phi2 = p21 + i p22, each sampled on the grid.
struct SpinorField {
    Vec p11, p12, p21, p22;

    static SpinorField zeros(std::size_t n);
    std::size_t size() const { return p11.size(); }
};

// Pointwise |phi|^2 = |phi1|^2 + |phi2|^2 and |grad phi|^2 (sum of squared
// radial derivatives of the four real components).
Vec modulus_squared(const SpinorField& f);
Vec gradient_squared(const RadialGrid& g, const SpinorField& f);
bool all_finite(const SpinorField& f);

enum class Nonlinearity : std::uint8_t { Zero, Honeycomb, Soler, PurePower };

std::string to_string(Nonlinearity family);
Nonlinearity nonlinearity_from_string(const std::string& name);

// Model parameters for the evolution system
//   d/dt p11 = P p22 - m p12 + W12        P = d/dr + (S+1)/r
//   d/dt p22 = Q p11 - m p21 - W21        Q = d/dr - S/r
//   d/dt p12 = -P p21 + m p11 - W11
//   d/dt p21 = -Q p12 + m p22 + W22
// with W1 = W11 + i W12, W2 = W21 + i W22 the nonlinear terms.
struct ModelSpec {
    double mass = 0.0;
    int vorticity = 1;  // S, any integer except 0 and -1
    Nonlinearity family = Nonlinearity::Zero;
    double g = 1.0;      // overall coupling
    double beta1 = 2.0;  // Honeycomb self-coupling
    double beta2 = 1.0;  // Honeycomb cross-coupling
    double power = 3.0;  // PurePower exponent p >= 2
};

// Throws ConfigError on invalid parameters (S in {0,-1}, PurePower p < 2).
void validate(const ModelSpec& m);

// Homogeneity degree of the nonlinearity: |W(phi)| <= C |phi|^p near 0.
// 3 for Honeycomb and Soler, p for PurePower, and +infinity convention is
// avoided for Zero by returning 3 (any power bounds the zero map).
double structural_power(const ModelSpec& m);

// Real components of W evaluated pointwise on a field.
struct NonlinearityValue {
    Vec w11, w12, w21, w22;
};
NonlinearityValue eval_nonlinearity(const ModelSpec& m, const SpinorField& f);

// Equivariance of W under the vortex phase (theta rotation): evaluates W on
// the rotated cartesian spinor pair (e^{i S theta} phi1, i e^{i(S+1) theta} phi2)
// and compares with the same rotation applied to W(phi1, i phi2).  Returns the
// worst absolute mismatch over the four real components.  `sample` holds
// (p11, p12, p21, p22) at a single point.
double gauge_residual(const ModelSpec& m, const std::array<double, 4>& sample,
                      double theta, int S);

// sup over grid nodes of (|W1| + |W2|) / |phi|^p with p = structural_power.
// Requires sup |phi| < 1 (throws DomainError otherwise) so the bound is the
// small-field structural one.
double power_bound_ratio(const ModelSpec& m, const SpinorField& f);

struct NormReport {
    double l2_rdr = 0.0;   // sqrt(int |phi|^2 r dr)
    double h1_rdr = 0.0;   // sqrt(int (|phi|^2 + |grad phi|^2) r dr)
    double e_delta = 0.0;  // <r>^{delta/2}-weighted H1-type sum norm
    double l_inf = 0.0;    // max_j |phi|(r_j)
};
NormReport norms(const RadialGrid& g, const SpinorField& f, double delta);

// L2(r dr) norm restricted to the ball r < R, plain midpoint sum.  Requires
// 0 < R <= rmax.
double local_l2(const RadialGrid& g, const SpinorField& f, double R);

// sup_j sqrt(r_j) |phi|(r_j) divided by sqrt(2*pi*int(|phi|^2+|grad phi|^2) r dr).
// The 2*pi restores the full planar measure in the denominator only; it is the
// convention under which the classical radial-embedding constant is quoted.
// Throws DomainError on an identically zero field.
double strauss_ratio(const RadialGrid& g, const SpinorField& f);

// Rebuilds the cartesian two-component spinor from the radial data on the
// tensor grid {r_j} x {theta_t = 2 pi t / T}, row-major in r:
//   psi1 = e^{i S theta} phi1,  psi2 = i e^{i (S+1) theta} phi2.
// Requires theta_samples >= 4.
std::vector<std::array<std::complex<double>, 2>> reconstruct_cartesian(
    const RadialGrid& g, const SpinorField& f, int S, std::size_t theta_samples);

}  // namespace nldirac
