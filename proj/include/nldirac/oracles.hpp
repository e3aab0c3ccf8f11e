#pragma once
#include <vector>

#include "nldirac/grid.hpp"
#include "nldirac/spinor.hpp"
#include "nldirac/weights.hpp"

namespace nldirac {

// Synthetic smooth test function: a sum of terms a * r^q * exp(-b r) with
// integer q >= 2 and b > 0, so that f, f/r and f/r^2 all vanish at the origin
// and decay at infinity.  Derivatives are closed forms, independent of any
// grid stencil.
struct TestFunction {
    struct Term {
        double a = 1.0;
        int q = 2;
        double b = 1.0;
    };
    std::vector<Term> terms;

    double value(double r) const;
    double deriv1(double r) const;
    double deriv2(double r) const;
};

// Validates q >= 2, b > 0 on every term.
void validate(const TestFunction& f);

struct IdentityValue {
    double lhs = 0.0, rhs = 0.0, residual = 0.0;
};

// Weighted second-order identity oracle.  `which` picks the operator
// composition order:
//   1:  L f = f'' + f'/r - K^2     f / r^2   (quadratic coefficient uses K)
//   2:  L f = f'' + f'/r - (K+1)^2 f / r^2   (quadratic coefficient uses K+1)
// and the identity checked is
//   int (phi f' + 1/2 phi' f) (L f) dr
//     = - int (phi' - phi/r) (f')^2 dr - 1/4 int cq(M) f^2 dr,
// with cq the combo_quadratic coefficient at M = K or K+1.  Every ingredient
// on both sides is a closed form; only the final quadrature uses the grid.
IdentityValue second_order_identity(const TestFunction& f, const Weight& w, int K,
                                    const RadialGrid& g, int which);

// Total-derivative pairing oracle: int (phi f' + 1/2 phi' f) f dr = 0.
// Returns the absolute value of the quadrature of the exact integrand.
double pairing_residual(const TestFunction& f, const Weight& w, const RadialGrid& g);

// ---------------------------------------------------------------------------
// Explicit static solution of the massless cubic system.

struct StaticProfileSpec {
    int S = 1;
    double lambda = 1.0;
};

// Scalar evaluation of the two real profile components (before the tau/sigma
// signs):  V(r) = sqrt(2|q|) r^-(S+1) / (r^q + r^-q) with q = 2S+1, and
// U(r) = r^q V(r).
double static_profile_V(int S, double r);
double static_profile_U(int S, double r);

// The static field: p11 = tau lambda^-1/2 V(r/lambda),
// p21 = sigma lambda^-1/2 U(r/lambda), p12 = p22 = 0, with tau = sigma = 1
// when 2S+1 > 0 and -tau = sigma = 1 when 2S+1 < 0.
SpinorField static_profile(const StaticProfileSpec& spec, const RadialGrid& g);

// Selected coupling sign for the stationarity test: the profile solves the
// massless cubic system W = sign * |phi|^2 phi with sign = -1 (attractive).
// The opposite sign is kept as the rejected convention for the separation
// check.  Chosen empirically (the residual identifies it uniquely) and then
// frozen; regression-tested.
inline constexpr int kStaticCouplingSign = -1;

// L2(r dr) size of the stationarity defect of `profile` under the massless
// cubic model with the given coupling sign, using the conservative discrete
// operators for vorticity S.
double static_residual(const RadialGrid& g, const SpinorField& profile, int S,
                       int coupling_sign = kStaticCouplingSign);

// Norm sizes of the profile across dilations: the profile family is never
// small in L_inf and L2(r dr) simultaneously, whatever lambda.
struct SmallnessRow {
    double lambda = 0.0, l_inf = 0.0, l2_rdr = 0.0;
};
std::vector<SmallnessRow> smallness_report(int S, const RadialGrid& g);

// ---------------------------------------------------------------------------
// Exact oscillatory solution of the linear massless system (for convergence
// tests):  p11 = J_S(k r) cos(k t), p22 = -J_{S+1}(k r) sin(k t).  S >= 1.
SpinorField bessel_field(const RadialGrid& g, int S, double k, double t);

}  // namespace nldirac
