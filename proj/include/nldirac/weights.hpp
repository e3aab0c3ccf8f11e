#pragma once
#include "nldirac/grid.hpp"

namespace nldirac {

// The three radial multiplier families used inside the virial functionals:
//   Strong : phi(r) = r^3 / (1+r)^2
//   Delta  : phi(r) = r^(3+delta) / (1+r)^2,  delta > 0
//   HWeight: phi(r) = r / (1+r)^3
enum class WeightFamily { Strong, Delta, HWeight };

struct Weight {
    WeightFamily family = WeightFamily::Strong;
    double delta = 0.1;  // exponent shift, used by the Delta family only
};

// A weight value together with its first three radial derivatives.
struct WeightSample {
    double phi, d1, d2, d3;
};

// Closed-form evaluation; rejects r <= 0.
WeightSample eval_weight(const Weight& w, double r);

// Bulk evaluation over a grid (same closed forms).
struct WeightValues {
    Vec phi, d1, d2, d3;
};
WeightValues eval_weight(const Weight& w, const RadialGrid& g);

// phi' - phi/r, the coefficient of the gradient term in the virial derivative.
double combo_gradient(const Weight& w, double r);

// 4K² phi/r³ - phi'/r² + phi''/r - phi''', the quadratic-term coefficient.
double combo_quadratic(const Weight& w, int K, double r);

// (4S²-1)(r+1)³ - 2(r+1)² + 24r - 4C eps⁴ (r+1)², the massless-coercivity
// numerator with its small-data correction.
double m1_coefficient(int S, double r, double epsilon, double C);

// Max over grid nodes of the deviation between the assembled WeightSample
// combinations and their closed-form quotient identities (Strong and Delta
// families).  All quantities are closed forms, so this is a pure algebra
// consistency check at machine precision.
double verify_weight_identities(const Weight& w, const RadialGrid& g);

// Independent finite-difference oracle: compares d1, d2, d3 against
// Richardson-extrapolated central differences (of phi, d1, d2 respectively)
// with the given step.  Nodes below r = 0.05 are skipped: for fractional
// exponents the fifth derivative grows like r^(delta-4) there and the
// order-4 difference stencil loses its accuracy floor.
double fd_cross_check(const Weight& w, const RadialGrid& g, double step);

} // namespace nldirac
