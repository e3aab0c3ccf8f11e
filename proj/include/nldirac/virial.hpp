#pragma once
#include "nldirac/grid.hpp"
#include "nldirac/spinor.hpp"
#include "nldirac/weights.hpp"

namespace nldirac {

// All weighted functionals attached to one field snapshot: the four pieces of
// the momentum-type functional J (built from the Strong/Delta weight), the
// field-space functional H (built from the HWeight multiplier), the exact
// time-derivative expressions for both, and the split of dJ/dt into linear
// coefficients plus the four nonlinear terms n1..n4.  All integrals use the
// plain radial measure dr; the angular factor is dropped consistently on both
// sides of every identity.
struct VirialReport {
    double j1 = 0.0, k1t = 0.0, j2 = 0.0, k2t = 0.0;
    double j_total = 0.0;   // j1 + k1t - j2 - k2t
    double h_total = 0.0;   // int hphi |phi|^2 dr

    double n1 = 0.0, n2 = 0.0, n3 = 0.0, n4 = 0.0;
    double dj_rhs = 0.0;    // collapsed derivative identity for J
    double dh_rhs = 0.0;    // derivative identity for H

    // Per-functional derivative identities (before collapsing); their signed
    // sum dj_prop must agree with dj_rhs up to quadrature error.
    double dj1 = 0.0, dk1 = 0.0, dj2 = 0.0, dk2 = 0.0;
    double dj_prop = 0.0;

    // Reference coercive quantities: the gradient and field integrals against
    // the family's lower-bound densities, used to estimate the coercivity
    // constant along a run.
    double coercive_grad = 0.0;
    double coercive_field = 0.0;
};

// Computes every entry of VirialReport for one snapshot.  The weight must be
// Strong or Delta (HWeight parametrizes H internally and is rejected here).
VirialReport virial_report(const RadialGrid& g, const SpinorField& f,
                           const ModelSpec& m, const Weight& w);

// Single-functional accessors (each evaluates the full report).
double compute_j1(const RadialGrid& g, const SpinorField& f, const ModelSpec& m,
                  const Weight& w);
double compute_k1t(const RadialGrid& g, const SpinorField& f, const ModelSpec& m,
                   const Weight& w);
double compute_j2(const RadialGrid& g, const SpinorField& f, const ModelSpec& m,
                  const Weight& w);
double compute_k2t(const RadialGrid& g, const SpinorField& f, const ModelSpec& m,
                   const Weight& w);
double compute_j(const RadialGrid& g, const SpinorField& f, const ModelSpec& m,
                 const Weight& w);
double compute_h(const RadialGrid& g, const SpinorField& f);

}  // namespace nldirac
