#pragma once

#include "types.hpp"

namespace msfdr {

// Literal restatement of the step-down definition, scanning i = m..1 and
// testing the whole prefix each time. Reference oracle for the fast engine;
// guarded to m <= 16.
RejectionSet exhaustive_stepdown(const PValueVector& pv, const CriticalConstants& c);

// Distribution of a false-null p-value: p = 1 - Phi(Z + mu) with Z standard
// normal. mu = 0 degenerates to the uniform (identity) cdf.
struct AltCdf {
    double mu = 0.0;

    double operator()(double t) const;  // cdf on [0,1]
    double inverse(double u) const;
};

struct ExactFdrSpec {
    CriticalConstants constants;
    std::size_t m0 = 0;             // true nulls, occupying the first m0 coordinates
    AltCdf alt;                     // distribution of the remaining m - m0 p-values
    double abs_tol = 1e-6;
};

// E[V/R; R>0] for the step-down procedure under independence, by
// deterministic quadrature over the unit cube. The integrand is piecewise
// constant between the critical values, so the per-axis subdivision at those
// values makes the adaptive passes converge immediately. Guarded to m <= 3.
double exact_fdr_stepdown(const ExactFdrSpec& spec);

}  // namespace msfdr
