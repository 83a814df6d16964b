#pragma once

#include <map>

#include "containlab/configuration.hpp"

namespace containlab {

// Initial degree: least d with I_d != 0, read off the minimum degree of
// a reduced Groebner basis under a degree-compatible order.
unsigned alpha(const Ideal& I, const Budget& budget = Budget::defaults());

// dim (R/I)_d = number of degree-d monomials outside the leading-term
// ideal of GB(I).
unsigned hilbert_function(const Ideal& I, unsigned d,
                          const Budget& budget = Budget::defaults());

// Degree of the fat-point scheme: sum of C(N-1+m_i, N).  Equals the
// point count for reduced configurations.
std::uint64_t scheme_degree(const FatPointConfiguration& Z);

// Castelnuovo-Mumford regularity of a *saturated* 0-dimensional ideal,
// via Hilbert-function stabilization:
//   reg = min { d >= 1 : HF_{R/I}(d-1) = scheme_degree(Z) }.
// Rejects input whose Hilbert function ever overshoots or dips, which a
// saturated fat-point ideal of Z cannot do.
unsigned regularity_0dim(const Ideal& I, const FatPointConfiguration& Z,
                         const Budget& budget = Budget::defaults());

// Z with every multiplicity scaled by m (the scheme cut out by the m-th
// symbolic power).
FatPointConfiguration scaled_scheme(const FatPointConfiguration& Z, unsigned m);

// Running min over 1 <= m <= m_max of alpha(I^(m))/m; by subadditivity
// the min-so-far is the sharpest valid upper estimate of the limit.
Rational waldschmidt_estimate(const FatPointConfiguration& Z, unsigned m_max,
                              const Budget& budget = Budget::defaults());

// reg(I^(m))/m for m = 1..m_max; a finite estimator sequence, no limit
// claimed.
std::vector<Rational> symassreg_estimate(const FatPointConfiguration& Z, unsigned m_max,
                                         const Budget& budget = Budget::defaults());

// Bundle of the above for one symbolic power, for reporting.
struct InvariantReport {
    unsigned m = 1;              // which symbolic power
    unsigned alpha = 0;
    std::uint64_t scheme_deg = 0;
    unsigned regularity = 0;
    std::map<unsigned, unsigned> hilbert;  // degree -> dim (R/I)_d, up to stabilization
    std::vector<std::string> notes;
};

InvariantReport invariant_report(const FatPointConfiguration& Z, unsigned m = 1,
                                 const Budget& budget = Budget::defaults());

}  // namespace containlab
