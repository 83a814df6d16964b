#include "containlab/invariants.hpp"

#include <sstream>

#include "containlab/groebner.hpp"
#include "containlab/numeric.hpp"

namespace containlab {

unsigned alpha(const Ideal& I, const Budget& budget) {
    if (!I.ring()->order().degree_compatible())
        throw ContainLabError("alpha needs a degree-compatible ambient order");
    auto gb = I.groebner(MonomialOrder::grevlex(), budget);
    auto d = gb->min_degree();
    if (!d) throw ContainLabError("alpha of the zero ideal is undefined");
    return *d;
}

unsigned hilbert_function(const Ideal& I, unsigned d, const Budget& budget) {
    auto gb = I.groebner(MonomialOrder::grevlex(), budget);
    unsigned standard = 0;
    for (const auto& mono : monomials_of_degree(I.ring()->num_vars(), d)) {
        bool in_lt = false;
        for (const auto& g : gb->elements())
            if (g.leading_monomial().divides(mono)) {
                in_lt = true;
                break;
            }
        if (!in_lt) ++standard;
    }
    return standard;
}

std::uint64_t scheme_degree(const FatPointConfiguration& Z) {
    const unsigned N = Z.projective_dimension();
    std::uint64_t total = 0;
    for (const auto& fp : Z.points) total += binomial(N - 1 + fp.multiplicity, N);
    return total;
}

unsigned regularity_0dim(const Ideal& I, const FatPointConfiguration& Z,
                         const Budget& budget) {
    const std::uint64_t target = scheme_degree(Z);
    unsigned prev = 0;
    for (unsigned d = 0; d <= 1000; ++d) {
        unsigned h = hilbert_function(I, d, budget);
        if (h > target || h < prev)
            throw ContainLabError(
                "not the saturated ideal of this scheme: Hilbert function is not "
                "nondecreasing up to the scheme degree");
        // The Hilbert function of a saturated 0-dimensional scheme grows
        // strictly until it reaches the degree; a plateau below it means
        // the scheme does not match.
        if (d > 0 && h == prev)
            throw ContainLabError(
                "not the saturated ideal of this scheme: Hilbert function "
                "stabilizes below the scheme degree");
        if (h == target) {
            // A saturated 0-dimensional ideal stays at the scheme degree.
            if (hilbert_function(I, d + 1, budget) != target)
                throw ContainLabError(
                    "not the saturated ideal of this scheme: Hilbert function leaves "
                    "its stabilization value");
            return d + 1;
        }
        prev = h;
    }
    throw ContainLabError("Hilbert function did not reach the scheme degree");
}

FatPointConfiguration scaled_scheme(const FatPointConfiguration& Z, unsigned m) {
    if (m == 0) throw ContainLabError("multiplicity scale must be positive");
    FatPointConfiguration W = Z;
    for (auto& fp : W.points) fp.multiplicity *= m;
    return W;
}

Rational waldschmidt_estimate(const FatPointConfiguration& Z, unsigned m_max,
                              const Budget& budget) {
    if (m_max < 1) throw ContainLabError("waldschmidt_estimate needs m_max >= 1");
    Rational best;
    bool have = false;
    for (unsigned m = 1; m <= m_max; ++m) {
        Rational ratio(alpha(Z.symbolic(m, budget), budget), m);
        ratio.canonicalize();
        if (!have || ratio < best) {
            best = ratio;
            have = true;
        }
    }
    return best;
}

std::vector<Rational> symassreg_estimate(const FatPointConfiguration& Z, unsigned m_max,
                                         const Budget& budget) {
    if (m_max < 1) throw ContainLabError("symassreg_estimate needs m_max >= 1");
    std::vector<Rational> out;
    for (unsigned m = 1; m <= m_max; ++m) {
        unsigned reg = regularity_0dim(Z.symbolic(m, budget), scaled_scheme(Z, m), budget);
        Rational ratio(reg, m);
        ratio.canonicalize();
        out.push_back(ratio);
    }
    return out;
}

InvariantReport invariant_report(const FatPointConfiguration& Z, unsigned m,
                                 const Budget& budget) {
    InvariantReport rep;
    rep.m = m;
    Ideal I = Z.symbolic(m, budget);
    FatPointConfiguration mZ = scaled_scheme(Z, m);
    rep.alpha = alpha(I, budget);
    rep.scheme_deg = scheme_degree(mZ);
    rep.regularity = regularity_0dim(I, mZ, budget);
    for (unsigned d = 0; d <= rep.regularity; ++d)
        rep.hilbert[d] = hilbert_function(I, d, budget);

    std::ostringstream note;
    note << "hilbert function of the quotient stabilizes at " << rep.scheme_deg
         << " from degree " << rep.regularity - 1;
    rep.notes.push_back(note.str());
    return rep;
}

}  // namespace containlab
