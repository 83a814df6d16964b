#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "containlab/groebner.hpp"

namespace containlab {

// Homogeneous ideal of a polynomial ring, presented by generators.
// Values are immutable and cheaply copyable (shared representation); the
// reduced Groebner basis for each requested order is cached with
// compute-once semantics, and a budget failure leaves the cache clean so
// the computation can be retried with a bigger budget.
class Ideal {
public:
    Ideal() = default;
    // Drops zero generators, rejects non-homogeneous ones, deduplicates.
    Ideal(RingPtr ring, std::vector<Polynomial> generators);

    const RingPtr& ring() const;
    const std::vector<Polynomial>& generators() const;
    bool is_zero_ideal() const;

    // Cached reduced basis for the order (the zero ideal yields an empty
    // basis).  Throws BudgetExceededError without caching on exhaustion.
    std::shared_ptr<const GroebnerBasis> groebner(
        MonomialOrder order = MonomialOrder::grevlex(),
        const Budget& budget = Budget::defaults()) const;

    // One generator per line under a ring header line.
    std::string to_text() const;
    static Ideal from_text(const std::string& text);

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;

    friend Ideal with_cached_basis(RingPtr ring, std::shared_ptr<const GroebnerBasis> basis);
};

// Point with multiplicity, the building block of fat-point schemes.
struct FatPoint {
    std::vector<FieldElement> point;
    unsigned multiplicity = 1;
};

// The ideal of forms vanishing at a projective point: N independent
// linear forms obtained by pivoting on the first nonzero coordinate.
Ideal point_ideal(const RingPtr& ring, const std::vector<FieldElement>& point);

// Ordinary power: all r-fold products of the generators (I^0 = <1>).
Ideal ideal_power(const Ideal& I, unsigned r);

// Pairwise products of generators.
Ideal ideal_product(const Ideal& I, const Ideal& J);

// Intersection by the auxiliary-variable method: eliminate t from
// t*I + (1-t)*J under a block order in the extended ring.  The returned
// generators are the reduced basis of the intersection.
Ideal ideal_intersect(const Ideal& I, const Ideal& J, const Budget& budget = Budget::defaults());

// <x_0,...,x_{n-1}>^j presented by the degree-j monomials.
Ideal irrelevant_power(const RingPtr& ring, unsigned j);

// Symbolic power of the fat-point scheme: left fold of intersections of
// point-ideal powers I(P_i)^{m*m_i}.  Generators of the result are the
// canonical reduced basis, so downstream witnesses are reproducible.
Ideal symbolic_power(const RingPtr& ring, const std::vector<FatPoint>& points, unsigned m,
                     const Budget& budget = Budget::defaults());

struct ContainmentWitness {
    bool contains = false;
    // First generator of the candidate sub-ideal that fails membership.
    std::optional<Polynomial> witness;
};

// Does I contain J?  Decided by reducing each generator of J against
// GB(I); the first failure is reported as the witness.
ContainmentWitness ideal_contains(const Ideal& I, const Ideal& J,
                                  const Budget& budget = Budget::defaults());

// Equality as ideals (mutual containment).
bool same_ideal(const Ideal& I, const Ideal& J, const Budget& budget = Budget::defaults());

}  // namespace containlab
