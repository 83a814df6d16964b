#pragma once

#include <vector>

#include "containlab/polynomial.hpp"

namespace containlab {

// Reduced Groebner basis: every element monic, no term of any element
// divisible by another element's leading term, elements sorted ascending
// by leading monomial.  For a fixed ideal and order this form is unique,
// which makes bases directly comparable.
class GroebnerBasis {
public:
    GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements);

    // Ring whose ambient order is the basis order.
    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return ring_->order(); }
    const std::vector<Polynomial>& elements() const { return elements_; }
    // Smallest total degree among elements; nullopt for the zero ideal.
    std::optional<unsigned> min_degree() const;
    bool contains_one() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> elements_;
};

// Buchberger's algorithm with the normal pair-selection strategy (minimal
// lcm degree first) and the product and chain criteria.  The result is the
// canonical reduced basis; permuting or rescaling the generators cannot
// change it.  Throws BudgetExceededError when the deadline or the S-pair
// cap is exhausted; a completed run is always correct.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, MonomialOrder order,
                         const Budget& budget = Budget::defaults());

// Remainder of f under full division by the basis: no term of the result
// is divisible by any basis leading term, and f - result lies in the
// ideal.  Exact and canonical.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

bool is_member(const Polynomial& f, const GroebnerBasis& basis);

}  // namespace containlab
