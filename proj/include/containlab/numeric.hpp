#pragma once

#include <cstdint>
#include <vector>

#include "containlab/polynomial.hpp"

namespace containlab {

// Exact binomial coefficient; overflow-checked (desk-scale inputs).
std::uint64_t binomial(unsigned n, unsigned k);

// All monomials of the given total degree, in recursion order.
std::vector<Monomial> monomials_of_degree(unsigned nvars, unsigned degree);

// The same set sorted descending under the ring's ambient order, the
// canonical coordinate system for graded pieces.
std::vector<Monomial> graded_monomial_basis(const RingPtr& ring, unsigned degree);

}  // namespace containlab
