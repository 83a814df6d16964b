#pragma once

#include "containlab/ideal.hpp"
#include "containlab/numeric.hpp"

namespace containlab {

// Exact basis of a graded subspace of R_d, written over the canonical
// monomial basis of degree d (descending ambient order).  Rows are in
// reduced row-echelon form, so the representation is canonical.
struct GradedPieceBasis {
    unsigned degree = 0;
    unsigned ambient_dimension = 0;
    std::vector<Monomial> monomials;
    std::vector<std::vector<FieldElement>> basis;

    unsigned dimension() const { return static_cast<unsigned>(basis.size()); }
    // Rebuild row i as a polynomial.
    Polynomial row_polynomial(const RingPtr& ring, unsigned i) const;
};

// Linear-algebra ground truth for graded pieces of symbolic powers,
// computed without Groebner bases.  These functions speak only about
// symbolic powers (vanishing-determined, saturated objects); membership
// in ordinary powers I^r is exclusively the Groebner pipeline's job and
// is NOT answered here.

// (I(P)^m)_d spanned by products g_1^{a_1}...g_N^{a_N} (a summing to m,
// g_i the point's linear forms) times monomials of degree d - m.
GradedPieceBasis power_piece(const RingPtr& ring, const std::vector<FieldElement>& point,
                             unsigned m, unsigned d);

// Graded piece of the symbolic power of the fat-point scheme: iterated
// exact intersection of power_piece(P_i, m*mult_i, d) over all points.
// Purely multiplicative construction; valid in every characteristic.
GradedPieceBasis symbolic_piece(const RingPtr& ring, const std::vector<FatPoint>& points,
                                unsigned m, unsigned d);

// Least d with symbolic_piece dimension > 0, scanning upward from m.
unsigned alpha_oracle(const RingPtr& ring, const std::vector<FatPoint>& points, unsigned m);

}  // namespace containlab
