#include "containlab/oracle.hpp"

#include <algorithm>

namespace containlab {

// ---------------------------------------------------------------------------
// numeric helpers (declared in numeric.hpp)
// ---------------------------------------------------------------------------

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        if (r > UINT64_MAX / (n - k + i)) throw OverflowError("binomial overflow");
        r = r * (n - k + i) / i;
    }
    return r;
}

namespace {

void enumerate_degree(unsigned nvars, unsigned degree, std::vector<unsigned>& exps,
                      unsigned at, std::vector<Monomial>& out) {
    if (at + 1 == nvars) {
        exps[at] = degree;
        out.push_back(Monomial::from_exponents(exps));
        return;
    }
    for (unsigned e = 0; e <= degree; ++e) {
        exps[at] = e;
        enumerate_degree(nvars, degree - e, exps, at + 1, out);
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(unsigned nvars, unsigned degree) {
    std::vector<Monomial> out;
    std::vector<unsigned> exps(nvars, 0);
    enumerate_degree(nvars, degree, exps, 0, out);
    return out;
}

std::vector<Monomial> graded_monomial_basis(const RingPtr& ring, unsigned degree) {
    std::vector<Monomial> monos = monomials_of_degree(ring->num_vars(), degree);
    std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) {
        return ring->order().compare(a, b) > 0;
    });
    return monos;
}

// ---------------------------------------------------------------------------
// Exact linear algebra
// ---------------------------------------------------------------------------

namespace {

using Row = std::vector<FieldElement>;

// In-place reduced row echelon form; returns the rank and drops zero rows.
unsigned rref(std::vector<Row>& rows) {
    if (rows.empty()) return 0;
    const unsigned ncols = static_cast<unsigned>(rows[0].size());
    unsigned rank = 0;
    for (unsigned col = 0; col < ncols && rank < rows.size(); ++col) {
        unsigned piv = rank;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        if (!rows[rank][col].is_one()) {
            FieldElement inv = rows[rank][col].inverse();
            for (unsigned c = col; c < ncols; ++c)
                if (!rows[rank][c].is_zero()) rows[rank][c] *= inv;
        }
        for (unsigned r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            FieldElement f = rows[r][col];
            for (unsigned c = col; c < ncols; ++c)
                if (!rows[rank][c].is_zero()) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

// Basis of the null space {x : M x = 0}; M given row-major.
std::vector<Row> kernel_basis(std::vector<Row> M, const FieldDescriptor* field,
                              unsigned ncols) {
    rref(M);
    std::vector<int> pivot_col_of_row;
    std::vector<bool> is_pivot(ncols, false);
    for (const Row& r : M) {
        unsigned c = 0;
        while (c < ncols && r[c].is_zero()) ++c;
        pivot_col_of_row.push_back(static_cast<int>(c));
        if (c < ncols) is_pivot[c] = true;
    }
    std::vector<Row> out;
    for (unsigned fc = 0; fc < ncols; ++fc) {
        if (is_pivot[fc]) continue;
        Row x(ncols, FieldElement::zero(field));
        x[fc] = FieldElement::one(field);
        for (std::size_t r = 0; r < M.size(); ++r) {
            int pc = pivot_col_of_row[r];
            if (pc >= 0 && static_cast<unsigned>(pc) < ncols) x[pc] = -M[r][fc];
        }
        out.push_back(std::move(x));
    }
    return out;
}

// Intersection of two row-space bases in the same ambient space.
std::vector<Row> intersect_spans(const std::vector<Row>& A, const std::vector<Row>& B,
                                 const FieldDescriptor* field, unsigned ambient) {
    if (A.empty() || B.empty()) return {};
    const unsigned a = static_cast<unsigned>(A.size());
    const unsigned b = static_cast<unsigned>(B.size());
    // Columns: coefficients on A's rows, then on B's rows; solve
    // sum x_i A_i - sum y_j B_j = 0.
    std::vector<Row> M(ambient, Row(a + b, FieldElement::zero(field)));
    for (unsigned i = 0; i < a; ++i)
        for (unsigned r = 0; r < ambient; ++r) M[r][i] = A[i][r];
    for (unsigned j = 0; j < b; ++j)
        for (unsigned r = 0; r < ambient; ++r) M[r][a + j] = -B[j][r];
    std::vector<Row> ker = kernel_basis(std::move(M), field, a + b);

    std::vector<Row> out;
    for (const Row& k : ker) {
        Row v(ambient, FieldElement::zero(field));
        for (unsigned i = 0; i < a; ++i) {
            if (k[i].is_zero()) continue;
            for (unsigned r = 0; r < ambient; ++r)
                if (!A[i][r].is_zero()) v[r] += k[i] * A[i][r];
        }
        out.push_back(std::move(v));
    }
    rref(out);
    return out;
}

unsigned monomial_index(const std::vector<Monomial>& monos, const MonomialOrder& ord,
                        const Monomial& m) {
    auto it = std::lower_bound(monos.begin(), monos.end(), m,
                               [&](const Monomial& a, const Monomial& b) {
                                   return ord.compare(a, b) > 0;
                               });
    if (it == monos.end() || *it != m) throw ContainLabError("monomial outside graded basis");
    return static_cast<unsigned>(it - monos.begin());
}

Row polynomial_to_row(const Polynomial& f, const std::vector<Monomial>& monos,
                      const MonomialOrder& ord) {
    Row v(monos.size(), FieldElement::zero(f.ring()->field()));
    for (const auto& t : f.terms()) v[monomial_index(monos, ord, t.mono)] = t.coef;
    return v;
}

}  // namespace

Polynomial GradedPieceBasis::row_polynomial(const RingPtr& ring, unsigned i) const {
    std::vector<Term> terms;
    for (unsigned c = 0; c < ambient_dimension; ++c)
        if (!basis.at(i)[c].is_zero()) terms.push_back({monomials[c], basis[i][c]});
    return Polynomial::from_terms(ring, std::move(terms));
}

// ---------------------------------------------------------------------------
// Graded pieces
// ---------------------------------------------------------------------------

GradedPieceBasis power_piece(const RingPtr& ring, const std::vector<FieldElement>& point,
                             unsigned m, unsigned d) {
    if (m == 0) throw ContainLabError("power_piece needs m >= 1");
    GradedPieceBasis out;
    out.degree = d;
    out.monomials = graded_monomial_basis(ring, d);
    out.ambient_dimension = static_cast<unsigned>(out.monomials.size());
    if (d < m) return out;

    const auto gens = point_ideal(ring, point).generators();
    const std::vector<Monomial> tails = monomials_of_degree(ring->num_vars(), d - m);

    std::vector<Row> rows;
    // Products over exponent tuples of total m across the N linear forms,
    // built incrementally.
    std::vector<Polynomial> stackprod{Polynomial::constant(ring, 1)};
    auto rec = [&](auto&& self, unsigned gi, unsigned left) -> void {
        if (gi + 1 == gens.size()) {
            Polynomial form = stackprod.back() * gens[gi].pow(left);
            for (const auto& mu : tails) {
                Polynomial vtx = form.times_term(mu, FieldElement::one(ring->field()));
                rows.push_back(polynomial_to_row(vtx, out.monomials, ring->order()));
            }
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            stackprod.push_back(stackprod.back() * gens[gi].pow(e));
            self(self, gi + 1, left - e);
            stackprod.pop_back();
        }
    };
    rec(rec, 0, m);
    rref(rows);
    out.basis = std::move(rows);
    return out;
}

GradedPieceBasis symbolic_piece(const RingPtr& ring, const std::vector<FatPoint>& points,
                                unsigned m, unsigned d) {
    if (points.empty()) throw ContainLabError("symbolic_piece of an empty point set");
    if (m == 0) throw ContainLabError("symbolic_piece needs m >= 1");
    GradedPieceBasis acc = power_piece(ring, points[0].point, m * points[0].multiplicity, d);
    for (std::size_t i = 1; i < points.size() && !acc.basis.empty(); ++i) {
        GradedPieceBasis next =
            power_piece(ring, points[i].point, m * points[i].multiplicity, d);
        acc.basis = intersect_spans(acc.basis, next.basis, ring->field(),
                                    acc.ambient_dimension);
    }
    return acc;
}

unsigned alpha_oracle(const RingPtr& ring, const std::vector<FatPoint>& points, unsigned m) {
    for (unsigned d = m; d <= 200; ++d) {
        if (symbolic_piece(ring, points, m, d).dimension() > 0) return d;
    }
    throw ContainLabError("alpha_oracle found no nonzero piece up to degree 200");
}

}  // namespace containlab
