#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "containlab/field.hpp"
#include "containlab/monomial.hpp"

namespace containlab {

class PolynomialRing;
using RingPtr = std::shared_ptr<const PolynomialRing>;

// R = K[x_0, ..., x_{n-1}] with an ambient monomial order.  Rings are
// immutable and shared; two rings are interchangeable iff same_structure
// holds (same field, arity, names, order).
class PolynomialRing {
public:
    static RingPtr create(const FieldDescriptor* field, unsigned num_vars,
                          MonomialOrder order = MonomialOrder::grevlex(),
                          std::vector<std::string> names = {});

    const FieldDescriptor* field() const { return field_; }
    unsigned num_vars() const { return num_vars_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& var_name(unsigned i) const { return names_.at(i); }
    // Index of a variable name, or -1.
    int var_index(const std::string& name) const;

    bool same_structure(const PolynomialRing& o) const;
    std::string to_string() const;

    // Same field and names, different ambient order.
    RingPtr with_order(MonomialOrder order) const;

private:
    PolynomialRing(const FieldDescriptor* f, unsigned n, MonomialOrder ord,
                   std::vector<std::string> names);

    const FieldDescriptor* field_;
    unsigned num_vars_;
    MonomialOrder order_;
    std::vector<std::string> names_;
};

struct Term {
    Monomial mono;
    FieldElement coef;
};

// Sparse polynomial: terms strictly descending in the ring's ambient
// order, no zero coefficients.  Zero is the empty term list.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const FieldElement& c);
    static Polynomial constant(RingPtr ring, long v);
    static Polynomial variable(RingPtr ring, unsigned i);
    static Polynomial term(RingPtr ring, const Monomial& m, const FieldElement& c);
    // Normalizes: sorts, merges duplicates, drops zeros.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
    static Polynomial parse(RingPtr ring, const std::string& text);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Total degree; nullopt for the zero polynomial.
    std::optional<unsigned> total_degree() const;
    bool is_homogeneous() const;
    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const FieldElement& leading_coefficient() const { return leading_term().coef; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const FieldElement& c) const;
    Polynomial times_term(const Monomial& m, const FieldElement& c) const;
    Polynomial pow(unsigned k) const;
    // Leading coefficient 1 (error on zero).
    Polynomial monic() const;

    FieldElement evaluate(const std::vector<FieldElement>& point) const;

    // Transplant into a structurally different ring over the same field.
    // image_of_var[i] gives the index in `target` for variable i; terms are
    // re-sorted under the target order.
    Polynomial map_variables(RingPtr target, const std::vector<unsigned>& image_of_var) const;
    // Same ring shape, new ambient order (terms re-sorted).
    Polynomial with_ring(RingPtr target) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Canonical text form; parse(to_string()) is bit-exact.
    std::string to_string() const;

private:
    void require_ring(const Polynomial& o) const;
    void normalize();

    RingPtr ring_;
    std::vector<Term> terms_;
};

// Content-normalized copy used to keep Groebner intermediates small over
// characteristic 0: integer coefficients with content 1 (cyclotomic
// coordinates treated entrywise).  Over F_p returns the input unchanged.
Polynomial remove_content(const Polynomial& f);

}  // namespace containlab
