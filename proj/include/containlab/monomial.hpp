#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "containlab/errors.hpp"

namespace containlab {

// Exponent vector with cached total degree.  Capacity is fixed at
// MAX_VARS; each exponent must fit in 16 bits (overflow is a hard error,
// degrees in this artifact stay far below that).
class Monomial {
public:
    static constexpr unsigned MAX_VARS = 8;

    Monomial() = default;
    explicit Monomial(unsigned nvars) : nvars_(check_nvars(nvars)) {}
    Monomial(unsigned nvars, std::initializer_list<unsigned> exps);
    static Monomial from_exponents(const std::vector<unsigned>& exps);

    unsigned num_vars() const { return nvars_; }
    unsigned exponent(unsigned i) const { return e_[i]; }
    unsigned degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    // Single-variable power x_i^k.
    static Monomial variable(unsigned nvars, unsigned i, unsigned k = 1);

    Monomial operator*(const Monomial& o) const;
    Monomial pow(unsigned k) const;
    bool divides(const Monomial& o) const;
    // Exact quotient; caller must ensure divisibility.
    Monomial divide_by(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);
    bool coprime_with(const Monomial& o) const;

    bool operator==(const Monomial& o) const {
        return nvars_ == o.nvars_ && deg_ == o.deg_ && e_ == o.e_;
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    static unsigned check_nvars(unsigned n);
    void set(unsigned i, unsigned v);

    std::array<std::uint16_t, MAX_VARS> e_{};
    std::uint32_t deg_ = 0;
    std::uint8_t nvars_ = 0;
};

// Term orders.  GradedReverseLex and Lex are the usual ones;
// BlockElimination(k) compares the first k variables (grevlex among
// themselves) before the rest, so a Groebner basis in it eliminates
// x_0..x_{k-1}.
class MonomialOrder {
public:
    enum class Kind { GradedReverseLex, Lex, BlockElimination };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::GradedReverseLex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    static MonomialOrder block_elimination(unsigned boundary) {
        return MonomialOrder(Kind::BlockElimination, boundary);
    }

    Kind kind() const { return kind_; }
    unsigned block_boundary() const { return boundary_; }
    // True when larger total degree always means larger monomial, which is
    // what lets initial degrees be read off a basis.
    bool degree_compatible() const { return kind_ == Kind::GradedReverseLex; }

    // Positive if a > b, negative if a < b, zero iff equal.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && boundary_ == o.boundary_;
    }
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    MonomialOrder(Kind k, unsigned b) : kind_(k), boundary_(b) {}

    Kind kind_;
    unsigned boundary_;
};

}  // namespace containlab
