#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "containlab/errors.hpp"
#include "containlab/rational.hpp"

namespace containlab {

// Cyclotomic polynomial Phi_n as ascending monic coefficients over Q.
// Computed by dividing t^n - 1 by the product of Phi_d over proper
// divisors d of n.
std::vector<Rational> cyclotomic_modulus(unsigned n);

unsigned euler_phi(unsigned n);

// One of the supported exact coefficient fields:
//   - Rationals               Q
//   - PrimeField(p)           F_p, p prime, p < 2^31
//   - Cyclotomic(n)           Q(zeta_n) = Q[t]/Phi_n(t), phi(n) <= 4
//
// Descriptors are interned: constructing the same field twice returns the
// same pointer, so identity comparison is pointer comparison.  Elements of
// different descriptors never mix.
class FieldDescriptor {
public:
    enum class Kind { Rationals, PrimeField, Cyclotomic };

    static const FieldDescriptor* rationals();
    static const FieldDescriptor* prime_field(std::uint32_t p);
    static const FieldDescriptor* cyclotomic(unsigned n);

    // Grammar: "QQ" | "Fp(<prime>)" | "QQ(zeta<n>)".
    static const FieldDescriptor* parse(const std::string& text);

    Kind kind() const { return kind_; }
    // 0 for Q and Q(zeta_n), p for F_p.
    std::uint32_t characteristic() const { return characteristic_; }
    std::uint32_t prime() const;
    unsigned cyclotomic_index() const;
    // Dimension over the prime field / Q: 1, or phi(n) for Q(zeta_n).
    unsigned extension_degree() const { return degree_; }
    // F_2 is constructible for evidence sweeps but flagged so callers can
    // refuse it where odd characteristic is assumed.
    bool is_char2() const { return characteristic_ == 2; }
    const std::vector<Rational>& modulus() const;
    std::string to_string() const;

    FieldDescriptor(const FieldDescriptor&) = delete;
    FieldDescriptor& operator=(const FieldDescriptor&) = delete;

private:
    FieldDescriptor() = default;

    Kind kind_ = Kind::Rationals;
    std::uint32_t characteristic_ = 0;
    std::uint32_t prime_ = 0;
    unsigned index_ = 0;
    unsigned degree_ = 1;
    std::vector<Rational> modulus_;
    // t^k mod Phi_n for k = degree..2*degree-2, ascending coefficients.
    std::vector<std::vector<Rational>> tpow_;

    friend class FieldElement;
};

// Immutable element of one of the fields above.  Payload by kind:
// a Rational, a residue in [0, p), or phi(n) rational coordinates in the
// power basis 1, z, ..., z^(phi(n)-1).
class FieldElement {
public:
    // Default-constructs rational zero (containers need this).
    FieldElement();

    static FieldElement zero(const FieldDescriptor* f);
    static FieldElement one(const FieldDescriptor* f);
    static FieldElement from_integer(const FieldDescriptor* f, long v);
    static FieldElement from_rational(const FieldDescriptor* f, const Rational& q);
    // The generator z of Q(zeta_n); error for other fields.
    static FieldElement zeta(const FieldDescriptor* f);
    // Element grammar: rationals "3/4"; prime-field integers "5";
    // cyclotomic polynomials in z, e.g. "1 + 2*z - z^2".
    static FieldElement parse(const FieldDescriptor* f, const std::string& text);

    const FieldDescriptor* field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    FieldElement inverse() const;
    FieldElement pow(long e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // Canonical text form; parse(to_string()) reproduces the element.
    std::string to_string() const;

    const Rational& rational_value() const;
    std::uint32_t residue() const;
    const std::vector<Rational>& coords() const;

private:
    FieldElement(const FieldDescriptor* f, Rational q);
    FieldElement(const FieldDescriptor* f, std::uint32_t r);
    FieldElement(const FieldDescriptor* f, std::vector<Rational> c);

    void require_same_field(const FieldElement& o) const;

    const FieldDescriptor* field_;
    std::variant<Rational, std::uint32_t, std::vector<Rational>> value_;
};

// Smallest primitive n-th root of unity in the field, if one exists:
// +-1 over Q, the least residue of exact order n in F_p, a power of the
// generator (or its negative) in Q(zeta_k).  The returned element's order
// is verified by explicit powering.  Throws NoSuchRootError otherwise.
FieldElement primitive_root_of_unity(const FieldDescriptor* f, unsigned n);

}  // namespace containlab
