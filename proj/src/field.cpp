#include "containlab/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace containlab {

// ---------------------------------------------------------------------------
// Rational text form
// ---------------------------------------------------------------------------

std::string rat_to_string(const Rational& q) {
    return q.get_str();
}

Rational rat_parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty rational literal");

    auto slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);

    auto valid_int = [](const std::string& t, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < t.size() && (t[i] == '+' || t[i] == '-')) ++i;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (!valid_int(num, true) || !valid_int(den, false))
        throw ParseError("bad rational literal: " + text);

    mpz_class n(num), d(den);
    if (d == 0) throw ParseError("zero denominator in: " + text);
    Rational q(n, d);
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Q (ascending coefficients, trimmed).
// Only what the cyclotomic arithmetic needs.
// ---------------------------------------------------------------------------

namespace {

using QPoly = std::vector<Rational>;

void qp_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    qp_trim(c);
    return c;
}

// Division with remainder; b must be nonzero.
std::pair<QPoly, QPoly> qp_divmod(QPoly a, const QPoly& b) {
    QPoly q;
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    for (std::size_t sh = a.size() - b.size() + 1; sh-- > 0;) {
        std::size_t top = sh + b.size() - 1;
        if (a[top] == 0) continue;
        Rational f = a[top] / lead;
        q[sh] = f;
        for (std::size_t j = 0; j < b.size(); ++j) a[sh + j] -= f * b[j];
    }
    qp_trim(a);
    return {q, a};
}

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<Rational> cyclotomic_modulus(unsigned n) {
    if (n == 0) throw ParseError("cyclotomic index must be positive");
    // t^n - 1
    QPoly num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = qp_divmod(num, cyclotomic_modulus(d));
        if (!r.empty()) throw ContainLabError("cyclotomic division not exact");
        num = std::move(q);
    }
    return num;
}

// ---------------------------------------------------------------------------
// FieldDescriptor interning
// ---------------------------------------------------------------------------

namespace {
std::mutex g_field_mutex;
std::map<std::pair<int, std::uint64_t>, std::unique_ptr<FieldDescriptor>>& field_table() {
    static std::map<std::pair<int, std::uint64_t>, std::unique_ptr<FieldDescriptor>> t;
    return t;
}
}  // namespace

const FieldDescriptor* FieldDescriptor::rationals() {
    std::lock_guard<std::mutex> lock(g_field_mutex);
    auto key = std::make_pair(0, std::uint64_t{0});
    auto& slot = field_table()[key];
    if (!slot) {
        slot.reset(new FieldDescriptor());
        slot->kind_ = Kind::Rationals;
    }
    return slot.get();
}

const FieldDescriptor* FieldDescriptor::prime_field(std::uint32_t p) {
    if (p >= (1u << 31)) throw ParseError("prime too large: " + std::to_string(p));
    if (!is_prime_u32(p)) throw ParseError("not a prime: " + std::to_string(p));
    std::lock_guard<std::mutex> lock(g_field_mutex);
    auto key = std::make_pair(1, std::uint64_t{p});
    auto& slot = field_table()[key];
    if (!slot) {
        slot.reset(new FieldDescriptor());
        slot->kind_ = Kind::PrimeField;
        slot->characteristic_ = p;
        slot->prime_ = p;
    }
    return slot.get();
}

const FieldDescriptor* FieldDescriptor::cyclotomic(unsigned n) {
    if (n == 0 || n > 12)
        throw ParseError("cyclotomic index out of range: " + std::to_string(n));
    unsigned deg = euler_phi(n);
    if (deg > 4)
        throw ParseError("cyclotomic extension degree too large: zeta" + std::to_string(n));
    std::lock_guard<std::mutex> lock(g_field_mutex);
    auto key = std::make_pair(2, std::uint64_t{n});
    auto& slot = field_table()[key];
    if (!slot) {
        slot.reset(new FieldDescriptor());
        slot->kind_ = Kind::Cyclotomic;
        slot->index_ = n;
        slot->degree_ = deg;
        slot->modulus_ = cyclotomic_modulus(n);
        // Reductions of t^k for k = deg .. 2*deg-2, used by multiplication.
        for (unsigned k = deg; k + 1 <= 2 * deg - 1; ++k) {
            QPoly tk(k + 1, Rational(0));
            tk[k] = 1;
            auto [q, r] = qp_divmod(tk, slot->modulus_);
            r.resize(deg, Rational(0));
            slot->tpow_.push_back(std::move(r));
        }
    }
    return slot.get();
}

const FieldDescriptor* FieldDescriptor::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s == "QQ") return rationals();
    auto number_arg = [&](const std::string& prefix) -> long {
        std::string inner = s.substr(prefix.size(), s.size() - prefix.size() - 1);
        if (inner.empty()) throw ParseError("bad field descriptor: " + text);
        for (char c : inner)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("bad field descriptor: " + text);
        return std::stol(inner);
    };
    if (s.rfind("Fp(", 0) == 0 && s.back() == ')')
        return prime_field(static_cast<std::uint32_t>(number_arg("Fp(")));
    if (s.rfind("QQ(zeta", 0) == 0 && s.back() == ')')
        return cyclotomic(static_cast<unsigned>(number_arg("QQ(zeta")));
    throw ParseError("bad field descriptor: " + text);
}

std::uint32_t FieldDescriptor::prime() const {
    if (kind_ != Kind::PrimeField) throw FieldError("not a prime field: " + to_string());
    return prime_;
}

unsigned FieldDescriptor::cyclotomic_index() const {
    if (kind_ != Kind::Cyclotomic) throw FieldError("not a cyclotomic field: " + to_string());
    return index_;
}

const std::vector<Rational>& FieldDescriptor::modulus() const {
    if (kind_ != Kind::Cyclotomic) throw FieldError("not a cyclotomic field: " + to_string());
    return modulus_;
}

std::string FieldDescriptor::to_string() const {
    switch (kind_) {
        case Kind::Rationals: return "QQ";
        case Kind::PrimeField: return "Fp(" + std::to_string(prime_) + ")";
        case Kind::Cyclotomic: return "QQ(zeta" + std::to_string(index_) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// FieldElement
// ---------------------------------------------------------------------------

FieldElement::FieldElement() : field_(FieldDescriptor::rationals()), value_(Rational(0)) {}

FieldElement::FieldElement(const FieldDescriptor* f, Rational q)
    : field_(f), value_(std::move(q)) {}
FieldElement::FieldElement(const FieldDescriptor* f, std::uint32_t r)
    : field_(f), value_(r) {}
FieldElement::FieldElement(const FieldDescriptor* f, std::vector<Rational> c)
    : field_(f), value_(std::move(c)) {}

FieldElement FieldElement::zero(const FieldDescriptor* f) {
    switch (f->kind()) {
        case FieldDescriptor::Kind::Rationals: return {f, Rational(0)};
        case FieldDescriptor::Kind::PrimeField: return {f, std::uint32_t{0}};
        case FieldDescriptor::Kind::Cyclotomic:
            return {f, std::vector<Rational>(f->extension_degree(), Rational(0))};
    }
    throw FieldError("unknown field kind");
}

FieldElement FieldElement::one(const FieldDescriptor* f) {
    return from_integer(f, 1);
}

FieldElement FieldElement::from_integer(const FieldDescriptor* f, long v) {
    return from_rational(f, Rational(v));
}

FieldElement FieldElement::from_rational(const FieldDescriptor* f, const Rational& q) {
    switch (f->kind()) {
        case FieldDescriptor::Kind::Rationals: {
            Rational c = q;
            c.canonicalize();
            return {f, c};
        }
        case FieldDescriptor::Kind::PrimeField: {
            std::uint32_t p = f->prime();
            std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
            std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
            if (den == 0)
                throw DivisionByZeroError("denominator divisible by " + std::to_string(p));
            std::uint64_t inv = pow_mod(den, p - 2, p);
            return {f, static_cast<std::uint32_t>(num * inv % p)};
        }
        case FieldDescriptor::Kind::Cyclotomic: {
            std::vector<Rational> c(f->extension_degree(), Rational(0));
            c[0] = q;
            c[0].canonicalize();
            return {f, std::move(c)};
        }
    }
    throw FieldError("unknown field kind");
}

FieldElement FieldElement::zeta(const FieldDescriptor* f) {
    if (f->kind() != FieldDescriptor::Kind::Cyclotomic)
        throw FieldError("zeta requires a cyclotomic field, got " + f->to_string());
    unsigned deg = f->extension_degree();
    QPoly t{Rational(0), Rational(1)};
    auto [q, r] = qp_divmod(t, f->modulus_);
    r.resize(deg, Rational(0));
    return {f, std::move(r)};
}

bool FieldElement::is_zero() const {
    switch (field_->kind()) {
        case FieldDescriptor::Kind::Rationals: return std::get<Rational>(value_) == 0;
        case FieldDescriptor::Kind::PrimeField: return std::get<std::uint32_t>(value_) == 0;
        case FieldDescriptor::Kind::Cyclotomic: {
            for (const auto& c : std::get<std::vector<Rational>>(value_))
                if (c != 0) return false;
            return true;
        }
    }
    return false;
}

bool FieldElement::is_one() const {
    return *this == one(field_);
}

void FieldElement::require_same_field(const FieldElement& o) const {
    if (field_ != o.field_)
        throw FieldMismatchError("mixing elements of " + field_->to_string() + " and " +
                                 o.field_->to_string());
}

FieldElement FieldElement::operator-() const {
    switch (field_->kind()) {
        case FieldDescriptor::Kind::Rationals:
            return {field_, Rational(-std::get<Rational>(value_))};
        case FieldDescriptor::Kind::PrimeField: {
            std::uint32_t r = std::get<std::uint32_t>(value_);
            return {field_, r == 0 ? 0u : field_->prime() - r};
        }
        case FieldDescriptor::Kind::Cyclotomic: {
            auto c = std::get<std::vector<Rational>>(value_);
            for (auto& x : c) x = -x;
            return {field_, std::move(c)};
        }
    }
    throw FieldError("unknown field kind");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(o);
    switch (field_->kind()) {
        case FieldDescriptor::Kind::Rationals:
            return {field_, Rational(std::get<Rational>(value_) + std::get<Rational>(o.value_))};
        case FieldDescriptor::Kind::PrimeField: {
            std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} +
                              std::get<std::uint32_t>(o.value_);
            std::uint32_t p = field_->prime();
            return {field_, static_cast<std::uint32_t>(s >= p ? s - p : s)};
        }
        case FieldDescriptor::Kind::Cyclotomic: {
            auto c = std::get<std::vector<Rational>>(value_);
            const auto& d = std::get<std::vector<Rational>>(o.value_);
            for (std::size_t i = 0; i < c.size(); ++i) c[i] += d[i];
            return {field_, std::move(c)};
        }
    }
    throw FieldError("unknown field kind");
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    return *this + (-o);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(o);
    switch (field_->kind()) {
        case FieldDescriptor::Kind::Rationals:
            return {field_, Rational(std::get<Rational>(value_) * std::get<Rational>(o.value_))};
        case FieldDescriptor::Kind::PrimeField: {
            std::uint64_t prod = std::uint64_t{std::get<std::uint32_t>(value_)} *
                                 std::get<std::uint32_t>(o.value_);
            return {field_, static_cast<std::uint32_t>(prod % field_->prime())};
        }
        case FieldDescriptor::Kind::Cyclotomic: {
            const auto& a = std::get<std::vector<Rational>>(value_);
            const auto& b = std::get<std::vector<Rational>>(o.value_);
            unsigned deg = field_->extension_degree();
            std::vector<Rational> conv(2 * deg - 1, Rational(0));
            for (unsigned i = 0; i < deg; ++i) {
                if (a[i] == 0) continue;
                for (unsigned j = 0; j < deg; ++j)
                    if (b[j] != 0) conv[i + j] += a[i] * b[j];
            }
            std::vector<Rational> out(conv.begin(), conv.begin() + deg);
            for (unsigned k = deg; k < 2 * deg - 1; ++k) {
                if (conv[k] == 0) continue;
                const auto& red = field_->tpow_[k - deg];
                for (unsigned i = 0; i < deg; ++i)
                    if (red[i] != 0) out[i] += conv[k] * red[i];
            }
            return {field_, std::move(out)};
        }
    }
    throw FieldError("unknown field kind");
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero in " + field_->to_string());
    switch (field_->kind()) {
        case FieldDescriptor::Kind::Rationals:
            return {field_, Rational(1 / std::get<Rational>(value_))};
        case FieldDescriptor::Kind::PrimeField: {
            std::uint32_t p = field_->prime();
            return {field_, static_cast<std::uint32_t>(
                                pow_mod(std::get<std::uint32_t>(value_), p - 2, p))};
        }
        case FieldDescriptor::Kind::Cyclotomic: {
            // Extended Euclid in Q[t] against the (irreducible) modulus:
            // maintain u with u * self ≡ r (mod Phi); stop at r constant.
            QPoly r0 = field_->modulus_;
            QPoly r1 = std::get<std::vector<Rational>>(value_);
            qp_trim(r1);
            QPoly u0, u1{Rational(1)};
            while (!r1.empty()) {
                auto [q, rem] = qp_divmod(r0, r1);
                QPoly qu = qp_mul(q, u1);
                QPoly nu = u0;
                nu.resize(std::max(nu.size(), qu.size()), Rational(0));
                for (std::size_t i = 0; i < qu.size(); ++i) nu[i] -= qu[i];
                qp_trim(nu);
                r0 = std::move(r1);
                r1 = std::move(rem);
                u0 = std::move(u1);
                u1 = std::move(nu);
            }
            if (r0.size() != 1)
                throw FieldError("modulus not coprime to element; inverse undefined");
            Rational scale = 1 / r0[0];
            auto [q2, rem2] = qp_divmod(u0, field_->modulus_);
            rem2.resize(field_->extension_degree(), Rational(0));
            for (auto& c : rem2) c *= scale;
            return {field_, std::move(rem2)};
        }
    }
    throw FieldError("unknown field kind");
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    require_same_field(o);
    return *this * o.inverse();
}

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement base = *this;
    FieldElement acc = one(field_);
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        if (k >>= 1) base = base * base;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (field_ != o.field_) return false;
    return value_ == o.value_;
}

const Rational& FieldElement::rational_value() const {
    if (field_->kind() != FieldDescriptor::Kind::Rationals)
        throw FieldError("rational_value on " + field_->to_string());
    return std::get<Rational>(value_);
}

std::uint32_t FieldElement::residue() const {
    if (field_->kind() != FieldDescriptor::Kind::PrimeField)
        throw FieldError("residue on " + field_->to_string());
    return std::get<std::uint32_t>(value_);
}

const std::vector<Rational>& FieldElement::coords() const {
    if (field_->kind() != FieldDescriptor::Kind::Cyclotomic)
        throw FieldError("coords on " + field_->to_string());
    return std::get<std::vector<Rational>>(value_);
}

std::string FieldElement::to_string() const {
    switch (field_->kind()) {
        case FieldDescriptor::Kind::Rationals:
            return rat_to_string(std::get<Rational>(value_));
        case FieldDescriptor::Kind::PrimeField:
            return std::to_string(std::get<std::uint32_t>(value_));
        case FieldDescriptor::Kind::Cyclotomic: {
            const auto& c = std::get<std::vector<Rational>>(value_);
            std::string out;
            for (std::size_t k = 0; k < c.size(); ++k) {
                if (c[k] == 0) continue;
                Rational a = c[k];
                bool negative = a < 0;
                if (out.empty()) {
                    if (negative) out += "-";
                } else {
                    out += negative ? " - " : " + ";
                }
                Rational mag = negative ? Rational(-a) : a;
                bool unit = (mag == 1);
                if (k == 0) {
                    out += rat_to_string(mag);
                } else {
                    if (!unit) out += rat_to_string(mag) + "*";
                    out += "z";
                    if (k > 1) out += "^" + std::to_string(k);
                }
            }
            return out.empty() ? "0" : out;
        }
    }
    return "?";
}

FieldElement FieldElement::parse(const FieldDescriptor* f, const std::string& text) {
    switch (f->kind()) {
        case FieldDescriptor::Kind::Rationals:
            return {f, rat_parse(text)};
        case FieldDescriptor::Kind::PrimeField: {
            std::string s;
            for (char c : text)
                if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
            if (s.empty()) throw ParseError("empty element literal");
            std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
            if (i >= s.size()) throw ParseError("bad element literal: " + text);
            for (; i < s.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(s[i])))
                    throw ParseError("bad element literal: " + text);
            return from_rational(f, Rational(mpz_class(s)));
        }
        case FieldDescriptor::Kind::Cyclotomic:
            break;
    }

    // Cyclotomic: sum of terms  [rational] [*] [z [^k]]  joined by + / -.
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty element literal");

    QPoly acc;
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
        } else if (!first) {
            throw ParseError("expected + or - in: " + text);
        }
        first = false;
        if (i >= s.size()) throw ParseError("dangling sign in: " + text);

        Rational coef(1);
        bool saw_coef = false;
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j < s.size() && s[j] == '/') {
                ++j;
                std::size_t k = j;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                if (j == k) throw ParseError("bad denominator in: " + text);
            }
            coef = rat_parse(s.substr(i, j - i));
            i = j;
            saw_coef = true;
        }
        if (sign < 0) coef = -coef;

        unsigned power = 0;
        if (i < s.size() && (s[i] == '*' || s[i] == 'z')) {
            if (s[i] == '*') {
                if (!saw_coef) throw ParseError("stray * in: " + text);
                ++i;
                if (i >= s.size() || s[i] != 'z') throw ParseError("expected z in: " + text);
            }
            ++i;  // consume 'z'
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t j = i;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                if (j == i) throw ParseError("bad exponent in: " + text);
                power = static_cast<unsigned>(std::stoul(s.substr(i, j - i)));
                i = j;
            }
        } else if (!saw_coef) {
            throw ParseError("expected term at '" + s.substr(i) + "' in: " + text);
        }

        if (acc.size() < power + 1) acc.resize(power + 1, Rational(0));
        acc[power] += coef;
    }

    auto [q, r] = qp_divmod(acc, f->modulus());
    r.resize(f->extension_degree(), Rational(0));
    return {f, std::move(r)};
}

// ---------------------------------------------------------------------------
// Roots of unity
// ---------------------------------------------------------------------------

namespace {

// Exact-order check by explicit powering: w, w^2, ..., first hit of 1 must
// be at exponent n.
bool has_exact_order(const FieldElement& w, unsigned n) {
    FieldElement acc = w;
    const FieldElement one = FieldElement::one(w.field());
    for (unsigned j = 1; j < n; ++j) {
        if (acc == one) return false;
        acc = acc * w;
    }
    return acc == one;
}

}  // namespace

FieldElement primitive_root_of_unity(const FieldDescriptor* f, unsigned n) {
    if (n == 0) throw NoSuchRootError("root-of-unity order must be positive");
    if (n == 1) return FieldElement::one(f);

    switch (f->kind()) {
        case FieldDescriptor::Kind::Rationals: {
            if (n == 2) return FieldElement::from_integer(f, -1);
            throw NoSuchRootError("QQ has no primitive root of order " + std::to_string(n));
        }
        case FieldDescriptor::Kind::PrimeField: {
            std::uint32_t p = f->prime();
            if ((p - 1) % n != 0)
                throw NoSuchRootError("Fp(" + std::to_string(p) +
                                      ") has no primitive root of order " + std::to_string(n));
            for (std::uint32_t a = 2; a < p; ++a) {
                FieldElement w = FieldElement::from_integer(f, a);
                if (has_exact_order(w, n)) return w;
            }
            throw NoSuchRootError("no root of order " + std::to_string(n) + " found");
        }
        case FieldDescriptor::Kind::Cyclotomic: {
            unsigned k = f->cyclotomic_index();
            // Roots of unity in Q(zeta_k) form a cyclic group generated by
            // zeta_k (k even) or -zeta_k (k odd), of order lcm(2, k).
            FieldElement g = FieldElement::zeta(f);
            unsigned order = k;
            if (k % 2 == 1) {
                g = -g;
                order = 2 * k;
            }
            if (order % n != 0)
                throw NoSuchRootError(f->to_string() + " has no primitive root of order " +
                                      std::to_string(n));
            FieldElement w = g.pow(order / n);
            if (!has_exact_order(w, n))
                throw NoSuchRootError("root-of-unity order verification failed");
            return w;
        }
    }
    throw FieldError("unknown field kind");
}

}  // namespace containlab
