#include "containlab/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace containlab {

// ---------------------------------------------------------------------------
// Monomial
// ---------------------------------------------------------------------------

unsigned Monomial::check_nvars(unsigned n) {
    if (n > MAX_VARS)
        throw OverflowError("monomial arity " + std::to_string(n) + " exceeds capacity " +
                            std::to_string(MAX_VARS));
    return n;
}

void Monomial::set(unsigned i, unsigned v) {
    if (v > 0xFFFFu) throw OverflowError("exponent overflow: " + std::to_string(v));
    deg_ += v - e_[i];
    e_[i] = static_cast<std::uint16_t>(v);
}

Monomial::Monomial(unsigned nvars, std::initializer_list<unsigned> exps)
    : nvars_(static_cast<std::uint8_t>(check_nvars(nvars))) {
    if (exps.size() != nvars) throw OverflowError("exponent list length mismatch");
    unsigned i = 0;
    for (unsigned v : exps) set(i++, v);
}

Monomial Monomial::from_exponents(const std::vector<unsigned>& exps) {
    Monomial m(static_cast<unsigned>(exps.size()));
    for (unsigned i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
    return m;
}

Monomial Monomial::variable(unsigned nvars, unsigned i, unsigned k) {
    Monomial m(nvars);
    if (i >= nvars) throw OverflowError("variable index out of range");
    m.set(i, k);
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (nvars_ != o.nvars_) throw RingMismatchError("monomial arity mismatch");
    Monomial r(nvars_);
    for (unsigned i = 0; i < nvars_; ++i) r.set(i, e_[i] + o.e_[i]);
    return r;
}

Monomial Monomial::pow(unsigned k) const {
    Monomial r(nvars_);
    for (unsigned i = 0; i < nvars_; ++i) r.set(i, e_[i] * k);
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (nvars_ != o.nvars_) throw RingMismatchError("monomial arity mismatch");
    for (unsigned i = 0; i < nvars_; ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::divide_by(const Monomial& o) const {
    if (!o.divides(*this)) throw ContainLabError("monomial quotient does not exist");
    Monomial r(nvars_);
    for (unsigned i = 0; i < nvars_; ++i) r.set(i, e_[i] - o.e_[i]);
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars_ != b.nvars_) throw RingMismatchError("monomial arity mismatch");
    Monomial r(a.nvars_);
    for (unsigned i = 0; i < a.nvars_; ++i) r.set(i, std::max(a.e_[i], b.e_[i]));
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    if (a.nvars_ != b.nvars_) throw RingMismatchError("monomial arity mismatch");
    Monomial r(a.nvars_);
    for (unsigned i = 0; i < a.nvars_; ++i) r.set(i, std::min(a.e_[i], b.e_[i]));
    return r;
}

bool Monomial::coprime_with(const Monomial& o) const {
    if (nvars_ != o.nvars_) throw RingMismatchError("monomial arity mismatch");
    for (unsigned i = 0; i < nvars_; ++i)
        if (e_[i] && o.e_[i]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// MonomialOrder
// ---------------------------------------------------------------------------

namespace {

// Graded reverse lex restricted to the variable window [lo, hi): compare
// window degree, then the last differing exponent, reversed.
int grevlex_window(const Monomial& a, const Monomial& b, unsigned lo, unsigned hi) {
    long da = 0, db = 0;
    for (unsigned i = lo; i < hi; ++i) {
        da += a.exponent(i);
        db += b.exponent(i);
    }
    if (da != db) return da < db ? -1 : 1;
    for (unsigned i = hi; i-- > lo;) {
        int d = static_cast<int>(a.exponent(i)) - static_cast<int>(b.exponent(i));
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.num_vars() != b.num_vars()) throw RingMismatchError("monomial arity mismatch");
    unsigned n = a.num_vars();
    switch (kind_) {
        case Kind::GradedReverseLex:
            return grevlex_window(a, b, 0, n);
        case Kind::Lex: {
            for (unsigned i = 0; i < n; ++i) {
                int d = static_cast<int>(a.exponent(i)) - static_cast<int>(b.exponent(i));
                if (d != 0) return d < 0 ? -1 : 1;
            }
            return 0;
        }
        case Kind::BlockElimination: {
            unsigned k = std::min(boundary_, n);
            if (int c = grevlex_window(a, b, 0, k)) return c;
            return grevlex_window(a, b, k, n);
        }
    }
    return 0;
}

std::string MonomialOrder::to_string() const {
    switch (kind_) {
        case Kind::GradedReverseLex: return "grevlex";
        case Kind::Lex: return "lex";
        case Kind::BlockElimination: return "block(" + std::to_string(boundary_) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// PolynomialRing
// ---------------------------------------------------------------------------

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace

PolynomialRing::PolynomialRing(const FieldDescriptor* f, unsigned n, MonomialOrder ord,
                               std::vector<std::string> names)
    : field_(f), num_vars_(n), order_(ord), names_(std::move(names)) {}

RingPtr PolynomialRing::create(const FieldDescriptor* field, unsigned num_vars,
                               MonomialOrder order, std::vector<std::string> names) {
    if (num_vars == 0 || num_vars > Monomial::MAX_VARS)
        throw OverflowError("ring arity out of range: " + std::to_string(num_vars));
    if (names.empty()) {
        for (unsigned i = 0; i < num_vars; ++i) names.push_back("x" + std::to_string(i));
    }
    if (names.size() != num_vars) throw ParseError("variable name count mismatch");
    for (unsigned i = 0; i < num_vars; ++i) {
        if (!valid_identifier(names[i])) throw ParseError("bad variable name: " + names[i]);
        // "z" is the cyclotomic generator in the element grammar.
        if (names[i] == "z" && field->kind() == FieldDescriptor::Kind::Cyclotomic)
            throw ParseError("variable name z collides with the field generator");
        for (unsigned j = 0; j < i; ++j)
            if (names[i] == names[j]) throw ParseError("duplicate variable name: " + names[i]);
    }
    return RingPtr(new PolynomialRing(field, num_vars, order, std::move(names)));
}

int PolynomialRing::var_index(const std::string& name) const {
    for (unsigned i = 0; i < num_vars_; ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

bool PolynomialRing::same_structure(const PolynomialRing& o) const {
    return field_ == o.field_ && num_vars_ == o.num_vars_ && order_ == o.order_ &&
           names_ == o.names_;
}

std::string PolynomialRing::to_string() const {
    std::string s = field_->to_string() + "[";
    for (unsigned i = 0; i < num_vars_; ++i) {
        if (i) s += ",";
        s += names_[i];
    }
    s += "] " + order_.to_string();
    return s;
}

RingPtr PolynomialRing::with_order(MonomialOrder order) const {
    return create(field_, num_vars_, order, names_);
}

// ---------------------------------------------------------------------------
// Polynomial
// ---------------------------------------------------------------------------

void Polynomial::require_ring(const Polynomial& o) const {
    if (!ring_ || !o.ring_) throw RingMismatchError("polynomial without a ring");
    if (ring_ == o.ring_) return;
    if (!ring_->same_structure(*o.ring_))
        throw RingMismatchError("mixing rings " + ring_->to_string() + " and " +
                                o.ring_->to_string());
}

void Polynomial::normalize() {
    const MonomialOrder& ord = ring_->order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (t.mono.num_vars() != ring_->num_vars())
            throw RingMismatchError("term arity does not match ring");
        if (t.coef.field() != ring_->field())
            throw FieldMismatchError("coefficient field does not match ring");
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coef += t.coef;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

Polynomial Polynomial::constant(RingPtr ring, const FieldElement& c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({Monomial(ring->num_vars()), c});
    p.normalize();
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, long v) {
    const FieldDescriptor* f = ring->field();
    return constant(std::move(ring), FieldElement::from_integer(f, v));
}

Polynomial Polynomial::variable(RingPtr ring, unsigned i) {
    if (i >= ring->num_vars()) throw OverflowError("variable index out of range");
    Polynomial p(ring);
    p.terms_.push_back({Monomial::variable(p.ring_->num_vars(), i),
                        FieldElement::one(p.ring_->field())});
    return p;
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const FieldElement& c) {
    Polynomial p(std::move(ring));
    p.terms_.push_back({m, c});
    p.normalize();
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

std::optional<unsigned> Polynomial::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    for (const auto& t : terms_)
        if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw ContainLabError("leading term of zero polynomial");
    return terms_.front();
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_ring(o);
    const MonomialOrder& ord = ring_->order();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ord.compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            FieldElement s = terms_[i].coef + o.terms_[j].coef;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coef = t.coef * c;
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const FieldElement& c) const {
    // Multiplying every monomial by a fixed one preserves relative order.
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        FieldElement nc = t.coef * c;
        if (!nc.is_zero()) r.terms_.push_back({t.mono * m, std::move(nc)});
    }
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_ring(o);
    std::vector<Term> prods;
    prods.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) prods.push_back({a.mono * b.mono, a.coef * b.coef});
    return from_terms(ring_, std::move(prods));
}

Polynomial Polynomial::pow(unsigned k) const {
    if (!ring_) throw RingMismatchError("polynomial without a ring");
    Polynomial acc = constant(ring_, 1);
    Polynomial base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        if (k >>= 1) base = base * base;
    }
    return acc;
}

Polynomial Polynomial::monic() const {
    return scaled(leading_coefficient().inverse());
}

FieldElement Polynomial::evaluate(const std::vector<FieldElement>& point) const {
    if (!ring_) throw RingMismatchError("polynomial without a ring");
    if (point.size() != ring_->num_vars())
        throw RingMismatchError("evaluation point has wrong length");
    const FieldDescriptor* f = ring_->field();
    for (const auto& c : point)
        if (c.field() != f) throw FieldMismatchError("evaluation point field mismatch");
    FieldElement acc = FieldElement::zero(f);
    for (const auto& t : terms_) {
        FieldElement v = t.coef;
        for (unsigned i = 0; i < ring_->num_vars(); ++i)
            if (unsigned e = t.mono.exponent(i)) v = v * point[i].pow(e);
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::map_variables(RingPtr target,
                                     const std::vector<unsigned>& image_of_var) const {
    if (!ring_) throw RingMismatchError("polynomial without a ring");
    if (target->field() != ring_->field())
        throw FieldMismatchError("variable map must preserve the coefficient field");
    if (image_of_var.size() != ring_->num_vars())
        throw RingMismatchError("variable map has wrong length");
    std::vector<Term> mapped;
    mapped.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<unsigned> exps(target->num_vars(), 0);
        for (unsigned i = 0; i < ring_->num_vars(); ++i) {
            unsigned img = image_of_var[i];
            if (img >= target->num_vars()) throw RingMismatchError("variable map out of range");
            exps[img] += t.mono.exponent(i);
        }
        mapped.push_back({Monomial::from_exponents(exps), t.coef});
    }
    return from_terms(std::move(target), std::move(mapped));
}

Polynomial Polynomial::with_ring(RingPtr target) const {
    if (!ring_) throw RingMismatchError("polynomial without a ring");
    if (target->field() != ring_->field() || target->num_vars() != ring_->num_vars() ||
        target->names() != ring_->names())
        throw RingMismatchError("with_ring requires the same variables and field");
    return from_terms(std::move(target), terms_);
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef)
            return false;
    if (ring_ && o.ring_ && ring_ != o.ring_ && !ring_->same_structure(*o.ring_)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Text form
// ---------------------------------------------------------------------------

namespace {

// Splits a coefficient into a join sign and a magnitude string.  The
// magnitude is empty for +-1 (the monomial carries the term alone); a
// cyclotomic value with several basis terms is parenthesized.
struct CoefParts {
    bool negative = false;
    std::string magnitude;  // empty means 1
};

CoefParts coef_parts(const FieldElement& c) {
    CoefParts out;
    switch (c.field()->kind()) {
        case FieldDescriptor::Kind::Rationals: {
            Rational q = c.rational_value();
            if (q < 0) {
                out.negative = true;
                q = -q;
            }
            if (q != 1) out.magnitude = rat_to_string(q);
            return out;
        }
        case FieldDescriptor::Kind::PrimeField: {
            if (c.residue() != 1) out.magnitude = std::to_string(c.residue());
            return out;
        }
        case FieldDescriptor::Kind::Cyclotomic: {
            const auto& coords = c.coords();
            FieldElement mag = c;
            for (const auto& q : coords) {
                if (q == 0) continue;
                if (q < 0) {
                    out.negative = true;
                    mag = -c;
                }
                break;
            }
            int nonzero = 0;
            for (const auto& q : mag.coords())
                if (q != 0) ++nonzero;
            std::string s = mag.to_string();
            if (nonzero > 1)
                out.magnitude = "(" + s + ")";
            else if (s != "1")
                out.magnitude = s;
            return out;
        }
    }
    throw FieldError("unknown field kind");
}

}  // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        CoefParts cp = coef_parts(t.coef);
        if (out.empty()) {
            if (cp.negative) out += "-";
        } else {
            out += cp.negative ? " - " : " + ";
        }
        std::string body;
        for (unsigned i = 0; i < ring_->num_vars(); ++i) {
            unsigned e = t.mono.exponent(i);
            if (e == 0) continue;
            if (!body.empty()) body += "*";
            body += ring_->var_name(i);
            if (e > 1) body += "^" + std::to_string(e);
        }
        if (body.empty()) {
            out += cp.magnitude.empty() ? "1" : cp.magnitude;
        } else {
            if (!cp.magnitude.empty()) out += cp.magnitude + "*";
            out += body;
        }
    }
    return out;
}

Polynomial Polynomial::parse(RingPtr ring, const std::string& text) {
    const FieldDescriptor* field = ring->field();
    // Whitespace is insignificant everywhere, including inside coefficient
    // parentheses; drop it up front.
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty polynomial literal");
    if (s == "0") return Polynomial(ring);

    std::vector<Term> terms;
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

        // One term: factors joined by '*', each a coefficient literal, a
        // parenthesized field element, or a variable power.
        FieldElement coef = FieldElement::from_integer(field, sign);
        Monomial mono(ring->num_vars());
        bool any_factor = false;
        while (true) {
            std::size_t start = i;
            std::string factor;
            if (i < s.size() && s[i] == '(') {
                int depth = 0;
                std::size_t j = i;
                for (; j < s.size(); ++j) {
                    if (s[j] == '(') ++depth;
                    if (s[j] == ')' && --depth == 0) break;
                }
                if (j >= s.size()) throw ParseError("unbalanced parentheses in: " + text);
                factor = s.substr(i, j - i + 1);
                i = j + 1;
            } else {
                std::size_t j = i;
                while (j < s.size() && s[j] != '*' && s[j] != '+' && s[j] != '-') ++j;
                factor = s.substr(i, j - i);
                i = j;
            }
            if (factor.empty()) throw ParseError("empty factor in: " + text);
            any_factor = true;

            if (factor.front() == '(') {
                coef *= FieldElement::parse(field, factor.substr(1, factor.size() - 2));
            } else {
                std::string base = factor;
                unsigned exp = 1;
                auto caret = factor.find('^');
                if (caret != std::string::npos) {
                    base = factor.substr(0, caret);
                    std::string es = factor.substr(caret + 1);
                    if (es.empty()) throw ParseError("bad exponent in: " + text);
                    for (char c : es)
                        if (!std::isdigit(static_cast<unsigned char>(c)))
                            throw ParseError("bad exponent in: " + text);
                    unsigned long v = std::stoul(es);
                    if (v > 0xFFFFu) throw OverflowError("exponent overflow in: " + text);
                    exp = static_cast<unsigned>(v);
                }
                int vi = ring->var_index(base);
                if (vi >= 0) {
                    mono = mono * Monomial::variable(ring->num_vars(),
                                                    static_cast<unsigned>(vi), exp);
                } else if (field->kind() == FieldDescriptor::Kind::Cyclotomic &&
                           (base == "z" || base.rfind("z^", 0) == 0)) {
                    coef *= FieldElement::parse(field, factor);
                } else if (caret == std::string::npos) {
                    coef *= FieldElement::parse(field, factor);
                } else {
                    throw ParseError("unknown variable '" + base + "' in: " + text);
                }
            }

            if (i < s.size() && s[i] == '*') {
                ++i;
                continue;
            }
            if (start == i) throw ParseError("parser made no progress in: " + text);
            break;
        }
        if (!any_factor) throw ParseError("empty term in: " + text);
        if (!coef.is_zero()) terms.push_back({mono, coef});
    }
    return from_terms(std::move(ring), std::move(terms));
}

// ---------------------------------------------------------------------------
// Content removal
// ---------------------------------------------------------------------------

namespace {

void accumulate_content(const Rational& q, mpz_class& num_gcd, mpz_class& den_lcm) {
    if (q == 0) return;
    num_gcd = gcd(num_gcd, q.get_num());
    den_lcm = lcm(den_lcm, q.get_den());
}

}  // namespace

Polynomial remove_content(const Polynomial& f) {
    if (f.is_zero() || !f.ring()) return f;
    const FieldDescriptor* field = f.ring()->field();
    if (field->kind() == FieldDescriptor::Kind::PrimeField) return f;

    mpz_class num_gcd = 0, den_lcm = 1;
    bool leading_negative = false;
    bool first = true;
    for (const auto& t : f.terms()) {
        if (field->kind() == FieldDescriptor::Kind::Rationals) {
            const Rational& q = t.coef.rational_value();
            accumulate_content(q, num_gcd, den_lcm);
            if (first) leading_negative = q < 0;
        } else {
            for (const auto& q : t.coef.coords()) {
                accumulate_content(q, num_gcd, den_lcm);
                if (first && q != 0) {
                    leading_negative = q < 0;
                    first = false;
                }
            }
        }
        first = false;
    }
    if (num_gcd == 0) return f;
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (leading_negative) scale = -scale;
    return f.scaled(FieldElement::from_rational(field, scale));
}

}  // namespace containlab
