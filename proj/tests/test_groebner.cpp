#include <doctest.h>

#include <algorithm>
#include <random>

#include "containlab/groebner.hpp"
#include "test_util.hpp"

using namespace containlab;
using containlab::testutil::random_element;
using containlab::testutil::random_polynomial;

namespace {

RingPtr qq_ring(unsigned n) {
    return PolynomialRing::create(FieldDescriptor::rationals(), n);
}

std::vector<std::string> basis_strings(const GroebnerBasis& B) {
    std::vector<std::string> out;
    for (const auto& g : B.elements()) out.push_back(g.to_string());
    return out;
}

}  // namespace

TEST_CASE("hand-checked small basis") {
    RingPtr R = qq_ring(2);
    Polynomial f = Polynomial::parse(R, "x0^2");
    Polynomial g = Polynomial::parse(R, "x0*x1 + x1^2");
    GroebnerBasis B = buchberger({f, g}, MonomialOrder::grevlex());
    // S(f, g) = x1*f - x0*g = -x0*x1^2 reduces to x1^3.
    CHECK(basis_strings(B) == std::vector<std::string>{"x0*x1 + x1^2", "x0^2", "x1^3"});

    GroebnerBasis B2 = buchberger({Polynomial::parse(R, "x0"), Polynomial::parse(R, "x1")},
                                  MonomialOrder::grevlex());
    CHECK(basis_strings(B2) == std::vector<std::string>{"x1", "x0"});
    CHECK_FALSE(B2.contains_one());
    CHECK(B2.min_degree() == 1u);

    GroebnerBasis B3 = buchberger({Polynomial::parse(R, "x0"), Polynomial::parse(R, "x0 + 1")},
                                  MonomialOrder::grevlex());
    CHECK(basis_strings(B3) == std::vector<std::string>{"1"});
    CHECK(B3.contains_one());
}

TEST_CASE("twisted cubic relations form a reduced basis") {
    RingPtr R = qq_ring(4);
    std::vector<Polynomial> gens{Polynomial::parse(R, "x0*x2 - x1^2"),
                                 Polynomial::parse(R, "x0*x3 - x1*x2"),
                                 Polynomial::parse(R, "x1*x3 - x2^2")};
    GroebnerBasis B = buchberger(gens, MonomialOrder::grevlex());
    CHECK(B.elements().size() == 3);
    for (const auto& g : gens) CHECK(is_member(g, B));
}

TEST_CASE("block order eliminates the leading block") {
    // Ring (t, x, y); t ahead of the curve variables.
    RingPtr R = qq_ring(3);
    Polynomial p1 = Polynomial::parse(R, "x1 - x0");        // x = t
    Polynomial p2 = Polynomial::parse(R, "x2 - x0^2");      // y = t^2
    GroebnerBasis B = buchberger({p1, p2}, MonomialOrder::block_elimination(1));
    bool found = false;
    for (const auto& g : B.elements()) {
        bool uses_t = false;
        for (const auto& t : g.terms())
            if (t.mono.exponent(0)) uses_t = true;
        if (!uses_t) {
            CHECK(g.to_string() == "x1^2 - x2");
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("normal forms") {
    RingPtr R = qq_ring(2);
    GroebnerBasis Bx = buchberger({Polynomial::parse(R, "x0")}, MonomialOrder::grevlex());
    CHECK(normal_form(Polynomial::parse(R, "x0^2"), Bx).is_zero());
    CHECK(normal_form(Polynomial::parse(R, "x1"), Bx).to_string() == "x1");

    GroebnerBasis B = buchberger({Polynomial::parse(R, "x0^2"),
                                  Polynomial::parse(R, "x0*x1 + x1^2")},
                                 MonomialOrder::grevlex());
    Polynomial f = Polynomial::parse(R, "x0^3 + x0*x1 + 5");
    Polynomial r = normal_form(f, B);
    // The remainder is irreducible and differs from f by a member.
    for (const auto& t : r.terms())
        for (const auto& g : B.elements())
            CHECK_FALSE(g.leading_monomial().divides(t.mono));
    CHECK(is_member(f - r, B));
    CHECK(normal_form(r, B) == r);
}

TEST_CASE("canonical under permutation and rescaling") {
    std::mt19937 rng(5150);
    std::vector<RingPtr> rings{qq_ring(3),
                               PolynomialRing::create(FieldDescriptor::prime_field(13), 3),
                               PolynomialRing::create(FieldDescriptor::cyclotomic(4), 3)};
    for (const RingPtr& R : rings) {
        CAPTURE(R->to_string());
        for (int iter = 0; iter < 8; ++iter) {
            std::vector<Polynomial> gens;
            for (int k = 0; k < 3; ++k) {
                Polynomial f = random_polynomial(R, rng, 4, 2);
                if (!f.is_zero()) gens.push_back(f);
            }
            if (gens.empty()) continue;
            GroebnerBasis B1 = buchberger(gens, MonomialOrder::grevlex());

            std::shuffle(gens.begin(), gens.end(), rng);
            for (auto& g : gens) {
                FieldElement c = random_element(R->field(), rng);
                if (!c.is_zero()) g = g.scaled(c);
            }
            GroebnerBasis B2 = buchberger(gens, MonomialOrder::grevlex());
            REQUIRE(B1.elements().size() == B2.elements().size());
            for (std::size_t i = 0; i < B1.elements().size(); ++i)
                CHECK(B1.elements()[i] == B2.elements()[i]);
        }
    }
}

TEST_CASE("random combinations are members") {
    std::mt19937 rng(777);
    std::vector<RingPtr> rings{qq_ring(3),
                               PolynomialRing::create(FieldDescriptor::prime_field(7), 3),
                               PolynomialRing::create(FieldDescriptor::cyclotomic(3), 3)};
    for (const RingPtr& R : rings) {
        CAPTURE(R->to_string());
        for (int iter = 0; iter < 6; ++iter) {
            std::vector<Polynomial> gens;
            for (int k = 0; k < 2; ++k) {
                Polynomial f = random_polynomial(R, rng, 3, 2);
                if (!f.is_zero()) gens.push_back(f);
            }
            if (gens.empty()) continue;
            GroebnerBasis B = buchberger(gens, MonomialOrder::grevlex());
            Polynomial combo = Polynomial::zero(R);
            for (const auto& g : gens) combo += random_polynomial(R, rng, 3, 2) * g;
            CHECK(is_member(combo, B));
        }
    }
}

TEST_CASE("reduced basis properties hold") {
    std::mt19937 rng(4242);
    RingPtr R = qq_ring(3);
    for (int iter = 0; iter < 10; ++iter) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 3; ++k) {
            Polynomial f = random_polynomial(R, rng, 4, 2);
            if (!f.is_zero()) gens.push_back(f);
        }
        if (gens.empty()) continue;
        GroebnerBasis B = buchberger(gens, MonomialOrder::grevlex());
        const auto& els = B.elements();
        for (std::size_t a = 0; a < els.size(); ++a) {
            CHECK(els[a].leading_coefficient().is_one());
            for (std::size_t b = 0; b < els.size(); ++b) {
                if (a == b) continue;
                for (const auto& t : els[a].terms())
                    CHECK_FALSE(els[b].leading_monomial().divides(t.mono));
            }
        }
    }
}

TEST_CASE("budget exhaustion is an explicit error") {
    RingPtr R = qq_ring(2);
    std::vector<Polynomial> gens{Polynomial::parse(R, "x0^2"),
                                 Polynomial::parse(R, "x0*x1 + x1^2")};

    CHECK_THROWS_AS(buchberger(gens, MonomialOrder::grevlex(), Budget::with(0.0, 1000)),
                    BudgetExceededError);
    try {
        buchberger(gens, MonomialOrder::grevlex(), Budget::with(0.0, 1000));
    } catch (const BudgetExceededError& e) {
        CHECK(e.reason() == BudgetExceededError::Reason::Deadline);
    }

    try {
        buchberger(gens, MonomialOrder::grevlex(), Budget::with(600.0, 0));
        FAIL("expected pair-cap error");
    } catch (const BudgetExceededError& e) {
        CHECK(e.reason() == BudgetExceededError::Reason::PairCap);
    }
}
