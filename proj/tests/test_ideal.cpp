#include <doctest.h>

#include <algorithm>
#include <random>

#include "containlab/ideal.hpp"

using namespace containlab;

namespace {

RingPtr qq_ring(unsigned n) {
    return PolynomialRing::create(FieldDescriptor::rationals(), n);
}

std::vector<FieldElement> qq_point(std::initializer_list<long> cs) {
    std::vector<FieldElement> p;
    for (long c : cs) p.push_back(FieldElement::from_integer(FieldDescriptor::rationals(), c));
    return p;
}

std::vector<std::string> gen_strings(const Ideal& I) {
    std::vector<std::string> out;
    for (const auto& g : I.generators()) out.push_back(g.to_string());
    return out;
}

}  // namespace

TEST_CASE("ideal construction") {
    RingPtr R = qq_ring(2);
    Ideal I(R, {Polynomial::parse(R, "x0"), Polynomial::parse(R, "x1"),
                Polynomial::parse(R, "x0"), Polynomial::zero(R)});
    CHECK(gen_strings(I) == std::vector<std::string>{"x0", "x1"});
    CHECK_FALSE(I.is_zero_ideal());
    CHECK(Ideal(R, {}).is_zero_ideal());
    CHECK_THROWS_AS(Ideal(R, {Polynomial::parse(R, "x0 + 1")}), ContainLabError);
}

TEST_CASE("ordinary powers") {
    RingPtr R = qq_ring(2);
    Ideal I(R, {Polynomial::parse(R, "x0"), Polynomial::parse(R, "x1")});
    CHECK(gen_strings(ideal_power(I, 2)) ==
          std::vector<std::string>{"x0^2", "x0*x1", "x1^2"});
    CHECK(gen_strings(ideal_power(I, 0)) == std::vector<std::string>{"1"});

    RingPtr S = qq_ring(3);
    Ideal F(S, {Polynomial::parse(S, "x0*x1^3 - x0*x2^3"),
                Polynomial::parse(S, "x1*x2^3 - x0^3*x1"),
                Polynomial::parse(S, "x0^3*x2 - x1^3*x2")});
    Ideal F2 = ideal_power(F, 2);
    CHECK(F2.generators().size() == 6);
    for (const auto& g : F2.generators()) CHECK(g.total_degree() == 8u);
}

TEST_CASE("products") {
    RingPtr R = qq_ring(3);
    Ideal X(R, {Polynomial::parse(R, "x0")});
    Ideal Y(R, {Polynomial::parse(R, "x1")});
    CHECK(gen_strings(ideal_product(X, Y)) == std::vector<std::string>{"x0*x1"});

    Ideal M = irrelevant_power(R, 1);
    Ideal XY(R, {Polynomial::parse(R, "x0"), Polynomial::parse(R, "x1")});
    CHECK(ideal_product(M, XY).generators().size() == 5);
    CHECK(same_ideal(ideal_product(irrelevant_power(R, 0), XY), XY));
}

TEST_CASE("irrelevant ideal powers") {
    RingPtr R = qq_ring(3);
    CHECK(gen_strings(irrelevant_power(R, 1)) == std::vector<std::string>{"x0", "x1", "x2"});
    CHECK(irrelevant_power(R, 2).generators().size() == 6);
    CHECK(gen_strings(irrelevant_power(R, 0)) == std::vector<std::string>{"1"});
}

TEST_CASE("point ideals") {
    RingPtr R = qq_ring(3);
    CHECK(gen_strings(point_ideal(R, qq_point({0, 0, 1}))) ==
          std::vector<std::string>{"x0", "x1"});
    CHECK(gen_strings(point_ideal(R, qq_point({1, 1, 1}))) ==
          std::vector<std::string>{"x0 - x1", "x0 - x2"});

    const FieldDescriptor* K = FieldDescriptor::cyclotomic(3);
    RingPtr S = PolynomialRing::create(K, 3);
    FieldElement eps = FieldElement::zeta(K);
    std::vector<FieldElement> P{FieldElement::one(K), eps, eps.pow(2)};
    Ideal IP = point_ideal(S, P);
    CHECK(IP.generators().size() == 2);
    for (const auto& g : IP.generators()) CHECK(g.evaluate(P).is_zero());

    CHECK_THROWS_AS(point_ideal(R, qq_point({0, 0, 0})), ContainLabError);
    CHECK_THROWS_AS(point_ideal(R, qq_point({1, 0})), RingMismatchError);
}

TEST_CASE("intersections") {
    RingPtr R = qq_ring(3);
    Ideal X(R, {Polynomial::parse(R, "x0")});
    Ideal Y(R, {Polynomial::parse(R, "x1")});
    Ideal XY = ideal_intersect(X, Y);
    CHECK(gen_strings(XY) == std::vector<std::string>{"x0*x1"});

    Ideal P1 = point_ideal(R, qq_point({1, 0, 0}));
    Ideal P2 = point_ideal(R, qq_point({0, 1, 0}));
    Ideal P3 = point_ideal(R, qq_point({1, 1, 1}));

    CHECK(same_ideal(ideal_intersect(P1, P1), P1));

    // Commutative and associative up to ideal equality.
    CHECK(same_ideal(ideal_intersect(P1, P2), ideal_intersect(P2, P1)));
    CHECK(same_ideal(ideal_intersect(ideal_intersect(P1, P2), P3),
                     ideal_intersect(P1, ideal_intersect(P2, P3))));

    // Two coordinate points in the projective plane: the intersection
    // contains the line through them and sits in degree >= 1.
    Ideal I12 = ideal_intersect(P1, P2);
    CHECK(is_member(Polynomial::parse(R, "x2"), *I12.groebner()));
    CHECK_FALSE(is_member(Polynomial::parse(R, "x0"), *I12.groebner()));
}

TEST_CASE("containment with witness") {
    RingPtr R = qq_ring(2);
    Ideal I(R, {Polynomial::parse(R, "x0"), Polynomial::parse(R, "x1")});
    Ideal I2 = ideal_power(I, 2);

    auto up = ideal_contains(I, I2);
    CHECK(up.contains);
    CHECK_FALSE(up.witness.has_value());

    auto down = ideal_contains(I2, I);
    CHECK_FALSE(down.contains);
    REQUIRE(down.witness.has_value());
    CHECK(down.witness->to_string() == "x0");

    CHECK(same_ideal(I, I));
    CHECK_FALSE(same_ideal(I, I2));
}

TEST_CASE("symbolic powers of points") {
    RingPtr R = qq_ring(3);
    std::vector<FieldElement> P = qq_point({1, 2, 3});

    // A single smooth point: symbolic equals ordinary for m <= 4.
    for (unsigned m = 1; m <= 4; ++m) {
        Ideal sym = symbolic_power(R, {{P, 1}}, m);
        Ideal ord = ideal_power(point_ideal(R, P), m);
        CHECK(same_ideal(sym, ord));
    }

    // Multiplicity folds into the exponent.
    Ideal fat = symbolic_power(R, {{P, 2}}, 1);
    CHECK(same_ideal(fat, ideal_power(point_ideal(R, P), 2)));

    std::vector<FatPoint> pts{{qq_point({1, 0, 0}), 1},
                              {qq_point({0, 1, 0}), 1},
                              {qq_point({0, 0, 1}), 1},
                              {qq_point({1, 1, 1}), 1}};
    Ideal I = symbolic_power(R, pts, 1);
    Ideal I2 = ideal_power(I, 2);
    Ideal S2 = symbolic_power(R, pts, 2);

    // Ordinary sits inside symbolic.
    CHECK(ideal_contains(S2, I2).contains);

    // The presentation is canonical: reordering the points changes nothing.
    std::vector<FatPoint> shuffled{pts[2], pts[0], pts[3], pts[1]};
    Ideal S2b = symbolic_power(R, shuffled, 2);
    CHECK(gen_strings(S2) == gen_strings(S2b));

    // Reverse containment law on this configuration for m, r <= 3.
    std::vector<Ideal> sym{symbolic_power(R, pts, 1), S2, symbolic_power(R, pts, 3)};
    std::vector<Ideal> ord{I, I2, ideal_power(I, 3)};
    for (unsigned m = 1; m <= 3; ++m)
        for (unsigned r = 1; r <= 3; ++r) {
            bool holds = ideal_contains(sym[m - 1], ord[r - 1]).contains;
            CHECK(holds == (m <= r));
        }

    CHECK_THROWS_AS(symbolic_power(R, {}, 1), ContainLabError);
    CHECK_THROWS_AS(symbolic_power(R, pts, 0), ContainLabError);
}

TEST_CASE("groebner cache") {
    RingPtr R = qq_ring(3);
    Ideal I(R, {Polynomial::parse(R, "x0*x2 - x1^2"), Polynomial::parse(R, "x0^2 - x1*x2")});
    auto b1 = I.groebner();
    auto b2 = I.groebner();
    CHECK(b1.get() == b2.get());

    Ideal J(R, {Polynomial::parse(R, "x0^3 - x1^2*x2"), Polynomial::parse(R, "x1^3 - x0*x2^2")});
    CHECK_THROWS_AS(J.groebner(MonomialOrder::grevlex(), Budget::with(0.0, 100)),
                    BudgetExceededError);
    // The failure does not poison the cache.
    auto ok = J.groebner();
    CHECK(ok->elements().size() >= 2);
}

TEST_CASE("ideal text round-trip") {
    RingPtr R = qq_ring(3);
    Ideal I(R, {Polynomial::parse(R, "x0*x1 - x2^2"), Polynomial::parse(R, "x0^2 - x1*x2")});
    std::string text = I.to_text();
    Ideal back = Ideal::from_text(text);
    CHECK(back.ring()->same_structure(*R));
    CHECK(gen_strings(back) == gen_strings(I));
    CHECK(back.to_text() == text);

    const FieldDescriptor* K = FieldDescriptor::cyclotomic(3);
    RingPtr S = PolynomialRing::create(K, 2);
    Ideal C(S, {Polynomial::parse(S, "(1 + z)*x0 - x1")});
    CHECK(gen_strings(Ideal::from_text(C.to_text())) == gen_strings(C));

    CHECK_THROWS_AS(Ideal::from_text("not a header\nx0\n"), ParseError);
}
