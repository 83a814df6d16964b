#include <doctest.h>

#include "containlab/invariants.hpp"
#include "containlab/oracle.hpp"

using namespace containlab;

TEST_CASE("initial degree") {
    auto ring = PolynomialRing::create(FieldDescriptor::rationals(), 3);
    Ideal M(ring, {Polynomial::parse(ring, "x0"), Polynomial::parse(ring, "x1")});
    CHECK(alpha(M) == 1);
    CHECK(alpha(ideal_power(M, 2)) == 2);

    auto [f3, arr] = fermat(3, FieldDescriptor::cyclotomic(3));
    CHECK(alpha(f3.ideal()) == 4);  // generators x_i(x_j^3 - x_k^3)

    Ideal zero(ring, {});
    CHECK_THROWS_AS(alpha(zero), ContainLabError);

    auto lexring = PolynomialRing::create(FieldDescriptor::rationals(), 3,
                                          MonomialOrder::lex());
    Ideal L(lexring, {Polynomial::parse(lexring, "x0")});
    CHECK_THROWS_AS(alpha(L), ContainLabError);
}

TEST_CASE("alpha for the punctured plane over F_3") {
    auto z3 = punctured_plane(3);
    Ideal I = z3.ideal();
    // 12 points impose independent conditions on cubics (10 of them), so
    // no cubic vanishes on all of Z and quartics are the first to.
    CHECK(alpha(I) == 4);
    // Products of two minimal-degree members realize alpha(I^2) = 2 alpha(I).
    CHECK(alpha(ideal_power(I, 2)) == 8);
}

TEST_CASE("hilbert function") {
    auto ring = PolynomialRing::create(FieldDescriptor::rationals(), 3);
    Ideal M(ring, {Polynomial::parse(ring, "x0"), Polynomial::parse(ring, "x1")});
    CHECK(hilbert_function(M, 5) == 1);  // only x2^5 survives
    CHECK(hilbert_function(M, 0) == 1);

    Ideal zero(ring, {});
    CHECK(hilbert_function(zero, 3) == 10);  // all of R_3

    auto [dh, arr] = dual_hesse();
    Ideal I = dh.ideal();
    std::vector<unsigned> hf;
    for (unsigned d = 0; d <= 5; ++d) hf.push_back(hilbert_function(I, d));
    CHECK(hf == std::vector<unsigned>{1, 3, 6, 10, 12, 12});
}

TEST_CASE("scheme degree") {
    CHECK(scheme_degree(dual_hesse().first) == 12);
    CHECK(scheme_degree(fermat(4, FieldDescriptor::cyclotomic(4)).first) == 19);
    auto one = coordinate_points(2, {0});
    CHECK(scheme_degree(one) == 1);
    CHECK(scheme_degree(scaled_scheme(one, 2)) == 3);  // C(3,2)
    CHECK(scheme_degree(scaled_scheme(coordinate_points(3, {0}), 2)) == 4);  // C(4,3)
}

TEST_CASE("regularity of saturated 0-dimensional ideals") {
    auto one = coordinate_points(2, {0});
    CHECK(regularity_0dim(one.ideal(), one) == 1);

    auto two = coordinate_points(2, {0, 1});
    CHECK(regularity_0dim(two.ideal(), two) == 2);

    auto [dh, arr] = dual_hesse();
    CHECK(regularity_0dim(dh.ideal(), dh) == 5);

    // The ordinary square of three coordinate points is not saturated;
    // its Hilbert function overshoots the fat-scheme degree 9.
    auto three = coordinate_points(2);
    Ideal I2 = ideal_power(three.ideal(), 2);
    CHECK_THROWS_AS(regularity_0dim(I2, scaled_scheme(three, 2)), ContainLabError);
    // Mismatched scheme: pass the reduced scheme with the double-point ideal.
    CHECK_THROWS_AS(regularity_0dim(three.symbolic(2), three), ContainLabError);
}

TEST_CASE("waldschmidt estimates") {
    auto one = coordinate_points(2, {0});
    CHECK(waldschmidt_estimate(one, 3) == Rational(1));

    auto three = coordinate_points(2);
    CHECK(waldschmidt_estimate(three, 1) == Rational(2));
    CHECK(waldschmidt_estimate(three, 2) == Rational(3, 2));  // alpha(I^(2)) = 3

    auto [dh, arr] = dual_hesse();
    CHECK(waldschmidt_estimate(dh, 3) == Rational(3));  // alpha(I^(3)) = 9
}

TEST_CASE("symbolic asymptotic regularity estimates") {
    auto one = coordinate_points(2, {0});
    auto seq1 = symassreg_estimate(one, 3);
    CHECK(seq1 == std::vector<Rational>{Rational(1), Rational(1), Rational(1)});

    auto [dh, arr] = dual_hesse();
    CHECK(symassreg_estimate(dh, 1) == std::vector<Rational>{Rational(5)});

    auto two = coordinate_points(2, {0, 1});
    auto seq2 = symassreg_estimate(two, 2);
    CHECK(seq2 == std::vector<Rational>{Rational(2), Rational(2)});  // reg(I^(2)) = 4
}

TEST_CASE("alpha is subadditive across symbolic powers") {
    std::vector<FatPointConfiguration> configs{
        coordinate_points(2), coordinate_points(2, {0, 1}), general_points(3, 2, 1),
        star(4, 2)};
    for (const auto& Z : configs) {
        std::map<unsigned, unsigned> a;
        for (unsigned m = 1; m <= 4; ++m) a[m] = alpha(Z.symbolic(m));
        for (unsigned m1 = 1; m1 <= 3; ++m1)
            for (unsigned m2 = 1; m1 + m2 <= 4; ++m2)
                CHECK(a[m1 + m2] <= a[m1] + a[m2]);
    }
}

TEST_CASE("pipeline alpha and graded dimensions match the oracle") {
    // The same numbers through two unrelated algorithms: Groebner bases
    // vs exact interpolation.
    std::vector<std::string> names{"coordpts:2", "star:3:2", "general:3:2:1",
                                   "punctured:3", "fermat:3"};
    for (const auto& name : names) {
        auto Z = make_configuration(name).config;
        for (unsigned m = 1; m <= 2; ++m) {
            Ideal Im = Z.symbolic(m);
            unsigned a = alpha(Im);
            CHECK(a == alpha_oracle(Z.ring, Z.points, m));
            for (unsigned d = m; d <= a + 2; ++d) {
                unsigned amb = static_cast<unsigned>(
                    graded_monomial_basis(Z.ring, d).size());
                CHECK(symbolic_piece(Z.ring, Z.points, m, d).dimension() ==
                      amb - hilbert_function(Im, d));
            }
        }
    }
}

TEST_CASE("hilbert function stabilizes exactly at the scheme degree") {
    std::vector<FatPointConfiguration> configs{coordinate_points(2),
                                               general_points(4, 2, 5), star(4, 2)};
    for (const auto& Z : configs) {
        Ideal I = Z.ideal();
        unsigned reg = regularity_0dim(I, Z);
        std::uint64_t deg = scheme_degree(Z);
        for (unsigned d = reg > 2 ? reg - 2 : 0; d + 1 < reg; ++d)
            CHECK(hilbert_function(I, d) < deg);
        for (unsigned d = reg; d <= reg + 3; ++d)
            CHECK(hilbert_function(I, d - 1) == deg);
    }
}

TEST_CASE("invariant report bundles the numbers") {
    auto [dh, arr] = dual_hesse();
    auto rep = invariant_report(dh, 1);
    CHECK(rep.alpha == 4);
    CHECK(rep.scheme_deg == 12);
    CHECK(rep.regularity == 5);
    CHECK(rep.hilbert.at(0) == 1);
    CHECK(rep.hilbert.at(4) == 12);
    CHECK(rep.notes.size() == 1);
}
