#include <doctest.h>

#include <array>
#include <set>

#include "containlab/configuration.hpp"

using namespace containlab;

namespace {

std::set<std::string> point_set(const FatPointConfiguration& cfg) {
    std::set<std::string> keys;
    for (const auto& fp : cfg.points) {
        std::string k;
        for (const auto& c : fp.point) k += c.to_string() + "|";
        keys.insert(k);
    }
    return keys;
}

}  // namespace

TEST_CASE("dual Hesse: 12 points on 9 lines, three through each") {
    auto [cfg, arr] = dual_hesse();
    CHECK(cfg.points.size() == 12);
    CHECK(arr.lines.size() == 9);
    CHECK(cfg.name == "dual-hesse");
    for (const auto& fp : cfg.points) {
        CHECK(fp.multiplicity == 1);
        CHECK(arr.lines_through(fp.point) == 3);
    }
    // The arrangement has no intersection points beyond the 12.
    CHECK(arr.incidence.size() == 12);
    for (const auto& ip : arr.incidence) CHECK(ip.line_indices.size() == 3);
    // (1:1:1) is one of them.
    auto f = cfg.ring->field();
    std::vector<FieldElement> ones(3, FieldElement::one(f));
    CHECK(arr.lines_through(ones) == 3);

    Polynomial prod = arr.product();
    CHECK(prod.total_degree() == 9);
    CHECK(prod.is_homogeneous());
}

TEST_CASE("fermat configurations") {
    SUBCASE("n=3 over the default field coincides with dual Hesse") {
        auto [cfg, arr] = fermat(3, FieldDescriptor::cyclotomic(3));
        CHECK(cfg.points.size() == 12);
        CHECK(arr.lines.size() == 9);
        CHECK(cfg.name == "fermat:3");
        CHECK(point_set(cfg) == point_set(dual_hesse().first));
    }
    SUBCASE("n=4 over QQ(zeta4)") {
        auto [cfg, arr] = fermat(4, FieldDescriptor::cyclotomic(4));
        CHECK(cfg.points.size() == 19);
        CHECK(arr.lines.size() == 12);
        unsigned on3 = 0, on4 = 0;
        for (const auto& fp : cfg.points) {
            unsigned t = arr.lines_through(fp.point);
            if (t == 3) ++on3;
            else if (t == 4) ++on4;
        }
        CHECK(on3 == 16);  // the Q_{a,b}
        CHECK(on4 == 3);   // the coordinate points
    }
    SUBCASE("n=3 over F_7") {
        auto [cfg, arr] = fermat(3, FieldDescriptor::prime_field(7));
        CHECK(cfg.points.size() == 12);
        CHECK(cfg.name == "fermat:3:Fp(7)");
        for (const auto& fp : cfg.points) CHECK(arr.lines_through(fp.point) == 3);
    }
    SUBCASE("rejections") {
        CHECK_THROWS_AS(fermat(2, FieldDescriptor::rationals()), ConfigError);
        CHECK_THROWS_AS(fermat(3, FieldDescriptor::prime_field(2)), ConfigError);
        // 3 does not divide 5 - 1, so F_5 has no cube root of unity.
        CHECK_THROWS_AS(fermat(3, FieldDescriptor::prime_field(5)), NoSuchRootError);
    }
}

TEST_CASE("star configurations") {
    auto s32 = star(3, 2);
    CHECK(s32.points.size() == 3);
    CHECK(s32.name == "star:3:2");

    auto s52 = star(5, 2);
    CHECK(s52.points.size() == 10);

    auto s43 = star(4, 3);
    CHECK(s43.points.size() == 4);
    CHECK(s43.projective_dimension() == 3);

    // Each point really lies on exactly N of the hyperplanes; the
    // constructor verifies this, so construction succeeding is the check.
    // Distinctness of parameters is enforced:
    auto q = FieldDescriptor::rationals();
    std::vector<FieldElement> bad{FieldElement::from_integer(q, 1),
                                  FieldElement::from_integer(q, 1),
                                  FieldElement::from_integer(q, 2)};
    CHECK_THROWS_AS(star(3, 2, bad), ConfigError);
    CHECK_THROWS_AS(star(2, 3), ConfigError);

    // Custom parameters appear in the name.
    std::vector<FieldElement> ts{FieldElement::from_integer(q, 2),
                                 FieldElement::from_integer(q, 3),
                                 FieldElement::from_integer(q, 5)};
    CHECK(star(3, 2, ts).name == "star:3:2:2,3,5");
}

TEST_CASE("boroczky12: 19 triple points of the 12-gon line family") {
    auto [cfg, arr] = boroczky12();
    CHECK(cfg.points.size() == 19);
    CHECK(arr.lines.size() == 12);
    CHECK(cfg.ring->field() == FieldDescriptor::cyclotomic(12));
    for (const auto& fp : cfg.points) CHECK(arr.lines_through(fp.point) == 3);
    // 19 triple + 9 simple intersection points in the whole arrangement.
    unsigned simple = 0, triple = 0;
    for (const auto& ip : arr.incidence) {
        if (ip.line_indices.size() == 2) ++simple;
        if (ip.line_indices.size() == 3) ++triple;
    }
    CHECK(triple == 19);
    CHECK(simple == 9);
    // P_0 = (1, 0) collects the x-axis member and the two secants
    // towards P_3 and P_9, so it is one of the 19 triple points.
    auto f = cfg.ring->field();
    std::vector<FieldElement> p0{FieldElement::one(f), FieldElement::zero(f),
                                 FieldElement::one(f)};
    CHECK(arr.lines_through(p0) == 3);
    CHECK(point_set(cfg).count("1|0|1|") == 1);
}

TEST_CASE("punctured plane") {
    auto z3 = punctured_plane(3);
    CHECK(z3.points.size() == 12);
    CHECK(z3.name == "punctured:3");
    auto f = z3.ring->field();
    // The removed point is really absent.
    std::string removed = "0|0|1|";
    CHECK(point_set(z3).count(removed) == 0);

    // The 9 lines of P^2(F_3) missing (0:0:1) meet by 3 in the 12 points.
    std::vector<FieldElement> origin{FieldElement::zero(f), FieldElement::zero(f),
                                     FieldElement::one(f)};
    std::vector<Polynomial> avoiding;
    // Normalized representatives of all 13 lines: (1:b:c), (0:1:c), (0:0:1).
    std::vector<std::array<std::uint32_t, 3>> reps;
    for (std::uint32_t b = 0; b < 3; ++b)
        for (std::uint32_t c = 0; c < 3; ++c) reps.push_back({1, b, c});
    for (std::uint32_t c = 0; c < 3; ++c) reps.push_back({0, 1, c});
    reps.push_back({0, 0, 1});
    for (const auto& r : reps) {
        Polynomial l = Polynomial::parse(
            z3.ring, std::to_string(r[0]) + "*x0 + " + std::to_string(r[1]) + "*x1 + " +
                         std::to_string(r[2]) + "*x2");
        if (!l.evaluate(origin).is_zero()) avoiding.push_back(l);
    }
    CHECK(avoiding.size() == 9);
    for (const auto& fp : z3.points) {
        unsigned t = 0;
        for (const auto& l : avoiding)
            if (l.evaluate(fp.point).is_zero()) ++t;
        CHECK(t == 3);
    }

    CHECK(punctured_plane(5).points.size() == 30);
    CHECK_THROWS_AS(punctured_plane(2), ConfigError);
    CHECK_THROWS_AS(punctured_plane(6), ContainLabError);  // rejected as non-prime
}

TEST_CASE("klein-f7: 21 external lines, 21 quadruple + 28 triple points") {
    auto [cfg, arr] = klein_f7();
    CHECK(cfg.points.size() == 49);
    CHECK(arr.lines.size() == 21);
    CHECK(cfg.ring->field() == FieldDescriptor::prime_field(7));
    unsigned quadruple = 0, triple = 0;
    for (const auto& fp : cfg.points) {
        unsigned t = arr.lines_through(fp.point);
        if (t == 4) ++quadruple;
        if (t == 3) ++triple;
    }
    CHECK(quadruple == 21);
    CHECK(triple == 28);
}

TEST_CASE("general points are reproducible and in general position") {
    auto g = general_points(6, 2, 1);
    CHECK(g.points.size() == 6);
    CHECK(g.name == "general:6:2:1");
    auto again = general_points(6, 2, 1);
    CHECK(point_set(g) == point_set(again));
    CHECK(point_set(g) != point_set(general_points(6, 2, 2)));

    // No 3 collinear: check all triples through a 3x3 determinant,
    // computed here independently as an expansion.
    auto f = g.ring->field();
    auto det3 = [&](const std::vector<FieldElement>& a, const std::vector<FieldElement>& b,
                    const std::vector<FieldElement>& c) {
        return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
               a[2] * (b[0] * c[1] - b[1] * c[0]);
    };
    for (unsigned i = 0; i < 6; ++i)
        for (unsigned j = i + 1; j < 6; ++j)
            for (unsigned k = j + 1; k < 6; ++k)
                CHECK_FALSE(
                    det3(g.points[i].point, g.points[j].point, g.points[k].point).is_zero());

    CHECK(general_points(1, 2, 7).points.size() == 1);
    CHECK(general_points(4, 3, 1).points.size() == 4);
}

TEST_CASE("coordinate points have monomial ideals") {
    auto all2 = coordinate_points(2);
    CHECK(all2.points.size() == 3);
    CHECK(all2.name == "coordpts:2");
    Ideal expected(all2.ring, {Polynomial::parse(all2.ring, "x0*x1"),
                               Polynomial::parse(all2.ring, "x0*x2"),
                               Polynomial::parse(all2.ring, "x1*x2")});
    CHECK(same_ideal(all2.ideal(), expected));

    auto single = coordinate_points(2, {0});
    CHECK(single.points.size() == 1);
    CHECK(single.name == "coordpts:2:0");
    Ideal exp1(single.ring, {Polynomial::parse(single.ring, "x1"),
                             Polynomial::parse(single.ring, "x2")});
    CHECK(same_ideal(single.ideal(), exp1));

    CHECK(coordinate_points(3).points.size() == 4);
    CHECK_THROWS_AS(coordinate_points(2, {}), ConfigError);
    CHECK_THROWS_AS(coordinate_points(2, {5}), ConfigError);
}

TEST_CASE("defining ideal of the dual Hesse configuration") {
    auto [cfg, arr] = dual_hesse();
    Ideal I = cfg.ideal();
    Ideal expected(cfg.ring, {Polynomial::parse(cfg.ring, "x0*x1^3 - x0*x2^3"),
                              Polynomial::parse(cfg.ring, "x1*x2^3 - x1*x0^3"),
                              Polynomial::parse(cfg.ring, "x2*x0^3 - x2*x1^3")});
    CHECK(same_ideal(I, expected));
}

TEST_CASE("export format") {
    auto text = coordinate_points(2).to_text();
    CHECK(text == "(1 : 0 : 0) ^ 1\n(0 : 1 : 0) ^ 1\n(0 : 0 : 1) ^ 1\n");
    auto dh = dual_hesse().first.to_text();
    CHECK(dh.find("(1 : 1 : 1) ^ 1") != std::string::npos);
}

TEST_CASE("registry") {
    for (const auto& name : registry_roster()) {
        auto nc = make_configuration(name);
        CHECK(nc.config.name == name);
        CHECK(nc.config.points.size() >= 1);
    }
    CHECK(make_configuration("dual-hesse").lines.has_value());
    CHECK(make_configuration("star:3:2").lines == std::nullopt);
    CHECK(make_configuration("star:3:2:2,3,5").config.name == "star:3:2:2,3,5");
    CHECK(make_configuration("fermat:3").config.name == "fermat:3");
    CHECK(make_configuration("coordpts:2:0,1").config.points.size() == 2);

    CHECK_THROWS_AS(make_configuration("nonsense"), ConfigError);
    CHECK_THROWS_AS(make_configuration("fermat"), ConfigError);
    CHECK_THROWS_AS(make_configuration("fermat:x"), ConfigError);
    CHECK_THROWS_AS(make_configuration("star:3"), ConfigError);
    CHECK_THROWS_AS(make_configuration("dual-hesse:1"), ConfigError);
}
