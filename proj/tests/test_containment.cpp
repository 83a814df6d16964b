#include "containlab/containment.hpp"

#include <algorithm>

#include "doctest.h"

using namespace containlab;

namespace {

bool has_tag(const ContainmentVerdict& v, const std::string& tag) {
    return std::find(v.guarantees.begin(), v.guarantees.end(), tag) != v.guarantees.end();
}

}  // namespace

TEST_CASE("guarantee arithmetic") {
    CHECK(els_guarantee(2, 4, 2));
    CHECK_FALSE(els_guarantee(2, 3, 2));
    CHECK(els_guarantee(3, 6, 2));
    CHECK(els_guarantee(2, 5, 2));
    CHECK_FALSE(els_guarantee(3, 5, 2));

    CHECK(bhh_bound(2, 2) == 3);
    CHECK(bhh_bound(3, 2) == 4);
    CHECK(bhh_bound(2, 1) == 1);
    CHECK_THROWS_AS(bhh_bound(0, 2), ContainLabError);
}

TEST_CASE("symbolic cube of the dual Hesse escapes the square") {
    auto [Z, A] = dual_hesse();
    ContainmentVerdict v = check_containment(Z, 3, 2);
    CHECK(v.status == ContainmentVerdict::Status::Decided);
    CHECK(v.holds == false);
    CHECK(v.config == "dual-hesse");
    CHECK(v.N == 2);
    CHECK(v.m == 3);
    CHECK(v.r == 2);
    CHECK(v.j == 0);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness_degree == 9);
    CHECK_FALSE(has_tag(v, "els"));

    // Negative verdicts are deterministic: a fresh run reproduces the
    // same witness presentation.
    auto [Z2, A2] = dual_hesse();
    ContainmentVerdict again = check_containment(Z2, 3, 2);
    CHECK(again.holds == false);
    CHECK(again.witness->to_string() == v.witness->to_string());
}

TEST_CASE("containment at the proven multiplier") {
    auto [Z, A] = dual_hesse();
    ContainmentVerdict v = check_containment(Z, 4, 2);
    CHECK(v.status == ContainmentVerdict::Status::Decided);
    CHECK(v.holds == true);
    CHECK_FALSE(v.witness.has_value());
    CHECK(has_tag(v, "els"));
}

TEST_CASE("refined containment with an irrelevant-power factor") {
    // For a single point, I^(2) = I^2 sits inside M*I.
    FatPointConfiguration Z = coordinate_points(2, {0});
    ContainmentVerdict v = check_containment(Z, 2, 1, 1);
    CHECK(v.holds == true);
    CHECK(v.j == 1);

    // Dropping j can only help: same query without the factor.
    ContainmentVerdict plain = check_containment(Z, 2, 1, 0);
    CHECK(plain.holds == true);
}

TEST_CASE("budget exhaustion withholds the verdict") {
    auto [Z, A] = dual_hesse();
    ContainmentVerdict v = check_containment(Z, 3, 2, 0, Budget::with(1e-9, 1000000));
    CHECK(v.status == ContainmentVerdict::Status::BudgetExceeded);
    CHECK_FALSE(v.holds.has_value());
    CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("input validation") {
    FatPointConfiguration Z = coordinate_points(2, {0});
    CHECK_THROWS_AS(check_containment(Z, 0, 1), ContainLabError);
    CHECK_THROWS_AS(check_containment(Z, 1, 0), ContainLabError);
    CHECK_THROWS_AS(reverse_containment(Z, 0, 1), ContainLabError);
    CHECK_THROWS_AS(resurgence_search(Z, 0, 1), ContainLabError);
    CHECK_THROWS_AS(conjecture_checks(Z, 0), ContainLabError);
}

TEST_CASE("reverse law on a small grid") {
    FatPointConfiguration Z = punctured_plane(3);
    for (unsigned m = 1; m <= 2; ++m)
        for (unsigned r = 1; r <= 2; ++r) CHECK(reverse_containment(Z, r, m) == (m <= r));
}

TEST_CASE("postulation criterion matches hand-computed sides") {
    // Single point: reg = 1 and alpha(I^(m)) = m, so m >= r suffices.
    FatPointConfiguration P = coordinate_points(2, {0});
    CHECK(postulation_criterion(P, 2, 2) == Postulation::Guaranteed);

    // Dual Hesse at (3,2): 2*reg = 10 exceeds alpha(I^(3)) = 9, so the
    // criterion must stay silent (the containment indeed fails).
    auto [Z, A] = dual_hesse();
    CHECK(postulation_criterion(Z, 3, 2) == Postulation::Inconclusive);

    // Star with d = 4: criterion fires and the containment holds.
    FatPointConfiguration S = star(4, 2);
    CHECK(postulation_criterion(S, 3, 2) == Postulation::Guaranteed);
}

TEST_CASE("experimental variant reports agreement") {
    FatPointConfiguration S = star(4, 2);
    PostulationComparison cmp = postulation_criterion_variant(S, 3, 2, 2);
    CHECK(cmp.proven == Postulation::Guaranteed);
    CHECK(cmp.agree == (cmp.proven == cmp.variant));
}

TEST_CASE("resurgence scan records exactly the real violations") {
    auto [Z, A] = dual_hesse();
    ResurgenceEstimate est = resurgence_search(Z, 4, 2);
    CHECK(est.config == "dual-hesse");
    CHECK_FALSE(est.partial);
    // The only cell the proven pruning leaves in this window is (3,2).
    CHECK(est.verdicts.size() == 1);
    REQUIRE(est.violations.size() == 1);
    CHECK(est.violations[0] == std::pair<unsigned, unsigned>{3, 2});
    REQUIRE(est.lower_bound.has_value());
    CHECK(*est.lower_bound == Rational(3, 2));

    FatPointConfiguration S = star(4, 2);
    ResurgenceEstimate none = resurgence_search(S, 4, 2);
    CHECK(none.violations.empty());
    CHECK_FALSE(none.lower_bound.has_value());

    // Symbolic and ordinary powers of a single point coincide.
    FatPointConfiguration P = coordinate_points(2, {0});
    ResurgenceEstimate single = resurgence_search(P, 3, 3);
    CHECK(single.violations.empty());
}

TEST_CASE("conjecture battery passes on the dual Hesse") {
    auto [Z, A] = dual_hesse();
    ConjectureReport report = conjecture_checks(Z, 2);
    CHECK(report.config == "dual-hesse");
    REQUIRE(report.items.size() == 5);
    CHECK(report.items[0].label == "I^(2) in M^1*I^1");
    CHECK(report.items[1].label == "I^(4) in M^2*I^2");
    CHECK(report.items[2].label == "I^(2) in M*I");
    CHECK(report.items[3].label == "I^(2) in M*I^(1)");
    CHECK(report.items[4].label == "I^(3) in M*I^(2)");
    for (const auto& item : report.items) {
        CHECK(item.status == ConjectureItem::Status::Pass);
        CHECK_FALSE(item.research_finding);
    }
    CHECK(report.all_pass());
}
