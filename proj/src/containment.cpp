#include "containlab/containment.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "containlab/invariants.hpp"

namespace containlab {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t ms_since(Clock::time_point t0) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count());
}

// The containment target M^j * I(Z)^r.
Ideal target_ideal(const FatPointConfiguration& Z, unsigned r, unsigned j,
                   const Budget& budget) {
    Ideal power = ideal_power(Z.ideal(budget), r);
    if (j == 0) return power;
    return ideal_product(irrelevant_power(Z.ring, j), power);
}

// Membership of every canonical generator of S in the target, with the
// first failing generator reduced a second time before it is trusted.
struct ReductionOutcome {
    bool contains = true;
    std::optional<Polynomial> witness;
};

ReductionOutcome reduce_generators(const Ideal& S, const Ideal& target, const Budget& budget) {
    auto basis = target.groebner(MonomialOrder::grevlex(), budget);
    for (const auto& g : S.generators()) {
        if (is_member(g, *basis)) continue;
        if (normal_form(g, *basis).is_zero())
            throw ContainLabError("witness failed re-verification: " + g.to_string());
        return {false, g};
    }
    return {true, std::nullopt};
}

}  // namespace

bool els_guarantee(unsigned N, unsigned m, unsigned r) {
    return m >= N * r;
}

unsigned bhh_bound(unsigned N, unsigned r) {
    if (N < 1 || r < 1) throw ContainLabError("bhh_bound needs N, r >= 1");
    return N * r - (N - 1);
}

ContainmentVerdict check_containment(const FatPointConfiguration& Z, unsigned m, unsigned r,
                                     unsigned j, const Budget& budget) {
    if (m < 1 || r < 1) throw ContainLabError("check_containment needs m, r >= 1");
    auto t0 = Clock::now();

    ContainmentVerdict v;
    v.config = Z.name;
    v.field = Z.ring->field()->to_string();
    v.N = Z.projective_dimension();
    v.m = m;
    v.r = r;
    v.j = j;

    try {
        Ideal S = Z.symbolic(m, budget);
        Ideal T = target_ideal(Z, r, j, budget);
        ReductionOutcome out = reduce_generators(S, T, budget);
        v.holds = out.contains;
        if (!out.contains) {
            v.witness = out.witness;
            v.witness_degree = out.witness->total_degree();
        }
        if (j == 0 && els_guarantee(v.N, m, r)) v.guarantees.push_back("els");
        if (j == 0 && v.holds == true) {
            // Advisory only; a budget failure here leaves the verdict alone.
            try {
                if (postulation_criterion(Z, m, r, budget) == Postulation::Guaranteed)
                    v.guarantees.push_back("postulation");
            } catch (const BudgetExceededError&) {
            }
        }
    } catch (const BudgetExceededError&) {
        v.status = ContainmentVerdict::Status::BudgetExceeded;
        v.holds.reset();
    }
    v.elapsed_ms = ms_since(t0);
    return v;
}

bool reverse_containment(const FatPointConfiguration& Z, unsigned r, unsigned m,
                         const Budget& budget) {
    if (m < 1 || r < 1) throw ContainLabError("reverse_containment needs m, r >= 1");
    Ideal S = Z.symbolic(m, budget);
    Ideal P = ideal_power(Z.ideal(budget), r);
    return ideal_contains(S, P, budget).contains;
}

Postulation postulation_criterion(const FatPointConfiguration& Z, unsigned m, unsigned r,
                                  const Budget& budget) {
    if (m < 1 || r < 1) throw ContainLabError("postulation_criterion needs m, r >= 1");
    unsigned reg = regularity_0dim(Z.ideal(budget), Z, budget);
    unsigned a = alpha(Z.symbolic(m, budget), budget);
    return (static_cast<std::uint64_t>(r) * reg <= a) ? Postulation::Guaranteed
                                                      : Postulation::Inconclusive;
}

PostulationComparison postulation_criterion_variant(const FatPointConfiguration& Z, unsigned m,
                                                    unsigned r, unsigned m_max,
                                                    const Budget& budget) {
    if (m_max < 1) throw ContainLabError("postulation variant needs m_max >= 1");
    PostulationComparison cmp;
    cmp.proven = postulation_criterion(Z, m, r, budget);

    std::vector<Rational> seq = symassreg_estimate(Z, m_max, budget);
    Rational est = *std::min_element(seq.begin(), seq.end());
    Rational a(alpha(Z.symbolic(m, budget), budget));
    cmp.variant =
        (Rational(r) * est <= a) ? Postulation::Guaranteed : Postulation::Inconclusive;
    cmp.agree = cmp.proven == cmp.variant;
    return cmp;
}

ResurgenceEstimate resurgence_search(const FatPointConfiguration& Z, unsigned m_max,
                                     unsigned r_max, const Budget& budget) {
    if (m_max < 1 || r_max < 1) throw ContainLabError("resurgence_search needs bounds >= 1");
    ResurgenceEstimate est;
    est.config = Z.name;
    est.m_max = m_max;
    est.r_max = r_max;
    est.upper_bound_note =
        "violations bound the resurgence from below only; containment holds whenever "
        "m/r reaches the resurgence, so upper bounds need arguments this scan does not run";

    unsigned N = Z.projective_dimension();
    for (unsigned m = 2; m <= m_max; ++m) {
        for (unsigned r = 1; r <= r_max && r < m; ++r) {
            if (els_guarantee(N, m, r)) continue;  // containment is a theorem
            ContainmentVerdict v = check_containment(Z, m, r, 0, budget);
            est.verdicts.push_back(v);
            if (v.status == ContainmentVerdict::Status::BudgetExceeded) {
                est.partial = true;
                continue;
            }
            if (*v.holds) continue;
            est.violations.emplace_back(m, r);
            Rational ratio(m, r);
            ratio.canonicalize();
            if (!est.lower_bound || ratio > *est.lower_bound) est.lower_bound = ratio;
        }
    }
    return est;
}

bool ConjectureReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const ConjectureItem& it) {
        return it.status == ConjectureItem::Status::Pass;
    });
}

namespace {

// Re-verify a failed expected-pass containment three times, each time
// with the target basis rebuilt from a rotated generator list so the
// basis computation is repeated, not replayed from a cache.
bool confirm_failure(const Ideal& target, const Polynomial& witness, const Budget& budget) {
    const auto& gens = target.generators();
    for (unsigned rot = 0; rot < 3; ++rot) {
        std::vector<Polynomial> rotated(gens.begin(), gens.end());
        std::rotate(rotated.begin(), rotated.begin() + (rot % std::max<size_t>(gens.size(), 1)),
                    rotated.end());
        Ideal rebuilt(target.ring(), std::move(rotated));
        auto basis = rebuilt.groebner(MonomialOrder::grevlex(), budget);
        if (normal_form(witness, *basis).is_zero())
            throw ContainLabError("conjecture failure did not re-verify: " +
                                  witness.to_string());
    }
    return true;
}

ConjectureItem containment_item(const FatPointConfiguration& Z, const std::string& label,
                                const Ideal& sub, const Ideal& target, const Budget& budget) {
    ConjectureItem item;
    item.label = label;
    auto t0 = Clock::now();
    try {
        ReductionOutcome out = reduce_generators(sub, target, budget);
        if (out.contains) {
            item.status = ConjectureItem::Status::Pass;
        } else {
            confirm_failure(target, *out.witness, budget);
            item.status = ConjectureItem::Status::Fail;
            item.research_finding = true;
            item.witness_degree = out.witness->total_degree();
        }
    } catch (const BudgetExceededError&) {
        item.status = ConjectureItem::Status::BudgetExceeded;
    }
    item.elapsed_ms = ms_since(t0);
    return item;
}

}  // namespace

ConjectureReport conjecture_checks(const FatPointConfiguration& Z, unsigned r_max,
                                   const Budget& budget) {
    if (r_max < 1) throw ContainLabError("conjecture_checks needs r_max >= 1");
    ConjectureReport report;
    report.config = Z.name;
    unsigned N = Z.projective_dimension();

    for (unsigned r = 1; r <= r_max; ++r) {
        unsigned m = N * r;
        unsigned j = r * (N - 1);
        std::ostringstream label;
        label << "I^(" << m << ") in M^" << j << "*I^" << r;
        try {
            Ideal S = Z.symbolic(m, budget);
            Ideal T = target_ideal(Z, r, j, budget);
            report.items.push_back(containment_item(Z, label.str(), S, T, budget));
        } catch (const BudgetExceededError&) {
            ConjectureItem item;
            item.label = label.str();
            item.status = ConjectureItem::Status::BudgetExceeded;
            report.items.push_back(item);
        }
    }

    try {
        Ideal S = Z.symbolic(2, budget);
        Ideal T = target_ideal(Z, 1, 1, budget);
        report.items.push_back(containment_item(Z, "I^(2) in M*I", S, T, budget));
    } catch (const BudgetExceededError&) {
        ConjectureItem item;
        item.label = "I^(2) in M*I";
        item.status = ConjectureItem::Status::BudgetExceeded;
        report.items.push_back(item);
    }

    for (unsigned k = 1; k <= r_max; ++k) {
        std::ostringstream label;
        label << "I^(" << (k + 1) << ") in M*I^(" << k << ")";
        try {
            Ideal S = Z.symbolic(k + 1, budget);
            Ideal T = ideal_product(irrelevant_power(Z.ring, 1), Z.symbolic(k, budget));
            report.items.push_back(containment_item(Z, label.str(), S, T, budget));
        } catch (const BudgetExceededError&) {
            ConjectureItem item;
            item.label = label.str();
            item.status = ConjectureItem::Status::BudgetExceeded;
            report.items.push_back(item);
        }
    }
    return report;
}

}  // namespace containlab
