#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "containlab/configuration.hpp"

namespace containlab {

// Verdict for one query "I^(m) subseteq M^j * I^r" on a fat-point
// configuration (j = 0 means the plain containment I^(m) subseteq I^r).
struct ContainmentVerdict {
    enum class Status { Decided, BudgetExceeded };

    std::string config;
    std::string field;
    unsigned N = 0;  // projective dimension
    unsigned m = 0;
    unsigned r = 0;
    unsigned j = 0;
    Status status = Status::Decided;
    // Empty exactly when the budget ran out; a verdict is never guessed.
    std::optional<bool> holds;
    // For a negative verdict: a canonical generator of I^(m) whose normal
    // form against the target basis is nonzero (re-verified before the
    // verdict is returned).
    std::optional<Polynomial> witness;
    std::optional<unsigned> witness_degree;
    // Advisory tags naming results that predicted the outcome ("els",
    // "postulation").  The verdict itself always comes from reduction.
    std::vector<std::string> guarantees;
    std::uint64_t elapsed_ms = 0;
};

// Decide I^(m) subseteq M^j * I^r by reducing every canonical generator
// of the symbolic power against the target's Groebner basis.
ContainmentVerdict check_containment(const FatPointConfiguration& Z, unsigned m, unsigned r,
                                     unsigned j = 0, const Budget& budget = Budget::defaults());

// Containment is a theorem once m >= N*r.
bool els_guarantee(unsigned N, unsigned m, unsigned r);

// Conjectured sufficient lower bound for m: N*r - (N-1).
unsigned bhh_bound(unsigned N, unsigned r);

// Reverse-direction probe: the ordinary power inside the symbolic one,
// I^r subseteq I^(m).  Holds exactly when m <= r.
bool reverse_containment(const FatPointConfiguration& Z, unsigned r, unsigned m,
                         const Budget& budget = Budget::defaults());

enum class Postulation { Guaranteed, Inconclusive };

// Sufficient criterion for I^(m) subseteq I^r on a saturated
// 0-dimensional ideal: r * reg(I) <= alpha(I^(m)).  Guaranteed implies
// the containment holds; Inconclusive decides nothing.
Postulation postulation_criterion(const FatPointConfiguration& Z, unsigned m, unsigned r,
                                  const Budget& budget = Budget::defaults());

// Experimental side-by-side evaluation of the criterion with reg(I)
// replaced by the running symbolic-regularity estimate
// min_{k <= m_max} reg(I^(k))/k.  The variant carries no correctness
// claim; callers log agreement or disagreement, nothing more.
struct PostulationComparison {
    Postulation proven = Postulation::Inconclusive;
    Postulation variant = Postulation::Inconclusive;
    bool agree = false;
};

PostulationComparison postulation_criterion_variant(const FatPointConfiguration& Z, unsigned m,
                                                    unsigned r, unsigned m_max = 2,
                                                    const Budget& budget = Budget::defaults());

// Result of an exhaustive grid scan for non-containments I^(m) !subseteq
// I^r.  Cells with m <= r are skipped (they never beat ratio 1) and
// cells with m >= N*r are skipped (containment is a theorem there); only
// proven facts prune, conjectured bounds never do.
struct ResurgenceEstimate {
    std::string config;
    unsigned m_max = 0;
    unsigned r_max = 0;
    std::vector<ContainmentVerdict> verdicts;  // every cell actually checked, lex order
    std::vector<std::pair<unsigned, unsigned>> violations;  // (m, r), lex order
    // max m/r over violations; empty when none were found.
    std::optional<Rational> lower_bound;
    bool partial = false;  // some cell exceeded its budget
    std::string upper_bound_note;
};

ResurgenceEstimate resurgence_search(const FatPointConfiguration& Z, unsigned m_max,
                                     unsigned r_max, const Budget& budget = Budget::defaults());

// One line of a conjecture report.
struct ConjectureItem {
    enum class Status { Pass, Fail, BudgetExceeded };

    std::string label;
    Status status = Status::BudgetExceeded;
    // A failed expected-pass check that survived three independent
    // re-verifications; it still fails the run until acknowledged.
    bool research_finding = false;
    std::optional<unsigned> witness_degree;
    std::uint64_t elapsed_ms = 0;
};

struct ConjectureReport {
    std::string config;
    std::vector<ConjectureItem> items;

    bool all_pass() const;
};

// Expected-pass battery for one configuration: for each r <= r_max the
// refined containment I^(N*r) subseteq M^{r(N-1)} * I^r, the square-in-
// maximal-ideal check I^(2) subseteq M*I, and the nested symbolic chain
// I^(k+1) subseteq M*I^(k) for k <= r_max.
ConjectureReport conjecture_checks(const FatPointConfiguration& Z, unsigned r_max,
                                   const Budget& budget = Budget::defaults());

}  // namespace containlab
