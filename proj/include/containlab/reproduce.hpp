#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "containlab/containment.hpp"

namespace containlab {

// Outcome of one golden case: a named, self-budgeted battery of clauses
// whose expectations are frozen.  A case passes only if every clause
// holds and the case stayed inside its wall-clock budget.
struct CaseResult {
    std::string name;
    bool pass = false;
    // Stretch cases report their outcome but never gate a suite run.
    bool blocking = true;
    double budget_secs = 0;
    std::uint64_t elapsed_ms = 0;
    std::vector<std::string> details;  // one "ok: ..." / "FAIL: ..." line per clause

    std::string summary() const;
};

// Canonical case order (stretch cases last).
std::vector<std::string> golden_case_names();

CaseResult run_golden_case(const std::string& name);

// Runs every golden case on a worker pool (threads = 0 picks the
// hardware concurrency) and returns results sorted by case name.
std::vector<CaseResult> run_golden_suite(unsigned threads = 0);

// True when every blocking case passed.
bool suite_passed(const std::vector<CaseResult>& results);

}  // namespace containlab
