#include "containlab/reproduce.hpp"

#include <algorithm>

#include "doctest.h"

using namespace containlab;

TEST_CASE("golden case roster") {
    std::vector<std::string> names = golden_case_names();
    CHECK(names.size() == 14);
    CHECK(std::is_sorted(names.begin(), names.end()));
    CHECK(std::find(names.begin(), names.end(), "dual-hesse") != names.end());
    CHECK(std::find(names.begin(), names.end(), "fermat-5") != names.end());
    CHECK_THROWS_AS(run_golden_case("no-such-case"), ContainLabError);
}

TEST_CASE("a golden case carries its evidence") {
    CaseResult result = run_golden_case("reverse-law");
    CHECK(result.name == "reverse-law");
    CHECK(result.pass);
    CHECK(result.blocking);
    CHECK_FALSE(result.details.empty());
    for (const auto& line : result.details) CHECK(line.rfind("ok:", 0) == 0);
    CHECK(result.summary().rfind("reverse-law", 0) == 0);
}

TEST_CASE("the designed failure is reported, not hidden") {
    // The square of the punctured-plane ideal first appears in degree 8,
    // so the case clause expecting 10 must come back as a failure.
    CaseResult result = run_golden_case("punctured-3");
    CHECK_FALSE(result.pass);
    CHECK(result.blocking);
    bool mentions_alpha = false;
    for (const auto& line : result.details)
        if (line.find("alpha") != std::string::npos && line.rfind("FAIL", 0) == 0)
            mentions_alpha = true;
    CHECK(mentions_alpha);
}
