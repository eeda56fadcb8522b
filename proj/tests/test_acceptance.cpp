#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "rtq/verify.hpp"

// Runs the full verification table and prints one line per criterion check.

TEST_CASE("paper verification table") {
    auto results = rtq::run_paper_verification();
    REQUIRE(!results.empty());
    for (const auto& r : results) {
        std::printf("[%s] %-32s %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
        CHECK_MESSAGE(r.pass, r.name, ": ", r.detail);
    }
}

TEST_CASE("verification is deterministic for a fixed seed") {
    auto first = rtq::run_paper_verification(7u);
    auto second = rtq::run_paper_verification(7u);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].name == second[i].name);
        CHECK(first[i].pass == second[i].pass);
        CHECK(first[i].detail == second[i].detail);
    }
}
