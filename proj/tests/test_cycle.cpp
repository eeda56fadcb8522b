#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rtq/catalog.hpp"
#include "rtq/cycle.hpp"

using namespace rtq;

namespace {

// Laufer iteration with the opposite tie-break, to witness order independence.
Divisor laufer_highest_first(const WeightedTree& t) {
    Divisor z = Divisor::ones(t.size());
    while (true) {
        int add = -1;
        for (int v = t.size() - 1; v >= 0; --v)
            if (pairing_with_simple(t, z, v) > 0) {
                add = v;
                break;
            }
        if (add < 0) break;
        ++z[add];
    }
    return z;
}

}  // namespace

TEST_CASE("all-ones fixed points") {
    for (int n : {1, 2, 5, 9}) {
        WeightedTree t = catalog_tree("A", {n});
        CHECK(laufer_artin_cycle(t) == Divisor::ones(n));
    }
    WeightedTree star = catalog_tree("A_nmk", {2, 3, 1});
    CHECK(laufer_artin_cycle(star) == Divisor::ones(star.size()));
}

TEST_CASE("fork cycle doubles the center") {
    WeightedTree d4 = catalog_tree("D", {4});  // fork vertex has id 1
    Divisor z = laufer_artin_cycle(d4);
    CHECK(z.coeffs == std::vector<long long>{1, 2, 1, 1});
    CHECK(z == minimal_cycle_bruteforce(d4, 4));
}

TEST_CASE("iteration is traced and bounded") {
    WeightedTree t = catalog_tree("E71", {});
    std::vector<Divisor> trace;
    Divisor z = laufer_artin_cycle(t, &trace);
    REQUIRE(!trace.empty());
    CHECK(trace.front() == Divisor::ones(t.size()));
    CHECK(trace.back() == z);
    CHECK(static_cast<long long>(trace.size()) - 1 <= z.sum());
    for (std::size_t i = 1; i < trace.size(); ++i) CHECK((trace[i] - trace[i - 1]).sum() == 1);
}

TEST_CASE("tie-break order does not change the cycle") {
    for (const char* fam : {"H_n", "E81", "E82", "B_mn"}) {
        std::vector<int> params = std::string(fam) == "H_n"    ? std::vector<int>{7}
                                  : std::string(fam) == "B_mn" ? std::vector<int>{2, 4}
                                                               : std::vector<int>{};
        WeightedTree t = catalog_tree(fam, params);
        CHECK(laufer_artin_cycle(t) == laufer_highest_first(t));
    }
}

TEST_CASE("brute-force oracle") {
    CHECK(minimal_cycle_bruteforce(catalog_tree("A", {2}), 3) == Divisor::ones(2));
    WeightedTree h5 = catalog_tree("H_n", {5});
    CHECK(minimal_cycle_bruteforce(h5, 4) == laufer_artin_cycle(h5));
}

TEST_CASE("exceptional chain highest root") {
    WeightedTree e8 = catalog_tree("E8", {});
    Divisor z = minimal_cycle_bruteforce(e8, 7);
    CHECK(z == laufer_artin_cycle(e8));
    CHECK(z[2] == 6);  // fork coefficient of the highest root
    CHECK(intersection_pairing(e8, z, z) == -2);
}

TEST_CASE("bound too small is reported") {
    WeightedTree e8 = catalog_tree("E8", {});
    CHECK_THROWS_AS(minimal_cycle_bruteforce(e8, 3), std::domain_error);
}

TEST_CASE("non negative definite input is rejected") {
    WeightedTree affine({2, 2, 2, 2, 2}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK_THROWS_AS(laufer_artin_cycle(affine), std::domain_error);
}

TEST_CASE("multiplicity of named families") {
    CHECK(multiplicity(catalog_tree("A", {4})) == 2);
    CHECK(multiplicity(catalog_tree("D", {6})) == 2);
    CHECK(multiplicity(catalog_tree("H_n", {8})) == 3);
    CHECK(multiplicity(catalog_tree("E82", {})) == 3);
    CHECK(multiplicity(catalog_tree("quasi", {3, 4, 5})) == 8);
    CHECK(multiplicity(catalog_tree("quasi", {3, 5, 5})) == 9);
}

TEST_CASE("composite quasi tree reproduces the figure cycle") {
    WeightedTree t = catalog_tree("quasi", {3, 4, 5});
    Divisor z = laufer_artin_cycle(t);
    CHECK(z.coeffs ==
          std::vector<long long>{1, 2, 3, 3, 2, 1, 2, 3, 2, 1, 2, 1, 2, 3, 4, 3, 2, 2});
}
