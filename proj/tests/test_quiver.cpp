#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "rtq/catalog.hpp"
#include "rtq/cycle.hpp"
#include "rtq/quiver.hpp"

using namespace rtq;

namespace {

DimensionVector dv(std::vector<int> d) { return DimensionVector(std::move(d)); }

long long live_slot_dim(const Quiver& q, const DimensionVector& a) {
    long long total = 0;
    for (auto [t, h] : q.arrows()) total += static_cast<long long>(a[t]) * a[h];
    return total;
}

std::multiset<int> dim_multiset(const DimensionVector& a) {
    std::multiset<int> out;
    for (int d : a.dims)
        if (d > 0) out.insert(d);
    return out;
}

std::string core_signature(const Quiver& q, const DimensionVector& a) {
    std::vector<std::string> types;
    for (const auto& c : core_components(q, a)) types.push_back(c.dynkin_type);
    std::sort(types.begin(), types.end());
    std::string sig;
    for (const auto& t : types) sig += t + "/";
    for (int d : dim_multiset(a)) sig += std::to_string(d) + ",";
    return sig;
}

}  // namespace

TEST_CASE("tits form values") {
    WeightedTree one({2}, {});
    CHECK(tits_form(Quiver::from_mask(one, 0), dv({1})) == 1);
    WeightedTree a2 = catalog_tree("A", {2});
    CHECK(tits_form(Quiver::from_mask(a2, 0), dv({1, 1})) == 1);
    WeightedTree d4 = catalog_tree("D", {4});
    CHECK(tits_form(Quiver::from_mask(d4, 0), dv({1, 2, 1, 1})) == 1);
    CHECK(tits_form(Quiver::from_mask(d4, 0), dv({1, 1, 1, 1})) == 1);
    CHECK(tits_form(Quiver::from_mask(d4, 0), dv({2, 2, 1, 1})) == 2);
}

TEST_CASE("tits form is orientation independent and matches the pairing") {
    WeightedTree t = catalog_tree("H_n", {6});
    DimensionVector a = dv({1, 1, 2, 2, 1, 1});
    long long reference = tits_form(Quiver::from_mask(t, 0), a);
    for (const Quiver& q : all_orientations(t)) CHECK(tits_form(q, a) == reference);

    // 2*tits + (Y.Y) + sum over heavy vertices of (w-2) a^2 == 0.
    Divisor y(std::vector<long long>(a.dims.begin(), a.dims.end()));
    long long heavy = 0;
    for (int v : t.heavy_vertices()) heavy += (t.weight(v) - 2) * y[v] * y[v];
    CHECK(2 * reference + intersection_pairing(t, y, y) + heavy == 0);
}

TEST_CASE("reflection at a chain end") {
    WeightedTree a2 = catalog_tree("A", {2});
    Quiver q = quiver_from_arrow_list(a2, {{0, 1}});
    auto [q2, a2v] = reflect(q, dv({1, 1}), 0);
    CHECK(a2v == dv({0, 1}));
    CHECK(q2.arrows() == std::vector<std::pair<int, int>>{{1, 0}});
    auto [q3, a3v] = reflect(q2, a2v, 0);
    CHECK(a3v == dv({1, 1}));
    CHECK(q3 == q);
}

TEST_CASE("reflection at the fork center") {
    WeightedTree d4 = catalog_tree("D", {4});
    Quiver sink_center = quiver_from_arrow_list(d4, {{0, 1}, {2, 1}, {3, 1}});
    auto [q2, a2] = reflect(sink_center, dv({1, 2, 1, 1}), 1);
    CHECK(a2 == dv({1, 1, 1, 1}));
    for (auto [t, h] : q2.arrows()) CHECK(t == 1);
}

TEST_CASE("reflection preconditions") {
    WeightedTree a3 = catalog_tree("A", {3});
    Quiver path = quiver_from_arrow_list(a3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(reflect(path, dv({1, 1, 1}), 1), std::domain_error);
    Quiver inward = quiver_from_arrow_list(a3, {{0, 1}, {2, 1}});
    CHECK_THROWS_AS(reflect(inward, dv({1, 3, 1}), 1), std::domain_error);
}

TEST_CASE("sincerity") {
    CHECK(is_sincere(dv({1, 1, 1})));
    CHECK_FALSE(is_sincere(dv({1, 0, 1})));
    for (const char* fam : {"H_n", "E82", "B_mn"}) {
        std::vector<int> params = std::string(fam) == "H_n"    ? std::vector<int>{7}
                                  : std::string(fam) == "B_mn" ? std::vector<int>{2, 3}
                                                               : std::vector<int>{};
        WeightedTree t = catalog_tree(fam, params);
        CHECK(is_sincere(DimensionVector::from_divisor(laufer_artin_cycle(t))));
    }
}

TEST_CASE("stepwise arm collapse") {
    // Chain arm of ones feeding a fork: reflecting along the arm zeroes it and
    // leaves the fork root untouched.
    WeightedTree b23 = catalog_tree("B_mn", {2, 3});
    Quiver q = quiver_from_arrow_list(b23, {{2, 1}, {1, 0}, {0, 4}, {3, 4}, {5, 4}});
    DimensionVector a = dv({1, 1, 1, 1, 2, 1});
    REQUIRE(tits_form(q, a) == 1);
    auto [q1, a1] = reflect(q, a, 2);
    CHECK(a1 == dv({1, 1, 0, 1, 2, 1}));
    auto [q2, a2] = reflect(q1, a1, 1);
    // Arm zeroed; the fork keeps its root untouched.
    CHECK(a2 == dv({1, 0, 0, 1, 2, 1}));
    CHECK(tits_form(q2, a2) == 1);
}

TEST_CASE("reduction fully trivializes all-ones chains") {
    for (int n : {5, 7}) {
        WeightedTree t = catalog_tree("H_n", {n});
        for (std::uint64_t mask : {std::uint64_t(0), std::uint64_t(5)}) {
            Quiver q = Quiver::from_mask(t, mask);
            ReductionTrail trail = reduce_to_core(q, DimensionVector::ones(n));
            CHECK(trail.complete);
            CHECK(trail.split_off_count == n - 1);
            CHECK(live_slot_dim(trail.final_quiver, trail.final_dims) == 0);
        }
    }
}

TEST_CASE("reduction stops at the fork core") {
    WeightedTree b23 = catalog_tree("B_mn", {2, 3});
    Quiver q = Quiver::from_mask(b23, 0);
    DimensionVector a = dv({1, 1, 1, 1, 2, 1});
    ReductionTrail trail = reduce_to_core(q, a);
    CHECK(trail.complete);
    CHECK(trail.final_dims == dv({1, 0, 0, 1, 2, 1}));
    auto comps = core_components(trail.final_quiver, trail.final_dims);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].dynkin_type == "D4");
    CHECK(trail.split_off_count == 2);
}

TEST_CASE("reduction requires a root") {
    WeightedTree a3 = catalog_tree("A", {3});
    CHECK_THROWS_AS(reduce_to_core(Quiver::from_mask(a3, 0), dv({1, 2, 1})), std::domain_error);
}

TEST_CASE("replay reproduces the recorded endpoint") {
    WeightedTree t = catalog_tree("B_mn", {1, 3});
    Quiver q = Quiver::from_mask(t, 2);
    DimensionVector a = DimensionVector::from_divisor(laufer_artin_cycle(t));
    ReductionTrail trail = reduce_to_core(q, a);
    auto [fq, fd] = apply_reduction_steps(q, a, trail.steps);
    CHECK(fq == trail.final_quiver);
    CHECK(fd == trail.final_dims);
}

TEST_CASE("core is orientation independent for the highest roots") {
    for (const char* fam : {"A_nmk", "B_mn", "C_mn", "H_n", "E71", "E81", "E82"}) {
        std::vector<int> params = std::string(fam) == "A_nmk"  ? std::vector<int>{1, 1, 1}
                                  : std::string(fam) == "B_mn" ? std::vector<int>{1, 3}
                                  : std::string(fam) == "C_mn" ? std::vector<int>{3, 1}
                                  : std::string(fam) == "H_n"  ? std::vector<int>{6}
                                                               : std::vector<int>{};
        WeightedTree t = catalog_tree(fam, params);
        DimensionVector a = DimensionVector::from_divisor(laufer_artin_cycle(t));
        std::string reference;
        for (const Quiver& q : all_orientations(t)) {
            ReductionTrail trail = reduce_to_core(q, a);
            CHECK(trail.complete);
            std::string sig = core_signature(trail.final_quiver, trail.final_dims);
            if (reference.empty()) reference = sig;
            CHECK(sig == reference);
        }
    }
}

TEST_CASE("quiver construction guards") {
    WeightedTree a3 = catalog_tree("A", {3});
    CHECK_THROWS_AS(Quiver(a3, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Quiver(a3, {{0, 1}, {0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(quiver_from_arrow_list(a3, {{0, 1}, {0, 1}}), std::invalid_argument);
}
