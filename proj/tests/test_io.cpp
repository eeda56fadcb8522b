#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rtq/catalog.hpp"
#include "rtq/cycle.hpp"
#include "rtq/io.hpp"

using namespace rtq;

TEST_CASE("tree json round-trip") {
    for (const char* fam : {"A", "H_n", "E82", "quasi"}) {
        std::vector<int> params = std::string(fam) == "A"       ? std::vector<int>{4}
                                  : std::string(fam) == "H_n"   ? std::vector<int>{6}
                                  : std::string(fam) == "quasi" ? std::vector<int>{3, 4, 5}
                                                                : std::vector<int>{};
        WeightedTree t = catalog_tree(fam, params);
        WeightedTree back = tree_from_json(tree_to_json(t));
        CHECK(back == t);
    }
}

TEST_CASE("tree json schema") {
    WeightedTree t = catalog_tree("A_nmk", {1, 1, 1});
    json j = tree_to_json(t);
    CHECK(j.at("vertices").size() == 4);
    CHECK(j.at("vertices").at(0).at("weight") == 3);
    CHECK(j.at("edges").size() == 3);
    json parsed = json::parse(j.dump());
    CHECK(tree_from_json(parsed) == t);
}

TEST_CASE("quiver json round-trip keeps orientations") {
    WeightedTree t = catalog_tree("B_mn", {1, 2});
    Quiver q = Quiver::from_mask(t, 0b101);
    Quiver back = quiver_from_json(quiver_to_json(q));
    CHECK(back == q);
}

TEST_CASE("divisor json") {
    Divisor d(std::vector<long long>{1, -2, 0, 3});
    CHECK(divisor_from_json(divisor_to_json(d)) == d);
}

TEST_CASE("bad input is rejected") {
    json j = {{"vertices", {{{"id", 0}, {"weight", 2}}}}, {"edges", {{0, 1}}}};
    CHECK_THROWS(tree_from_json(j));
    json q = quiver_to_json(Quiver::from_mask(catalog_tree("A", {2}), 0));
    q["arrows"][0] = {0, 0};
    CHECK_THROWS(quiver_from_json(q));
}

TEST_CASE("dot export shapes heavy vertices as boxes") {
    WeightedTree t = catalog_tree("H_n", {5});
    Divisor z = laufer_artin_cycle(t);
    std::string dot = tree_to_dot(t, &z);
    CHECK(dot.find("shape=box") != std::string::npos);
    CHECK(dot.find("shape=circle") != std::string::npos);
    CHECK(dot.find("n1 -- n2") != std::string::npos);
    CHECK(dot.find("graph {") == 0);

    Quiver q = Quiver::from_mask(t, 0);
    std::string qd = quiver_to_dot(q);
    CHECK(qd.find("digraph {") == 0);
    CHECK(qd.find("->") != std::string::npos);
}

TEST_CASE("report and certificate serialization") {
    WeightedTree t = catalog_tree("H_n", {5});
    json rep = report_to_json(classify_rational(t));
    CHECK(rep.at("rational") == true);
    CHECK(rep.at("multiplicity") == 3);

    json rs = rootset_to_json(enumerate_roots_box(t), false);
    CHECK(rs.at("count") == 40);

    Quiver q = Quiver::from_mask(t, 0);
    LfdCertificate cert = certify_lfd(q, DimensionVector::ones(5));
    json cj = certificate_to_json(cert);
    CHECK(cj.at("verdict") == true);
    CHECK(cj.at("mode") == "direct");
}
