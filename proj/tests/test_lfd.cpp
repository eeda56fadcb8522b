#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rtq/catalog.hpp"
#include "rtq/cycle.hpp"
#include "rtq/lfd.hpp"

using namespace rtq;

namespace {

DimensionVector dv(std::vector<int> d) { return DimensionVector(std::move(d)); }

SparsePolynomial coord_product(int n) {
    SparsePolynomial p(n, 1);
    for (int i = 0; i < n; ++i) p = p * SparsePolynomial::variable(n, i);
    return p;
}

bool same_up_to_sign(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a == b || a == -b;
}

}  // namespace

TEST_CASE("one-arrow action matrix") {
    WeightedTree a2 = catalog_tree("A", {2});
    Quiver q = quiver_from_arrow_list(a2, {{0, 1}});
    RepSpace rep(q, dv({1, 1}));
    CHECK(rep.total_dim == 1);
    LinearFormMatrix m = infinitesimal_action_matrix(rep);
    SparsePolynomial x0 = SparsePolynomial::variable(1, 0);
    CHECK(same_up_to_sign(m.entries[0][0], x0));
}

TEST_CASE("chain of three gives a coordinate square") {
    WeightedTree a3 = catalog_tree("A", {3});
    Quiver q = quiver_from_arrow_list(a3, {{0, 1}, {1, 2}});
    SparsePolynomial det = discriminant(q, dv({1, 1, 1}));
    CHECK(same_up_to_sign(det, coord_product(2)));
}

TEST_CASE("fork with a two-dimensional center") {
    WeightedTree d4 = catalog_tree("D", {4});
    Quiver q = quiver_from_arrow_list(d4, {{0, 1}, {2, 1}, {3, 1}});
    DimensionVector a = dv({1, 2, 1, 1});
    RepSpace rep(q, a);
    REQUIRE(rep.total_dim == 6);

    LinearFormMatrix m = infinitesimal_action_matrix(rep);
    SparsePolynomial det = poly_det_bareiss(m.entries);
    CHECK(det == poly_det_cofactor(m.entries));
    CHECK(det.homogeneous_degree() == std::optional<int>(6));
    CHECK(poly_is_reduced(det));

    // The three arm vectors land in the plane at the center; the determinant
    // is the product of their pairwise 2x2 minors.
    auto x = [&](int arrow, int r) { return SparsePolynomial::variable(6, 2 * arrow + r); };
    SparsePolynomial expected(6, 1);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            expected = expected * (x(i, 0) * x(j, 1) - x(i, 1) * x(j, 0));
    CHECK(same_up_to_sign(det, expected));
}

TEST_CASE("action matrix rejects non-roots") {
    WeightedTree a2 = catalog_tree("A", {2});
    Quiver q = quiver_from_arrow_list(a2, {{0, 1}});
    CHECK_THROWS_AS(infinitesimal_action_matrix(RepSpace(q, dv({2, 1}))), std::domain_error);
}

TEST_CASE("direct-mode cap") {
    WeightedTree t = catalog_tree("E71", {});
    Quiver q = Quiver::from_mask(t, 0);
    DimensionVector a = DimensionVector::from_divisor(laufer_artin_cycle(t));
    CHECK_THROWS_WITH_AS(discriminant(q, a), doctest::Contains("compositional"),
                         std::domain_error);
}

TEST_CASE("saito check") {
    CHECK(saito_check(coord_product(3), 3));
    SparsePolynomial x = SparsePolynomial::variable(3, 0), y = SparsePolynomial::variable(3, 1);
    CHECK_FALSE(saito_check(x * x * y, 3));
    CHECK_FALSE(saito_check(coord_product(3), 4));
    CHECK_FALSE(saito_check(SparsePolynomial(3), 3));
}

TEST_CASE("normal crossing certificates for branched chains") {
    WeightedTree t = catalog_tree("H_n", {7});
    Quiver q = Quiver::from_mask(t, 0b1010);
    LfdCertificate cert = certify_lfd(q, DimensionVector::ones(7), CertifyMode::direct);
    CHECK(cert.verdict);
    CHECK(same_up_to_sign(*cert.discriminant_poly, coord_product(6)));
    LfdCertificate comp = certify_lfd(q, DimensionVector::ones(7), CertifyMode::compositional);
    CHECK(comp.verdict);
    CHECK(comp.degree == 6);
    CHECK(comp.split_off_count == 6);
    CHECK(comp.core_discriminant->is_constant());
}

TEST_CASE("automatic mode picks a feasible route") {
    WeightedTree t = catalog_tree("B_mn", {2, 3});
    Quiver q = Quiver::from_mask(t, 0);
    DimensionVector a = dv({1, 1, 1, 1, 2, 1});
    LfdCertificate cert = certify_lfd(q, a);  // N = 8 fits the direct cap
    CHECK(cert.mode == CertifyMode::direct);
    CHECK(cert.verdict);

    LfdCertificate comp = certify_lfd(q, a, CertifyMode::compositional);
    CHECK(comp.verdict);
    CHECK(comp.core_types == std::vector<std::string>{"D4"});
    CHECK(comp.degree == 6 + comp.split_off_count);
}

TEST_CASE("generator drop changes the determinant by a scalar only") {
    WeightedTree d4 = catalog_tree("D", {4});
    Quiver q = quiver_from_arrow_list(d4, {{0, 1}, {1, 2}, {3, 1}});
    DimensionVector a = dv({1, 2, 1, 1});
    SparsePolynomial reference = discriminant(q, a);
    bool reference_verdict = saito_check(reference, 6);
    for (int v = 0; v < 4; ++v) {
        for (int i = 0; i < a[v]; ++i) {
            GeneratorChoice choice{v, i};
            SparsePolynomial det = discriminant(q, a, 12, choice);
            CHECK(saito_check(det, 6) == reference_verdict);
            CHECK(same_up_to_sign(det.primitive_part(), reference.primitive_part()));
        }
    }
}

TEST_CASE("certificates survive one castling step") {
    WeightedTree d4 = catalog_tree("D", {4});
    Quiver q = quiver_from_arrow_list(d4, {{0, 1}, {2, 1}, {3, 1}});
    DimensionVector a = dv({1, 2, 1, 1});
    LfdCertificate before = certify_lfd(q, a, CertifyMode::direct);
    auto [q2, a2] = reflect(q, a, 1);
    CHECK(a2 == dv({1, 1, 1, 1}));
    LfdCertificate after = certify_lfd(q2, a2, CertifyMode::direct);
    CHECK(before.verdict == after.verdict);
    CHECK(before.verdict);

    WeightedTree a3 = catalog_tree("A", {3});
    Quiver chain = quiver_from_arrow_list(a3, {{0, 1}, {1, 2}});
    DimensionVector ones = dv({1, 1, 1});
    LfdCertificate c1 = certify_lfd(chain, ones, CertifyMode::direct);
    auto [chain2, ones2] = reflect(chain, ones, 0);
    LfdCertificate c2 = certify_lfd(chain2, ones2, CertifyMode::direct);
    CHECK(c1.verdict == c2.verdict);
}

TEST_CASE("degree equals the representation dimension whenever nonzero") {
    for (const char* fam : {"A_nmk", "B_mn"}) {
        std::vector<int> params =
            std::string(fam) == "A_nmk" ? std::vector<int>{1, 1, 1} : std::vector<int>{1, 2};
        WeightedTree t = catalog_tree(fam, params);
        Quiver q = Quiver::from_mask(t, 0);
        DimensionVector a = DimensionVector::from_divisor(laufer_artin_cycle(t));
        RepSpace rep(q, a);
        SparsePolynomial det = discriminant(q, a);
        REQUIRE(!det.is_zero());
        CHECK(det.homogeneous_degree() == std::optional<int>(rep.total_dim));
    }
}

TEST_CASE("highest-root certificates hold in every orientation at small size") {
    struct Instance {
        const char* family;
        std::vector<int> params;
    };
    const std::vector<Instance> instances = {
        {"A_nmk", {1, 1, 1}}, {"A_nmk", {2, 2, 1}}, {"A_nmk", {2, 2, 2}},
        {"B_mn", {2, 2}},     {"B_mn", {1, 3}},     {"C_mn", {3, 1}},
        {"H_n", {5}},
    };
    for (const auto& inst : instances) {
        WeightedTree t = catalog_tree(inst.family, inst.params);
        DimensionVector a = DimensionVector::from_divisor(laufer_artin_cycle(t));
        REQUIRE(RepSpace(Quiver::from_mask(t, 0), a).total_dim <= 12);
        for (const Quiver& q : all_orientations(t)) {
            LfdCertificate cert = certify_lfd(q, a, CertifyMode::direct);
            CHECK(cert.verdict);
        }
    }
}

TEST_CASE("composite quasi tree certifies compositionally in another orientation") {
    WeightedTree t = catalog_tree("quasi", {3, 4, 5});
    Quiver q = Quiver::from_mask(t, 0);
    DimensionVector a = DimensionVector::from_divisor(laufer_artin_cycle(t));
    LfdCertificate cert = certify_lfd(q, a, CertifyMode::compositional);
    CHECK(cert.verdict);
    CHECK(cert.core_types == std::vector<std::string>{"D4"});
}

TEST_CASE("certification requires a root") {
    WeightedTree a2 = catalog_tree("A", {2});
    Quiver q = Quiver::from_mask(a2, 0);
    CHECK_THROWS_AS(certify_lfd(q, dv({2, 1})), std::domain_error);
}
