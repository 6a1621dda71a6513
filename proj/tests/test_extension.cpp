#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "qlab/cocycle.hpp"
#include "qlab/congruence.hpp"
#include "qlab/constructions.hpp"
#include "qlab/errors.hpp"
#include "qlab/extension.hpp"
#include "qlab/io.hpp"
#include "qlab/isomorphism.hpp"

using namespace qlab;

TEST_CASE("abelian extension of x6 by Z4") {
    Quandle x6 = fixtures::x6();
    AbelianGroup z4({4});
    Cocycle phi = fixtures::phi_x6_z4();
    AbelianExtension E = abelian_extension(x6, z4, phi);
    CHECK(E.total.size() == 24);
    CHECK(is_connected(E.total));
    CHECK(!is_faithful(E.total));
    // projection is a quandle homomorphism onto the base
    for (int a = 0; a < 24; ++a)
        for (int b = 0; b < 24; ++b)
            CHECK(E.projection[E.total.op(a, b)] == x6.op(E.projection[a], E.projection[b]));
}

TEST_CASE("extension rejects mismatched data") {
    Quandle x6 = fixtures::x6();
    CHECK_THROWS_AS(abelian_extension(x6, AbelianGroup({2}), fixtures::phi_x6_z4()),
                    ModulusMismatch);
    Cocycle junk = Cocycle::zero(AbelianGroup({4}), 6);
    junk.at(0, 1) = {1};  // breaks the cocycle condition
    CHECK_THROWS_AS(abelian_extension(x6, AbelianGroup({4}), junk), CocycleViolation);
    CHECK_THROWS_AS(abelian_extension(x6, AbelianGroup({1024}), Cocycle::zero(AbelianGroup({1024}), 6)),
                    SizeLimit);
}

TEST_CASE("coboundary extensions are products") {
    Quandle x6 = fixtures::x6();
    AbelianGroup z4({4});
    Cochain1 gamma(6, AbelianGroup::Elem{0});
    gamma[2] = {3};
    gamma[4] = {1};
    AbelianExtension E = abelian_extension(x6, z4, coboundary(x6, z4, gamma));
    CHECK(!is_connected(E.total));
    CHECK(are_isomorphic(E.total, product_quandle(x6, trivial_quandle(4))).has_value());
}

TEST_CASE("cohomologous cocycles give isomorphic extensions") {
    Quandle x6 = fixtures::x6();
    AbelianGroup z4({4});
    Cocycle phi = fixtures::phi_x6_z4();
    std::mt19937 rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        Cochain1 gamma(6);
        for (auto& g : gamma) g = {static_cast<std::int64_t>(rng() % 4)};
        Cocycle shifted = phi.add(coboundary(x6, z4, gamma));
        CHECK(cohomologous(x6, phi, shifted).has_value());
        Quandle other = abelian_extension(x6, z4, shifted).total;
        CHECK(are_isomorphic(abelian_extension(x6, z4, phi).total, other).has_value());
    }
}

TEST_CASE("kei criterion matches the kei predicate on all Z2 cocycles") {
    for (int n : {3, 5}) {
        Quandle r = dihedral_quandle(n);
        REQUIRE(is_kei(r));
        for (const Cocycle& c : all_cocycles_mod(r, 2)) {
            bool predicted = kei_extension_check(r, c);
            Quandle total = abelian_extension(r, AbelianGroup({2}), c).total;
            CHECK(predicted == is_kei(total));
        }
    }
    CHECK_THROWS_AS(kei_extension_check(fixtures::x6(), fixtures::phi_x6_z4()), BaseNotKei);
}

TEST_CASE("paired cocycles build the product-coefficient extension") {
    Quandle q4 = fixtures::q4();
    Cocycle psi = fixtures::phi_q4_z2();
    Cocycle pair = pair_cocycles(psi, psi);
    CHECK(pair.A == AbelianGroup({2, 2}));
    AbelianExtension E = abelian_extension(q4, AbelianGroup({2, 2}), pair);
    CHECK(E.total.size() == 16);

    Quandle via_iterate = iterate_extension(q4, psi, psi).total;
    CHECK(via_iterate.table() == E.total.table());
}

TEST_CASE("lifted cocycles pull back through the projection") {
    Quandle q4 = fixtures::q4();
    Cocycle psi = fixtures::phi_q4_z2();
    AbelianExtension E = abelian_extension(q4, AbelianGroup({2}), psi);
    Cocycle lifted = lift_cocycle(E, psi);
    CHECK(lifted.n == 8);
    CHECK(is_cocycle(E.total, lifted));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            CHECK(lifted.at(a, b) == psi.at(E.projection[a], E.projection[b]));
}

TEST_CASE("tower decomposition of the Z4 extension") {
    Quandle x6 = fixtures::x6();
    AbelianGroup z4({4});
    Cocycle phi = fixtures::phi_x6_z4();
    TowerDecomposition t = tower_decompose(x6, z4, phi, {AbelianGroup::Elem{2}});
    CHECK(t.middle.total.size() == 12);
    CHECK(is_connected(t.middle.total));
    CHECK(t.top.total.size() == 24);
    Quandle direct = abelian_extension(x6, z4, phi).total;
    CHECK(are_isomorphic(t.top.total, direct).has_value());
    // witness maps the two-step labels onto the direct labels
    for (int a = 0; a < 24; ++a)
        for (int b = 0; b < 24; ++b)
            CHECK(t.witness[t.top.total.op(a, b)] == direct.op(t.witness[a], t.witness[b]));
}

TEST_CASE("constant cocycle extension validation") {
    Quandle r3 = dihedral_quandle(3);
    // beta = id everywhere gives the product with a trivial fiber
    std::vector<Perm> beta(9, perm_identity(2));
    Quandle E = constant_extension(r3, beta, 2);
    CHECK(E.size() == 6);
    CHECK(!is_connected(E));

    beta[0 * 3 + 1] = Perm{1, 0};
    CHECK_THROWS_AS(constant_extension(r3, beta, 2), ConstantCocycleViolation);
    beta[0 * 3 + 1] = perm_identity(2);
    beta[1 * 3 + 1] = Perm{1, 0};
    CHECK_THROWS_AS(constant_extension(r3, beta, 2), ConstantCocycleViolation);
}

TEST_CASE("detection round trips the constructed extensions") {
    Quandle e8 = fixtures::e8();
    DetectionResult d8 = detect_abelian_extension(e8);
    REQUIRE(d8.abelian.has_value());
    CHECK(d8.abelian->extension.base.size() == 4);
    CHECK(d8.abelian->extension.coefficients.order() == 2);
    CHECK(are_isomorphic(d8.abelian->extension.base, fixtures::q4()).has_value());

    Quandle e24 = fixtures::e24();
    DetectionResult d24 = detect_abelian_extension(e24);
    REQUIRE(d24.abelian.has_value());
    CHECK(d24.abelian->extension.base.size() == 6);
    CHECK(d24.abelian->extension.coefficients.order() == 4);
    // rebuilding from the detected data reproduces the input up to relabeling
    const AbelianExtension& R = d24.abelian->extension;
    Quandle rebuilt = abelian_extension(R.base, R.coefficients, R.cocycle).total;
    CHECK(are_isomorphic(rebuilt, e24).has_value());
}

TEST_CASE("detection refuses the degenerate inputs") {
    CHECK_THROWS_AS(detect_abelian_extension(fixtures::x6()), IsFaithful);
    CHECK_THROWS_AS(detect_abelian_extension(product_quandle(fixtures::x6(), trivial_quandle(2))),
                    NotConnected);
}

TEST_CASE("detection reports constant structure for the order-30 fixture") {
    Quandle c30 = read_quandle(fixtures::data_path("quandles/c30.qnd"));
    CHECK(is_connected(c30));
    CHECK(!is_faithful(c30));
    DetectionResult d = detect_abelian_extension(c30);
    CHECK(!d.abelian.has_value());
    CHECK(d.constant.base.size() == 10);
    CHECK(d.constant.fiber == 3);
    CHECK(h_beta(d.constant).order() == 6);
    // the detected constant cocycle rebuilds the input exactly
    Quandle rebuilt = constant_extension(d.constant.base, d.constant.beta, d.constant.fiber);
    CHECK(are_isomorphic(rebuilt, c30).has_value());
}
