#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalog/catalog.hpp"
#include "support/generators.hpp"

using namespace nilcert;
using Vec = std::vector<GaussianRational>;
using Space = Subspace<GaussianRational>;

namespace {

Vec unit(std::size_t k, std::size_t n = 5) {
    Vec v(n, GaussianRational(0));
    v[k - 1] = GaussianRational(1);
    return v;
}

Vec add(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

const ConstTable& table(const char* name) { return catalog::get(name).table; }

}  // namespace

TEST_CASE("multiply") {
    CHECK(multiply(table("A_24"), unit(1), unit(1)) == unit(2));
    ConstTable zero(5);
    CHECK(multiply(zero, add(unit(1), unit(3)), unit(2)) == Vec(5, GaussianRational(0)));
    Vec x = add(unit(1), unit(2));
    Vec two_e3 = unit(3);
    two_e3[2] = GaussianRational(2);
    CHECK(multiply(table("A_23"), x, x) == two_e3);
    CHECK_THROWS_AS(multiply(zero, unit(1, 4), unit(1)), Error);
}

TEST_CASE("check_identities") {
    auto a01 = check_identities(table("A_01"));
    CHECK(a01.commutative);
    CHECK(a01.associative);
    ConstTable skew(5);
    skew.set(0, 1, 2, GaussianRational(1));
    CHECK_FALSE(check_identities(skew).commutative);
    for (const auto& e : catalog::entries()) {
        auto ids = check_identities(e.table);
        CHECK_MESSAGE(ids.commutative, e.name);
        CHECK_MESSAGE(ids.associative, e.name);
    }
    // e1 e1 = e2, e2 e2 = e3: (e1 e1) e2 = e3 but e1 (e1 e2) = 0
    ConstTable nonassoc(3);
    nonassoc.set(0, 0, 1, GaussianRational(1));
    nonassoc.set(1, 1, 2, GaussianRational(1));
    CHECK_FALSE(check_identities(nonassoc).associative);
}

TEST_CASE("subspace_product") {
    const auto& a03 = table("A_03");
    Space a3 = Space::flag(5, 3);
    CHECK(subspace_product(a03, a3, a3).is_zero());
    CHECK(subspace_product(a03, Space(5), Space::whole(5)).is_zero());
    Space sq = subspace_product(table("A_12"), Space::whole(5), Space::whole(5));
    CHECK(sq == Space::flag(5, 4));
    CHECK(sq.dim() == 2);
}

TEST_CASE("power_ideal") {
    CHECK(power_ideal(table("A_03"), 4).is_zero());
    Space a4 = power_ideal(table("A_05"), 4);
    CHECK(a4 == Space::span(5, {unit(4)}));
    CHECK(power_ideal(ConstTable(5), 2).is_zero());
    CHECK(power_ideal(table("A_01"), 1).dim() == 5);
    CHECK_THROWS_AS(power_ideal(table("A_01"), 0), Error);
}

TEST_CASE("annihilator") {
    Space ann21 = annihilator(table("A_21"));
    CHECK(ann21 == Space::span(5, {unit(5)}));
    CHECK(annihilator(ConstTable(5)).dim() == 5);
    CHECK(annihilator(table("A_05")) == Space::flag(5, 4));
}

TEST_CASE("nilpotency_index") {
    CHECK(nilpotency_index(table("A_24")) == 3u);
    CHECK(nilpotency_index(ConstTable(5)) == 2u);
    CHECK(nilpotency_index(table("A_01")) == 6u);
    ConstTable idempotent(2);
    idempotent.set(0, 0, 0, GaussianRational(1));
    CHECK_FALSE(nilpotency_index(idempotent).has_value());
}

TEST_CASE("change_basis") {
    const auto& a24 = table("A_24");
    CHECK(change_basis(a24, Matrix<GaussianRational>::identity(5)) == a24);

    Matrix<GaussianRational> scale = Matrix<GaussianRational>::identity(5);
    scale(0, 0) = GaussianRational(2);
    auto scaled = change_basis(a24, scale);
    CHECK(scaled.at(0, 0, 1) == GaussianRational(4));

    Rng rng(11);
    for (const char* name : {"A_01", "A_09", "A_13"}) {
        auto m = random_invertible(5, rng);
        auto back = change_basis(change_basis(table(name), m), *inverse(m));
        CHECK(back == table(name));
    }

    Matrix<GaussianRational> singular(5, 5);
    try {
        (void)change_basis(a24, singular);
        FAIL("expected SINGULAR");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Singular);
    }
}

TEST_CASE("invariants survive random changes of basis") {
    Rng rng(314);
    for (const auto& e : catalog::entries()) {
        const auto ann = annihilator(e.table).dim();
        const auto nil = nilpotency_index(e.table);
        std::vector<std::size_t> powers;
        for (std::size_t k = 1; k <= 5; ++k) powers.push_back(power_ideal(e.table, k).dim());
        for (int trial = 0; trial < 100; ++trial) {
            auto g = change_basis(e.table, random_invertible(5, rng));
            auto ids = check_identities(g);
            CHECK(ids.commutative);
            CHECK(ids.associative);
            CHECK(annihilator(g).dim() == ann);
            CHECK(nilpotency_index(g) == nil);
            auto pw = subspace_powers(g, Space::whole(5), 5);
            for (std::size_t k = 1; k <= 5; ++k) CHECK(pw[k].dim() == powers[k - 1]);
        }
    }
}

TEST_CASE("structural properties on catalog and random tables") {
    Rng rng(8);
    for (const auto& e : catalog::entries()) {
        auto pw = subspace_powers(e.table, Space::whole(5), 6);
        for (std::size_t k = 1; k < 6; ++k) CHECK(pw[k + 1].is_subspace_of(pw[k]));
        Space ann = annihilator(e.table);
        CHECK(subspace_product(e.table, ann, Space::whole(5)).is_zero());
        CHECK(subspace_product(e.table, Space::whole(5), ann).is_zero());
    }
    for (int trial = 0; trial < 50; ++trial) {
        auto t = testing::sparse_random_table(rng, 4, 10);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                for (std::size_t k = 0; k < 4; ++k) t.set(j, i, k, t.at(i, j, k));
        REQUIRE(is_commutative(t));
        Space u = Space::span(4, {Vec{1, 2, 0, GaussianRational::i()}, Vec{0, 1, -1, 0}});
        Space w = Space::flag(4, 3);
        CHECK(subspace_product(t, u, w) == subspace_product(t, w, u));
    }
}
