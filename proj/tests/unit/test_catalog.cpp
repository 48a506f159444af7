#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "catalog/catalog.hpp"
#include "support/generators.hpp"

using namespace nilcert;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no exception");
    return ErrorKind::Io;
}

bool has(const std::vector<std::string>& v, const std::string& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

TEST_CASE("get returns the catalog tables") {
    const auto& a09 = catalog::get("A_09").table;
    CHECK(a09.at(1, 2, 4) == GaussianRational(-1));
    CHECK(a09.at(2, 1, 4) == GaussianRational(-1));
    CHECK(catalog::get("C5").table.is_zero());
    const auto& a07 = catalog::get("A_07").table;
    CHECK(a07.at(0, 1, 3) == GaussianRational(1));
    CHECK(a07.at(0, 1, 4) == GaussianRational(1));
    const auto& a02 = catalog::get("A_02").table;
    CHECK(a02.at(1, 1, 4) == GaussianRational(1));
    CHECK(a02.at(2, 2, 4) == GaussianRational(1));
}

TEST_CASE("names are normalised") {
    CHECK(catalog::canonical_name("A7") == "A_07");
    CHECK(catalog::canonical_name("a_7") == "A_07");
    CHECK(catalog::canonical_name("A_24") == "A_24");
    CHECK(catalog::canonical_name("c5") == "C5");
    CHECK(kind_of([] { catalog::get("A_25"); }) == ErrorKind::UnknownName);
    CHECK(kind_of([] { catalog::get("B_01"); }) == ErrorKind::UnknownName);
    CHECK_FALSE(catalog::contains("A_0"));
    CHECK(catalog::names().size() == 25);
}

TEST_CASE("every entry lies in the variety") {
    for (const auto& e : catalog::entries()) {
        auto ids = check_identities(e.table);
        CHECK_MESSAGE(ids.commutative, e.name);
        CHECK_MESSAGE(ids.associative, e.name);
        CHECK_MESSAGE(nilpotency_index(e.table).has_value(), e.name);
    }
}

TEST_CASE("fingerprint examples") {
    const auto& a21 = catalog::entry_fingerprint("A_21");
    CHECK(a21.dim_ann == 1);
    CHECK(a21.dim_der == 11);
    InvariantFingerprint c5{25, {0, 0, 0, 0}, 5, 2};
    CHECK(catalog::entry_fingerprint("C5") == c5);
    const auto& a10 = catalog::entry_fingerprint("A_10");
    const auto& a14 = catalog::entry_fingerprint("A_14");
    CHECK(a10.dim_der == 9);
    CHECK(a14.dim_der == 9);
    CHECK(a10.dims_of_powers != a14.dims_of_powers);
}

TEST_CASE("the only fingerprint collision is A_11 / A_15") {
    // Both have dim Der 9, dim A^2 = 2, A^3 = 0 and a 2-dimensional annihilator.
    auto groups = catalog::fingerprint_collisions();
    CHECK(groups == std::vector<std::vector<std::string>>{{"A_11", "A_15"}});
    CHECK(catalog::identify(catalog::get("A_11").table) == std::vector<std::string>{"A_11", "A_15"});
}

TEST_CASE("identify") {
    CHECK(catalog::identify(catalog::get("A_13").table) == std::vector<std::string>{"A_13"});
    CHECK(catalog::identify(ConstTable(5)) == std::vector<std::string>{"C5"});
    Rng rng(16);
    for (const auto& e : catalog::entries()) {
        CHECK(has(catalog::identify(e.table), e.name));
        for (int trial = 0; trial < 20; ++trial) {
            auto g = change_basis(e.table, random_invertible(5, rng));
            CHECK_MESSAGE(has(catalog::identify(g), e.name), e.name);
        }
    }
}

TEST_CASE("identify rejects algebras outside the variety") {
    ConstTable skew(5);
    skew.set(0, 1, 2, GaussianRational(1));
    CHECK(kind_of([&] { catalog::identify(skew); }) == ErrorKind::NotInVariety);
    ConstTable unit(5);
    for (std::size_t i = 0; i < 5; ++i) unit.set(i, i, i, GaussianRational(1));
    CHECK(kind_of([&] { catalog::identify(unit); }) == ErrorKind::NotInVariety);
    CHECK(kind_of([] { catalog::identify(ConstTable(4)); }) == ErrorKind::NotInVariety);
    ConstTable nonassoc(5);
    nonassoc.set(0, 0, 1, GaussianRational(1));
    nonassoc.set(1, 1, 2, GaussianRational(1));
    CHECK(kind_of([&] { catalog::identify(nonassoc); }) == ErrorKind::NotInVariety);
}
