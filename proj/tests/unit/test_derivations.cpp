#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalog/catalog.hpp"
#include "derivations/derivations.hpp"
#include "support/generators.hpp"

using namespace nilcert;
using Mat = Matrix<GaussianRational>;

namespace {

const ConstTable& table(const char* name) { return catalog::get(name).table; }

std::vector<GaussianRational> flatten(const Mat& m) {
    std::vector<GaussianRational> v;
    for (std::size_t a = 0; a < m.rows(); ++a)
        for (std::size_t b = 0; b < m.cols(); ++b) v.push_back(m(a, b));
    return v;
}

}  // namespace

TEST_CASE("derivation_space examples") {
    CHECK(derivation_space(table("A_01")).dimension == 5);
    CHECK(derivation_space(ConstTable(5)).dimension == 25);
    CHECK(derivation_space(table("A_12")).dimension == 11);
}

TEST_CASE("orbit_dimension examples") {
    CHECK(orbit_dimension(table("A_01")) == 20);
    CHECK(orbit_dimension(ConstTable(5)) == 0);
    CHECK(orbit_dimension(table("A_24")) == 8);
}

TEST_CASE("Der column of the catalog") {
    const std::vector<std::size_t> column = {5, 6, 6, 7, 7, 7, 7, 8, 8, 9, 9, 11, 8, 9, 9, 10, 10, 11, 11, 12, 11, 12, 14, 17, 25};
    REQUIRE(catalog::entries().size() == column.size());
    for (std::size_t a = 0; a < column.size(); ++a) {
        const auto& e = catalog::entries()[a];
        CHECK_MESSAGE(derivation_space(e.table).dimension == column[a], e.name);
        CHECK(e.expected_der_dim == column[a]);
    }
}

TEST_CASE("basis derivations satisfy Leibniz and are independent") {
    for (const auto& e : catalog::entries()) {
        auto der = derivation_space(e.table);
        Mat flat(der.basis.size(), 25);
        for (std::size_t r = 0; r < der.basis.size(); ++r) {
            CHECK_MESSAGE(is_derivation(e.table, der.basis[r]), e.name);
            auto v = flatten(der.basis[r]);
            for (std::size_t c = 0; c < 25; ++c) flat(r, c) = v[c];
        }
        CHECK(rank(flat) == der.dimension);
    }
    Mat bad = Mat::identity(5);
    CHECK_FALSE(is_derivation(table("A_24"), bad));
}

TEST_CASE("commutators of derivations stay in the span") {
    for (const auto& e : catalog::entries()) {
        auto der = derivation_space(e.table);
        const std::size_t d = der.dimension;
        Mat span(d, 25);
        for (std::size_t r = 0; r < d; ++r) {
            auto v = flatten(der.basis[r]);
            for (std::size_t c = 0; c < 25; ++c) span(r, c) = v[c];
        }
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = a + 1; b < d; ++b) {
                Mat bracket = der.basis[a] * der.basis[b] - der.basis[b] * der.basis[a];
                CHECK(is_derivation(e.table, bracket));
                Mat extended(d + 1, 25);
                for (std::size_t r = 0; r < d; ++r)
                    for (std::size_t c = 0; c < 25; ++c) extended(r, c) = span(r, c);
                auto v = flatten(bracket);
                for (std::size_t c = 0; c < 25; ++c) extended(d, c) = v[c];
                CHECK_MESSAGE(rank(extended) == d, e.name);
            }
    }
}

TEST_CASE("dimension is invariant under change of basis") {
    Rng rng(77);
    for (const auto& e : catalog::entries()) {
        for (int trial = 0; trial < 50; ++trial) {
            auto g = change_basis(e.table, random_invertible(5, rng));
            CHECK_MESSAGE(derivation_space(g).dimension == e.expected_der_dim, e.name);
        }
    }
}
