#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "io/expression.hpp"
#include "io/files.hpp"
#include "suite/suite.hpp"

using namespace nilcert;

namespace {

const std::filesystem::path kData = NILCERT_DATA_DIR;
const RationalFunction T = RationalFunction::t();

TowerElement q(long num, long den = 1) { return TowerElement(RationalFunction(GaussianRational(Rational(mpz_class(num), mpz_class(den))))); }

std::size_t syntax_column(const std::string& text) {
    try {
        (void)parse_linear_combination(text, 5);
    } catch (const SyntaxError& e) {
        return e.column();
    }
    FAIL("expected a syntax error for " << text);
    return 0;
}

}  // namespace

TEST_CASE("linear combinations from the witness tables") {
    auto v = parse_linear_combination("t e_1 + (1/3) e_3", 5);
    REQUIRE(v.size() == 5);
    CHECK(v[0] == TowerElement(T));
    CHECK(v[1].is_zero());
    CHECK(v[2] == q(1, 3));
    CHECK(v[3].is_zero());
    CHECK(v[4].is_zero());

    auto e1 = parse_linear_combination("e_1", 5);
    CHECK(e1[0] == q(1));
    for (std::size_t k = 1; k < 5; ++k) CHECK(e1[k].is_zero());

    auto r = parse_linear_combination("sqrt((-1 - t^3)/t) e_2 + t e_3", 5);
    CHECK(r[1].has_radical());
    CHECK(r[1] * r[1] == TowerElement((RationalFunction(-1) - T * T * T) / T));
    CHECK(r[2] == TowerElement(T));
}

TEST_CASE("scalars and precedence") {
    CHECK(parse_scalar("(1-5t+5t^2)/(2t(2-3t)^2)") ==
          TowerElement((RationalFunction(1) - RationalFunction(5) * T + RationalFunction(5) * T * T) /
                       (RationalFunction(2) * T * (RationalFunction(2) - RationalFunction(3) * T) *
                        (RationalFunction(2) - RationalFunction(3) * T))));
    CHECK(parse_scalar("-t^2") == TowerElement(-(T * T)));
    CHECK(parse_scalar("2t^-1") == TowerElement(RationalFunction(2) / T));
    CHECK(parse_scalar("1 - 2 - 3") == q(-4));
    CHECK(parse_scalar("12/4/3") == q(1));
    CHECK(parse_scalar("i^2") == q(-1));
    CHECK(parse_scalar("2 t i") == TowerElement(RationalFunction(GaussianRational(Rational(0), Rational(2))) * T));
    auto v = parse_linear_combination("-1/t e_5", 5);
    CHECK(v[4] == TowerElement(-T.inverse()));
    CHECK(parse_linear_combination("2t e_3 - e_3 + 0", 5)[2] == TowerElement(RationalFunction(2) * T - RationalFunction(1)));
    CHECK(parse_linear_combination("0", 3) == LinearCombination(3));
}

TEST_CASE("syntax errors carry the column") {
    CHECK(syntax_column("e_1 + ") == 6);
    CHECK(syntax_column("e_6") == 0);
    CHECK(syntax_column("t e_1 $") == 6);
    CHECK(syntax_column("(t e_1") == 6);
    CHECK_THROWS_AS((void)parse_linear_combination("e_1 e_2", 5), SyntaxError);
    CHECK_THROWS_AS((void)parse_linear_combination("1 / e_2", 5), SyntaxError);
    CHECK_THROWS_AS((void)parse_linear_combination("1 + e_2", 5), SyntaxError);
    CHECK_THROWS_AS((void)parse_linear_combination("e_2^2", 5), SyntaxError);
    CHECK_THROWS_AS((void)parse_scalar("e_1"), SyntaxError);
}

TEST_CASE("a second radical is rejected") {
    for (const char* text : {"sqrt(t) e_1 + sqrt(t + 1) e_2", "sqrt(sqrt(t)) e_1"}) {
        try {
            (void)parse_linear_combination(text, 5);
            FAIL("expected MULTIPLE_RADICALS");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::MultipleRadicals);
        }
    }
    CHECK_NOTHROW((void)parse_linear_combination("sqrt(t) e_1 + 2 sqrt(t) e_2", 5));
}

TEST_CASE("printing then parsing is the identity") {
    for (const char* text : {"t e_1 + (1/3) e_3", "sqrt((-1 - t^3)/t) e_2 + t e_3", "(1-5t+5t^2)/(2t(2-3t)^2) e_4 - i e_5", "0"}) {
        auto v = parse_linear_combination(text, 5);
        const auto printed = print_linear_combination(v);
        CHECK(parse_linear_combination(printed, 5) == v);
        CHECK(print_linear_combination(parse_linear_combination(printed, 5)) == printed);
    }
}

TEST_CASE("witness files") {
    auto w = parse_witness("source A_23\ntarget A_24\nE_1 = t e_1 + e_2\nE_2 = 2t e_3\nE_3 = 2t e_2\nE_4 = e_4\nE_5 = e_5\n");
    CHECK(w.source == "A_23");
    CHECK(w.target == "A_24");
    CHECK(w.basis.entries(1, 2) == TowerElement(RationalFunction(2) * T));
    CHECK_THROWS_AS((void)parse_witness("source A_23\ntarget A_24\nE_1 = e_1\n"), Error);
    CHECK_THROWS_AS((void)parse_witness("source A_99\ntarget A_24\n"), Error);
    try {
        (void)parse_witness("source A_23\ntarget A_24\nE_1 = t e_1 +\n");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("algebra files") {
    auto a = parse_algebra("name X\ndim 3\nfield Q\ne_1 * e_1 = e_2\ne_1 * e_2 = 2 e_3\n");
    CHECK(a.table.dim() == 3);
    CHECK(a.table.at(1, 0, 2) == GaussianRational(2));
    CHECK(a.table.at(1, 1, 2).is_zero());
    CHECK_THROWS_AS((void)parse_algebra("name X\ndim 3\nfield Q\ne_1 * e_1 = i e_2\n"), Error);
    CHECK_THROWS_AS((void)parse_algebra("name X\ndim 3\ne_1 * e_1 = t e_2\n"), Error);
    CHECK_THROWS_AS((void)parse_algebra("name X\ndim 3\ne_1 * e_1 = e_2\ne_1 * e_1 = e_3\n"), Error);
    CHECK_THROWS_AS((void)parse_algebra("name X\ndim 3\ne_4 * e_1 = e_2\n"), Error);
    auto b = parse_algebra("name Y\ndim 2\nsymmetric false\ne_1 * e_2 = e_2\n");
    CHECK(b.table.at(1, 0, 1).is_zero());
}

TEST_CASE("shipped data files round-trip") {
    std::size_t count = 0;
    for (const auto& p : list_files(kData / "witnesses", ".wit")) {
        auto w = read_witness(p);
        auto again = parse_witness(print_witness(w));
        CHECK_MESSAGE(again.basis.entries == w.basis.entries, p);
        CHECK(print_witness(again) == print_witness(w));
        ++count;
    }
    CHECK(count == 44);
    for (const auto& p : list_files(kData / "certificates", ".cert")) {
        auto c = read_certificate(p);
        auto again = parse_certificate(print_certificate(c), c.id);
        CHECK(print_certificate(again) == print_certificate(c));
        CHECK(again.spec.to_string() == c.spec.to_string());
        CHECK(again.witness == c.witness);
    }
    for (const auto& p : list_files(kData / "algebras", ".alg")) {
        auto a = read_algebra(p);
        CHECK(a.table == catalog::get(a.name).table);
        CHECK(print_algebra(parse_algebra(print_algebra(a))) == print_algebra(a));
        CHECK(read_text_file(p) == print_algebra(a));
    }
    CHECK_THROWS_AS((void)read_witness(kData / "no-such-file.wit"), Error);
}
