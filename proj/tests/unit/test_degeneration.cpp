#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "io/files.hpp"
#include "suite/suite.hpp"

using namespace nilcert;

namespace {

const std::filesystem::path kData = NILCERT_DATA_DIR;
const RationalFunction T = RationalFunction::t();

DegenerationWitness witness(const std::string& source, const std::string& target, const std::vector<std::string>& rows) {
    std::string text = "source " + source + "\ntarget " + target + "\n";
    for (std::size_t k = 0; k < rows.size(); ++k) text += "E_" + std::to_string(k + 1) + " = " + rows[k] + "\n";
    return parse_witness(text);
}

DegenerationWitness identity_witness(const std::string& source, const std::string& target) {
    return witness(source, target, {"e_1", "e_2", "e_3", "e_4", "e_5"});
}

const std::vector<DegenerationWitness>& shipped() {
    static const auto ws = [] {
        std::vector<DegenerationWitness> out;
        for (const auto& p : list_files(kData / "witnesses", ".wit")) out.push_back(read_witness(p));
        return out;
    }();
    return ws;
}

TowerElement lift(const GaussianRational& x) { return TowerElement(RationalFunction(x)); }

}  // namespace

TEST_CASE("generic invertibility") {
    CHECK(generic_invertibility(identity_witness("A_23", "A_23").basis));
    CHECK(generic_invertibility(read_witness(kData / "witnesses/A23_A24.wit").basis));
    CHECK_FALSE(generic_invertibility(witness("A_23", "A_24", {"t e_1", "t e_1", "e_3", "e_4", "e_5"}).basis));
}

TEST_CASE("transformed constants") {
    const auto& a23 = catalog::get("A_23").table;
    auto same = transformed_constants(a23, identity_witness("A_23", "A_23").basis);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            for (std::size_t k = 0; k < 5; ++k) CHECK(same.at(i, j, k) == lift(a23.at(i, j, k)));

    auto c = transformed_constants(a23, read_witness(kData / "witnesses/A23_A24.wit").basis);
    CHECK(c.at(0, 0, 1) == TowerElement(1));
    CHECK(c.at(0, 2, 1) == TowerElement(T));

    auto d = transformed_constants(catalog::get("A_02").table, read_witness(kData / "witnesses/A02_A06.wit").basis);
    CHECK(d.at(3, 3, 4) == TowerElement(1));

    auto singular = witness("A_23", "A_24", {"e_1", "e_1", "e_3", "e_4", "e_5"});
    try {
        (void)transformed_constants(a23, singular.basis);
        FAIL("expected SINGULAR");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Singular);
    }
}

TEST_CASE("limit tables") {
    TowerTable p(5);
    p.set(0, 0, 1, TowerElement(1));
    p.set(0, 2, 1, TowerElement(T));
    auto l = limit_table(p);
    REQUIRE(l.status == VerdictStatus::Verified);
    CHECK(l.table.at(0, 0, 1) == GaussianRational(1));
    CHECK(l.table.at(0, 2, 1).is_zero());

    TowerTable bad(5);
    bad.set(1, 2, 3, TowerElement(T.inverse()));
    auto lb = limit_table(bad);
    CHECK(lb.status == VerdictStatus::LimitDiverges);
    CHECK(lb.offending == Index3{1, 2, 3});

    TowerTable constant(5);
    const auto& a09 = catalog::get("A_09").table;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            for (std::size_t k = 0; k < 5; ++k) constant.set(i, j, k, lift(a09.at(i, j, k)));
    auto lc = limit_table(constant);
    REQUIRE(lc.status == VerdictStatus::Verified);
    CHECK(lc.table == a09);
}

TEST_CASE("verdicts") {
    CHECK(verify(read_witness(kData / "witnesses/A23_A24.wit")).status == VerdictStatus::Verified);
    for (const char* name : {"A_01", "A_13", "A_24", "C5"}) {
        auto v = verify(identity_witness(name, name));
        CHECK(v.status == VerdictStatus::Verified);
        CHECK(v.der_check_ok);
    }
    auto mismatch = verify(identity_witness("A_24", "A_23"));
    CHECK(mismatch.status == VerdictStatus::LimitMismatch);
    CHECK(mismatch.offending.has_value());
    CHECK(verify(witness("A_24", "A_24", {"e_1", "e_1", "e_3", "e_4", "e_5"})).status == VerdictStatus::SingularFamily);
    CHECK(verify(witness("A_24", "C5", {"e_1", "t e_2", "e_3", "e_4", "e_5"})).status == VerdictStatus::LimitDiverges);
    CHECK(verify(witness("A_24", "A_24", {"e_1", "sqrt(1 + t) e_2", "e_3", "e_4", "e_5"})).status ==
          VerdictStatus::BranchAmbiguous);
    // t e_1 sends A_24 to the zero algebra
    auto to_zero = verify(witness("A_24", "C5", {"t e_1", "e_2", "e_3", "e_4", "e_5"}));
    CHECK(to_zero.status == VerdictStatus::Verified);
    CHECK(to_zero.der_source == 17);
    CHECK(to_zero.der_target == 25);
}

TEST_CASE("exceptional parameter values") {
    auto v = verify(read_witness(kData / "witnesses/A01_A03.wit"));
    REQUIRE(v.status == VerdictStatus::Verified);
    CHECK(v.exceptional.rational_roots == std::vector<GaussianRational>{GaussianRational(Rational(mpz_class(2), mpz_class(3)))});
    CHECK(v.exceptional.roots_complete);
    auto w = verify(read_witness(kData / "witnesses/A02_A06.wit"));
    CHECK(std::find(w.exceptional.rational_roots.begin(), w.exceptional.rational_roots.end(), GaussianRational(-1)) !=
          w.exceptional.rational_roots.end());
    CHECK(verify(read_witness(kData / "witnesses/A23_A24.wit")).exceptional.polynomial.is_one());
}

TEST_CASE("every shipped witness verifies") {
    const auto verdicts = verify_many(shipped(), 2);
    REQUIRE(verdicts.size() == 44);
    for (std::size_t k = 0; k < verdicts.size(); ++k) {
        const auto& v = verdicts[k];
        CHECK_MESSAGE(v.status == VerdictStatus::Verified, v.source << " -> " << v.target);
        CHECK(v.source == shipped()[k].source);
        CHECK(v.der_check_ok);
        CHECK(v.der_source < v.der_target);
    }
}

TEST_CASE("closed conditions survive every verified limit") {
    for (const auto& w : shipped()) {
        const auto& src = catalog::get(w.source).table;
        auto limit = limit_table(transformed_constants(src, w.basis));
        REQUIRE(limit.status == VerdictStatus::Verified);
        auto ids = check_identities(limit.table);
        CHECK(ids.commutative);
        CHECK(ids.associative);
        CHECK(nilpotency_index(limit.table).has_value());

        const auto& fs = catalog::entry_fingerprint(w.source);
        const auto& ft = catalog::entry_fingerprint(w.target);
        CHECK(fs.dim_der < ft.dim_der);
        for (std::size_t k = 0; k < fs.dims_of_powers.size(); ++k)
            CHECK_MESSAGE(ft.dims_of_powers[k] <= fs.dims_of_powers[k], w.source << " -> " << w.target);
        CHECK(ft.dim_ann >= fs.dim_ann);
    }
}

TEST_CASE("source-side change of basis keeps every witness valid") {
    Rng rng(404);
    for (const auto& w : shipped()) {
        const auto g = random_invertible(5, rng);
        const auto g_inv = *inverse(g);
        Matrix<TowerElement> lifted(5, 5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) lifted(i, j) = lift(g_inv(i, j));
        const auto conjugated = ParametricMatrix{w.basis.entries * lifted, w.basis.radicand};
        const auto source = change_basis(catalog::get(w.source).table, g);
        auto limit = limit_table(transformed_constants(source, conjugated));
        REQUIRE(limit.status == VerdictStatus::Verified);
        CHECK_MESSAGE(limit.table == catalog::get(w.target).table, w.source << " -> " << w.target);
    }
}

TEST_CASE("numeric cross-check") {
    auto a23 = numeric_crosscheck(read_witness(kData / "witnesses/A23_A24.wit"), {1e-3});
    REQUIRE(a23.samples.size() == 1);
    CHECK(a23.samples[0].deviation <= 1e-2);
    CHECK_FALSE(a23.samples[0].ill_conditioned);

    auto far = numeric_crosscheck(read_witness(kData / "witnesses/A23_A24.wit"), {1.0});
    CHECK(far.samples[0].deviation > 0.5);

    auto self = numeric_crosscheck(identity_witness("A_09", "A_09"), {1e-4, {0.0, 1e-4}});
    for (const auto& s : self.samples) CHECK(s.deviation == 0.0);

    auto radical = numeric_crosscheck(read_witness(kData / "witnesses/A02_A06.wit"), {1e-4});
    CHECK(radical.samples[0].deviation < 1e-2);
}
