#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "io/files.hpp"
#include "suite/suite.hpp"
#include "support/generators.hpp"

using namespace nilcert;

namespace {

const std::filesystem::path kData = NILCERT_DATA_DIR;

ClosedSetSpec spec(std::initializer_list<const char*> conjuncts) {
    ClosedSetSpec s;
    for (const char* c : conjuncts) s.conjuncts.push_back(parse_conjunct(c));
    return s;
}

const ConstTable& table(const char* name) { return catalog::get(name).table; }

Conjunct random_conjunct(Rng& rng) {
    std::uniform_int_distribution<int> kind(0, 5);
    std::uniform_int_distribution<std::size_t> idx(1, 5), pw(1, 4), ann(0, 5);
    switch (kind(rng)) {
        case 0: return FlagContainment{idx(rng), idx(rng), idx(rng)};
        case 1: return FlagContainment{idx(rng), idx(rng), 0};
        case 2: return PowerVanish{idx(rng), pw(rng) + 1};
        case 3: return AnnDimAtLeast{ann(rng)};
        case 4: return PowerVanish{1, pw(rng)};
        default: {
            auto v = [&] { return StructurePolynomial::variable({idx(rng) - 1, idx(rng) - 1, idx(rng) - 1}); };
            return PolynomialEq{v() * v() - v() * v(), "random"};
        }
    }
}

}  // namespace

TEST_CASE("parsing conditions") {
    CHECK(std::get<PowerVanish>(parse_conjunct("A_1^4 = 0")) == PowerVanish{1, 4});
    CHECK(std::get<PowerVanish>(parse_conjunct("A_3^2 = 0")) == PowerVanish{3, 2});
    CHECK(std::get<FlagContainment>(parse_conjunct("A_1 A_3 <= A_5")) == FlagContainment{1, 3, 5});
    CHECK(std::get<FlagContainment>(parse_conjunct("A_1^2 <= A_4")) == FlagContainment{1, 1, 4});
    CHECK(std::get<FlagContainment>(parse_conjunct("A_2 A_3 = 0")) == FlagContainment{2, 3, 0});
    CHECK(std::get<AnnDimAtLeast>(parse_conjunct("dim Ann >= 2")) == AnnDimAtLeast{2});
    auto p = std::get<PolynomialEq>(parse_conjunct("c(1,3,4) c(2,2,5) = c(1,3,5) c(2,2,4)"));
    CHECK(p.poly.terms().size() == 2);
    CHECK_THROWS_AS((void)parse_conjunct("A_1 A_ = 0"), Error);
    for (const char* text : {"A_1^4 = 0", "A_2 A_3 = 0", "A_1 A_3 <= A_5", "dim Ann >= 2"})
        CHECK(parse_conjunct(conjunct_to_string(parse_conjunct(text))) == parse_conjunct(text));
}

TEST_CASE("membership in closed sets") {
    const auto r = spec({"A_1^4 = 0", "A_3^2 = 0", "A_1 A_3 <= A_5"});
    CHECK(satisfies(r, table("A_03")));
    CHECK_FALSE(satisfies(r, table("A_05")));
    CHECK(satisfies(r, table("C5")));
    CHECK(satisfies(spec({"A_2 A_3 = 0", "A_1^2 <= A_4", "c(1,3,4) c(2,2,5) = c(1,3,5) c(2,2,4)"}), table("C5")));
    CHECK_FALSE(satisfies(spec({"dim Ann >= 2"}), table("A_21")));
    CHECK(satisfies(spec({"dim Ann >= 2"}), table("A_05")));
}

TEST_CASE("membership in a witness basis") {
    const auto r = spec({"A_1^2 <= A_4", "A_1 A_2 <= A_5"});
    Matrix<GaussianRational> perm(5, 5);
    perm(0, 2) = perm(1, 1) = perm(2, 0) = perm(3, 3) = perm(4, 4) = GaussianRational(1);
    CHECK(satisfies_with_witness(r, table("A_13"), perm));
    CHECK_FALSE(satisfies(r, table("A_13")));
    const auto id = Matrix<GaussianRational>::identity(5);
    for (const auto& e : catalog::entries()) CHECK(satisfies_with_witness(r, e.table, id) == satisfies(r, e.table));
    CHECK_THROWS_AS((void)satisfies_with_witness(r, table("A_13"), Matrix<GaussianRational>(5, 5)), Error);
}

TEST_CASE("Borel probes") {
    Rng rng(12);
    for (const auto& p : list_files(kData / "certificates", ".cert")) {
        const auto claim = read_certificate(p);
        for (const auto& s : claim.sources) {
            auto probe = borel_stability_probe(claim.spec, claim.source_table(s), 200, rng);
            CHECK_MESSAGE(probe.precondition_ok, claim.id << " " << s);
            CHECK_FALSE(probe.counterexample.has_value());
            CHECK(probe.samples == 200);
        }
    }
    auto wrong = borel_stability_probe(spec({"c(1,1,2) = 0"}), table("A_24"), 10, rng);
    CHECK_FALSE(wrong.precondition_ok);
}

TEST_CASE("escape evidence") {
    Rng rng(3);
    auto ann = escape_evidence(spec({"dim Ann >= 2"}), table("A_21"), 50, rng);
    CHECK(ann.status == EscapeStatus::Certified);
    CHECK(ann.invariant_certificate.has_value());
    CHECK_FALSE(ann.not_a_proof);

    auto power = escape_evidence(spec({"A_1^4 = 0"}), table("A_05"), 50, rng);
    CHECK(power.status == EscapeStatus::Certified);

    auto zero = escape_evidence(spec({"A_3^2 = 0"}), table("C5"), 20, rng);
    CHECK(zero.status == EscapeStatus::Refuted);
    CHECK(zero.random_hits > 0);

    auto flag = escape_evidence(spec({"A_1^2 <= A_4", "A_1 A_2 <= A_5"}), table("A_12"), 100, rng);
    CHECK(flag.status == EscapeStatus::Evidential);
    CHECK(flag.random_hits == 0);
    CHECK(flag.samples == 100);
    CHECK(flag.not_a_proof);
}

TEST_CASE("necessary conditions") {
    CHECK(necessary_conditions("A_01", "A_02").all_pass());
    auto back = necessary_conditions("A_24", "A_01");
    CHECK_FALSE(back.all_pass());
    REQUIRE_FALSE(back.checks.empty());
    CHECK(back.checks[0].name == "der_increase");
    CHECK_FALSE(back.checks[0].pass);
    CHECK(necessary_conditions("A_13", "A_13").all_pass());
    CHECK_THROWS_AS((void)necessary_conditions("A_13", "A_99"), Error);
}

TEST_CASE("evaluators agree with the defining equations on random tables") {
    Rng rng(500);
    std::size_t agree_true = 0;
    for (int trial = 0; trial < 500; ++trial) {
        auto t = testing::sparse_random_table(rng, 5, 1 + trial % 12);
        if (trial % 2 == 0)
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = i + 1; j < 5; ++j)
                    for (std::size_t k = 0; k < 5; ++k) t.set(j, i, k, t.at(i, j, k));
        for (int c = 0; c < 4; ++c) {
            const auto conj = random_conjunct(rng);
            const bool fast = satisfies(conj, t);
            CHECK_MESSAGE(fast == satisfies_bruteforce(conj, t), conjunct_to_string(conj));
            agree_true += fast;
        }
    }
    CHECK(agree_true > 100);
}

TEST_CASE("shipped certificates end to end") {
    SuiteOptions o;
    o.data_dir = kData;
    const auto r = run_suite(o);
    REQUIRE(r.certificates.size() == 8);
    std::set<std::string> certified;
    for (const auto& c : r.certificates) {
        CHECK_MESSAGE(c.ok(), c.claim.id);
        for (const auto& s : c.sources) CHECK(s.satisfies);
        for (const auto& t : c.targets) {
            CHECK_FALSE(t.reachable);
            if (t.escape.status == EscapeStatus::Certified) certified.insert(t.name);
            else CHECK(t.escape.random_hits == 0);
            CHECK(t.escape.status != EscapeStatus::Refuted);
        }
    }
    CHECK(certified == std::set<std::string>{"A_05", "A_18", "A_21"});
    CHECK(r.screening.unexplained.empty());
}
