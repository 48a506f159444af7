#ifndef NILCERT_CERTIFICATES_CERTIFICATES_HPP
#define NILCERT_CERTIFICATES_CERTIFICATES_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "algebra/sampling.hpp"
#include "catalog/catalog.hpp"

namespace nilcert {

/// Polynomial in the structure constants c(i,j,k) (0-based indices) over Q(i).
class StructurePolynomial {
public:
    using Var = std::array<std::size_t, 3>;
    using Monomial = std::vector<std::pair<Var, unsigned>>;  // sorted by variable

    StructurePolynomial() = default;
    static StructurePolynomial constant(const GaussianRational& c);
    static StructurePolynomial variable(Var v);

    bool is_zero() const { return terms_.empty(); }
    std::size_t max_index() const;  // largest 0-based index used, or 0

    StructurePolynomial operator-() const;
    StructurePolynomial& operator+=(const StructurePolynomial& o);
    friend StructurePolynomial operator+(StructurePolynomial a, const StructurePolynomial& b) { return a += b; }
    friend StructurePolynomial operator-(StructurePolynomial a, const StructurePolynomial& b) { return a += -b; }
    friend StructurePolynomial operator*(const StructurePolynomial& a, const StructurePolynomial& b);
    friend bool operator==(const StructurePolynomial&, const StructurePolynomial&) = default;

    GaussianRational evaluate(const ConstTable& alg) const;
    const std::map<Monomial, GaussianRational>& terms() const { return terms_; }

private:
    std::map<Monomial, GaussianRational> terms_;
};

StructurePolynomial pow(const StructurePolynomial& x, unsigned e);

/// Flag indices are 1-based: A_p = <e_p, ..., e_n>.
struct FlagContainment {
    std::size_t p, q;
    std::size_t r;  // A_p A_q <= A_r; r = 0 means A_p A_q = 0
    friend bool operator==(const FlagContainment&, const FlagContainment&) = default;
};
struct PowerVanish {
    std::size_t p, k;  // A_p^k = 0
    friend bool operator==(const PowerVanish&, const PowerVanish&) = default;
};
struct PolynomialEq {
    StructurePolynomial poly;  // lhs - rhs
    std::string text;          // as written
    friend bool operator==(const PolynomialEq& a, const PolynomialEq& b) { return a.poly == b.poly; }
};
struct AnnDimAtLeast {
    std::size_t d;
    friend bool operator==(const AnnDimAtLeast&, const AnnDimAtLeast&) = default;
};

using Conjunct = std::variant<FlagContainment, PowerVanish, PolynomialEq, AnnDimAtLeast>;

/// Condition text: "A_1^4 = 0", "A_1^2 <= A_4", "A_2 A_3 = 0", "A_1 A_3 <= A_5",
/// "dim Ann >= 2", or a polynomial identity such as "c(1,3,4) c(2,2,5) = c(1,3,5) c(2,2,4)".
Conjunct parse_conjunct(const std::string& text);
std::string conjunct_to_string(const Conjunct& c);

struct ClosedSetSpec {
    std::vector<Conjunct> conjuncts;
    std::string to_string() const;
};

bool satisfies(const Conjunct& c, const ConstTable& alg);
bool satisfies(const ClosedSetSpec& spec, const ConstTable& alg);
/// satisfies(spec, change_basis(alg, witness)); throws Singular.
bool satisfies_with_witness(const ClosedSetSpec& spec, const ConstTable& alg, const Matrix<GaussianRational>& witness);

/// Direct check of the defining equations: c(i,j,k) = 0 for flag conditions,
/// products of basis vectors for power conditions.
bool satisfies_bruteforce(const Conjunct& c, const ConstTable& alg);

struct NonDegenerationClaim {
    std::string id;
    std::vector<std::string> sources;
    std::vector<std::string> targets;
    ClosedSetSpec spec;
    std::map<std::string, Matrix<GaussianRational>> witness;  // rows f_i per source
    std::vector<std::string> notes;

    /// The source table in the basis the claim is stated for.
    ConstTable source_table(const std::string& source) const;
};

struct BorelProbeResult {
    bool precondition_ok = false;  // the algebra satisfies the spec to begin with
    std::size_t samples = 0;
    std::optional<Matrix<GaussianRational>> counterexample;  // basis rows
};

BorelProbeResult borel_stability_probe(const ClosedSetSpec& spec, const ConstTable& alg, std::size_t samples, Rng& rng);

enum class EscapeStatus { Certified, Evidential, Refuted };
const char* escape_status_name(EscapeStatus s);

struct EscapeRecord {
    EscapeStatus status = EscapeStatus::Evidential;
    std::optional<std::string> invariant_certificate;
    std::size_t samples = 0;
    std::size_t random_hits = 0;
    bool not_a_proof = true;
};

/// Certified when an annihilator or whole-algebra power conjunct fails for the
/// target (both are basis independent); otherwise random bases are searched.
EscapeRecord escape_evidence(const ClosedSetSpec& spec, const ConstTable& target, std::size_t samples, Rng& rng);

struct ConditionCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct NecessaryConditionsReport {
    std::string source, target;
    std::vector<ConditionCheck> checks;
    bool all_pass() const;
};

/// dim Der strictly increases (waived when source == target), orbit dimension
/// decreases, dim A^k does not increase (k = 2..n), dim Ann does not decrease.
NecessaryConditionsReport necessary_conditions(const std::string& source, const std::string& target);

}  // namespace nilcert

#endif
