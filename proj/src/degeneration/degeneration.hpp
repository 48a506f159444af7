#ifndef NILCERT_DEGENERATION_DEGENERATION_HPP
#define NILCERT_DEGENERATION_DEGENERATION_HPP

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "arith/tower.hpp"
#include "catalog/catalog.hpp"

namespace nilcert {

using TowerTable = StructureTable<TowerElement>;

/// Row i holds the coordinates of E_i^t in the basis e_1..e_n.
struct ParametricMatrix {
    Matrix<TowerElement> entries;
    TowerElement::Radicand radicand;  // shared by all entries, or null

    /// Checks that at most one radicand occurs; throws MultipleRadicals.
    static ParametricMatrix from_rows(const std::vector<std::vector<TowerElement>>& rows);
    std::size_t dim() const { return entries.rows(); }
};

struct DegenerationWitness {
    std::string source;
    std::string target;
    ParametricMatrix basis;
};

enum class VerdictStatus { Verified, SingularFamily, LimitDiverges, LimitMismatch, BranchAmbiguous };
const char* verdict_status_name(VerdictStatus s);

using Index3 = std::array<std::size_t, 3>;  // 0-based (i, j, k)

struct EntryReport {
    Index3 index;
    TowerElement value;  // c_ij^k(t)
    Limit limit;
    GaussianRational expected;
    bool ok = false;
};

/// Parameter values t != 0 where the family is not a basis or not defined:
/// zeros of det(M) and poles of entries, collected into one polynomial.
struct ExceptionalValues {
    Polynomial polynomial;                  // 1 when there are none
    std::vector<GaussianRational> rational_roots;
    bool roots_complete = false;            // true when every root was found
};

struct Verdict {
    VerdictStatus status = VerdictStatus::Verified;
    std::string source;
    std::string target;
    std::optional<Index3> offending;  // first failing entry
    std::vector<EntryReport> details;  // entries with c(t) != 0 or a nonzero target
    TowerElement determinant;
    ExceptionalValues exceptional;
    std::size_t der_source = 0;
    std::size_t der_target = 0;
    bool der_check_ok = true;
    std::vector<std::string> notes;
};

bool generic_invertibility(const ParametricMatrix& m);
ExceptionalValues exceptional_values(const ParametricMatrix& m);

/// Structure constants of the source product in the basis E_1^t..E_n^t.
/// Throws Singular when the family is not generically invertible.
TowerTable transformed_constants(const ConstTable& source, const ParametricMatrix& m);

struct LimitResult {
    VerdictStatus status = VerdictStatus::Verified;  // Verified, LimitDiverges or BranchAmbiguous
    std::optional<Index3> offending;
    ConstTable table;  // valid when status == Verified
    std::vector<Limit> limits;  // (i, j, k) row-major
};
LimitResult limit_table(const TowerTable& param);

Verdict verify(const DegenerationWitness& w);

struct NumericSample {
    std::complex<double> t;
    double deviation = 0.0;  // max |c(t) - target|
    double condition = 0.0;  // ||M||_inf ||M^-1||_inf
    bool ill_conditioned = false;
};

struct NumericReport {
    std::vector<NumericSample> samples;
};

inline constexpr double kDefaultConditionBound = 1e12;

/// Floating evaluation of c(t) from M(t) on the principal branch.
NumericReport numeric_crosscheck(const DegenerationWitness& w, const std::vector<std::complex<double>>& t_samples,
                                 double condition_bound = kDefaultConditionBound);

/// Verifies all witnesses with `jobs` worker threads; output order equals input order.
std::vector<Verdict> verify_many(const std::vector<DegenerationWitness>& ws, unsigned jobs);

}  // namespace nilcert

#endif
