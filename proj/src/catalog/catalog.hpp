#ifndef NILCERT_CATALOG_CATALOG_HPP
#define NILCERT_CATALOG_CATALOG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algebra/structure_table.hpp"
#include "arith/gaussian.hpp"

namespace nilcert {

using ConstTable = StructureTable<GaussianRational>;

/// Basis-independent invariants used to tell catalog algebras apart.
struct InvariantFingerprint {
    std::size_t dim_der = 0;
    std::vector<std::size_t> dims_of_powers;  // dim A^k for k = 2..dim
    std::size_t dim_ann = 0;
    std::optional<std::size_t> nilpotency_index;

    friend bool operator==(const InvariantFingerprint&, const InvariantFingerprint&) = default;
    std::string to_string() const;
};

InvariantFingerprint fingerprint(const ConstTable& alg);

namespace catalog {

struct Entry {
    std::string name;
    ConstTable table;
    std::size_t expected_der_dim = 0;
};

/// The 5-dimensional nilpotent associative commutative algebras A_01..A_24
/// followed by the zero algebra C5.
const std::vector<Entry>& entries();

/// Accepts "A_07", "A07", "A_7", "a7" and "C5"; throws UnknownName.
std::string canonical_name(std::string_view name);
const Entry& get(std::string_view name);
bool contains(std::string_view name);
std::vector<std::string> names();

/// Cached fingerprint of a catalog entry.
const InvariantFingerprint& entry_fingerprint(std::string_view name);

/// Catalog entries whose fingerprint matches. Throws NotInVariety when the
/// input is not commutative, associative and nilpotent of dimension 5.
std::vector<std::string> identify(const ConstTable& alg);

/// Groups of catalog names sharing a fingerprint (empty when all are distinct).
std::vector<std::vector<std::string>> fingerprint_collisions();

}  // namespace catalog
}  // namespace nilcert

#endif
