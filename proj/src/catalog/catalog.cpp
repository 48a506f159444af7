#include "catalog/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "derivations/derivations.hpp"

namespace nilcert {

std::string InvariantFingerprint::to_string() const {
    std::ostringstream os;
    os << "(der=" << dim_der << ", powers=[";
    for (std::size_t k = 0; k < dims_of_powers.size(); ++k) os << (k ? "," : "") << dims_of_powers[k];
    os << "], ann=" << dim_ann << ", nil=";
    if (nilpotency_index)
        os << *nilpotency_index;
    else
        os << "none";
    os << ")";
    return os.str();
}

InvariantFingerprint fingerprint(const ConstTable& alg) {
    InvariantFingerprint fp;
    fp.dim_der = derivation_space(alg).dimension;
    auto powers = subspace_powers(alg, Subspace<GaussianRational>::whole(alg.dim()), alg.dim() + 1);
    for (std::size_t k = 2; k <= alg.dim(); ++k) fp.dims_of_powers.push_back(powers[k].dim());
    fp.dim_ann = annihilator(alg).dim();
    for (std::size_t k = 1; k < powers.size(); ++k)
        if (powers[k].is_zero()) {
            fp.nilpotency_index = k;
            break;
        }
    return fp;
}

namespace catalog {
namespace {

// One product e_i e_j = coeff * e_k (1-based); the symmetric entry is implied.
struct Product {
    int i, j, k, coeff;
};

struct Row {
    const char* name;
    std::size_t der;
    std::vector<Product> products;
};

const std::vector<Row>& table_a() {
    static const std::vector<Row> rows = {
        {"A_01", 5, {{1, 1, 2, 1}, {2, 2, 4, 1}, {1, 3, 4, 1}, {1, 2, 3, 1}, {1, 4, 5, 1}, {2, 3, 5, 1}}},
        {"A_02", 6, {{1, 1, 3, 1}, {2, 2, 5, 1}, {3, 3, 5, 1}, {1, 3, 4, 1}, {1, 4, 5, 1}}},
        {"A_03", 6, {{1, 1, 3, 1}, {2, 2, 4, 1}, {1, 3, 5, 1}, {2, 4, 5, 1}}},
        {"A_04", 7, {{1, 1, 3, 1}, {1, 2, 4, 1}, {1, 4, 5, 1}, {2, 3, 5, 1}}},
        {"A_05", 7, {{1, 1, 2, 1}, {2, 2, 4, 1}, {1, 2, 3, 1}, {1, 3, 4, 1}}},
        {"A_06", 7, {{1, 1, 2, 1}, {1, 2, 3, 1}, {4, 4, 5, 1}}},
        {"A_07", 7, {{1, 3, 4, 1}, {2, 3, 5, 1}, {1, 2, 4, 1}, {1, 2, 5, 1}}},
        {"A_08", 8, {{1, 1, 3, 1}, {2, 2, 4, 1}, {1, 3, 4, 1}, {1, 2, 5, 1}}},
        {"A_09", 8, {{1, 3, 5, 1}, {1, 2, 4, 1}, {2, 3, 5, -1}}},
        {"A_10", 9, {{1, 1, 3, 1}, {1, 3, 4, 1}, {1, 2, 5, 1}}},
        {"A_11", 9, {{1, 1, 4, 1}, {2, 3, 4, 1}, {1, 3, 5, 1}}},
        {"A_12", 11, {{1, 2, 4, 1}, {1, 3, 5, 1}}},
        {"A_13", 8, {{3, 3, 4, 1}, {1, 2, 5, 1}, {3, 4, 5, 1}}},
        {"A_14", 9, {{1, 1, 3, 1}, {2, 2, 4, 1}, {1, 3, 4, 1}}},
        {"A_15", 9, {{1, 2, 3, 1}, {4, 4, 5, 1}}},
        {"A_16", 10, {{1, 1, 3, 1}, {2, 2, 5, 1}, {1, 2, 4, 1}}},
        {"A_17", 10, {{1, 1, 4, 1}, {3, 3, 5, 1}, {1, 2, 5, 1}}},
        {"A_18", 11, {{1, 1, 2, 1}, {1, 2, 3, 1}}},
        {"A_19", 11, {{1, 1, 3, 1}, {2, 2, 4, 1}}},
        {"A_20", 12, {{1, 1, 3, 1}, {1, 2, 4, 1}}},
        {"A_21", 11, {{2, 3, 5, 1}, {1, 4, 5, 1}}},
        {"A_22", 12, {{1, 1, 4, 1}, {2, 3, 4, 1}}},
        {"A_23", 14, {{1, 2, 3, 1}}},
        {"A_24", 17, {{1, 1, 2, 1}}},
        {"C5", 25, {}},
    };
    return rows;
}

std::vector<Entry> build_entries() {
    std::vector<Entry> out;
    for (const auto& row : table_a()) {
        ConstTable table(5);
        for (const auto& p : row.products) {
            auto i = static_cast<std::size_t>(p.i - 1);
            auto j = static_cast<std::size_t>(p.j - 1);
            auto k = static_cast<std::size_t>(p.k - 1);
            table.set(i, j, k, table.at(i, j, k) + GaussianRational(p.coeff));
            if (i != j) table.set(j, i, k, table.at(i, j, k));
        }
        out.push_back({row.name, std::move(table), row.der});
    }
    return out;
}

}  // namespace

const std::vector<Entry>& entries() {
    static const std::vector<Entry> all = build_entries();
    return all;
}

std::string canonical_name(std::string_view name) {
    std::string s;
    for (char ch : name)
        if (ch != '_' && !std::isspace(static_cast<unsigned char>(ch))) s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    if (s == "C5" || s == "C^5") return "C5";
    if (s.size() >= 2 && s[0] == 'A' && std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        int n = std::stoi(s.substr(1));
        if (n >= 1 && n <= 24) {
            std::string out = "A_";
            if (n < 10) out += '0';
            return out + std::to_string(n);
        }
    }
    throw Error(ErrorKind::UnknownName, "unknown catalog name '" + std::string(name) + "'");
}

const Entry& get(std::string_view name) {
    const std::string canon = canonical_name(name);
    for (const auto& e : entries())
        if (e.name == canon) return e;
    throw Error(ErrorKind::UnknownName, "unknown catalog name '" + std::string(name) + "'");
}

bool contains(std::string_view name) {
    try {
        get(name);
        return true;
    } catch (const Error&) {
        return false;
    }
}

std::vector<std::string> names() {
    std::vector<std::string> out;
    for (const auto& e : entries()) out.push_back(e.name);
    return out;
}

const InvariantFingerprint& entry_fingerprint(std::string_view name) {
    static const std::map<std::string, InvariantFingerprint> cache = [] {
        std::map<std::string, InvariantFingerprint> m;
        for (const auto& e : entries()) m.emplace(e.name, fingerprint(e.table));
        return m;
    }();
    return cache.at(get(name).name);
}

std::vector<std::string> identify(const ConstTable& alg) {
    if (alg.dim() != 5) throw Error(ErrorKind::NotInVariety, "catalog algebras are 5-dimensional");
    auto ids = check_identities(alg);
    if (!ids.commutative) throw Error(ErrorKind::NotInVariety, "algebra is not commutative");
    if (!ids.associative) throw Error(ErrorKind::NotInVariety, "algebra is not associative");
    InvariantFingerprint fp = fingerprint(alg);
    if (!fp.nilpotency_index) throw Error(ErrorKind::NotInVariety, "algebra is not nilpotent");
    std::vector<std::string> out;
    for (const auto& e : entries())
        if (entry_fingerprint(e.name) == fp) out.push_back(e.name);
    return out;
}

std::vector<std::vector<std::string>> fingerprint_collisions() {
    std::vector<std::vector<std::string>> groups;
    std::vector<bool> seen(entries().size(), false);
    for (std::size_t a = 0; a < entries().size(); ++a) {
        if (seen[a]) continue;
        std::vector<std::string> group{entries()[a].name};
        for (std::size_t b = a + 1; b < entries().size(); ++b)
            if (!seen[b] && entry_fingerprint(entries()[a].name) == entry_fingerprint(entries()[b].name)) {
                group.push_back(entries()[b].name);
                seen[b] = true;
            }
        if (group.size() > 1) groups.push_back(std::move(group));
    }
    return groups;
}

}  // namespace catalog
}  // namespace nilcert
