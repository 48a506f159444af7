#include "io/files.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "io/expression.hpp"

namespace nilcert {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

struct Line {
    std::size_t number;  // 1-based
    std::string text;    // trimmed, comment removed
    std::size_t offset;  // column of text[0] in the raw line
};

std::vector<Line> content_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        const auto hash = raw.find('#');
        std::string body = hash == std::string::npos ? raw : raw.substr(0, hash);
        std::string t = trim(body);
        if (t.empty()) continue;
        out.push_back({number, t, body.find_first_not_of(" \t\r")});
    }
    return out;
}

// "key value" header lines; returns false if the line is not of that shape.
bool split_header(const std::string& line, std::string& key, std::string& value) {
    const auto sp = line.find_first_of(" \t");
    if (sp == std::string::npos || line.find('=') != std::string::npos) return false;
    key = line.substr(0, sp);
    value = trim(line.substr(sp));
    return true;
}

[[noreturn]] void fail_at(const Line& l, const std::string& what, std::size_t column = 0) {
    throw SyntaxError(what + " (line " + std::to_string(l.number) + ")", l.offset + column, l.number);
}

// Re-throws expression errors with the line position attached.
template <class Fn>
auto with_line(const Line& l, std::size_t rhs_offset, Fn&& fn) {
    try {
        return fn();
    } catch (const SyntaxError& e) {
        throw SyntaxError(std::string(e.what()) + " (line " + std::to_string(l.number) + ")", l.offset + rhs_offset + e.column(), l.number);
    }
}

std::size_t parse_basis_index(const Line& l, const std::string& token, char letter, std::size_t dim) {
    const std::string prefix = std::string(1, letter) + "_";
    if (token.size() <= 2 || token.compare(0, 2, prefix) != 0 || token.find_first_not_of("0123456789", 2) != std::string::npos)
        fail_at(l, "expected " + prefix + "<k>, got '" + token + "'");
    std::size_t k = std::stoul(token.substr(2));
    if (k < 1 || k > dim) fail_at(l, "index " + token + " out of range 1.." + std::to_string(dim));
    return k - 1;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

AlgebraFile parse_algebra(const std::string& text) {
    AlgebraFile a;
    std::size_t dim = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;  // (i, j) -> line
    bool body_started = false;
    for (const Line& l : content_lines(text)) {
        std::string key, value;
        if (!body_started && split_header(l.text, key, value)) {
            if (key == "name") {
                a.name = value;
            } else if (key == "dim") {
                if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos) fail_at(l, "dim must be a positive integer");
                dim = std::stoul(value);
                if (dim == 0 || dim > kMaxAlgebraDim) fail_at(l, "dim must be in 1.." + std::to_string(kMaxAlgebraDim));
                a.table = ConstTable(dim);
            } else if (key == "field") {
                if (value != "Q(i)" && value != "Q") fail_at(l, "field must be Q or Q(i)");
                a.field = value;
            } else if (key == "symmetric") {
                if (value != "true" && value != "false") fail_at(l, "symmetric must be true or false");
                a.symmetric = value == "true";
            } else {
                fail_at(l, "unknown header '" + key + "'");
            }
            continue;
        }
        body_started = true;
        if (dim == 0) fail_at(l, "dim must be given before the products");
        const auto eq = l.text.find('=');
        const auto star = l.text.find('*');
        if (eq == std::string::npos || star == std::string::npos || star > eq) fail_at(l, "expected 'e_i * e_j = <combination>'");
        const std::size_t i = parse_basis_index(l, trim(l.text.substr(0, star)), 'e', dim);
        const std::size_t j = parse_basis_index(l, trim(l.text.substr(star + 1, eq - star - 1)), 'e', dim);
        auto key_ij = a.symmetric ? std::pair{std::min(i, j), std::max(i, j)} : std::pair{i, j};
        if (seen.count(key_ij)) fail_at(l, "product given twice (first on line " + std::to_string(seen[key_ij]) + ")");
        seen[key_ij] = l.number;
        const std::string rhs = l.text.substr(eq + 1);
        LinearCombination v = with_line(l, eq + 1, [&] { return parse_linear_combination(rhs, dim); });
        for (std::size_t k = 0; k < dim; ++k) {
            auto c = as_constant(v[k]);
            if (!c) fail_at(l, "structure constants must be constants", eq + 1);
            if (a.field == "Q" && !c->im().is_zero()) fail_at(l, "imaginary constant in a field Q algebra", eq + 1);
            a.table.set(i, j, k, *c);
            if (a.symmetric) a.table.set(j, i, k, *c);
        }
    }
    if (dim == 0) throw SyntaxError("missing 'dim' header", 0);
    if (a.name.empty()) throw SyntaxError("missing 'name' header", 0);
    return a;
}

AlgebraFile read_algebra(const std::filesystem::path& path) { return parse_algebra(read_text_file(path)); }

std::string print_algebra(const AlgebraFile& a) {
    std::ostringstream os;
    const std::size_t n = a.table.dim();
    os << "name " << a.name << "\n"
       << "dim " << n << "\n"
       << "field " << a.field << "\n"
       << "symmetric " << (a.symmetric ? "true" : "false") << "\n";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = a.symmetric ? i : 0; j < n; ++j) {
            LinearCombination v(n);
            bool zero = true;
            for (std::size_t k = 0; k < n; ++k) {
                v[k] = TowerElement(a.table.at(i, j, k));
                zero = zero && v[k].is_zero();
            }
            if (zero) continue;
            os << "e_" << i + 1 << " * e_" << j + 1 << " = " << print_linear_combination(v) << "\n";
        }
    return os.str();
}

AlgebraFile catalog_algebra_file(const catalog::Entry& e) {
    AlgebraFile a;
    a.name = e.name;
    a.table = e.table;
    a.symmetric = is_commutative(e.table);
    bool real = true;
    for (std::size_t i = 0; i < e.table.dim(); ++i)
        for (std::size_t j = 0; j < e.table.dim(); ++j)
            for (std::size_t k = 0; k < e.table.dim(); ++k) real = real && e.table.at(i, j, k).im().is_zero();
    a.field = real ? "Q" : "Q(i)";
    return a;
}

DegenerationWitness parse_witness(const std::string& text) {
    DegenerationWitness w;
    std::vector<std::optional<LinearCombination>> rows;
    std::vector<Line> e_lines;
    for (const Line& l : content_lines(text)) {
        std::string key, value;
        if (split_header(l.text, key, value)) {
            if (key == "source")
                w.source = value;
            else if (key == "target")
                w.target = value;
            else
                fail_at(l, "unknown header '" + key + "'");
            continue;
        }
        e_lines.push_back(l);
    }
    if (w.source.empty() || w.target.empty()) throw SyntaxError("witness needs 'source' and 'target' headers", 0);
    w.source = catalog::canonical_name(w.source);
    w.target = catalog::canonical_name(w.target);
    const std::size_t dim = catalog::get(w.source).table.dim();
    rows.assign(dim, std::nullopt);
    for (const Line& l : e_lines) {
        const auto eq = l.text.find('=');
        if (eq == std::string::npos) fail_at(l, "expected 'E_k = <combination>'");
        const std::size_t k = parse_basis_index(l, trim(l.text.substr(0, eq)), 'E', dim);
        if (rows[k]) fail_at(l, "E_" + std::to_string(k + 1) + " given twice");
        const std::string rhs = l.text.substr(eq + 1);
        rows[k] = with_line(l, eq + 1, [&] { return parse_linear_combination(rhs, dim); });
    }
    std::vector<std::vector<TowerElement>> m;
    for (std::size_t k = 0; k < dim; ++k) {
        if (!rows[k]) throw SyntaxError("missing line for E_" + std::to_string(k + 1), 0);
        m.push_back(std::move(*rows[k]));
    }
    w.basis = ParametricMatrix::from_rows(m);
    return w;
}

DegenerationWitness read_witness(const std::filesystem::path& path) { return parse_witness(read_text_file(path)); }

std::string print_witness(const DegenerationWitness& w) {
    std::ostringstream os;
    os << "source " << w.source << "\n"
       << "target " << w.target << "\n";
    for (std::size_t i = 0; i < w.basis.dim(); ++i) {
        LinearCombination row(w.basis.entries.row(i).begin(), w.basis.entries.row(i).end());
        os << "E_" << i + 1 << " = " << print_linear_combination(row) << "\n";
    }
    return os.str();
}

NonDegenerationClaim parse_certificate(const std::string& text, const std::string& id) {
    NonDegenerationClaim c;
    c.id = id;
    std::string current_witness;
    std::vector<std::optional<std::vector<GaussianRational>>> rows;
    auto finish_witness = [&](const Line* at) {
        if (current_witness.empty()) return;
        const std::size_t n = rows.size();
        Matrix<GaussianRational> m(n, n);
        for (std::size_t k = 0; k < n; ++k) {
            if (!rows[k]) {
                if (at) fail_at(*at, "witness for " + current_witness + " lacks f_" + std::to_string(k + 1));
                throw SyntaxError("witness for " + current_witness + " lacks f_" + std::to_string(k + 1), 0);
            }
            for (std::size_t j = 0; j < n; ++j) m(k, j) = (*rows[k])[j];
        }
        c.witness[current_witness] = std::move(m);
        current_witness.clear();
    };
    auto names = [](const Line& l, const std::string& value) {
        std::vector<std::string> out;
        std::istringstream in(value);
        std::string tok;
        while (in >> tok) {
            if (tok.back() == ',') tok.pop_back();
            try {
                out.push_back(catalog::canonical_name(tok));
            } catch (const Error& e) {
                fail_at(l, e.what());
            }
        }
        if (out.empty()) fail_at(l, "expected at least one catalog name");
        return out;
    };
    for (const Line& l : content_lines(text)) {
        const auto sp = l.text.find_first_of(" \t");
        const std::string key = l.text.substr(0, sp);
        const std::string value = sp == std::string::npos ? std::string() : trim(l.text.substr(sp));
        if (!current_witness.empty() && key.rfind("f_", 0) == 0) {
            const auto eq = l.text.find('=');
            if (eq == std::string::npos) fail_at(l, "expected 'f_k = <combination>'");
            const std::size_t k = parse_basis_index(l, trim(l.text.substr(0, eq)), 'f', rows.size());
            if (rows[k]) fail_at(l, "f_" + std::to_string(k + 1) + " given twice");
            const std::string rhs = l.text.substr(eq + 1);
            LinearCombination v = with_line(l, eq + 1, [&] { return parse_linear_combination(rhs, rows.size()); });
            std::vector<GaussianRational> row;
            for (const auto& x : v) {
                auto cst = as_constant(x);
                if (!cst) fail_at(l, "witness entries must be constants", eq + 1);
                row.push_back(*cst);
            }
            rows[k] = std::move(row);
            continue;
        }
        finish_witness(&l);
        if (key == "sources") {
            c.sources = names(l, value);
        } else if (key == "targets") {
            c.targets = names(l, value);
        } else if (key == "condition") {
            try {
                c.spec.conjuncts.push_back(parse_conjunct(value));
            } catch (const SyntaxError& e) {
                fail_at(l, e.what(), l.text.find(value) + e.column());
            }
        } else if (key == "note") {
            c.notes.push_back(value);
        } else if (key == "witness") {
            auto ns = names(l, value);
            if (ns.size() != 1) fail_at(l, "witness names exactly one source");
            current_witness = ns[0];
            rows.assign(catalog::get(current_witness).table.dim(), std::nullopt);
        } else {
            fail_at(l, "unknown keyword '" + key + "'");
        }
    }
    finish_witness(nullptr);
    if (c.sources.empty() || c.targets.empty()) throw SyntaxError("certificate needs 'sources' and 'targets'", 0);
    if (c.spec.conjuncts.empty()) throw SyntaxError("certificate has no conditions", 0);
    for (const auto& [name, m] : c.witness)
        if (std::find(c.sources.begin(), c.sources.end(), name) == c.sources.end())
            throw SyntaxError("witness given for " + name + ", which is not a source", 0);
    return c;
}

NonDegenerationClaim read_certificate(const std::filesystem::path& path) {
    return parse_certificate(read_text_file(path), path.stem().string());
}

std::string print_certificate(const NonDegenerationClaim& c) {
    std::ostringstream os;
    os << "sources";
    for (const auto& s : c.sources) os << " " << s;
    os << "\ntargets";
    for (const auto& t : c.targets) os << " " << t;
    os << "\n";
    for (const auto& k : c.spec.conjuncts) os << "condition " << conjunct_to_string(k) << "\n";
    for (const auto& n : c.notes) os << "note " << n << "\n";
    for (const auto& [name, m] : c.witness) {
        os << "witness " << name << "\n";
        for (std::size_t i = 0; i < m.rows(); ++i) {
            LinearCombination row;
            for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(TowerElement(m(i, j)));
            os << "f_" << i + 1 << " = " << print_linear_combination(row) << "\n";
        }
    }
    return os.str();
}

}  // namespace nilcert
