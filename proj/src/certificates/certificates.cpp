#include "certificates/certificates.hpp"

#include <cctype>
#include <regex>
#include <sstream>

#include "derivations/derivations.hpp"

namespace nilcert {

StructurePolynomial StructurePolynomial::constant(const GaussianRational& c) {
    StructurePolynomial p;
    if (!c.is_zero()) p.terms_[{}] = c;
    return p;
}

StructurePolynomial StructurePolynomial::variable(Var v) {
    StructurePolynomial p;
    p.terms_[{{v, 1u}}] = GaussianRational(1);
    return p;
}

std::size_t StructurePolynomial::max_index() const {
    std::size_t m = 0;
    for (const auto& [mono, c] : terms_)
        for (const auto& [v, e] : mono) m = std::max({m, v[0], v[1], v[2]});
    return m;
}

StructurePolynomial StructurePolynomial::operator-() const {
    StructurePolynomial p = *this;
    for (auto& [mono, c] : p.terms_) c = -c;
    return p;
}

StructurePolynomial& StructurePolynomial::operator+=(const StructurePolynomial& o) {
    for (const auto& [mono, c] : o.terms_) {
        auto it = terms_.find(mono);
        if (it == terms_.end()) {
            terms_.emplace(mono, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

StructurePolynomial operator*(const StructurePolynomial& a, const StructurePolynomial& b) {
    StructurePolynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            std::map<StructurePolynomial::Var, unsigned> merged;
            for (const auto& [v, e] : ma) merged[v] += e;
            for (const auto& [v, e] : mb) merged[v] += e;
            StructurePolynomial term;
            term.terms_[StructurePolynomial::Monomial(merged.begin(), merged.end())] = ca * cb;
            out += term;
        }
    return out;
}

StructurePolynomial pow(const StructurePolynomial& x, unsigned e) {
    StructurePolynomial r = StructurePolynomial::constant(GaussianRational(1));
    for (unsigned k = 0; k < e; ++k) r = r * x;
    return r;
}

GaussianRational StructurePolynomial::evaluate(const ConstTable& alg) const {
    GaussianRational sum;
    for (const auto& [mono, c] : terms_) {
        GaussianRational term = c;
        for (const auto& [v, e] : mono)
            for (unsigned k = 0; k < e; ++k) term *= alg.at(v[0], v[1], v[2]);
        sum += term;
    }
    return sum;
}

namespace {

// Recursive descent over + - * / ^, integers, i, c(i,j,k) and parentheses.
class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    StructurePolynomial parse() {
        StructurePolynomial p = expr();
        skip();
        if (pos_ != s_.size()) throw SyntaxError("unexpected trailing input in polynomial", pos_);
        return p;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) throw SyntaxError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }
    unsigned long integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw SyntaxError("expected an integer", pos_);
        if (pos_ - start > 9) throw SyntaxError("integer too large", start);
        return std::stoul(std::string(s_.substr(start, pos_ - start)));
    }

    StructurePolynomial expr() {
        StructurePolynomial acc = term();
        while (peek() == '+' || peek() == '-') {
            const char op = s_[pos_++];
            StructurePolynomial rhs = term();
            acc = op == '+' ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    StructurePolynomial term() {
        StructurePolynomial acc = unary();
        while (true) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * unary();
            } else if (c == '/') {
                ++pos_;
                const std::size_t col = pos_;
                StructurePolynomial d = unary();
                const auto& t = d.terms();
                if (t.size() != 1 || !t.begin()->first.empty())
                    throw SyntaxError("division only by nonzero constants", col);
                acc = acc * StructurePolynomial::constant(t.begin()->second.inverse());
            } else if (c == 'c' || c == 'i' || c == '(') {
                acc = acc * unary();
            } else {
                return acc;
            }
        }
    }

    StructurePolynomial unary() {
        if (peek() == '-') {
            ++pos_;
            return -unary();
        }
        return power();
    }

    StructurePolynomial power() {
        StructurePolynomial base = atom();
        if (peek() != '^') return base;
        ++pos_;
        const unsigned long e = integer();
        if (e > 64) throw SyntaxError("exponent too large", pos_);
        return pow(base, static_cast<unsigned>(e));
    }

    StructurePolynomial atom() {
        const char c = peek();
        const std::size_t col = pos_;
        if (std::isdigit(static_cast<unsigned char>(c))) return StructurePolynomial::constant(GaussianRational(static_cast<long>(integer())));
        if (c == 'i' && !(pos_ + 1 < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
            ++pos_;
            return StructurePolynomial::constant(GaussianRational::i());
        }
        if (c == 'c') {
            ++pos_;
            expect('(');
            std::array<std::size_t, 3> v{};
            for (std::size_t a = 0; a < 3; ++a) {
                if (a) expect(',');
                const unsigned long x = integer();
                if (x < 1 || x > kMaxAlgebraDim) throw SyntaxError("structure constant index out of range", col);
                v[a] = x - 1;
            }
            expect(')');
            return StructurePolynomial::variable(v);
        }
        if (c == '(') {
            ++pos_;
            StructurePolynomial p = expr();
            expect(')');
            return p;
        }
        throw SyntaxError("unexpected input in polynomial", col);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::size_t to_index(const std::string& s) {
    if (s.size() > 6) throw SyntaxError("index too large", 0);
    return std::stoul(s);
}

void check_flag_index(std::size_t p, std::size_t n) {
    if (p < 1 || p > n + 1) throw Error(ErrorKind::InvalidArgument, "flag index A_" + std::to_string(p) + " out of range for dimension " + std::to_string(n));
}

}  // namespace

Conjunct parse_conjunct(const std::string& raw) {
    const std::string text = trim(raw);
    std::smatch m;
    static const std::regex ann(R"(dim\s+Ann\s*>=\s*(\d+))");
    static const std::regex power(R"(A_(\d+)\s*\^\s*(\d+)\s*=\s*0)");
    static const std::regex square_in(R"(A_(\d+)\s*\^\s*2\s*<=\s*A_(\d+))");
    static const std::regex product_zero(R"(A_(\d+)\s*\*?\s*A_(\d+)\s*=\s*0)");
    static const std::regex product_in(R"(A_(\d+)\s*\*?\s*A_(\d+)\s*<=\s*A_(\d+))");
    if (std::regex_match(text, m, ann)) return AnnDimAtLeast{to_index(m[1])};
    if (std::regex_match(text, m, power)) {
        PowerVanish pv{to_index(m[1]), to_index(m[2])};
        if (pv.p == 0 || pv.k == 0) throw SyntaxError("flag and power indices start at 1", 0);
        return pv;
    }
    if (std::regex_match(text, m, square_in)) return FlagContainment{to_index(m[1]), to_index(m[1]), to_index(m[2])};
    if (std::regex_match(text, m, product_zero)) return FlagContainment{to_index(m[1]), to_index(m[2]), 0};
    if (std::regex_match(text, m, product_in)) return FlagContainment{to_index(m[1]), to_index(m[2]), to_index(m[3])};
    if (text.rfind("A_", 0) == 0 || text.rfind("dim", 0) == 0) throw SyntaxError("unrecognised condition '" + text + "'", 0);
    const auto eq = text.find('=');
    if (eq == std::string::npos || text.find('=', eq + 1) != std::string::npos || (eq > 0 && (text[eq - 1] == '<' || text[eq - 1] == '>')))
        throw SyntaxError("expected a polynomial identity 'lhs = rhs'", 0);
    StructurePolynomial lhs = PolyParser(text.substr(0, eq)).parse();
    StructurePolynomial rhs;
    try {
        rhs = PolyParser(text.substr(eq + 1)).parse();
    } catch (const SyntaxError& e) {
        throw SyntaxError(e.what(), eq + 1 + e.column());
    }
    return PolynomialEq{lhs - rhs, text};
}

std::string conjunct_to_string(const Conjunct& c) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, FlagContainment>) {
                std::string lhs = x.p == x.q ? "A_" + std::to_string(x.p) + "^2" : "A_" + std::to_string(x.p) + " A_" + std::to_string(x.q);
                return x.r == 0 ? lhs + " = 0" : lhs + " <= A_" + std::to_string(x.r);
            } else if constexpr (std::is_same_v<T, PowerVanish>) {
                return "A_" + std::to_string(x.p) + "^" + std::to_string(x.k) + " = 0";
            } else if constexpr (std::is_same_v<T, PolynomialEq>) {
                return x.text;
            } else {
                return "dim Ann >= " + std::to_string(x.d);
            }
        },
        c);
}

std::string ClosedSetSpec::to_string() const {
    std::string out;
    for (const auto& c : conjuncts) out += (out.empty() ? "" : ", ") + conjunct_to_string(c);
    return "{" + out + "}";
}

bool satisfies(const Conjunct& c, const ConstTable& alg) {
    using Space = Subspace<GaussianRational>;
    const std::size_t n = alg.dim();
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, FlagContainment>) {
                check_flag_index(x.p, n);
                check_flag_index(x.q, n);
                if (x.r != 0) check_flag_index(x.r, n);
                Space prod = subspace_product(alg, Space::flag(n, x.p), Space::flag(n, x.q));
                return x.r == 0 ? prod.is_zero() : prod.is_subspace_of(Space::flag(n, x.r));
            } else if constexpr (std::is_same_v<T, PowerVanish>) {
                check_flag_index(x.p, n);
                return subspace_powers(alg, Space::flag(n, x.p), x.k)[x.k].is_zero();
            } else if constexpr (std::is_same_v<T, PolynomialEq>) {
                if (!x.poly.is_zero() && x.poly.max_index() >= n) throw Error(ErrorKind::InvalidArgument, "polynomial uses an index beyond the dimension");
                return x.poly.evaluate(alg).is_zero();
            } else {
                return annihilator(alg).dim() >= x.d;
            }
        },
        c);
}

bool satisfies(const ClosedSetSpec& spec, const ConstTable& alg) {
    for (const auto& c : spec.conjuncts)
        if (!satisfies(c, alg)) return false;
    return true;
}

bool satisfies_with_witness(const ClosedSetSpec& spec, const ConstTable& alg, const Matrix<GaussianRational>& witness) {
    return satisfies(spec, change_basis(alg, witness));
}

bool satisfies_bruteforce(const Conjunct& c, const ConstTable& alg) {
    const std::size_t n = alg.dim();
    using Vec = std::vector<GaussianRational>;
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, FlagContainment>) {
                const std::size_t kmax = x.r == 0 ? n : x.r - 1;
                for (std::size_t i = x.p - 1; i < n; ++i)
                    for (std::size_t j = x.q - 1; j < n; ++j)
                        for (std::size_t k = 0; k < kmax; ++k)
                            if (!alg.at(i, j, k).is_zero()) return false;
                return true;
            } else if constexpr (std::is_same_v<T, PowerVanish>) {
                // all bracketed products of k basis vectors from A_p
                std::vector<std::vector<Vec>> level(x.k + 1);
                for (std::size_t i = x.p - 1; i < n; ++i) {
                    Vec e(n, GaussianRational(0));
                    e[i] = GaussianRational(1);
                    level[1].push_back(e);
                }
                for (std::size_t m = 2; m <= x.k; ++m)
                    for (std::size_t a = 1; a < m; ++a)
                        for (const auto& u : level[a])
                            for (const auto& w : level[m - a]) {
                                Vec prod(n, GaussianRational(0));
                                for (std::size_t i = 0; i < n; ++i)
                                    for (std::size_t j = 0; j < n; ++j)
                                        for (std::size_t k = 0; k < n; ++k) prod[k] += u[i] * w[j] * alg.at(i, j, k);
                                bool zero = true;
                                for (const auto& v : prod) zero = zero && v.is_zero();
                                if (!zero) level[m].push_back(std::move(prod));
                            }
                return level[x.k].empty();
            } else if constexpr (std::is_same_v<T, PolynomialEq>) {
                GaussianRational sum;
                for (const auto& [mono, coeff] : x.poly.terms()) {
                    GaussianRational t = coeff;
                    for (const auto& [v, e] : mono)
                        for (unsigned r = 0; r < e; ++r) t = t * alg.at(v[0], v[1], v[2]);
                    sum = sum + t;
                }
                return sum.is_zero();
            } else {
                // Ann is the left kernel of N(i, (j,k)) = c(i,j,k) stacked with c(j,i,k)
                Matrix<GaussianRational> nmat(n, 2 * n * n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        for (std::size_t k = 0; k < n; ++k) {
                            nmat(i, j * n + k) = alg.at(i, j, k);
                            nmat(i, n * n + j * n + k) = alg.at(j, i, k);
                        }
                return n - rank(nmat) >= x.d;
            }
        },
        c);
}

ConstTable NonDegenerationClaim::source_table(const std::string& source) const {
    const auto& table = catalog::get(source).table;
    auto it = witness.find(catalog::canonical_name(source));
    return it == witness.end() ? table : change_basis(table, it->second);
}

BorelProbeResult borel_stability_probe(const ClosedSetSpec& spec, const ConstTable& alg, std::size_t samples, Rng& rng) {
    BorelProbeResult r;
    r.precondition_ok = satisfies(spec, alg);
    if (!r.precondition_ok) return r;
    for (; r.samples < samples; ++r.samples) {
        auto g = random_borel_basis(alg.dim(), rng);
        if (!satisfies(spec, change_basis(alg, g))) {
            r.counterexample = g;
            ++r.samples;
            break;
        }
    }
    return r;
}

const char* escape_status_name(EscapeStatus s) {
    switch (s) {
        case EscapeStatus::Certified: return "CERTIFIED";
        case EscapeStatus::Evidential: return "EVIDENTIAL";
        case EscapeStatus::Refuted: return "REFUTED";
    }
    return "UNKNOWN";
}

EscapeRecord escape_evidence(const ClosedSetSpec& spec, const ConstTable& target, std::size_t samples, Rng& rng) {
    EscapeRecord rec;
    for (const auto& c : spec.conjuncts) {
        if (const auto* a = std::get_if<AnnDimAtLeast>(&c)) {
            const std::size_t d = annihilator(target).dim();
            if (d < a->d) rec.invariant_certificate = "dim Ann = " + std::to_string(d) + " < " + std::to_string(a->d);
        } else if (const auto* pv = std::get_if<PowerVanish>(&c); pv && pv->p == 1) {
            const std::size_t d = power_ideal(target, pv->k).dim();
            if (d > 0) rec.invariant_certificate = "dim A^" + std::to_string(pv->k) + " = " + std::to_string(d) + " > 0";
        }
        if (rec.invariant_certificate) {
            rec.status = EscapeStatus::Certified;
            rec.not_a_proof = false;
            return rec;
        }
    }
    for (; rec.samples < samples; ++rec.samples)
        if (satisfies(spec, change_basis(target, random_invertible(target.dim(), rng)))) ++rec.random_hits;
    rec.status = rec.random_hits > 0 ? EscapeStatus::Refuted : EscapeStatus::Evidential;
    return rec;
}

bool NecessaryConditionsReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

NecessaryConditionsReport necessary_conditions(const std::string& source, const std::string& target) {
    NecessaryConditionsReport r;
    r.source = catalog::canonical_name(source);
    r.target = catalog::canonical_name(target);
    const bool same = r.source == r.target;
    const auto& a = catalog::entry_fingerprint(r.source);
    const auto& b = catalog::entry_fingerprint(r.target);
    const std::size_t n2 = catalog::get(r.source).table.dim() * catalog::get(r.source).table.dim();
    auto cmp = [](std::size_t x, std::size_t y, const char* op) {
        return std::to_string(x) + " " + op + " " + std::to_string(y);
    };
    r.checks.push_back({"der_increase", same ? a.dim_der <= b.dim_der : a.dim_der < b.dim_der, cmp(a.dim_der, b.dim_der, same ? "<=" : "<")});
    r.checks.push_back({"orbit_decrease", same ? true : n2 - a.dim_der > n2 - b.dim_der, cmp(n2 - a.dim_der, n2 - b.dim_der, ">")});
    for (std::size_t k = 0; k < a.dims_of_powers.size(); ++k)
        r.checks.push_back({"power_" + std::to_string(k + 2) + "_nonincrease", b.dims_of_powers[k] <= a.dims_of_powers[k],
                            cmp(b.dims_of_powers[k], a.dims_of_powers[k], "<=")});
    r.checks.push_back({"ann_nondecrease", b.dim_ann >= a.dim_ann, cmp(b.dim_ann, a.dim_ann, ">=")});
    return r;
}

}  // namespace nilcert
