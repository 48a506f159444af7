#include "degeneration/degeneration.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "derivations/derivations.hpp"

namespace nilcert {

const char* verdict_status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Verified: return "VERIFIED";
        case VerdictStatus::SingularFamily: return "SINGULAR_FAMILY";
        case VerdictStatus::LimitDiverges: return "LIMIT_DIVERGES";
        case VerdictStatus::LimitMismatch: return "LIMIT_MISMATCH";
        case VerdictStatus::BranchAmbiguous: return "BRANCH_AMBIGUOUS";
    }
    return "UNKNOWN";
}

ParametricMatrix ParametricMatrix::from_rows(const std::vector<std::vector<TowerElement>>& rows) {
    const std::size_t n = rows.size();
    ParametricMatrix m;
    m.entries = Matrix<TowerElement>(n, n);
    TowerElement acc;  // adding every entry checks for a single radicand
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw Error(ErrorKind::DimensionMismatch, "parametric basis is not square");
        for (std::size_t j = 0; j < n; ++j) {
            const TowerElement& x = rows[i][j];
            if (x.has_radical()) {
                if (m.radicand && !(*m.radicand == *x.radicand()))
                    throw Error(ErrorKind::MultipleRadicals, "parametric basis uses more than one square root");
                if (!m.radicand) m.radicand = x.radicand();
            }
            m.entries(i, j) = x;
        }
    }
    return m;
}

bool generic_invertibility(const ParametricMatrix& m) { return !determinant(m.entries).is_zero(); }

namespace {

Polynomial strip_t(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p.shift_down(static_cast<std::size_t>(p.order_at_zero())).monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    if (b.is_constant()) return a;
    if (a.is_constant()) return b.monic();
    return (a * b.exact_div(gcd(a, b))).monic();
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> out;
    mpz_class a = abs(n);
    for (mpz_class d = 1; d * d <= a; ++d)
        if (a % d == 0) {
            out.push_back(d);
            if (d * d != a) out.push_back(a / d);
        }
    return out;
}

// Rational roots of a polynomial with real rational coefficients.
void find_rational_roots(ExceptionalValues& ev) {
    Polynomial p = ev.polynomial;
    ev.roots_complete = p.is_constant();
    if (p.is_constant()) return;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(p.degree()); ++k)
        if (!p.coeff(k).im().is_zero()) return;
    const Rational scale = p.denominator_lcm();
    const mpz_class a0 = (p.coeff(0).re() * scale).numerator();
    const mpz_class an = (p.leading().re() * scale).numerator();
    if (abs(a0) > 1000000000 || abs(an) > 1000000000) return;
    for (const auto& num : divisors(a0))
        for (const auto& den : divisors(an))
            for (int sign : {1, -1}) {
                GaussianRational r(Rational(mpz_class(sign * num), den));
                bool found = false;
                while (!p.is_constant() && p.evaluate(r).is_zero()) {
                    p = p.exact_div(Polynomial(std::vector<GaussianRational>{-r, GaussianRational(1)}));
                    found = true;
                }
                if (found) ev.rational_roots.push_back(r);
            }
    std::sort(ev.rational_roots.begin(), ev.rational_roots.end(),
              [](const GaussianRational& a, const GaussianRational& b) { return a.re() < b.re(); });
    ev.roots_complete = p.is_constant();
}

}  // namespace

ExceptionalValues exceptional_values(const ParametricMatrix& m) {
    ExceptionalValues ev;
    Polynomial acc(std::vector<GaussianRational>{GaussianRational(1)});
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) {
            acc = lcm(acc, strip_t(m.entries(i, j).base().denominator()));
            acc = lcm(acc, strip_t(m.entries(i, j).radical().denominator()));
        }
    if (m.radicand) acc = lcm(acc, strip_t(m.radicand->denominator()));
    TowerElement det = determinant(m.entries);
    if (!det.is_zero()) {
        RationalFunction n = det.has_radical() ? det.norm() : det.base();
        acc = lcm(acc, strip_t(n.numerator()));
    }
    ev.polynomial = acc;
    find_rational_roots(ev);
    return ev;
}

TowerTable transformed_constants(const ConstTable& source, const ParametricMatrix& m) {
    const std::size_t n = source.dim();
    if (m.dim() != n) throw Error(ErrorKind::DimensionMismatch, "parametric basis size differs from algebra dimension");
    auto inv = inverse(m.entries);
    if (!inv) throw Error(ErrorKind::Singular, "parametric basis is not generically invertible");
    TowerTable src = source.map<TowerElement>([](const GaussianRational& c) { return TowerElement(c); });
    const bool symmetric = is_commutative(source);
    TowerTable out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (symmetric && j < i) {
                for (std::size_t k = 0; k < n; ++k) out.set(i, j, k, out.at(j, i, k));
                continue;
            }
            auto coords = row_times<TowerElement>(multiply(src, m.entries.row(i), m.entries.row(j)), *inv);
            for (std::size_t k = 0; k < n; ++k) out.set(i, j, k, std::move(coords[k]));
        }
    return out;
}

LimitResult limit_table(const TowerTable& param) {
    const std::size_t n = param.dim();
    LimitResult r;
    r.table = ConstTable(n);
    std::optional<Index3> diverges, ambiguous;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Limit l = param.at(i, j, k).limit_at_zero();
                if (l.status == LimitStatus::Exists)
                    r.table.set(i, j, k, l.value);
                else if (l.status == LimitStatus::Diverges && !diverges)
                    diverges = Index3{i, j, k};
                else if (l.status == LimitStatus::BranchAmbiguous && !ambiguous)
                    ambiguous = Index3{i, j, k};
                r.limits.push_back(std::move(l));
            }
    if (diverges) {
        r.status = VerdictStatus::LimitDiverges;
        r.offending = diverges;
    } else if (ambiguous) {
        r.status = VerdictStatus::BranchAmbiguous;
        r.offending = ambiguous;
    }
    return r;
}

Verdict verify(const DegenerationWitness& w) {
    const auto& src = catalog::get(w.source);
    const auto& tgt = catalog::get(w.target);
    Verdict v;
    v.source = src.name;
    v.target = tgt.name;
    const std::size_t n = src.table.dim();
    if (tgt.table.dim() != n || w.basis.dim() != n)
        throw Error(ErrorKind::DimensionMismatch, "witness dimensions disagree");

    v.der_source = catalog::entry_fingerprint(src.name).dim_der;
    v.der_target = catalog::entry_fingerprint(tgt.name).dim_der;
    v.der_check_ok = src.name == tgt.name ? v.der_source <= v.der_target : v.der_source < v.der_target;
    if (!v.der_check_ok)
        v.notes.push_back("dim Der does not increase: " + std::to_string(v.der_source) + " -> " + std::to_string(v.der_target));

    v.determinant = determinant(w.basis.entries);
    if (v.determinant.is_zero()) {
        v.status = VerdictStatus::SingularFamily;
        return v;
    }
    v.exceptional = exceptional_values(w.basis);

    TowerTable ct = transformed_constants(src.table, w.basis);
    LimitResult lt = limit_table(ct);
    std::size_t flat = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k, ++flat) {
                const Limit& l = lt.limits[flat];
                const GaussianRational& expected = tgt.table.at(i, j, k);
                const bool ok = l.status == LimitStatus::Exists && l.value == expected;
                if (!ok && lt.status == VerdictStatus::Verified && !v.offending) {
                    v.status = VerdictStatus::LimitMismatch;
                    v.offending = Index3{i, j, k};
                }
                if (!ct.at(i, j, k).is_zero() || !expected.is_zero())
                    v.details.push_back({{i, j, k}, ct.at(i, j, k), l, expected, ok});
            }
    if (lt.status != VerdictStatus::Verified) {
        v.status = lt.status;
        v.offending = lt.offending;
    }
    return v;
}

namespace {

using Cx = std::complex<double>;
using CxMat = std::vector<std::vector<Cx>>;

double inf_norm(const CxMat& m) {
    double best = 0.0;
    for (const auto& row : m) {
        double s = 0.0;
        for (const auto& x : row) s += std::abs(x);
        best = std::max(best, s);
    }
    return best;
}

std::optional<CxMat> complex_inverse(CxMat a) {
    const std::size_t n = a.size();
    CxMat inv(n, std::vector<Cx>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
        if (std::abs(a[p][c]) == 0.0) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        const Cx piv = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0.0) continue;
            const Cx f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

}  // namespace

NumericReport numeric_crosscheck(const DegenerationWitness& w, const std::vector<std::complex<double>>& t_samples,
                                 double condition_bound) {
    const auto& src = catalog::get(w.source).table;
    const auto& tgt = catalog::get(w.target).table;
    const std::size_t n = src.dim();
    NumericReport report;
    for (const Cx t : t_samples) {
        NumericSample s;
        s.t = t;
        CxMat m(n, std::vector<Cx>(n));
        bool finite = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] = w.basis.entries(i, j).evaluate(t, 1);
                finite = finite && std::isfinite(m[i][j].real()) && std::isfinite(m[i][j].imag());
            }
        auto inv = finite ? complex_inverse(m) : std::nullopt;
        if (!inv) {
            s.condition = std::numeric_limits<double>::infinity();
            s.deviation = std::numeric_limits<double>::infinity();
            s.ill_conditioned = true;
            report.samples.push_back(s);
            continue;
        }
        s.condition = inf_norm(m) * inf_norm(*inv);
        s.ill_conditioned = !(s.condition <= condition_bound);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<Cx> prod(n, 0.0);
                for (std::size_t a = 0; a < n; ++a) {
                    if (m[i][a] == 0.0) continue;
                    for (std::size_t b = 0; b < n; ++b) {
                        if (m[j][b] == 0.0) continue;
                        for (std::size_t k = 0; k < n; ++k)
                            if (!src.at(a, b, k).is_zero()) prod[k] += m[i][a] * m[j][b] * src.at(a, b, k).to_complex();
                    }
                }
                for (std::size_t k = 0; k < n; ++k) {
                    Cx c = 0.0;
                    for (std::size_t a = 0; a < n; ++a) c += prod[a] * (*inv)[a][k];
                    s.deviation = std::max(s.deviation, std::abs(c - tgt.at(i, j, k).to_complex()));
                }
            }
        report.samples.push_back(s);
    }
    return report;
}

std::vector<Verdict> verify_many(const std::vector<DegenerationWitness>& ws, unsigned jobs) {
    std::vector<Verdict> out(ws.size());
    std::vector<std::exception_ptr> errors(ws.size());
    // warm the shared caches before threads start
    if (!ws.empty()) (void)catalog::entry_fingerprint("C5");
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < ws.size(); k = next++) {
            try {
                out[k] = verify(ws[k]);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(ws.size())));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace nilcert
