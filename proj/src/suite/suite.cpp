#include "suite/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "io/files.hpp"

namespace nilcert {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < count; k = next++) {
            try {
                fn(k);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

// Independent generator per (claim, role, index) so results do not depend on scheduling.
Rng task_rng(std::uint64_t seed, std::size_t claim, std::size_t role, std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(claim), static_cast<std::uint32_t>(role), static_cast<std::uint32_t>(index)};
    return Rng(seq);
}

std::string index_name(const Index3& idx) {
    return "c(" + std::to_string(idx[0] + 1) + "," + std::to_string(idx[1] + 1) + "," + std::to_string(idx[2] + 1) + ")";
}

nlohmann::ordered_json edges_json(const EdgeSet& edges) {
    auto j = nlohmann::ordered_json::array();
    for (const auto& [a, b] : edges) j.push_back({a, b});
    return j;
}

nlohmann::ordered_json matrix_json(const Matrix<GaussianRational>& m) {
    auto j = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
        j.push_back(row);
    }
    return j;
}

}  // namespace

bool CertificateOutcome::ok() const {
    for (const auto& s : sources)
        if (!s.satisfies || !s.probe.precondition_ok || s.probe.counterexample) return false;
    for (const auto& t : targets)
        if (t.escape.status == EscapeStatus::Refuted || t.reachable) return false;
    return true;
}

bool SuiteResult::witnesses_ok() const {
    if (witnesses.empty()) return false;
    for (const auto& w : witnesses)
        if (w.verdict.status != VerdictStatus::Verified || !w.verdict.der_check_ok) return false;
    return true;
}

bool SuiteResult::certificates_ok() const {
    if (certificates.empty()) return false;
    return std::all_of(certificates.begin(), certificates.end(), [](const auto& c) { return c.ok(); });
}

bool SuiteResult::graph_ok() const {
    return diff.empty() && graph_sources == std::vector<std::string>{"A_01"} && screening.unexplained.empty();
}

std::vector<std::filesystem::path> list_files(const std::filesystem::path& dir, const std::string& extension) {
    if (!std::filesystem::is_directory(dir)) throw Error(ErrorKind::Io, "not a directory: " + dir.string());
    std::vector<std::filesystem::path> out;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == extension) out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

nlohmann::ordered_json verdict_to_json(const Verdict& v) {
    nlohmann::ordered_json j;
    j["source"] = v.source;
    j["target"] = v.target;
    j["status"] = verdict_status_name(v.status);
    if (v.offending) j["offending"] = index_name(*v.offending);
    j["determinant"] = v.determinant.to_string();
    j["exceptional_t"] = {{"polynomial", v.exceptional.polynomial.to_string()},
                          {"rational_roots", nlohmann::ordered_json::array()},
                          {"roots_complete", v.exceptional.roots_complete}};
    for (const auto& r : v.exceptional.rational_roots) j["exceptional_t"]["rational_roots"].push_back(r.to_string());
    j["der"] = {{"source", v.der_source}, {"target", v.der_target}, {"ok", v.der_check_ok}};
    auto details = nlohmann::ordered_json::array();
    for (const auto& d : v.details) {
        nlohmann::ordered_json e;
        e["entry"] = index_name(d.index);
        e["value"] = d.value.to_string();
        switch (d.limit.status) {
            case LimitStatus::Exists: e["limit"] = d.limit.value.to_string(); break;
            case LimitStatus::Diverges: e["limit"] = "DIVERGES"; break;
            case LimitStatus::BranchAmbiguous: e["limit"] = "BRANCH_AMBIGUOUS"; break;
        }
        e["expected"] = d.expected.to_string();
        e["ok"] = d.ok;
        details.push_back(e);
    }
    j["details"] = details;
    j["notes"] = v.notes;
    return j;
}

nlohmann::ordered_json numeric_to_json(const NumericReport& r, double tolerance) {
    auto j = nlohmann::ordered_json::array();
    for (const auto& s : r.samples) {
        nlohmann::ordered_json e;
        e["t"] = s.t.imag() == 0.0 ? nlohmann::ordered_json(s.t.real()) : nlohmann::ordered_json({s.t.real(), s.t.imag()});
        e["max_deviation"] = std::isfinite(s.deviation) ? nlohmann::ordered_json(s.deviation) : nlohmann::ordered_json("inf");
        e["condition"] = std::isfinite(s.condition) ? nlohmann::ordered_json(s.condition) : nlohmann::ordered_json("inf");
        e["status"] = s.deviation < tolerance ? "OK" : s.ill_conditioned ? "ILL_CONDITIONED" : "OVER_TOLERANCE";
        j.push_back(e);
    }
    return j;
}

nlohmann::ordered_json environment_stamp() {
    nlohmann::ordered_json j;
#if defined(__clang__)
    j["compiler"] = std::string("clang ") + __clang_version__;
#elif defined(__GNUC__)
    j["compiler"] = std::string("gcc ") + __VERSION__;
#endif
    j["gmp"] = gmp_version;
    j["cxx_standard"] = __cplusplus;
    j["hardware_threads"] = std::thread::hardware_concurrency();
    return j;
}

SuiteResult run_suite(const SuiteOptions& options) {
    SuiteResult r;
    r.options = options;
    const auto data = options.data_dir;
    r.reference = read_edge_list(data / "reference_graph.edges");
    (void)catalog::entry_fingerprint("C5");  // fill shared caches before threads start

    auto t0 = Clock::now();
    const auto witness_files = list_files(data / "witnesses", ".wit");
    r.witnesses.resize(witness_files.size());
    for (std::size_t k = 0; k < witness_files.size(); ++k) {
        r.witnesses[k].id = witness_files[k].stem().string();
        r.witnesses[k].witness = read_witness(witness_files[k]);
    }
    std::vector<std::complex<double>> ts(options.t_samples.begin(), options.t_samples.end());
    parallel_for(r.witnesses.size(), options.jobs, [&](std::size_t k) {
        auto& w = r.witnesses[k];
        w.verdict = verify(w.witness);
        w.in_reference = r.reference.count({w.verdict.source, w.verdict.target}) > 0;
        if (!w.in_reference) w.verdict.notes.push_back("implied by transitivity");
        if (w.verdict.status == VerdictStatus::Verified) {
            w.numeric = numeric_crosscheck(w.witness, ts, options.condition_bound);
            for (const auto& s : w.numeric.samples)
                if (!s.ill_conditioned && !(s.deviation < options.numeric_tolerance)) w.numeric_ok = false;
        }
    });
    r.seconds_witnesses = since(t0);

    t0 = Clock::now();
    std::vector<Verdict> verified;
    for (const auto& w : r.witnesses)
        if (w.verdict.status == VerdictStatus::Verified) verified.push_back(w.verdict);
    r.graph = build_graph(verified);
    r.closure = transitive_closure(r.graph);
    r.hasse = hasse_reduction(r.graph);
    r.diff = compare_with_reference(r.graph, r.reference);
    const EdgeSet ref_hasse = hasse_reduction(r.reference);
    for (const auto& e : r.reference)
        if (!ref_hasse.count(e)) r.reference_non_cover.insert(e);
    for (const auto& n : r.graph.nodes) {
        bool incoming = false;
        for (const auto& e : r.graph.edges) incoming = incoming || (e.target == n.name && e.source != n.name);
        if (!incoming) r.graph_sources.push_back(n.name);
    }
    r.seconds_graph = since(t0);

    t0 = Clock::now();
    const auto cert_files = list_files(data / "certificates", ".cert");
    r.certificates.resize(cert_files.size());
    std::vector<NonDegenerationClaim> claims;
    for (std::size_t k = 0; k < cert_files.size(); ++k) {
        r.certificates[k].claim = read_certificate(cert_files[k]);
        claims.push_back(r.certificates[k].claim);
    }
    // one task per source probe and per target escape
    struct Task {
        std::size_t cert, slot;
        bool source;
    };
    std::vector<Task> tasks;
    for (std::size_t c = 0; c < r.certificates.size(); ++c) {
        auto& co = r.certificates[c];
        co.sources.resize(co.claim.sources.size());
        co.targets.resize(co.claim.targets.size());
        for (std::size_t s = 0; s < co.sources.size(); ++s) tasks.push_back({c, s, true});
        for (std::size_t t = 0; t < co.targets.size(); ++t) tasks.push_back({c, t, false});
    }
    parallel_for(tasks.size(), options.jobs, [&](std::size_t k) {
        const Task& task = tasks[k];
        auto& co = r.certificates[task.cert];
        Rng rng = task_rng(options.seed, task.cert, task.source ? 0 : 1, task.slot);
        if (task.source) {
            auto& so = co.sources[task.slot];
            so.name = co.claim.sources[task.slot];
            so.uses_witness = co.claim.witness.count(so.name) > 0;
            const ConstTable table = co.claim.source_table(so.name);
            so.satisfies = satisfies(co.claim.spec, table);
            so.probe = borel_stability_probe(co.claim.spec, table, options.probe_samples, rng);
        } else {
            auto& to = co.targets[task.slot];
            to.name = co.claim.targets[task.slot];
            to.escape = escape_evidence(co.claim.spec, catalog::get(to.name).table, options.samples, rng);
            for (const auto& s : co.claim.sources) to.reachable = to.reachable || r.closure.count({s, to.name}) > 0;
        }
    });
    r.screening = screen_non_degenerations(r.closure, claims);
    r.seconds_certificates = since(t0);
    return r;
}

nlohmann::ordered_json SuiteResult::to_json(bool with_timings) const {
    using J = nlohmann::ordered_json;
    J j;
    j["tool"] = "nilcert";
    j["options"] = {{"seed", options.seed},
                    {"samples", options.samples},
                    {"probe_samples", options.probe_samples},
                    {"t_samples", options.t_samples},
                    {"condition_bound", options.condition_bound},
                    {"numeric_tolerance", options.numeric_tolerance}};
    j["catalog_assumptions"] = {"A_1^k in certificates is the k-th power of the whole algebra",
                                "catalog fingerprints leave A_11 and A_15 as one candidate class"};

    J ws = J::array();
    for (const auto& w : witnesses) {
        J e{{"id", w.id}};
        e.update(verdict_to_json(w.verdict));
        e["reference_edge"] = w.in_reference;
        e["numeric"] = numeric_to_json(w.numeric, options.numeric_tolerance);
        e["numeric_ok"] = w.numeric_ok;
        ws.push_back(e);
    }
    j["witnesses"] = ws;

    J cs = J::array();
    for (const auto& c : certificates) {
        J e;
        e["id"] = c.claim.id;
        e["spec"] = c.claim.spec.to_string();
        e["notes"] = c.claim.notes;
        e["sources"] = J::array();
        for (const auto& s : c.sources) {
            J so{{"name", s.name}, {"uses_witness", s.uses_witness}, {"satisfies", s.satisfies}};
            if (s.uses_witness) so["witness_basis"] = matrix_json(c.claim.witness.at(s.name));
            so["borel_probe"] = {{"samples", s.probe.samples}, {"violation", s.probe.counterexample ? matrix_json(*s.probe.counterexample) : J(nullptr)}};
            e["sources"].push_back(so);
        }
        e["targets"] = J::array();
        for (const auto& t : c.targets) {
            J to{{"name", t.name}, {"status", escape_status_name(t.escape.status)}};
            to["invariant_certificate"] = t.escape.invariant_certificate ? J(*t.escape.invariant_certificate) : J(nullptr);
            to["samples"] = t.escape.samples;
            to["random_hits"] = t.escape.random_hits;
            if (t.escape.not_a_proof) to["flag"] = "NOT_A_PROOF";
            to["reachable_in_graph"] = t.reachable;
            e["targets"].push_back(to);
        }
        e["ok"] = c.ok();
        cs.push_back(e);
    }
    j["certificates"] = cs;

    j["graph"] = {{"edges", graph.edges.size()},
                  {"closure_edges", closure.size()},
                  {"hasse_edges", edges_json(hasse)},
                  {"reference_edges", reference.size()},
                  {"reference_implied_edges", edges_json(reference_non_cover)},
                  {"diff",
                   {{"closure_only_in_graph", edges_json(diff.closure_only_in_graph)},
                    {"closure_only_in_reference", edges_json(diff.closure_only_in_reference)},
                    {"hasse_only_in_graph", edges_json(diff.hasse_only_in_graph)},
                    {"hasse_only_in_reference", edges_json(diff.hasse_only_in_reference)}}},
                  {"sources", graph_sources}};
    j["screening"] = {{"non_edges", screening.non_edges.size()},
                      {"explained", screening.explained.size()},
                      {"unexplained", edges_json(screening.unexplained)}};

    std::size_t verified = 0;
    for (const auto& w : witnesses) verified += w.verdict.status == VerdictStatus::Verified;
    j["summary"] = {{"witnesses_verified", verified},
                    {"witnesses_total", witnesses.size()},
                    {"witnesses_ok", witnesses_ok()},
                    {"certificates_ok", certificates_ok()},
                    {"graph_ok", graph_ok()},
                    {"all_pass", all_pass()}};
    if (with_timings) {
        j["timings_seconds"] = {{"witnesses", seconds_witnesses}, {"graph", seconds_graph}, {"certificates", seconds_certificates}};
        j["environment"] = environment_stamp();
    }
    return j;
}

}  // namespace nilcert
