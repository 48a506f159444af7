#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilcert/nilcert.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInputError = 2;

struct Owned {
    char* s = nullptr;
    ~Owned() { nilcert_string_free(s); }
};

// Structured error record on stderr; every library error is an input error.
int report_error(nilcert_status st) {
    nlohmann::ordered_json j;
    j["error"] = {{"kind", nilcert_status_name(st)}, {"message", nilcert_last_error()}};
    std::cerr << j.dump() << "\n";
    return kExitInputError;
}

int usage_error(const std::string& message) {
    nlohmann::ordered_json j;
    j["error"] = {{"kind", "INVALID_ARGUMENT"}, {"message", message}};
    std::cerr << j.dump() << "\n";
    return kExitInputError;
}

bool write_report(const std::string& path, const char* text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    return static_cast<bool>(out);
}

std::optional<std::uint64_t> parse_seed(const char* s) {
    try {
        std::size_t used = 0;
        auto v = std::stoull(s, &used, 0);
        if (used == std::string(s).size()) return v;
    } catch (const std::exception&) {
    }
    return std::nullopt;
}

template <class Fn>
int with_algebra(const std::string& path, Fn&& fn) {
    nilcert_algebra* a = nullptr;
    nilcert_status st = nilcert_algebra_read(path.c_str(), &a);
    if (st == NILCERT_E_IO && path.find('/') == std::string::npos && path.find('.') == std::string::npos)
        st = nilcert_algebra_from_catalog(path.c_str(), &a);
    if (st != NILCERT_OK) return report_error(st);
    Owned out;
    st = fn(a, &out.s);
    nilcert_algebra_free(a);
    if (st != NILCERT_OK) return report_error(st);
    std::cout << out.s << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for degenerations of 5-dimensional nilpotent commutative associative algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", nilcert_version());

    std::string data_dir;
    std::uint64_t seed = 0;
    std::size_t samples = 1000, probe_samples = 200;
    std::vector<double> t_samples;
    std::string report;
    unsigned jobs = 1;

    app.add_option("--data-dir", data_dir, "Directory with witnesses/, certificates/ and reference_graph.edges");
    auto* seed_opt = app.add_option("--seed", seed, "Random seed (falls back to NILCERT_SEED)");
    app.add_option("--samples", samples, "Random escape samples per certificate target");
    app.add_option("--probe-samples", probe_samples, "Borel probe samples per certificate source");
    app.add_option("--t-samples", t_samples, "Points for the numeric cross-check")->delimiter(',');
    app.add_option("--report", report, "Write the JSON report to this path");
    app.add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));

    auto* verify_all = app.add_subcommand("verify-all", "Check every witness, certificate and the reference graph");
    bool no_timings = false;
    verify_all->add_flag("--no-timings", no_timings, "Leave timings and environment out of the report");

    std::string witness_path;
    auto* verify = app.add_subcommand("verify", "Verify one witness file");
    verify->add_option("witness", witness_path)->required();

    std::string algebra_path;
    auto* invariants = app.add_subcommand("invariants", "Print the invariant fingerprint of an algebra");
    invariants->add_option("algebra", algebra_path, "Algebra file or catalog name")->required();
    auto* derivations = app.add_subcommand("derivations", "Print the derivation algebra");
    derivations->add_option("algebra", algebra_path, "Algebra file or catalog name")->required();
    auto* identify = app.add_subcommand("identify", "List catalog candidates for an algebra");
    identify->add_option("algebra", algebra_path, "Algebra file or catalog name")->required();

    std::string emit = "dot";
    bool closure = false, hasse = false;
    auto* graph = app.add_subcommand("graph", "Emit the degeneration graph");
    graph->add_option("--emit", emit)->check(CLI::IsMember({"dot", "json"}));
    auto* closure_flag = graph->add_flag("--closure", closure, "Transitive closure");
    graph->add_flag("--hasse", hasse, "Hasse reduction")->excludes(closure_flag);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return usage_error(e.what());
    }

    if (seed_opt->count() == 0) {
        nilcert_verify_options d;
        nilcert_verify_options_init(&d);
        seed = d.seed;
        if (const char* env = std::getenv("NILCERT_SEED"); env && *env) {
            auto s = parse_seed(env);
            if (!s) return usage_error("NILCERT_SEED is not an integer");
            seed = *s;
        }
    }

    auto emit_report = [&](const char* text) {
        if (!report.empty() && !write_report(report, text)) return usage_error("cannot write report: " + report);
        return 0;
    };

    if (*verify_all) {
        nilcert_verify_options o;
        nilcert_verify_options_init(&o);
        o.data_dir = data_dir.empty() ? nullptr : data_dir.c_str();
        o.seed = seed;
        o.samples = samples;
        o.probe_samples = probe_samples;
        o.t_samples = t_samples.empty() ? nullptr : t_samples.data();
        o.t_sample_count = t_samples.size();
        o.jobs = jobs;
        o.with_timings = no_timings ? 0 : 1;
        Owned out;
        int pass = 0;
        if (auto st = nilcert_verify_all(&o, &out.s, &pass); st != NILCERT_OK) return report_error(st);
        if (int rc = emit_report(out.s)) return rc;
        auto j = nlohmann::ordered_json::parse(out.s);
        const auto& s = j["summary"];
        std::cout << "witnesses: " << s["witnesses_verified"] << "/" << s["witnesses_total"] << " verified\n"
                  << "certificates: " << (s["certificates_ok"].get<bool>() ? "ok" : "FAILED") << "\n"
                  << "graph: " << (s["graph_ok"].get<bool>() ? "matches reference" : "MISMATCH") << "\n"
                  << (pass ? "PASS" : "FAIL") << "\n";
        return pass ? 0 : kExitFailure;
    }

    if (*verify) {
        nilcert_witness* w = nullptr;
        if (auto st = nilcert_witness_read(witness_path.c_str(), &w); st != NILCERT_OK) return report_error(st);
        Owned out;
        int ok = 0;
        auto st = nilcert_witness_verify(w, t_samples.empty() ? nullptr : t_samples.data(), t_samples.size(), &out.s, &ok);
        nilcert_witness_free(w);
        if (st != NILCERT_OK) return report_error(st);
        if (int rc = emit_report(out.s)) return rc;
        std::cout << out.s << "\n";
        return ok ? 0 : kExitFailure;
    }

    if (*invariants) return with_algebra(algebra_path, nilcert_algebra_invariants);
    if (*derivations) return with_algebra(algebra_path, nilcert_algebra_derivations);
    if (*identify) return with_algebra(algebra_path, nilcert_algebra_identify);

    if (*graph) {
        Owned out;
        const auto view = closure ? NILCERT_VIEW_CLOSURE : hasse ? NILCERT_VIEW_HASSE : NILCERT_VIEW_GRAPH;
        const auto format = emit == "json" ? NILCERT_GRAPH_JSON : NILCERT_GRAPH_DOT;
        if (auto st = nilcert_graph_emit(data_dir.empty() ? nullptr : data_dir.c_str(), format, view, &out.s); st != NILCERT_OK)
            return report_error(st);
        std::cout << out.s;
        return 0;
    }
    return kExitInputError;
}
