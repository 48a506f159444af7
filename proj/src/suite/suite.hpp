#ifndef NILCERT_SUITE_SUITE_HPP
#define NILCERT_SUITE_SUITE_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "graph/graph.hpp"

namespace nilcert {

inline constexpr std::uint64_t kDefaultSeed = 20240611;
inline constexpr double kDefaultNumericTolerance = 1e-2;

struct SuiteOptions {
    std::filesystem::path data_dir;
    std::uint64_t seed = kDefaultSeed;
    std::size_t samples = 1000;       // escape search per target
    std::size_t probe_samples = 200;  // Borel probe per source
    std::vector<double> t_samples = {1e-4};
    double condition_bound = kDefaultConditionBound;
    double numeric_tolerance = kDefaultNumericTolerance;
    unsigned jobs = 1;
};

struct WitnessOutcome {
    std::string id;  // file stem
    DegenerationWitness witness;
    Verdict verdict;
    NumericReport numeric;
    bool in_reference = false;
    bool numeric_ok = true;  // every sample within tolerance or ill-conditioned
};

struct SourceOutcome {
    std::string name;
    bool uses_witness = false;
    bool satisfies = false;
    BorelProbeResult probe;
};

struct TargetOutcome {
    std::string name;
    EscapeRecord escape;
    bool reachable = false;  // a path source -> target exists in the verified graph
};

struct CertificateOutcome {
    NonDegenerationClaim claim;
    std::vector<SourceOutcome> sources;
    std::vector<TargetOutcome> targets;
    bool ok() const;
};

struct SuiteResult {
    SuiteOptions options;
    std::vector<WitnessOutcome> witnesses;
    std::vector<CertificateOutcome> certificates;
    DegenerationGraph graph;
    EdgeSet closure, hasse, reference;
    GraphDiff diff;
    EdgeSet reference_non_cover;  // drawn edges that are implied by others
    std::vector<std::string> graph_sources;  // nodes with no incoming proper edge
    ScreeningReport screening;
    double seconds_witnesses = 0, seconds_certificates = 0, seconds_graph = 0;

    bool witnesses_ok() const;
    bool certificates_ok() const;
    bool graph_ok() const;
    bool all_pass() const { return witnesses_ok() && certificates_ok() && graph_ok(); }
    nlohmann::ordered_json to_json(bool with_timings = true) const;
};

std::vector<std::filesystem::path> list_files(const std::filesystem::path& dir, const std::string& extension);

/// Runs every witness and certificate, then compares the graph with the reference edges.
SuiteResult run_suite(const SuiteOptions& options);

nlohmann::ordered_json verdict_to_json(const Verdict& v);
/// Per-sample status: OK within tolerance, else ILL_CONDITIONED (exempt) or OVER_TOLERANCE.
nlohmann::ordered_json numeric_to_json(const NumericReport& r, double tolerance = kDefaultNumericTolerance);
nlohmann::ordered_json environment_stamp();

}  // namespace nilcert

#endif
