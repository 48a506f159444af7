#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>

#include "io/files.hpp"
#include "suite/suite.hpp"

using namespace nilcert;

namespace {

const std::filesystem::path kData = NILCERT_DATA_DIR;

Verdict verified(const std::string& s, const std::string& t) {
    Verdict v;
    v.source = s;
    v.target = t;
    return v;
}

const std::vector<Verdict>& shipped_verdicts() {
    static const auto vs = [] {
        std::vector<DegenerationWitness> ws;
        for (const auto& p : list_files(kData / "witnesses", ".wit")) ws.push_back(read_witness(p));
        return verify_many(ws, 1);
    }();
    return vs;
}

const DegenerationGraph& full() {
    static const auto g = build_graph(shipped_verdicts());
    return g;
}

const EdgeSet& reference_edges() {
    static const auto r = read_edge_list(kData / "reference_graph.edges");
    return r;
}

}  // namespace

TEST_CASE("building") {
    auto empty = build_graph({});
    CHECK(empty.nodes.size() == 25);
    CHECK(empty.edges.size() == 24);
    for (const auto& e : empty.edges) CHECK(e.target == "C5");

    try {
        (void)build_graph({verified("A_05", "A_08"), verified("A_08", "A_05")});
        FAIL("expected CYCLE");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Cycle);
    }
    Verdict failed = verified("A_05", "A_08");
    failed.status = VerdictStatus::LimitMismatch;
    CHECK_THROWS_AS((void)build_graph({failed}), Error);
}

TEST_CASE("closure and reduction") {
    const auto closure = transitive_closure(full());
    CHECK(closure.count({"A_09", "A_12"}));
    CHECK(closure.count({"A_01", "A_24"}));

    EdgeSet chain{{"a", "b"}, {"b", "c"}, {"a", "c"}};
    CHECK(hasse_reduction(chain) == EdgeSet{{"a", "b"}, {"b", "c"}});
    CHECK(transitive_closure(chain) == chain);

    CHECK(transitive_closure(closure) == closure);
    CHECK(transitive_closure(hasse_reduction(full())) == closure);

    const auto& levels = der_levels();
    CHECK(levels == std::vector<std::size_t>{5, 6, 7, 8, 9, 10, 11, 12, 14, 17, 25});
    for (const auto& [a, b] : closure)
        if (a != b) CHECK(catalog::entry_fingerprint(a).dim_der < catalog::entry_fingerprint(b).dim_der);
}

TEST_CASE("A_01 is the only source") {
    std::set<std::string> with_incoming;
    for (const auto& e : full().edges) with_incoming.insert(e.target);
    std::vector<std::string> sources;
    for (const auto& n : full().nodes)
        if (!with_incoming.count(n.name)) sources.push_back(n.name);
    CHECK(sources == std::vector<std::string>{"A_01"});
}

TEST_CASE("comparison with the reference drawing") {
    CHECK(reference_edges().size() == 44);
    CHECK(compare_with_reference(full(), reference_edges()).empty());

    EdgeSet ref_hasse = hasse_reduction(reference_edges());
    EdgeSet implied;
    std::set_difference(reference_edges().begin(), reference_edges().end(), ref_hasse.begin(), ref_hasse.end(),
                        std::inserter(implied, implied.end()));
    CHECK(implied == EdgeSet{{"A_11", "A_22"}, {"A_15", "A_22"}});

    EdgeSet removed = reference_edges();
    removed.erase({"A_23", "A_24"});
    auto d = compare_with_reference(full(), removed);
    CHECK(d.hasse_only_in_graph == EdgeSet{{"A_23", "A_24"}});
    CHECK(d.hasse_only_in_reference.empty());

    EdgeSet fabricated = reference_edges();
    fabricated.insert({"A_16", "A_18"});
    auto f = compare_with_reference(full(), fabricated);
    CHECK(f.hasse_only_in_reference.count({"A_16", "A_18"}));
    CHECK(f.closure_only_in_reference == EdgeSet{{"A_16", "A_18"}});
    // the A_16 certificate rules the fabricated edge out
    bool ruled_out = !necessary_conditions("A_16", "A_18").all_pass();
    for (const auto& p : list_files(kData / "certificates", ".cert")) {
        auto c = read_certificate(p);
        ruled_out = ruled_out || (std::count(c.sources.begin(), c.sources.end(), "A_16") &&
                                  std::count(c.targets.begin(), c.targets.end(), "A_18"));
    }
    CHECK(ruled_out);
}

TEST_CASE("emitters") {
    const auto dot = emit_dot(full());
    std::size_t boxes = 0;
    for (const auto& n : full().nodes) boxes += dot.find("\"" + n.name + "\"") != std::string::npos;
    CHECK(boxes == 25);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.back() == '\n');

    DegenerationGraph nothing;
    CHECK(emit_dot(nothing).find("digraph") != std::string::npos);
    CHECK(parse_graph_json(emit_json(nothing)) == nothing);

    CHECK(parse_graph_json(emit_json(full())) == full());
    const auto hasse = with_edges(full(), hasse_reduction(full()));
    CHECK(parse_graph_json(emit_json(hasse)) == hasse);
    CHECK_THROWS_AS((void)parse_graph_json("{\"nodes\": 3}"), Error);
}

TEST_CASE("screening explains every missing edge") {
    std::vector<NonDegenerationClaim> claims;
    for (const auto& p : list_files(kData / "certificates", ".cert")) claims.push_back(read_certificate(p));
    const auto closure = transitive_closure(full());
    auto report = screen_non_degenerations(closure, claims);
    CHECK(report.unexplained.empty());
    CHECK(report.explained.size() == report.non_edges.size());
    CHECK(report.non_edges.size() + closure.size() == 25 * 24);
    for (const auto& e : closure) CHECK_FALSE(report.non_edges.count(e));
}

TEST_CASE("edge lists") {
    auto e = parse_edge_list("# comment\nA_01 A_02\nA02  A_03 # trailing\n\n");
    CHECK(e == EdgeSet{{"A_01", "A_02"}, {"A_02", "A_03"}});
    CHECK_THROWS_AS((void)parse_edge_list("A_01\n"), Error);
    CHECK_THROWS_AS((void)parse_edge_list("A_01 A_77\n"), Error);
}
