#ifndef NILCERT_GRAPH_GRAPH_HPP
#define NILCERT_GRAPH_GRAPH_HPP

#include <filesystem>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "certificates/certificates.hpp"
#include "degeneration/degeneration.hpp"

namespace nilcert {

using Edge = std::pair<std::string, std::string>;
using EdgeSet = std::set<Edge>;

struct GraphNode {
    std::string name;
    std::size_t der_level = 0;
    friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

struct GraphEdge {
    std::string source;
    std::string target;
    std::string provenance;  // witness id, "trivial-to-zero" or "transitive"
    friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct DegenerationGraph {
    std::vector<GraphNode> nodes;  // catalog order
    std::vector<GraphEdge> edges;  // sorted by (source, target)

    EdgeSet edge_set() const;
    friend bool operator==(const DegenerationGraph&, const DegenerationGraph&) = default;
};

/// Graph over all catalog names with one edge per VERIFIED proper verdict and
/// X -> C5 for every X. Throws InvalidArgument on unverified input and Cycle
/// when the edges are not acyclic.
DegenerationGraph build_graph(const std::vector<Verdict>& verified);

EdgeSet transitive_closure(const EdgeSet& edges);
EdgeSet hasse_reduction(const EdgeSet& edges);
EdgeSet transitive_closure(const DegenerationGraph& g);
EdgeSet hasse_reduction(const DegenerationGraph& g);

/// The graph restricted to the given edge view; edges absent from g are
/// labelled "transitive".
DegenerationGraph with_edges(const DegenerationGraph& g, const EdgeSet& view);

struct GraphDiff {
    EdgeSet closure_only_in_graph, closure_only_in_reference;
    EdgeSet hasse_only_in_graph, hasse_only_in_reference;
    bool empty() const;
};

GraphDiff compare_with_reference(const DegenerationGraph& g, const EdgeSet& reference);

/// "source target" per line, '#' comments allowed.
EdgeSet parse_edge_list(const std::string& text);
EdgeSet read_edge_list(const std::filesystem::path& path);

/// Levels of the dim Der axis, as drawn.
const std::vector<std::size_t>& der_levels();

std::string emit_dot(const DegenerationGraph& g);
std::string emit_json(const DegenerationGraph& g);
DegenerationGraph parse_graph_json(const std::string& text);

/// Ordered pairs X != Y with no path X -> Y that are not explained by a failed
/// necessary condition or by a certificate, closed under
/// X' -> X, X' -/-> Y' and Y -> Y' implying X -/-> Y.
struct ScreeningReport {
    EdgeSet non_edges;
    EdgeSet explained;
    EdgeSet unexplained;
};
ScreeningReport screen_non_degenerations(const EdgeSet& closure, const std::vector<NonDegenerationClaim>& claims);

}  // namespace nilcert

#endif
