#include "graph/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "io/files.hpp"

namespace nilcert {

EdgeSet DegenerationGraph::edge_set() const {
    EdgeSet out;
    for (const auto& e : edges) out.emplace(e.source, e.target);
    return out;
}

namespace {

std::map<std::string, std::vector<std::string>> adjacency(const EdgeSet& edges) {
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& [a, b] : edges) adj[a].push_back(b);
    return adj;
}

void check_acyclic(const EdgeSet& edges) {
    auto adj = adjacency(edges);
    std::map<std::string, int> state;  // 1 on stack, 2 done
    std::vector<std::string> stack;
    std::function<void(const std::string&)> dfs = [&](const std::string& v) {
        state[v] = 1;
        stack.push_back(v);
        for (const auto& w : adj[v]) {
            if (state[w] == 1) {
                std::string cycle;
                auto it = std::find(stack.begin(), stack.end(), w);
                for (; it != stack.end(); ++it) cycle += *it + " -> ";
                throw Error(ErrorKind::Cycle, "degeneration cycle: " + cycle + w);
            }
            if (state[w] == 0) dfs(w);
        }
        stack.pop_back();
        state[v] = 2;
    };
    for (const auto& [v, out] : adj)
        if (state[v] == 0) dfs(v);
}

}  // namespace

DegenerationGraph build_graph(const std::vector<Verdict>& verified) {
    DegenerationGraph g;
    for (const auto& e : catalog::entries()) g.nodes.push_back({e.name, catalog::entry_fingerprint(e.name).dim_der});
    std::map<Edge, std::string> edges;
    for (const auto& v : verified) {
        if (v.status != VerdictStatus::Verified)
            throw Error(ErrorKind::InvalidArgument, "unverified witness " + v.source + " -> " + v.target);
        if (v.source == v.target) continue;
        edges.emplace(Edge{v.source, v.target}, "witness " + v.source + " -> " + v.target);
    }
    for (const auto& n : g.nodes)
        if (n.name != "C5") edges.emplace(Edge{n.name, "C5"}, "trivial-to-zero");
    EdgeSet set;
    for (const auto& [e, prov] : edges) {
        set.insert(e);
        g.edges.push_back({e.first, e.second, prov});
    }
    check_acyclic(set);
    return g;
}

EdgeSet transitive_closure(const EdgeSet& edges) {
    check_acyclic(edges);
    auto adj = adjacency(edges);
    EdgeSet out;
    for (const auto& [start, _] : adj) {
        std::vector<std::string> todo{start};
        std::set<std::string> seen;
        while (!todo.empty()) {
            std::string v = todo.back();
            todo.pop_back();
            for (const auto& w : adj[v])
                if (seen.insert(w).second) {
                    out.emplace(start, w);
                    todo.push_back(w);
                }
        }
    }
    return out;
}

EdgeSet hasse_reduction(const EdgeSet& edges) {
    EdgeSet closure = transitive_closure(edges);
    auto adj = adjacency(closure);
    EdgeSet out;
    for (const auto& [a, b] : closure) {
        bool implied = false;
        for (const auto& c : adj[a])
            if (c != b && closure.count({c, b})) {
                implied = true;
                break;
            }
        if (!implied) out.emplace(a, b);
    }
    return out;
}

EdgeSet transitive_closure(const DegenerationGraph& g) { return transitive_closure(g.edge_set()); }
EdgeSet hasse_reduction(const DegenerationGraph& g) { return hasse_reduction(g.edge_set()); }

DegenerationGraph with_edges(const DegenerationGraph& g, const EdgeSet& view) {
    std::map<Edge, std::string> prov;
    for (const auto& e : g.edges) prov[{e.source, e.target}] = e.provenance;
    DegenerationGraph out;
    out.nodes = g.nodes;
    for (const auto& e : view) {
        auto it = prov.find(e);
        out.edges.push_back({e.first, e.second, it == prov.end() ? "transitive" : it->second});
    }
    return out;
}

bool GraphDiff::empty() const {
    return closure_only_in_graph.empty() && closure_only_in_reference.empty() && hasse_only_in_graph.empty() &&
           hasse_only_in_reference.empty();
}

GraphDiff compare_with_reference(const DegenerationGraph& g, const EdgeSet& reference) {
    auto minus = [](const EdgeSet& a, const EdgeSet& b) {
        EdgeSet out;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
        return out;
    };
    GraphDiff d;
    const EdgeSet gc = transitive_closure(g), rc = transitive_closure(reference);
    const EdgeSet gh = hasse_reduction(g), rh = hasse_reduction(reference);
    d.closure_only_in_graph = minus(gc, rc);
    d.closure_only_in_reference = minus(rc, gc);
    d.hasse_only_in_graph = minus(gh, rh);
    d.hasse_only_in_reference = minus(rh, gh);
    return d;
}

EdgeSet parse_edge_list(const std::string& text) {
    EdgeSet out;
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;
        if (!(ls >> b) || (ls >> extra)) throw SyntaxError("expected 'source target' (line " + std::to_string(number) + ")", 0, number);
        out.emplace(catalog::canonical_name(a), catalog::canonical_name(b));
    }
    return out;
}

EdgeSet read_edge_list(const std::filesystem::path& path) { return parse_edge_list(read_text_file(path)); }

const std::vector<std::size_t>& der_levels() {
    static const std::vector<std::size_t> levels = {5, 6, 7, 8, 9, 10, 11, 12, 14, 17, 25};
    return levels;
}

std::string emit_dot(const DegenerationGraph& g) {
    std::ostringstream os;
    os << "digraph degenerations {\n";
    if (!g.nodes.empty()) {
        os << "  rankdir=TB;\n  node [shape=box, style=rounded];\n";
        std::map<std::size_t, std::vector<std::string>> by_level;
        for (const auto& n : g.nodes) by_level[n.der_level].push_back(n.name);
        std::vector<std::size_t> levels = der_levels();
        for (const auto& [lvl, _] : by_level)
            if (std::find(levels.begin(), levels.end(), lvl) == levels.end()) levels.push_back(lvl);
        std::sort(levels.begin(), levels.end());
        os << "  node [shape=plaintext];\n  ";
        for (std::size_t k = 0; k < levels.size(); ++k) os << (k ? " -> " : "") << "der_" << levels[k];
        os << " [style=invis];\n";
        for (auto lvl : levels) {
            os << "  { rank=same; der_" << lvl << " [label=\"" << lvl << "\"];";
            for (const auto& name : by_level[lvl]) os << " \"" << name << "\"";
            os << " }\n";
        }
        os << "  node [shape=box, style=rounded];\n";
        for (const auto& n : g.nodes)
            os << "  \"" << n.name << "\"" << (n.name == "A_01" ? " [style=\"rounded,filled\", fillcolor=gray80]" : "") << ";\n";
    }
    for (const auto& e : g.edges) os << "  \"" << e.source << "\" -> \"" << e.target << "\";\n";
    os << "}\n";
    return os.str();
}

std::string emit_json(const DegenerationGraph& g) {
    nlohmann::ordered_json j;
    j["nodes"] = nlohmann::ordered_json::array();
    for (const auto& n : g.nodes) j["nodes"].push_back({{"name", n.name}, {"der", n.der_level}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : g.edges) j["edges"].push_back({{"source", e.source}, {"target", e.target}, {"provenance", e.provenance}});
    return j.dump(2) + "\n";
}

DegenerationGraph parse_graph_json(const std::string& text) {
    DegenerationGraph g;
    try {
        auto j = nlohmann::json::parse(text);
        for (const auto& n : j.at("nodes")) g.nodes.push_back({n.at("name").get<std::string>(), n.at("der").get<std::size_t>()});
        for (const auto& e : j.at("edges"))
            g.edges.push_back({e.at("source").get<std::string>(), e.at("target").get<std::string>(), e.at("provenance").get<std::string>()});
    } catch (const nlohmann::json::exception& e) {
        throw SyntaxError(std::string("invalid graph JSON: ") + e.what(), 0);
    }
    return g;
}

ScreeningReport screen_non_degenerations(const EdgeSet& closure, const std::vector<NonDegenerationClaim>& claims) {
    ScreeningReport r;
    const auto names = catalog::names();
    for (const auto& x : names)
        for (const auto& y : names)
            if (x != y && !closure.count({x, y})) r.non_edges.emplace(x, y);
    EdgeSet primary;
    for (const auto& [x, y] : r.non_edges)
        if (!necessary_conditions(x, y).all_pass()) primary.emplace(x, y);
    for (const auto& c : claims)
        for (const auto& s : c.sources)
            for (const auto& t : c.targets) primary.emplace(s, t);
    auto reach_from = [&](const std::string& a) {
        std::vector<std::string> out{a};
        for (const auto& n : names)
            if (closure.count({a, n})) out.push_back(n);
        return out;
    };
    auto reach_to = [&](const std::string& b) {
        std::vector<std::string> out{b};
        for (const auto& n : names)
            if (closure.count({n, b})) out.push_back(n);
        return out;
    };
    for (const auto& [a, b] : primary)
        for (const auto& x : reach_from(a))
            for (const auto& y : reach_to(b))
                if (r.non_edges.count({x, y})) r.explained.emplace(x, y);
    for (const auto& e : r.non_edges)
        if (!r.explained.count(e)) r.unexplained.insert(e);
    return r;
}

}  // namespace nilcert
