#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rectiplan/errors.hpp"

namespace rectiplan {

// Undirected multigraph over dense 0-based vertex ids. Multi-edges are
// allowed (parallel bundles of single-edge chains need them), self-loops are
// not. Immutable after construction.
struct graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;  // vertex -> incident edge ids

    int m() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    int other_end(int e, int v) const {
        return edges[e].first == v ? edges[e].second : edges[e].first;
    }
};

// Builds adjacency and validates vertex ranges and the no-self-loop rule.
graph make_graph(int n, std::vector<std::pair<int, int>> edges);

struct graph_class {
    bool is_degree4 = false;
    bool is_biconnected = false;
    bool is_simple_cycle = false;
    bool is_sp = false;
    bool is_independent_parallel = false;
};

// Structural classification. Never fails on a valid graph; flags that need
// the decomposition (is_sp, is_independent_parallel) are false whenever the
// decomposition is not defined for the input (e.g. not biconnected).
graph_class classify(const graph& g);

// Connected, at least two vertices, minimum degree 2, no cut vertex.
// Parallel edges count as distinct, so the digon qualifies.
bool is_biconnected(const graph& g);

// Connected and every vertex has degree exactly 2 (the digon qualifies).
bool is_simple_cycle_graph(const graph& g);

// Accepts two formats. Text: first line "n m", then m lines "u v". JSON:
// {"n": int, "edges": [[u,v], ...]}. Input starting with '{' is treated as
// JSON. Throws parse_error with a 1-based line number.
graph parse_graph(std::string_view text);

std::string to_text(const graph& g);
std::string to_json(const graph& g);

}  // namespace rectiplan
