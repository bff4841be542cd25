#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rectiplan/graph.hpp"

namespace rectiplan {

// =====================================================================
// SPQ* decomposition tree
// =====================================================================
//
// Unrooted decomposition of a biconnected series-parallel graph with
// no degree-2 vertex kept explicit: maximal chains through degree-2
// vertices collapse into Q* leaves.  Internal nodes are S (series) and
// P (parallel); no two S nodes and no two P nodes are adjacent.
//
// Poles of P and Q* nodes are fixed by the graph itself.  S nodes keep
// their incident segments in cyclic order around the skeleton cycle:
// neighbor i spans the vertex interval (cut[i], cut[(i + 1) % k]).

enum class spq_kind { S, P, Qstar };

struct spq_node {
    spq_kind kind = spq_kind::Qstar;

    // Unordered pole pair (P and Q* only; S poles depend on the root).
    int pole_u = -1;
    int pole_v = -1;

    // Tree neighbors.  For S nodes these follow the cyclic skeleton
    // order; cut[i] is the skeleton vertex shared by neighbors i-1 and
    // i, so neighbor i spans cut[i] .. cut[(i+1) % k].
    std::vector<int> neighbors;
    std::vector<int> cuts;

    // Q* payload: the chain's edges and vertices in path order,
    // chain_verts.front() .. chain_verts.back() being the attachments.
    std::vector<int> chain_edges;
    std::vector<int> chain_verts;

    int chain_length() const { return static_cast<int>(chain_edges.size()); }
};

struct spq_tree {
    std::vector<spq_node> nodes;
    std::vector<int> qstar_nodes;  // ids of the Q* leaves
    std::vector<int> edge_owner;   // graph edge -> Q* node owning it
    int graph_n = 0;
};

//! Decomposes a biconnected degree<=4 series-parallel graph that is
//! not a simple cycle.  Throws reject_error otherwise.
spq_tree build_spq_tree(const graph& g);

//! True when no graph vertex serves as a pole of two parallel nodes.
bool independent_parallel_poles(const spq_tree& t);

// =====================================================================
// Rooted view
// =====================================================================
//
// Rooting at a Q* leaf rho orients every tree edge toward rho and
// assigns ordered poles (first pole on the root side).  S children
// appear in path order from the node's first pole to its second.

struct rooted_view {
    int root = -1;
    std::vector<int> parent;                    // -1 at the root
    std::vector<std::vector<int>> children;
    std::vector<std::pair<int, int>> poles;     // ordered (u, v)
    std::vector<int> post_order;
    std::vector<int> tin, tout;                 // DFS intervals over tree nodes

    bool in_subtree(int node, int anc) const {
        return tin[anc] <= tin[node] && tout[node] <= tout[anc];
    }
};

rooted_view root_at(const spq_tree& t, int rho);

//! For a rooted view, lists the graph vertices strictly inside the
//! component of `node` (everything except its two poles).
std::vector<int> interior_vertices(const spq_tree& t, const rooted_view& rv,
                                   int node);

std::string dump_tree(const spq_tree& t);

}  // namespace rectiplan
