#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rectiplan/graph.hpp"
#include "rectiplan/spirality.hpp"
#include "rectiplan/spq_tree.hpp"

namespace rectiplan {

// =====================================================================
// Variable-embedding rectilinear planarity test
// =====================================================================
//
// Linear-time decision over the SPQ* tree: for every directed tree
// edge mu -> nu, the table holds the spirality set of the component
// hanging off mu when the tree is rooted beyond nu.  Entries are
// filled lazily and memoized, so trying every root stays linear: at
// most two entries exist per tree edge.

class spirality_table {
  public:
    explicit spirality_table(const spq_tree& t);

    //! D[mu -> nu]: set of mu's component, directed toward neighbor nu.
    const spirality_set& toward(int mu, int nu);

    long long computed() const { return computed_; }

  private:
    const spq_tree& tree_;
    std::vector<int> offset_;           // node -> first directed slot
    std::vector<int> owner_;            // directed slot -> node
    std::vector<spirality_set> val_;
    std::vector<char> known_;
    std::vector<int> cross_;            // slot of (mu -> nu) -> slot of (nu -> mu)

    // Per S node, running summaries over prefixes and suffixes of the
    // neighbor list.  Direction i merges pre[i] with suf[i+1], so it
    // only ever waits on the other neighbors' incoming sets; waiting
    // on its own reverse direction would deadlock the lazy fill.
    std::vector<std::vector<series_summary>> s_pre_, s_suf_;
    std::vector<int> s_pre_n_;          // prefix entries folded, -1 = untouched
    std::vector<int> s_suf_n_;          // lowest suffix index folded
    long long computed_ = 0;

    int slot(int mu, int nu) const;
    bool fill(int s);                   // true when the entry became known
};

struct test_options {
    bool all_roots = false;   // evaluate every root even after a hit
    bool keep_table = false;  // hand the tree and table back to the caller
};

struct test_report {
    bool rectilinear_planar = false;

    // Q* node whose chain hosts the reference corner assignment; -1
    // when the graph is a plain cycle and no tree exists.
    std::optional<int> witness_root;

    int roots_tried = 0;
    std::string reason;        // empty when feasible

    long long sets_computed = 0;
    long long tree_edges = 0;

    // all_roots only: (root Q* id, set of the component facing it)
    std::vector<std::pair<int, spirality_set>> per_root;

    // keep_table only
    std::shared_ptr<spq_tree> tree;
    std::shared_ptr<spirality_table> table;
};

//! Decides bend-free drawability.  Throws reject_error on graphs
//! outside the supported class.
test_report test_rectilinear(const graph& g, const test_options& opt = {});

}  // namespace rectiplan
