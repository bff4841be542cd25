#include "rectiplan/tester.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "rectiplan/errors.hpp"

namespace rectiplan {

// =====================================================================
// directed table
// =====================================================================

spirality_table::spirality_table(const spq_tree& t) : tree_(t) {
    int total = 0;
    offset_.resize(t.nodes.size());
    for (size_t i = 0; i < t.nodes.size(); ++i) {
        offset_[i] = total;
        total += static_cast<int>(t.nodes[i].neighbors.size());
    }
    owner_.resize(total);
    for (size_t i = 0; i < t.nodes.size(); ++i)
        for (size_t j = 0; j < t.nodes[i].neighbors.size(); ++j)
            owner_[offset_[i] + j] = static_cast<int>(i);
    val_.resize(total);
    known_.assign(total, 0);
    s_pre_.resize(t.nodes.size());
    s_suf_.resize(t.nodes.size());
    s_pre_n_.assign(t.nodes.size(), -1);
    s_suf_n_.assign(t.nodes.size(), -1);

    // pair up the two directions of every tree edge
    cross_.assign(total, -1);
    std::unordered_map<std::uint64_t, int> open;
    open.reserve(total);
    for (size_t m = 0; m < t.nodes.size(); ++m) {
        int mu = static_cast<int>(m);
        const auto& nb = t.nodes[m].neighbors;
        for (size_t i = 0; i < nb.size(); ++i) {
            int nu = nb[i];
            int a = std::min(mu, nu);
            int b = std::max(mu, nu);
            std::uint64_t key =
                (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
            int me = offset_[mu] + static_cast<int>(i);
            auto it = open.find(key);
            if (it == open.end()) {
                open.emplace(key, me);
            } else {
                cross_[me] = it->second;
                cross_[it->second] = me;
                open.erase(it);
            }
        }
    }
    for (int s = 0; s < total; ++s)
        if (cross_[s] < 0) throw internal_error("unpaired tree edge direction");
}

int spirality_table::slot(int mu, int nu) const {
    const auto& nb = tree_.nodes[mu].neighbors;
    for (size_t i = 0; i < nb.size(); ++i)
        if (nb[i] == nu) return offset_[mu] + static_cast<int>(i);
    throw internal_error("nodes are not tree neighbors");
}

// Fills slot s if its dependencies are ready; otherwise reports which
// are missing by pushing them through the return path of toward().
bool spirality_table::fill(int s) {
    int mu = owner_[s];
    const spq_node& nd = tree_.nodes[mu];

    switch (nd.kind) {
    case spq_kind::Qstar:
        val_[s] = qstar_set(nd.chain_length());
        break;

    case spq_kind::S: {
        int i = s - offset_[mu];
        int k = static_cast<int>(nd.neighbors.size());
        if (s_pre_n_[mu] < 0) {
            s_pre_[mu].resize(k + 1);
            s_suf_[mu].resize(k + 1);
            s_pre_n_[mu] = 0;
            s_suf_n_[mu] = k;
        }
        auto& pre = s_pre_[mu];
        auto& suf = s_suf_[mu];
        int& pn = s_pre_n_[mu];
        int& sn = s_suf_n_[mu];
        while (pn < k) {
            int dep = cross_[offset_[mu] + pn];
            if (!known_[dep]) break;
            pre[pn + 1] = s_summary_add(pre[pn], val_[dep]);
            ++pn;
        }
        while (sn > 0) {
            int dep = cross_[offset_[mu] + sn - 1];
            if (!known_[dep]) break;
            suf[sn - 1] = s_summary_add(suf[sn], val_[dep]);
            --sn;
        }
        if (pn < i || sn > i + 1) return false;
        val_[s] = s_node_set(s_summary_merge(pre[i], suf[i + 1]));
        break;
    }

    case spq_kind::P: {
        spirality_set in[3];
        int k = 0;
        for (size_t i = 0; i < nd.neighbors.size(); ++i) {
            int me = offset_[mu] + static_cast<int>(i);
            if (me == s) continue;
            int dep = cross_[me];
            if (!known_[dep]) return false;
            if (k == 3) throw internal_error("parallel node with too many components");
            in[k++] = val_[dep];
        }
        if (k == 2)
            val_[s] = p2_set(in[0], in[1]);
        else if (k == 3)
            val_[s] = p3_set(in[0], in[1], in[2]);
        else
            throw internal_error("parallel node with too few components");
        break;
    }
    }

    known_[s] = 1;
    ++computed_;
    return true;
}

const spirality_set& spirality_table::toward(int mu, int nu) {
    int want = slot(mu, nu);
    std::vector<int> stack{want};
    while (!stack.empty()) {
        int s = stack.back();
        if (known_[s]) {
            stack.pop_back();
            continue;
        }
        if (fill(s)) {
            stack.pop_back();
            continue;
        }
        // queue the missing dependencies: incoming sets of every
        // neighbor on the far side of s
        int mu_s = owner_[s];
        const spq_node& nd = tree_.nodes[mu_s];
        size_t before = stack.size();
        for (size_t i = 0; i < nd.neighbors.size(); ++i) {
            int me = offset_[mu_s] + static_cast<int>(i);
            if (me == s) continue;
            int dep = cross_[me];
            if (!known_[dep]) stack.push_back(dep);
        }
        if (stack.size() == before)
            throw internal_error("table entry stuck with no missing inputs");
    }
    return val_[want];
}

// =====================================================================
// whole-graph verdict
// =====================================================================

test_report test_rectilinear(const graph& g, const test_options& opt) {
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) > 4)
            throw reject_error(reject_reason::degree_exceeded,
                               "vertex " + std::to_string(v));
    if (!is_biconnected(g))
        throw reject_error(reject_reason::not_biconnected);

    test_report r;
    if (is_simple_cycle_graph(g)) {
        // a cycle draws as a rectangle once four corners fit on it
        if (g.n >= 4) {
            r.rectilinear_planar = true;
            r.witness_root = -1;
        } else {
            r.reason = "cycle shorter than four edges";
        }
        return r;
    }

    auto tree = std::make_shared<spq_tree>(build_spq_tree(g));
    if (!independent_parallel_poles(*tree))
        throw reject_error(reject_reason::not_independent_parallel);

    auto table = std::make_shared<spirality_table>(*tree);
    for (int rho : tree->qstar_nodes) {
        int c = tree->nodes[rho].neighbors.front();
        const spirality_set& s = table->toward(c, rho);
        ++r.roots_tried;
        if (opt.all_roots) r.per_root.emplace_back(rho, s);
        if (!r.rectilinear_planar &&
            root_feasible(s, tree->nodes[rho].chain_length())) {
            r.rectilinear_planar = true;
            r.witness_root = rho;
            if (!opt.all_roots) break;
        }
    }
    if (!r.rectilinear_planar) r.reason = "no feasible root";

    r.sets_computed = table->computed();
    long long deg_total = 0;
    for (const auto& nd : tree->nodes) deg_total += nd.neighbors.size();
    r.tree_edges = deg_total / 2;

    if (opt.keep_table) {
        r.tree = tree;
        r.table = table;
    }
    return r;
}

}  // namespace rectiplan
