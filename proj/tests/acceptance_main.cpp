// Acceptance harness: every criterion prints one [PASS] or [FAIL] line
// and the exit status reflects the conjunction.  Run a single criterion
// with --criterion N.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rectiplan/corpus.hpp"
#include "rectiplan/errors.hpp"
#include "rectiplan/generators.hpp"
#include "rectiplan/graph.hpp"
#include "rectiplan/oracle.hpp"
#include "rectiplan/spirality.hpp"
#include "rectiplan/spq_tree.hpp"
#include "rectiplan/tester.hpp"
#include "rectiplan/witness.hpp"

using namespace rectiplan;

namespace {

constexpr std::uint64_t kCorpusSeed = 20260814ull;
constexpr int kRandomCount = 500;
constexpr int kRandomEdgeCap = 12;
constexpr int kSweepEdgeCap = 8;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::vector<graph> corpus_pool() {
    std::vector<graph> pool = sp_closures(kSweepEdgeCap);
    for (graph& g :
         seeded_instances(kRandomCount, kCorpusSeed, kRandomEdgeCap))
        pool.push_back(std::move(g));
    return pool;
}

// one of: [0]  [1]  [1,2]^1  [0,M]^1  [0,M]^2 (M even >= 2)  [1,M]^2 (M odd >= 3)
bool canonical_shape(const spirality_set& s) {
    if (s.lo == 0 && s.hi == 0 && s.jump == 1) return true;
    if (s.lo == 1 && s.hi == 1 && s.jump == 1) return true;
    if (s.lo == 1 && s.hi == 2 && s.jump == 1) return true;
    if (s.lo == 0 && s.hi >= 1 && s.jump == 1) return true;
    if (s.lo == 0 && s.hi >= 2 && s.hi % 2 == 0 && s.jump == 2) return true;
    if (s.lo == 1 && s.hi >= 3 && s.hi % 2 == 1 && s.jump == 2) return true;
    return false;
}

// standalone copy of the component hanging off node facing its parent,
// with the poles remapped to vertices 0 and 1
graph extract_component(const graph& g, const spq_tree& t,
                        const rooted_view& rv, int node) {
    auto [u, v] = rv.poles[node];
    std::vector<int> remap(g.n, -1);
    remap[u] = 0;
    remap[v] = 1;
    int next = 2;
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.m(); ++e) {
        if (!rv.in_subtree(t.edge_owner[e], node)) continue;
        auto [a, b] = g.edges[e];
        if (remap[a] < 0) remap[a] = next++;
        if (remap[b] < 0) remap[b] = next++;
        edges.emplace_back(remap[a], remap[b]);
    }
    return make_graph(next, std::move(edges));
}

// every directed tree-edge slot, as (node, tree-parent) pairs together
// with a rooted view that realizes that direction
template <typename Fn>
void for_each_directed_slot(const spq_tree& t, Fn&& fn) {
    std::set<std::pair<int, int>> seen;
    for (int rho : t.qstar_nodes) {
        rooted_view rv = root_at(t, rho);
        for (int nu = 0; nu < static_cast<int>(t.nodes.size()); ++nu) {
            if (nu == rv.root) continue;
            int mu = rv.parent[nu];
            if (!seen.insert({nu, mu}).second) continue;
            fn(nu, mu, rv);
        }
    }
}

struct outcome {
    bool pass = false;
    std::string note;
};

// ---------------------------------------------------------------------
// 1. tester vs oracle over the sweep and the seeded corpus
// ---------------------------------------------------------------------
outcome criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<graph> sweep = sp_closures(kSweepEdgeCap);
    std::vector<graph> random =
        seeded_instances(kRandomCount, kCorpusSeed, kRandomEdgeCap);
    int disagreements = 0;
    auto check = [&](const graph& g) {
        bool fast = test_rectilinear(g).rectilinear_planar;
        bool slow = oracle_test(g).feasible;
        if (fast != slow) ++disagreements;
    };
    for (const graph& g : sweep) check(g);
    for (const graph& g : random) check(g);
    double secs = seconds_since(t0);

    std::ostringstream note;
    note << sweep.size() << " exhaustive + " << random.size() << " random, "
         << disagreements << " disagreements, " << secs << "s";
    return {disagreements == 0 && !sweep.empty() &&
                static_cast<int>(random.size()) == kRandomCount && secs < 300,
            note.str()};
}

// ---------------------------------------------------------------------
// 2. set shapes and oracle set equality over every directed slot
// ---------------------------------------------------------------------
outcome criterion2() {
    auto t0 = std::chrono::steady_clock::now();
    long long slots = 0;
    int shape_violations = 0, set_mismatches = 0;
    for (const graph& g : corpus_pool()) {
        if (classify(g).is_simple_cycle) continue;  // no tree, no sets
        test_options opt;
        opt.all_roots = true;
        opt.keep_table = true;
        test_report r = test_rectilinear(g, opt);
        for_each_directed_slot(
            *r.tree, [&](int nu, int mu, const rooted_view& rv) {
                ++slots;
                const spirality_set& s = r.table->toward(nu, mu);
                if (!s.empty() && !canonical_shape(s)) ++shape_violations;
                graph comp = extract_component(g, *r.tree, rv, nu);
                spirality_set want = oracle_spirality_set(comp, 0, 1);
                if (!(s == want)) ++set_mismatches;
            });
    }
    double secs = seconds_since(t0);
    std::ostringstream note;
    note << slots << " directed sets, " << shape_violations
         << " shape violations, " << set_mismatches << " oracle mismatches, "
         << secs << "s";
    return {slots > 0 && shape_violations == 0 && set_mismatches == 0,
            note.str()};
}

// ---------------------------------------------------------------------
// 3. plain cycles
// ---------------------------------------------------------------------
outcome criterion3() {
    auto cycle_verdict = [](int n) {
        return test_rectilinear(gen_cycle(n)).rectilinear_planar;
    };
    bool ok = !cycle_verdict(3);
    for (int n = 4; n <= 12; ++n) ok = ok && cycle_verdict(n);
    return {ok, "C_3 false, C_4..C_12 true"};
}

// ---------------------------------------------------------------------
// 4. lower bound family at desk scale
// ---------------------------------------------------------------------
outcome criterion4() {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream note;
    bool ok = true;
    for (int N : {2, 4}) {
        lowerbound_instance inst = gen_lowerbound(N);
        test_options opt;
        opt.keep_table = true;
        test_report r = test_rectilinear(inst.g, opt);
        if (!r.rectilinear_planar || !r.witness_root || *r.witness_root < 0) {
            ok = false;
            note << "N=" << N << " infeasible; ";
            continue;
        }
        witness_pack pack = build_witness(inst.g, r);
        bool sound = verify_ortho(inst.g, pack.rep) &&
                     verify_drawing(inst.g, pack.rep, pack.geom);
        rooted_view rv = root_at(*r.tree, *r.witness_root);
        int peak = 0;
        for (const auto& comp : inst.g0_components) {
            int e = -1;
            for (int cand : inst.g.adj[comp[0]])
                if (inst.g.other_end(cand, comp[0]) == comp[1]) e = cand;
            int owner = r.tree->edge_owner[e];
            if (owner == rv.root) continue;
            peak = std::max(
                peak, std::abs(measure_spirality(inst.g, pack.rep, *r.tree,
                                                 rv, owner)));
        }
        ok = ok && sound && peak >= N + 2;
        note << "N=" << N << " peak spirality " << peak << " (need "
             << N + 2 << "), ";
    }
    double secs = seconds_since(t0);
    note << secs << "s";
    return {ok && secs < 10, note.str()};
}

// ---------------------------------------------------------------------
// 5. witness soundness over every accepted instance
// ---------------------------------------------------------------------
outcome criterion5() {
    auto t0 = std::chrono::steady_clock::now();
    long long accepted = 0;
    int violations = 0;

    auto check = [&](const graph& g) {
        test_options opt;
        opt.keep_table = true;
        test_report r = test_rectilinear(g, opt);
        if (!r.rectilinear_planar) return;
        ++accepted;
        witness_pack pack = build_witness(g, r);
        if (!verify_ortho(g, pack.rep) ||
            !verify_drawing(g, pack.rep, pack.geom)) {
            ++violations;
            return;
        }
        if (*r.witness_root < 0) return;  // plain cycle, no components
        rooted_view rv = root_at(*r.tree, *r.witness_root);
        for (int nu = 0; nu < static_cast<int>(r.tree->nodes.size()); ++nu) {
            if (nu == rv.root) continue;
            if (measure_spirality(g, pack.rep, *r.tree, rv, nu) !=
                pack.assign.target[nu])
                ++violations;
        }
    };

    for (const graph& g : corpus_pool()) check(g);
    for (int N : {2, 4}) check(gen_lowerbound(N).g);

    double secs = seconds_since(t0);
    std::ostringstream note;
    note << accepted << " accepted instances, " << violations
         << " violations, " << secs << "s";
    return {accepted > 0 && violations == 0, note.str()};
}

// ---------------------------------------------------------------------
// 6. memoized directed sets equal fresh recomputations
// ---------------------------------------------------------------------
outcome criterion6() {
    int mismatches = 0;
    long long checked = 0;
    for (int i = 0; i < 100; ++i) {
        int target = 4 + i % 22;  // n stays within 50
        graph g = gen_random_ipsp(target, kCorpusSeed + i);
        if (classify(g).is_simple_cycle) continue;
        test_options opt;
        opt.all_roots = true;
        opt.keep_table = true;
        test_report r = test_rectilinear(g, opt);
        for_each_directed_slot(*r.tree,
                               [&](int nu, int mu, const rooted_view&) {
                                   ++checked;
                                   spirality_table fresh(*r.tree);
                                   if (!(fresh.toward(nu, mu) ==
                                         r.table->toward(nu, mu)))
                                       ++mismatches;
                               });
    }
    std::ostringstream note;
    note << checked << " directed sets re-derived, " << mismatches
         << " mismatches";
    return {checked > 0 && mismatches == 0, note.str()};
}

// ---------------------------------------------------------------------
// 7. linear scaling and the memoization bound
// ---------------------------------------------------------------------
outcome criterion7() {
    std::ostringstream note;
    bool ok = true;
    double prev = -1;
    for (int size : {1 << 14, 1 << 15, 1 << 16, 1 << 17}) {
        graph g = gen_random_ipsp(size, kCorpusSeed);
        test_options opt;
        opt.all_roots = true;
        std::vector<double> times;
        long long computed = 0, edges = 0;
        for (int run = 0; run < 5; ++run) {
            auto t0 = std::chrono::steady_clock::now();
            test_report r = test_rectilinear(g, opt);
            times.push_back(seconds_since(t0) * 1000.0);
            computed = r.sets_computed;
            edges = r.tree_edges;
        }
        std::sort(times.begin(), times.end());
        double med = times[2];
        if (computed > 2 * edges) ok = false;
        if (prev > 0 && med / prev > 3.0) ok = false;
        note << "n=" << g.n << " " << med << "ms (sets " << computed << "/"
             << 2 * edges << "); ";
        prev = med;
    }
    return {ok, note.str()};
}

// ---------------------------------------------------------------------
// 8. frozen algebra fixtures
// ---------------------------------------------------------------------
outcome criterion8() {
    int failed = 0;
    auto expect = [&](bool cond) {
        if (!cond) ++failed;
    };
    auto set = [](int lo, int hi, int jump) { return make_set(lo, hi, jump); };

    expect(!contains(set(0, 4, 2), 3));
    expect(contains(set(0, 4, 2), -2));
    expect(!contains(set(1, 2, 1), 0));

    expect(qstar_set(1) == set(0, 0, 1));
    expect(qstar_set(3) == set(0, 2, 1));
    expect(qstar_set(5) == set(0, 4, 1));

    expect(s_summary({set(0, 0, 1), set(1, 2, 1)}) ==
           series_summary{1, 1, 1, 2, 2, 0});
    expect(s_summary({set(1, 1, 1), set(1, 1, 1)}) ==
           series_summary{0, 0, 0, 2, 2, 0});
    expect(s_summary({set(0, 1, 1), set(0, 2, 2)}) ==
           series_summary{0, 0, 1, 3, 2, 0});

    expect(s_summary_replace(series_summary{2, 0, 1, 3, 3, 0}, set(0, 2, 1),
                             set(1, 1, 1)) == series_summary{2, 0, 0, 2, 3, 0});
    expect(s_summary_replace(series_summary{1, 1, 1, 2, 2, 0}, set(1, 2, 1),
                             set(1, 2, 1)) == series_summary{1, 1, 1, 2, 2, 0});
    expect(s_summary_replace(series_summary{1, 1, 1, 2, 2, 0}, set(1, 2, 1),
                             set(0, 0, 1)) == series_summary{2, 0, 0, 0, 2, 0});

    expect(s_node_set(s_summary({set(0, 0, 1), set(1, 2, 1)})) ==
           set(1, 2, 1));
    expect(s_node_set(s_summary({set(1, 1, 1), set(1, 1, 1)})) ==
           set(0, 2, 2));
    expect(s_node_set(s_summary({set(0, 1, 1), set(0, 2, 2)})) ==
           set(0, 3, 1));

    expect(p3_admits(set(0, 5, 1), set(0, 5, 1), set(0, 5, 1), 3));
    expect(!p3_admits(set(0, 0, 1), set(0, 0, 1), set(0, 0, 1), 0));
    expect(!p3_admits(set(0, 2, 2), set(0, 2, 2), set(0, 2, 2), 1));

    expect(p3_set(set(0, 5, 1), set(0, 5, 1), set(0, 5, 1)) == set(0, 3, 1));
    expect(p3_set(set(0, 2, 2), set(0, 2, 2), set(0, 2, 2)) == set(0, 0, 1));
    expect(p3_set(set(0, 0, 1), set(0, 0, 1), set(0, 0, 1)).empty());

    expect(!p2_admits(set(0, 0, 1), set(0, 0, 1), 0));
    expect(p2_admits(set(0, 1, 1), set(0, 3, 1), 3));
    expect(p2_admits(set(0, 2, 2), set(0, 2, 2), 0));

    expect(p2_set(set(0, 0, 1), set(0, 0, 1)).empty());
    expect(p2_set(set(0, 1, 1), set(0, 3, 1)) == set(0, 3, 1));
    expect(p2_set(set(0, 2, 2), set(0, 2, 2)) == set(0, 2, 1));

    expect(root_feasible(set(0, 2, 2), 3));
    expect(root_feasible(set(0, 0, 1), 5));
    expect(!root_feasible(set(1, 3, 2), 1));

    std::ostringstream note;
    note << "30 fixtures, " << failed << " failed";
    return {failed == 0, note.str()};
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--criterion" && i + 1 < argc) only = std::atoi(argv[++i]);
    }

    outcome (*criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                               criterion5, criterion6, criterion7, criterion8};
    bool all_pass = true;
    for (int c = 1; c <= 8; ++c) {
        if (only != 0 && c != only) continue;
        outcome res;
        try {
            res = criteria[c - 1]();
        } catch (const std::exception& e) {
            res = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (res.pass ? "[PASS]" : "[FAIL]") << " criterion " << c
                  << ": " << res.note << "\n";
        all_pass = all_pass && res.pass;
    }
    return all_pass ? 0 : 1;
}
