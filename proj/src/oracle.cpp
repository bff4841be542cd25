#include "rectiplan/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "rectiplan/errors.hpp"
#include "rectiplan/spq_tree.hpp"

namespace rectiplan {

namespace {

// =====================================================================
// combinatorial maps
// =====================================================================
//
// Edge e owns darts 2e (first -> second) and 2e+1 (second -> first).
// rot[w] lists the darts leaving w in counterclockwise order.  Faces
// are traced with next(d) = ccw successor of rev(d) at head(d), which
// keeps each face on the right of its darts.

struct working_graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> rot;

    int ndarts() const { return 2 * static_cast<int>(edges.size()); }
    int tail(int d) const {
        const auto& e = edges[d >> 1];
        return (d & 1) ? e.second : e.first;
    }
    int head(int d) const { return tail(d ^ 1); }
};

int dart_leaving(const std::vector<std::pair<int, int>>& edges, int e, int a) {
    if (edges[e].first == a) return 2 * e;
    if (edges[e].second == a) return 2 * e + 1;
    throw internal_error("edge does not touch the requested vertex");
}

struct face_data {
    std::vector<int> face_of;               // dart -> face id
    std::vector<std::vector<int>> walk;     // face -> darts in trace order
};

face_data trace_faces(const working_graph& w) {
    int nd = w.ndarts();
    std::vector<int> pos(nd, -1);
    for (int v = 0; v < w.n; ++v)
        for (size_t i = 0; i < w.rot[v].size(); ++i)
            pos[w.rot[v][i]] = static_cast<int>(i);
    for (int d = 0; d < nd; ++d)
        if (pos[d] < 0) throw internal_error("dart missing from rotation");

    auto next = [&](int d) {
        int r = d ^ 1;
        int v = w.tail(r);
        const auto& ring = w.rot[v];
        return ring[(pos[r] + 1) % ring.size()];
    };

    face_data f;
    f.face_of.assign(nd, -1);
    for (int d0 = 0; d0 < nd; ++d0) {
        if (f.face_of[d0] >= 0) continue;
        int id = static_cast<int>(f.walk.size());
        f.walk.emplace_back();
        int d = d0;
        int guard = 0;
        do {
            f.face_of[d] = id;
            f.walk[id].push_back(d);
            d = next(d);
            if (++guard > nd) throw internal_error("face trace did not close");
        } while (d != d0);
    }
    return f;
}

// =====================================================================
// corner assignment search
// =====================================================================
//
// A drawing exists exactly when each corner gets an angle from
// {90, 180, 270} (360 at degree-1 tips) such that angles around every
// vertex sum to 360 and the turns 2 - angle/90 around each face sum to
// +4, or -4 on the one outer face.  Angles are kept in units of 90.
//
// An optional side condition fixes the turning of a marked path: every
// corner inside the path's right-side arcs contributes -angle, and the
// total plus a fixed base must hit a target.

struct spine_constraint {
    std::vector<char> in_arc;   // per corner (= per dart)
    int base = 0;
    int target = 0;
};

struct corner_solver {
    const working_graph& w;
    const face_data& f;
    int outer;
    const spine_constraint* spine;

    std::vector<int> order;       // corners, grouped face by face
    std::vector<int> vrem, vsum;  // per vertex: corners left, angle still owed
    std::vector<int> fsum;        // per face: turn so far
    std::vector<int> fmin, fmax;  // per face: turn bounds of what is left
    int srem = 0, ssum = 0;

    corner_solver(const working_graph& wg, const face_data& fd, int out,
                  const spine_constraint* sp)
        : w(wg), f(fd), outer(out), spine(sp) {
        std::vector<int> face_ids(f.walk.size());
        std::iota(face_ids.begin(), face_ids.end(), 0);
        std::sort(face_ids.begin(), face_ids.end(), [&](int a, int b) {
            if (f.walk[a].size() != f.walk[b].size())
                return f.walk[a].size() < f.walk[b].size();
            return a < b;
        });
        for (int id : face_ids)
            for (int d : f.walk[id]) order.push_back(d);

        vrem.assign(w.n, 0);
        vsum.assign(w.n, 4);
        for (int d = 0; d < w.ndarts(); ++d) ++vrem[w.head(d)];
        fsum.assign(f.walk.size(), 0);
        fmin.assign(f.walk.size(), 0);
        fmax.assign(f.walk.size(), 0);
        for (int d = 0; d < w.ndarts(); ++d) {
            int id = f.face_of[d];
            fmin[id] += turn_min(d);
            fmax[id] += turn_max(d);
        }
        if (spine) {
            ssum = spine->base;
            for (char c : spine->in_arc) srem += c;
        }
    }

    bool is_tip(int d) const { return w.rot[w.head(d)].size() == 1; }
    // a degree-1 tip takes the full 360 and turns by -2; anything else
    // picks 90, 180 or 270
    int turn_min(int d) const { return is_tip(d) ? -2 : -1; }
    int turn_max(int d) const { return is_tip(d) ? -2 : 1; }

    int face_target(int id) const { return id == outer ? -4 : 4; }

    bool dive(size_t at) {
        if (at == order.size()) return true;
        int d = order[at];
        int v = w.head(d);
        int fc = f.face_of[d];
        bool tip = is_tip(d);
        bool arc = spine && spine->in_arc[d];

        int lo = tip ? 4 : 1;
        int hi = tip ? 4 : 3;
        for (int a = lo; a <= hi; ++a) {
            --vrem[v];
            vsum[v] -= a;
            fsum[fc] += 2 - a;
            fmin[fc] -= turn_min(d);
            fmax[fc] -= turn_max(d);
            if (arc) {
                --srem;
                ssum -= a;
            }
            bool ok = vsum[v] >= vrem[v] && vsum[v] <= 3 * vrem[v] &&
                      (vrem[v] > 0 || vsum[v] == 0);
            if (ok) {
                int need = face_target(fc) - fsum[fc];
                ok = need >= fmin[fc] && need <= fmax[fc];
            }
            if (ok && spine) {
                // remaining arc corners each shave off 1..3
                ok = spine->target >= ssum - 3 * srem &&
                     spine->target <= ssum - srem;
            }
            if (ok && dive(at + 1)) return true;
            ++vrem[v];
            vsum[v] += a;
            fsum[fc] -= 2 - a;
            fmin[fc] += turn_min(d);
            fmax[fc] += turn_max(d);
            if (arc) {
                ++srem;
                ssum += a;
            }
        }
        return false;
    }

    bool run() { return dive(0); }
};

bool solve_corners(const working_graph& w, const face_data& f, int outer,
                   const spine_constraint* spine) {
    corner_solver solver(w, f, outer, spine);
    return solver.run();
}

// =====================================================================
// embedding enumeration
// =====================================================================
//
// Planar embeddings of a series-parallel graph are exactly the choices
// of an ordering for every parallel node's components, so an odometer
// over those orderings visits each embedding once (mirror images
// excluded; feasibility does not see them).  Rotations come from pole
// fans assembled bottom-up: a chain contributes its single end dart, a
// series node forwards the fan of its outermost component, a parallel
// node concatenates component fans, reversed on the first pole so both
// poles list components in the same spatial order.

struct sp_embedder {
    const std::vector<std::pair<int, int>>& edges;
    const spq_tree& tree;
    const rooted_view& rv;

    std::vector<int> pnodes;
    std::vector<std::vector<std::vector<int>>> orderings;  // per P node
    std::vector<size_t> pick;

    sp_embedder(const std::vector<std::pair<int, int>>& es, const spq_tree& t,
                const rooted_view& r)
        : edges(es), tree(t), rv(r) {
        for (size_t i = 0; i < t.nodes.size(); ++i) {
            if (t.nodes[i].kind != spq_kind::P) continue;
            pnodes.push_back(static_cast<int>(i));
            std::vector<int> ch = rv.children[i];
            std::sort(ch.begin(), ch.end());
            std::vector<std::vector<int>> all;
            do {
                all.push_back(ch);
            } while (std::next_permutation(ch.begin(), ch.end()));
            orderings.push_back(std::move(all));
        }
        pick.assign(pnodes.size(), 0);
    }

    bool advance() {
        for (size_t i = pick.size(); i-- > 0;) {
            if (++pick[i] < orderings[i].size()) return true;
            pick[i] = 0;
        }
        return false;
    }

    const std::vector<int>& ordered_children(int p) const {
        auto it = std::lower_bound(pnodes.begin(), pnodes.end(), p);
        size_t slot = static_cast<size_t>(it - pnodes.begin());
        return orderings[slot][pick[slot]];
    }

    void append_fan(int nu, bool second_pole, std::vector<int>& out) const {
        const spq_node& nd = tree.nodes[nu];
        switch (nd.kind) {
        case spq_kind::Qstar: {
            auto [u, v] = rv.poles[nu];
            bool fwd = nd.chain_verts.front() == u;
            int a = second_pole ? v : u;
            int e = (second_pole == fwd) ? nd.chain_edges.back()
                                         : nd.chain_edges.front();
            out.push_back(dart_leaving(edges, e, a));
            return;
        }
        case spq_kind::S: {
            const auto& ch = rv.children[nu];
            append_fan(second_pole ? ch.back() : ch.front(), second_pole, out);
            return;
        }
        case spq_kind::P: {
            const auto& ch = ordered_children(nu);
            if (second_pole) {
                for (int c : ch) append_fan(c, true, out);
            } else {
                for (auto it = ch.rbegin(); it != ch.rend(); ++it)
                    append_fan(*it, false, out);
            }
            return;
        }
        }
        throw internal_error("unhandled node kind in fan assembly");
    }

    std::vector<int> fan(int nu, bool second_pole) const {
        std::vector<int> out;
        append_fan(nu, second_pole, out);
        return out;
    }

    std::vector<std::vector<int>> rotation(int nverts) const {
        std::vector<std::vector<int>> rot(nverts);
        for (int q : tree.qstar_nodes) {
            const auto& cv = tree.nodes[q].chain_verts;
            const auto& ce = tree.nodes[q].chain_edges;
            for (size_t i = 1; i + 1 < cv.size(); ++i)
                rot[cv[i]] = {dart_leaving(edges, ce[i], cv[i]),
                              dart_leaving(edges, ce[i - 1], cv[i])};
        }
        for (size_t nu = 0; nu < tree.nodes.size(); ++nu) {
            if (tree.nodes[nu].kind != spq_kind::S) continue;
            const auto& ch = rv.children[nu];
            for (size_t i = 0; i + 1 < ch.size(); ++i) {
                int w = rv.poles[ch[i]].second;
                rot[w] = fan(ch[i], true);
                append_fan(ch[i + 1], false, rot[w]);
            }
        }
        int rho = rv.root;
        auto [s, t] = rv.poles[rho];
        const auto& rce = tree.nodes[rho].chain_edges;
        int child = rv.children[rho].front();
        rot[s] = {dart_leaving(edges, rce.front(), s)};
        append_fan(child, false, rot[s]);
        rot[t] = {dart_leaving(edges, rce.back(), t)};
        append_fan(child, true, rot[t]);
        return rot;
    }
};

void check_planar(const working_graph& w, const face_data& f) {
    int expect = static_cast<int>(w.edges.size()) - w.n + 2;
    if (static_cast<int>(f.walk.size()) != expect)
        throw internal_error("fan rotation is not planar");
}

// =====================================================================
// component plumbing
// =====================================================================

// Follows the unique trail from a degree-1 pole; the component is an
// open chain when the trail eats every edge and ends at v.
bool is_open_chain(const graph& c, int u, int v,
                   std::vector<int>* path_out) {
    if (c.degree(u) != 1 || c.degree(v) != 1) return false;
    std::vector<int> path{u};
    int at = u;
    int e = c.adj[u][0];
    int used = 0;
    while (true) {
        ++used;
        at = c.other_end(e, at);
        path.push_back(at);
        if (c.degree(at) != 2) break;
        e = (c.adj[at][0] == e) ? c.adj[at][1] : c.adj[at][0];
    }
    if (at != v || used != c.m()) return false;
    if (path_out) *path_out = std::move(path);
    return true;
}

std::vector<int> bfs_path(const graph& c, int u, int v) {
    std::vector<int> via(c.n, -1);
    std::vector<char> seen(c.n, 0);
    std::vector<int> queue{u};
    seen[u] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int at = queue[qi];
        if (at == v) break;
        for (int e : c.adj[at]) {
            int nx = c.other_end(e, at);
            if (seen[nx]) continue;
            seen[nx] = 1;
            via[nx] = e;
            queue.push_back(nx);
        }
    }
    if (!seen[v]) throw internal_error("component poles are disconnected");
    std::vector<int> path{v};
    int at = v;
    while (at != u) {
        at = c.other_end(via[at], at);
        path.push_back(at);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

// Marks the corners on the right of the walk through the given vertex
// sequence and accumulates the +2 per interior vertex.
spine_constraint make_spine(const working_graph& w,
                            const std::vector<int>& darts) {
    spine_constraint sp;
    sp.in_arc.assign(w.ndarts(), 0);
    std::vector<int> pos(w.ndarts(), -1);
    for (int v = 0; v < w.n; ++v)
        for (size_t i = 0; i < w.rot[v].size(); ++i)
            pos[w.rot[v][i]] = static_cast<int>(i);
    for (size_t i = 0; i + 1 < darts.size(); ++i) {
        int din = darts[i];
        int dout = darts[i + 1];
        int v = w.head(din);
        const auto& ring = w.rot[v];
        int l = din ^ 1;
        int guard = 0;
        while (l != dout) {
            sp.in_arc[l ^ 1] = 1;
            l = ring[(pos[l] + 1) % ring.size()];
            if (++guard > static_cast<int>(ring.size()))
                throw internal_error("spine exit dart missing from rotation");
        }
        sp.base += 2;
    }
    return sp;
}

spirality_set canonicalize(const std::set<int>& admitted) {
    if (admitted.empty()) return empty_set();
    std::vector<int> nn;
    for (int s : admitted) {
        if (!admitted.count(-s))
            throw internal_error("measured spirality set is not symmetric");
        if (s >= 0) nn.push_back(s);
    }
    int jump = nn.size() >= 2 ? nn[1] - nn[0] : 1;
    for (size_t i = 0; i < nn.size(); ++i)
        if (nn[i] != nn.front() + static_cast<int>(i) * jump)
            throw internal_error("measured spirality set has uneven stride");
    return make_set(nn.front(), nn.back(), jump);
}

}  // namespace

// =====================================================================
// whole-graph test
// =====================================================================

oracle_result oracle_test(const graph& g, int edge_cap) {
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) > 4)
            throw reject_error(reject_reason::degree_exceeded,
                               "vertex " + std::to_string(v));
    if (g.m() > edge_cap)
        throw reject_error(reject_reason::cap_exceeded,
                           std::to_string(g.m()) + " edges, cap " +
                               std::to_string(edge_cap));

    oracle_result res;
    if (is_simple_cycle_graph(g)) {
        working_graph w;
        w.n = g.n;
        w.edges = g.edges;
        w.rot.resize(g.n);
        for (int v = 0; v < g.n; ++v)
            for (int e : g.adj[v])
                w.rot[v].push_back(dart_leaving(w.edges, e, v));
        face_data f = trace_faces(w);
        check_planar(w, f);
        res.embeddings_tried = 1;
        for (size_t fc = 0; fc < f.walk.size(); ++fc) {
            if (solve_corners(w, f, static_cast<int>(fc), nullptr)) {
                res.feasible = true;
                break;
            }
        }
        return res;
    }

    spq_tree tree = build_spq_tree(g);
    rooted_view rv = root_at(tree, tree.qstar_nodes.front());
    sp_embedder emb(g.edges, tree, rv);
    do {
        working_graph w;
        w.n = g.n;
        w.edges = g.edges;
        w.rot = emb.rotation(g.n);
        ++res.embeddings_tried;
        face_data f = trace_faces(w);
        check_planar(w, f);
        for (size_t fc = 0; fc < f.walk.size(); ++fc) {
            if (solve_corners(w, f, static_cast<int>(fc), nullptr)) {
                res.feasible = true;
                return res;
            }
        }
    } while (emb.advance());
    return res;
}

// =====================================================================
// component spirality measurement
// =====================================================================
//
// The component is drawn standalone with a stub edge standing in for
// the outside connection at each pole that has two or more component
// edges; a pole touched by a single component edge keeps its outside
// edge collinear with the chain and needs no stand-in.  Embeddings are
// enumerated on the component plus a temporary closure edge between
// the poles, whose darts then become the stubs.  Cutting the closure
// merges its two sides into the one face holding both attachment
// points, and that face must be the outer one.

spirality_set oracle_spirality_set(const graph& c, int u, int v,
                                   int edge_cap) {
    if (u < 0 || u >= c.n || v < 0 || v >= c.n || u == v)
        throw internal_error("bad component poles");
    if (c.m() > edge_cap)
        throw reject_error(reject_reason::cap_exceeded,
                           std::to_string(c.m()) + " edges, cap " +
                               std::to_string(edge_cap));
    for (int w = 0; w < c.n; ++w) {
        int limit = (w == u || w == v) ? 3 : 4;
        if (c.degree(w) > limit)
            throw reject_error(reject_reason::degree_exceeded,
                               "vertex " + std::to_string(w));
    }

    std::set<int> admitted;
    int probe_cap = c.m() + 2;

    std::vector<int> chain_path;
    if (is_open_chain(c, u, v, &chain_path)) {
        working_graph w;
        w.n = c.n;
        w.edges = c.edges;
        w.rot.resize(c.n);
        for (int x = 0; x < c.n; ++x)
            for (int e : c.adj[x])
                w.rot[x].push_back(dart_leaving(w.edges, e, x));
        face_data f = trace_faces(w);
        check_planar(w, f);
        std::vector<int> darts;
        for (size_t i = 0; i + 1 < chain_path.size(); ++i) {
            int a = chain_path[i];
            int b = chain_path[i + 1];
            int hit = -1;
            for (int e : c.adj[a])
                if (c.other_end(e, a) == b &&
                    (darts.empty() || (darts.back() >> 1) != e))
                    hit = e;
            if (hit < 0) throw internal_error("chain path lost an edge");
            darts.push_back(dart_leaving(w.edges, hit, a));
        }
        spine_constraint sp = make_spine(w, darts);
        for (int sigma = -probe_cap; sigma <= probe_cap; ++sigma) {
            sp.target = sigma;
            if (solve_corners(w, f, 0, &sp)) admitted.insert(sigma);
        }
        return canonicalize(admitted);
    }

    graph closed = c;
    closed.edges.emplace_back(u, v);
    closed.adj[u].push_back(c.m());
    closed.adj[v].push_back(c.m());
    int closure = c.m();

    spq_tree tree = build_spq_tree(closed);
    rooted_view rv = root_at(tree, tree.edge_owner[closure]);

    bool stub_u = c.degree(u) >= 2;
    bool stub_v = c.degree(v) >= 2;

    std::vector<int> inner_path = bfs_path(c, u, v);

    sp_embedder emb(closed.edges, tree, rv);
    do {
        auto rot = emb.rotation(closed.n);

        working_graph w;
        w.n = c.n;
        w.edges = c.edges;
        int tip_u = -1, tip_v = -1;
        int eu = -1, ev = -1;
        if (stub_u) {
            tip_u = w.n++;
            eu = static_cast<int>(w.edges.size());
            w.edges.emplace_back(u, tip_u);
        }
        if (stub_v) {
            tip_v = w.n++;
            ev = static_cast<int>(w.edges.size());
            w.edges.emplace_back(v, tip_v);
        }
        w.rot.resize(w.n);
        for (int x = 0; x < c.n; ++x) {
            for (int d : rot[x]) {
                if (d == 2 * closure) {
                    if (stub_u) w.rot[x].push_back(2 * eu);
                } else if (d == 2 * closure + 1) {
                    if (stub_v) w.rot[x].push_back(2 * ev);
                } else {
                    w.rot[x].push_back(d);
                }
            }
        }
        if (stub_u) w.rot[tip_u] = {2 * eu + 1};
        if (stub_v) w.rot[tip_v] = {2 * ev + 1};

        face_data f = trace_faces(w);
        check_planar(w, f);

        std::vector<int> darts;
        if (stub_u) darts.push_back(2 * eu + 1);
        for (size_t i = 0; i + 1 < inner_path.size(); ++i) {
            int a = inner_path[i];
            int b = inner_path[i + 1];
            int hit = -1;
            for (int e : c.adj[a])
                if (c.other_end(e, a) == b &&
                    (darts.empty() || (darts.back() >> 1) != e))
                    hit = e;
            if (hit < 0) throw internal_error("pole path lost an edge");
            darts.push_back(dart_leaving(w.edges, hit, a));
        }
        if (stub_v) darts.push_back(2 * ev);

        int outer_a = stub_u ? f.face_of[2 * eu + 1]
                             : f.face_of[dart_leaving(w.edges, c.adj[u][0], u)];
        int outer_b = stub_v ? f.face_of[2 * ev]
                             : f.face_of[dart_leaving(w.edges, c.adj[v][0], v)];
        if (outer_a != outer_b)
            throw internal_error("attachment points landed on different faces");

        spine_constraint sp = make_spine(w, darts);
        for (int sigma = -probe_cap; sigma <= probe_cap; ++sigma) {
            if (admitted.count(sigma)) continue;
            sp.target = sigma;
            if (solve_corners(w, f, outer_a, &sp)) admitted.insert(sigma);
        }
    } while (emb.advance());

    return canonicalize(admitted);
}

}  // namespace rectiplan
