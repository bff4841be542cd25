#include "rectiplan/corpus.hpp"

#include <utility>

#include "rectiplan/generators.hpp"

namespace rectiplan {

namespace {

// two-pole network under series/parallel composition
struct network {
    int n = 0;
    int u = -1, v = -1;
    std::vector<std::pair<int, int>> edges;
};

network atom() { return {2, 0, 1, {{0, 1}}}; }

// glue b after a (a.v fuses with b.u); poles become (a.u, b.v)
network series(const network& a, const network& b) {
    network r = a;
    std::vector<int> mp(b.n);
    mp[b.u] = a.v;
    for (int x = 0; x < b.n; ++x)
        if (x != b.u) mp[x] = r.n++;
    for (auto [x, y] : b.edges) r.edges.emplace_back(mp[x], mp[y]);
    r.v = mp[b.v];
    return r;
}

// lay b alongside a, sharing both poles
network parallel(const network& a, const network& b) {
    network r = a;
    std::vector<int> mp(b.n);
    mp[b.u] = a.u;
    mp[b.v] = a.v;
    for (int x = 0; x < b.n; ++x)
        if (x != b.u && x != b.v) mp[x] = r.n++;
    for (auto [x, y] : b.edges) r.edges.emplace_back(mp[x], mp[y]);
    return r;
}

// Normal form: series nodes hold no series children, parallel nodes no
// parallel children, so each composition tree appears exactly once.
struct enumerator {
    int cap;
    // by edge count: series-topped and parallel-topped networks
    std::vector<std::vector<network>> snodes, pnodes;

    explicit enumerator(int max_edges) : cap(max_edges) {
        snodes.assign(cap + 1, {});
        pnodes.assign(cap + 1, {});
        for (int k = 2; k <= cap; ++k) {
            build_series(k);
            build_parallel(k);
        }
    }

    std::vector<network> series_parts(int k) const {
        std::vector<network> out;
        if (k == 1) out.push_back(atom());
        for (const network& p : pnodes[k]) out.push_back(p);
        return out;
    }

    std::vector<network> parallel_parts(int k) const {
        std::vector<network> out;
        if (k == 1) out.push_back(atom());
        for (const network& s : snodes[k]) out.push_back(s);
        return out;
    }

    // chains of one or more non-series parts
    std::vector<network> chains(int k) const {
        std::vector<network> out = series_parts(k);
        for (int i = 1; i < k; ++i)
            for (const network& head : series_parts(i))
                for (const network& rest : chains(k - i))
                    out.push_back(series(head, rest));
        return out;
    }

    void build_series(int k) {
        for (int i = 1; i < k; ++i)
            for (const network& head : series_parts(i))
                for (const network& rest : chains(k - i))
                    snodes[k].push_back(series(head, rest));
    }

    // parts in non-decreasing (size, index) order, so each multiset of
    // branches is produced once
    void bundle(int left, int min_sz, int min_idx, const network& cur,
                int parts, std::vector<network>& out) {
        for (int sz = min_sz; sz <= left; ++sz) {
            auto opts = parallel_parts(sz);
            int start = sz == min_sz ? min_idx : 0;
            for (int idx = start; idx < static_cast<int>(opts.size()); ++idx) {
                network next = parallel(cur, opts[idx]);
                if (left == sz) {
                    if (parts + 1 >= 2) out.push_back(next);
                } else {
                    bundle(left - sz, sz, idx, next, parts + 1, out);
                }
            }
        }
    }

    void build_parallel(int k) {
        for (int sz = 1; sz < k; ++sz) {
            auto opts = parallel_parts(sz);
            for (int idx = 0; idx < static_cast<int>(opts.size()); ++idx)
                bundle(k - sz, sz, idx, opts[idx], 1, pnodes[k]);
        }
    }

    std::vector<network> all(int k) const {
        std::vector<network> out = series_parts(k);
        for (const network& s : snodes[k]) out.push_back(s);
        return out;
    }
};

bool in_class(const graph& g) {
    graph_class c = classify(g);
    return c.is_degree4 && c.is_biconnected && c.is_sp &&
           c.is_independent_parallel;
}

}  // namespace

std::vector<graph> sp_closures(int max_edges) {
    enumerator en(max_edges - 1);
    std::vector<graph> out;
    for (int k = 1; k < max_edges; ++k) {
        for (const network& net : en.all(k)) {
            auto edges = net.edges;
            edges.emplace_back(net.u, net.v);
            graph g = make_graph(net.n, std::move(edges));
            if (in_class(g)) out.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<graph> seeded_instances(int count, std::uint64_t seed,
                                    int max_edges) {
    std::vector<graph> out;
    splitmix64 rng(seed);
    while (static_cast<int>(out.size()) < count) {
        int target = rng.range(4, 7);
        graph g = gen_random_ipsp(target, rng.next());
        if (g.m() <= max_edges) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace rectiplan
