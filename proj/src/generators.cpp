#include "rectiplan/generators.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "rectiplan/errors.hpp"

namespace rectiplan {

std::uint64_t splitmix64::below(std::uint64_t bound) {
    if (bound == 0) throw internal_error("empty range");
    // reject the tail so the modulo stays unbiased
    std::uint64_t limit = ~0ull - ~0ull % bound;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

int splitmix64::range(int lo, int hi) {
    if (hi < lo) throw internal_error("empty range");
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

struct builder {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    int fresh() { return n++; }
    void edge(int a, int b) { edges.emplace_back(a, b); }

    // chain of len edges between existing vertices u and v
    void chain(int u, int v, int len, std::vector<int>* record = nullptr) {
        if (record) record->push_back(u);
        int prev = u;
        for (int i = 1; i < len; ++i) {
            int x = fresh();
            edge(prev, x);
            prev = x;
            if (record) record->push_back(x);
        }
        edge(prev, v);
        if (record) record->push_back(v);
    }
};

}  // namespace

graph gen_cycle(int n) {
    if (n < 2) throw internal_error("cycle needs at least two vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return make_graph(n, es);
}

// =====================================================================
// lower-bound family
// =====================================================================
//
// Level 1 puts three long chains in parallel; level k wraps three
// copies of level k-1 in parallel, each guarded by single edges so
// every parallel node keeps fresh poles.  Two copies of level N/2+1
// joined into a ring by 2-edge paths force one innermost chain to wind
// N+2 quarter turns in every drawing, while the instance itself stays
// drawable.

lowerbound_instance gen_lowerbound(int N) {
    if (N < 2 || N % 2 != 0)
        throw internal_error("level parameter must be even and at least 2");
    lowerbound_instance out;
    builder b;
    int L = N / 2 + 1;

    std::function<std::pair<int, int>(int)> build = [&](int k) {
        int u = b.fresh();
        int v = b.fresh();
        if (k == 1) {
            for (int i = 0; i < 3; ++i) {
                std::vector<int> rec;
                b.chain(u, v, N + 3, &rec);
                out.g0_components.push_back(std::move(rec));
            }
        } else {
            for (int i = 0; i < 3; ++i) {
                auto [a, c] = build(k - 1);
                b.edge(u, a);
                b.edge(c, v);
            }
        }
        return std::pair<int, int>{u, v};
    };

    auto [a1, b1] = build(L);
    auto [a2, b2] = build(L);
    int x = b.fresh();
    int y = b.fresh();
    b.edge(b1, x);
    b.edge(x, a2);
    b.edge(b2, y);
    b.edge(y, a1);
    out.g = make_graph(b.n, b.edges);
    return out;
}

// =====================================================================
// random instances
// =====================================================================
//
// Terms follow the shape of the class itself: the whole graph is 2..4
// limbs in parallel, every limb alternates chains with parallel blocks
// of 2..3 branches, and blocks never touch without a chain in between,
// which keeps all parallel poles distinct and all degrees at 4 or
// less.  The last limb is a plain chain sized to land the vertex count
// inside [n_target, 2*n_target].  Every function creates at most
// `slots` new vertices.

namespace {

void emit_series(builder& b, splitmix64& rng, int u, int v, int slots,
                 int depth);

void emit_block(builder& b, splitmix64& rng, int u, int v, int slots,
                int depth) {
    int branches = rng.range(2, 3);
    for (int i = 0; i < branches; ++i) {
        int share = slots / branches;
        if (depth < 2 && share >= 12 && rng.below(3) == 0)
            emit_series(b, rng, u, v, share, depth + 1);
        else
            b.chain(u, v, rng.range(1, std::min(4, share + 1)));
    }
}

void emit_series(builder& b, splitmix64& rng, int u, int v, int slots,
                 int depth) {
    int at = u;
    int start = b.n;
    while (true) {
        int left = slots - (b.n - start);
        if (left < 8) break;
        if (rng.below(4) == 0) {
            // plain stretch between blocks
            int w = b.fresh();
            b.chain(at, w, rng.range(2, std::min(6, left)));
            at = w;
            continue;
        }
        int pre = rng.range(1, 3);  // guard chain edges before the block
        int pu = b.fresh();
        b.chain(at, pu, pre);
        int pv = b.fresh();
        emit_block(b, rng, pu, pv, left - (pre - 1) - 2 - 3, depth);
        at = pv;
    }
    int left = slots - (b.n - start);
    b.chain(at, v, rng.range(1, std::max(1, std::min(4, left + 1))));
}

}  // namespace

graph gen_random_ipsp(int n_target, std::uint64_t seed) {
    if (n_target < 4) throw internal_error("target size too small");
    splitmix64 rng(seed);
    builder b;
    int u = b.fresh();
    int v = b.fresh();
    int limbs = rng.range(2, 4);
    int spend = n_target + n_target / 2 - 2;
    for (int i = 0; i + 1 < limbs; ++i)
        emit_series(b, rng, u, v, spend / limbs, 0);
    // top up with a plain limb so the count lands in range
    int len = std::max(2, n_target - b.n + 1);
    b.chain(u, v, len);
    if (b.n < n_target || b.n > 2 * n_target)
        throw internal_error("generated size out of range");
    return make_graph(b.n, b.edges);
}

}  // namespace rectiplan
