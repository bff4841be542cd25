#pragma once

#include <cstdint>
#include <vector>

#include "rectiplan/graph.hpp"

namespace rectiplan {

// =====================================================================
// Instance generators
// =====================================================================

// splitmix64: tiny 64-bit generator with a fixed cross-platform
// stream, so seeded corpora stay identical everywhere.
struct splitmix64 {
    std::uint64_t state;

    explicit splitmix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    //! Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    //! Uniform in [lo, hi], inclusive.
    int range(int lo, int hi);
};

graph gen_cycle(int n);

struct lowerbound_instance {
    graph g;
    // Vertex lists, in path order, of every innermost chain.  Any
    // drawing of the instance spends at least N+2 turns along one of
    // these chains.
    std::vector<std::vector<int>> g0_components;
};

//! Drawable family whose required spirality grows with N.  N must be
//! even and at least 2.
lowerbound_instance gen_lowerbound(int N);

//! Random degree-4 independent-parallel series-parallel graph with
//! n in [n_target, 2*n_target]; identical seeds give identical graphs.
graph gen_random_ipsp(int n_target, std::uint64_t seed);

}  // namespace rectiplan
