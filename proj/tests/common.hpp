#pragma once

#include <utility>
#include <vector>

#include "rectiplan/graph.hpp"

namespace testutil {

inline rectiplan::graph cycle(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    return rectiplan::make_graph(n, es);
}

// k chains between two hubs, chain i having lens[i] edges.
inline rectiplan::graph theta(const std::vector<int>& lens) {
    std::vector<std::pair<int, int>> es;
    int n = 2;
    for (int len : lens) {
        int prev = 0;
        for (int j = 1; j < len; ++j) {
            es.push_back({prev, n});
            prev = n++;
        }
        es.push_back({prev, 1});
    }
    return rectiplan::make_graph(n, es);
}

inline rectiplan::graph k4() {
    return rectiplan::make_graph(
        4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// open chain of len edges, endpoints 0 and len
inline rectiplan::graph path(int len) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < len; ++i) es.push_back({i, i + 1});
    return rectiplan::make_graph(len + 1, es);
}

// k parallel chains between vertices 0 and 1, chain i with lens[i]
// edges; same layout as theta but named for use as a pole component
inline rectiplan::graph parallel_chains(const std::vector<int>& lens) {
    return theta(lens);
}

}  // namespace testutil
