#pragma once

#include <cstdint>
#include <vector>

#include "rectiplan/graph.hpp"

namespace rectiplan {

// =====================================================================
// Cross-check corpora
// =====================================================================
//
// Instance streams for refereeing the linear-time tester against the
// exhaustive oracle on small graphs.

//! Every biconnected SP composition with at most max_edges edges that
//! falls inside the supported class (degree 4, independent parallel).
//! Two-pole series/parallel networks are enumerated in normal form and
//! closed with one extra pole-to-pole edge; the same graph may appear
//! under several compositions, which only repeats a check.
std::vector<graph> sp_closures(int max_edges);

//! count seeded random in-class instances with at most max_edges
//! edges each; identical seeds give identical lists.
std::vector<graph> seeded_instances(int count, std::uint64_t seed,
                                    int max_edges);

}  // namespace rectiplan
