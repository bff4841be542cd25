#pragma once

#include <string>
#include <vector>

namespace rectiplan {

// =====================================================================
// Spirality sets
// =====================================================================
//
// The spiralities realizable by a component between its poles always
// form a set that is symmetric about zero and whose nonnegative half
// is an arithmetic progression lo..hi with stride jump.  Only six
// shapes occur:
//
//   [0]  [1]  [1,2]^1  [0,M]^1  [0,M]^2 (M even)  [1,M]^2 (M odd)
//
// plus the empty set, encoded as hi < lo.

struct spirality_set {
    int lo = 0;
    int hi = -1;
    int jump = 1;

    bool empty() const { return hi < lo; }
    bool operator==(const spirality_set&) const = default;
};

spirality_set empty_set();

//! Validates that (lo, hi, jump) is one of the canonical shapes.
spirality_set make_set(int lo, int hi, int jump);

bool contains(const spirality_set& s, int sigma);

std::string to_string(const spirality_set& s);

//! Set of a bare chain with len edges between its attachments.
spirality_set qstar_set(int len);

// =====================================================================
// Series composition
// =====================================================================
//
// A series node's set is the sum-set of its children.  Only a few
// counters of the child collection matter, so a summary supports O(1)
// recomputation when one child set is swapped for another.

struct series_summary {
    int x = 0;     // children equal to [0]
    int y = 0;     // children equal to [1,2]^1
    int z = 0;     // children with lo < hi and jump 1
    int mtot = 0;  // sum of child maxima
    int n = 0;
    int empty_count = 0;

    bool any_empty() const { return empty_count > 0; }
    bool operator==(const series_summary&) const = default;
};

series_summary s_summary(const std::vector<spirality_set>& children);
series_summary s_summary_replace(series_summary s, const spirality_set& removed,
                                 const spirality_set& added);
series_summary s_summary_remove(series_summary s, const spirality_set& removed);
series_summary s_summary_add(series_summary s, const spirality_set& added);
// Summaries of disjoint child collections combine by adding counters.
series_summary s_summary_merge(const series_summary& a, const series_summary& b);
spirality_set s_node_set(const series_summary& s);

// =====================================================================
// Parallel composition
// =====================================================================

// Three-component parallel node: the outer components run two units
// away from the middle one, in opposite directions.
bool p3_admits(const spirality_set& a, const spirality_set& b,
               const spirality_set& c, int sigma);
spirality_set p3_set(const spirality_set& a, const spirality_set& b,
                     const spirality_set& c);

// Two-component parallel node: each pole distributes its free corner
// units between the components, at least one unit per side.
bool p2_admits(const spirality_set& l, const spirality_set& r, int sigma);
spirality_set p2_set(const spirality_set& l, const spirality_set& r);

//! Whether a component with set s closes up bend-free against a
//! reference chain of len edges.
bool root_feasible(const spirality_set& s, int len);

}  // namespace rectiplan
