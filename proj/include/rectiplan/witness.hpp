#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "rectiplan/graph.hpp"
#include "rectiplan/spq_tree.hpp"
#include "rectiplan/tester.hpp"

namespace rectiplan {

// =====================================================================
// Drawing witness
// =====================================================================
//
// A positive verdict is backed by an actual drawing.  The pipeline is
// assign_spiralities -> build_ortho_rep -> verify_ortho -> compact,
// with measure_spirality reading the realized spiralities back off the
// representation so tests can compare them against the targets.

// Bend-free orthogonal representation: one absolute direction per
// dart.  Dart 2e points from edges[e].first to edges[e].second, dart
// 2e+1 the other way.  Directions count counterclockwise from east:
// 0 = E, 1 = N, 2 = W, 3 = S.
struct ortho_rep {
    std::vector<int> dart_dir;
};

struct spirality_assignment {
    int root = -1;
    int root_k = 0;  // right turns spent on the reference chain

    // Target spirality per tree node (root entry unused).
    std::vector<int> target;

    // P-node arrangement: children in drawing order (left, center,
    // right), right slot -1 for two-child nodes, and the pole angles
    // (alpha_ul, alpha_ur, alpha_vl, alpha_vr).
    std::vector<std::array<int, 3>> p_children;
    std::vector<std::array<int, 4>> p_alpha;
};

struct drawing {
    std::vector<std::pair<int, int>> coords;  // per vertex
};

//! Top-down target selection.  Requires root_feasible for the view's
//! root; throws internal_error if the scan ever comes up empty, since
//! that would mean the algebra lied.
spirality_assignment assign_spiralities(const spq_tree& t, const rooted_view& rv,
                                        spirality_table& table);

//! Realizes the assignment as dart directions.  The first edge of the
//! root chain points east.
ortho_rep build_ortho_rep(const graph& g, const spq_tree& t,
                          const rooted_view& rv,
                          const spirality_assignment& a);

//! Rectangle representation for a plain cycle on n >= 4 vertices.
ortho_rep make_cycle_rep(const graph& g);

//! Angle and face consistency: distinct directions per vertex, every
//! face closing with +4 turns except exactly one with -4, and Euler's
//! face count (which makes the rotation system planar).
bool verify_ortho(const graph& g, const ortho_rep& rep);

//! Turns along a pole-to-pole path of the node's component, counting
//! the pole corners against the parent chain when the pole has two or
//! more component edges.  Walks the leftmost and the rightmost path
//! and asserts they agree.
int measure_spirality(const graph& g, const ortho_rep& rep, const spq_tree& t,
                      const rooted_view& rv, int node);

//! Integer grid coordinates.  Internally boxes the drawing, refines
//! every face to a rectangle with dummy vertices, and layers the
//! coordinates by longest path; dummies never leak out.
drawing compact(const graph& g, const ortho_rep& rep);

//! Geometric check of the final drawing: distinct vertex points,
//! every edge a straight axis-aligned segment matching its dart
//! directions, no two segments meeting outside shared endpoints.
bool verify_drawing(const graph& g, const ortho_rep& rep, const drawing& d);

std::string to_svg(const graph& g, const drawing& d);

struct witness_pack {
    spirality_assignment assign;
    ortho_rep rep;
    drawing geom;
};

//! Full pipeline for a positive test report produced with keep_table.
witness_pack build_witness(const graph& g, const test_report& r);

}  // namespace rectiplan
