#pragma once

#include "rectiplan/graph.hpp"
#include "rectiplan/spirality.hpp"

namespace rectiplan {

// =====================================================================
// Exhaustive reference decider
// =====================================================================
//
// Decides bend-free drawability by enumerating planar embeddings and
// corner-angle assignments outright.  Deliberately shares nothing with
// the spirality composition machinery, so the two can referee each
// other on small inputs.

struct oracle_result {
    bool feasible = false;
    long long embeddings_tried = 0;
};

//! Throws reject_error on inputs outside the supported class, or with
//! more than edge_cap edges.
oracle_result oracle_test(const graph& g, int edge_cap = 14);

//! Full spirality set of the standalone component c between poles
//! (u, v), measured by enumeration.  Attachment stubs stand in for the
//! outside edges at poles of inner degree 2 or more.
spirality_set oracle_spirality_set(const graph& c, int u, int v,
                                   int edge_cap = 14);

}  // namespace rectiplan
