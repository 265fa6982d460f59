#pragma once

#include <vector>

#include "hubmatch/graph.hpp"

namespace hubmatch {

// A set of query vertices whose graphlets cover every edge of the query.
// Members are sorted vertex indices.
using HubCover = std::vector<VertexIndex>;

// True iff every edge {u,v} of q is incident to a member or is a boundary of
// some member's graphlet (u and v both adjacent to the member).
// Throws UnknownVertexError if a member index is out of range.
bool covers(const Graph& q, const HubCover& members);

struct CoverOptions {
    // Guard for the exhaustive subset search.
    std::size_t maxVertices = 20;
};

// All hub covers of minimum cardinality, found by testing subsets of
// increasing size. Sorted lexicographically. Throws ValidationError for
// edgeless graphs and CapacityError past the vertex cap.
std::vector<HubCover> enumerateMinimumHubCovers(const Graph& q,
                                                const CoverOptions& options = {});

}  // namespace hubmatch
