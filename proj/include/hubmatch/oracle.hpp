#pragma once

#include <vector>

#include "hubmatch/graph.hpp"
#include "hubmatch/matcher.hpp"

namespace hubmatch {

struct OracleLimits {
    std::size_t maxQueryVertices = 8;
    std::size_t maxDataVertices = 20;
};

// Ground-truth enumerator: every injective map from query vertices to data
// vertices that sends each query edge to a data edge, found by plain
// backtracking over the query vertices in index order. Shares no machinery
// with the graphlet matcher. Throws CapacityError past the limits.
std::vector<Binding> bruteForceMatch(const Graph& data, const Graph& query,
                                     const OracleLimits& limits = {});

}  // namespace hubmatch
