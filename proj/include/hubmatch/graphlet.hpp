#pragma once

#include <string>
#include <vector>

#include "hubmatch/graph.hpp"

namespace hubmatch {

// One vertex of a graph together with its immediate neighborhood: the hub,
// all neighbors of the hub, and the boundaries, i.e. the edges of the graph
// whose endpoints are both neighbors of the hub.
struct Graphlet {
    VertexIndex hub = 0;
    std::vector<VertexIndex> neighbors;  // sorted, hub excluded
    std::vector<Edge> boundaries;        // normalized pairs, sorted

    bool operator==(const Graphlet&) const = default;
};

struct GraphletMetrics {
    std::size_t boundaryCount = 0;
    // Neighbors that appear in no boundary pair.
    std::size_t freeNeighborCount = 0;

    bool operator==(const GraphletMetrics&) const = default;
};

// One graphlet per vertex, indexed by hub: result[v].hub == v.
std::vector<Graphlet> toGraphlets(const Graph& g);

Graphlet graphletOf(const Graph& g, VertexIndex v);
Graphlet graphletOf(const Graph& g, const std::string& label);

GraphletMetrics metrics(const Graphlet& gl);

// {hub} ∪ neighbors, sorted.
std::vector<VertexIndex> vertexSet(const Graphlet& gl);

// Rebuilds the graph a graphlet decomposition came from (hub-neighbor edges
// plus the labels carried by `labels`, one per graphlet index).
Graph reassemble(const std::vector<Graphlet>& graphlets,
                 const std::vector<std::string>& labels);

}  // namespace hubmatch
