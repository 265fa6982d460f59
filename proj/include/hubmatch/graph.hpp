#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hubmatch {

// Index of a vertex inside one Graph. Indices follow the lexicographic
// order of the labels, so index order and label order agree.
using VertexIndex = std::uint32_t;

using Edge = std::pair<VertexIndex, VertexIndex>;  // normalized: first < second

// Undirected simple graph over string-labeled vertices. Immutable after
// construction; safe to share across threads.
class Graph {
public:
    Graph() = default;

    // Builds a graph from declared vertices plus edges. Edge endpoints are
    // declared implicitly; duplicate vertices and edges collapse. Throws
    // ValidationError on self-loops or on labels that are empty or contain
    // whitespace.
    Graph(const std::vector<std::string>& vertexLabels,
          const std::vector<std::pair<std::string, std::string>>& edgeList);

    std::size_t vertexCount() const { return labels_.size(); }
    std::size_t edgeCount() const { return edgeCount_; }

    bool hasVertex(const std::string& label) const;

    // Throws UnknownVertexError if the label is not present.
    VertexIndex indexOf(const std::string& label) const;

    const std::string& labelOf(VertexIndex v) const;

    // Sorted, duplicate-free.
    const std::vector<std::string>& labels() const { return labels_; }

    // Neighbor indices of v in increasing order.
    const std::vector<VertexIndex>& neighborsOf(VertexIndex v) const;

    std::size_t degreeOf(VertexIndex v) const { return neighborsOf(v).size(); }

    bool hasEdge(VertexIndex u, VertexIndex v) const;
    bool hasEdge(const std::string& u, const std::string& v) const;

    // All edges as normalized pairs, sorted.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const;

private:
    void checkIndex(VertexIndex v) const;

    std::vector<std::string> labels_;                  // sorted
    std::vector<std::vector<VertexIndex>> adjacency_;  // sorted per vertex
    std::size_t edgeCount_ = 0;
};

}  // namespace hubmatch
