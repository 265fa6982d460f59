#include "hubmatch/graphlet.hpp"

#include <algorithm>

#include "hubmatch/errors.hpp"

namespace hubmatch {

Graphlet graphletOf(const Graph& g, VertexIndex v) {
    Graphlet gl;
    gl.hub = v;
    gl.neighbors = g.neighborsOf(v);  // validates v
    for (std::size_t i = 0; i < gl.neighbors.size(); ++i) {
        for (std::size_t j = i + 1; j < gl.neighbors.size(); ++j) {
            if (g.hasEdge(gl.neighbors[i], gl.neighbors[j])) {
                gl.boundaries.emplace_back(gl.neighbors[i], gl.neighbors[j]);
            }
        }
    }
    return gl;
}

Graphlet graphletOf(const Graph& g, const std::string& label) {
    return graphletOf(g, g.indexOf(label));
}

std::vector<Graphlet> toGraphlets(const Graph& g) {
    std::vector<Graphlet> result;
    result.reserve(g.vertexCount());
    for (VertexIndex v = 0; v < g.vertexCount(); ++v) {
        result.push_back(graphletOf(g, v));
    }
    return result;
}

GraphletMetrics metrics(const Graphlet& gl) {
    std::vector<VertexIndex> bound;
    for (const auto& [u, w] : gl.boundaries) {
        bound.push_back(u);
        bound.push_back(w);
    }
    std::sort(bound.begin(), bound.end());
    bound.erase(std::unique(bound.begin(), bound.end()), bound.end());
    return {gl.boundaries.size(), gl.neighbors.size() - bound.size()};
}

std::vector<VertexIndex> vertexSet(const Graphlet& gl) {
    std::vector<VertexIndex> result = gl.neighbors;
    result.insert(std::lower_bound(result.begin(), result.end(), gl.hub), gl.hub);
    return result;
}

Graph reassemble(const std::vector<Graphlet>& graphlets, const std::vector<std::string>& labels) {
    if (graphlets.size() != labels.size()) {
        throw ValidationError("reassemble: one label per graphlet required");
    }
    std::vector<std::pair<std::string, std::string>> edgeList;
    for (const Graphlet& gl : graphlets) {
        if (gl.hub >= labels.size()) {
            throw ValidationError("reassemble: graphlet hub index out of range");
        }
        for (VertexIndex n : gl.neighbors) {
            if (n >= labels.size()) {
                throw ValidationError("reassemble: neighbor index out of range");
            }
            edgeList.emplace_back(labels[gl.hub], labels[n]);
        }
    }
    return Graph(labels, edgeList);
}

}  // namespace hubmatch
