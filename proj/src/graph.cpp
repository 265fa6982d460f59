#include "hubmatch/graph.hpp"

#include <algorithm>
#include <cctype>

#include "hubmatch/errors.hpp"

namespace hubmatch {

namespace {

bool validLabel(const std::string& label) {
    if (label.empty()) return false;
    for (unsigned char c : label) {
        if (std::isspace(c)) return false;
    }
    return true;
}

}  // namespace

Graph::Graph(const std::vector<std::string>& vertexLabels,
             const std::vector<std::pair<std::string, std::string>>& edgeList) {
    labels_ = vertexLabels;
    for (const auto& [u, v] : edgeList) {
        labels_.push_back(u);
        labels_.push_back(v);
    }
    for (const auto& label : labels_) {
        if (!validLabel(label)) {
            throw ValidationError("invalid vertex label '" + label +
                                  "': labels must be non-empty and contain no whitespace");
        }
    }
    std::sort(labels_.begin(), labels_.end());
    labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());

    adjacency_.assign(labels_.size(), {});
    for (const auto& [u, v] : edgeList) {
        if (u == v) {
            throw ValidationError("self-loop on vertex '" + u + "' is not allowed");
        }
        VertexIndex ui = indexOf(u);
        VertexIndex vi = indexOf(v);
        adjacency_[ui].push_back(vi);
        adjacency_[vi].push_back(ui);
    }
    for (auto& neighbors : adjacency_) {
        std::sort(neighbors.begin(), neighbors.end());
        neighbors.erase(std::unique(neighbors.begin(), neighbors.end()), neighbors.end());
        edgeCount_ += neighbors.size();
    }
    edgeCount_ /= 2;
}

bool Graph::hasVertex(const std::string& label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
}

VertexIndex Graph::indexOf(const std::string& label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) {
        throw UnknownVertexError("unknown vertex '" + label + "'");
    }
    return static_cast<VertexIndex>(it - labels_.begin());
}

void Graph::checkIndex(VertexIndex v) const {
    if (v >= labels_.size()) {
        throw UnknownVertexError("vertex index " + std::to_string(v) + " out of range");
    }
}

const std::string& Graph::labelOf(VertexIndex v) const {
    checkIndex(v);
    return labels_[v];
}

const std::vector<VertexIndex>& Graph::neighborsOf(VertexIndex v) const {
    checkIndex(v);
    return adjacency_[v];
}

bool Graph::hasEdge(VertexIndex u, VertexIndex v) const {
    checkIndex(u);
    checkIndex(v);
    const auto& neighbors = adjacency_[u];
    return std::binary_search(neighbors.begin(), neighbors.end(), v);
}

bool Graph::hasEdge(const std::string& u, const std::string& v) const {
    return hasEdge(indexOf(u), indexOf(v));
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> result;
    result.reserve(edgeCount_);
    for (VertexIndex u = 0; u < adjacency_.size(); ++u) {
        for (VertexIndex v : adjacency_[u]) {
            if (u < v) result.emplace_back(u, v);
        }
    }
    return result;
}

bool Graph::operator==(const Graph& other) const {
    return labels_ == other.labels_ && adjacency_ == other.adjacency_;
}

}  // namespace hubmatch
