#include "hubmatch/hub_cover.hpp"

#include <algorithm>
#include <cstdint>

#include "hubmatch/errors.hpp"

namespace hubmatch {

namespace {

// Mask of the vertices whose graphlet covers the edge {u,v}: its endpoints
// plus every vertex adjacent to both (those carry {u,v} as a boundary).
std::uint64_t covererMask(const std::vector<std::uint64_t>& adjMask, VertexIndex u,
                          VertexIndex v) {
    return (std::uint64_t{1} << u) | (std::uint64_t{1} << v) | (adjMask[u] & adjMask[v]);
}

std::vector<std::uint64_t> adjacencyMasks(const Graph& q) {
    std::vector<std::uint64_t> masks(q.vertexCount(), 0);
    for (VertexIndex v = 0; v < q.vertexCount(); ++v) {
        for (VertexIndex n : q.neighborsOf(v)) masks[v] |= std::uint64_t{1} << n;
    }
    return masks;
}

}  // namespace

bool covers(const Graph& q, const HubCover& members) {
    if (q.vertexCount() > 64) {
        throw CapacityError("covers supports at most 64 vertices");
    }
    std::uint64_t memberMask = 0;
    for (VertexIndex m : members) {
        if (m >= q.vertexCount()) {
            throw UnknownVertexError("cover member index " + std::to_string(m) +
                                     " is not a vertex of the graph");
        }
        memberMask |= std::uint64_t{1} << m;
    }
    auto adjMask = adjacencyMasks(q);
    for (const auto& [u, v] : q.edges()) {
        if ((covererMask(adjMask, u, v) & memberMask) == 0) return false;
    }
    return true;
}

std::vector<HubCover> enumerateMinimumHubCovers(const Graph& q, const CoverOptions& options) {
    if (q.edgeCount() == 0) {
        throw ValidationError("hub covers are defined only for graphs with at least one edge");
    }
    std::size_t cap = std::min<std::size_t>(options.maxVertices, 64);
    if (q.vertexCount() > cap) {
        throw CapacityError("graph has " + std::to_string(q.vertexCount()) +
                            " vertices, above the exhaustive-search cap of " +
                            std::to_string(cap) + "; supply covers explicitly");
    }

    const std::size_t n = q.vertexCount();
    auto adjMask = adjacencyMasks(q);
    std::vector<std::uint64_t> edgeCoverers;
    for (const auto& [u, v] : q.edges()) {
        edgeCoverers.push_back(covererMask(adjMask, u, v));
    }

    auto isCover = [&](std::uint64_t memberMask) {
        for (std::uint64_t coverers : edgeCoverers) {
            if ((coverers & memberMask) == 0) return false;
        }
        return true;
    };

    // Test subsets in increasing size; the first size admitting a cover is
    // the minimum. Combinations are generated in lexicographic index order,
    // so the result comes out sorted.
    std::vector<HubCover> found;
    for (std::size_t size = 1; size <= n && found.empty(); ++size) {
        std::vector<VertexIndex> combo(size);
        for (std::size_t i = 0; i < size; ++i) combo[i] = static_cast<VertexIndex>(i);
        while (true) {
            std::uint64_t mask = 0;
            for (VertexIndex m : combo) mask |= std::uint64_t{1} << m;
            if (isCover(mask)) found.push_back(combo);

            // next combination
            std::size_t i = size;
            while (i > 0 && combo[i - 1] == n - size + i - 1) --i;
            if (i == 0) break;
            ++combo[i - 1];
            for (std::size_t j = i; j < size; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    return found;
}

}  // namespace hubmatch
