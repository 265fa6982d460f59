#include "hubmatch/ordering.hpp"

#include <algorithm>
#include <set>

#include "hubmatch/errors.hpp"

namespace hubmatch {

bool connected(const Graphlet& a, const Graphlet& b) {
    std::vector<VertexIndex> va = vertexSet(a);
    std::vector<VertexIndex> vb = vertexSet(b);
    auto ia = va.begin();
    auto ib = vb.begin();
    while (ia != va.end() && ib != vb.end()) {
        if (*ia == *ib) return true;
        if (*ia < *ib) ++ia;
        else ++ib;
    }
    return false;
}

std::weak_ordering compareSelectivity(const SelectivityKey& a, const SelectivityKey& b) {
    if (a.boundaryCount != b.boundaryCount) {
        return a.boundaryCount > b.boundaryCount ? std::weak_ordering::less
                                                 : std::weak_ordering::greater;
    }
    if (a.freeNeighborCount == b.freeNeighborCount) return std::weak_ordering::equivalent;
    // Among graphlets with boundaries, fewer free neighbors is more
    // selective; among boundary-free graphlets, more free neighbors is.
    bool aFirst = a.boundaryCount > 0 ? a.freeNeighborCount < b.freeNeighborCount
                                      : a.freeNeighborCount > b.freeNeighborCount;
    return aFirst ? std::weak_ordering::less : std::weak_ordering::greater;
}

OrderingChoice selectBestOrdering(const Graph& q, const std::vector<HubCover>& covers,
                                  const SelectOptions&) {
    if (covers.empty()) {
        throw ValidationError("cannot select an ordering from an empty cover set");
    }

    std::vector<Graphlet> graphlets = toGraphlets(q);
    std::vector<SelectivityKey> keys;
    keys.reserve(graphlets.size());
    for (const Graphlet& gl : graphlets) keys.push_back(metrics(gl));

    OrderingChoice choice;
    std::vector<const HubCover*> surviving;
    for (const HubCover& cover : covers) surviving.push_back(&cover);

    std::set<VertexIndex> picked;
    std::vector<VertexIndex> pickedUnion;  // sorted union of picked vertex sets

    // Every pick is a member of every surviving cover, so a surviving cover
    // of size |picked| is exactly the picked set: the ordering is complete.
    auto complete = [&] {
        return std::any_of(surviving.begin(), surviving.end(),
                           [&](const HubCover* cover) { return cover->size() == picked.size(); });
    };
    while (!complete()) {
        std::set<VertexIndex> pool;
        for (const HubCover* cover : surviving) {
            for (VertexIndex m : *cover) {
                if (!picked.count(m)) pool.insert(m);
            }
        }

        std::vector<VertexIndex> candidates;
        if (picked.empty()) {
            candidates.assign(pool.begin(), pool.end());
        } else {
            for (VertexIndex m : pool) {
                const Graphlet& gl = graphlets[m];
                bool touches = std::binary_search(pickedUnion.begin(), pickedUnion.end(), gl.hub);
                for (auto it = gl.neighbors.begin(); !touches && it != gl.neighbors.end(); ++it) {
                    touches = std::binary_search(pickedUnion.begin(), pickedUnion.end(), *it);
                }
                if (touches) candidates.push_back(m);
            }
            if (candidates.empty()) {
                choice.warnings.push_back(
                    "step " + std::to_string(picked.size()) +
                    ": no candidate graphlet shares a vertex with the ones already picked; "
                    "continuing without the connectivity requirement");
                candidates.assign(pool.begin(), pool.end());
            }
        }

        // Best key wins; ties break on the smaller label, and candidates are
        // already in index (= label) order.
        VertexIndex best = candidates.front();
        for (VertexIndex m : candidates) {
            if (compareSelectivity(keys[m], keys[best]) < 0) best = m;
        }

        picked.insert(best);
        choice.ordering.push_back(best);
        for (VertexIndex v : vertexSet(graphlets[best])) {
            auto it = std::lower_bound(pickedUnion.begin(), pickedUnion.end(), v);
            if (it == pickedUnion.end() || *it != v) pickedUnion.insert(it, v);
        }
        std::erase_if(surviving, [&](const HubCover* cover) {
            return !std::binary_search(cover->begin(), cover->end(), best);
        });
    }

    choice.cover = choice.ordering;
    std::sort(choice.cover.begin(), choice.cover.end());
    return choice;
}

std::vector<Ordering> enumerateMhcOrderings(const std::vector<HubCover>& covers) {
    std::set<Ordering> result;
    for (const HubCover& cover : covers) {
        Ordering perm = cover;
        std::sort(perm.begin(), perm.end());
        do {
            result.insert(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return {result.begin(), result.end()};
}

FullOrderingStream::FullOrderingStream(const Graph& q, const FullOrderingOptions& options) {
    if (q.vertexCount() > options.maxVertices) {
        throw CapacityError("full-ordering enumeration capped at " +
                            std::to_string(options.maxVertices) + " vertices, graph has " +
                            std::to_string(q.vertexCount()));
    }
    current_.resize(q.vertexCount());
    for (VertexIndex v = 0; v < q.vertexCount(); ++v) current_[v] = v;
}

std::optional<Ordering> FullOrderingStream::next() {
    if (exhausted_) return std::nullopt;
    if (first_) {
        first_ = false;
        return current_;
    }
    if (!std::next_permutation(current_.begin(), current_.end())) {
        exhausted_ = true;
        return std::nullopt;
    }
    return current_;
}

}  // namespace hubmatch
