#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hubmatch/graphlet.hpp"
#include "hubmatch/hub_cover.hpp"

namespace hubmatch {

// Sequence of distinct query vertices to process, most selective first.
using Ordering = std::vector<VertexIndex>;

// Selectivity is judged on the same two quantities as GraphletMetrics;
// the ordering module adds the comparison rule.
using SelectivityKey = GraphletMetrics;

// True iff the two graphlets share at least one vertex (hub or neighbor).
// Both graphlets must come from the same graph.
bool connected(const Graphlet& a, const Graphlet& b);

// `less` means a is more selective than b (should be processed earlier):
// more boundaries first; among equal nonzero boundary counts, fewer free
// neighbors; among zero-boundary keys, more free neighbors.
std::weak_ordering compareSelectivity(const SelectivityKey& a, const SelectivityKey& b);

struct OrderingChoice {
    HubCover cover;
    Ordering ordering;
    std::vector<std::string> warnings;  // non-empty if connectivity was relaxed
};

struct SelectOptions {
    // Reserved for a data-graph statistics provider; not consulted by the
    // greedy selection yet.
    const std::map<std::string, std::size_t>* dataCandidateCounts = nullptr;
};

// Greedy selection over the given covers: repeatedly pick the most selective
// candidate graphlet among members of the surviving covers, requiring each
// pick after the first to share a vertex with the already-picked graphlets.
// If no candidate is connected at some step, the connectivity requirement is
// dropped for that step and a warning is recorded. Ties break on the
// lexicographically smallest vertex label. Throws ValidationError when
// `covers` is empty.
OrderingChoice selectBestOrdering(const Graph& q, const std::vector<HubCover>& covers,
                                  const SelectOptions& options = {});

// Every permutation of every cover, deduplicated and sorted.
std::vector<Ordering> enumerateMhcOrderings(const std::vector<HubCover>& covers);

struct FullOrderingOptions {
    std::size_t maxVertices = 9;
};

// Lazily yields all |V|! permutations of the query vertices in lexicographic
// order. Throws CapacityError at construction past the vertex cap.
class FullOrderingStream {
public:
    explicit FullOrderingStream(const Graph& q, const FullOrderingOptions& options = {});

    std::optional<Ordering> next();

private:
    Ordering current_;
    bool exhausted_ = false;
    bool first_ = true;
};

}  // namespace hubmatch
