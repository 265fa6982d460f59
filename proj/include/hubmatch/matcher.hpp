#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "hubmatch/graphlet.hpp"
#include "hubmatch/ordering.hpp"

namespace hubmatch {

// A position in a pattern graphlet: either an unbound query vertex or a
// data vertex fixed by substitution.
struct Term {
    enum class Kind : std::uint8_t { variable, constant };

    Kind kind = Kind::variable;
    VertexIndex index = 0;  // query index for variables, data index for constants

    static Term variable(VertexIndex queryVertex) { return {Kind::variable, queryVertex}; }
    static Term constant(VertexIndex dataVertex) { return {Kind::constant, dataVertex}; }

    bool isVariable() const { return kind == Kind::variable; }
    bool isConstant() const { return kind == Kind::constant; }

    bool operator==(const Term&) const = default;
    auto operator<=>(const Term&) const = default;
};

using TermPair = std::pair<Term, Term>;  // normalized: first <= second

// A query graphlet whose positions may have been ground by substitution.
struct PatternGraphlet {
    Term hub;
    std::vector<Term> neighbors;      // sorted, duplicate-free
    std::vector<TermPair> boundaries; // normalized pairs, sorted

    bool operator==(const PatternGraphlet&) const = default;
};

// All-variable pattern of a query graphlet.
PatternGraphlet patternOf(const Graphlet& queryGraphlet);

// Injective map from query vertices to data vertices, sorted by query index.
// Partial during search, total in emitted solutions.
using Binding = std::vector<std::pair<VertexIndex, VertexIndex>>;

// Replaces every variable bound by `current` with its data vertex. Returns
// nullopt when the substitution would place the same constant twice among
// the neighbors: no injective solution can extend such a pattern.
std::optional<PatternGraphlet> substitute(const PatternGraphlet& pattern, const Binding& current);

// Hubs of the data graphlets that pass the cheap unification thresholds:
// enough neighbors and boundaries, hub/neighbor/boundary constants present.
// `dataGraphlets` must be indexed by hub (as produced by toGraphlets).
std::vector<VertexIndex> candidateFilter(const std::vector<Graphlet>& dataGraphlets,
                                         const PatternGraphlet& pattern);

// Strict unification refuses to bind a variable to a vertex that already
// appears as a constant in the pattern; lax unification generates such
// bindings and leaves them to the validity check.
enum class UnifyMode { strict, lax };

// Every assignment of the pattern's variables against one data graphlet:
// hub variable to the data hub, neighbor variables injectively into the
// data neighbors, boundaries landing on data boundaries. Sorted.
std::vector<Binding> unifyOne(const Graphlet& dataGraphlet, const PatternGraphlet& pattern,
                              UnifyMode mode);

struct UnifyOutcome {
    enum class Kind { noMatch, ground, partial };

    Kind kind = Kind::noMatch;
    std::vector<Binding> bindings;  // non-empty iff kind == partial

    bool operator==(const UnifyOutcome&) const = default;
};

// Unifies the pattern against the whole data graph: `ground` when the
// pattern has no variables and some data graphlet satisfies it, otherwise
// the union of unifyOne over the filtered candidates.
UnifyOutcome unify(const std::vector<Graphlet>& dataGraphlets, const PatternGraphlet& pattern,
                   UnifyMode mode);

// A partial solution may extend the current one only if they share no query
// vertex and no data vertex.
bool isValid(const Binding& partial, const Binding& current);

// True iff `inner` is a subsequence of `outer`.
bool isInnerOrdering(const Ordering& inner, const Ordering& outer);

struct SearchStats {
    std::uint64_t unifyCalls = 0;
    std::uint64_t partialGenerated = 0;  // sum of partial-set sizes over unify calls
    std::uint64_t validPartial = 0;      // partials that passed the validity check
    std::uint64_t recursiveCalls = 0;    // search invocations beyond the initial one
    std::uint64_t solutionsFound = 0;

    bool operator==(const SearchStats&) const = default;
};

// The partial solutions formed at the recursion sites, plus the initial
// empty one.
struct SearchTrace {
    std::set<Binding> states;
};

struct MatchOptions {
    UnifyMode mode = UnifyMode::strict;
    // Require the ordering's vertex set to be a hub cover of the query.
    // Disable for arbitrary-ordering experiments.
    bool enforceCover = true;
    bool recordTrace = false;
};

struct MatchResult {
    std::vector<Binding> solutions;  // canonical order: lexicographic by pairs
    SearchStats stats;
    // Set when no branch of the search ever unified; distinguishes "ran and
    // found nothing" from "never matched anything".
    bool noMatch = false;
    std::optional<SearchTrace> trace;
};

// Recursive unification search over the ordering's graphlets. Each emitted
// binding is injective and, when the ordering covers the query, total over
// the query vertices and edge-preserving. Throws ValidationError on
// orderings with repeats or foreign vertices, on queries with isolated
// vertices, and on non-cover orderings unless enforceCover is off.
MatchResult findSolutions(const Graph& data, const Graph& query, const Ordering& ordering,
                          const MatchOptions& options = {});

}  // namespace hubmatch
