#include "hubmatch/matcher.hpp"

#include <algorithm>
#include <cassert>

#include "hubmatch/errors.hpp"
#include "hubmatch/hub_cover.hpp"

namespace hubmatch {

namespace {

TermPair normalizePair(Term a, Term b) {
    return a <= b ? TermPair{a, b} : TermPair{b, a};
}

bool containsIndex(const std::vector<VertexIndex>& sorted, VertexIndex v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace

PatternGraphlet patternOf(const Graphlet& queryGraphlet) {
    PatternGraphlet pattern;
    pattern.hub = Term::variable(queryGraphlet.hub);
    pattern.neighbors.reserve(queryGraphlet.neighbors.size());
    for (VertexIndex n : queryGraphlet.neighbors) {
        pattern.neighbors.push_back(Term::variable(n));
    }
    pattern.boundaries.reserve(queryGraphlet.boundaries.size());
    for (const auto& [u, w] : queryGraphlet.boundaries) {
        pattern.boundaries.push_back(normalizePair(Term::variable(u), Term::variable(w)));
    }
    return pattern;
}

std::optional<PatternGraphlet> substitute(const PatternGraphlet& pattern, const Binding& current) {
    auto apply = [&](Term t) {
        if (t.isConstant()) return t;
        auto it = std::lower_bound(
            current.begin(), current.end(), t.index,
            [](const std::pair<VertexIndex, VertexIndex>& entry, VertexIndex v) {
                return entry.first < v;
            });
        if (it != current.end() && it->first == t.index) return Term::constant(it->second);
        return t;
    };

    PatternGraphlet out;
    out.hub = apply(pattern.hub);
    out.neighbors.reserve(pattern.neighbors.size());
    for (const Term& t : pattern.neighbors) out.neighbors.push_back(apply(t));
    std::sort(out.neighbors.begin(), out.neighbors.end());
    for (std::size_t i = 1; i < out.neighbors.size(); ++i) {
        if (out.neighbors[i - 1] == out.neighbors[i]) {
            // Two neighbor positions ground to the same data vertex: no
            // injective solution can extend this pattern.
            return std::nullopt;
        }
    }
    out.boundaries.reserve(pattern.boundaries.size());
    for (const auto& [a, b] : pattern.boundaries) {
        out.boundaries.push_back(normalizePair(apply(a), apply(b)));
    }
    std::sort(out.boundaries.begin(), out.boundaries.end());
    return out;
}

std::vector<VertexIndex> candidateFilter(const std::vector<Graphlet>& dataGraphlets,
                                         const PatternGraphlet& pattern) {
    std::vector<VertexIndex> hubs;
    for (const Graphlet& gd : dataGraphlets) {
        if (pattern.neighbors.size() > gd.neighbors.size()) continue;
        if (pattern.boundaries.size() > gd.boundaries.size()) continue;
        if (pattern.hub.isConstant() && pattern.hub.index != gd.hub) continue;

        bool ok = true;
        for (const Term& t : pattern.neighbors) {
            if (t.isConstant() && !containsIndex(gd.neighbors, t.index)) {
                ok = false;
                break;
            }
        }
        for (auto it = pattern.boundaries.begin(); ok && it != pattern.boundaries.end(); ++it) {
            const auto& [a, b] = *it;
            if (a.isConstant() && b.isConstant()) {
                Edge e{std::min(a.index, b.index), std::max(a.index, b.index)};
                ok = std::binary_search(gd.boundaries.begin(), gd.boundaries.end(), e);
            }
        }
        if (ok) hubs.push_back(gd.hub);
    }
    return hubs;
}

namespace {

// Backtracking enumeration of variable assignments against one data
// graphlet. Neighbor variables draw values from the data neighbors;
// boundaries are checked as soon as both endpoints are ground.
class OneGraphletUnifier {
public:
    OneGraphletUnifier(const Graphlet& gd, const PatternGraphlet& q, UnifyMode mode)
        : gd_(gd), q_(q), mode_(mode) {}

    std::vector<Binding> enumerate() {
        if (!constantsSatisfied()) return {};

        if (q_.hub.isVariable()) {
            base_.emplace_back(q_.hub.index, gd_.hub);
        }
        for (const Term& t : q_.neighbors) {
            if (t.isVariable()) vars_.push_back(t.index);
            else constants_.push_back(t.index);
        }
        if (q_.hub.isConstant()) constants_.push_back(q_.hub.index);
        std::sort(constants_.begin(), constants_.end());

        scheduleBoundaryChecks();
        assigned_.resize(vars_.size());
        usedValue_.assign(gd_.neighbors.size(), false);
        extend(0);
        std::sort(results_.begin(), results_.end());
        return std::move(results_);
    }

private:
    bool constantsSatisfied() const {
        if (q_.neighbors.size() > gd_.neighbors.size()) return false;
        if (q_.boundaries.size() > gd_.boundaries.size()) return false;
        if (q_.hub.isConstant() && q_.hub.index != gd_.hub) return false;
        for (const Term& t : q_.neighbors) {
            if (t.isConstant() && !containsIndex(gd_.neighbors, t.index)) return false;
        }
        for (const auto& [a, b] : q_.boundaries) {
            if (a.isConstant() && b.isConstant() &&
                !hasBoundary(std::min(a.index, b.index), std::max(a.index, b.index))) {
                return false;
            }
        }
        return true;
    }

    bool hasBoundary(VertexIndex u, VertexIndex v) const {
        return std::binary_search(gd_.boundaries.begin(), gd_.boundaries.end(), Edge{u, v});
    }

    // Position of a variable among vars_, or npos for constants.
    std::size_t varPosition(const Term& t) const {
        if (t.isConstant()) return npos;
        auto it = std::lower_bound(vars_.begin(), vars_.end(), t.index);
        assert(it != vars_.end() && *it == t.index);
        return static_cast<std::size_t>(it - vars_.begin());
    }

    void scheduleBoundaryChecks() {
        checksAt_.assign(vars_.size(), {});
        for (const auto& [a, b] : q_.boundaries) {
            std::size_t pa = varPosition(a);
            std::size_t pb = varPosition(b);
            if (pa == npos && pb == npos) continue;  // all-constant, checked up front
            PendingCheck check{pa, pb, pa == npos ? a.index : 0, pb == npos ? b.index : 0};
            checksAt_[std::max(pa == npos ? 0 : pa, pb == npos ? 0 : pb)]
                .push_back(check);
        }
    }

    bool boundarySatisfied(const PendingCheck& check) const {
        VertexIndex u = check.posA == npos ? check.constA : assigned_[check.posA];
        VertexIndex v = check.posB == npos ? check.constB : assigned_[check.posB];
        return hasBoundary(std::min(u, v), std::max(u, v));
    }

    void extend(std::size_t pos) {
        if (pos == vars_.size()) {
            Binding binding = base_;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                binding.emplace_back(vars_[i], assigned_[i]);
            }
            std::sort(binding.begin(), binding.end());
            results_.push_back(std::move(binding));
            return;
        }
        for (std::size_t slot = 0; slot < gd_.neighbors.size(); ++slot) {
            if (usedValue_[slot]) continue;
            VertexIndex value = gd_.neighbors[slot];
            if (mode_ == UnifyMode::strict && containsIndex(constants_, value)) continue;
            assigned_[pos] = value;
            bool ok = true;
            for (const PendingCheck& check : checksAt_[pos]) {
                if (!boundarySatisfied(check)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                usedValue_[slot] = true;
                extend(pos + 1);
                usedValue_[slot] = false;
            }
        }
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    struct PendingCheck {
        std::size_t posA;
        std::size_t posB;
        VertexIndex constA;
        VertexIndex constB;
    };

    const Graphlet& gd_;
    const PatternGraphlet& q_;
    UnifyMode mode_;

    Binding base_;                          // hub-variable binding, if any
    std::vector<VertexIndex> vars_;         // variable query indices, sorted
    std::vector<VertexIndex> constants_;    // constant data vertices in the pattern
    std::vector<std::vector<PendingCheck>> checksAt_;
    std::vector<VertexIndex> assigned_;
    std::vector<bool> usedValue_;
    std::vector<Binding> results_;
};

}  // namespace

std::vector<Binding> unifyOne(const Graphlet& dataGraphlet, const PatternGraphlet& pattern,
                              UnifyMode mode) {
    return OneGraphletUnifier(dataGraphlet, pattern, mode).enumerate();
}

UnifyOutcome unify(const std::vector<Graphlet>& dataGraphlets, const PatternGraphlet& pattern,
                   UnifyMode mode) {
    bool ground = pattern.hub.isConstant() &&
                  std::all_of(pattern.neighbors.begin(), pattern.neighbors.end(),
                              [](const Term& t) { return t.isConstant(); });

    std::vector<Binding> bindings;
    for (VertexIndex hub : candidateFilter(dataGraphlets, pattern)) {
        assert(dataGraphlets[hub].hub == hub);
        std::vector<Binding> found = unifyOne(dataGraphlets[hub], pattern, mode);
        bindings.insert(bindings.end(), std::make_move_iterator(found.begin()),
                        std::make_move_iterator(found.end()));
    }

    if (ground) {
        // A satisfied ground pattern yields exactly one empty assignment.
        return {bindings.empty() ? UnifyOutcome::Kind::noMatch : UnifyOutcome::Kind::ground, {}};
    }
    if (bindings.empty()) return {UnifyOutcome::Kind::noMatch, {}};
    std::sort(bindings.begin(), bindings.end());
    assert(std::adjacent_find(bindings.begin(), bindings.end()) == bindings.end());
    return {UnifyOutcome::Kind::partial, std::move(bindings)};
}

bool isValid(const Binding& partial, const Binding& current) {
    // Query vertices: both sides sorted by key.
    auto ip = partial.begin();
    auto ic = current.begin();
    while (ip != partial.end() && ic != current.end()) {
        if (ip->first == ic->first) return false;
        if (ip->first < ic->first) ++ip;
        else ++ic;
    }
    // Data vertices.
    std::vector<VertexIndex> vp, vc;
    vp.reserve(partial.size());
    vc.reserve(current.size());
    for (const auto& [k, v] : partial) vp.push_back(v);
    for (const auto& [k, v] : current) vc.push_back(v);
    std::sort(vp.begin(), vp.end());
    std::sort(vc.begin(), vc.end());
    auto jp = vp.begin();
    auto jc = vc.begin();
    while (jp != vp.end() && jc != vc.end()) {
        if (*jp == *jc) return false;
        if (*jp < *jc) ++jp;
        else ++jc;
    }
    return true;
}

bool isInnerOrdering(const Ordering& inner, const Ordering& outer) {
    auto it = outer.begin();
    for (VertexIndex v : inner) {
        it = std::find(it, outer.end(), v);
        if (it == outer.end()) return false;
        ++it;
    }
    return true;
}

namespace {

Binding mergeBindings(const Binding& a, const Binding& b) {
    Binding merged;
    merged.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
    return merged;
}

class SearchEngine {
public:
    SearchEngine(const Graph& data, const Graph& query, const Ordering& ordering,
                 const MatchOptions& options)
        : dataGraphlets_(toGraphlets(data)), ordering_(ordering), options_(options) {
        patterns_.reserve(ordering.size());
        for (VertexIndex v : ordering) patterns_.push_back(patternOf(graphletOf(query, v)));
    }

    MatchResult run() {
        MatchResult result;
        if (options_.recordTrace) {
            trace_.emplace();
            trace_->states.insert({});
        }
        bool defined = search(0, {});
        result.solutions.assign(solutions_.begin(), solutions_.end());
        stats_.solutionsFound = result.solutions.size();
        result.stats = stats_;
        result.noMatch = !defined;
        result.trace = std::move(trace_);
        return result;
    }

private:
    bool search(std::size_t depth, const Binding& current) {
        if (depth == ordering_.size()) {
            solutions_.insert(current);
            return true;
        }
        auto substituted = substitute(patterns_[depth], current);
        if (!substituted) return false;
        ++stats_.unifyCalls;
        UnifyOutcome outcome = unify(dataGraphlets_, *substituted, options_.mode);
        if (outcome.kind == UnifyOutcome::Kind::noMatch) return false;
        if (outcome.kind == UnifyOutcome::Kind::ground) {
            ++stats_.recursiveCalls;
            return search(depth + 1, current);
        }
        stats_.partialGenerated += outcome.bindings.size();
        bool defined = false;
        for (const Binding& p : outcome.bindings) {
            if (!isValid(p, current)) continue;
            ++stats_.validPartial;
            Binding next = mergeBindings(p, current);
            if (trace_) trace_->states.insert(next);
            ++stats_.recursiveCalls;
            if (search(depth + 1, next)) defined = true;
        }
        return defined;
    }

    std::vector<Graphlet> dataGraphlets_;
    Ordering ordering_;
    MatchOptions options_;
    std::vector<PatternGraphlet> patterns_;

    SearchStats stats_;
    std::set<Binding> solutions_;
    std::optional<SearchTrace> trace_;
};

}  // namespace

MatchResult findSolutions(const Graph& data, const Graph& query, const Ordering& ordering,
                          const MatchOptions& options) {
    std::vector<bool> seen(query.vertexCount(), false);
    for (VertexIndex v : ordering) {
        if (v >= query.vertexCount()) {
            throw ValidationError("ordering mentions vertex index " + std::to_string(v) +
                                  ", which is not in the query");
        }
        if (seen[v]) {
            throw ValidationError("ordering repeats vertex '" + query.labelOf(v) + "'");
        }
        seen[v] = true;
    }
    for (VertexIndex v = 0; v < query.vertexCount(); ++v) {
        if (query.neighborsOf(v).empty()) {
            throw ValidationError("query vertex '" + query.labelOf(v) +
                                  "' is isolated; no graphlet search can bind it");
        }
    }
    if (options.enforceCover) {
        HubCover asCover(ordering.begin(), ordering.end());
        std::sort(asCover.begin(), asCover.end());
        if (!covers(query, asCover)) {
            std::string labels;
            for (VertexIndex v : ordering) {
                if (!labels.empty()) labels += ',';
                labels += query.labelOf(v);
            }
            throw ValidationError("ordering (" + labels +
                                  ") is not a hub cover of the query; its graphlets would not "
                                  "constrain every edge");
        }
    }
    return SearchEngine(data, query, ordering, options).run();
}

}  // namespace hubmatch
