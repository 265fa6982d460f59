#pragma once

#include <string>

#include "hubmatch/graph.hpp"

namespace hubmatch {

// Edge-list text format: one edge per line as `u v`, or a single token `u`
// declaring an isolated vertex. `#` starts a comment; blank lines, LF and
// CRLF endings are accepted. Duplicate lines collapse.
Graph parseEdgeList(const std::string& text);

// Sorted edges, then isolated vertices, one per line.
std::string writeEdgeList(const Graph& g);

// XML graphlet document: a `graph` root holding one `graphlet` element per
// vertex (`vertex` attribute), with `neighbor` text children and `boundary`
// children of exactly two `vertex` text children each. The document must be
// a consistent decomposition: adjacency symmetric across graphlets and each
// boundary list exactly the edges among that graphlet's neighbors.
Graph parseGraphletXml(const std::string& text);

std::string writeGraphletXml(const Graph& g);

}  // namespace hubmatch
