#include "hubmatch/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "hubmatch/errors.hpp"
#include "hubmatch/graphlet.hpp"

namespace hubmatch {

namespace {

std::vector<std::string> splitTokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

std::string xmlEscape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

Graph parseEdgeList(const std::string& text) {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;

    std::istringstream in(text);
    std::string line;
    std::size_t lineNumber = 0;
    while (std::getline(in, line)) {
        ++lineNumber;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::vector<std::string> tokens = splitTokens(line);
        if (tokens.empty()) continue;
        if (tokens.size() == 1) {
            vertices.push_back(tokens[0]);
        } else if (tokens.size() == 2) {
            if (tokens[0] == tokens[1]) {
                throw ParseError("line " + std::to_string(lineNumber) + ": self-loop on '" +
                                 tokens[0] + "'");
            }
            edges.emplace_back(tokens[0], tokens[1]);
        } else {
            throw ParseError("line " + std::to_string(lineNumber) +
                             ": expected one or two tokens, got " + std::to_string(tokens.size()));
        }
    }
    return Graph(vertices, edges);
}

std::string writeEdgeList(const Graph& g) {
    std::ostringstream out;
    for (const auto& [u, v] : g.edges()) {
        out << g.labelOf(u) << ' ' << g.labelOf(v) << '\n';
    }
    for (VertexIndex v = 0; v < g.vertexCount(); ++v) {
        if (g.neighborsOf(v).empty()) out << g.labelOf(v) << '\n';
    }
    return out.str();
}

namespace {

struct RawGraphlet {
    std::vector<std::string> neighbors;
    std::vector<std::pair<std::string, std::string>> boundaries;
};

std::map<std::string, RawGraphlet> readGraphletDocument(const std::string& text) {
    namespace pt = boost::property_tree;
    pt::ptree doc;
    std::istringstream in(text);
    try {
        pt::read_xml(in, doc, pt::xml_parser::trim_whitespace | pt::xml_parser::no_comments);
    } catch (const pt::xml_parser_error& e) {
        throw ParseError(std::string("malformed XML: ") + e.what());
    }

    auto graph = doc.get_child_optional("graph");
    if (!graph) throw ValidationError("expected a single <graph> root element");

    std::map<std::string, RawGraphlet> result;
    for (const auto& [name, node] : *graph) {
        if (name == "<xmlattr>") continue;
        if (name != "graphlet") {
            throw ValidationError("unexpected element <" + name + "> under <graph>");
        }
        auto hub = node.get_optional<std::string>("<xmlattr>.vertex");
        if (!hub) throw ValidationError("<graphlet> element without a vertex attribute");
        if (result.count(*hub)) {
            throw ValidationError("duplicate <graphlet> element for vertex '" + *hub + "'");
        }
        RawGraphlet raw;
        for (const auto& [childName, child] : node) {
            if (childName == "<xmlattr>") continue;
            if (childName == "neighbor") {
                raw.neighbors.push_back(child.data());
            } else if (childName == "boundary") {
                std::vector<std::string> ends;
                for (const auto& [endName, end] : child) {
                    if (endName != "vertex") {
                        throw ValidationError("unexpected element <" + endName +
                                              "> under <boundary>");
                    }
                    ends.push_back(end.data());
                }
                if (ends.size() != 2) {
                    throw ValidationError("vertex '" + *hub + "': <boundary> must hold exactly " +
                                          "two <vertex> children, got " +
                                          std::to_string(ends.size()));
                }
                if (ends[0] == ends[1]) {
                    throw ValidationError("vertex '" + *hub + "': boundary endpoints must differ");
                }
                raw.boundaries.emplace_back(ends[0], ends[1]);
            } else {
                throw ValidationError("unexpected element <" + childName + "> under <graphlet>");
            }
        }
        result.emplace(*hub, std::move(raw));
    }
    return result;
}

}  // namespace

Graph parseGraphletXml(const std::string& text) {
    auto raw = readGraphletDocument(text);

    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [hub, gl] : raw) {
        vertices.push_back(hub);
        for (const auto& n : gl.neighbors) edges.emplace_back(hub, n);
    }
    Graph g(vertices, edges);

    if (g.vertexCount() != raw.size()) {
        for (const auto& [hub, gl] : raw) {
            for (const auto& n : gl.neighbors) {
                if (!raw.count(n)) {
                    throw ValidationError("vertex '" + hub + "' lists neighbor '" + n +
                                          "' which has no <graphlet> element");
                }
            }
        }
    }

    // The declared lists must agree with the decomposition of the
    // reconstructed graph: symmetric adjacency, complete and edge-backed
    // boundaries.
    for (const auto& [hubLabel, declared] : raw) {
        Graphlet computed = graphletOf(g, hubLabel);

        std::vector<std::string> declaredNeighbors = declared.neighbors;
        std::sort(declaredNeighbors.begin(), declaredNeighbors.end());
        declaredNeighbors.erase(
            std::unique(declaredNeighbors.begin(), declaredNeighbors.end()),
            declaredNeighbors.end());
        std::vector<std::string> computedNeighbors;
        for (VertexIndex n : computed.neighbors) computedNeighbors.push_back(g.labelOf(n));
        if (declaredNeighbors != computedNeighbors) {
            throw ValidationError("vertex '" + hubLabel +
                                  "': neighbor list is inconsistent with the other graphlets");
        }

        std::vector<Edge> declaredBoundaries;
        for (const auto& [a, b] : declared.boundaries) {
            auto ai = std::find(declaredNeighbors.begin(), declaredNeighbors.end(), a);
            auto bi = std::find(declaredNeighbors.begin(), declaredNeighbors.end(), b);
            if (ai == declaredNeighbors.end() || bi == declaredNeighbors.end()) {
                throw ValidationError("vertex '" + hubLabel + "': boundary {" + a + "," + b +
                                      "} mentions a non-neighbor");
            }
            VertexIndex au = g.indexOf(a);
            VertexIndex bu = g.indexOf(b);
            declaredBoundaries.emplace_back(std::min(au, bu), std::max(au, bu));
        }
        std::sort(declaredBoundaries.begin(), declaredBoundaries.end());
        declaredBoundaries.erase(
            std::unique(declaredBoundaries.begin(), declaredBoundaries.end()),
            declaredBoundaries.end());
        if (declaredBoundaries != computed.boundaries) {
            throw ValidationError("vertex '" + hubLabel +
                                  "': boundary list does not match the edges among its neighbors");
        }
    }
    return g;
}

std::string writeGraphletXml(const Graph& g) {
    std::ostringstream out;
    out << "<graph>\n";
    for (const Graphlet& gl : toGraphlets(g)) {
        out << " <graphlet vertex=\"" << xmlEscape(g.labelOf(gl.hub)) << "\">\n";
        for (VertexIndex n : gl.neighbors) {
            out << "  <neighbor>" << xmlEscape(g.labelOf(n)) << "</neighbor>\n";
        }
        for (const auto& [u, v] : gl.boundaries) {
            out << "  <boundary>\n";
            out << "   <vertex>" << xmlEscape(g.labelOf(u)) << "</vertex>\n";
            out << "   <vertex>" << xmlEscape(g.labelOf(v)) << "</vertex>\n";
            out << "  </boundary>\n";
        }
        out << " </graphlet>\n";
    }
    out << "</graph>\n";
    return out.str();
}

}  // namespace hubmatch
