#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rgpoly/ribbon.hpp"

namespace rgpoly {

struct ParseError {
    int line = 0;
    int col = 0;
    std::string message;
};

struct NamedGraph {
    std::string name;
    RibbonGraph graph;
    std::vector<std::string> edge_names;  // by edge index
    int line = 0;                         // line of the graph header
};

struct GraphFile {
    std::vector<NamedGraph> graphs;
    std::vector<ParseError> errors;
};

/// Parses the plain-text graph format:
///   graph <name>
///   vertex <vid>: <dart> <dart> ...
///   edge <eid>: <dartA> <dartB>
///   weight <eid> <symbol>
///   tangle <eid> w1|w2|w3|w4
/// '#' starts a comment. Returns every well-formed graph plus positioned
/// errors for the rest; a graph block with any error is dropped whole.
GraphFile parse_graphs(std::string_view text);

/// Canonical text form: generated d/e/v names, rotations starting at each
/// cycle's smallest dart, edges in id order. parse(serialize(g)) rebuilds g
/// exactly, and serializing a parsed canonical file is the identity.
std::string serialize(const RibbonGraph& g, const std::string& name);

/// Command dispatch for the CLI. Returns the process exit code:
/// 0 success / all checks pass, 1 verification failure, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rgpoly
