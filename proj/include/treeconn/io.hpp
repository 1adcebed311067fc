#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "treeconn/graph.hpp"
#include "treeconn/steiner.hpp"

namespace treeconn {

// Input error with a 1-based line number when one applies (0 otherwise).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line = 0);
  int line() const { return line_; }

 private:
  int line_;
};

// Reads a whitespace-separated edge list. Text after '#' on any line is a
// comment. The first data line is taken as an "n m" header when it is not
// usable as an edge of the rest of the input: either its two numbers are
// equal, or the second number matches the count of remaining lines and every
// label below fits under the first number. Otherwise all lines are edges and
// the vertex count is one past the largest label.
Graph parse_edge_list(std::istream& in);

// Writes an "n m" header followed by one sorted "u v" line per edge.
std::string emit_edge_list(const Graph& g);

// Standard one-line ASCII code for graphs on up to 62 vertices: the first
// byte stores n + 63 and the rest pack the upper triangle of the adjacency
// matrix in column order, six bits per byte, most significant bit first.
Graph parse_graph6(const std::string& line);
std::string emit_graph6(const Graph& g);

// Graphviz source for the graph. With a family, terminals are drawn as double
// circles and each tree's edges share one color.
std::string emit_dot(const Graph& g, const DisjointTreeFamily* family = nullptr);

// JSON certificate: the graph, the vertex set, the kappa value, and one edge
// list per tree. parse_certificate re-checks the family against the graph and
// rejects anything inconsistent.
std::string emit_certificate(const Graph& g, const KappaResult& result);

struct ParsedCertificate {
  Graph graph;
  KappaResult result;
};

ParsedCertificate parse_certificate(const std::string& text);

}  // namespace treeconn
