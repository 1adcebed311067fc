#include "treeconn/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

namespace treeconn {
namespace {

long parse_number(const std::string& token, int line) {
  long value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError("number '" + token + "' is out of range", line);
  }
  if (ec != std::errc() || ptr != end) {
    throw ParseError("expected an integer, got '" + token + "'", line);
  }
  return value;
}

struct NumberLine {
  long a = 0;
  long b = 0;
  int line = 0;
};

std::string edge_text(long u, long v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

ParseError::ParseError(const std::string& message, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

Graph parse_edge_list(std::istream& in) {
  std::vector<NumberLine> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    std::vector<std::string> parts;
    std::string tok;
    while (tokens >> tok) parts.push_back(tok);
    if (parts.empty()) continue;
    if (parts.size() != 2) {
      throw ParseError("expected two numbers per line, got " + std::to_string(parts.size()),
                       line_no);
    }
    rows.push_back({parse_number(parts[0], line_no), parse_number(parts[1], line_no), line_no});
  }
  if (rows.empty()) throw ParseError("input contains no data");

  const NumberLine first = rows.front();
  bool header = first.a == first.b;
  if (!header && first.b == static_cast<long>(rows.size()) - 1) {
    header = true;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (rows[i].a >= first.a || rows[i].b >= first.a) {
        header = false;
        break;
      }
    }
  }

  long n = 0;
  std::size_t body_start = 0;
  if (header) {
    if (first.a < 0) throw ParseError("vertex count must be nonnegative", first.line);
    if (first.a > Graph::kMaxVertices) {
      throw ParseError("at most 64 vertices are supported, got " + std::to_string(first.a),
                       first.line);
    }
    if (first.b != static_cast<long>(rows.size()) - 1) {
      throw ParseError("header announces " + std::to_string(first.b) + " edges but " +
                           std::to_string(rows.size() - 1) + " follow",
                       first.line);
    }
    n = first.a;
    body_start = 1;
  }

  std::set<std::pair<long, long>> seen;
  std::vector<std::pair<int, int>> edges;
  long max_label = -1;
  for (std::size_t i = body_start; i < rows.size(); ++i) {
    const long u = rows[i].a;
    const long v = rows[i].b;
    if (u < 0 || v < 0) {
      throw ParseError("vertex label " + std::to_string(std::min(u, v)) + " is negative",
                       rows[i].line);
    }
    if (u == v) throw ParseError("loop edge at vertex " + std::to_string(u), rows[i].line);
    if (header && (u >= n || v >= n)) {
      throw ParseError("vertex label " + std::to_string(std::max(u, v)) + " is outside 0.." +
                           std::to_string(n - 1),
                       rows[i].line);
    }
    const std::pair<long, long> key{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second) {
      throw ParseError("duplicate edge " + edge_text(key.first, key.second), rows[i].line);
    }
    max_label = std::max({max_label, u, v});
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (!header) {
    n = max_label + 1;
    if (n > Graph::kMaxVertices) {
      throw ParseError("at most 64 vertices are supported, got " + std::to_string(n));
    }
  }
  try {
    return Graph(static_cast<int>(n), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph6(const std::string& line) {
  if (line.empty()) throw ParseError("empty graph6 line");
  for (char raw : line) {
    const unsigned char c = static_cast<unsigned char>(raw);
    if (c < 63 || c > 126) {
      throw ParseError(std::string("invalid graph6 character '") + raw + "'");
    }
  }
  if (line[0] == 126) throw ParseError("extended graph6 sizes are not supported");
  const int n = line[0] - 63;
  const long bits_needed = static_cast<long>(n) * (n - 1) / 2;
  const long bytes_needed = (bits_needed + 5) / 6;
  const long data_bytes = static_cast<long>(line.size()) - 1;
  if (data_bytes < bytes_needed) throw ParseError("graph6 line is truncated");
  if (data_bytes > bytes_needed) throw ParseError("graph6 line has trailing data");

  std::vector<std::pair<int, int>> edges;
  long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((line[1 + bit / 6] - 63) >> (5 - bit % 6) & 1) edges.emplace_back(i, j);
      ++bit;
    }
  }
  for (; bit < bytes_needed * 6; ++bit) {
    if ((line[1 + bit / 6] - 63) >> (5 - bit % 6) & 1) {
      throw ParseError("graph6 padding bits must be zero");
    }
  }
  return Graph(n, std::move(edges));
}

std::string emit_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 62) throw std::invalid_argument("graph6 output supports at most 62 vertices");
  const long bits = static_cast<long>(n) * (n - 1) / 2;
  std::string data((bits + 5) / 6, char(0));
  long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.has_edge(i, j)) data[bit / 6] |= char(1 << (5 - bit % 6));
      ++bit;
    }
  }
  for (char& c : data) c = static_cast<char>(c + 63);
  return std::string(1, static_cast<char>(63 + n)) + data;
}

std::string emit_dot(const Graph& g, const DisjointTreeFamily* family) {
  static const char* const kPalette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                                         "#ff7f00", "#a65628", "#f781bf", "#999999"};
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  if (family) {
    for (int v : family->terminals.members()) {
      out << "  " << v << " [shape=doublecircle];\n";
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) out << "  " << v << ";\n";
  }
  for (const auto& [u, v] : g.edges()) {
    int owner = -1;
    if (family) {
      for (std::size_t t = 0; t < family->trees.size() && owner < 0; ++t) {
        const auto& tree_edges = family->trees[t].edges;
        if (std::find(tree_edges.begin(), tree_edges.end(), std::pair<int, int>(u, v)) !=
            tree_edges.end()) {
          owner = static_cast<int>(t);
        }
      }
    }
    out << "  " << u << " -- " << v;
    if (owner >= 0) out << " [color=\"" << kPalette[owner % 8] << "\" penwidth=2]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string emit_certificate(const Graph& g, const KappaResult& result) {
  nlohmann::ordered_json doc;
  doc["graph"]["n"] = g.vertex_count();
  auto edge_rows = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges()) edge_rows.push_back({u, v});
  doc["graph"]["edges"] = std::move(edge_rows);
  doc["set"] = result.witness_set.members();
  doc["kappa"] = result.kappa;

  std::vector<std::vector<std::pair<int, int>>> trees;
  for (const auto& tree : result.family.trees) {
    auto sorted = tree.edges;
    std::sort(sorted.begin(), sorted.end());
    trees.push_back(std::move(sorted));
  }
  std::sort(trees.begin(), trees.end());
  auto tree_rows = nlohmann::ordered_json::array();
  for (const auto& tree : trees) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& [u, v] : tree) row.push_back({u, v});
    tree_rows.push_back(std::move(row));
  }
  doc["trees"] = std::move(tree_rows);
  return doc.dump(2) + "\n";
}

ParsedCertificate parse_certificate(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate is not valid JSON: ") + e.what());
  }
  try {
    const auto& graph_part = doc.at("graph");
    const int n = graph_part.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& entry : graph_part.at("edges")) {
      if (!entry.is_array() || entry.size() != 2) {
        throw ParseError("certificate edges must be pairs");
      }
      edges.emplace_back(entry[0].get<int>(), entry[1].get<int>());
    }
    Graph graph(n, std::move(edges));

    KappaResult result;
    result.kappa = doc.at("kappa").get<int>();
    result.witness_set = VertexSet(doc.at("set").get<std::vector<int>>());
    result.family.terminals = result.witness_set;
    for (const auto& tree_entry : doc.at("trees")) {
      TreeCertificate tree;
      tree.terminals = result.witness_set;
      std::vector<int> vertices = result.witness_set.members();
      for (const auto& entry : tree_entry) {
        if (!entry.is_array() || entry.size() != 2) {
          throw ParseError("certificate tree edges must be pairs");
        }
        const int u = entry[0].get<int>();
        const int v = entry[1].get<int>();
        tree.edges.emplace_back(std::min(u, v), std::max(u, v));
        vertices.push_back(u);
        vertices.push_back(v);
      }
      std::sort(vertices.begin(), vertices.end());
      vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
      tree.vertices = VertexSet(std::move(vertices));
      std::sort(tree.edges.begin(), tree.edges.end());
      result.family.trees.push_back(std::move(tree));
    }

    if (static_cast<int>(result.family.trees.size()) != result.kappa) {
      throw ParseError("certificate kappa " + std::to_string(result.kappa) +
                       " does not match its " + std::to_string(result.family.trees.size()) +
                       " trees");
    }
    const auto check = validate_certificate(graph, result.family);
    if (!check.ok) {
      throw ParseError("certificate does not verify: " + check.diagnostics.front());
    }
    return ParsedCertificate{std::move(graph), std::move(result)};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate has a malformed field: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace treeconn
