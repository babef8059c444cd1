#include "sierpinski/base_graph.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <string>

namespace sierpinski {

namespace {

// Parsers would otherwise happily allocate adjacency for absurd orders.
constexpr int kMaxOrder = 10'000'000;

std::string vertex_label(int v) { return std::to_string(v + 1); }

}  // namespace

BaseGraph::BaseGraph(int n, const std::vector<std::pair<int, int>>& edges)
    : n_(n), m_(0), min_degree_(0), max_degree_(0) {
  if (n < 2) {
    throw Error(Errc::order_too_small,
                "graph order must be at least 2, got " + std::to_string(n));
  }
  adjacency_.resize(static_cast<std::size_t>(n));
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(Errc::label_out_of_range,
                  "edge endpoint out of range: " + vertex_label(u) + " " +
                      vertex_label(v) + " with n = " + std::to_string(n));
    }
    if (u == v) {
      throw Error(Errc::self_loop, "self-loop at vertex " + vertex_label(u));
    }
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) {
      throw Error(Errc::duplicate_edge,
                  "duplicate edge {" + vertex_label(key.first) + ", " +
                      vertex_label(key.second) + "}");
    }
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  m_ = static_cast<std::int64_t>(seen.size());
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());

  min_degree_ = degree(0);
  max_degree_ = degree(0);
  for (int v = 1; v < n_; ++v) {
    min_degree_ = std::min(min_degree_, degree(v));
    max_degree_ = std::max(max_degree_, degree(v));
  }
}

bool BaseGraph::adjacent(int u, int v) const {
  const auto& adj = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<std::pair<int, int>> BaseGraph::edges() const {
  std::vector<std::pair<int, int>> result;
  result.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    for (int v : adjacency_[static_cast<std::size_t>(u)]) {
      if (u < v) result.emplace_back(u, v);
    }
  }
  return result;  // already lexicographic: u ascending, adjacency sorted
}

DegreeClasses degree_classes(const BaseGraph& g) {
  DegreeClasses dc;
  for (int v = 0; v < g.order(); ++v) {
    dc.classes[g.degree(v)].push_back(v);
  }
  for (const auto& [k, vs] : dc.classes) {
    dc.counts[k] = static_cast<std::int64_t>(vs.size());
  }
  return dc;
}

BigInt base_zagreb(const BaseGraph& g, int alpha) {
  if (alpha < 0) {
    throw Error(Errc::negative_exponent,
                "Zagreb exponent must be >= 0, got " + std::to_string(alpha));
  }
  BigInt sum = 0;
  for (int v = 0; v < g.order(); ++v) {
    sum += int_pow(BigInt(g.degree(v)), static_cast<unsigned long>(alpha));
  }
  return sum;
}

bool is_tree(const BaseGraph& g) {
  if (g.edge_count() != g.order() - 1) return false;
  std::vector<char> visited(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> stack{0};
  visited[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : g.neighbors(u)) {
      if (!visited[static_cast<std::size_t>(v)]) {
        visited[static_cast<std::size_t>(v)] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == g.order();
}

namespace {

bool is_skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

// Parses exactly `count` whitespace-separated long values and nothing else.
bool parse_longs(const std::string& line, long* out, int count) {
  std::istringstream ss(line);
  for (int i = 0; i < count; ++i) {
    if (!(ss >> out[i])) return false;
  }
  std::string rest;
  if (ss >> rest) return false;
  return true;
}

}  // namespace

BaseGraph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;

  auto next_payload_line = [&](bool required) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!is_skippable(line)) return true;
    }
    if (required) {
      throw Error(Errc::malformed_input,
                  "line " + std::to_string(line_no + 1) +
                      ": unexpected end of input");
    }
    return false;
  };

  next_payload_line(true);
  long header[2];
  if (!parse_longs(line, header, 2)) {
    throw Error(Errc::malformed_input, "line " + std::to_string(line_no) +
                                           ": expected header \"n m\"");
  }
  const long n = header[0];
  const long m = header[1];
  if (n < 2) {
    throw Error(Errc::order_too_small, "line " + std::to_string(line_no) +
                                           ": graph order must be at least 2, got " +
                                           std::to_string(n));
  }
  if (n > kMaxOrder) {
    throw Error(Errc::malformed_input, "line " + std::to_string(line_no) +
                                           ": graph order " + std::to_string(n) +
                                           " exceeds the supported maximum " +
                                           std::to_string(kMaxOrder));
  }
  if (m < 0) {
    throw Error(Errc::malformed_input, "line " + std::to_string(line_no) +
                                           ": edge count must be >= 0, got " +
                                           std::to_string(m));
  }

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::set<std::pair<long, long>> seen;
  for (long i = 0; i < m; ++i) {
    if (!next_payload_line(false)) {
      throw Error(Errc::malformed_input,
                  "line " + std::to_string(line_no + 1) + ": expected " +
                      std::to_string(m) + " edges, got " + std::to_string(i));
    }
    long e[2];
    if (!parse_longs(line, e, 2)) {
      throw Error(Errc::malformed_input, "line " + std::to_string(line_no) +
                                             ": expected edge \"u v\"");
    }
    if (e[0] < 1 || e[0] > n || e[1] < 1 || e[1] > n) {
      throw Error(Errc::label_out_of_range,
                  "line " + std::to_string(line_no) + ": vertex label out of [1, " +
                      std::to_string(n) + "]");
    }
    if (e[0] == e[1]) {
      throw Error(Errc::self_loop, "line " + std::to_string(line_no) +
                                       ": self-loop at vertex " +
                                       std::to_string(e[0]));
    }
    auto key = std::minmax(e[0], e[1]);
    if (!seen.insert(key).second) {
      throw Error(Errc::duplicate_edge,
                  "line " + std::to_string(line_no) + ": duplicate edge {" +
                      std::to_string(key.first) + ", " +
                      std::to_string(key.second) + "}");
    }
    edges.emplace_back(static_cast<int>(e[0] - 1), static_cast<int>(e[1] - 1));
  }
  if (next_payload_line(false)) {
    throw Error(Errc::malformed_input,
                "line " + std::to_string(line_no) + ": trailing content after " +
                    std::to_string(m) + " edges");
  }
  return BaseGraph(static_cast<int>(n), edges);
}

std::string serialize_edge_list(const BaseGraph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) {
    out << (u + 1) << ' ' << (v + 1) << '\n';
  }
  return out.str();
}

}  // namespace sierpinski
