#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sierpinski/bigint.hpp"
#include "sierpinski/errors.hpp"

namespace sierpinski {

/// Simple undirected graph with 0-based vertex ids and sorted adjacency
/// lists. Immutable after construction.
class BaseGraph {
 public:
  /// Validates and builds the graph. Edges are 0-based pairs.
  /// Throws order_too_small (n < 2), label_out_of_range, self_loop,
  /// duplicate_edge (an edge listed twice in either orientation).
  BaseGraph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  std::int64_t edge_count() const { return m_; }

  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(int u, int v) const;

  int min_degree() const { return min_degree_; }
  int max_degree() const { return max_degree_; }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const BaseGraph& other) const {
    return n_ == other.n_ && adjacency_ == other.adjacency_;
  }

 private:
  int n_;
  std::int64_t m_;
  int min_degree_;
  int max_degree_;
  std::vector<std::vector<int>> adjacency_;
};

/// Vertices grouped by degree. Degrees with no vertices are absent.
struct DegreeClasses {
  std::map<int, std::vector<int>> classes;  // degree -> sorted vertex ids
  std::map<int, std::int64_t> counts;       // degree -> class size
};

DegreeClasses degree_classes(const BaseGraph& g);

/// Sum of deg(v)^alpha over all vertices, exact. 0^0 counts as 1, so
/// alpha = 0 gives the vertex count even with isolated vertices.
/// Throws negative_exponent.
BigInt base_zagreb(const BaseGraph& g, int alpha);

/// True when the graph is connected with exactly n-1 edges.
bool is_tree(const BaseGraph& g);

/// Parses the edge-list format: '#' comment lines and blank lines are
/// skipped anywhere; the first payload line is "n m"; exactly m lines
/// "u v" follow with 1-based labels. Error messages carry line numbers.
BaseGraph parse_edge_list(std::istream& in);

/// Canonical text form: "n m" then edges as "u v", 1-based, u < v,
/// sorted lexicographically. parse_edge_list round-trips it.
std::string serialize_edge_list(const BaseGraph& g);

}  // namespace sierpinski
