#pragma once

#include <map>
#include <string>
#include <vector>

#include "sierpinski/bigint.hpp"
#include "sierpinski/sierpinski.hpp"

namespace sierpinski {

/// Exact degree -> count map for S(G,t). Zero counts are omitted.
struct DegreeHistogram {
  std::map<int, BigInt> counts;

  /// Total vertex count, sum of all class sizes.
  BigInt total() const;
  /// Sum of degree * count, i.e. twice the edge count.
  BigInt degree_sum() const;

  bool operator==(const DegreeHistogram&) const = default;
};

/// Exact alpha -> Z_alpha(S(G,t)) map.
struct ZagrebTable {
  std::map<int, BigInt> values;
};

/// Number of vertices of S(G,t), n^t, exact for any t.
BigInt vertex_count(const Params& params);

/// Number of edges of S(G,t): (1 + n + ... + n^(t-1)) * |E(G)|, exact.
BigInt edge_count(const Params& params);

/// Closed-form degree histogram of S(G,t), exact for any t: for each
/// degree k the count is
///   |V_k| n^(t-1) - (1 + n + ... + n^(t-2)) (k |V_k| - (k-1) |V_(k-1)|)
/// where V_k is the set of base vertices of degree k. Degree 0 is covered
/// by the same expression (its count is |V_0| n^(t-1)).
DegreeHistogram degree_histogram_closed(const Params& params);

/// Minimum degree of S(G,t); equals the base graph's minimum degree.
int min_degree(const Params& params);

/// Maximum degree of S(G,t): Delta(G) when t = 1 or G has no edges,
/// otherwise Delta(G) + 1.
int max_degree(const Params& params);

/// General first Zagreb index Z_alpha(S(G,t)) = sum of deg^alpha over all
/// vertices, evaluated in closed form from base-graph invariants:
///   (n^(t-1) + alpha R) Z_alpha(G) + R sum_{j=1}^{alpha-1} C(alpha, j-1) Z_j(G)
/// with R = 1 + n + ... + n^(t-2). Exact for any t; throws
/// negative_exponent.
BigInt zagreb_closed(const Params& params, int alpha);

/// Z_2(S(G,t)), the first Zagreb index, computed both via zagreb_closed
/// and via the specialized expansion in Z_2(G) and |E(G)|; throws
/// internal_inconsistency if the two routes disagree.
BigInt first_zagreb(const Params& params);

/// Z_3(S(G,t)), the forgotten topological index, dual-path checked like
/// first_zagreb.
BigInt forgotten_index(const Params& params);

/// Leaf count of S(T,t) for a tree base T: eps(T) (n^t - 2 n^(t-1) + 1)/(n-1)
/// where eps(T) is the number of leaves of T. Throws not_a_tree.
BigInt tree_leaf_count(const Params& params);

ZagrebTable zagreb_table(const Params& params, const std::vector<int>& alphas);

/// "k: count" lines, ascending k, exact decimal counts.
std::string to_text(const DegreeHistogram& h);
/// JSON array of {"degree": k, "count": "<decimal>"} records.
std::string to_json(const DegreeHistogram& h);

/// "alpha: value" lines, ascending alpha.
std::string to_text(const ZagrebTable& z);
/// JSON array of {"alpha": a, "value": "<decimal>"} records.
std::string to_json(const ZagrebTable& z);

}  // namespace sierpinski
