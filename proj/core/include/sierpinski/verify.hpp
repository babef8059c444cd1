#pragma once

#include <string>
#include <vector>

#include "sierpinski/closed_form.hpp"
#include "sierpinski/sierpinski.hpp"

namespace sierpinski {

/// Degree of every vertex of S(G,t), indexed by word rank, obtained by
/// counting incidences in the edge stream. Shares no code path with the
/// closed forms or the O(t) degree query. Throws cap_exceeded.
std::vector<int> stream_degree_census(const Params& params);

/// Brute-force degree histogram built from the edge-stream census. Every
/// per-word degree is recomputed a second way through the O(t) query and
/// compared; a disagreement throws internal_inconsistency.
DegreeHistogram histogram_bruteforce(const Params& params);

/// Sum of (edge-stream degree)^alpha over all words, exact.
/// Throws cap_exceeded and negative_exponent.
BigInt zagreb_bruteforce(const Params& params, int alpha);

struct CheckResult {
  std::string name;
  std::string closed_value;
  std::string oracle_value;
  bool pass = false;
};

/// Full closed-form vs. oracle comparison for one (G, t) instance.
struct CrossCheckReport {
  std::string graph_id;
  int t = 0;
  std::vector<CheckResult> checks;
  bool overall = false;  // true iff every check passed
};

/// Compares closed form against the explicit-construction oracle for:
/// vertex count, edge count, min/max degree, the degree histogram,
/// Z_alpha for alpha in 0..alpha_max, and the leaf count when the base
/// graph is a tree. Collects every result; never stops at the first
/// failure. Throws cap_exceeded when n^t exceeds the enumeration cap.
CrossCheckReport cross_check(const Params& params, int alpha_max,
                             const std::string& graph_id = "");

/// Aligned human-readable rendering, one line per check.
std::string to_text(const CrossCheckReport& r);
/// JSON document with one record per check.
std::string to_json(const CrossCheckReport& r);

}  // namespace sierpinski
