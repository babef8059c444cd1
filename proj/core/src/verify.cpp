#include "sierpinski/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "sierpinski/word.hpp"

namespace sierpinski {

namespace {

// Rank as a machine integer; callers guarantee n^t <= explicit_cap.
std::uint64_t rank_u64(const Word& w, int n) {
  std::uint64_t rank = 0;
  for (int letter : w.letters) {
    rank = rank * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(letter);
  }
  return rank;
}

struct Census {
  std::vector<int> degrees;  // indexed by word rank
  std::uint64_t edge_total = 0;
};

Census run_census(const Params& params) {
  Census census;
  census.degrees.assign(params.explicit_vertex_count(), 0);
  const int n = params.base().order();
  EdgeStream stream(params);
  while (auto edge = stream.next()) {
    ++census.degrees[rank_u64(edge->first, n)];
    ++census.degrees[rank_u64(edge->second, n)];
    ++census.edge_total;
  }
  return census;
}

std::string render(const BigInt& v) { return v.str(); }

std::string render(const DegreeHistogram& h) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [k, count] : h.counts) {
    if (!first) out << ", ";
    first = false;
    out << k << ": " << count;
  }
  out << '}';
  return out.str();
}

}  // namespace

std::vector<int> stream_degree_census(const Params& params) {
  return run_census(params).degrees;
}

DegreeHistogram histogram_bruteforce(const Params& params) {
  const auto degrees = stream_degree_census(params);
  const int n = params.base().order();

  // Recompute every degree through the O(t) query; the two routes must
  // agree word by word.
  std::vector<int> letters(static_cast<std::size_t>(params.t()), 0);
  for (std::size_t rank = 0; rank < degrees.size(); ++rank) {
    const Word w(letters);
    const int direct = degree_of(params, w);
    if (direct != degrees[rank]) {
      throw Error(Errc::internal_inconsistency,
                  "word " + word_text(w) + ": direct degree " +
                      std::to_string(direct) + " != edge-stream degree " +
                      std::to_string(degrees[rank]));
    }
    next_letters(letters, n);
  }

  DegreeHistogram h;
  for (int d : degrees) h.counts[d] += 1;
  return h;
}

BigInt zagreb_bruteforce(const Params& params, int alpha) {
  if (alpha < 0) {
    throw Error(Errc::negative_exponent,
                "Zagreb exponent must be >= 0, got " + std::to_string(alpha));
  }
  const auto degrees = stream_degree_census(params);
  BigInt sum = 0;
  for (int d : degrees) {
    sum += int_pow(BigInt(d), static_cast<unsigned long>(alpha));
  }
  return sum;
}

CrossCheckReport cross_check(const Params& params, int alpha_max,
                             const std::string& graph_id) {
  CrossCheckReport report;
  report.graph_id =
      graph_id.empty()
          ? "G(n=" + std::to_string(params.base().order()) +
                ",m=" + std::to_string(params.base().edge_count()) + ")"
          : graph_id;
  report.t = params.t();

  const Census census = run_census(params);
  auto add = [&report](const std::string& name, const std::string& closed,
                       const std::string& oracle) {
    report.checks.push_back({name, closed, oracle, closed == oracle});
  };

  add("vertex_count", render(vertex_count(params)),
      std::to_string(census.degrees.size()));
  add("edge_count", render(edge_count(params)),
      std::to_string(census.edge_total));

  const auto [min_it, max_it] =
      std::minmax_element(census.degrees.begin(), census.degrees.end());
  add("min_degree", std::to_string(min_degree(params)), std::to_string(*min_it));
  add("max_degree", std::to_string(max_degree(params)), std::to_string(*max_it));

  add("degree_histogram", render(degree_histogram_closed(params)),
      render(histogram_bruteforce(params)));

  for (int alpha = 0; alpha <= alpha_max; ++alpha) {
    add("zagreb[" + std::to_string(alpha) + "]",
        render(zagreb_closed(params, alpha)),
        render(zagreb_bruteforce(params, alpha)));
  }

  if (is_tree(params.base())) {
    std::uint64_t oracle_leaves = 0;
    for (int d : census.degrees) {
      if (d == 1) ++oracle_leaves;
    }
    add("tree_leaf_count", render(tree_leaf_count(params)),
        std::to_string(oracle_leaves));
  }

  report.overall = std::all_of(report.checks.begin(), report.checks.end(),
                               [](const CheckResult& c) { return c.pass; });
  return report;
}

std::string to_text(const CrossCheckReport& r) {
  std::ostringstream out;
  out << "cross-check " << r.graph_id << " t=" << r.t << '\n';
  std::size_t name_width = 0;
  for (const auto& check : r.checks) {
    name_width = std::max(name_width, check.name.size());
  }
  for (const auto& check : r.checks) {
    out << "  " << (check.pass ? "pass" : "FAIL") << "  " << std::left
        << std::setw(static_cast<int>(name_width)) << check.name
        << "  closed=" << check.closed_value
        << "  oracle=" << check.oracle_value << '\n';
  }
  out << "overall: " << (r.overall ? "pass" : "FAIL") << '\n';
  return out.str();
}

std::string to_json(const CrossCheckReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& check : r.checks) {
    checks.push_back({{"name", check.name},
                      {"closed", check.closed_value},
                      {"oracle", check.oracle_value},
                      {"pass", check.pass}});
  }
  nlohmann::json doc = {{"graph", r.graph_id},
                        {"t", r.t},
                        {"checks", checks},
                        {"overall", r.overall}};
  return doc.dump();
}

}  // namespace sierpinski
