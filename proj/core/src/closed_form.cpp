#include "sierpinski/closed_form.hpp"

#include <sstream>
#include <string>

#include "json.hpp"

namespace sierpinski {

BigInt DegreeHistogram::total() const {
  BigInt sum = 0;
  for (const auto& [k, count] : counts) sum += count;
  return sum;
}

BigInt DegreeHistogram::degree_sum() const {
  BigInt sum = 0;
  for (const auto& [k, count] : counts) sum += BigInt(k) * count;
  return sum;
}

BigInt vertex_count(const Params& params) { return params.vertex_count(); }

BigInt edge_count(const Params& params) {
  return geometric_sum(params.base().order(), params.t()) *
         params.base().edge_count();
}

DegreeHistogram degree_histogram_closed(const Params& params) {
  const BaseGraph& g = params.base();
  const int n = g.order();
  // n^(t-1) words end in each base vertex; the subtracted share is scaled
  // by the prefix reach R = 1 + n + ... + n^(t-2). R = 0 at t = 1, where
  // the histogram reduces to the base graph's own.
  const BigInt lead = int_pow(BigInt(n), static_cast<unsigned long>(params.t() - 1));
  const BigInt reach = geometric_sum(n, params.t() - 1);
  const auto dc = degree_classes(g);
  auto class_size = [&dc](int k) -> BigInt {
    auto it = dc.counts.find(k);
    return it == dc.counts.end() ? BigInt(0) : BigInt(it->second);
  };

  DegreeHistogram h;
  for (int k = 0; k <= g.max_degree() + 1; ++k) {
    const BigInt vk = class_size(k);
    const BigInt vk_prev = k == 0 ? BigInt(0) : class_size(k - 1);
    const BigInt count =
        vk * lead - reach * (BigInt(k) * vk - BigInt(k - 1) * vk_prev);
    if (count != 0) h.counts[k] = count;
  }
  return h;
}

int min_degree(const Params& params) { return params.base().min_degree(); }

int max_degree(const Params& params) {
  const BaseGraph& g = params.base();
  if (params.t() == 1 || g.edge_count() == 0) return g.max_degree();
  return g.max_degree() + 1;
}

BigInt zagreb_closed(const Params& params, int alpha) {
  if (alpha < 0) {
    throw Error(Errc::negative_exponent,
                "Zagreb exponent must be >= 0, got " + std::to_string(alpha));
  }
  const BaseGraph& g = params.base();
  const int n = g.order();
  const BigInt lead = int_pow(BigInt(n), static_cast<unsigned long>(params.t() - 1));
  const BigInt reach = geometric_sum(n, params.t() - 1);

  BigInt result = (lead + alpha * reach) * base_zagreb(g, alpha);
  for (int j = 1; j <= alpha - 1; ++j) {
    result += reach * binomial(alpha, j - 1) * base_zagreb(g, j);
  }
  return result;
}

namespace {

void check_dual_path(const char* name, const BigInt& general,
                     const BigInt& expansion) {
  if (general != expansion) {
    throw Error(Errc::internal_inconsistency,
                std::string(name) + ": general formula gives " + general.str() +
                    " but the specialized expansion gives " + expansion.str());
  }
}

}  // namespace

BigInt first_zagreb(const Params& params) {
  const BigInt general = zagreb_closed(params, 2);
  const BaseGraph& g = params.base();
  const int n = g.order();
  // (n^t + n^(t-1) - 2)/(n-1) as a sum of two geometric series.
  const BigInt coeff =
      geometric_sum(n, params.t()) + geometric_sum(n, params.t() - 1);
  const BigInt reach = geometric_sum(n, params.t() - 1);
  const BigInt expansion =
      coeff * base_zagreb(g, 2) + reach * (2 * BigInt(g.edge_count()));
  check_dual_path("first_zagreb", general, expansion);
  return general;
}

BigInt forgotten_index(const Params& params) {
  const BigInt general = zagreb_closed(params, 3);
  const BaseGraph& g = params.base();
  const int n = g.order();
  // (n^t + 2 n^(t-1) - 3)/(n-1) as a sum of geometric series.
  const BigInt coeff =
      geometric_sum(n, params.t()) + 2 * geometric_sum(n, params.t() - 1);
  const BigInt reach = geometric_sum(n, params.t() - 1);
  const BigInt expansion =
      coeff * base_zagreb(g, 3) +
      reach * (2 * BigInt(g.edge_count()) + 3 * base_zagreb(g, 2));
  check_dual_path("forgotten_index", general, expansion);
  return general;
}

BigInt tree_leaf_count(const Params& params) {
  const BaseGraph& g = params.base();
  if (!is_tree(g)) {
    throw Error(Errc::not_a_tree,
                "leaf-count formula requires a tree base graph (connected, "
                "m = n - 1); got n = " +
                    std::to_string(g.order()) + ", m = " +
                    std::to_string(g.edge_count()));
  }
  const int n = g.order();
  BigInt leaves = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 1) ++leaves;
  }
  // eps (n^t - 2 n^(t-1) + 1)/(n-1) == eps (n^(t-1) - R), division-free.
  const BigInt lead = int_pow(BigInt(n), static_cast<unsigned long>(params.t() - 1));
  const BigInt reach = geometric_sum(n, params.t() - 1);
  return leaves * (lead - reach);
}

ZagrebTable zagreb_table(const Params& params, const std::vector<int>& alphas) {
  ZagrebTable table;
  for (int alpha : alphas) {
    table.values[alpha] = zagreb_closed(params, alpha);
  }
  return table;
}

std::string to_text(const DegreeHistogram& h) {
  std::ostringstream out;
  for (const auto& [k, count] : h.counts) {
    out << k << ": " << count << '\n';
  }
  return out.str();
}

std::string to_json(const DegreeHistogram& h) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& [k, count] : h.counts) {
    records.push_back({{"degree", k}, {"count", count.str()}});
  }
  return records.dump();
}

std::string to_text(const ZagrebTable& z) {
  std::ostringstream out;
  for (const auto& [alpha, value] : z.values) {
    out << alpha << ": " << value << '\n';
  }
  return out.str();
}

std::string to_json(const ZagrebTable& z) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& [alpha, value] : z.values) {
    records.push_back({{"alpha", alpha}, {"value", value.str()}});
  }
  return records.dump();
}

}  // namespace sierpinski
