#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sierpinski/base_graph.hpp"
#include "sierpinski/bigint.hpp"
#include "sierpinski/word.hpp"

namespace sierpinski {

/// Context for all S(G,t) queries: the base graph, the dimension t, and
/// the cap on n^t beyond which explicit enumeration is refused.
class Params {
 public:
  static constexpr std::uint64_t kDefaultCap = 1'000'000;

  Params(BaseGraph base, int t, std::uint64_t explicit_cap = kDefaultCap);

  const BaseGraph& base() const { return base_; }
  int t() const { return t_; }
  std::uint64_t explicit_cap() const { return cap_; }

  /// n^t, exact.
  const BigInt& vertex_count() const { return vertex_count_; }

  /// True when n^t <= explicit_cap, i.e. explicit enumeration is allowed.
  bool within_cap() const { return within_cap_; }

  /// n^t as a machine integer. Throws cap_exceeded when not within_cap().
  std::uint64_t explicit_vertex_count() const;

 private:
  BaseGraph base_;
  int t_;
  std::uint64_t cap_;
  BigInt vertex_count_;
  bool within_cap_;
};

/// Base-n radix value of the word, first letter most significant.
/// A bijection onto [0, n^t), exact for any t.
BigInt word_rank(const Params& params, const Word& w);

/// Inverse of word_rank. Throws rank_out_of_range.
Word word_unrank(const Params& params, const BigInt& rank);

/// Adjacency test for S(G,t): true iff some position i has equal prefixes
/// before it, a base edge {u_i, v_i} at it, and the swapped constant tails
/// u_j = v_i, v_j = u_i after it. Always false for u = v. O(t).
bool is_edge(const Params& params, const Word& u, const Word& v);

/// The neighborhood of x: the words matching x except for a base neighbor
/// of the last letter in the final position, plus at most one extra word
/// obtained by swapping the last letter into the position of the letter
/// just before the trailing run (present iff that letter is a base
/// neighbor of the last letter). O(t + deg) time.
std::vector<Word> neighbors(const Params& params, const Word& x);

/// Degree of x in S(G,t) without materializing the neighborhood:
/// deg_G(last letter), plus 1 exactly when the word is not constant and
/// the letter before its trailing run is adjacent to the last letter.
int degree_of(const Params& params, const Word& x);

/// Pull-based stream over every edge of S(G,t), each exactly once, in a
/// fixed deterministic order: ascending level i in 1..t, then prefix rank,
/// then base edge (a < b); each pair is rank-ordered. State is O(t); the
/// edge set is never materialized.
///
/// Level i with prefix w of length i-1 and base edge {a, b} contributes
/// the edge {w a b^(t-i), w b a^(t-i)}.
class EdgeStream {
 public:
  /// Throws cap_exceeded when n^t > params.explicit_cap().
  explicit EdgeStream(const Params& params);

  /// Next edge, or nullopt when exhausted.
  std::optional<std::pair<Word, Word>> next();

 private:
  void skip_to_next_level();

  Params params_;
  std::vector<std::pair<int, int>> base_edges_;
  int level_ = 1;                  // current i in 1..t
  std::vector<int> prefix_;        // length level_-1, odometer over [0,n)
  std::size_t edge_index_ = 0;     // position in base_edges_
  bool done_ = false;
};

}  // namespace sierpinski
