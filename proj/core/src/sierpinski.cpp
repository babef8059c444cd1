#include "sierpinski/sierpinski.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "sierpinski/word.hpp"

namespace sierpinski {

std::string word_text(const Word& w) {
  std::ostringstream out;
  for (int i = 0; i < w.length(); ++i) {
    if (i > 0) out << '.';
    out << w[i] + 1;
  }
  return out.str();
}

bool next_letters(std::vector<int>& letters, int n) {
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (++*it < n) return true;
    *it = 0;
  }
  return false;
}

Params::Params(BaseGraph base, int t, std::uint64_t explicit_cap)
    : base_(std::move(base)), t_(t), cap_(explicit_cap) {
  if (t < 1) {
    throw Error(Errc::invalid_parameter,
                "dimension t must be >= 1, got " + std::to_string(t));
  }
  if (explicit_cap < 1) {
    throw Error(Errc::invalid_parameter, "explicit cap must be >= 1");
  }
  vertex_count_ = int_pow(BigInt(base_.order()), static_cast<unsigned long>(t_));
  within_cap_ = vertex_count_ <= cap_;
}

std::uint64_t Params::explicit_vertex_count() const {
  if (!within_cap_) {
    throw Error(Errc::cap_exceeded,
                "n^t = " + vertex_count_.str() +
                    " exceeds the explicit enumeration cap " +
                    std::to_string(cap_));
  }
  return vertex_count_.convert_to<std::uint64_t>();
}

namespace {

void check_word(const Params& params, const Word& w) {
  if (w.length() != params.t()) {
    throw Error(Errc::length_mismatch,
                "word has " + std::to_string(w.length()) +
                    " letters, expected t = " + std::to_string(params.t()));
  }
  const int n = params.base().order();
  for (int letter : w.letters) {
    if (letter < 0 || letter >= n) {
      throw Error(Errc::letter_out_of_range,
                  "letter " + std::to_string(letter + 1) + " out of [1, " +
                      std::to_string(n) + "] in word " + word_text(w));
    }
  }
}

// 0-based index of the rightmost letter (excluding the last) that differs
// from the last letter; -1 for a constant word. Right-to-left scan,
// typically O(1), worst case O(t).
int last_divergence(const Word& x) {
  const int t = x.length();
  const int tail = x[t - 1];
  for (int j = t - 2; j >= 0; --j) {
    if (x[j] != tail) return j;
  }
  return -1;
}

}  // namespace

BigInt word_rank(const Params& params, const Word& w) {
  check_word(params, w);
  const int n = params.base().order();
  BigInt rank = 0;
  for (int letter : w.letters) {
    rank *= n;
    rank += letter;
  }
  return rank;
}

Word word_unrank(const Params& params, const BigInt& rank) {
  if (rank < 0 || rank >= params.vertex_count()) {
    throw Error(Errc::rank_out_of_range,
                "rank " + rank.str() + " out of [0, " +
                    params.vertex_count().str() + ")");
  }
  const int n = params.base().order();
  std::vector<int> letters(static_cast<std::size_t>(params.t()), 0);
  BigInt rest = rank;
  for (int i = params.t() - 1; i >= 0; --i) {
    letters[static_cast<std::size_t>(i)] = (rest % n).convert_to<int>();
    rest /= n;
  }
  return Word(std::move(letters));
}

bool is_edge(const Params& params, const Word& u, const Word& v) {
  check_word(params, u);
  check_word(params, v);
  const int t = params.t();
  // The equal-prefix condition forces i to be the first differing index.
  int i = 0;
  while (i < t && u[i] == v[i]) ++i;
  if (i == t) return false;  // u = v
  if (!params.base().adjacent(u[i], v[i])) return false;
  for (int j = i + 1; j < t; ++j) {
    if (u[j] != v[i] || v[j] != u[i]) return false;
  }
  return true;
}

std::vector<Word> neighbors(const Params& params, const Word& x) {
  check_word(params, x);
  const int t = params.t();
  const int tail = x[t - 1];
  std::vector<Word> result;
  const auto& base_neighbors = params.base().neighbors(tail);
  result.reserve(base_neighbors.size() + 1);
  for (int y : base_neighbors) {
    Word w = x;
    w.letters[static_cast<std::size_t>(t - 1)] = y;
    result.push_back(std::move(w));
  }
  const int i = last_divergence(x);
  if (i >= 0 && params.base().adjacent(x[i], tail)) {
    // swap point: x = p x_i tail...tail  ->  extra = p tail x_i...x_i
    Word extra = x;
    extra.letters[static_cast<std::size_t>(i)] = tail;
    for (int j = i + 1; j < t; ++j) {
      extra.letters[static_cast<std::size_t>(j)] = x[i];
    }
    result.push_back(std::move(extra));
  }
  std::sort(result.begin(), result.end());  // canonical set order
  return result;
}

int degree_of(const Params& params, const Word& x) {
  check_word(params, x);
  const int tail = x[x.length() - 1];
  const int base_degree = params.base().degree(tail);
  const int i = last_divergence(x);
  if (i >= 0 && params.base().adjacent(x[i], tail)) return base_degree + 1;
  return base_degree;
}

EdgeStream::EdgeStream(const Params& params)
    : params_(params), base_edges_(params.base().edges()) {
  params_.explicit_vertex_count();  // enforce the cap up front
  done_ = base_edges_.empty();
}

void EdgeStream::skip_to_next_level() {
  ++level_;
  if (level_ > params_.t()) {
    done_ = true;
    return;
  }
  prefix_.assign(static_cast<std::size_t>(level_ - 1), 0);
  edge_index_ = 0;
}

std::optional<std::pair<Word, Word>> EdgeStream::next() {
  if (done_) return std::nullopt;
  const int t = params_.t();
  const int n = params_.base().order();

  auto [a, b] = base_edges_[edge_index_];
  std::vector<int> first(prefix_);
  first.resize(static_cast<std::size_t>(t));
  std::vector<int> second(first);
  const std::size_t swap_pos = prefix_.size();
  first[swap_pos] = a;
  second[swap_pos] = b;
  for (std::size_t j = swap_pos + 1; j < static_cast<std::size_t>(t); ++j) {
    first[j] = b;
    second[j] = a;
  }
  // a < b, so the first word has the smaller rank.
  std::pair<Word, Word> edge{Word(std::move(first)), Word(std::move(second))};

  if (++edge_index_ == base_edges_.size()) {
    edge_index_ = 0;
    if (prefix_.empty() || !next_letters(prefix_, n)) skip_to_next_level();
  }
  return edge;
}

}  // namespace sierpinski
