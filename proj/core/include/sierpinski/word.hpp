#pragma once

#include <compare>
#include <string>
#include <vector>

namespace sierpinski {

/// A vertex of S(G,t): a fixed-length sequence of t base-vertex ids,
/// letters[0] most significant.
struct Word {
  std::vector<int> letters;

  Word() = default;
  explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}

  int length() const { return static_cast<int>(letters.size()); }
  int operator[](int i) const { return letters[static_cast<std::size_t>(i)]; }

  auto operator<=>(const Word&) const = default;
};

/// Display form with 1-based labels joined by '.', e.g. "1.3.3" for {0,2,2}.
std::string word_text(const Word& w);

/// Advances letters to the lexicographic successor over base n.
/// Returns false when the all-max word wraps back to all zeros.
bool next_letters(std::vector<int>& letters, int n);

}  // namespace sierpinski
