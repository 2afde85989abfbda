#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simsun/permutation.hpp"

namespace simsun {

/// A classical or vincular pattern. Pattern positions i and i+1 (1-based)
/// must occupy adjacent host positions whenever i is in the adjacency set.
///
/// Text syntax uses dashes: digits not separated by '-' are adjacent, so
/// "3-2-1" is the classical 321, "32-1" is the hatted pair over 3,2 and
/// "321" requires all three entries to be consecutive.
class VincularPattern {
 public:
  VincularPattern() = default;
  VincularPattern(Permutation pattern, std::vector<int> adjacent_pairs);

  static VincularPattern classical(Permutation pattern);
  static VincularPattern parse(std::string_view text);

  const Permutation& pattern() const noexcept { return pattern_; }
  int length() const noexcept { return pattern_.size(); }
  /// Sorted 1-based indices i such that positions i, i+1 are adjacent.
  std::vector<int> adjacent_pairs() const;
  bool adjacent(int i) const { return adjacent_[static_cast<std::size_t>(i - 1)]; }
  bool is_classical() const;

  std::string render() const;

  bool operator==(const VincularPattern&) const = default;

 private:
  Permutation pattern_;
  std::vector<bool> adjacent_;  // size k-1
};

using PatternSet = std::vector<VincularPattern>;

/// Comma-separated patterns, e.g. "1-3-2,2-1-3". Empty text or "none" is the
/// empty set.
PatternSet parse_pattern_set(std::string_view text);
std::string render_pattern_set(const PatternSet& pats);

/// The six classical patterns of length 3, in lexicographic order.
const PatternSet& classical_length3();

/// True iff some occurrence of `pat` exists in `word` (distinct entries).
bool contains(std::span<const int> word, const VincularPattern& pat);
bool contains(const Permutation& host, const VincularPattern& pat);

/// True iff some occurrence of `pat` uses word[last] as its final entry and
/// only entries at indices <= last.
bool contains_ending_at(std::span<const int> word, const VincularPattern& pat, int last);

bool avoids_all(const Permutation& host, const PatternSet& pats);
bool avoids_all(std::span<const int> word, const PatternSet& pats);

}  // namespace simsun
