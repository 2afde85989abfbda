#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace simsun {

// A word of distinct positive integers, not necessarily reduced.
using Word = std::vector<int>;

/// A permutation of {1..n} in one-line notation. n = 0 is the empty
/// permutation. Immutable once constructed.
class Permutation {
 public:
  Permutation() = default;

  /// Throws Error(InvalidWord) unless `entries` is exactly {1..n}.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);

  /// Parses "4 1 3 2 5" (whitespace separated) or the literal "e".
  static Permutation parse(std::string_view text);
  std::string render() const;

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  bool empty() const noexcept { return entries_.empty(); }

  // 0-based access; values are 1-based.
  int operator[](int index) const { return entries_[static_cast<std::size_t>(index)]; }
  std::span<const int> entries() const noexcept { return entries_; }

  Permutation inverse() const;
  Permutation reverse() const;
  Permutation complement() const;

  /// Inserts n+1 into gap g (0 <= g <= n; gap g sits before 0-based index g).
  Permutation insert_max(int gap) const;

  /// Removes the entry n. Throws on the empty permutation.
  Permutation remove_max() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> entries, Unchecked) : entries_(std::move(entries)) {}
  friend Permutation reduce(std::span<const int> word);

  std::vector<int> entries_;
};

/// Order-isomorphic relabelling onto {1..k}. Throws InvalidWord on duplicates.
Permutation reduce(std::span<const int> word);

/// Removes the entry 1 and reduces.
Permutation delete_smallest(const Permutation& p);

struct Statistics {
  std::vector<int> descent_positions;      // 1-based i with p_i > p_{i+1}
  std::int64_t inversions = 0;
  std::vector<int> left_to_right_minima;   // values, in position order
  std::vector<int> right_to_left_maxima;   // values, in position order
};

Statistics statistics(const Permutation& p);
int descent_count(std::span<const int> word);

struct MaxSplit {
  Word sigma;  // entries left of n
  Word tau;    // entries right of n
};

MaxSplit decompose_at_max(const Permutation& p);

/// Finest factorization p = w1 w2 ... wm with every entry of wi smaller than
/// every entry of w(i+1).
std::vector<Word> split_min_components(const Permutation& p);

/// sigma (+) tau: tau shifted up by |sigma| and appended.
Permutation direct_sum(const Permutation& sigma, const Permutation& tau);

}  // namespace simsun
