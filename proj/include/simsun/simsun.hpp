#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simsun/pattern.hpp"
#include "simsun/permutation.hpp"

namespace simsun {

bool has_double_descent(std::span<const int> word);

/// True iff for every 3 <= k <= n the subword of values <= k has no
/// double descent.
bool is_simsun(std::span<const int> word);
bool is_simsun(const Permutation& p);

/// Reduced subword of the k smallest values. Throws InvalidK unless 0 <= k <= n.
Permutation restriction(const Permutation& p, int k);

/// Gaps g in {0..n} where inserting n+1 keeps p simsun and pattern-free.
/// Throws NotInTree when p itself is not in the class.
std::vector<int> fertility_gaps(const Permutation& p, const PatternSet& pats);

/// Same as fertility_gaps without the membership check.
std::vector<int> fertile_gaps_unchecked(const Permutation& p, const PatternSet& pats);

/// Level n of the pattern-filtered generating tree, grown from the empty
/// permutation by insertion at fertility gaps, sorted lexicographically.
std::vector<Permutation> tree_level(int n, const PatternSet& pats);

enum class LabelKind { Plain, Tilde, Hat };

struct TreeLabel {
  LabelKind kind = LabelKind::Plain;
  int k = 0;

  std::string render() const;  // "(k)", "(k)~", "(k)^"
  auto operator<=>(const TreeLabel&) const = default;
};

/// Colored label of a node of the 132-avoiding simsun tree.
TreeLabel label_132(const Permutation& p);

/// Number of fertility positions of a node of the 213-avoiding simsun tree.
int label_213(const Permutation& p);

enum class TreeId { T132, T213, T231, T312, T132And213 };

TreeId parse_tree_id(std::string_view name);
std::string_view to_string(TreeId id);

struct SuccessionReport {
  TreeId tree = TreeId::T213;
  int n_max = 0;
  std::int64_t nodes_checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Expands the tree up to level n_max and checks that the children of every
/// node carry exactly the labels the tree's succession rule predicts.
SuccessionReport verify_succession(int n_max, TreeId tree);

}  // namespace simsun
