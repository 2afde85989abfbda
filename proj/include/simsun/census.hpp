#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simsun/pattern.hpp"
#include "simsun/permutation.hpp"
#include "simsun/sequences.hpp"

namespace simsun {

enum class CountMethod { Brute, Tree };

CountMethod parse_count_method(std::string_view name);

/// |RS_n(pats)|. Brute walks all words position by position and prunes
/// prefixes that already fail; Tree expands the filtered generating tree.
/// threads = 0 uses the hardware concurrency.
BigInt count_class(int n, const PatternSet& pats, CountMethod method, int threads = 0);

/// Canonical key of a set of classical length-3 patterns: sorted, e.g.
/// "123,132"; "none" for the empty set. Throws NotTabulated otherwise.
std::string class_key(const PatternSet& pats);

/// Smallest n from which the tabulated closed form holds.
int tabulated_from(const PatternSet& pats);

/// Tabulated |RS_n(pats)|; nullopt below the row's threshold.
/// Throws NotTabulated for sets outside the tables.
std::optional<BigInt> expected_count(int n, const PatternSet& pats);

/// Every tabulated class, the empty set first, then by size and key.
std::vector<PatternSet> tabulated_classes();

struct ContainAllSix {
  int n = 0;
  BigInt observed;
  BigInt formula;
  std::vector<Permutation> witnesses;  // filled only when observed <= 100

  bool ok() const { return observed == formula; }
};

/// Simsun permutations containing all six classical patterns of length 3,
/// counted directly and by E_{n+1} - C_n - 2M_n - S_n + 2F_{n+1} + 2^{n-1}
/// + n^2 - 3n - 1. Throws OutOfStatedRange for n < 5.
ContainAllSix contain_all_six(int n, int threads = 0);
BigInt contain_all_six_formula(int n);

struct CountRecord {
  std::string cls;  // pattern set in dash notation, "none" if empty
  int n = 0;
  BigInt brute;
  BigInt tree;
  std::optional<BigInt> expected;

  bool ok() const { return brute == tree && (!expected || *expected == brute); }
};

struct CountReport {
  int n_max = 0;
  std::vector<CountRecord> rows;
  std::vector<ContainAllSix> contain_all_six;

  bool ok() const;
  std::string to_json() const;
  std::string to_text() const;
};

/// Brute and tree counts against the tables for n = 1..n_max.
CountReport reproduce_tables(int n_max, int threads = 0);

/// reproduce_tables plus contain_all_six for 5 <= n <= six_max.
CountReport full_census(int n_max, int six_max, int threads = 0);

}  // namespace simsun
