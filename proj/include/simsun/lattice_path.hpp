#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace simsun {

enum class Step : char { U = 'U', D = 'D', H = 'H' };

/// A word over {U, D, H}. Text form is the contiguous letters, "e" if empty.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  /// Throws ParseError on letters other than U, D, H.
  static LatticePath parse(std::string_view text);
  std::string render() const;

  int size() const noexcept { return static_cast<int>(steps_.size()); }
  bool empty() const noexcept { return steps_.empty(); }
  Step operator[](int i) const { return steps_[static_cast<std::size_t>(i)]; }
  std::span<const Step> steps() const noexcept { return steps_; }
  int count(Step s) const;

  /// Concatenation.
  LatticePath operator+(const LatticePath& other) const;
  LatticePath& operator+=(const LatticePath& other);

  /// Reversed and with U and D exchanged.
  LatticePath mirror() const;

  auto operator<=>(const LatticePath&) const = default;
  bool operator==(const LatticePath&) const = default;

 private:
  std::vector<Step> steps_;
};

/// Shorthand for literals in code: path("UUDD").
LatticePath path(std::string_view text);

enum class PathClass { Dyck, Motzkin, D1, D2, Dprime, DudFreeExceptLastPeak };

std::string_view to_string(PathClass c);
PathClass parse_path_class(std::string_view name);
const std::vector<PathClass>& all_path_classes();

/// Nonnegative and returns to the axis.
bool is_motzkin(const LatticePath& p);
/// Motzkin with no H steps.
bool is_dyck(const LatticePath& p);

bool is_member(const LatticePath& p, PathClass c);

/// Every class whose membership predicate holds, in enum order.
std::vector<PathClass> classify(const LatticePath& p);

/// Second reading of Dprime: every peak other than the first and the last
/// sits inside a UUDD factor. Equal to is_member(p, Dprime) on Dyck paths.
bool is_dprime_by_peaks(const LatticePath& p);

/// All paths of the class, lexicographic with U < D < H. n is the semilength
/// for the Dyck-based classes and the length for Motzkin.
std::vector<LatticePath> enumerate_paths(int n, PathClass c);

struct PathStats {
  int peaks = 0;                 // UD factors
  int valleys = 0;               // DU factors
  std::int64_t area = 0;         // lattice cells between path and axis
  int max_ascent_run = 0;        // longest maximal run of U
  int final_descent_length = 0;  // trailing run of D
  int up_steps = 0;
  int axis_h_steps = 0;          // H steps at height 0
};

PathStats path_stats(const LatticePath& p);

/// Occurrences of `factor` as a contiguous subword, overlaps allowed.
int count_factor(const LatticePath& p, std::string_view factor);

/// Maximal runs of equal letters, as (step, length), for Dyck paths.
struct Run {
  Step step;
  int length;
};
std::vector<Run> runs(const LatticePath& p);

}  // namespace simsun
