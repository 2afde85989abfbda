#include "simsun/pattern.hpp"

#include <algorithm>
#include <array>

#include "simsun/error.hpp"

namespace simsun {

VincularPattern::VincularPattern(Permutation pattern, std::vector<int> adjacent_pairs)
    : pattern_(std::move(pattern)), adjacent_(static_cast<std::size_t>(std::max(pattern_.size() - 1, 0)), false) {
  if (pattern_.size() > 9) {
    throw Error(ErrorCode::InvalidArgument, "patterns longer than 9 are not supported");
  }
  for (int i : adjacent_pairs) {
    if (i < 1 || i >= pattern_.size()) {
      throw Error(ErrorCode::InvalidArgument, "adjacent pair index " + std::to_string(i) + " out of range");
    }
    adjacent_[static_cast<std::size_t>(i - 1)] = true;
  }
}

VincularPattern VincularPattern::classical(Permutation pattern) {
  return VincularPattern(std::move(pattern), {});
}

VincularPattern VincularPattern::parse(std::string_view text) {
  auto fail = [&](const char* why) {
    return Error(ErrorCode::ParseError, "pattern '" + std::string(text) + "': " + why);
  };
  if (text.empty()) throw fail("empty");
  if (text.front() == '-' || text.back() == '-') throw fail("leading or trailing dash");

  std::vector<int> digits;
  std::vector<int> adjacent;
  bool dash_pending = false;
  for (char c : text) {
    if (c == '-') {
      if (dash_pending) throw fail("double dash");
      dash_pending = true;
    } else if (c >= '1' && c <= '9') {
      if (!digits.empty() && !dash_pending) adjacent.push_back(static_cast<int>(digits.size()));
      digits.push_back(c - '0');
      dash_pending = false;
    } else {
      throw fail("expected digits 1-9 and '-'");
    }
  }
  try {
    return VincularPattern(Permutation(std::move(digits)), std::move(adjacent));
  } catch (const Error&) {
    throw fail("digits do not form a permutation");
  }
}

std::vector<int> VincularPattern::adjacent_pairs() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < adjacent_.size(); ++i) {
    if (adjacent_[i]) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

bool VincularPattern::is_classical() const {
  return std::none_of(adjacent_.begin(), adjacent_.end(), [](bool b) { return b; });
}

std::string VincularPattern::render() const {
  std::string out;
  for (int i = 0; i < length(); ++i) {
    if (i > 0 && !adjacent_[static_cast<std::size_t>(i - 1)]) out += '-';
    out += static_cast<char>('0' + pattern_[i]);
  }
  return out;
}

PatternSet parse_pattern_set(std::string_view text) {
  PatternSet out;
  if (text.empty() || text == "none") return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(VincularPattern::parse(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string render_pattern_set(const PatternSet& pats) {
  if (pats.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < pats.size(); ++i) {
    if (i) out += ',';
    out += pats[i].render();
  }
  return out;
}

const PatternSet& classical_length3() {
  static const PatternSet six = parse_pattern_set("1-2-3,1-3-2,2-1-3,2-3-1,3-1-2,3-2-1");
  return six;
}

namespace {

// Backtracking over index choices, one pattern position at a time. A chosen
// index is accepted only if its relative order against every earlier choice
// matches the pattern.
class Matcher {
 public:
  Matcher(std::span<const int> word, const VincularPattern& pat) : word_(word), pat_(pat), k_(pat.length()) {}

  bool any() {
    if (k_ == 0) return true;
    if (static_cast<int>(word_.size()) < k_) return false;
    forced_last_ = -1;
    limit_ = static_cast<int>(word_.size());
    return place(0, 0);
  }

  bool ending_at(int last) {
    if (k_ == 0) return false;
    if (last < 0 || last >= static_cast<int>(word_.size()) || last + 1 < k_) return false;
    forced_last_ = last;
    limit_ = last + 1;
    return place(0, 0);
  }

 private:
  bool fits(int j, int idx) const {
    const int v = word_[static_cast<std::size_t>(idx)];
    const int pv = pat_.pattern()[j];
    for (int t = 0; t < j; ++t) {
      const bool host_less = word_[static_cast<std::size_t>(chosen_[static_cast<std::size_t>(t)])] < v;
      const bool pat_less = pat_.pattern()[t] < pv;
      if (host_less != pat_less) return false;
    }
    return true;
  }

  bool place(int j, int from) {
    if (j == k_) return true;
    const int remaining = k_ - j - 1;
    int lo = from;
    int hi = limit_ - 1 - remaining;
    if (j > 0 && pat_.adjacent(j)) hi = std::min(hi, from);
    if (j == k_ - 1 && forced_last_ >= 0) {
      if (forced_last_ < lo || forced_last_ > hi) return false;
      lo = hi = forced_last_;
    }
    for (int idx = lo; idx <= hi; ++idx) {
      if (!fits(j, idx)) continue;
      chosen_[static_cast<std::size_t>(j)] = idx;
      if (place(j + 1, idx + 1)) return true;
    }
    return false;
  }

  std::span<const int> word_;
  const VincularPattern& pat_;
  int k_;
  int limit_ = 0;
  int forced_last_ = -1;
  std::array<int, 9> chosen_{};
};

}  // namespace

bool contains(std::span<const int> word, const VincularPattern& pat) {
  return Matcher(word, pat).any();
}

bool contains(const Permutation& host, const VincularPattern& pat) {
  return contains(host.entries(), pat);
}

bool contains_ending_at(std::span<const int> word, const VincularPattern& pat, int last) {
  return Matcher(word, pat).ending_at(last);
}

bool avoids_all(std::span<const int> word, const PatternSet& pats) {
  return std::none_of(pats.begin(), pats.end(), [&](const VincularPattern& q) { return contains(word, q); });
}

bool avoids_all(const Permutation& host, const PatternSet& pats) {
  return avoids_all(host.entries(), pats);
}

}  // namespace simsun
