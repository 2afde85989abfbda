#include "simsun/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "simsun/error.hpp"

namespace simsun {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::InvalidWord, "entries are not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e), Unchecked{});
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

Permutation Permutation::parse(std::string_view text) {
  const std::string_view body = trim(text);
  if (body == "e") return Permutation{};
  if (body.empty()) throw Error(ErrorCode::ParseError, "empty permutation text; use 'e'");

  std::vector<int> values;
  std::size_t i = 0;
  while (i < body.size()) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(body.data() + i, body.data() + body.size(), v);
    const auto next = static_cast<std::size_t>(ptr - body.data());
    if (ec != std::errc{} || next == i || (next < body.size() && !is_space(body[next]))) {
      throw Error(ErrorCode::ParseError, "bad permutation text '" + std::string(text) + "'");
    }
    values.push_back(v);
    i = next;
    while (i < body.size() && is_space(body[i])) ++i;
  }
  return Permutation(std::move(values));
}

std::string Permutation::render() const {
  if (entries_.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(entries_[i]);
  }
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    inv[static_cast<std::size_t>(entries_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv), Unchecked{});
}

Permutation Permutation::reverse() const {
  return Permutation(std::vector<int>(entries_.rbegin(), entries_.rend()), Unchecked{});
}

Permutation Permutation::complement() const {
  std::vector<int> c(entries_);
  for (int& v : c) v = size() + 1 - v;
  return Permutation(std::move(c), Unchecked{});
}

Permutation Permutation::insert_max(int gap) const {
  if (gap < 0 || gap > size()) {
    throw Error(ErrorCode::InvalidArgument, "gap " + std::to_string(gap) + " out of range");
  }
  std::vector<int> e;
  e.reserve(entries_.size() + 1);
  e.insert(e.end(), entries_.begin(), entries_.begin() + gap);
  e.push_back(size() + 1);
  e.insert(e.end(), entries_.begin() + gap, entries_.end());
  return Permutation(std::move(e), Unchecked{});
}

Permutation Permutation::remove_max() const {
  if (empty()) throw Error(ErrorCode::EmptyPermutation, "remove_max of the empty permutation");
  std::vector<int> e;
  e.reserve(entries_.size() - 1);
  for (int v : entries_) {
    if (v != size()) e.push_back(v);
  }
  return Permutation(std::move(e), Unchecked{});
}

Permutation reduce(std::span<const int> word) {
  std::vector<int> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return word[static_cast<std::size_t>(a)] < word[static_cast<std::size_t>(b)];
  });
  std::vector<int> out(word.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (rank > 0 && word[static_cast<std::size_t>(order[rank])] == word[static_cast<std::size_t>(order[rank - 1])]) {
      throw Error(ErrorCode::InvalidWord, "word has duplicate entries");
    }
    out[static_cast<std::size_t>(order[rank])] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation delete_smallest(const Permutation& p) {
  if (p.empty()) throw Error(ErrorCode::EmptyPermutation, "delete_smallest of the empty permutation");
  Word rest;
  rest.reserve(static_cast<std::size_t>(p.size()) - 1);
  for (int v : p.entries()) {
    if (v != 1) rest.push_back(v);
  }
  return reduce(rest);
}

int descent_count(std::span<const int> word) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] > word[i + 1]) ++d;
  }
  return d;
}

Statistics statistics(const Permutation& p) {
  Statistics s;
  const auto e = p.entries();
  const int n = p.size();
  for (int i = 0; i + 1 < n; ++i) {
    if (e[static_cast<std::size_t>(i)] > e[static_cast<std::size_t>(i) + 1]) s.descent_positions.push_back(i + 1);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (e[static_cast<std::size_t>(i)] > e[static_cast<std::size_t>(j)]) ++s.inversions;
    }
  }
  int running_min = n + 1;
  for (int v : e) {
    if (v < running_min) {
      running_min = v;
      s.left_to_right_minima.push_back(v);
    }
  }
  int running_max = 0;
  for (auto it = e.rbegin(); it != e.rend(); ++it) {
    if (*it > running_max) {
      running_max = *it;
      s.right_to_left_maxima.push_back(*it);
    }
  }
  std::reverse(s.right_to_left_maxima.begin(), s.right_to_left_maxima.end());
  return s;
}

MaxSplit decompose_at_max(const Permutation& p) {
  if (p.empty()) throw Error(ErrorCode::EmptyPermutation, "decompose_at_max of the empty permutation");
  const auto e = p.entries();
  const auto at = std::find(e.begin(), e.end(), p.size());
  return MaxSplit{Word(e.begin(), at), Word(at + 1, e.end())};
}

std::vector<Word> split_min_components(const Permutation& p) {
  std::vector<Word> blocks;
  const auto e = p.entries();
  std::size_t start = 0;
  int running_max = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    running_max = std::max(running_max, e[i]);
    // the prefix e[0..i] is exactly {1..i+1}
    if (running_max == static_cast<int>(i) + 1) {
      blocks.emplace_back(e.begin() + static_cast<std::ptrdiff_t>(start), e.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      start = i + 1;
    }
  }
  return blocks;
}

Permutation direct_sum(const Permutation& sigma, const Permutation& tau) {
  std::vector<int> e(sigma.entries().begin(), sigma.entries().end());
  for (int v : tau.entries()) e.push_back(v + sigma.size());
  return Permutation(std::move(e));
}

}  // namespace simsun
