#include "simsun/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "simsun/error.hpp"
#include "simsun/simsun.hpp"

namespace simsun {

CountMethod parse_count_method(std::string_view name) {
  if (name == "brute") return CountMethod::Brute;
  if (name == "tree") return CountMethod::Tree;
  throw Error(ErrorCode::InvalidArgument, "method must be brute or tree");
}

namespace {

int worker_count(int threads) {
  if (threads > 0) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs task(i) for i in [0, tasks) on a small pool.
void parallel_for(int tasks, int threads, const std::function<void(int)>& task) {
  const int workers = std::min(worker_count(threads), std::max(tasks, 1));
  if (workers <= 1) {
    for (int i = 0; i < tasks; ++i) task(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < tasks; i = next++) task(i);
    });
  }
  for (auto& t : pool) t.join();
}

// Depth-first walk over words of {1..n}, one position at a time. A prefix is
// dropped as soon as some restriction has a double descent ending at the new
// entry or some pattern has an occurrence ending there; neither can be undone
// by later entries.
class PrefixWalker {
 public:
  using Visit = std::function<void(const std::vector<int>&)>;

  PrefixWalker(int n, const PatternSet& pats) : n_(n), pats_(pats), used_(static_cast<std::size_t>(n) + 1, false) {
    word_.reserve(static_cast<std::size_t>(n));
  }

  std::uint64_t count_from(int first) {
    std::uint64_t total = 0;
    walk_from(first, [&](const std::vector<int>&) { ++total; });
    return total;
  }

  void walk_from(int first, const Visit& visit) {
    visit_ = &visit;
    if (n_ == 0) {
      visit(word_);
      return;
    }
    if (push(first)) {
      grow();
      pop();
    }
  }

 private:
  bool keeps_simsun(int v) const {
    for (int k = v; k <= n_; ++k) {
      int b = 0;
      int a = 0;
      for (auto it = word_.rbegin(); it != word_.rend(); ++it) {
        if (*it > k) continue;
        if (b == 0) {
          b = *it;
        } else {
          a = *it;
          break;
        }
      }
      if (a > b && b > v) return false;
    }
    return true;
  }

  bool push(int v) {
    if (!keeps_simsun(v)) return false;
    word_.push_back(v);
    const int last = static_cast<int>(word_.size()) - 1;
    for (const auto& pat : pats_) {
      if (contains_ending_at(word_, pat, last)) {
        word_.pop_back();
        return false;
      }
    }
    used_[static_cast<std::size_t>(v)] = true;
    return true;
  }

  void pop() {
    used_[static_cast<std::size_t>(word_.back())] = false;
    word_.pop_back();
  }

  void grow() {
    if (static_cast<int>(word_.size()) == n_) {
      (*visit_)(word_);
      return;
    }
    for (int v = 1; v <= n_; ++v) {
      if (used_[static_cast<std::size_t>(v)] || !push(v)) continue;
      grow();
      pop();
    }
  }

  int n_;
  const PatternSet& pats_;
  std::vector<bool> used_;
  std::vector<int> word_;
  const Visit* visit_ = nullptr;
};

BigInt count_brute(int n, const PatternSet& pats, int threads) {
  if (n == 0) return 1;
  std::vector<std::uint64_t> parts(static_cast<std::size_t>(n), 0);
  parallel_for(n, threads, [&](int i) {
    PrefixWalker walker(n, pats);
    parts[static_cast<std::size_t>(i)] = walker.count_from(i + 1);
  });
  BigInt total = 0;
  for (auto c : parts) total += c;
  return total;
}

std::uint64_t count_subtree(const Permutation& p, int n, const PatternSet& pats) {
  if (p.size() == n) return 1;
  std::uint64_t total = 0;
  for (int g : fertile_gaps_unchecked(p, pats)) total += count_subtree(p.insert_max(g), n, pats);
  return total;
}

BigInt count_tree(int n, const PatternSet& pats, int threads) {
  const std::vector<Permutation> frontier = tree_level(std::min(n, 4), pats);
  std::vector<std::uint64_t> parts(frontier.size(), 0);
  parallel_for(static_cast<int>(frontier.size()), threads, [&](int i) {
    parts[static_cast<std::size_t>(i)] = count_subtree(frontier[static_cast<std::size_t>(i)], n, pats);
  });
  BigInt total = 0;
  for (auto c : parts) total += c;
  return total;
}

}  // namespace

BigInt count_class(int n, const PatternSet& pats, CountMethod method, int threads) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be >= 0");
  return method == CountMethod::Brute ? count_brute(n, pats, threads) : count_tree(n, pats, threads);
}

// ---------------------------------------------------------------------------
// tables

namespace {

enum class Formula { Const, Euler, Secondary, Motzkin, Catalan, Pow2, FibNext, Linear, Quadratic };

struct Row {
  Formula formula;
  int from;
  int value = 0;  // for Const
};

const std::vector<std::string>& length3_names() {
  static const std::vector<std::string> names{"123", "132", "213", "231", "312", "321"};
  return names;
}

const std::map<std::string, Row>& table() {
  static const std::map<std::string, Row> rows = [] {
    std::map<std::string, Row> t;
    t["none"] = {Formula::Euler, 0};

    t["123"] = {Formula::Const, 4, 6};
    t["132"] = {Formula::Secondary, 0};
    t["213"] = {Formula::Motzkin, 0};
    t["231"] = {Formula::Motzkin, 0};
    t["312"] = {Formula::Pow2, 1};
    t["321"] = {Formula::Catalan, 0};

    t["123,132"] = {Formula::Const, 4, 2};
    t["123,213"] = {Formula::Const, 3, 3};
    for (const char* k : {"123,231", "123,312", "123,321"}) t[k] = {Formula::Const, 5, 0};
    for (const char* k : {"132,213", "213,231", "231,312"}) t[k] = {Formula::FibNext, 0};
    for (const char* k : {"132,231", "132,312", "213,312"}) t[k] = {Formula::Linear, 1};
    for (const char* k : {"132,321", "213,321"}) t[k] = {Formula::Quadratic, 0};
    for (const char* k : {"231,321", "312,321"}) t[k] = {Formula::Pow2, 1};

    // Sets of three or more: listed rows, every other set is 0 from n = 5.
    const auto& names = length3_names();
    for (unsigned mask = 0; mask < 64; ++mask) {
      const int size = __builtin_popcount(mask);
      if (size < 3 || size > 5) continue;
      std::string key;
      for (int i = 0; i < 6; ++i) {
        if (mask & (1u << i)) key += (key.empty() ? "" : ",") + names[static_cast<std::size_t>(i)];
      }
      t[key] = {Formula::Const, 5, 0};
    }
    for (const char* k : {"123,132,213", "132,213,231", "132,213,312", "132,231,312", "213,231,312"}) {
      t[k] = {Formula::Const, 2, 2};
    }
    for (const char* k : {"132,213,321", "132,231,321", "132,312,321", "213,231,321", "213,312,321"}) {
      t[k] = {Formula::Linear, 1};
    }
    t["231,312,321"] = {Formula::FibNext, 0};
    t["132,213,231,312"] = {Formula::Const, 3, 1};
    for (const char* k : {"132,213,231,321", "132,213,312,321", "132,231,312,321", "213,231,312,321"}) {
      t[k] = {Formula::Const, 2, 2};
    }
    t["132,213,231,312,321"] = {Formula::Const, 3, 1};
    return t;
  }();
  return rows;
}

const Row& row_of(const PatternSet& pats) {
  const std::string key = class_key(pats);
  const auto it = table().find(key);
  if (it == table().end()) throw Error(ErrorCode::NotTabulated, "{" + key + "} is not tabulated");
  return it->second;
}

BigInt evaluate(const Row& row, int n) {
  switch (row.formula) {
    case Formula::Const: return row.value;
    case Formula::Euler: return seq(SequenceId::Euler, n + 1);
    case Formula::Secondary: return seq(SequenceId::SecondaryStructure, n);
    case Formula::Motzkin: return seq(SequenceId::Motzkin, n);
    case Formula::Catalan: return seq(SequenceId::Catalan, n);
    case Formula::Pow2: return BigInt(1) << (n - 1);
    case Formula::FibNext: return seq(SequenceId::Fibonacci, n + 1);
    case Formula::Linear: return n;
    case Formula::Quadratic: return BigInt(n * n - n + 2) / 2;
  }
  return 0;
}

}  // namespace

std::string class_key(const PatternSet& pats) {
  std::vector<std::string> names;
  for (const auto& p : pats) {
    if (!p.is_classical() || p.length() != 3) {
      throw Error(ErrorCode::NotTabulated, "only classical patterns of length 3 are tabulated");
    }
    names.push_back(p.render().substr(0, 1) + p.render().substr(2, 1) + p.render().substr(4, 1));
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  if (names.empty()) return "none";
  std::string key;
  for (const auto& s : names) key += (key.empty() ? "" : ",") + s;
  return key;
}

int tabulated_from(const PatternSet& pats) { return row_of(pats).from; }

std::optional<BigInt> expected_count(int n, const PatternSet& pats) {
  const Row& row = row_of(pats);
  if (n < row.from) return std::nullopt;
  return evaluate(row, n);
}

std::vector<PatternSet> tabulated_classes() {
  std::vector<std::pair<std::string, PatternSet>> keyed;
  for (unsigned mask = 0; mask < 64; ++mask) {
    PatternSet pats;
    for (int i = 0; i < 6; ++i) {
      if (mask & (1u << i)) pats.push_back(classical_length3()[static_cast<std::size_t>(i)]);
    }
    const std::string key = class_key(pats);
    if (table().count(key)) keyed.emplace_back(key, std::move(pats));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.second.size() != y.second.size()) return x.second.size() < y.second.size();
    return x.first < y.first;
  });
  std::vector<PatternSet> out;
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

// ---------------------------------------------------------------------------
// all six patterns

BigInt contain_all_six_formula(int n) {
  if (n < 5) throw Error(ErrorCode::OutOfStatedRange, "the identity is stated for n >= 5");
  return seq(SequenceId::Euler, n + 1) - seq(SequenceId::Catalan, n) - 2 * seq(SequenceId::Motzkin, n) -
         seq(SequenceId::SecondaryStructure, n) + 2 * seq(SequenceId::Fibonacci, n + 1) + (BigInt(1) << (n - 1)) +
         BigInt(n * n - 3 * n - 1);
}

ContainAllSix contain_all_six(int n, int threads) {
  ContainAllSix out;
  out.n = n;
  out.formula = contain_all_six_formula(n);
  const PatternSet none;
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Permutation>> found(static_cast<std::size_t>(n));
  parallel_for(n, threads, [&](int i) {
    PrefixWalker walker(n, none);
    auto& mine = found[static_cast<std::size_t>(i)];
    auto& c = counts[static_cast<std::size_t>(i)];
    walker.walk_from(i + 1, [&](const std::vector<int>& w) {
      for (const auto& pat : classical_length3()) {
        if (!contains(w, pat)) return;
      }
      if (++c <= 100) mine.emplace_back(w);
    });
  });
  for (std::size_t i = 0; i < counts.size(); ++i) {
    out.observed += counts[i];
    out.witnesses.insert(out.witnesses.end(), found[i].begin(), found[i].end());
  }
  if (out.observed > 100) out.witnesses.clear();
  std::sort(out.witnesses.begin(), out.witnesses.end());
  return out;
}

// ---------------------------------------------------------------------------
// reports

bool CountReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const CountRecord& r) { return r.ok(); }) &&
         std::all_of(contain_all_six.begin(), contain_all_six.end(), [](const ContainAllSix& c) { return c.ok(); });
}

namespace {

nlohmann::json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

}  // namespace

std::string CountReport::to_json() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& r : rows) {
    rows_json.push_back({{"class", r.cls},
                         {"n", r.n},
                         {"brute", big_json(r.brute)},
                         {"tree", big_json(r.tree)},
                         {"expected", r.expected ? big_json(*r.expected) : nlohmann::json(nullptr)},
                         {"ok", r.ok()}});
  }
  nlohmann::json six = nlohmann::json::array();
  for (const auto& c : contain_all_six) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : c.witnesses) witnesses.push_back(w.render());
    six.push_back({{"n", c.n},
                   {"observed", big_json(c.observed)},
                   {"formula", big_json(c.formula)},
                   {"witnesses", witnesses},
                   {"ok", c.ok()}});
  }
  nlohmann::json doc{{"n_max", n_max}, {"rows", rows_json}, {"contain_all_six", six}, {"ok", ok()}};
  return doc.dump(2);
}

std::string CountReport::to_text() const {
  std::ostringstream out;
  out << "class                   n      brute       tree   expected  ok\n";
  for (const auto& r : rows) {
    std::string cls = r.cls;
    cls.resize(std::max<std::size_t>(cls.size(), 22), ' ');
    out << cls << ' ';
    out.width(3);
    out << r.n << ' ';
    out.width(10);
    out << r.brute.str() << ' ';
    out.width(10);
    out << r.tree.str() << ' ';
    out.width(10);
    out << (r.expected ? r.expected->str() : std::string("-")) << "  " << (r.ok() ? "yes" : "NO") << '\n';
  }
  if (!contain_all_six.empty()) {
    out << "\ncontaining all six patterns\n";
    for (const auto& c : contain_all_six) {
      out << "n=" << c.n << " observed=" << c.observed.str() << " formula=" << c.formula.str()
          << (c.ok() ? " ok" : " MISMATCH");
      if (!c.witnesses.empty() && c.witnesses.size() <= 5) {
        out << " witnesses:";
        for (const auto& w : c.witnesses) out << " [" << w.render() << "]";
      }
      out << '\n';
    }
  }
  out << (ok() ? "all rows match\n" : "MISMATCHES FOUND\n");
  return out.str();
}

CountReport reproduce_tables(int n_max, int threads) {
  if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "n_max must be >= 1");
  CountReport report;
  report.n_max = n_max;
  for (const PatternSet& pats : tabulated_classes()) {
    for (int n = 1; n <= n_max; ++n) {
      CountRecord r;
      r.cls = render_pattern_set(pats);
      r.n = n;
      r.brute = count_class(n, pats, CountMethod::Brute, threads);
      r.tree = count_class(n, pats, CountMethod::Tree, threads);
      r.expected = expected_count(n, pats);
      report.rows.push_back(std::move(r));
    }
  }
  return report;
}

CountReport full_census(int n_max, int six_max, int threads) {
  CountReport report = reproduce_tables(n_max, threads);
  for (int n = 5; n <= six_max; ++n) report.contain_all_six.push_back(contain_all_six(n, threads));
  return report;
}

}  // namespace simsun
