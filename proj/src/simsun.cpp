#include "simsun/simsun.hpp"

#include <algorithm>
#include <functional>

#include "simsun/error.hpp"

namespace simsun {

bool has_double_descent(std::span<const int> word) {
  for (std::size_t i = 0; i + 2 < word.size(); ++i) {
    if (word[i] > word[i + 1] && word[i + 1] > word[i + 2]) return true;
  }
  return false;
}

bool is_simsun(std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  for (int k = 3; k <= n; ++k) {
    // last two entries of the k-restriction seen so far
    int a = 0;
    int b = 0;
    for (int v : word) {
      if (v > k) continue;
      if (a > b && b > v) return false;
      a = b;
      b = v;
    }
  }
  return true;
}

bool is_simsun(const Permutation& p) { return is_simsun(p.entries()); }

Permutation restriction(const Permutation& p, int k) {
  if (k < 0 || k > p.size()) {
    throw Error(ErrorCode::InvalidK, "k=" + std::to_string(k) + " outside 0.." + std::to_string(p.size()));
  }
  Word sub;
  for (int v : p.entries()) {
    if (v <= k) sub.push_back(v);
  }
  return reduce(sub);
}

std::vector<int> fertile_gaps_unchecked(const Permutation& p, const PatternSet& pats) {
  std::vector<int> gaps;
  for (int g = 0; g <= p.size(); ++g) {
    const Permutation child = p.insert_max(g);
    if (is_simsun(child) && avoids_all(child, pats)) gaps.push_back(g);
  }
  return gaps;
}

std::vector<int> fertility_gaps(const Permutation& p, const PatternSet& pats) {
  if (!is_simsun(p) || !avoids_all(p, pats)) {
    throw Error(ErrorCode::NotInTree, p.render() + " is not in RS(" + render_pattern_set(pats) + ")");
  }
  return fertile_gaps_unchecked(p, pats);
}

std::vector<Permutation> tree_level(int n, const PatternSet& pats) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative level");
  std::vector<Permutation> level{Permutation{}};
  for (int m = 0; m < n; ++m) {
    std::vector<Permutation> next;
    for (const Permutation& p : level) {
      for (int g : fertile_gaps_unchecked(p, pats)) next.push_back(p.insert_max(g));
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

std::string TreeLabel::render() const {
  std::string out = "(" + std::to_string(k) + ")";
  if (kind == LabelKind::Tilde) out += "~";
  if (kind == LabelKind::Hat) out += "^";
  return out;
}

namespace {

const PatternSet& pats_of(TreeId id) {
  static const PatternSet t132 = parse_pattern_set("1-3-2");
  static const PatternSet t213 = parse_pattern_set("2-1-3");
  static const PatternSet t231 = parse_pattern_set("2-3-1");
  static const PatternSet t312 = parse_pattern_set("3-1-2");
  static const PatternSet t132_213 = parse_pattern_set("1-3-2,2-1-3");
  switch (id) {
    case TreeId::T132: return t132;
    case TreeId::T213: return t213;
    case TreeId::T231: return t231;
    case TreeId::T312: return t312;
    case TreeId::T132And213: return t132_213;
  }
  return t132;
}

}  // namespace

TreeLabel label_132(const Permutation& p) {
  const auto& pats = pats_of(TreeId::T132);
  if (p.empty()) throw Error(ErrorCode::NotInTree, "the 132 tree is rooted at the permutation 1");
  const int k = static_cast<int>(fertility_gaps(p, pats).size());
  const int n = p.size();
  if (n == 1 || p[0] < p[1]) return {LabelKind::Plain, k};
  if (p[0] == n) return {LabelKind::Tilde, k};
  return {LabelKind::Hat, k};
}

int label_213(const Permutation& p) {
  return static_cast<int>(fertility_gaps(p, pats_of(TreeId::T213)).size());
}

TreeId parse_tree_id(std::string_view name) {
  if (name == "T132" || name == "132") return TreeId::T132;
  if (name == "T213" || name == "213") return TreeId::T213;
  if (name == "T231" || name == "231") return TreeId::T231;
  if (name == "T312" || name == "312") return TreeId::T312;
  if (name == "T132,213" || name == "T132&213" || name == "132,213") return TreeId::T132And213;
  throw Error(ErrorCode::InvalidArgument, "unknown tree '" + std::string(name) + "'");
}

std::string_view to_string(TreeId id) {
  switch (id) {
    case TreeId::T132: return "T132";
    case TreeId::T213: return "T213";
    case TreeId::T231: return "T231";
    case TreeId::T312: return "T312";
    case TreeId::T132And213: return "T132&213";
  }
  return "?";
}

namespace {

using Labels = std::vector<TreeLabel>;

TreeLabel plain(int k) { return {LabelKind::Plain, k}; }

// Right-hand sides of the succession rules. Each returns false for a label the
// rule does not cover.
bool rule_132(const TreeLabel& l, Labels& out) {
  out.clear();
  switch (l.kind) {
    case LabelKind::Plain:
      if (l.k < 2) return false;
      out.push_back({LabelKind::Tilde, l.k});
      for (int j = l.k; j >= 2; --j) out.push_back(plain(j));
      break;
    case LabelKind::Tilde:
      out.push_back(plain(l.k + 1));
      for (int j = l.k - 1; j >= 1; --j) out.push_back({LabelKind::Hat, j});
      break;
    case LabelKind::Hat:
      for (int j = l.k; j >= 1; --j) out.push_back({LabelKind::Hat, j});
      break;
  }
  return true;
}

// (k) -> (1)(2)...(k-1)(k+1)
bool rule_motzkin(const TreeLabel& l, Labels& out) {
  out.clear();
  if (l.k < 1) return false;
  for (int j = 1; j < l.k; ++j) out.push_back(plain(j));
  out.push_back(plain(l.k + 1));
  return true;
}

// (1) -> (2), (2) -> (2)(2)
bool rule_doubling(const TreeLabel& l, Labels& out) {
  out.clear();
  if (l.k == 1) {
    out.push_back(plain(2));
    return true;
  }
  if (l.k == 2) {
    out.assign(2, plain(2));
    return true;
  }
  return false;
}

// (1) -> (2), (2) -> (1)(2)
bool rule_fibonacci(const TreeLabel& l, Labels& out) {
  out.clear();
  if (l.k == 1) {
    out.push_back(plain(2));
    return true;
  }
  if (l.k == 2) {
    out = {plain(1), plain(2)};
    return true;
  }
  return false;
}

}  // namespace

SuccessionReport verify_succession(int n_max, TreeId tree) {
  if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "n_max must be >= 1");
  SuccessionReport report;
  report.tree = tree;
  report.n_max = n_max;
  const PatternSet& pats = pats_of(tree);

  std::function<TreeLabel(const Permutation&, const std::vector<int>&)> label;
  std::function<bool(const TreeLabel&, Labels&)> rule;
  Permutation root;
  switch (tree) {
    case TreeId::T132:
      // rooted at 1 with label (2)
      root = Permutation::identity(1);
      label = [](const Permutation& p, const std::vector<int>& gaps) {
        const int n = p.size();
        const int k = static_cast<int>(gaps.size());
        if (n == 1 || p[0] < p[1]) return TreeLabel{LabelKind::Plain, k};
        if (p[0] == n) return TreeLabel{LabelKind::Tilde, k};
        return TreeLabel{LabelKind::Hat, k};
      };
      rule = rule_132;
      break;
    case TreeId::T213:
    case TreeId::T231:
      rule = rule_motzkin;
      break;
    case TreeId::T312:
      rule = rule_doubling;
      break;
    case TreeId::T132And213:
      rule = rule_fibonacci;
      break;
  }
  if (!label) {
    label = [](const Permutation&, const std::vector<int>& gaps) { return plain(static_cast<int>(gaps.size())); };
  }

  auto describe = [](const Labels& ls) {
    std::string s;
    for (const auto& l : ls) s += l.render();
    return s;
  };

  if (tree == TreeId::T132) {
    const TreeLabel root_label = label(root, fertile_gaps_unchecked(root, pats));
    if (root_label != plain(2)) {
      report.violations.push_back("root 1 has label " + root_label.render() + ", expected (2)");
    }
  }

  std::vector<Permutation> level{root};
  Labels expected;
  while (!level.empty() && level.front().size() < n_max) {
    std::vector<Permutation> next;
    for (const Permutation& p : level) {
      ++report.nodes_checked;
      const std::vector<int> gaps = fertile_gaps_unchecked(p, pats);
      const TreeLabel own = label(p, gaps);
      Labels got;
      for (int g : gaps) {
        Permutation child = p.insert_max(g);
        got.push_back(label(child, fertile_gaps_unchecked(child, pats)));
        next.push_back(std::move(child));
      }
      if (!rule(own, expected)) {
        report.violations.push_back(p.render() + ": label " + own.render() + " is outside the rule");
        continue;
      }
      std::sort(got.begin(), got.end());
      std::sort(expected.begin(), expected.end());
      if (got != expected) {
        report.violations.push_back(p.render() + " " + own.render() + ": children " + describe(got) +
                                    ", rule gives " + describe(expected));
      }
      if (tree == TreeId::T312 && p.size() >= 1) {
        const std::vector<int> last_two{p.size() - 1, p.size()};
        if (gaps != last_two) {
          report.violations.push_back(p.render() + ": fertile gaps are not the last two");
        }
      }
    }
    level = std::move(next);
  }
  return report;
}

}  // namespace simsun
