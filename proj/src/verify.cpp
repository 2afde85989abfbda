#include "simsun/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "simsun/bijections.hpp"
#include "simsun/census.hpp"
#include "simsun/error.hpp"
#include "simsun/lattice_path.hpp"
#include "simsun/pattern.hpp"
#include "simsun/sequences.hpp"
#include "simsun/simsun.hpp"

namespace simsun {

void Check::fail(std::string what) {
  ++violation_count;
  if (violations.size() < 10) violations.push_back(std::move(what));
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok(); });
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << " n_max=" << n_max << '\n';
  for (const Check& c : checks) {
    out << (c.ok() ? "  ok   " : "  FAIL ") << c.name << " cases=" << c.cases;
    if (!c.ok()) out << " violations=" << c.violation_count;
    out << '\n';
    for (const auto& v : c.violations) out << "         " << v << '\n';
  }
  out << (ok() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

std::string VerifyReport::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const Check& c : checks) {
    checks_json.push_back({{"name", c.name},
                           {"cases", c.cases},
                           {"violation_count", c.violation_count},
                           {"violations", c.violations},
                           {"ok", c.ok()}});
  }
  nlohmann::json doc{{"suite", suite}, {"n_max", n_max}, {"checks", checks_json}, {"ok", ok()}};
  return doc.dump(2);
}

namespace {

using Perms = std::vector<Permutation>;
using Paths = std::vector<LatticePath>;

Perms all_permutations(int n) {
  Perms out;
  Permutation p = Permutation::identity(n);
  std::vector<int> e(p.entries().begin(), p.entries().end());
  do {
    out.emplace_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

Perms where(const Perms& from, const std::function<bool(const Permutation&)>& keep) {
  Perms out;
  std::copy_if(from.begin(), from.end(), std::back_inserter(out), keep);
  return out;
}

// Simsun and avoiding every pattern in `pats`, by direct filtering.
Perms rs(const Perms& all, std::string_view pats) {
  const PatternSet set = parse_pattern_set(pats);
  return where(all, [&](const Permutation& p) { return is_simsun(p) && avoids_all(p, set); });
}

Perms avoiders(const Perms& all, std::string_view pats) {
  const PatternSet set = parse_pattern_set(pats);
  return where(all, [&](const Permutation& p) { return avoids_all(p, set); });
}

template <class T>
std::string show(const T& x) {
  return x.render();
}

// Compares two collections as sets; reports a few elements from either side.
template <class T>
void same_set(Check& c, std::vector<T> a, std::vector<T> b, const std::string& what) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  ++c.cases;
  if (a == b) return;
  std::vector<T> only_a;
  std::vector<T> only_b;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
  std::string msg = what + ": sizes " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
  if (!only_a.empty()) msg += ", left only e.g. " + show(only_a.front());
  if (!only_b.empty()) msg += ", right only e.g. " + show(only_b.front());
  c.fail(msg);
}

std::string tag(int n) { return "n=" + std::to_string(n); }

// ---------------------------------------------------------------------------

void succession(std::vector<Check>& out, int n_max) {
  for (TreeId id : {TreeId::T132, TreeId::T213, TreeId::T231, TreeId::T312, TreeId::T132And213}) {
    Check c;
    c.name = "succession " + std::string(to_string(id));
    const SuccessionReport r = verify_succession(n_max, id);
    c.cases = r.nodes_checked;
    for (const auto& v : r.violations) c.fail(v);
    out.push_back(std::move(c));
  }
}

// Bijection checks: forward lands in the codomain, inverse undoes it, and the
// image is the whole codomain.
template <class Dom, class Cod>
void bijection(Check& c, const std::vector<Dom>& domain, const std::vector<Cod>& codomain,
               const std::function<Cod(const Dom&)>& fwd, const std::function<Dom(const Cod&)>& back) {
  std::vector<Cod> image;
  for (const Dom& x : domain) {
    ++c.cases;
    try {
      const Cod y = fwd(x);
      image.push_back(y);
      const Dom z = back(y);
      if (!(z == x)) c.fail(show(x) + " -> " + show(y) + " -> " + show(z));
    } catch (const Error& e) {
      c.fail(show(x) + ": " + e.what());
    }
  }
  for (const Cod& y : codomain) {
    ++c.cases;
    try {
      const Cod w = fwd(back(y));
      if (!(w == y)) c.fail(show(y) + " does not round-trip, got " + show(w));
    } catch (const Error& e) {
      c.fail(show(y) + ": " + e.what());
    }
  }
  same_set(c, image, codomain, "image vs codomain");
}

Paths dud_free_dyck(int semilength) {
  Paths out;
  for (auto& d : enumerate_paths(semilength, PathClass::Dyck)) {
    if (count_factor(d, "DUD") == 0) out.push_back(std::move(d));
  }
  return out;
}

void roundtrip(std::vector<Check>& out, int n_max) {
  Check krar_c{"krar (all kinds) S_n(sigma) <-> Dyck_n"};
  Check phi_c{"phi RS_n(132) <-> D1_n"};
  Check theta_c{"theta RS_n(132) <-> D2_{n+2}"};
  Check adm_m{"A_n <-> Motzkin_n"};
  Check adm_p{"A_n <-> RS_n(213)"};
  Check composite{"Motzkin_n <-> A_n <-> RS_n(213) composites"};
  Check callan_c{"callan DUD-free Dyck_{n+1} <-> Motzkin_n"};
  Check rs213{"krar213 + callan RS_n(213) <-> Motzkin_n"};
  Check psi_c{"psi RS_n(231) <-> Motzkin_n, chunking = recursion"};

  for (int n = 0; n <= n_max; ++n) {
    const Perms all = all_permutations(n);
    const Paths dyck = enumerate_paths(n, PathClass::Dyck);
    const Paths motzkin = enumerate_paths(n, PathClass::Motzkin);

    for (KrarKind k : {KrarKind::K132, KrarKind::K231, KrarKind::K312, KrarKind::K213}) {
      const std::string name(to_string(k));
      const Perms dom = avoiders(all, std::string{name[0], '-', name[1], '-', name[2]});
      bijection<Permutation, LatticePath>(
          krar_c, dom, dyck, [k](const Permutation& p) { return krar(p, k); },
          [k](const LatticePath& d) { return krar_inverse(d, k); });
    }

    const Perms rs132 = rs(all, "1-3-2");
    bijection<Permutation, LatticePath>(phi_c, rs132, enumerate_paths(n, PathClass::D1), phi, phi_inverse);

    const Paths d2 = enumerate_paths(n + 2, PathClass::D2);
    bijection<Permutation, LatticePath>(theta_c, rs132, d2, theta, theta_inverse);
    for (const auto& p : rs132) {
      ++theta_c.cases;
      if (!is_member(krar(p, KrarKind::K132), PathClass::Dprime)) theta_c.fail(p.render() + ": krar132 not in Dprime");
    }

    const std::vector<AdmissibleSequence> adm = enumerate_admissible(n);
    bijection<AdmissibleSequence, LatticePath>(adm_m, adm, motzkin, adm_to_motzkin, motzkin_to_adm);
    const Perms rs213_set = rs(all, "2-1-3");
    bijection<AdmissibleSequence, Permutation>(adm_p, adm, rs213_set, adm_to_perm213, perm213_to_adm);
    bijection<LatticePath, Permutation>(
        composite, motzkin, rs213_set,
        [](const LatticePath& m) { return adm_to_perm213(motzkin_to_adm(m)); },
        [](const Permutation& p) { return adm_to_motzkin(perm213_to_adm(p)); });

    bijection<LatticePath, LatticePath>(callan_c, dud_free_dyck(n + 1), motzkin, callan, callan_inverse);
    bijection<Permutation, LatticePath>(rs213, rs213_set, motzkin, rs213_to_motzkin, motzkin_to_rs213);

    const Perms rs231 = rs(all, "2-3-1");
    bijection<Permutation, LatticePath>(psi_c, rs231, motzkin, psi, psi_inverse);
    for (const auto& p : rs231) {
      ++psi_c.cases;
      const LatticePath a = psi(p);
      const LatticePath b = psi_recursive(p);
      if (a != b) psi_c.fail(p.render() + ": chunking " + a.render() + " vs recursion " + b.render());
      if (count_factor(krar(p, KrarKind::K231), "UUU") > 0) psi_c.fail(p.render() + ": krar231 has UUU");
    }
  }
  for (Check* c : {&krar_c, &phi_c, &theta_c, &adm_m, &adm_p, &composite, &callan_c, &rs213, &psi_c}) {
    out.push_back(std::move(*c));
  }
}

void transport(std::vector<Check>& out, int n_max) {
  Check phi_c{"descents(p) = #UU in phi(p)"};
  Check peaks{"#peaks of krar132(p) = #left-to-right minima"};
  Check inv_area{"inversions(p) = area(psi(p))"};
  Check des_u{"descents(p) = #U in psi(p)"};
  Check rlmax{"#right-to-left maxima(p) = 1 + final descent of psi(p)"};
  Check axis{"a_n = #H steps on the axis"};
  Check ups{"#U = #{i: a_i > a_i+1} = des(p) = des(p^-1)"};

  for (int n = 0; n <= n_max; ++n) {
    const Perms all = all_permutations(n);
    for (const auto& p : rs(all, "1-3-2")) {
      ++phi_c.cases;
      const auto d = static_cast<int>(statistics(p).descent_positions.size());
      if (d != count_factor(phi(p), "UU")) phi_c.fail(p.render());
    }
    for (const auto& p : avoiders(all, "1-3-2")) {
      ++peaks.cases;
      const LatticePath k = krar(p, KrarKind::K132);
      if (path_stats(k).peaks != static_cast<int>(statistics(p).left_to_right_minima.size())) {
        peaks.fail(p.render() + " -> " + k.render());
      }
    }
    for (const auto& p : rs(all, "2-3-1")) {
      const Statistics s = statistics(p);
      const LatticePath m = psi(p);
      const PathStats ps = path_stats(m);
      ++inv_area.cases;
      ++des_u.cases;
      ++rlmax.cases;
      if (s.inversions != ps.area) inv_area.fail(p.render() + " -> " + m.render());
      if (static_cast<int>(s.descent_positions.size()) != ps.up_steps) des_u.fail(p.render() + " -> " + m.render());
      if (n > 0 && static_cast<int>(s.right_to_left_maxima.size()) != 1 + ps.final_descent_length) {
        rlmax.fail(p.render() + " -> " + m.render());
      }
    }
    for (const auto& a : enumerate_admissible(n)) {
      const LatticePath m = adm_to_motzkin(a);
      const Permutation p = adm_to_perm213(a);
      const PathStats ps = path_stats(m);
      if (n > 0) {
        ++axis.cases;
        if (a[n - 1] != ps.axis_h_steps) axis.fail(a.render() + " -> " + m.render());
      }
      int drops = 0;
      for (int i = 0; i + 1 < n; ++i) {
        if (a[i] > a[i + 1]) ++drops;
      }
      ++ups.cases;
      const int des = static_cast<int>(statistics(p).descent_positions.size());
      const int des_inv = static_cast<int>(statistics(p.inverse()).descent_positions.size());
      if (ps.up_steps != drops || drops != des || des != des_inv) {
        ups.fail(a.render() + ": #U=" + std::to_string(ps.up_steps) + " drops=" + std::to_string(drops) +
                 " des=" + std::to_string(des) + " ides=" + std::to_string(des_inv));
      }
    }
  }
  for (Check* c : {&phi_c, &peaks, &inv_area, &des_u, &rlmax, &axis, &ups}) out.push_back(std::move(*c));
}

void lemma4(std::vector<Check>& out, int n_max) {
  Check c{"S_n(132): simsun iff no double descent and LR-minima gaps >= 2"};
  for (int n = 0; n <= n_max; ++n) {
    for (const auto& p : avoiders(all_permutations(n), "1-3-2")) {
      ++c.cases;
      const auto l = statistics(p).left_to_right_minima;
      const int r = static_cast<int>(l.size());
      bool gaps = true;
      for (int j = 2; j <= r - 1; ++j) {
        if (l[static_cast<std::size_t>(j) - 2] - l[static_cast<std::size_t>(j) - 1] < 2) gaps = false;
      }
      const bool lemma = !has_double_descent(p.entries()) && gaps;
      if (lemma != is_simsun(p)) c.fail(p.render());
    }
  }
  out.push_back(std::move(c));
}

void inclusion_chain(std::vector<Check>& out, int n_max) {
  Check c{"S_n(32-1) <= RS_n <= S_n(321), strict from n = 4"};
  const PatternSet lower = parse_pattern_set("32-1");
  const PatternSet upper = parse_pattern_set("321");
  for (int n = 0; n <= n_max; ++n) {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t d = 0;
    for (const auto& p : all_permutations(n)) {
      ++c.cases;
      const bool in_lower = avoids_all(p, lower);
      const bool in_rs = is_simsun(p);
      const bool in_upper = avoids_all(p, upper);
      if (in_lower && !in_rs) c.fail(p.render() + " avoids 32-1 but is not simsun");
      if (in_rs && !in_upper) c.fail(p.render() + " is simsun but contains 321");
      a += in_lower;
      b += in_rs;
      d += in_upper;
    }
    const bool strict = a < b && b < d;
    if (n >= 4 && !strict) c.fail(tag(n) + ": an inclusion is not strict");
    if (n < 4 && strict) c.fail(tag(n) + ": inclusions already strict");
  }
  out.push_back(std::move(c));
}

void callan_criterion(std::vector<Check>& out, int n_max) {
  Check c{"S_n(213): simsun iff krar213 has no DUD except at the last peak"};
  for (int n = 0; n <= n_max; ++n) {
    for (const auto& p : avoiders(all_permutations(n), "2-1-3")) {
      ++c.cases;
      const bool criterion = is_member(krar(p, KrarKind::K213), PathClass::DudFreeExceptLastPeak);
      if (criterion != is_simsun(p)) c.fail(p.render());
    }
  }
  out.push_back(std::move(c));
}

void characterizations(std::vector<Check>& out, int n_max) {
  Check p6{"RS_n(213) = S_n(213, 321)"};
  Check p8{"RS_n(231) = S_n(231, 321) = S_n(231, 32-1)"};
  Check p10{"RS_n(312) = S_n(312, 3-2-1) = S_n(312, 32-1)"};
  Check trees{"tree levels = filtered classes"};
  for (int n = 0; n <= n_max; ++n) {
    const Perms all = all_permutations(n);
    const std::string at = tag(n);
    same_set(p6, tree_level(n, parse_pattern_set("2-1-3")), avoiders(all, "2-1-3,321"), at);
    same_set(p6, rs(all, "2-1-3"), avoiders(all, "2-1-3,321"), at);
    same_set(p8, rs(all, "2-3-1"), avoiders(all, "2-3-1,321"), at);
    same_set(p8, avoiders(all, "2-3-1,321"), avoiders(all, "2-3-1,32-1"), at);
    same_set(p10, rs(all, "3-1-2"), avoiders(all, "3-1-2,3-2-1"), at);
    same_set(p10, avoiders(all, "3-1-2,3-2-1"), avoiders(all, "3-1-2,32-1"), at);
    for (const char* pats : {"", "1-3-2", "2-1-3", "2-3-1", "3-1-2", "1-3-2,2-1-3"}) {
      same_set(trees, tree_level(n, parse_pattern_set(pats)), rs(all, pats),
               at + " {" + render_pattern_set(parse_pattern_set(pats)) + "}");
    }
  }
  for (Check* c : {&p6, &p8, &p10, &trees}) out.push_back(std::move(*c));
}

// Every D1 path of positive semilength is exactly one of UD Q, UUDD Q and
// UUD Q UDD Q' with Q, Q' in D1.
void d1_parse(std::vector<Check>& out, int n_max) {
  Check c{"unique D1 decomposition"};
  Check d2{"unique D2 decomposition"};
  auto sub = [](const LatticePath& p, int from, int to) {
    return LatticePath(std::vector<Step>(p.steps().begin() + from, p.steps().begin() + to));
  };
  auto starts = [](const LatticePath& p, int at, std::string_view w) {
    if (at + static_cast<int>(w.size()) > p.size()) return false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (static_cast<char>(p[at + static_cast<int>(i)]) != w[i]) return false;
    }
    return true;
  };
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& p : enumerate_paths(n, PathClass::D1)) {
      ++c.cases;
      const int len = p.size();
      auto d1 = [](const LatticePath& q) { return is_member(q, PathClass::D1); };
      int ways = 0;
      if (starts(p, 0, "UD") && d1(sub(p, 2, len))) ++ways;
      if (starts(p, 0, "UUDD") && d1(sub(p, 4, len))) ++ways;
      if (starts(p, 0, "UUD")) {
        for (int end = 3; end + 3 <= len; ++end) {
          if (starts(p, end, "UDD") && d1(sub(p, 3, end)) && d1(sub(p, end + 3, len))) ++ways;
        }
      }
      if (ways != 1) c.fail(p.render() + " parses " + std::to_string(ways) + " ways");
    }
    // D2: U Q D Q' with Q nonempty, or UUDD Q'.
    for (const auto& p : enumerate_paths(n, PathClass::D2)) {
      ++d2.cases;
      const int len = p.size();
      auto in_d2 = [](const LatticePath& q) { return is_member(q, PathClass::D2); };
      int ways = 0;
      if (starts(p, 0, "UUDD") && in_d2(sub(p, 4, len))) ++ways;
      for (int end = 3; end < len; ++end) {
        const LatticePath q = sub(p, 1, end);
        if (p[0] == Step::U && p[end] == Step::D && !q.empty() && in_d2(q) && in_d2(sub(p, end + 1, len))) {
          ++ways;
        }
      }
      if (ways != 1) d2.fail(p.render() + " parses " + std::to_string(ways) + " ways");
    }
  }
  out.push_back(std::move(c));
  out.push_back(std::move(d2));
}

void path_counts(std::vector<Check>& out, int n_max) {
  Check c{"class sizes against sequences"};
  Check readings{"Dprime: valley reading = peak reading"};
  auto expect = [&](const std::string& what, std::size_t got, const BigInt& want) {
    ++c.cases;
    if (BigInt(got) != want) c.fail(what + ": " + std::to_string(got) + " vs " + want.str());
  };
  const std::vector<BigInt> g = coeffs_from_quadratic({{1}, {0, -1, 1}, {0, 1}}, n_max + 2);
  for (int n = 0; n <= n_max; ++n) {
    const std::string at = tag(n);
    const BigInt s = seq(SequenceId::SecondaryStructure, n);
    const BigInt m = seq(SequenceId::Motzkin, n);
    expect("Dyck " + at, enumerate_paths(n, PathClass::Dyck).size(), seq(SequenceId::Catalan, n));
    expect("Motzkin " + at, enumerate_paths(n, PathClass::Motzkin).size(), m);
    expect("D1 " + at, enumerate_paths(n, PathClass::D1).size(), s);
    expect("D2 semilength n+2, " + at, enumerate_paths(n + 2, PathClass::D2).size(), s);
    expect("Dprime " + at, enumerate_paths(n, PathClass::Dprime).size(), s);
    expect("G coefficient n+2, " + at, static_cast<std::size_t>(g[static_cast<std::size_t>(n) + 2]), s);
    expect("A_n " + at, enumerate_admissible(n).size(), m);
    expect("DUD-free Dyck semilength n+1, " + at, dud_free_dyck(n + 1).size(), m);
    for (const auto& d : enumerate_paths(n, PathClass::Dyck)) {
      ++readings.cases;
      if (is_member(d, PathClass::Dprime) != is_dprime_by_peaks(d)) readings.fail(d.render());
    }
  }
  out.push_back(std::move(c));
  out.push_back(std::move(readings));
}

using Suite = void (*)(std::vector<Check>&, int);

const std::map<std::string, Suite, std::less<>>& suites() {
  static const std::map<std::string, Suite, std::less<>> s{
      {"succession", succession},
      {"roundtrip", roundtrip},
      {"transport", transport},
      {"lemma4", lemma4},
      {"inclusion-chain", inclusion_chain},
      {"callan-criterion", callan_criterion},
      {"characterizations", characterizations},
      {"d1-parse", d1_parse},
      {"path-counts", path_counts},
  };
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"succession", "roundtrip", "transport",
                                              "lemma4", "inclusion-chain", "callan-criterion",
                                              "characterizations", "d1-parse", "path-counts"};
  return names;
}

VerifyReport run_suite(std::string_view name, int n_max) {
  if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "n_max must be >= 1");
  VerifyReport report;
  report.suite = std::string(name);
  report.n_max = n_max;
  if (name == "all") {
    for (const auto& s : suite_names()) suites().at(s)(report.checks, n_max);
    return report;
  }
  const auto it = suites().find(name);
  if (it == suites().end()) throw Error(ErrorCode::InvalidArgument, "unknown suite '" + std::string(name) + "'");
  it->second(report.checks, n_max);
  return report;
}

}  // namespace simsun
