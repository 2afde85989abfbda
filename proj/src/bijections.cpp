#include "simsun/bijections.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "simsun/error.hpp"
#include "simsun/pattern.hpp"
#include "simsun/simsun.hpp"

namespace simsun {

namespace {

Permutation reverse_complement(const Permutation& p) { return p.reverse().complement(); }

void require_class(const Permutation& p, const char* pats, const char* name) {
  if (!is_simsun(p) || !avoids_all(p, parse_pattern_set(pats))) {
    throw Error(ErrorCode::NotInDomain, p.render() + " is not in " + name);
  }
}

// Array path: for r = n..1 go east to min_{v<=r} pos(v) - 1, then one step
// south; east steps are D, south steps are U.
LatticePath krar132_core(const Permutation& p) {
  const int n = p.size();
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(p[i])] = i + 1;
  std::vector<int> x(static_cast<std::size_t>(n) + 1);
  int low = n + 1;
  for (int r = 1; r <= n; ++r) {
    low = std::min(low, pos[static_cast<std::size_t>(r)]);
    x[static_cast<std::size_t>(r)] = low - 1;
  }
  std::vector<Step> steps;
  int at = 0;
  for (int r = n; r >= 1; --r) {
    for (; at < x[static_cast<std::size_t>(r)]; ++at) steps.push_back(Step::D);
    steps.push_back(Step::U);
  }
  for (; at < n; ++at) steps.push_back(Step::D);
  return LatticePath(std::move(steps));
}

Permutation krar132_core_inverse(const LatticePath& path) {
  if (!is_dyck(path)) throw Error(ErrorCode::InvalidPath, path.render() + " is not a Dyck path");
  const int n = path.size() / 2;
  std::vector<int> x(static_cast<std::size_t>(n) + 1);
  int r = n;
  int east = 0;
  for (Step s : path.steps()) {
    if (s == Step::D) {
      ++east;
    } else {
      x[static_cast<std::size_t>(r--)] = east;
    }
  }
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> entries(static_cast<std::size_t>(n));
  for (int row = 1; row <= n; ++row) {
    int c = x[static_cast<std::size_t>(row)] + 1;
    while (used[static_cast<std::size_t>(c)]) ++c;
    used[static_cast<std::size_t>(c)] = true;
    entries[static_cast<std::size_t>(c - 1)] = row;
  }
  return Permutation(std::move(entries));
}

}  // namespace

KrarKind parse_krar_kind(std::string_view name) {
  if (name == "132") return KrarKind::K132;
  if (name == "231") return KrarKind::K231;
  if (name == "312") return KrarKind::K312;
  if (name == "213") return KrarKind::K213;
  throw Error(ErrorCode::InvalidArgument, "unknown krar kind '" + std::string(name) + "'");
}

std::string_view to_string(KrarKind kind) {
  switch (kind) {
    case KrarKind::K132: return "132";
    case KrarKind::K231: return "231";
    case KrarKind::K312: return "312";
    case KrarKind::K213: return "213";
  }
  return "?";
}

LatticePath krar(const Permutation& p, KrarKind kind) {
  const std::string name(to_string(kind));
  const std::string dashed{name[0], '-', name[1], '-', name[2]};
  if (contains(p, VincularPattern::parse(dashed))) {
    throw Error(ErrorCode::NotAvoiding, p.render() + " contains " + name);
  }
  switch (kind) {
    case KrarKind::K132: return krar132_core(p);
    case KrarKind::K231: return krar132_core(p.reverse()).mirror();
    case KrarKind::K312: return krar132_core(p.complement()).mirror();
    case KrarKind::K213: return krar132_core(reverse_complement(p)).mirror();
  }
  return {};
}

Permutation krar_inverse(const LatticePath& path, KrarKind kind) {
  switch (kind) {
    case KrarKind::K132: return krar132_core_inverse(path);
    case KrarKind::K231: return krar132_core_inverse(path.mirror()).reverse();
    case KrarKind::K312: return krar132_core_inverse(path.mirror()).complement();
    case KrarKind::K213: return reverse_complement(krar132_core_inverse(path.mirror()));
  }
  return {};
}

// ---------------------------------------------------------------------------
// phi

namespace {

LatticePath phi_unchecked(const Permutation& p) {
  const int n = p.size();
  if (n == 0) return {};
  const MaxSplit split = decompose_at_max(p);
  if (split.tau.empty()) return path("UD") + phi_unchecked(reduce(split.sigma));
  const Permutation rest = reduce(std::span<const int>(split.tau).subspan(1));
  if (split.sigma.empty()) return path("UUDD") + phi_unchecked(rest);
  Word sigma_minus;
  const int smallest = *std::min_element(split.sigma.begin(), split.sigma.end());
  for (int v : split.sigma) {
    if (v != smallest) sigma_minus.push_back(v);
  }
  return path("UUD") + phi_unchecked(reduce(sigma_minus)) + path("UDD") + phi_unchecked(rest);
}

// Index just past the first return of a Dyck path to the axis.
int first_return(std::span<const Step> steps) {
  int h = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    h += steps[i] == Step::U ? 1 : -1;
    if (h == 0) return static_cast<int>(i) + 1;
  }
  return static_cast<int>(steps.size());
}

LatticePath slice(const LatticePath& p, int from, int to) {
  const auto s = p.steps();
  return LatticePath(std::vector<Step>(s.begin() + from, s.begin() + to));
}

// ρ = red(τ_2...), τ_1 sits just below the value that becomes ρ_1.
Word rebuild_tau(const Permutation& rho) {
  if (rho.empty()) return {1};
  const int head = rho[0];
  Word tau{head};
  for (int v : rho.entries()) tau.push_back(v >= head ? v + 1 : v);
  return tau;
}

// σ with its smallest entry removed reduces to ρ; the smallest entry sits
// right before the entry 2.
Word rebuild_sigma(const Permutation& rho) {
  if (rho.empty()) return {1};
  Word sigma;
  for (int v : rho.entries()) {
    if (v == 1) sigma.push_back(1);
    sigma.push_back(v + 1);
  }
  return sigma;
}

Permutation phi_inverse_unchecked(const LatticePath& d) {
  if (d.empty()) return {};
  const int end = first_return(d.steps());
  const LatticePath tail = slice(d, end, d.size());
  const Permutation rest = phi_inverse_unchecked(tail);
  Word out;
  if (end == 2) {  // UD Q: σ n
    out.assign(rest.entries().begin(), rest.entries().end());
    out.push_back(rest.size() + 1);
    return Permutation(std::move(out));
  }
  if (end == 4 && d[2] == Step::D) {  // UUDD Q: n τ
    const Word tau = rebuild_tau(rest);
    out.push_back(static_cast<int>(tau.size()) + 1);
    out.insert(out.end(), tau.begin(), tau.end());
    return Permutation(std::move(out));
  }
  // UUD Q1 UDD Q2: σ n τ with σ above τ
  const Word sigma = rebuild_sigma(phi_inverse_unchecked(slice(d, 3, end - 3)));
  const Word tau = rebuild_tau(rest);
  const int t = static_cast<int>(tau.size());
  const int n = static_cast<int>(sigma.size()) + t + 1;
  for (int v : sigma) out.push_back(v + t);
  out.push_back(n);
  out.insert(out.end(), tau.begin(), tau.end());
  return Permutation(std::move(out));
}

}  // namespace

LatticePath phi(const Permutation& p) {
  require_class(p, "1-3-2", "RS(132)");
  return phi_unchecked(p);
}

Permutation phi_inverse(const LatticePath& path) {
  if (!is_member(path, PathClass::D1)) throw Error(ErrorCode::InvalidPath, path.render() + " is not in D1");
  return phi_inverse_unchecked(path);
}

// ---------------------------------------------------------------------------
// theta

namespace {

std::vector<Step> expand(const std::vector<Run>& rs) {
  std::vector<Step> out;
  for (const Run& r : rs) out.insert(out.end(), static_cast<std::size_t>(r.length), r.step);
  return out;
}

}  // namespace

LatticePath theta(const Permutation& p) {
  require_class(p, "1-3-2", "RS(132)");
  if (p.empty()) return path("UUDD");
  std::vector<Run> rs = runs(krar132_core(p));
  if (rs.size() == 2) {
    rs[0].length += 2;
    rs[1].length += 2;
  } else {
    ++rs.front().length;
    ++rs[1].length;
    ++rs[rs.size() - 2].length;
    ++rs.back().length;
  }
  return LatticePath(expand(rs));
}

Permutation theta_inverse(const LatticePath& d) {
  if (!is_member(d, PathClass::D2) || d.size() < 4) {
    throw Error(ErrorCode::InvalidPath, d.render() + " is not in D2 of semilength >= 2");
  }
  if (d == path("UUDD")) return {};
  std::vector<Run> rs = runs(d);
  if (rs.size() == 2) {
    rs[0].length -= 2;
    rs[1].length -= 2;
  } else {
    --rs.front().length;
    --rs[1].length;
    --rs[rs.size() - 2].length;
    --rs.back().length;
  }
  const Permutation p = krar132_core_inverse(LatticePath(expand(rs)));
  if (!is_simsun(p)) throw Error(ErrorCode::InvalidPath, d.render() + " is not in the image of theta");
  return p;
}

// ---------------------------------------------------------------------------
// admissible sequences

AdmissibleSequence::AdmissibleSequence(std::vector<int> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const int prev = i == 0 ? 0 : values_[i - 1];
    const int v = values_[i];
    if (v != prev + 1 && (i == 0 || v < 0 || v >= prev)) {
      throw Error(ErrorCode::InvalidSequence, "position " + std::to_string(i + 1) + " breaks the recurrence");
    }
  }
}

AdmissibleSequence AdmissibleSequence::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '(')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == ')' || text.back() == '\n')) text.remove_suffix(1);
  if (text.empty() || text == "e") return AdmissibleSequence{};
  std::vector<int> values;
  const char* it = text.data();
  const char* end = text.data() + text.size();
  while (it < end) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(it, end, v);
    if (ec != std::errc{} || ptr == it) {
      throw Error(ErrorCode::ParseError, "bad sequence text '" + std::string(text) + "'");
    }
    values.push_back(v);
    it = ptr;
    while (it < end && (*it == ',' || *it == ' ')) ++it;
  }
  return AdmissibleSequence(std::move(values));
}

std::string AdmissibleSequence::render() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out + ")";
}

std::vector<AdmissibleSequence> enumerate_admissible(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative length");
  std::vector<AdmissibleSequence> out;
  std::vector<int> a;
  std::function<void()> grow = [&] {
    if (static_cast<int>(a.size()) == n) {
      out.emplace_back(a);
      return;
    }
    const int prev = a.empty() ? 0 : a.back();
    std::vector<int> options;
    if (!a.empty()) {
      for (int v = 0; v < prev; ++v) options.push_back(v);
    }
    options.push_back(prev + 1);
    for (int v : options) {
      a.push_back(v);
      grow();
      a.pop_back();
    }
  };
  grow();
  std::sort(out.begin(), out.end());
  return out;
}

// Vertex v is labelled by the number of steps M shares with the path that
// starts at v and follows M while never rising above the running minimum.
AdmissibleSequence motzkin_to_adm(const LatticePath& m) {
  if (!is_motzkin(m)) throw Error(ErrorCode::InvalidPath, m.render() + " is not a Motzkin path");
  const int n = m.size();
  std::vector<int> h(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    h[static_cast<std::size_t>(i) + 1] = h[static_cast<std::size_t>(i)] + (m[i] == Step::U ? 1 : m[i] == Step::D ? -1 : 0);
  }
  std::vector<int> labels(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v <= n; ++v) {
    int shared = 0;
    int g = h[static_cast<std::size_t>(v)];
    for (int x = v; x < n; ++x) {
      const int next = std::min(g, h[static_cast<std::size_t>(x) + 1]);
      if (g == h[static_cast<std::size_t>(x)] && next == h[static_cast<std::size_t>(x) + 1]) ++shared;
      g = next;
    }
    labels[static_cast<std::size_t>(v)] = shared;
  }
  return AdmissibleSequence(std::vector<int>(labels.rbegin() + 1, labels.rend()));
}

LatticePath adm_to_motzkin(const AdmissibleSequence& a) {
  const int n = a.size();
  // label(v_j) = A[n - j] with A[0] = 0
  auto label = [&](int j) { return j == n ? 0 : a[n - j - 1]; };
  std::vector<int> last(static_cast<std::size_t>(n) + 1, 0);
  last[0] = label(0);
  std::vector<Step> steps;
  int b = 0;
  for (int j = 1; j <= n; ++j) {
    const int cur = label(j - 1);
    const int next = label(j);
    if (cur < next) {
      steps.push_back(Step::U);
      ++b;
    } else if (b == 0) {
      steps.push_back(Step::H);
    } else {
      const int ref = last[static_cast<std::size_t>(b) - 1];
      if (next == ref) {
        steps.push_back(Step::D);
        --b;
      } else if (next > ref) {
        steps.push_back(Step::H);
      } else {
        throw Error(ErrorCode::InvalidSequence, a.render() + " has no Motzkin path");
      }
    }
    last[static_cast<std::size_t>(b)] = next;
  }
  if (b != 0) throw Error(ErrorCode::InvalidSequence, a.render() + " has no Motzkin path");
  return LatticePath(std::move(steps));
}

Permutation adm_to_perm213(const AdmissibleSequence& a) {
  std::vector<int> p;
  for (int i = 1; i <= a.size(); ++i) {
    const int ai = a[i - 1];
    if (ai > i - 1) {
      p.push_back(i);
    } else {
      p.insert(p.begin() + ai, i);
    }
  }
  return Permutation(std::move(p));
}

AdmissibleSequence perm213_to_adm(const Permutation& p) {
  require_class(p, "2-1-3", "RS(213)");
  const int n = p.size();
  const Permutation inv = p.inverse();
  std::vector<int> a;
  for (int i = 1; i <= n; ++i) {
    int smaller_left = 0;
    for (int j = 0; j < inv[i - 1] - 1; ++j) {
      if (p[j] < i) ++smaller_left;
    }
    const int prev = a.empty() ? 0 : a.back();
    a.push_back(smaller_left == i - 1 && prev == i - 1 ? i : smaller_left);
  }
  return AdmissibleSequence(std::move(a));
}

// ---------------------------------------------------------------------------
// Callan

LatticePath callan(const LatticePath& d) {
  if (!is_dyck(d) || d.empty() || count_factor(d, "DUD") > 0) {
    throw Error(ErrorCode::InvalidPath, d.render() + " is not a nonempty DUD-free Dyck path");
  }
  const int n = d.size();
  std::vector<bool> marked(static_cast<std::size_t>(n), false);
  std::vector<int> match(static_cast<std::size_t>(n), -1);
  std::vector<int> open;
  for (int i = 0; i < n; ++i) {
    const bool after_u = i > 0 && d[i - 1] == Step::U;
    const bool after_d = i > 0 && d[i - 1] == Step::D;
    if (d[i] == Step::U) {
      marked[static_cast<std::size_t>(i)] = !after_d;
      open.push_back(i);
    } else {
      marked[static_cast<std::size_t>(i)] = after_u;
      match[static_cast<std::size_t>(i)] = open.back();
      open.pop_back();
    }
  }
  std::vector<Step> out;
  for (int i = 0; i < n; ++i) {
    if (marked[static_cast<std::size_t>(i)]) continue;
    if (d[i] == Step::D && marked[static_cast<std::size_t>(match[static_cast<std::size_t>(i)])]) {
      out.push_back(Step::H);
    } else {
      out.push_back(d[i]);
    }
  }
  return LatticePath(std::move(out));
}

// Write m = X_0 U X_1 U ... U X_r. Arch i of the preimage is
// U^(h_i + 2) D^(|X_i| + 1), one U fewer for arch 0, where h_i counts the H
// steps whose innermost enclosing U is the i-th one.
LatticePath callan_inverse(const LatticePath& m) {
  if (!is_motzkin(m)) throw Error(ErrorCode::InvalidPath, m.render() + " is not a Motzkin path");
  const int arches = m.count(Step::U) + 1;
  std::vector<int> h(static_cast<std::size_t>(arches), 0);
  std::vector<int> len(static_cast<std::size_t>(arches), 0);
  std::vector<int> open{0};
  int current = 0;
  for (Step s : m.steps()) {
    if (s == Step::U) {
      ++current;
      open.push_back(current);
      continue;
    }
    ++len[static_cast<std::size_t>(current)];
    if (s == Step::D) {
      open.pop_back();
    } else {
      ++h[static_cast<std::size_t>(open.back())];
    }
  }
  std::vector<Step> out;
  for (int i = 0; i < arches; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    out.insert(out.end(), static_cast<std::size_t>(h[ui] + (i == 0 ? 1 : 2)), Step::U);
    out.insert(out.end(), static_cast<std::size_t>(len[ui] + 1), Step::D);
  }
  return LatticePath(std::move(out));
}

LatticePath pad_last_peak(const LatticePath& d) {
  if (d.empty()) throw Error(ErrorCode::InvalidPath, "the empty path has no peak");
  std::vector<Step> steps(d.steps().begin(), d.steps().end());
  int peak = -1;
  for (int i = 0; i + 1 < d.size(); ++i) {
    if (d[i] == Step::U && d[i + 1] == Step::D) peak = i;
  }
  if (peak < 0) throw Error(ErrorCode::InvalidPath, d.render() + " has no peak");
  steps.insert(steps.begin() + peak, Step::U);
  steps.push_back(Step::D);
  return LatticePath(std::move(steps));
}

LatticePath rs213_to_motzkin(const Permutation& p) {
  require_class(p, "2-1-3", "RS(213)");
  if (p.empty()) return {};
  return callan(pad_last_peak(krar(p, KrarKind::K213)));
}

Permutation motzkin_to_rs213(const LatticePath& m) {
  if (!is_motzkin(m)) throw Error(ErrorCode::InvalidPath, m.render() + " is not a Motzkin path");
  if (m.empty()) return {};
  const LatticePath padded = callan_inverse(m);
  std::vector<Step> steps(padded.steps().begin(), padded.steps().end());
  int peak = -1;
  for (int i = 0; i + 1 < padded.size(); ++i) {
    if (padded[i] == Step::U && padded[i + 1] == Step::D) peak = i;
  }
  steps.pop_back();
  steps.erase(steps.begin() + peak);
  return krar_inverse(LatticePath(std::move(steps)), KrarKind::K213);
}

// ---------------------------------------------------------------------------
// psi

LatticePath chunk_uud(const LatticePath& d) {
  std::vector<Step> out;
  int i = 0;
  const int n = d.size();
  while (i < n) {
    if (i + 2 < n && d[i] == Step::U && d[i + 1] == Step::U && d[i + 2] == Step::D) {
      out.push_back(Step::U);
      i += 3;
    } else if (i + 1 < n && d[i] == Step::U && d[i + 1] == Step::D) {
      out.push_back(Step::H);
      i += 2;
    } else if (d[i] == Step::D) {
      out.push_back(Step::D);
      i += 1;
    } else {
      throw Error(ErrorCode::InvalidPath, d.render() + " does not split into UUD, UD, D");
    }
  }
  return LatticePath(std::move(out));
}

LatticePath psi(const Permutation& p) {
  require_class(p, "2-3-1", "RS(231)");
  return chunk_uud(krar(p, KrarKind::K231));
}

namespace {

LatticePath psi_recursive_unchecked(const Permutation& p) {
  const int n = p.size();
  if (n == 0) return {};
  if (n == 1) return path("H");
  const std::vector<Word> blocks = split_min_components(p);
  if (blocks.size() > 1) {
    LatticePath out;
    for (const Word& b : blocks) out += psi_recursive_unchecked(reduce(b));
    return out;
  }
  if (p[0] != n || p[1] != 1) {
    throw Error(ErrorCode::NotInDomain, p.render() + " is indecomposable but does not start with n 1");
  }
  return path("U") + psi_recursive_unchecked(reduce(p.entries().subspan(2))) + path("D");
}

Permutation psi_inverse_unchecked(const LatticePath& m) {
  Permutation out;
  int i = 0;
  while (i < m.size()) {
    Permutation piece;
    if (m[i] == Step::H) {
      piece = Permutation::identity(1);
      ++i;
    } else {
      int h = 0;
      int j = i;
      do {
        h += m[j] == Step::U ? 1 : m[j] == Step::D ? -1 : 0;
        ++j;
      } while (h > 0);
      const Permutation inner = psi_inverse_unchecked(slice(m, i + 1, j - 1));
      Word w{inner.size() + 2, 1};
      for (int v : inner.entries()) w.push_back(v + 1);
      piece = Permutation(std::move(w));
      i = j;
    }
    out = direct_sum(out, piece);
  }
  return out;
}

}  // namespace

LatticePath psi_recursive(const Permutation& p) {
  require_class(p, "2-3-1", "RS(231)");
  return psi_recursive_unchecked(p);
}

Permutation psi_inverse(const LatticePath& m) {
  if (!is_motzkin(m)) throw Error(ErrorCode::InvalidPath, m.render() + " is not a Motzkin path");
  return psi_inverse_unchecked(m);
}

// ---------------------------------------------------------------------------
// dispatch

const std::vector<std::string>& bijection_names() {
  static const std::vector<std::string> names{"krar132", "krar231", "krar312", "krar213", "phi", "theta",
                                              "adm", "adm-perm213", "callan", "rs213-motzkin", "psi"};
  return names;
}

std::string apply_bijection(std::string_view name, bool inverse, std::string_view object) {
  auto perm = [&] { return Permutation::parse(object); };
  auto lattice = [&] { return LatticePath::parse(object); };
  auto adm = [&] { return AdmissibleSequence::parse(object); };
  if (name.substr(0, 4) == "krar") {
    const KrarKind kind = parse_krar_kind(name.substr(4));
    return inverse ? krar_inverse(lattice(), kind).render() : krar(perm(), kind).render();
  }
  if (name == "phi") return inverse ? phi_inverse(lattice()).render() : phi(perm()).render();
  if (name == "theta") return inverse ? theta_inverse(lattice()).render() : theta(perm()).render();
  if (name == "adm") return inverse ? adm_to_motzkin(adm()).render() : motzkin_to_adm(lattice()).render();
  if (name == "adm-perm213") return inverse ? perm213_to_adm(perm()).render() : adm_to_perm213(adm()).render();
  if (name == "callan") return inverse ? callan_inverse(lattice()).render() : callan(lattice()).render();
  if (name == "rs213-motzkin") {
    return inverse ? motzkin_to_rs213(lattice()).render() : rs213_to_motzkin(perm()).render();
  }
  if (name == "psi") return inverse ? psi_inverse(lattice()).render() : psi(perm()).render();
  throw Error(ErrorCode::InvalidArgument, "unknown bijection '" + std::string(name) + "'");
}

}  // namespace simsun
