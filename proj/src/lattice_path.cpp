#include "simsun/lattice_path.hpp"

#include <algorithm>
#include <functional>

#include "simsun/error.hpp"

namespace simsun {

LatticePath LatticePath::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\n')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\n')) text.remove_suffix(1);
  if (text == "e") return LatticePath{};
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty path text; use 'e'");
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'U': steps.push_back(Step::U); break;
      case 'D': steps.push_back(Step::D); break;
      case 'H': steps.push_back(Step::H); break;
      default:
        throw Error(ErrorCode::ParseError, "bad path text '" + std::string(text) + "'");
    }
  }
  return LatticePath(std::move(steps));
}

std::string LatticePath::render() const {
  if (steps_.empty()) return "e";
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out += static_cast<char>(s);
  return out;
}

int LatticePath::count(Step s) const {
  return static_cast<int>(std::count(steps_.begin(), steps_.end(), s));
}

LatticePath LatticePath::operator+(const LatticePath& other) const {
  LatticePath out = *this;
  out += other;
  return out;
}

LatticePath& LatticePath::operator+=(const LatticePath& other) {
  steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
  return *this;
}

LatticePath LatticePath::mirror() const {
  std::vector<Step> out(steps_.rbegin(), steps_.rend());
  for (Step& s : out) {
    if (s == Step::U) {
      s = Step::D;
    } else if (s == Step::D) {
      s = Step::U;
    }
  }
  return LatticePath(std::move(out));
}

LatticePath path(std::string_view text) { return LatticePath::parse(text.empty() ? "e" : text); }

std::string_view to_string(PathClass c) {
  switch (c) {
    case PathClass::Dyck: return "Dyck";
    case PathClass::Motzkin: return "Motzkin";
    case PathClass::D1: return "D1";
    case PathClass::D2: return "D2";
    case PathClass::Dprime: return "Dprime";
    case PathClass::DudFreeExceptLastPeak: return "DudFreeExceptLastPeak";
  }
  return "?";
}

PathClass parse_path_class(std::string_view name) {
  for (PathClass c : all_path_classes()) {
    if (to_string(c) == name) return c;
  }
  if (name == "dyck") return PathClass::Dyck;
  if (name == "motzkin") return PathClass::Motzkin;
  if (name == "d1") return PathClass::D1;
  if (name == "d2") return PathClass::D2;
  if (name == "dprime") return PathClass::Dprime;
  if (name == "dud-free-except-last-peak") return PathClass::DudFreeExceptLastPeak;
  throw Error(ErrorCode::InvalidArgument, "unknown path class '" + std::string(name) + "'");
}

const std::vector<PathClass>& all_path_classes() {
  static const std::vector<PathClass> all{PathClass::Dyck, PathClass::Motzkin, PathClass::D1,
                                          PathClass::D2, PathClass::Dprime, PathClass::DudFreeExceptLastPeak};
  return all;
}

bool is_motzkin(const LatticePath& p) {
  int h = 0;
  for (Step s : p.steps()) {
    if (s == Step::U) ++h;
    if (s == Step::D && --h < 0) return false;
  }
  return h == 0;
}

bool is_dyck(const LatticePath& p) { return p.count(Step::H) == 0 && is_motzkin(p); }

int count_factor(const LatticePath& p, std::string_view factor) {
  const std::string word = p.empty() ? std::string{} : p.render();
  if (factor.empty() || factor.size() > word.size()) return 0;
  int n = 0;
  for (std::size_t i = 0; i + factor.size() <= word.size(); ++i) {
    if (word.compare(i, factor.size(), factor) == 0) ++n;
  }
  return n;
}

std::vector<Run> runs(const LatticePath& p) {
  std::vector<Run> out;
  for (Step s : p.steps()) {
    if (!out.empty() && out.back().step == s) {
      ++out.back().length;
    } else {
      out.push_back({s, 1});
    }
  }
  return out;
}

namespace {

bool is_peak(const LatticePath& p, int i) {
  return i + 1 < p.size() && p[i] == Step::U && p[i + 1] == Step::D;
}

bool is_d2(const LatticePath& p) {
  if (!is_dyck(p)) return false;
  for (int i = 0; i + 1 < p.size(); ++i) {
    if (!is_peak(p, i)) continue;
    if (i < 1 || i + 2 >= p.size() || p[i - 1] != Step::U || p[i + 2] != Step::D) return false;
  }
  return true;
}

// No ascent and no descent of length 1 strictly between two consecutive
// valleys.
bool is_dprime_by_valleys(const LatticePath& p) {
  if (!is_dyck(p)) return false;
  std::vector<int> valleys;  // index of the U that follows each valley
  for (int i = 1; i < p.size(); ++i) {
    if (p[i - 1] == Step::D && p[i] == Step::U) valleys.push_back(i);
  }
  for (std::size_t j = 0; j + 1 < valleys.size(); ++j) {
    int ups = 0;
    int downs = 0;
    for (int i = valleys[j]; i < valleys[j + 1]; ++i) {
      if (p[i] == Step::U) {
        ++ups;
      } else {
        ++downs;
      }
    }
    if (ups < 2 || downs < 2) return false;
  }
  return true;
}

bool is_dud_free_except_last_peak(const LatticePath& p) {
  if (!is_dyck(p)) return false;
  int last_peak = -1;
  for (int i = 0; i + 1 < p.size(); ++i) {
    if (is_peak(p, i)) last_peak = i;
  }
  for (int i = 0; i + 2 < p.size(); ++i) {
    if (p[i] == Step::D && p[i + 1] == Step::U && p[i + 2] == Step::D && i + 1 != last_peak) return false;
  }
  return true;
}

}  // namespace

bool is_dprime_by_peaks(const LatticePath& p) {
  if (!is_dyck(p)) return false;
  std::vector<int> peaks;
  for (int i = 0; i + 1 < p.size(); ++i) {
    if (is_peak(p, i)) peaks.push_back(i);
  }
  for (std::size_t j = 1; j + 1 < peaks.size(); ++j) {
    const int i = peaks[j];
    if (i < 1 || i + 2 >= p.size() || p[i - 1] != Step::U || p[i + 2] != Step::D) return false;
  }
  return true;
}

bool is_member(const LatticePath& p, PathClass c) {
  switch (c) {
    case PathClass::Dyck: return is_dyck(p);
    case PathClass::Motzkin: return is_motzkin(p);
    case PathClass::D1:
      return is_dyck(p) && count_factor(p, "UUU") == 0 && count_factor(p, "DDD") == 0;
    case PathClass::D2: return is_d2(p);
    case PathClass::Dprime: return is_dprime_by_valleys(p);
    case PathClass::DudFreeExceptLastPeak: return is_dud_free_except_last_peak(p);
  }
  return false;
}

std::vector<PathClass> classify(const LatticePath& p) {
  std::vector<PathClass> out;
  for (PathClass c : all_path_classes()) {
    if (is_member(p, c)) out.push_back(c);
  }
  return out;
}

std::vector<LatticePath> enumerate_paths(int n, PathClass c) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative size");
  const bool motzkin = c == PathClass::Motzkin;
  const int length = motzkin ? n : 2 * n;
  std::vector<LatticePath> out;
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(length));

  std::function<void(int)> grow = [&](int height) {
    const int left = length - static_cast<int>(steps.size());
    if (left == 0) {
      LatticePath candidate(steps);
      if (is_member(candidate, c)) out.push_back(std::move(candidate));
      return;
    }
    if (height + 1 <= left - 1) {
      steps.push_back(Step::U);
      grow(height + 1);
      steps.pop_back();
    }
    if (height > 0) {
      steps.push_back(Step::D);
      grow(height - 1);
      steps.pop_back();
    }
    if (motzkin && height <= left - 1) {
      steps.push_back(Step::H);
      grow(height);
      steps.pop_back();
    }
  };
  grow(0);
  return out;
}

PathStats path_stats(const LatticePath& p) {
  PathStats s;
  s.peaks = count_factor(p, "UD");
  s.valleys = count_factor(p, "DU");
  int h = 0;
  for (Step step : p.steps()) {
    s.area += h;
    switch (step) {
      case Step::U:
        ++h;
        ++s.up_steps;
        break;
      case Step::D: --h; break;
      case Step::H:
        if (h == 0) ++s.axis_h_steps;
        break;
    }
  }
  for (const Run& r : runs(p)) {
    if (r.step == Step::U) s.max_ascent_run = std::max(s.max_ascent_run, r.length);
  }
  const auto rs = runs(p);
  if (!rs.empty() && rs.back().step == Step::D) s.final_descent_length = rs.back().length;
  return s;
}

}  // namespace simsun
