#include "simsun/simsun.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "simsun/bijections.hpp"
#include "simsun/census.hpp"
#include "simsun/error.hpp"
#include "simsun/lattice_path.hpp"
#include "simsun/pattern.hpp"
#include "simsun/permutation.hpp"
#include "simsun/sequences.hpp"
#include "simsun/simsun.hpp"
#include "simsun/verify.hpp"

struct simsun_perm {
  simsun::Permutation value;
};

struct simsun_patterns {
  simsun::PatternSet value;
};

struct simsun_strings {
  std::vector<std::string> items;
};

struct simsun_report {
  bool ok = false;
  std::string text;
  std::string json;
};

namespace {

thread_local std::string last_error;

simsun_status status_of(simsun::ErrorCode code) {
  using simsun::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return SIMSUN_ERR_INVALID_ARGUMENT;
    case ErrorCode::ParseError: return SIMSUN_ERR_PARSE;
    case ErrorCode::InvalidWord: return SIMSUN_ERR_INVALID_WORD;
    case ErrorCode::EmptyPermutation: return SIMSUN_ERR_EMPTY_PERMUTATION;
    case ErrorCode::InvalidK: return SIMSUN_ERR_INVALID_K;
    case ErrorCode::NotInTree: return SIMSUN_ERR_NOT_IN_TREE;
    case ErrorCode::NotAvoiding: return SIMSUN_ERR_NOT_AVOIDING;
    case ErrorCode::NotInDomain: return SIMSUN_ERR_NOT_IN_DOMAIN;
    case ErrorCode::InvalidPath: return SIMSUN_ERR_INVALID_PATH;
    case ErrorCode::InvalidSequence: return SIMSUN_ERR_INVALID_SEQUENCE;
    case ErrorCode::InvalidIndex: return SIMSUN_ERR_INVALID_INDEX;
    case ErrorCode::IllPosed: return SIMSUN_ERR_ILL_POSED;
    case ErrorCode::NotTabulated: return SIMSUN_ERR_NOT_TABULATED;
    case ErrorCode::OutOfStatedRange: return SIMSUN_ERR_OUT_OF_STATED_RANGE;
  }
  return SIMSUN_ERR_INTERNAL;
}

// Runs body, translating exceptions into a status and the thread-local message.
template <class F>
simsun_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return SIMSUN_OK;
  } catch (const simsun::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return SIMSUN_ERR_INTERNAL;
}

void require(bool cond, const char* what) {
  if (!cond) throw simsun::Error(simsun::ErrorCode::InvalidArgument, what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const simsun::PatternSet& pats_or_empty(const simsun_patterns* pats) {
  static const simsun::PatternSet none;
  return pats ? pats->value : none;
}

simsun_strings* make_strings(std::vector<std::string> items) {
  return new simsun_strings{std::move(items)};
}

}  // namespace

extern "C" {

const char* simsun_status_name(simsun_status status) {
  switch (status) {
    case SIMSUN_OK: return "Ok";
    case SIMSUN_ERR_INTERNAL: return "Internal";
    default: break;
  }
  if (status >= SIMSUN_ERR_INVALID_ARGUMENT && status <= SIMSUN_ERR_OUT_OF_STATED_RANGE) {
    return simsun::to_string(static_cast<simsun::ErrorCode>(status - 1));
  }
  return "Unknown";
}

const char* simsun_last_error(void) { return last_error.c_str(); }

void simsun_string_free(char* s) { std::free(s); }

size_t simsun_strings_count(const simsun_strings* list) { return list ? list->items.size() : 0; }

const char* simsun_strings_at(const simsun_strings* list, size_t i) {
  if (!list || i >= list->items.size()) return nullptr;
  return list->items[i].c_str();
}

void simsun_strings_free(simsun_strings* list) { delete list; }

simsun_status simsun_perm_parse(const char* text, simsun_perm** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new simsun_perm{simsun::Permutation::parse(text)};
  });
}

void simsun_perm_free(simsun_perm* p) { delete p; }

size_t simsun_perm_size(const simsun_perm* p) { return p ? static_cast<size_t>(p->value.size()) : 0; }

simsun_status simsun_perm_render(const simsun_perm* p, char** out) {
  return guarded([&] {
    require(p && out, "null argument");
    *out = dup(p->value.render());
  });
}

simsun_status simsun_perm_is_simsun(const simsun_perm* p, int* out) {
  return guarded([&] {
    require(p && out, "null argument");
    *out = simsun::is_simsun(p->value) ? 1 : 0;
  });
}

simsun_status simsun_patterns_parse(const char* text, simsun_patterns** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new simsun_patterns{simsun::parse_pattern_set(text)};
  });
}

void simsun_patterns_free(simsun_patterns* pats) { delete pats; }

simsun_status simsun_perm_avoids_all(const simsun_perm* p, const simsun_patterns* pats, int* out) {
  return guarded([&] {
    require(p && out, "null argument");
    *out = simsun::avoids_all(p->value, pats_or_empty(pats)) ? 1 : 0;
  });
}

simsun_status simsun_fertility_gaps(const simsun_perm* p, const simsun_patterns* pats, int** gaps, size_t* count) {
  return guarded([&] {
    require(p && gaps && count, "null argument");
    const std::vector<int> g = simsun::fertility_gaps(p->value, pats_or_empty(pats));
    int* buf = static_cast<int*>(std::malloc(sizeof(int) * (g.size() + 1)));
    if (!buf) throw std::bad_alloc();
    std::copy(g.begin(), g.end(), buf);
    *gaps = buf;
    *count = g.size();
  });
}

void simsun_ints_free(int* values) { std::free(values); }

simsun_status simsun_tree_level(int n, const simsun_patterns* pats, simsun_strings** out) {
  return guarded([&] {
    require(out, "null argument");
    std::vector<std::string> items;
    for (const auto& p : simsun::tree_level(n, pats_or_empty(pats))) items.push_back(p.render());
    *out = make_strings(std::move(items));
  });
}

simsun_status simsun_count(int n, const simsun_patterns* pats, const char* method, int threads, char** out) {
  return guarded([&] {
    require(out, "null argument");
    const auto m = simsun::parse_count_method(method ? method : "brute");
    *out = dup(simsun::count_class(n, pats_or_empty(pats), m, threads).str());
  });
}

simsun_status simsun_expected_count(int n, const simsun_patterns* pats, char** out) {
  return guarded([&] {
    require(out, "null argument");
    const auto v = simsun::expected_count(n, pats_or_empty(pats));
    if (!v) {
      throw simsun::Error(simsun::ErrorCode::OutOfStatedRange,
                          "the tabulated value holds from n = " +
                              std::to_string(simsun::tabulated_from(pats_or_empty(pats))));
    }
    *out = dup(v->str());
  });
}

simsun_status simsun_contain_all_six(int n, int threads, char** observed, char** formula,
                                     simsun_strings** witnesses) {
  return guarded([&] {
    require(observed && formula, "null argument");
    const simsun::ContainAllSix r = simsun::contain_all_six(n, threads);
    std::vector<std::string> items;
    for (const auto& w : r.witnesses) items.push_back(w.render());
    *observed = dup(r.observed.str());
    *formula = dup(r.formula.str());
    if (witnesses) *witnesses = make_strings(std::move(items));
  });
}

simsun_status simsun_seq(const char* id, int n, char** out) {
  return guarded([&] {
    require(id && out, "null argument");
    *out = dup(simsun::seq(simsun::parse_sequence_id(id), n).str());
  });
}

simsun_status simsun_map(const char* bijection, int inverse, const char* object, char** out) {
  return guarded([&] {
    require(bijection && object && out, "null argument");
    *out = dup(simsun::apply_bijection(bijection, inverse != 0, object));
  });
}

simsun_status simsun_map_names(simsun_strings** out) {
  return guarded([&] {
    require(out, "null argument");
    *out = make_strings(simsun::bijection_names());
  });
}

simsun_status simsun_path_classify(const char* path, simsun_strings** out) {
  return guarded([&] {
    require(path && out, "null argument");
    std::vector<std::string> items;
    for (auto c : simsun::classify(simsun::LatticePath::parse(path))) items.emplace_back(simsun::to_string(c));
    *out = make_strings(std::move(items));
  });
}

simsun_status simsun_enumerate_paths(int n, const char* path_class, simsun_strings** out) {
  return guarded([&] {
    require(path_class && out, "null argument");
    std::vector<std::string> items;
    for (const auto& p : simsun::enumerate_paths(n, simsun::parse_path_class(path_class))) {
      items.push_back(p.render());
    }
    *out = make_strings(std::move(items));
  });
}

simsun_status simsun_verify(const char* suite, int n_max, simsun_report** out) {
  return guarded([&] {
    require(suite && out, "null argument");
    const simsun::VerifyReport r = simsun::run_suite(suite, n_max);
    *out = new simsun_report{r.ok(), r.to_text(), r.to_json()};
  });
}

simsun_status simsun_verify_suites(simsun_strings** out) {
  return guarded([&] {
    require(out, "null argument");
    *out = make_strings(simsun::suite_names());
  });
}

simsun_status simsun_tables(int n_max, int six_max, int threads, simsun_report** out) {
  return guarded([&] {
    require(out, "null argument");
    const simsun::CountReport r = simsun::full_census(n_max, six_max, threads);
    *out = new simsun_report{r.ok(), r.to_text(), r.to_json()};
  });
}

int simsun_report_ok(const simsun_report* r) { return r && r->ok ? 1 : 0; }

const char* simsun_report_text(const simsun_report* r) { return r ? r->text.c_str() : ""; }

const char* simsun_report_json(const simsun_report* r) { return r ? r->json.c_str() : ""; }

void simsun_report_free(simsun_report* r) { delete r; }

}  // extern "C"
