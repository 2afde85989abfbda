// Command-line front end. Talks to the library only through simsun.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "simsun/simsun.h"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct DomainFailure {
  simsun_status status;
};

void check(simsun_status s) {
  if (s != SIMSUN_OK) throw DomainFailure{s};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  simsun_string_free(s);
  return out;
}

std::vector<std::string> take(simsun_strings* list) {
  std::vector<std::string> out;
  for (size_t i = 0; i < simsun_strings_count(list); ++i) out.emplace_back(simsun_strings_at(list, i));
  simsun_strings_free(list);
  return out;
}

// RAII wrappers for the two handle types the CLI keeps around.
struct Patterns {
  simsun_patterns* h = nullptr;
  explicit Patterns(const std::string& text) { check(simsun_patterns_parse(text.c_str(), &h)); }
  ~Patterns() { simsun_patterns_free(h); }
  Patterns(const Patterns&) = delete;
  Patterns& operator=(const Patterns&) = delete;
};

struct Perm {
  simsun_perm* h = nullptr;
  explicit Perm(const std::string& text) { check(simsun_perm_parse(text.c_str(), &h)); }
  ~Perm() { simsun_perm_free(h); }
  Perm(const Perm&) = delete;
  Perm& operator=(const Perm&) = delete;
};

// "3", "0..6"
std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected N or N0..N1, got '" + text + "'");
  }
}

int print_report(simsun_report* r, const std::string& format) {
  std::cout << (format == "json" ? simsun_report_json(r) : simsun_report_text(r));
  if (format == "json") std::cout << '\n';
  const int ok = simsun_report_ok(r);
  simsun_report_free(r);
  return ok ? 0 : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simsun permutations, pattern avoidance and lattice path bijections"};
  app.require_subcommand(1);
  int result = 0;

  auto* seq_cmd = app.add_subcommand("seq", "Print sequence values");
  std::string seq_id;
  std::string seq_range;
  seq_cmd->add_option("id", seq_id, "catalan, motzkin, secondary, fibonacci or euler")->required();
  seq_cmd->add_option("range", seq_range, "N or N0..N1")->required();
  seq_cmd->callback([&] {
    const auto [n0, n1] = parse_range(seq_range);
    std::string line;
    for (int n = n0; n <= n1; ++n) {
      char* v = nullptr;
      check(simsun_seq(seq_id.c_str(), n, &v));
      line += (n > n0 ? " " : "") + take(v);
    }
    std::cout << line << '\n';
  });

  auto* count_cmd = app.add_subcommand("count", "Count simsun permutations avoiding patterns");
  int count_n = 0;
  std::string count_avoid = "none";
  std::string count_method = "brute";
  int count_threads = 0;
  count_cmd->add_option("--n", count_n, "Length")->required()->check(CLI::NonNegativeNumber);
  count_cmd->add_option("--avoid", count_avoid, "Comma-separated patterns in dash notation");
  count_cmd->add_option("--method", count_method, "brute or tree")->check(CLI::IsMember({"brute", "tree"}));
  count_cmd->add_option("--threads", count_threads, "Worker threads, 0 = all cores");
  count_cmd->callback([&] {
    Patterns pats(count_avoid);
    char* v = nullptr;
    check(simsun_count(count_n, pats.h, count_method.c_str(), count_threads, &v));
    std::cout << take(v) << '\n';
  });

  auto* enum_cmd = app.add_subcommand("enumerate", "List a permutation or path class");
  int enum_n = 0;
  std::string enum_avoid = "none";
  std::string enum_paths;
  std::string enum_format = "lines";
  enum_cmd->add_option("--n", enum_n, "Length, or semilength for Dyck classes")->required()->check(
      CLI::NonNegativeNumber);
  enum_cmd->add_option("--avoid", enum_avoid, "Patterns the simsun permutations avoid");
  enum_cmd->add_option("--paths", enum_paths, "List a path class instead: Dyck, Motzkin, D1, D2, Dprime, ...");
  enum_cmd->add_option("--format", enum_format, "lines or json")->check(CLI::IsMember({"lines", "json"}));
  enum_cmd->callback([&] {
    simsun_strings* list = nullptr;
    if (enum_paths.empty()) {
      Patterns pats(enum_avoid);
      check(simsun_tree_level(enum_n, pats.h, &list));
    } else {
      check(simsun_enumerate_paths(enum_n, enum_paths.c_str(), &list));
    }
    const auto items = take(list);
    if (enum_format == "json") {
      std::cout << nlohmann::json(items).dump() << '\n';
    } else {
      for (const auto& s : items) std::cout << s << '\n';
    }
  });

  auto* map_cmd = app.add_subcommand("map", "Apply a bijection");
  std::string map_name;
  std::string map_object;
  bool map_inverse = false;
  map_cmd->add_option("bijection", map_name,
                      "krar132, krar231, krar312, krar213, phi, theta, adm, adm-perm213, callan, rs213-motzkin, psi")
      ->required();
  map_cmd->add_option("object", map_object, "Permutation, path or sequence in text form")->required();
  map_cmd->add_flag("--inverse", map_inverse, "Apply the inverse map");
  map_cmd->callback([&] {
    char* v = nullptr;
    check(simsun_map(map_name.c_str(), map_inverse ? 1 : 0, map_object.c_str(), &v));
    std::cout << take(v) << '\n';
  });

  auto* verify_cmd = app.add_subcommand("verify", "Run an invariant suite");
  std::string suite = "all";
  int verify_n = 8;
  std::string verify_format = "text";
  verify_cmd->add_option("--suite", suite, "Suite name or all");
  verify_cmd->add_option("--n-max", verify_n, "Largest size checked")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", verify_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify_cmd->callback([&] {
    simsun_report* r = nullptr;
    check(simsun_verify(suite.c_str(), verify_n, &r));
    result = print_report(r, verify_format);
  });

  auto* tables_cmd = app.add_subcommand("tables", "Reproduce the counting tables");
  int tables_n = 8;
  int six_max = -1;
  int tables_threads = 0;
  std::string tables_format = "text";
  tables_cmd->add_option("--n-max", tables_n, "Largest n per row")->check(CLI::PositiveNumber);
  tables_cmd->add_option("--six-max", six_max, "Largest n for the all-six count (default: n-max)");
  tables_cmd->add_option("--threads", tables_threads, "Worker threads, 0 = all cores");
  tables_cmd->add_option("--format", tables_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  tables_cmd->callback([&] {
    simsun_report* r = nullptr;
    check(simsun_tables(tables_n, six_max < 0 ? tables_n : six_max, tables_threads, &r));
    result = print_report(r, tables_format);
  });

  auto* fert_cmd = app.add_subcommand("fertility", "Print the fertility gaps of a permutation");
  std::string fert_perm;
  std::string fert_avoid = "none";
  fert_cmd->add_option("perm", fert_perm, "One-line notation")->required();
  fert_cmd->add_option("--avoid", fert_avoid, "Patterns defining the subtree");
  fert_cmd->callback([&] {
    Perm p(fert_perm);
    Patterns pats(fert_avoid);
    int* gaps = nullptr;
    size_t count = 0;
    check(simsun_fertility_gaps(p.h, pats.h, &gaps, &count));
    std::string line;
    for (size_t i = 0; i < count; ++i) line += (i ? " " : "") + std::to_string(gaps[i]);
    simsun_ints_free(gaps);
    std::cout << line << '\n';
  });

  auto* classify_cmd = app.add_subcommand("classify", "List the classes a lattice path belongs to");
  std::string classify_path;
  classify_cmd->add_option("path", classify_path, "Word over U, D, H")->required();
  classify_cmd->callback([&] {
    simsun_strings* list = nullptr;
    check(simsun_path_classify(classify_path.c_str(), &list));
    std::string line;
    for (const auto& s : take(list)) line += (line.empty() ? "" : " ") + s;
    std::cout << line << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const DomainFailure& f) {
    std::cerr << "error: " << simsun_last_error() << '\n';
    const bool usage = f.status == SIMSUN_ERR_INVALID_ARGUMENT || f.status == SIMSUN_ERR_PARSE;
    return usage ? kExitUsage : kExitDomain;
  }
  return result;
}
