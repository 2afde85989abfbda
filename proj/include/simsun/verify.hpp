#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace simsun {

struct Check {
  Check() = default;
  explicit Check(std::string n) : name(std::move(n)) {}

  std::string name;
  std::int64_t cases = 0;
  std::int64_t violation_count = 0;
  std::vector<std::string> violations;  // the first few only

  bool ok() const { return violation_count == 0; }
  void fail(std::string what);
};

struct VerifyReport {
  std::string suite;
  int n_max = 0;
  std::vector<Check> checks;

  bool ok() const;
  std::string to_text() const;
  std::string to_json() const;
};

// succession, roundtrip, transport, lemma4, inclusion-chain,
// callan-criterion, characterizations, d1-parse, path-counts.
const std::vector<std::string>& suite_names();

// Runs one suite, or every suite for "all". Throws InvalidArgument on an
// unknown name. Output is deterministic.
VerifyReport run_suite(std::string_view name, int n_max);

}  // namespace simsun
