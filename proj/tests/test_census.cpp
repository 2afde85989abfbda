#include <doctest.h>

#include <json.hpp>

#include "oracles.hpp"
#include "simsun/census.hpp"
#include "simsun/error.hpp"
#include "simsun/verify.hpp"

using namespace simsun;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

std::vector<std::string> split(const std::string& key) {
  std::vector<std::string> out;
  if (key == "none") return out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = key.find(',', start);
    std::string t = key.substr(start, comma - start);
    out.push_back(std::string{t[0], '-', t[1], '-', t[2]});
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

}  // namespace

TEST_CASE("brute and tree counts agree with the definitional filter") {
  for (const auto& cls : tabulated_classes()) {
    const auto key = class_key(cls);
    const auto pats = split(key);
    for (int n = 0; n <= 7; ++n) {
      CAPTURE(key);
      CAPTURE(n);
      const auto expect = oracle::rs(n, pats).size();
      REQUIRE(count_class(n, cls, CountMethod::Brute, 1) == expect);
      REQUIRE(count_class(n, cls, CountMethod::Tree, 2) == expect);
    }
  }
}

TEST_CASE("vincular classes count like the brute filter") {
  const auto pats = parse_pattern_set("2-31");
  for (int n = 0; n <= 7; ++n) CHECK(count_class(n, pats, CountMethod::Brute) == oracle::rs(n, {"2-31"}).size());
}

TEST_CASE("table lookups") {
  CHECK(class_key(parse_pattern_set("1-3-2,1-2-3")) == "123,132");
  CHECK(class_key({}) == "none");
  CHECK(tabulated_classes().size() == 1 + 6 + 15 + 20 + 15 + 6);
  CHECK(*expected_count(7, parse_pattern_set("1-2-3")) == 6);
  CHECK_FALSE(expected_count(3, parse_pattern_set("1-2-3")).has_value());
  CHECK(*expected_count(3, parse_pattern_set("1-2-3,2-1-3")) == 3);
  CHECK(*expected_count(10, parse_pattern_set("1-3-2,3-2-1")) == 46);
  CHECK(code_of([] { expected_count(4, parse_pattern_set("32-1")); }) == ErrorCode::NotTabulated);
  CHECK(code_of([] { expected_count(4, classical_length3()); }) == ErrorCode::NotTabulated);
  CHECK(code_of([] { contain_all_six(4); }) == ErrorCode::OutOfStatedRange);
  CHECK(parse_count_method("tree") == CountMethod::Tree);
  CHECK(code_of([] { parse_count_method("guess"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("the all-six class") {
  const auto r = contain_all_six(5, 1);
  CHECK(r.observed == 1);
  CHECK(r.ok());
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].render() == "4 1 3 5 2");
  for (int n = 5; n <= 8; ++n) {
    std::size_t direct = 0;
    for (const auto& w : oracle::rs(n, {}))
      direct += !oracle::avoids(w, {"1-2-3"}) && !oracle::avoids(w, {"1-3-2"}) && !oracle::avoids(w, {"2-1-3"}) &&
                !oracle::avoids(w, {"2-3-1"}) && !oracle::avoids(w, {"3-1-2"}) && !oracle::avoids(w, {"3-2-1"});
    CHECK(contain_all_six(n).observed == direct);
  }
}

TEST_CASE("report rendering is well formed and deterministic") {
  const auto a = full_census(6, 6, 2);
  const auto b = full_census(6, 6, 3);
  CHECK(a.ok());
  CHECK(a.to_text() == b.to_text());
  CHECK(a.to_json() == b.to_json());
  const auto j = nlohmann::json::parse(a.to_json());
  CHECK(j["n_max"] == 6);
  CHECK(j["ok"] == true);
  CHECK(j["rows"].size() == a.rows.size());
  CHECK(j["contain_all_six"][0]["observed"] == 1);
  CHECK(j["rows"][0].contains("expected"));
}

TEST_CASE("verify suites") {
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const auto r = run_suite(name, 6);
    CHECK(r.ok());
    CHECK_FALSE(r.checks.empty());
    for (const auto& c : r.checks) CHECK(c.cases > 0);
  }
  CHECK(run_suite("all", 5).to_text() == run_suite("all", 5).to_text());
  CHECK(nlohmann::json::parse(run_suite("roundtrip", 5).to_json())["ok"] == true);
  CHECK(code_of([] { run_suite("bogus", 5); }) == ErrorCode::InvalidArgument);
}
