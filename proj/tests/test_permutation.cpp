#include <doctest.h>

#include "oracles.hpp"
#include "simsun/error.hpp"
#include "simsun/pattern.hpp"
#include "simsun/permutation.hpp"

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

std::vector<int> vec(std::span<const int> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("parse and render") {
  CHECK(Permutation::parse("4 1 3 2 5").render() == "4 1 3 2 5");
  CHECK(Permutation::parse("e").empty());
  CHECK(Permutation().render() == "e");
  CHECK(code_of([] { Permutation::parse("1 1"); }) == ErrorCode::InvalidWord);
  CHECK(code_of([] { Permutation::parse("1 x"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { Permutation({2, 3}); }) == ErrorCode::InvalidWord);
}

TEST_CASE("reduce") {
  CHECK(reduce(std::vector<int>{7, 5, 6}).render() == "3 1 2");
  CHECK(reduce(std::vector<int>{}).empty());
  const std::vector<int> big{10, 8, 9, 7, 11, 4, 3, 5, 6, 12, 1, 2};
  CHECK(vec(reduce(big).entries()) == big);
  CHECK(code_of([] { reduce(std::vector<int>{3, 3}); }) == ErrorCode::InvalidWord);
}

TEST_CASE("delete_smallest") {
  CHECK(delete_smallest(Permutation::parse("3 1 2")).render() == "2 1");
  CHECK(delete_smallest(Permutation::parse("1")).empty());
  CHECK(delete_smallest(Permutation::parse("2 3 4 1")).render() == "1 2 3");
  CHECK(code_of([] { delete_smallest(Permutation()); }) == ErrorCode::EmptyPermutation);
}

TEST_CASE("statistics") {
  const auto s = statistics(Permutation::parse("4 1 3 2 5"));
  CHECK(s.descent_positions == std::vector<int>{1, 3});
  CHECK(s.inversions == 4);
  CHECK(s.left_to_right_minima == std::vector<int>{4, 1});
  CHECK(s.right_to_left_maxima == std::vector<int>{5});
  const auto id = statistics(Permutation::identity(5));
  CHECK(id.descent_positions.empty());
  CHECK(id.inversions == 0);
  CHECK(statistics(Permutation::parse("7 5 6 8 2 3 4 1")).left_to_right_minima == std::vector<int>{7, 5, 2, 1});
}

TEST_CASE("decompose_at_max") {
  auto d = decompose_at_max(Permutation::parse("7 5 6 8 2 3 4 1"));
  CHECK(d.sigma == Word{7, 5, 6});
  CHECK(d.tau == Word{2, 3, 4, 1});
  d = decompose_at_max(Permutation::parse("1"));
  CHECK(d.sigma.empty());
  CHECK(d.tau.empty());
  d = decompose_at_max(Permutation::parse("3 1 2"));
  CHECK(d.sigma.empty());
  CHECK(d.tau == Word{1, 2});
  CHECK(code_of([] { decompose_at_max(Permutation()); }) == ErrorCode::EmptyPermutation);
}

TEST_CASE("split_min_components and direct_sum") {
  CHECK(split_min_components(Permutation::parse("4 1 3 2 8 5 6 7")) == std::vector<Word>{{4, 1, 3, 2}, {8, 5, 6, 7}});
  CHECK(split_min_components(Permutation::parse("1 2 3")) == std::vector<Word>{{1}, {2}, {3}});
  CHECK(split_min_components(Permutation::parse("2 1")) == std::vector<Word>{{2, 1}});
  CHECK(direct_sum(Permutation::parse("2 1"), Permutation::parse("1 2")).render() == "2 1 3 4");
  for (const auto& w : oracle::permutations(6)) {
    const Permutation p(w);
    Permutation rebuilt;
    for (const auto& part : split_min_components(p)) rebuilt = direct_sum(rebuilt, reduce(part));
    CHECK(rebuilt == p);
  }
}

TEST_CASE("symmetries and insertion") {
  const auto p = Permutation::parse("2 4 1 3");
  CHECK(p.reverse().render() == "3 1 4 2");
  CHECK(p.complement().render() == "3 1 4 2");
  CHECK(p.inverse().render() == "3 1 4 2");
  CHECK(p.insert_max(0).render() == "5 2 4 1 3");
  CHECK(p.insert_max(4).render() == "2 4 1 3 5");
  CHECK(p.insert_max(2).remove_max() == p);
}

TEST_CASE("pattern syntax") {
  auto v = VincularPattern::parse("32-1");
  CHECK(v.pattern().render() == "3 2 1");
  CHECK(v.adjacent_pairs() == std::vector<int>{1});
  CHECK(VincularPattern::parse("3-2-1").adjacent_pairs().empty());
  CHECK(VincularPattern::parse("321").adjacent_pairs() == std::vector<int>{1, 2});
  CHECK(VincularPattern::parse("3-21").render() == "3-21");
  CHECK(parse_pattern_set("none").empty());
  CHECK(parse_pattern_set("").empty());
  CHECK(render_pattern_set(parse_pattern_set("1-3-2,2-1-3")) == "1-3-2,2-1-3");
  CHECK(code_of([] { VincularPattern::parse("1-1"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { VincularPattern::parse("1--2"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { VincularPattern::parse("13"); }) == ErrorCode::ParseError);
  CHECK(classical_length3().size() == 6);
}

TEST_CASE("containment examples") {
  CHECK(contains(Permutation::parse("4 1 3 2 5"), VincularPattern::parse("1-3-2")));
  CHECK(contains(Permutation::parse("3 2 4 1 5"), VincularPattern::parse("3-2-1")));
  CHECK_FALSE(contains(Permutation::identity(5), VincularPattern::parse("2-1")));
  CHECK_FALSE(avoids_all(Permutation::parse("4 1 3 5 2"), classical_length3()));
  CHECK(avoids_all(Permutation(), classical_length3()));
  CHECK_FALSE(avoids_all(Permutation::parse("3 1 2"), parse_pattern_set("3-1-2")));
}

TEST_CASE("containment agrees with brute force over all index tuples") {
  const std::vector<std::string> pats{"1-2-3", "1-3-2", "2-1-3", "2-3-1", "3-1-2", "3-2-1", "32-1",
                                      "3-21",  "321",   "1-32",  "21",    "1-2",   "2-4-1-3", "31-4-2"};
  for (int n = 0; n <= 7; ++n) {
    for (const auto& w : oracle::permutations(n)) {
      const Permutation p(w);
      for (const auto& t : pats) {
        const bool expect = oracle::contains(w, oracle::pattern(t));
        REQUIRE(contains(p, VincularPattern::parse(t)) == expect);
      }
    }
  }
}

TEST_CASE("contains_ending_at matches prefix containment") {
  const auto pat = VincularPattern::parse("2-31");
  for (const auto& w : oracle::permutations(6)) {
    for (int last = 0; last < 6; ++last) {
      const oracle::Word prefix(w.begin(), w.begin() + last + 1);
      const oracle::Word shorter(w.begin(), w.begin() + last);
      const auto pa = oracle::pattern("2-31");
      const bool expect = oracle::contains(prefix, pa) && !oracle::contains(shorter, pa);
      if (expect) CHECK(contains_ending_at(w, pat, last));
      if (!oracle::contains(prefix, pa)) CHECK_FALSE(contains_ending_at(w, pat, last));
    }
  }
}
