#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "simsun/bijections.hpp"
#include "simsun/error.hpp"
#include "simsun/pattern.hpp"
#include "simsun/simsun.hpp"

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

Permutation P(const char* s) { return Permutation::parse(s); }

// Bare letters, "" for the empty path, as the oracles produce them.
std::string word(const LatticePath& p) { return p.empty() ? "" : p.render(); }

const char* kAdm = "(1,2,0,1,2,3,4,5,4,2,3,4,3,4,1)";
const char* kAdmPerm = "3 15 4 10 13 14 11 12 5 6 9 7 8 1 2";
const char* kAdmPath = "UHUDHUUDHDDHUHD";

std::vector<Permutation> rs(int n, std::vector<std::string> pats) {
  std::vector<Permutation> out;
  for (const auto& w : oracle::rs(n, pats)) out.emplace_back(w);
  return out;
}

}  // namespace

TEST_CASE("krar132 matches the left-to-right minima construction") {
  CHECK(krar(P("2 1"), KrarKind::K132).render() == "UDUD");
  CHECK(krar(P("1 2"), KrarKind::K132).render() == "UUDD");
  CHECK(krar(P("10 8 9 7 11 4 3 5 6 12 1 2"), KrarKind::K132).render() == "UUUDUUDDUDDUUUDUDDDDUUDD");
  for (int n = 0; n <= 7; ++n)
    for (const auto& w : oracle::permutations(n))
      if (!oracle::contains(w, oracle::pattern("1-3-2")))
        REQUIRE(word(krar(Permutation(w), KrarKind::K132)) == oracle::krar132(w));
}

TEST_CASE("krar is a bijection onto Dyck paths for every kind") {
  for (auto kind : {KrarKind::K132, KrarKind::K231, KrarKind::K312, KrarKind::K213}) {
    CAPTURE(to_string(kind));
    CHECK(krar(P("1"), kind).render() == "UD");
    CHECK(krar_inverse(path("UD"), kind) == P("1"));
    const auto pat = VincularPattern::classical(Permutation::parse(std::string(to_string(kind)).insert(1, " ").insert(3, " ")));
    for (int n = 0; n <= 6; ++n) {
      std::set<std::string> image;
      for (const auto& w : oracle::permutations(n)) {
        const Permutation p(w);
        if (contains(p, pat)) continue;
        const auto d = krar(p, kind);
        REQUIRE(is_dyck(d));
        REQUIRE(d.size() == 2 * n);
        REQUIRE(krar_inverse(d, kind) == p);
        image.insert(d.render());
      }
      CHECK(image.size() == oracle::catalan(n));
    }
  }
  CHECK(krar_inverse(path("UDUD"), KrarKind::K132) == P("2 1"));
  CHECK(code_of([] { krar(P("1 3 2"), KrarKind::K132); }) == ErrorCode::NotAvoiding);
  CHECK(code_of([] { krar_inverse(path("DU"), KrarKind::K132); }) == ErrorCode::InvalidPath);
  CHECK(parse_krar_kind("231") == KrarKind::K231);
}

TEST_CASE("phi") {
  CHECK(phi(P("7 5 6 8 2 3 4 1")).render() == "UUDUUDDUDDUUDUDD");
  CHECK(phi_inverse(path("UUDUUDDUDDUUDUDD")) == P("7 5 6 8 2 3 4 1"));
  CHECK(phi(Permutation()).empty());
  CHECK(code_of([] { phi(P("1 3 2")); }) == ErrorCode::NotInDomain);
  CHECK(code_of([] { phi(P("3 2 1")); }) == ErrorCode::NotInDomain);
  CHECK(code_of([] { phi_inverse(path("UUUDDD")); }) == ErrorCode::InvalidPath);
  for (int n = 0; n <= 7; ++n) {
    std::set<std::string> image;
    for (const auto& p : rs(n, {"1-3-2"})) {
      const auto d = phi(p);
      REQUIRE(phi_inverse(d) == p);
      image.insert(word(d));
    }
    CHECK(image == oracle::d1(n));
  }
}

TEST_CASE("phi sends descents to UU factors") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : rs(n, {"1-3-2"}))
      REQUIRE(static_cast<int>(statistics(p).descent_positions.size()) == count_factor(phi(p), "UU"));
}

TEST_CASE("theta") {
  const auto t = theta(P("7 5 6 8 2 3 4 1"));
  CHECK(t.render() == "UUUDDUUDDDUUUDDDUUDD");
  CHECK(t.size() == 20);
  CHECK(theta(P("1")).render() == "UUUDDD");
  CHECK(theta(Permutation()).render() == "UUDD");
  CHECK(code_of([] { theta(P("1 3 2")); }) == ErrorCode::NotInDomain);
  CHECK(code_of([] { theta_inverse(path("UDUD")); }) == ErrorCode::InvalidPath);
  for (int n = 0; n <= 7; ++n) {
    std::set<std::string> image;
    for (const auto& p : rs(n, {"1-3-2"})) {
      const auto d = theta(p);
      REQUIRE(theta_inverse(d) == p);
      image.insert(d.render());
    }
    CHECK(image == oracle::d2(n + 2));
  }
}

TEST_CASE("admissible sequences") {
  CHECK(AdmissibleSequence::parse(kAdm).render() == kAdm);
  CHECK(AdmissibleSequence::parse("1 2 0").render() == "(1,2,0)");
  CHECK(AdmissibleSequence::parse("()").size() == 0);
  CHECK(code_of([] { AdmissibleSequence({2}); }) == ErrorCode::InvalidSequence);
  CHECK(code_of([] { AdmissibleSequence({1, 3}); }) == ErrorCode::InvalidSequence);
  CHECK(code_of([] { AdmissibleSequence({1, 2, 2}); }) == ErrorCode::InvalidSequence);
  for (int n = 0; n <= 9; ++n) CHECK(enumerate_admissible(n).size() == oracle::motzkin(n));
}

TEST_CASE("A_n, Motzkin paths and 213-avoiders") {
  const auto a = AdmissibleSequence::parse(kAdm);
  CHECK(motzkin_to_adm(path(kAdmPath)) == a);
  CHECK(adm_to_motzkin(a).render() == kAdmPath);
  CHECK(adm_to_perm213(a).render() == kAdmPerm);
  CHECK(perm213_to_adm(P(kAdmPerm)) == a);
  CHECK(motzkin_to_adm(path("H")).render() == "(1)");
  CHECK(motzkin_to_adm(LatticePath()).size() == 0);
  CHECK(adm_to_perm213(AdmissibleSequence({1})) == P("1"));
  CHECK(adm_to_perm213(AdmissibleSequence({1, 2, 3})) == P("1 2 3"));
  CHECK(code_of([] { motzkin_to_adm(path("DU")); }) == ErrorCode::InvalidPath);
  CHECK(code_of([] { perm213_to_adm(P("2 1 3")); }) == ErrorCode::NotInDomain);
  for (int n = 0; n <= 8; ++n) {
    std::set<std::string> image;
    for (const auto& m : oracle::motzkin_paths(n)) {
      const auto seq = motzkin_to_adm(path(m));
      REQUIRE(word(adm_to_motzkin(seq)) == m);
      const auto p = adm_to_perm213(seq);
      REQUIRE(perm213_to_adm(p) == seq);
      image.insert(p.render());
    }
    std::set<std::string> expect;
    for (const auto& w : oracle::rs(n, {"2-1-3"})) expect.insert(oracle::join(w));
    CHECK(image == expect);
  }
}

TEST_CASE("callan") {
  CHECK(callan(path("UUDD")).render() == "H");
  CHECK(callan(path("UD")).empty());
  CHECK(code_of([] { callan(path("UDUDUD")); }) == ErrorCode::InvalidPath);
  for (int n = 0; n <= 8; ++n) {
    std::set<std::string> image;
    for (const auto& d : enumerate_paths(n + 1, PathClass::Dyck)) {
      if (count_factor(d, "DUD") > 0) continue;
      const auto m = callan(d);
      REQUIRE(m.size() == n);
      REQUIRE(callan_inverse(m) == d);
      image.insert(word(m));
    }
    CHECK(image == oracle::motzkin_paths(n));
  }
}

TEST_CASE("213-avoiders to Motzkin paths through callan") {
  CHECK(rs213_to_motzkin(P("1")).render() == "H");
  CHECK(rs213_to_motzkin(P("1 13 2 8 11 12 9 10 3 4 5 7 6")).render() == "UHUDHUUDHHDDH");
  CHECK(pad_last_peak(path("UDUD")).render() == "UDUUDD");
  CHECK(code_of([] { pad_last_peak(LatticePath()); }) == ErrorCode::InvalidPath);
  for (int n = 0; n <= 8; ++n) {
    for (const auto& p : rs(n, {"2-1-3"})) {
      // krar213 of a simsun 213-avoider has DUD only at its last peak.
      REQUIRE(is_member(krar(p, KrarKind::K213), PathClass::DudFreeExceptLastPeak));
      const auto m = rs213_to_motzkin(p);
      REQUIRE(is_motzkin(m));
      REQUIRE(m.size() == n);
      REQUIRE(motzkin_to_rs213(m) == p);
    }
  }
}

TEST_CASE("psi") {
  const auto p = P("10 1 5 2 4 3 9 6 7 8");
  CHECK(psi(p).render() == "UUUDDUHHDD");
  CHECK(psi_recursive(p) == psi(p));
  CHECK(psi(P("1")).render() == "H");
  CHECK(chunk_uud(path("UUDUDD")).render() == "UHD");
  CHECK(code_of([] { chunk_uud(path("UUUDDD")); }) == ErrorCode::InvalidPath);
  CHECK(code_of([] { psi(P("2 3 1")); }) == ErrorCode::NotInDomain);
  for (int n = 0; n <= 8; ++n) {
    std::set<std::string> image;
    for (const auto& q : rs(n, {"2-3-1"})) {
      const auto m = psi(q);
      REQUIRE(psi_recursive(q) == m);
      REQUIRE(psi_inverse(m) == q);
      const auto s = statistics(q);
      const auto ps = path_stats(m);
      REQUIRE(s.inversions == ps.area);
      REQUIRE(static_cast<int>(s.descent_positions.size()) == ps.up_steps);
      if (n > 0) REQUIRE(static_cast<int>(s.right_to_left_maxima.size()) == 1 + ps.final_descent_length);
      image.insert(word(m));
    }
    CHECK(image == oracle::motzkin_paths(n));
  }
}

TEST_CASE("text dispatch") {
  CHECK(apply_bijection("phi", false, "7 5 6 8 2 3 4 1") == "UUDUUDDUDDUUDUDD");
  CHECK(apply_bijection("adm", false, kAdmPath) == kAdm);
  CHECK(apply_bijection("adm", true, kAdm) == kAdmPath);
  CHECK(apply_bijection("adm-perm213", false, kAdm) == kAdmPerm);
  CHECK(apply_bijection("adm-perm213", true, kAdmPerm) == kAdm);
  for (const auto& name : bijection_names()) CHECK_FALSE(name.empty());
  CHECK(code_of([] { apply_bijection("nope", false, "1"); }) == ErrorCode::InvalidArgument);
}
