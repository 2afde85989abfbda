#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simsun/lattice_path.hpp"
#include "simsun/permutation.hpp"

namespace simsun {

// Krattenthaler's maps from S_n(kind) onto Dyck paths of semilength n.
enum class KrarKind { K132, K231, K312, K213 };

KrarKind parse_krar_kind(std::string_view name);  // "132", "231", ...
std::string_view to_string(KrarKind kind);

// Throws NotAvoiding when p contains the classical pattern named by kind.
LatticePath krar(const Permutation& p, KrarKind kind);
// Throws InvalidPath unless the path is Dyck.
Permutation krar_inverse(const LatticePath& path, KrarKind kind);

// RS_n(132) -> D1_n, the recursive bijection.
LatticePath phi(const Permutation& p);
Permutation phi_inverse(const LatticePath& path);

// RS_n(132) -> D2_{n+2} through krar132 and padding of the outer runs.
LatticePath theta(const Permutation& p);
Permutation theta_inverse(const LatticePath& path);

// (a_1..a_n) with a_1 = 1 and a_{i+1} = a_i + 1 or 0 <= a_{i+1} < a_i.
class AdmissibleSequence {
 public:
  AdmissibleSequence() = default;
  // Throws InvalidSequence when the recurrence fails.
  explicit AdmissibleSequence(std::vector<int> values);

  // Accepts "(1,2,0)", "1,2,0", "1 2 0"; "()" or "e" for the empty sequence.
  static AdmissibleSequence parse(std::string_view text);
  std::string render() const;  // "(1,2,0)"

  int size() const noexcept { return static_cast<int>(values_.size()); }
  int operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  std::span<const int> values() const noexcept { return values_; }

  bool operator==(const AdmissibleSequence&) const = default;
  auto operator<=>(const AdmissibleSequence&) const = default;

 private:
  std::vector<int> values_;
};

std::vector<AdmissibleSequence> enumerate_admissible(int n);

AdmissibleSequence motzkin_to_adm(const LatticePath& m);
LatticePath adm_to_motzkin(const AdmissibleSequence& a);

AdmissibleSequence perm213_to_adm(const Permutation& p);
Permutation adm_to_perm213(const AdmissibleSequence& a);

// DUD-free Dyck path of semilength n+1 -> Motzkin path of length n.
LatticePath callan(const LatticePath& d);
LatticePath callan_inverse(const LatticePath& m);

// krar213, then one more U on the last ascent and D on the last descent,
// then callan.
LatticePath rs213_to_motzkin(const Permutation& p);
Permutation motzkin_to_rs213(const LatticePath& m);

// Adds U before the last peak and D at the end. Throws InvalidPath on the empty path.
LatticePath pad_last_peak(const LatticePath& d);

// RS_n(231) -> Motzkin_n by chunking krar231 into UUD, UD, D.
LatticePath psi(const Permutation& p);
// Same map through the decomposable / n1 sigma recursion.
LatticePath psi_recursive(const Permutation& p);
Permutation psi_inverse(const LatticePath& m);

// Greedy left-to-right chunking UUD -> U, UD -> H, D -> D. Throws
// InvalidPath if some U run is longer than 2.
LatticePath chunk_uud(const LatticePath& d);

// Text-level dispatch used by the CLI and the C API. Names: krar132,
// krar231, krar312, krar213, phi, theta, adm (Motzkin -> A_n), adm-perm213
// (A_n -> RS(213)), callan, rs213-motzkin, psi.
const std::vector<std::string>& bijection_names();
std::string apply_bijection(std::string_view name, bool inverse, std::string_view object);

}  // namespace simsun
