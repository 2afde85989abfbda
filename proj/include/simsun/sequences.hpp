#pragma once

#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace simsun {

using BigInt = boost::multiprecision::cpp_int;

enum class SequenceId { Catalan, Motzkin, SecondaryStructure, Fibonacci, Euler };

// "catalan", "motzkin", "secondary", "fibonacci", "euler" (case-insensitive).
SequenceId parse_sequence_id(std::string_view name);
std::string_view to_string(SequenceId id);

// C_n, M_n, S_n (coefficients of R = 1 + zR + z^2 R + z^3 R^2), F_n with
// F_1 = F_2 = 1, and E_n, the coefficients of n! (sec z + tan z).
// Throws InvalidIndex for n < 0.
BigInt seq(SequenceId id, int n);
std::vector<BigInt> seq_range(SequenceId id, int n0, int n1);

// A = P(z) + Q(z) A + R(z) A^2, polynomials given by coefficient lists.
struct QuadraticSchema {
  std::vector<BigInt> p;
  std::vector<BigInt> q;
  std::vector<BigInt> r;
};

// First n + 1 coefficients of the unique power-series solution. Throws
// IllPosed unless Q(0) = R(0) = 0.
std::vector<BigInt> coeffs_from_quadratic(const QuadraticSchema& schema, int n);

}  // namespace simsun
