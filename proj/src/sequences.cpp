#include "simsun/sequences.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <string>

#include "simsun/error.hpp"

namespace simsun {

SequenceId parse_sequence_id(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "catalan") return SequenceId::Catalan;
  if (lower == "motzkin") return SequenceId::Motzkin;
  if (lower == "secondary" || lower == "secondarystructure") return SequenceId::SecondaryStructure;
  if (lower == "fibonacci") return SequenceId::Fibonacci;
  if (lower == "euler") return SequenceId::Euler;
  throw Error(ErrorCode::InvalidArgument, "unknown sequence '" + std::string(name) + "'");
}

std::string_view to_string(SequenceId id) {
  switch (id) {
    case SequenceId::Catalan: return "catalan";
    case SequenceId::Motzkin: return "motzkin";
    case SequenceId::SecondaryStructure: return "secondary";
    case SequenceId::Fibonacci: return "fibonacci";
    case SequenceId::Euler: return "euler";
  }
  return "?";
}

std::vector<BigInt> coeffs_from_quadratic(const QuadraticSchema& s, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidIndex, "n must be >= 0");
  auto at = [](const std::vector<BigInt>& poly, int i) {
    return i < static_cast<int>(poly.size()) ? poly[static_cast<std::size_t>(i)] : BigInt(0);
  };
  if (at(s.q, 0) != 0 || at(s.r, 0) != 0) {
    throw Error(ErrorCode::IllPosed, "Q(0) and R(0) must vanish");
  }
  std::vector<BigInt> a;
  std::vector<BigInt> sq;  // coefficients of A^2, filled lazily
  for (int k = 0; k <= n; ++k) {
    BigInt c = at(s.p, k);
    for (int i = 1; i <= k; ++i) {
      const BigInt qi = at(s.q, i);
      if (qi != 0) c += qi * a[static_cast<std::size_t>(k - i)];
      const BigInt ri = at(s.r, i);
      if (ri != 0) c += ri * sq[static_cast<std::size_t>(k - i)];
    }
    a.push_back(c);
    BigInt square = 0;
    for (int i = 0; i <= k; ++i) square += a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(k - i)];
    sq.push_back(square);
  }
  return a;
}

namespace {

std::vector<BigInt> euler_numbers(int n) {
  // Seidel's boustrophedon: row m alternates direction; E_m is its last entry.
  std::vector<BigInt> out{1};
  std::vector<BigInt> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<BigInt> next(static_cast<std::size_t>(m) + 1);
    next[0] = 0;
    for (int k = 1; k <= m; ++k) {
      next[static_cast<std::size_t>(k)] = next[static_cast<std::size_t>(k) - 1] + row[static_cast<std::size_t>(m - k)];
    }
    out.push_back(next.back());
    row = std::move(next);
  }
  return out;
}

std::vector<BigInt> compute(SequenceId id, int n) {
  switch (id) {
    case SequenceId::Catalan: {
      std::vector<BigInt> c{1};
      for (int m = 1; m <= n; ++m) {
        BigInt sum = 0;
        for (int i = 0; i < m; ++i) sum += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
        c.push_back(sum);
      }
      return c;
    }
    case SequenceId::Motzkin: return coeffs_from_quadratic({{1}, {0, 1}, {0, 0, 1}}, n);
    case SequenceId::SecondaryStructure: return coeffs_from_quadratic({{1}, {0, 1, 1}, {0, 0, 0, 1}}, n);
    case SequenceId::Fibonacci: {
      std::vector<BigInt> f{0, 1};
      for (int m = 2; m <= n; ++m) f.push_back(f[static_cast<std::size_t>(m) - 1] + f[static_cast<std::size_t>(m) - 2]);
      f.resize(static_cast<std::size_t>(n) + 1);
      return f;
    }
    case SequenceId::Euler: return euler_numbers(n);
  }
  return {};
}

struct Cache {
  std::mutex lock;
  std::vector<BigInt> values[5];
};

}  // namespace

BigInt seq(SequenceId id, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidIndex, "index " + std::to_string(n) + " is negative");
  static Cache cache;
  std::lock_guard<std::mutex> guard(cache.lock);
  auto& values = cache.values[static_cast<int>(id)];
  if (static_cast<int>(values.size()) <= n) values = compute(id, std::max(n, 2 * static_cast<int>(values.size())));
  return values[static_cast<std::size_t>(n)];
}

std::vector<BigInt> seq_range(SequenceId id, int n0, int n1) {
  if (n0 < 0) throw Error(ErrorCode::InvalidIndex, "index " + std::to_string(n0) + " is negative");
  std::vector<BigInt> out;
  for (int n = n0; n <= n1; ++n) out.push_back(seq(id, n));
  return out;
}

}  // namespace simsun
