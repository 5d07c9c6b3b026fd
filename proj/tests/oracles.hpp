#pragma once

// Independent reference computations in plain 64-bit integers. Nothing here
// shares code with the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using Row = std::vector<std::int64_t>;
using Matrix = std::vector<Row>;

// Cofactor expansion.
inline std::int64_t det(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      Row row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(row);
    }
    acc += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
  }
  return acc;
}

// All theta in ((1/N) Z / Z)^n with W theta integral, N = |det W|, as
// numerator vectors over N (lexicographic).
inline std::vector<Row> torsion_numerators(const Matrix& w, std::int64_t n_den) {
  const std::size_t n = w.size();
  std::vector<Row> out;
  Row k(n, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < n; ++j) s += w[i][j] * k[j];
      ok = s % n_den == 0;
    }
    if (ok) out.push_back(k);
    std::size_t pos = n;
    while (pos > 0 && ++k[pos - 1] == n_den) k[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

// floor(a / b) for b > 0.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

// Integer polynomial, coefficient k of u^k.
using Poly = std::vector<std::int64_t>;

inline Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(r);
}

inline Poly add(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return trim(a);
}

}  // namespace oracle
