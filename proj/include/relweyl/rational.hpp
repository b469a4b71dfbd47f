// Exact rational scalars, vectors and a small dense linear solver.
// Scalars are GMP rationals, so nothing overflows.

#ifndef RELWEYL_RATIONAL_HPP_
#define RELWEYL_RATIONAL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"

namespace relweyl {

using Rational = mpq_class;
using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;
using IVector = std::vector<int>;
using IMatrix = std::vector<IVector>;

inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational floor_of(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rational(q);
}

// Representative in [0, 1).
inline Rational mod_one(const Rational& r) { return Rational(r - floor_of(r)); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Value of an integral rational that is known to fit in an int.
inline int to_int(const Rational& r) {
  if (!is_integer(r) || !r.get_num().fits_sint_p())
    impl::broken("expected a small integer, got " + r.get_str());
  return static_cast<int>(r.get_num().get_si());
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Parses "p", "-p", "+p", "p/q" with decimal digits. Returns nullopt on
// anything else, including a zero denominator.
inline std::optional<Rational> parse_rational(std::string_view s) {
  auto digits = [](std::string_view t) {
    if (t.empty())
      return false;
    for (char c : t)
      if (c < '0' || c > '9')
        return false;
    return true;
  };
  std::string_view num = s, den;
  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (!digits(den))
      return std::nullopt;
  }
  bool neg = false;
  if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
    neg = num[0] == '-';
    num.remove_prefix(1);
  }
  if (!digits(num))
    return std::nullopt;
  mpz_class n{std::string(num)};
  mpz_class d{den.empty() ? std::string("1") : std::string(den)};
  if (d == 0)
    return std::nullopt;
  if (neg)
    n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline Rational dot(const QVector& a, const QVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

inline QVector to_q(const IVector& v) {
  QVector out;
  out.reserve(v.size());
  for (int x : v)
    out.emplace_back(x);
  return out;
}

inline QVector mod_one(QVector v) {
  for (auto& x : v)
    x = mod_one(x);
  return v;
}

inline bool is_zero(const QVector& v) {
  for (const auto& x : v)
    if (x != 0)
      return false;
  return true;
}

// Solves a * x = b for square, nonsingular a. Returns nullopt if singular.
inline std::optional<QVector> solve(QMatrix a, QVector b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0)
      ++piv;
    if (piv == n)
      return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0)
        continue;
      Rational f = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k)
        a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  QVector x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = b[i] / a[i][i];
  return x;
}

inline std::size_t rank_of(QMatrix a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0)
      ++piv;
    if (piv == rows)
      continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t row = rank + 1; row < rows; ++row) {
      if (a[row][col] == 0)
        continue;
      Rational f = a[row][col] / a[rank][col];
      for (std::size_t k = col; k < cols; ++k)
        a[row][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

} // namespace relweyl

#endif // RELWEYL_RATIONAL_HPP_
