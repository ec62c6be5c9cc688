#pragma once

#include <utility>
#include <vector>

#include "singlat/numeric.hpp"

namespace singlat {

using IntMatrix = std::vector<std::vector<Int>>;

class singular_matrix : public error {
 public:
  singular_matrix() : error("singular matrix") {}
};

// Fraction-free (Bareiss) elimination without pivoting. After step k the
// pivot a[k][k] equals the determinant of the leading (k+1)x(k+1) minor.
// Returns the sequence of leading principal minors d_1..d_n; stops early at
// a zero pivot, in which case fewer than n minors come back and the last
// reported one is the zero that stopped the elimination.
inline std::vector<Int> leading_principal_minors(IntMatrix a) {
  const std::size_t n = a.size();
  std::vector<Int> minors;
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(a[k][k]);
    if (a[k][k] == 0) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return minors;
}

// Negative definite iff the leading principal minors alternate in sign
// starting negative: (-1)^k d_k > 0 (Sylvester). A zero pivot already
// violates that, so early elimination stops decide "false".
inline bool is_negative_definite_matrix(const IntMatrix& m) {
  const std::size_t n = m.size();
  auto minors = leading_principal_minors(m);
  if (minors.size() < n) return false;
  for (std::size_t k = 0; k < n; ++k) {
    if (minors[k] == 0) return false;
    bool want_negative = (k % 2 == 0);
    if (want_negative != (minors[k] < 0)) return false;
  }
  return true;
}

// Bareiss elimination with row pivoting on the augmented matrix [a | b...].
// `width` columns in total, the first n of which form the square system.
// Returns the sign of the row permutation, or 0 if the square part is
// singular (elimination aborts in that case).
inline int fraction_free_eliminate(IntMatrix& a, std::size_t n) {
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    const std::size_t width = a[k].size();
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j)
        a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign;
}

inline Int determinant(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = fraction_free_eliminate(a, n);
  if (sign == 0) return 0;
  return sign * a[n - 1][n - 1];
}

// Exact solution of a x = rhs for nonsingular a.
inline std::vector<Rat> solve_linear(const IntMatrix& a_in,
                                     const std::vector<Int>& rhs) {
  const std::size_t n = a_in.size();
  IntMatrix a = a_in;
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(rhs[i]);
  if (fraction_free_eliminate(a, n) == 0) throw singular_matrix();
  std::vector<Rat> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rat acc = a[ii][n];
    for (std::size_t j = ii + 1; j < n; ++j) acc -= Rat(a[ii][j]) * x[j];
    x[ii] = acc / Rat(a[ii][ii]);
  }
  return x;
}

// Largest |entry| of a^{-1}, as an exact rational.
inline Rat inverse_max_abs(const IntMatrix& a) {
  const std::size_t n = a.size();
  Rat best = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Int> e(n, 0);
    e[j] = 1;
    auto col = solve_linear(a, e);
    for (const auto& v : col) {
      Rat av = v < 0 ? Rat(-v) : v;
      if (av > best) best = av;
    }
  }
  return best;
}

}  // namespace singlat
