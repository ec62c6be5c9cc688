#pragma once

#include <vector>

#include "singlat/graph.hpp"
#include "singlat/linalg.hpp"
#include "singlat/numeric.hpp"

namespace singlat {

// Symmetric bilinear intersection pairing A . B.
inline Rat intersect(const ResolutionGraph& g, const RationalCycle& a,
                     const RationalCycle& b) {
  check_cycle(g, a.size());
  check_cycle(g, b.size());
  Rat acc = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    acc += a[i] * b[i] * Rat(g.vertex(static_cast<int>(i)).self_int);
  for (const auto& e : g.edges())
    acc += Rat(e.mult) * (a[e.a] * b[e.b] + a[e.b] * b[e.a]);
  return acc;
}

inline Int intersect(const ResolutionGraph& g, const Cycle& a, const Cycle& b) {
  check_cycle(g, a.size());
  check_cycle(g, b.size());
  Int acc = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    acc += a[i] * b[i] * g.vertex(static_cast<int>(i)).self_int;
  for (const auto& e : g.edges())
    acc += e.mult * (a[e.a] * b[e.b] + a[e.b] * b[e.a]);
  return acc;
}

// A . E_i for a single curve, cheaper than building a unit cycle.
inline Int intersect_vertex(const ResolutionGraph& g, const Cycle& a, int i) {
  check_cycle(g, a.size());
  Int acc = a[i] * g.vertex(i).self_int;
  for (const auto& [j, m] : g.adjacency()[i]) acc += a[j] * m;
  return acc;
}

// K . E_i, read off the adjunction formula E_i.(E_i + K) = 2 p_a(E_i) - 2.
inline Int canonical_degree(const ResolutionGraph& g, int i) {
  const auto& v = g.vertex(i);
  return 2 * v.genus - 2 - v.self_int;
}

// A . K. Agrees with -intersect(A, Z_K) whenever the canonical cycle exists,
// and extends to semidefinite lattices where it does not.
inline Int canonical_pairing(const ResolutionGraph& g, const Cycle& a) {
  check_cycle(g, a.size());
  Int acc = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    acc += a[i] * canonical_degree(g, static_cast<int>(i));
  return acc;
}

// p_a(A) = 1 + (A.A + A.K)/2. Integral for every integral cycle; a parity
// failure signals corrupted graph data.
inline Int genus_of_cycle(const ResolutionGraph& g, const Cycle& a) {
  Int twice = intersect(g, a, a) + canonical_pairing(g, a);
  if (twice % 2 != 0) throw error("adjunction inconsistency: p_a not integral");
  return 1 + twice / 2;
}

inline bool is_negative_definite(const ResolutionGraph& g) {
  return is_negative_definite_matrix(g.intersection_matrix());
}

// Negative semidefinite test in the only form the library needs: a claimed
// radical vector r with M r = 0 whose support is nonempty, such that the
// lattice is negative definite transverse to r. Checks M r = 0 and the
// definiteness of the principal submatrix omitting one support vertex.
inline bool is_negative_semidefinite_with_radical(const ResolutionGraph& g,
                                                  const RationalCycle& radical) {
  check_cycle(g, radical.size());
  int support = -1;
  for (std::size_t i = 0; i < radical.size(); ++i)
    if (radical[i] != 0) {
      support = static_cast<int>(i);
      break;
    }
  if (support < 0) throw error("radical must be a nonzero cycle");
  const auto m = g.intersection_matrix();
  for (std::size_t i = 0; i < g.size(); ++i) {
    Rat row = 0;
    for (std::size_t j = 0; j < g.size(); ++j) row += Rat(m[i][j]) * radical[j];
    if (row != 0) return false;
  }
  IntMatrix sub;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (static_cast<int>(i) == support) continue;
    std::vector<Int> row;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (static_cast<int>(j) != support) row.push_back(m[i][j]);
    sub.push_back(std::move(row));
  }
  return is_negative_definite_matrix(sub);
}

inline Int det_intersection(const ResolutionGraph& g) {
  return determinant(g.intersection_matrix());
}

// The unique rational cycle with E_i . Z_K = E_i^2 + 2 - 2 p_a(E_i) for all
// i; numerically the anticanonical class.
inline RationalCycle canonical_cycle(const ResolutionGraph& g) {
  if (!g.connected())
    throw error("canonical cycle requires a connected graph");
  if (!is_negative_definite(g))
    throw error("canonical cycle requires a negative definite graph");
  std::vector<Int> rhs(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    rhs[i] = -canonical_degree(g, static_cast<int>(i));
  return solve_linear(g.intersection_matrix(), rhs);
}

inline bool is_numerically_gorenstein(const ResolutionGraph& g) {
  for (const auto& z : canonical_cycle(g))
    if (!is_integer(z)) return false;
  return true;
}

}  // namespace singlat
