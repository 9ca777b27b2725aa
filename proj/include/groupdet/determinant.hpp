#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "groupdet/group_algebra.hpp"

namespace groupdet {

inline constexpr int kSymbolicDeterminantCap = 12;

// Division-free determinant by Laplace expansion along successive rows,
// memoized on the set of columns already used: minor[S] is the determinant
// of the first |S| rows restricted to columns S. Costs O(2^n·n) ring
// multiplications. T needs +=, -=, * and must be commutative.
template <class T, class EntryFn>
T minor_expansion_determinant(int n, EntryFn&& entry, const T& zero, const T& one) {
  const std::size_t full = std::size_t{1} << n;
  std::vector<T> prev(full, zero), cur(full, zero);
  std::vector<char> prev_set(full, 0), cur_set(full, 0);
  prev[0] = one;
  prev_set[0] = 1;
  for (int row = 0; row < n; ++row) {
    std::fill(cur_set.begin(), cur_set.end(), 0);
    for (std::size_t mask = 1; mask < full; ++mask) {
      if (std::popcount(mask) != row + 1) continue;
      T acc = zero;
      for (int j = 0; j < n; ++j) {
        const std::size_t bit = std::size_t{1} << j;
        if (!(mask & bit)) continue;
        const auto& a = entry(row, j);
        if (a.is_zero()) continue;
        const std::size_t rest = mask & ~bit;
        if (!prev_set[rest]) continue;
        const int above = std::popcount(mask >> (j + 1));
        if (above % 2 == 0) {
          acc += a * prev[rest];
        } else {
          acc -= a * prev[rest];
        }
      }
      if (!acc.is_zero()) {
        cur[mask] = std::move(acc);
        cur_set[mask] = 1;
      }
    }
    std::swap(prev, cur);
    std::swap(prev_set, cur_set);
  }
  return prev_set[full - 1] ? prev[full - 1] : zero;
}

// Exact symbolic determinant; square matrices up to kSymbolicDeterminantCap.
template <class C>
Polynomial<C> det_poly(const ScalarMatrix<C>& m, int cap = kSymbolicDeterminantCap) {
  if (m.rows() != m.cols()) throw NotSquare("determinant of non-square " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  if (m.rows() > cap) {
    throw DimensionTooLarge("symbolic determinant capped at dimension " + std::to_string(cap) +
                            ", got " + std::to_string(m.rows()));
  }
  const auto& u = m.universe();
  return minor_expansion_determinant<Polynomial<C>>(
      m.rows(), [&](int i, int j) -> const Polynomial<C>& { return m.at(i, j); }, Polynomial<C>(u),
      Polynomial<C>::constant(u, CoeffTraits<C>::one()));
}

// Determinant over a commutative group algebra (abelian context). Throws
// NotAbelian otherwise.
template <class C>
GroupAlgebraElement<C> det_group_algebra(const GroupAlgebraMatrix<C>& m,
                                         int cap = kSymbolicDeterminantCap) {
  if (m.rows() != m.cols()) throw NotSquare("determinant of non-square matrix");
  if (m.rows() > cap) throw DimensionTooLarge("symbolic determinant capped at dimension " + std::to_string(cap));
  const auto& ctx = m.context();
  const auto& g = *ctx.parent();
  for (int a : ctx.elements())
    for (int b : ctx.elements())
      if (g.mul(a, b) != g.mul(b, a)) throw NotAbelian("group algebra context " + ctx.describe() + " is not commutative");
  using E = GroupAlgebraElement<C>;
  return minor_expansion_determinant<E>(
      m.rows(), [&](int i, int j) -> const E& { return m.at(i, j); }, E(ctx, m.universe()),
      E::one(ctx, m.universe()));
}

// Partial-pivoted LU determinant. Singular input gives 0; 0×0 gives 1.
Complex det_numeric(const ComplexMatrix& m);

}  // namespace groupdet
