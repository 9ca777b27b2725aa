#pragma once

#include <map>
#include <vector>

#include "groupdet/group.hpp"
#include "groupdet/group_algebra.hpp"
#include "groupdet/report.hpp"

namespace groupdet {

// Left regular representation L_T: Mat(m, R[G']) → Mat(m·k, R[K]) for a
// transversal T = (t_1 … t_k) of K in its ambient group G'. L_T(A) is the
// unique matrix with A·(t_1 I … t_k I) = (t_1 I … t_k I)·L_T(A).
//
// Layout: block (i, j) of size m×m corresponds to (t_i, t_j); inside a block
// rows and columns follow A.
class RegularRepMap {
 public:
  explicit RegularRepMap(Transversal transversal) : transversal_(std::move(transversal)) {}

  const Transversal& transversal() const { return transversal_; }
  const Subgroup& source_context() const { return transversal_.ambient(); }
  const Subgroup& target_context() const { return transversal_.subgroup(); }
  int output_size(int m) const { return m * transversal_.size(); }

  template <class C>
  GroupAlgebraMatrix<C> operator()(const GroupAlgebraMatrix<C>& a) const;

 private:
  Transversal transversal_;
};

template <class C>
GroupAlgebraMatrix<C> RegularRepMap::operator()(const GroupAlgebraMatrix<C>& a) const {
  if (a.rows() != a.cols()) throw NotSquare("regular representation needs a square matrix, got " + a.shape());
  if (!(a.context() == source_context())) {
    throw ContextMismatch("matrix lives over " + a.context().describe() + ", transversal over " +
                          source_context().describe());
  }
  const auto& t = transversal_;
  const auto& g = *t.group();
  const int m = a.rows(), k = t.size();
  GroupAlgebraMatrix<C> out(m * k, m * k, target_context(), a.universe());
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      for (const auto& [x, c] : a.at(p, q).coeffs())
        for (int j = 0; j < k; ++j) {
          const auto pos = t.decompose(g.mul(x, t.rep(j)));
          out.at(pos.block * m + p, j * m + q).add_term(pos.h, c);
        }
  const int expected = output_size(m);
  if (out.rows() != expected) throw ShapeMismatch("regular representation output size mismatch");
  return out;
}

template <class C>
GroupAlgebraMatrix<C> apply_regrep(const Transversal& t, const GroupAlgebraMatrix<C>& a) {
  return RegularRepMap(t)(a);
}

// A = Σ_h C_h·h with scalar (polynomial) matrices C_h, one per h in the
// context.
template <class C>
struct SubgroupExpansion {
  Subgroup context;
  std::map<int, ScalarMatrix<C>> coefficients;

  GroupAlgebraMatrix<C> reassemble() const {
    const auto& any = coefficients.begin()->second;
    GroupAlgebraMatrix<C> out(any.rows(), any.cols(), context, any.universe());
    for (const auto& [h, ch] : coefficients)
      for (int i = 0; i < ch.rows(); ++i)
        for (int j = 0; j < ch.cols(); ++j) out.at(i, j).add_term(h, ch.at(i, j));
    return out;
  }
};

template <class C>
SubgroupExpansion<C> expand_by_subgroup(const GroupAlgebraMatrix<C>& a) {
  SubgroupExpansion<C> out{a.context(), {}};
  for (int h : a.context().elements()) out.coefficients.emplace(h, ScalarMatrix<C>(a.rows(), a.cols(), a.universe()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (const auto& [h, c] : a.at(i, j).coeffs()) out.coefficients.at(h).at(i, j) += c;
  return out;
}

// A = Σ_t t·A_t with A_t over the subgroup of T; element i of the result is
// A_{t_i}.
template <class C>
std::vector<GroupAlgebraMatrix<C>> expand_by_transversal(const GroupAlgebraMatrix<C>& a,
                                                         const Transversal& t) {
  if (!(a.context() == t.ambient())) {
    throw ContextMismatch("matrix context " + a.context().describe() +
                          " is not the ambient group of the transversal");
  }
  std::vector<GroupAlgebraMatrix<C>> parts(
      t.size(), GroupAlgebraMatrix<C>(a.rows(), a.cols(), t.subgroup(), a.universe()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (const auto& [x, c] : a.at(i, j).coeffs()) {
        const auto pos = t.decompose(x);
        parts[pos.block].at(i, j).add_term(pos.h, c);
      }
  return parts;
}

// diag(g_1·I_m, …, g_k·I_m) over `context`.
template <class C>
GroupAlgebraMatrix<C> block_diagonal(const std::vector<int>& elements, int m,
                                     const Subgroup& context, const GroupPtr& universe) {
  const int k = static_cast<int>(elements.size());
  GroupAlgebraMatrix<C> out(m * k, m * k, context, universe);
  const auto one = Polynomial<C>::constant(universe, CoeffTraits<C>::one());
  for (int b = 0; b < k; ++b)
    for (int i = 0; i < m; ++i) out.at(b * m + i, b * m + i).add_term(elements[b], one);
  return out;
}

// Σ_t t·A_t over the ambient group of T.
template <class C>
GroupAlgebraMatrix<C> reassemble_by_transversal(const std::vector<GroupAlgebraMatrix<C>>& parts,
                                                const Transversal& t) {
  const auto& first = parts.at(0);
  GroupAlgebraMatrix<C> out(first.rows(), first.cols(), t.ambient(), first.universe());
  for (int b = 0; b < t.size(); ++b) {
    const auto shift = block_diagonal<C>({t.rep(b)}, first.rows(), t.ambient(), first.universe());
    out = out + shift * parts[b].with_context(t.ambient());
  }
  return out;
}

// The row (t_1 I_m … t_k I_m) over the ambient group of T.
template <class C>
GroupAlgebraMatrix<C> transversal_row(const Transversal& t, int m, const GroupPtr& universe) {
  GroupAlgebraMatrix<C> row(m, m * t.size(), t.ambient(), universe);
  const auto one = Polynomial<C>::constant(universe, CoeffTraits<C>::one());
  for (int b = 0; b < t.size(); ++b)
    for (int i = 0; i < m; ++i) row.at(i, b * m + i).add_term(t.rep(b), one);
  return row;
}

// A·Row(T) == Row(T)·L_T(A), computed over the ambient group.
template <class C>
bool defining_relation_holds(const Transversal& t, const GroupAlgebraMatrix<C>& a,
                             const GroupAlgebraMatrix<C>& image) {
  const auto row = transversal_row<C>(t, a.rows(), a.universe());
  return a * row == row * image.with_context(t.ambient());
}

// V with L_V = L_U ∘ L_T for T a transversal of H in G and U a transversal
// of K in H. V[j·|T| + i] = t_i·u_j: the T index varies fastest.
Transversal tower_transversal(const Transversal& t, const Transversal& u);

// Permutation matrix of the left regular representation of G/K at the coset
// t_i·K, with cosets numbered by T: entry (a, b) is 1 iff t_i·t_b·K = t_a·K.
RationalMatrix quotient_regular_matrix(const Transversal& t, int i, const GroupPtr& universe);

// L_T(A) == P⁻¹(Σ_t L_{G/H}(tH) ⊗ t·A_t)P, exact. Throws NotNormal.
VerificationReport normal_form_check(const Transversal& t, const RationalGAMatrix& a);

// L_V(A) == L_U(L_T(A)) with V = tower_transversal(T, U), exact.
VerificationReport tower_check(const Transversal& t, const Transversal& u, const RationalGAMatrix& a);

// Random m×m matrix over the ambient group of `context` whose entries have
// `terms` terms c·x_g·h with small nonzero integer c.
RationalGAMatrix random_ga_matrix(const Subgroup& context, const GroupPtr& universe, int m,
                                  int terms, std::uint64_t seed);

}  // namespace groupdet
