#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "groupdet/determinant.hpp"
#include "groupdet/group.hpp"
#include "groupdet/group_algebra.hpp"
#include "groupdet/regrep.hpp"
#include "groupdet/report.hpp"
#include "groupdet/reptheory.hpp"

namespace groupdet {

inline constexpr int kSymbolicGroupCap = kSymbolicDeterminantCap;

// The |G|×|G| matrix with entry (g, h) = x_{g·h⁻¹}, element-index order.
RationalMatrix group_matrix(const GroupPtr& group);

// Θ(G), either expanded (|G| ≤ 12) or kept as an evaluation-only handle.
class GroupDeterminant {
 public:
  static GroupDeterminant symbolic(const GroupPtr& group);
  static GroupDeterminant deferred(const GroupPtr& group);

  const GroupPtr& group() const { return group_; }
  bool materialized() const { return poly_.has_value(); }
  const RationalPolynomial& polynomial() const { return poly_.value(); }
  Complex evaluate(std::span<const Complex> point) const;

 private:
  GroupPtr group_;
  std::optional<RationalPolynomial> poly_;
};

// Exact Θ(G). Throws GroupTooLargeForSymbolic above order 12.
RationalPolynomial theta_symbolic(const GroupPtr& group);

// det of the group matrix evaluated at `point` (one value per element).
Complex theta_at(const GroupPtr& group, std::span<const Complex> point);

struct EvaluationPoint {
  std::vector<Complex> values;
  std::uint64_t seed = 0;
  int index = 0;
};

// `count` points with coordinates uniform on [−1, 1]² drawn in order from
// std::mt19937_64(seed).
std::vector<EvaluationPoint> random_points(int nvars, int count, std::uint64_t seed);

struct CheckOptions {
  CheckMode mode = CheckMode::kPit;
  int n_points = 20;
  double tolerance = NumericDefaults::kPitTolerance;
  std::uint64_t seed = 0;
  double rounding_window = NumericDefaults::kRoundingWindow;
};

// Π_ψ det(Σ_i ψ(i) ⊗ coeffs[i])^{deg ψ}; coeffs is indexed like the
// elements of the irreps' group.
Complex block_determinant_product(const IrrepSet& irreps, const std::vector<ComplexMatrix>& coeffs);

// Symbolic counterpart with complex polynomial coefficients.
ComplexPolynomial block_determinant_product(const IrrepSet& irreps,
                                            const std::vector<ComplexPolyMatrix>& coeffs);

// Rounds each coefficient to the nearest Gaussian integer. Throws
// RoundingAmbiguous when one is farther than `window` away; returns nullopt
// when a rounded coefficient has a nonzero imaginary part.
std::optional<RationalPolynomial> round_to_integers(const ComplexPolynomial& p, double window);

// Θ(G) = Π_{φ ∈ Ĝ} det(Σ_g φ(g)·x_g)^{deg φ}.
VerificationReport classical_factorization_check(const GroupPtr& group, const IrrepSet& irreps,
                                                 const CheckOptions& options = {});

// Θ(G) = Π_{ψ ∈ Ĥ} det(Σ_h ψ(h) ⊗ C_h^F)^{deg ψ} where L_T(α) = Σ_h C_h·h.
// `irreps` describes H as returned by Subgroup::as_group().
VerificationReport generalized_factorization_check(const Subgroup& subgroup, const IrrepSet& irreps,
                                                   const CheckOptions& options = {});
// Same, computing Ĥ with `irrep_seed`.
VerificationReport generalized_factorization_check(const Subgroup& subgroup, std::uint64_t irrep_seed,
                                                   const CheckOptions& options = {});

// det(L_{e}(α)) equals Θ(G), exact.
VerificationReport regular_determinant_check(const GroupPtr& group);

// det(F_m(A)) equals F_1(det A) for A over a commutative group algebra,
// exact. Throws NotAbelian.
VerificationReport flatten_determinant_check(const RationalGAMatrix& a);

// det F(L_T(A)) = Π_{φ ∈ (G/H)^} det(Σ_t φ(tH) ⊗ A_t^F)^{deg φ} for H normal.
// `quotient_irreps` describes quotient_group(T).
VerificationReport quotient_factorization_check(const Transversal& t, const RationalGAMatrix& a,
                                                const IrrepSet& quotient_irreps,
                                                const CheckOptions& options = {});

// The two products over (G/K)^ and (H/K)^ for K ≤ H ≤ G with K normal in
// both, T a transversal of H in G and U of K in H. Irreps describe
// quotient_group(tower_transversal(T, U)) and quotient_group(U).
VerificationReport tower_factorization_check(const Transversal& t, const Transversal& u,
                                             const RationalGAMatrix& a,
                                             const IrrepSet& outer_quotient_irreps,
                                             const IrrepSet& inner_quotient_irreps,
                                             const CheckOptions& options = {});

struct DegreeBoundRow {
  Subgroup subgroup;
  int index = 0;
  int max_subgroup_degree = 0;
  int bound = 0;
  int max_group_degree = 0;
  int slack = 0;
  bool tight = false;
  bool passed = false;
};

// max deg Ĝ ≤ [G:H]·max deg Ĥ for every subgroup H (|G| ≤ 48).
std::vector<DegreeBoundRow> degree_bound_check(const GroupPtr& group, std::uint64_t seed = 0);

std::string group_label(const FiniteGroup& group);

}  // namespace groupdet
