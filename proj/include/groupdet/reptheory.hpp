#pragma once

#include <cstdint>
#include <vector>

#include "groupdet/group.hpp"
#include "groupdet/group_algebra.hpp"

namespace groupdet {

// Explicit matrices ρ(g), one per element in index order.
struct Representation {
  GroupPtr group;
  int degree = 0;
  std::vector<ComplexMatrix> matrices;

  const ComplexMatrix& operator()(int g) const { return matrices[g]; }

  // max over pairs of ‖ρ(g)ρ(h) − ρ(gh)‖_max
  double homomorphism_residual() const;
  // max over g of ‖ρ(g)ρ(g)* − I‖_max
  double unitarity_residual() const;
};

struct IrrepSet {
  GroupPtr group;
  std::uint64_t seed = 0;
  // Sorted by degree, then by rounded character vector (descending), so the
  // trivial representation comes first.
  std::vector<Representation> irreps;

  std::vector<int> degrees() const;
  int max_degree() const;
  int sum_of_squared_degrees() const;
};

struct DecompositionOptions {
  // Eigenvalues closer than this (relative to the spectral radius) share a
  // cluster.
  double cluster_tolerance = 1e-6;
  int max_retries = 5;
  // Homomorphism and unitarity residual bound for accepted irreps.
  double residual_tolerance = 1e-8;
  double equivalence_tolerance = 1e-6;
  int max_order = 256;
};

// ρ(g) has a 1 at (index of g·h, index of h).
Representation regular_permutation_rep(const GroupPtr& group);

// A complete set of pairwise inequivalent irreducible unitary
// representations, found by splitting the regular representation with
// random Hermitian elements of its commutant. The only source of randomness
// is std::mt19937_64 seeded with `seed`. Throws DecompositionFailed.
IrrepSet irreducible_decomposition(const GroupPtr& group, std::uint64_t seed,
                                   const DecompositionOptions& options = {});

std::vector<Complex> character(const Representation& rep);

// (1/|G|) Σ_g a(g)·conj(b(g))
Complex character_inner_product(const std::vector<Complex>& a, const std::vector<Complex>& b);

// Largest deviation of a class function from constancy on conjugacy classes.
double class_function_spread(const FiniteGroup& group, const std::vector<Complex>& chi);

bool are_equivalent(const Representation& a, const Representation& b, double tolerance = 1e-6);

// g ↦ U·ρ(g)·U⁻¹
Representation conjugate_rep(const Representation& rep, const ComplexMatrix& u);

// One-dimensional trivial representation.
Representation trivial_rep(const GroupPtr& group);

}  // namespace groupdet
