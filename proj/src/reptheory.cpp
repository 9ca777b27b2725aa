#include "groupdet/reptheory.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>

namespace groupdet {

namespace {

// Internal signal: this attempt produced an ambiguous split; start over with
// fresh random draws.
struct AttemptFailed {
  std::string reason;
};

using Rng = std::mt19937_64;

ComplexMatrix random_hermitian(int d, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix x(d, d);
  for (int i = 0; i < d; ++i) {
    const double diag = normal(rng);
    x(i, i) = Complex(diag, 0.0);
    for (int j = i + 1; j < d; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      x(i, j) = Complex(re, im);
      x(j, i) = std::conj(x(i, j));
    }
  }
  return x;
}

// A subrepresentation of the regular representation in an orthonormal basis.
struct Block {
  std::vector<ComplexMatrix> rho;
};

struct Clustering {
  std::vector<std::vector<int>> clusters;
  bool marginal = false;
};

Clustering cluster_eigenvalues(const Eigen::VectorXd& values, double tolerance) {
  Clustering out;
  const Eigen::Index n = values.size();
  const double scale = std::max(std::abs(values(0)), std::abs(values(n - 1)));
  out.clusters.push_back({0});
  for (Eigen::Index i = 1; i < n; ++i) {
    const double gap = values(i) - values(i - 1);
    if (gap <= tolerance * scale) {
      out.clusters.back().push_back(static_cast<int>(i));
    } else {
      if (gap <= 1e3 * tolerance * scale) out.marginal = true;
      out.clusters.push_back({static_cast<int>(i)});
    }
  }
  return out;
}

ComplexMatrix columns(const ComplexMatrix& vectors, const std::vector<int>& idx) {
  ComplexMatrix q(vectors.rows(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t c = 0; c < idx.size(); ++c) q.col(static_cast<Eigen::Index>(c)) = vectors.col(idx[c]);
  return q;
}

double norm_of_character(const std::vector<Complex>& chi) {
  double s = 0.0;
  for (const auto& c : chi) s += std::norm(c);
  return s / static_cast<double>(chi.size());
}

class Splitter {
 public:
  Splitter(const GroupPtr& group, const DecompositionOptions& options, Rng& rng)
      : g_(*group), group_(group), options_(options), rng_(rng) {}

  std::vector<Representation> run() {
    found_.clear();
    split_regular();
    return found_;
  }

 private:
  int n() const { return g_.order(); }

  bool complete() const {
    int s = 0;
    for (const auto& r : found_) s += r.degree * r.degree;
    return s == n();
  }

  bool already_found(const std::vector<Complex>& chi, int degree) const {
    for (const auto& r : found_) {
      if (r.degree != degree) continue;
      const Complex ip = character_inner_product(chi, character(r));
      if (std::abs(ip - 1.0) <= options_.equivalence_tolerance) return true;
    }
    return false;
  }

  // Checks the norm ⟨χ, χ⟩ is an integer and returns it.
  int multiplicity_norm(const std::vector<Complex>& chi) const {
    const double norm = norm_of_character(chi);
    const double rounded = std::round(norm);
    if (std::abs(norm - rounded) > 1e-6 || rounded < 1.0) {
      throw AttemptFailed{"subspace is not invariant (character norm " + std::to_string(norm) + ")"};
    }
    return static_cast<int>(rounded);
  }

  // (P_g Q)[a, :] = Q[g⁻¹a, :] for the regular permutation representation.
  ComplexMatrix permute_rows(const ComplexMatrix& q, int g) const {
    ComplexMatrix out(q.rows(), q.cols());
    const int ginv = g_.inverse(g);
    for (int a = 0; a < n(); ++a) out.row(a) = q.row(g_.mul(ginv, a));
    return out;
  }

  void split_regular() {
    for (int attempt = 0;; ++attempt) {
      const ComplexMatrix x = random_hermitian(n(), rng_);
      // (1/|G|) Σ_g P_g X P_gᵀ, entrywise X[g⁻¹a][g⁻¹b].
      ComplexMatrix y = ComplexMatrix::Zero(n(), n());
      for (int g = 0; g < n(); ++g) {
        const int ginv = g_.inverse(g);
        for (int a = 0; a < n(); ++a) {
          const int ia = g_.mul(ginv, a);
          for (int b = 0; b < n(); ++b) y(a, b) += x(ia, g_.mul(ginv, b));
        }
      }
      y /= static_cast<double>(n());
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(y);
      const auto clustering = cluster_eigenvalues(eig.eigenvalues(), options_.cluster_tolerance);
      if ((clustering.marginal || clustering.clusters.size() < 2) && n() > 1 &&
          attempt + 1 < options_.max_retries) {
        continue;
      }
      for (const auto& cluster : clustering.clusters) {
        if (complete()) return;
        const ComplexMatrix q = columns(eig.eigenvectors(), cluster);
        std::vector<Complex> chi(n());
        for (int g = 0; g < n(); ++g) chi[g] = (q.adjoint() * permute_rows(q, g)).trace();
        const int norm = multiplicity_norm(chi);
        const int d = static_cast<int>(q.cols());
        if (norm == 1 && already_found(chi, d)) continue;
        Block block;
        block.rho.reserve(n());
        for (int g = 0; g < n(); ++g) block.rho.push_back(q.adjoint() * permute_rows(q, g));
        if (norm == 1) {
          accept(std::move(block));
        } else {
          split(std::move(block));
        }
      }
      return;
    }
  }

  void split(Block block) {
    const int d = static_cast<int>(block.rho[0].rows());
    for (int attempt = 0;; ++attempt) {
      const ComplexMatrix x = random_hermitian(d, rng_);
      ComplexMatrix y = ComplexMatrix::Zero(d, d);
      for (const auto& r : block.rho) y += r * x * r.adjoint();
      y /= static_cast<double>(n());
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(y);
      const auto clustering = cluster_eigenvalues(eig.eigenvalues(), options_.cluster_tolerance);
      if (clustering.marginal || clustering.clusters.size() < 2) {
        if (attempt + 1 < options_.max_retries) continue;
        throw AttemptFailed{"could not split a reducible block of dimension " + std::to_string(d)};
      }
      for (const auto& cluster : clustering.clusters) {
        if (complete()) return;
        const ComplexMatrix q = columns(eig.eigenvectors(), cluster);
        Block sub;
        for (const auto& r : block.rho) sub.rho.push_back(q.adjoint() * r * q);
        std::vector<Complex> chi(n());
        for (int g = 0; g < n(); ++g) chi[g] = sub.rho[g].trace();
        const int norm = multiplicity_norm(chi);
        if (norm == 1) {
          if (!already_found(chi, static_cast<int>(q.cols()))) accept(std::move(sub));
        } else {
          split(std::move(sub));
        }
      }
      return;
    }
  }

  void accept(Block block) {
    Representation rep{group_, static_cast<int>(block.rho[0].rows()), std::move(block.rho)};
    // Re-unitarize: conjugate by S^{1/2} with S = (1/|G|) Σ ρ(g)*ρ(g).
    ComplexMatrix s = ComplexMatrix::Zero(rep.degree, rep.degree);
    for (const auto& r : rep.matrices) s += r.adjoint() * r;
    s /= static_cast<double>(n());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(s);
    const Eigen::VectorXd root = eig.eigenvalues().cwiseSqrt();
    const ComplexMatrix& v = eig.eigenvectors();
    const ComplexMatrix half = v * root.cast<Complex>().asDiagonal() * v.adjoint();
    const ComplexMatrix half_inv = v * root.cwiseInverse().cast<Complex>().asDiagonal() * v.adjoint();
    for (auto& r : rep.matrices) r = half * r * half_inv;
    rep.matrices[g_.identity()] = ComplexMatrix::Identity(rep.degree, rep.degree);
    found_.push_back(std::move(rep));
  }

  const FiniteGroup& g_;
  GroupPtr group_;
  const DecompositionOptions& options_;
  Rng& rng_;
  std::vector<Representation> found_;
};

std::vector<long long> rounded_character(const Representation& r) {
  std::vector<long long> key;
  for (const auto& c : character(r)) {
    key.push_back(std::llround(c.real() * 1e6));
    key.push_back(std::llround(c.imag() * 1e6));
  }
  return key;
}

}  // namespace

double Representation::homomorphism_residual() const {
  double worst = 0.0;
  const auto& g = *group;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      const ComplexMatrix diff = matrices[a] * matrices[b] - matrices[g.mul(a, b)];
      worst = std::max(worst, diff.cwiseAbs().maxCoeff());
    }
  return worst;
}

double Representation::unitarity_residual() const {
  double worst = 0.0;
  for (const auto& r : matrices) {
    const ComplexMatrix diff = r * r.adjoint() - ComplexMatrix::Identity(degree, degree);
    worst = std::max(worst, diff.cwiseAbs().maxCoeff());
  }
  return worst;
}

std::vector<int> IrrepSet::degrees() const {
  std::vector<int> out;
  for (const auto& r : irreps) out.push_back(r.degree);
  return out;
}

int IrrepSet::max_degree() const {
  int m = 0;
  for (const auto& r : irreps) m = std::max(m, r.degree);
  return m;
}

int IrrepSet::sum_of_squared_degrees() const {
  int s = 0;
  for (const auto& r : irreps) s += r.degree * r.degree;
  return s;
}

Representation regular_permutation_rep(const GroupPtr& group) {
  const int n = group->order();
  Representation rep{group, n, {}};
  rep.matrices.reserve(n);
  for (int g = 0; g < n; ++g) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    for (int h = 0; h < n; ++h) m(group->mul(g, h), h) = 1.0;
    rep.matrices.push_back(std::move(m));
  }
  return rep;
}

Representation trivial_rep(const GroupPtr& group) {
  return Representation{group, 1,
                        std::vector<ComplexMatrix>(group->order(), ComplexMatrix::Identity(1, 1))};
}

IrrepSet irreducible_decomposition(const GroupPtr& group, std::uint64_t seed,
                                   const DecompositionOptions& options) {
  if (group->order() > options.max_order) {
    throw GroupTooLarge("irreducible decomposition is capped at order " +
                        std::to_string(options.max_order));
  }
  Rng rng(seed);
  std::string last_reason = "no attempt made";
  for (int attempt = 0; attempt < options.max_retries; ++attempt) {
    std::vector<Representation> irreps;
    try {
      irreps = Splitter(group, options, rng).run();
    } catch (const AttemptFailed& failure) {
      last_reason = failure.reason;
      continue;
    }
    int total = 0;
    bool ok = true;
    for (const auto& r : irreps) {
      total += r.degree * r.degree;
      if (r.homomorphism_residual() > options.residual_tolerance ||
          r.unitarity_residual() > options.residual_tolerance) {
        ok = false;
        last_reason = "residual above tolerance for a degree-" + std::to_string(r.degree) + " block";
      }
    }
    if (total != group->order()) {
      ok = false;
      last_reason = "sum of squared degrees " + std::to_string(total) + " != " +
                    std::to_string(group->order());
    }
    if (!ok) continue;
    std::vector<std::pair<std::vector<long long>, std::size_t>> keys;
    for (std::size_t i = 0; i < irreps.size(); ++i) keys.emplace_back(rounded_character(irreps[i]), i);
    std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
      const int da = irreps[a.second].degree, db = irreps[b.second].degree;
      if (da != db) return da < db;
      return a.first > b.first;
    });
    IrrepSet out{group, seed, {}};
    for (const auto& [key, i] : keys) out.irreps.push_back(std::move(irreps[i]));
    return out;
  }
  throw DecompositionFailed("irreducible decomposition failed after " +
                            std::to_string(options.max_retries) + " attempts: " + last_reason);
}

std::vector<Complex> character(const Representation& rep) {
  std::vector<Complex> chi;
  chi.reserve(rep.matrices.size());
  for (const auto& m : rep.matrices) chi.push_back(m.trace());
  return chi;
}

Complex character_inner_product(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s / static_cast<double>(a.size());
}

double class_function_spread(const FiniteGroup& group, const std::vector<Complex>& chi) {
  double worst = 0.0;
  for (const auto& cls : group.conjugacy_classes())
    for (int x : cls) worst = std::max(worst, std::abs(chi[x] - chi[cls.front()]));
  return worst;
}

bool are_equivalent(const Representation& a, const Representation& b, double tolerance) {
  if (a.degree != b.degree) return false;
  return std::abs(character_inner_product(character(a), character(b)) - 1.0) <= tolerance;
}

Representation conjugate_rep(const Representation& rep, const ComplexMatrix& u) {
  Representation out{rep.group, rep.degree, {}};
  const ComplexMatrix u_inv = u.inverse();
  for (const auto& m : rep.matrices) out.matrices.push_back(u * m * u_inv);
  return out;
}

}  // namespace groupdet
