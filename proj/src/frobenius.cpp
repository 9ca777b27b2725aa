#include "groupdet/frobenius.hpp"

#include <cmath>
#include <random>

namespace groupdet {

namespace {

void require_complete(const IrrepSet& irreps, int order) {
  if (irreps.group->order() != order) {
    throw IncompleteIrrepSet("irrep set describes a group of order " +
                             std::to_string(irreps.group->order()) + ", expected " +
                             std::to_string(order));
  }
  if (irreps.sum_of_squared_degrees() != order) {
    throw IncompleteIrrepSet("sum of squared degrees is " +
                             std::to_string(irreps.sum_of_squared_degrees()) + ", group order " +
                             std::to_string(order));
  }
}

VerificationReport base_report(std::string theorem, const FiniteGroup& g, std::string subgroup,
                               const CheckOptions& options) {
  VerificationReport r;
  r.theorem = std::move(theorem);
  r.group = group_label(g);
  r.subgroup = std::move(subgroup);
  r.mode = options.mode;
  r.tolerance = options.mode == CheckMode::kPit ? options.tolerance : 0.0;
  r.seed = options.seed;
  return r;
}

// Evaluates lhs/rhs at every seeded point and fills in the residual profile.
template <class Lhs, class Rhs>
void run_pit(VerificationReport& r, int nvars, const CheckOptions& options, Lhs&& lhs, Rhs&& rhs) {
  const auto points = random_points(nvars, options.n_points, options.seed);
  r.n_points = options.n_points;
  r.residual = 0.0;
  for (const auto& p : points) {
    const Complex a = lhs(p.values);
    const Complex b = rhs(p.values);
    const double res = relative_residual(a, b);
    r.residuals.push_back(res);
    if (!std::isnan(r.residual) && !(res <= r.residual)) r.residual = res;
    if (!(res <= options.tolerance) && !r.witness) r.witness = "point " + std::to_string(p.index);
  }
  r.passed = r.residual <= options.tolerance;
}

void finish_symbolic(VerificationReport& r, const RationalPolynomial& expected,
                     const ComplexPolynomial& product, double window) {
  r.n_points = 0;
  const auto rounded = round_to_integers(product, window);
  r.passed = rounded.has_value() && *rounded == expected;
  r.residual = r.passed ? 0.0 : 1.0;
  if (!r.passed) {
    r.witness = rounded ? "coefficients differ after rounding"
                        : "a coefficient rounds to a non-real Gaussian integer";
  }
}

std::vector<ComplexMatrix> evaluate_all(const std::vector<RationalMatrix>& ms,
                                        std::span<const Complex> point) {
  std::vector<ComplexMatrix> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(m.evaluate(point));
  return out;
}

std::vector<ComplexPolyMatrix> complexify(const std::vector<RationalMatrix>& ms) {
  std::vector<ComplexPolyMatrix> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(to_complex(m));
  return out;
}

std::vector<RationalMatrix> flatten_all(const std::vector<RationalGAMatrix>& ms) {
  std::vector<RationalMatrix> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(flatten(m));
  return out;
}

const char* kExponentNote = "each quotient factor is raised to the degree of its representation";

}  // namespace

std::string group_label(const FiniteGroup& group) {
  return group.label().empty() ? "order-" + std::to_string(group.order()) + " group" : group.label();
}

RationalMatrix group_matrix(const GroupPtr& group) {
  const int n = group->order();
  RationalMatrix m(n, n, group);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      m.at(g, h) = RationalPolynomial::variable(group, group->mul(g, group->inverse(h)));
  return m;
}

RationalPolynomial theta_symbolic(const GroupPtr& group) {
  if (group->order() > kSymbolicGroupCap) {
    throw GroupTooLargeForSymbolic("symbolic group determinant is capped at order " +
                                   std::to_string(kSymbolicGroupCap) + ", group has order " +
                                   std::to_string(group->order()));
  }
  return det_poly(group_matrix(group));
}

GroupDeterminant GroupDeterminant::symbolic(const GroupPtr& group) {
  GroupDeterminant d;
  d.group_ = group;
  d.poly_ = theta_symbolic(group);
  return d;
}

GroupDeterminant GroupDeterminant::deferred(const GroupPtr& group) {
  GroupDeterminant d;
  d.group_ = group;
  return d;
}

Complex GroupDeterminant::evaluate(std::span<const Complex> point) const {
  if (poly_) return poly_->evaluate<Complex>(point);
  return theta_at(group_, point);
}

Complex theta_at(const GroupPtr& group, std::span<const Complex> point) {
  const int n = group->order();
  if (static_cast<int>(point.size()) != n) {
    throw UniverseMismatch("evaluation point has " + std::to_string(point.size()) +
                           " coordinates, group has order " + std::to_string(n));
  }
  ComplexMatrix m(n, n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) m(g, h) = point[group->mul(g, group->inverse(h))];
  return det_numeric(m);
}

std::vector<EvaluationPoint> random_points(int nvars, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::vector<EvaluationPoint> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    EvaluationPoint p{{}, seed, i};
    p.values.reserve(nvars);
    for (int v = 0; v < nvars; ++v) {
      const double re = coord(rng);
      const double im = coord(rng);
      p.values.emplace_back(re, im);
    }
    out.push_back(std::move(p));
  }
  return out;
}

Complex block_determinant_product(const IrrepSet& irreps, const std::vector<ComplexMatrix>& coeffs) {
  Complex product{1.0, 0.0};
  for (const auto& psi : irreps.irreps) {
    const auto rows = psi.degree * coeffs.at(0).rows();
    ComplexMatrix m = ComplexMatrix::Zero(rows, rows);
    for (std::size_t i = 0; i < coeffs.size(); ++i) m += kronecker(psi(static_cast<int>(i)), coeffs[i]);
    product *= std::pow(det_numeric(m), psi.degree);
  }
  return product;
}

ComplexPolynomial block_determinant_product(const IrrepSet& irreps,
                                            const std::vector<ComplexPolyMatrix>& coeffs) {
  const auto& universe = coeffs.at(0).universe();
  auto product = ComplexPolynomial::constant(universe, Complex(1.0, 0.0));
  for (const auto& psi : irreps.irreps) {
    const int rows = psi.degree * coeffs.at(0).rows();
    ComplexPolyMatrix m(rows, rows, universe);
    for (std::size_t i = 0; i < coeffs.size(); ++i) m = m + kronecker(psi(static_cast<int>(i)), coeffs[i]);
    product *= det_poly(m).pow(static_cast<unsigned>(psi.degree));
  }
  return product;
}

std::optional<RationalPolynomial> round_to_integers(const ComplexPolynomial& p, double window) {
  RationalPolynomial out(p.universe());
  for (const auto& [m, c] : p.terms()) {
    const double re = std::round(c.real());
    const double im = std::round(c.imag());
    if (std::abs(c.real() - re) > window || std::abs(c.imag() - im) > window) {
      throw RoundingAmbiguous("coefficient " + CoeffTraits<Complex>::to_string(c) +
                              " is not within " + std::to_string(window) +
                              " of a Gaussian integer");
    }
    if (im != 0.0) return std::nullopt;
    out.add_term(m, Rational(mpz_class(static_cast<long>(re))));
  }
  return out;
}

VerificationReport classical_factorization_check(const GroupPtr& group, const IrrepSet& irreps,
                                                 const CheckOptions& options) {
  Stopwatch clock;
  const int n = group->order();
  require_complete(irreps, n);
  auto r = base_report("thm-frobenius", *group, Subgroup::whole(group).describe(), options);
  // Σ_g φ(g)·x_g written as Σ_g φ(g) ⊗ [x_g].
  std::vector<RationalMatrix> coeffs;
  for (int g = 0; g < n; ++g) {
    RationalMatrix c(1, 1, group);
    c.at(0, 0) = RationalPolynomial::variable(group, g);
    coeffs.push_back(std::move(c));
  }
  if (options.mode == CheckMode::kPit) {
    run_pit(
        r, n, options, [&](const auto& x) { return theta_at(group, x); },
        [&](const auto& x) { return block_determinant_product(irreps, evaluate_all(coeffs, x)); });
  } else {
    finish_symbolic(r, theta_symbolic(group), block_determinant_product(irreps, complexify(coeffs)),
                    options.rounding_window);
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport generalized_factorization_check(const Subgroup& subgroup, const IrrepSet& irreps,
                                                   const CheckOptions& options) {
  Stopwatch clock;
  const auto& group = subgroup.parent();
  require_complete(irreps, subgroup.order());
  auto r = base_report("thm-generalized", *group, subgroup.describe(), options);

  const auto t = left_transversal(subgroup);
  RationalGAMatrix alpha(1, 1, Subgroup::whole(group), group);
  alpha.at(0, 0) = generic_element(group);
  const auto expansion = expand_by_subgroup(apply_regrep(t, alpha));
  // C_h already has scalar entries, so F_{[G:H]} leaves it unchanged.
  std::vector<RationalMatrix> coeffs;
  for (int h : subgroup.elements()) coeffs.push_back(expansion.coefficients.at(h));

  if (options.mode == CheckMode::kPit) {
    run_pit(
        r, group->order(), options, [&](const auto& x) { return theta_at(group, x); },
        [&](const auto& x) { return block_determinant_product(irreps, evaluate_all(coeffs, x)); });
  } else {
    finish_symbolic(r, theta_symbolic(group), block_determinant_product(irreps, complexify(coeffs)),
                    options.rounding_window);
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport generalized_factorization_check(const Subgroup& subgroup, std::uint64_t irrep_seed,
                                                   const CheckOptions& options) {
  return generalized_factorization_check(
      subgroup, irreducible_decomposition(subgroup.as_group(), irrep_seed), options);
}

VerificationReport regular_determinant_check(const GroupPtr& group) {
  Stopwatch clock;
  CheckOptions exact;
  exact.mode = CheckMode::kSymbolic;
  const auto trivial = Subgroup::trivial(group);
  auto r = base_report("lemma-regular-det", *group, trivial.describe(), exact);
  RationalGAMatrix alpha(1, 1, Subgroup::whole(group), group);
  alpha.at(0, 0) = generic_element(group);
  const auto image = apply_regrep(left_transversal(trivial), alpha);
  const auto lhs = det_poly(flatten(image));
  r.passed = lhs == theta_symbolic(group);
  r.residual = r.passed ? 0.0 : 1.0;
  if (!r.passed) r.witness = "determinant differs from the group determinant";
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport flatten_determinant_check(const RationalGAMatrix& a) {
  Stopwatch clock;
  CheckOptions exact;
  exact.mode = CheckMode::kSymbolic;
  auto r = base_report("lemma-flatten-det", a.group(), a.context().describe(), exact);
  const auto lhs = det_poly(flatten(a));
  const auto rhs = det_group_algebra(a).flatten();
  r.passed = lhs == rhs;
  r.residual = r.passed ? 0.0 : 1.0;
  if (!r.passed) r.witness = "det(F(A)) and F(det A) differ";
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport quotient_factorization_check(const Transversal& t, const RationalGAMatrix& a,
                                                const IrrepSet& quotient_irreps,
                                                const CheckOptions& options) {
  Stopwatch clock;
  if (!is_normal(t.subgroup(), t.ambient())) {
    throw NotNormal(t.subgroup().describe() + " is not normal in " + t.ambient().describe());
  }
  require_complete(quotient_irreps, t.size());
  auto r = base_report("lemma-quotient-product", *t.group(), t.subgroup().describe(), options);
  r.notes.emplace_back(kExponentNote);

  const auto lhs_matrix = flatten(apply_regrep(t, a));
  const auto parts = flatten_all(expand_by_transversal(a, t));
  const auto& universe = a.universe();

  if (options.mode == CheckMode::kPit) {
    run_pit(
        r, universe->order(), options,
        [&](const auto& x) { return det_numeric(lhs_matrix.evaluate(x)); },
        [&](const auto& x) { return block_determinant_product(quotient_irreps, evaluate_all(parts, x)); });
  } else {
    finish_symbolic(r, det_poly(lhs_matrix), block_determinant_product(quotient_irreps, complexify(parts)),
                    options.rounding_window);
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

VerificationReport tower_factorization_check(const Transversal& t, const Transversal& u,
                                             const RationalGAMatrix& a,
                                             const IrrepSet& outer_quotient_irreps,
                                             const IrrepSet& inner_quotient_irreps,
                                             const CheckOptions& options) {
  Stopwatch clock;
  const auto v = tower_transversal(t, u);
  const auto& k = u.subgroup();
  if (!is_normal(k, v.ambient())) throw NotNormal(k.describe() + " is not normal in the group");
  if (!is_normal(k, u.ambient())) throw NotNormal(k.describe() + " is not normal in " + u.ambient().describe());
  require_complete(outer_quotient_irreps, v.size());
  require_complete(inner_quotient_irreps, u.size());
  auto r = base_report("lemma-tower-product", *t.group(),
                       t.subgroup().describe() + " > " + k.describe(), options);
  r.notes.emplace_back(kExponentNote);

  const auto outer = flatten_all(expand_by_transversal(a, v));
  const auto inner = flatten_all(expand_by_transversal(apply_regrep(t, a), u));
  const auto& universe = a.universe();

  if (options.mode == CheckMode::kPit) {
    run_pit(
        r, universe->order(), options,
        [&](const auto& x) { return block_determinant_product(outer_quotient_irreps, evaluate_all(outer, x)); },
        [&](const auto& x) { return block_determinant_product(inner_quotient_irreps, evaluate_all(inner, x)); });
  } else {
    const auto lhs = round_to_integers(block_determinant_product(outer_quotient_irreps, complexify(outer)),
                                       options.rounding_window);
    if (!lhs) throw RoundingAmbiguous("outer product has a non-real coefficient");
    finish_symbolic(r, *lhs, block_determinant_product(inner_quotient_irreps, complexify(inner)),
                    options.rounding_window);
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

std::vector<DegreeBoundRow> degree_bound_check(const GroupPtr& group, std::uint64_t seed) {
  const auto subgroups = all_subgroups(group, 48);
  const int max_g = irreducible_decomposition(group, seed).max_degree();
  std::vector<DegreeBoundRow> rows;
  rows.reserve(subgroups.size());
  for (const auto& h : subgroups) {
    DegreeBoundRow row{h};
    row.index = h.index();
    row.max_subgroup_degree = irreducible_decomposition(h.as_group(), seed).max_degree();
    row.bound = row.index * row.max_subgroup_degree;
    row.max_group_degree = max_g;
    row.slack = row.bound - max_g;
    row.tight = row.slack == 0;
    row.passed = row.slack >= 0;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace groupdet
