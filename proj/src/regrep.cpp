#include "groupdet/regrep.hpp"

#include <random>

namespace groupdet {

namespace {

std::string first_difference(const RationalGAMatrix& lhs, const RationalGAMatrix& rhs) {
  for (int i = 0; i < lhs.rows(); ++i)
    for (int j = 0; j < lhs.cols(); ++j)
      if (!(lhs.at(i, j) == rhs.at(i, j))) {
        return "entry (" + std::to_string(i) + ", " + std::to_string(j) + ")";
      }
  return "shape";
}

VerificationReport exact_report(std::string theorem, const Transversal& t, bool equal,
                                const RationalGAMatrix& lhs, const RationalGAMatrix& rhs) {
  VerificationReport r;
  r.theorem = std::move(theorem);
  r.group = t.group()->label();
  r.subgroup = t.subgroup().describe();
  r.mode = CheckMode::kSymbolic;
  r.passed = equal;
  r.residual = equal ? 0.0 : 1.0;
  if (!equal) r.witness = first_difference(lhs, rhs);
  return r;
}

}  // namespace

Transversal tower_transversal(const Transversal& t, const Transversal& u) {
  if (!(u.ambient() == t.subgroup())) {
    throw NotASubgroupChain("the inner transversal must be taken inside " + t.subgroup().describe() +
                            ", got " + u.ambient().describe());
  }
  const auto& g = *t.group();
  std::vector<int> reps;
  reps.reserve(static_cast<std::size_t>(t.size()) * u.size());
  for (int j = 0; j < u.size(); ++j)
    for (int i = 0; i < t.size(); ++i) reps.push_back(g.mul(t.rep(i), u.rep(j)));
  return Transversal(t.ambient(), u.subgroup(), std::move(reps));
}

RationalMatrix quotient_regular_matrix(const Transversal& t, int i, const GroupPtr& universe) {
  const auto& g = *t.group();
  const int k = t.size();
  RationalMatrix out(k, k, universe);
  const auto one = RationalPolynomial::constant(universe, 1);
  for (int b = 0; b < k; ++b) {
    const int a = t.decompose(g.mul(t.rep(i), t.rep(b))).block;
    out.at(a, b) = one;
  }
  return out;
}

VerificationReport normal_form_check(const Transversal& t, const RationalGAMatrix& a) {
  Stopwatch clock;
  if (!is_normal(t.subgroup(), t.ambient())) {
    throw NotNormal(t.subgroup().describe() + " is not normal in " + t.ambient().describe());
  }
  const auto& g = *t.group();
  const auto& ambient = t.ambient();
  const auto& universe = a.universe();
  const int m = a.rows(), k = t.size();

  const auto lhs = apply_regrep(t, a).with_context(ambient);

  const auto parts = expand_by_transversal(a, t);
  RationalGAMatrix sum(m * k, m * k, ambient, universe);
  for (int i = 0; i < k; ++i) {
    const auto shift = block_diagonal<Rational>({t.rep(i)}, m, ambient, universe);
    const auto translated = shift * parts[i].with_context(ambient);
    sum = sum + kronecker(quotient_regular_matrix(t, i, universe), translated);
  }
  std::vector<int> inverses(k);
  for (int i = 0; i < k; ++i) inverses[i] = g.inverse(t.rep(i));
  const auto p = block_diagonal<Rational>(t.reps(), m, ambient, universe);
  const auto p_inv = block_diagonal<Rational>(inverses, m, ambient, universe);
  const auto rhs = p_inv * sum * p;

  auto report = exact_report("lemma-regnormal", t, lhs == rhs, lhs, rhs);
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerificationReport tower_check(const Transversal& t, const Transversal& u, const RationalGAMatrix& a) {
  Stopwatch clock;
  const auto v = tower_transversal(t, u);
  const auto direct = apply_regrep(v, a);
  const auto composed = apply_regrep(u, apply_regrep(t, a));
  auto report = exact_report("lemma-tower", v, direct == composed, direct, composed);
  report.subgroup = t.subgroup().describe() + " > " + u.subgroup().describe();
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

RationalGAMatrix random_ga_matrix(const Subgroup& context, const GroupPtr& universe, int m,
                                  int terms, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_element(0, context.order() - 1);
  std::uniform_int_distribution<int> pick_var(0, universe->order() - 1);
  std::uniform_int_distribution<int> pick_coeff(1, 3);
  std::bernoulli_distribution negative(0.5);
  RationalGAMatrix a(m, m, context, universe);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int n = 0; n < terms; ++n) {
        const int g = context.elements()[pick_element(rng)];
        const int var = pick_var(rng);
        const int magnitude = pick_coeff(rng);
        const int c = negative(rng) ? -magnitude : magnitude;
        a.at(i, j).add_term(g, RationalPolynomial::variable(universe, var, Rational(c)));
      }
  return a;
}

}  // namespace groupdet
