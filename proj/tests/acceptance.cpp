// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances and runtime limits are fixed below.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "groupdet/cli.hpp"
#include "groupdet/frobenius.hpp"
#include "oracles.hpp"

using namespace groupdet;

namespace {

constexpr double kPitTol = 1e-8;
constexpr int kPoints = 20;
constexpr double kOrthogonalityTol = 1e-6;
constexpr double kRoundingWindow = 1e-6;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;
  std::function<Outcome()> body;
};

CheckOptions pit() {
  CheckOptions o;
  o.n_points = kPoints;
  o.tolerance = kPitTol;
  return o;
}

CheckOptions symbolic() {
  CheckOptions o;
  o.mode = CheckMode::kSymbolic;
  o.rounding_window = kRoundingWindow;
  return o;
}

RationalGAMatrix alpha_matrix(const GroupPtr& g) {
  RationalGAMatrix a(1, 1, Subgroup::whole(g), g);
  a.at(0, 0) = generic_element(g);
  return a;
}

std::vector<GroupPtr> six_groups() {
  return {catalog::cyclic(6), catalog::symmetric(3), catalog::dihedral(4),
          catalog::quaternion8(), catalog::alternating(4), catalog::symmetric(4)};
}

GroupPtr product(std::initializer_list<GroupPtr> factors) {
  GroupPtr out;
  for (const auto& f : factors) out = out ? catalog::direct_product(out, f) : f;
  return out;
}

// The catalog up to order 24: every cyclic, dihedral, symmetric and
// alternating group in range, Q8, and a selection of direct products.
std::vector<GroupPtr> catalog_up_to(int max_order) {
  std::vector<GroupPtr> out;
  for (int n = 1; n <= max_order; ++n) out.push_back(catalog::cyclic(n));
  for (int n = 1; 2 * n <= max_order; ++n) out.push_back(catalog::dihedral(n));
  for (int n = 1; n <= 5; ++n) {
    auto s = catalog::symmetric(n);
    if (s->order() <= max_order) out.push_back(s);
    auto a = catalog::alternating(n);
    if (a->order() <= max_order) out.push_back(a);
  }
  if (8 <= max_order) out.push_back(catalog::quaternion8());
  const auto c2 = catalog::cyclic(2), c3 = catalog::cyclic(3), c4 = catalog::cyclic(4);
  for (const auto& g : {product({c2, c2}), product({c2, c4}), product({c2, c2, c2}), product({c3, c3}),
                        product({c2, catalog::symmetric(3)}), product({c3, catalog::symmetric(3)}),
                        product({c2, catalog::quaternion8()}), product({c2, catalog::dihedral(4)}),
                        product({c2, catalog::alternating(4)}), product({c2, c2, c2, c3})})
    if (g->order() <= max_order) out.push_back(g);
  return out;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

Outcome exact_small_determinants() {
  Outcome o;
  for (int n : {2, 3}) {
    auto g = catalog::cyclic(n);
    const auto oracle_value = oracle::leibniz_det<RationalPolynomial>(
        n, [&](int i, int j) { return RationalPolynomial::variable(g, g->mul(i, g->inverse(j))); },
        RationalPolynomial(g), RationalPolynomial::constant(g, 1));
    o.require(theta_symbolic(g) == oracle_value, "C" + std::to_string(n) + " differs from Leibniz");
  }
  o.require(theta_symbolic(catalog::cyclic(2)).to_string() == "x[e]^2 - x[a]^2", "C2 string");
  o.require(theta_symbolic(catalog::cyclic(3)).to_string() == "x[e]^3 - 3*x[e]*x[a]*x[a^2] + x[a]^3 + x[a^2]^3",
            "C3 string");
  o.detail = o.ok ? "C2, C3 match the Leibniz expansion" : o.detail;
  return o;
}

Outcome classical() {
  Outcome o;
  double worst = 0.0;
  for (const auto& g : six_groups()) {
    const auto r = classical_factorization_check(g, irreducible_decomposition(g, 0), pit());
    worst = std::max(worst, r.residual);
    o.require(r.passed && r.n_points == kPoints, g->label() + " residual " + fmt(r.residual));
  }
  if (o.ok) o.detail = "6 groups, max residual " + fmt(worst);
  return o;
}

Outcome generalized() {
  Outcome o;
  double worst = 0.0;
  int pit_checks = 0, symbolic_checks = 0;
  for (const auto& g : six_groups()) {
    for (const auto& h : all_subgroups(g)) {
      const auto r = generalized_factorization_check(h, 0, pit());
      worst = std::max(worst, r.residual);
      ++pit_checks;
      o.require(r.passed, g->label() + " H=" + h.describe() + " residual " + fmt(r.residual));
      if (g->order() <= 8) {
        const auto s = generalized_factorization_check(h, 0, symbolic());
        ++symbolic_checks;
        o.require(s.passed, g->label() + " H=" + h.describe() + " symbolic mismatch");
      }
    }
  }
  if (o.ok)
    o.detail = std::to_string(pit_checks) + " PIT checks (max residual " + fmt(worst) + "), " +
               std::to_string(symbolic_checks) + " exact symbolic checks";
  return o;
}

Outcome degeneration() {
  Outcome o;
  int groups = 0;
  for (const auto& g : catalog_up_to(24)) {
    const auto irreps = irreducible_decomposition(g, 0);
    const auto classical = classical_factorization_check(g, irreps, pit());
    const auto whole = generalized_factorization_check(Subgroup::whole(g), irreps, pit());
    o.require(classical.residuals == whole.residuals, g->label() + ": H = G profile differs");
    const auto trivial = generalized_factorization_check(Subgroup::trivial(g), 0, pit());
    o.require(trivial.passed, g->label() + ": H = {e} failed");
    ++groups;
  }
  if (o.ok) o.detail = std::to_string(groups) + " catalog groups";
  return o;
}

Outcome normal_form() {
  Outcome o;
  auto c4 = catalog::cyclic(4);
  auto s3 = catalog::symmetric(3);
  auto d4 = catalog::dihedral(4);
  const std::vector<Subgroup> cases = {Subgroup(c4, {0, 2}), Subgroup(s3, {0, 3, 4}), Subgroup(d4, {0, 1, 2, 3})};
  int runs = 0;
  for (const auto& h : cases)
    for (int m : {1, 2})
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto a = random_ga_matrix(Subgroup::whole(h.parent()), h.parent(), m, 2, seed);
        const auto r = normal_form_check(left_transversal(h), a);
        o.require(r.passed, h.parent()->label() + " m=" + std::to_string(m) + " seed " + std::to_string(seed));
        ++runs;
      }
  if (o.ok) o.detail = std::to_string(runs) + " exact instances";
  return o;
}

Outcome tower() {
  Outcome o;
  auto s3 = catalog::symmetric(3);
  auto d4 = catalog::dihedral(4);
  auto s4 = catalog::symmetric(4);
  struct Chain {
    GroupPtr g;
    Subgroup h, k;
  };
  const std::vector<Chain> chains = {
      {s3, Subgroup(s3, {0, 3, 4}), Subgroup::trivial(s3)},
      {d4, Subgroup(d4, {0, 1, 2, 3}), Subgroup(d4, {0, 2})},
      {s4, Subgroup(s4, {0, 1, 2, 3, 4, 5}), Subgroup(s4, {0, 1})},
  };
  for (const auto& c : chains) {
    const auto r = tower_check(left_transversal(c.h), left_transversal(c.h, c.k), alpha_matrix(c.g));
    o.require(r.passed, c.g->label() + " " + r.subgroup);
  }
  if (o.ok) o.detail = "S3>C3>{e}, D4>C4>C2, S4>S3>C2 exact";
  return o;
}

Outcome regular_determinant() {
  Outcome o;
  int groups = 0;
  for (const auto& g : catalog_up_to(8)) {
    o.require(regular_determinant_check(g).passed, g->label());
    ++groups;
  }
  if (o.ok) o.detail = std::to_string(groups) + " catalog groups of order <= 8";
  return o;
}

Outcome quotient_lemmas() {
  Outcome o;
  double worst = 0.0;
  auto s3 = catalog::symmetric(3);
  auto c4 = catalog::cyclic(4);
  auto d4 = catalog::dihedral(4);
  auto quotient_case = [&](const Subgroup& h, const RationalGAMatrix& a) {
    const auto t = left_transversal(h);
    const auto r = quotient_factorization_check(t, a, irreducible_decomposition(quotient_group(t), 0), pit());
    worst = std::max(worst, r.residual);
    o.require(r.passed && r.n_points == kPoints, "quotient " + h.parent()->label() + " H=" + h.describe());
  };
  quotient_case(Subgroup::whole(s3), random_ga_matrix(Subgroup::whole(s3), s3, 2, 2, 1));
  quotient_case(Subgroup(c4, {0, 2}), alpha_matrix(c4));
  quotient_case(Subgroup(s3, {0, 3, 4}), random_ga_matrix(Subgroup::whole(s3), s3, 2, 2, 2));

  auto tower_case = [&](const Subgroup& h, const Subgroup& k) {
    const auto t = left_transversal(h);
    const auto u = left_transversal(h, k);
    const auto v = tower_transversal(t, u);
    const auto r = tower_factorization_check(t, u, alpha_matrix(h.parent()),
                                             irreducible_decomposition(quotient_group(v), 0),
                                             irreducible_decomposition(quotient_group(u), 0), pit());
    worst = std::max(worst, r.residual);
    o.require(r.passed && r.n_points == kPoints, "tower " + h.parent()->label() + " " + r.subgroup);
  };
  tower_case(Subgroup::whole(s3), Subgroup::trivial(s3));
  tower_case(Subgroup(s3, {0, 3, 4}), Subgroup::trivial(s3));
  tower_case(Subgroup(d4, {0, 1, 2, 3}), Subgroup(d4, {0, 2}));
  if (o.ok) o.detail = "6 instances, max residual " + fmt(worst);
  return o;
}

Outcome completeness() {
  Outcome o;
  int groups = 0;
  double worst = 0.0;
  for (const auto& g : catalog_up_to(24)) {
    const auto set = irreducible_decomposition(g, 0);
    o.require(set.sum_of_squared_degrees() == g->order(), g->label() + ": sum of squares");
    for (std::size_t i = 0; i < set.irreps.size(); ++i)
      for (std::size_t j = 0; j < set.irreps.size(); ++j) {
        const Complex ip = character_inner_product(character(set.irreps[i]), character(set.irreps[j]));
        const double dev = std::abs(ip - (i == j ? 1.0 : 0.0));
        worst = std::max(worst, dev);
        o.require(dev <= kOrthogonalityTol, g->label() + ": orthogonality");
      }
    ++groups;
  }
  for (const auto& g : six_groups()) {
    const auto candidates = oracle::character_degree_candidates(*g);
    o.require(candidates.size() == 1 && irreducible_decomposition(g, 0).degrees() == candidates[0],
              g->label() + ": degrees differ from the character-table oracle");
  }
  if (o.ok)
    o.detail = std::to_string(groups) + " groups, max orthogonality deviation " + fmt(worst) +
               ", 6 oracle degree lists";
  return o;
}

Outcome degree_bound() {
  Outcome o;
  int rows = 0;
  bool s3_tight = false;
  for (const auto& g : catalog_up_to(24)) {
    for (const auto& r : degree_bound_check(g, 0)) {
      ++rows;
      o.require(r.passed, g->label() + " H=" + r.subgroup.describe());
      if (g->label() == "symmetric:3" && r.subgroup.order() == 3)
        s3_tight = r.tight && r.bound == 2 && r.max_group_degree == 2;
    }
  }
  o.require(s3_tight, "tight instance (S3, C3) not reported");
  if (o.ok) o.detail = std::to_string(rows) + " subgroup rows; (S3, C3) tight at 2 = 2*1";
  return o;
}

Outcome determinism() {
  Outcome o;
  auto run = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    args.insert(args.begin(), "groupdet");
    const int code = cli::run(args, out, err);
    return std::pair{code, out.str()};
  };
  for (const auto& catalog_name : {"symmetric:3", "dihedral:4", "alternating:4", "symmetric:4"}) {
    const std::vector<std::string> args = {"verify", "--catalog", catalog_name, "--subgroup", "all",
                                           "--seed", "11", "--format", "json"};
    const auto a = run(args), b = run(args);
    o.require(a.first == 0 && a == b, std::string(catalog_name) + ": repeated runs differ");
  }
  for (const auto& g : six_groups())
    for (const auto& h : all_subgroups(g)) {
      const auto a = generalized_factorization_check(h, 0, pit());
      const auto b = generalized_factorization_check(h, 987654321, pit());
      o.require(a.passed == b.passed, g->label() + " H=" + h.describe() + ": verdict depends on irrep seed");
    }
  const auto c1 = run({"irreps", "--catalog", "symmetric:4", "--format", "json", "--seed", "3"});
  const auto c2 = run({"irreps", "--catalog", "symmetric:4", "--format", "json", "--seed", "3"});
  o.require(c1 == c2, "irreps output differs between runs");
  if (o.ok) o.detail = "byte-identical JSON; verdicts stable across irrep seeds";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  const std::vector<Criterion> criteria = {
      {1, "exact small group determinants", 1.0, exact_small_determinants},
      {2, "classical factorization", 30.0, classical},
      {3, "subgroup factorization sweeps", 300.0, generalized},
      {4, "degeneration coherence", 300.0, degeneration},
      {5, "normal-subgroup Kronecker form", 300.0, normal_form},
      {6, "tower composition", 300.0, tower},
      {7, "determinant of the regular representation", 300.0, regular_determinant},
      {8, "quotient and tower products", 300.0, quotient_lemmas},
      {9, "representation completeness", 300.0, completeness},
      {10, "degree bound", 300.0, degree_bound},
      {11, "determinism", 300.0, determinism},
  };
  int failures = 0;
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  int run = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    ++run;
    Stopwatch clock;
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = clock.elapsed_ms() / 1000.0;
    const bool in_time = seconds < c.limit_s;
    const bool pass = o.ok && in_time;
    failures += !pass;
    std::printf("%s  criterion %2d  %-44s %8.3f s (limit %g s)  %s%s\n", pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), seconds, c.limit_s, o.detail.c_str(), in_time ? "" : "  [over time limit]");
  }
  std::printf("%d of %d criteria passed\n", run - failures, run);
  return failures == 0 ? 0 : 1;
}
