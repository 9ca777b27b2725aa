#include "groupdet/cli.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "groupdet/frobenius.hpp"
#include "groupdet/io.hpp"

namespace groupdet::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string catalog;
  std::string cayley;
  std::string perms;
  int degree = 0;
  std::string subgroup;
  std::string chain;
  std::string mode;  // empty: command default
  int n_points = 20;
  double tolerance = NumericDefaults::kPitTolerance;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> irrep_seed;
  std::string format = "text";
  std::string export_path;
  bool timing = false;
  std::string lemma;
  std::string matrix = "generic";
  int size = 1;
  int terms = 2;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

bool is_index_list(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != ',' && c != ' ') return false;
  return true;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("invalid " + what + " '" + s + "'");
  }
}

int resolve_element(const FiniteGroup& g, const std::string& token) {
  if (auto found = g.find(token)) return *found;
  const int idx = parse_int(token, "element");
  if (idx < 0 || idx >= g.order()) {
    throw ParameterOutOfRange("element index " + token + " outside 0.." + std::to_string(g.order() - 1));
  }
  return idx;
}

Subgroup generated_within(const Subgroup& within, const std::vector<int>& seeds) {
  auto h = subgroup_generated(within.parent(), seeds);
  if (!h.is_subgroup_of(within)) {
    throw NotASubgroupChain(h.describe() + " is not contained in " + within.describe());
  }
  return h;
}

GroupPtr load_group(const RunConfig& c) {
  const int given = !c.catalog.empty() + !c.cayley.empty() + !c.perms.empty();
  if (given != 1) throw ParseError("give exactly one of --catalog, --cayley, --perms");
  if (!c.catalog.empty()) return catalog::from_name(c.catalog);
  if (!c.cayley.empty()) return io::read_group_file(c.cayley);
  if (c.degree <= 0) throw ParseError("--perms needs --degree N");
  std::vector<std::string> gens;
  std::stringstream ss(c.perms);
  for (std::string item; std::getline(ss, item, ';');)
    if (!trim(item).empty()) gens.push_back(trim(item));
  return from_permutations(gens, c.degree);
}

std::uint64_t irrep_seed(const RunConfig& c) { return c.irrep_seed.value_or(c.seed); }

CheckOptions check_options(const RunConfig& c) {
  CheckOptions o;
  o.mode = c.mode.empty() ? CheckMode::kPit : parse_mode(c.mode);
  o.n_points = c.n_points;
  o.tolerance = c.tolerance;
  o.seed = c.seed;
  if (o.n_points < 1) throw ParameterOutOfRange("--points must be positive");
  if (!(o.tolerance >= 0.0)) throw ParameterOutOfRange("--tol must be non-negative");
  return o;
}

std::vector<Subgroup> resolve_subgroups(const RunConfig& c, const GroupPtr& g) {
  if (c.subgroup == "all") return all_subgroups(g);
  return {resolve_subgroup(c.subgroup, Subgroup::whole(g))};
}

// Chain "H,K" resolved as H ≤ G then K ≤ H.
std::pair<Subgroup, Subgroup> resolve_chain(const RunConfig& c, const GroupPtr& g) {
  const auto parts = split_top_level(c.chain);
  if (parts.size() != 2) throw ParseError("--chain expects two subgroups, e.g. C3,{e}");
  auto h = resolve_subgroup(parts[0], Subgroup::whole(g));
  auto k = resolve_subgroup(parts[1], h);
  return {std::move(h), std::move(k)};
}

RationalGAMatrix lemma_matrix(const RunConfig& c, const Subgroup& context, const GroupPtr& universe) {
  if (c.size < 1) throw ParameterOutOfRange("--size must be positive");
  if (c.matrix == "random") {
    if (c.terms < 1) throw ParameterOutOfRange("--terms must be positive");
    return random_ga_matrix(context, universe, c.size, c.terms, c.seed);
  }
  RationalGAMatrix a(c.size, c.size, context, universe);
  for (int i = 0; i < c.size; ++i)
    for (int g : context.elements()) a.at(i, i).add_term(g, RationalPolynomial::variable(universe, g));
  return a;
}

// Shared rendering for commands that produce verification reports.
int emit_reports(const RunConfig& c, const std::string& command, const std::vector<VerificationReport>& reports,
                 std::ostream& out) {
  bool all = true;
  for (const auto& r : reports) all = all && r.passed;
  if (c.format == "json") {
    Json j;
    j["command"] = command;
    j["passed"] = all;
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(to_json(r, c.timing));
    j["reports"] = std::move(list);
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << (r.passed ? "PASS " : "FAIL ") << r.theorem << "  " << r.group << "  H=" << r.subgroup
          << "  mode=" << to_string(r.mode);
      if (r.mode == CheckMode::kPit) out << "  points=" << r.n_points << "  tol=" << sci(r.tolerance);
      out << "  residual=" << sci(r.residual);
      if (c.timing) out << "  elapsed_ms=" << sci(r.elapsed_ms);
      out << "\n";
      if (r.witness) out << "  witness: " << *r.witness << "\n";
      for (const auto& n : r.notes) out << "  note: " << n << "\n";
    }
    out << (all ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return all ? kExitPass : kExitFail;
}

int cmd_group(const RunConfig& c, std::ostream& out) {
  const auto g = load_group(c);
  const auto whole = Subgroup::whole(g);
  std::vector<Subgroup> named;
  if (!c.subgroup.empty()) named = resolve_subgroups(c, g);
  const auto classes = g->conjugacy_classes();
  if (c.format == "json") {
    Json j;
    j["command"] = "group";
    j["group"] = group_label(*g);
    j["order"] = g->order();
    j["abelian"] = g->is_abelian();
    j["names"] = g->names();
    j["center_size"] = g->center().size();
    j["conjugacy_classes"] = classes.size();
    Json subs = Json::array();
    for (const auto& h : named)
      subs.push_back({{"subgroup", h.describe()}, {"elements", h.elements()}, {"order", h.order()},
                      {"index", h.index()}, {"normal", is_normal(h)}});
    j["subgroups"] = std::move(subs);
    out << j.dump(2) << "\n";
    return kExitPass;
  }
  out << "group: " << group_label(*g) << "\n";
  out << "order: " << g->order() << (g->is_abelian() ? " (abelian)" : " (non-abelian)") << "\n";
  out << "elements:";
  for (int a = 0; a < g->order(); ++a) out << " " << a << "=" << g->name(a);
  out << "\n";
  out << "center size: " << g->center().size() << "\n";
  out << "conjugacy classes: " << classes.size() << "\n";
  for (const auto& h : named) {
    out << "subgroup " << h.describe() << "  order " << h.order() << "  index " << h.index()
        << (is_normal(h) ? "  normal" : "  not normal") << "\n";
  }
  return kExitPass;
}

int cmd_theta(const RunConfig& c, std::ostream& out) {
  const auto g = load_group(c);
  // Without an explicit mode, expand whenever the group is small enough.
  const bool symbolic = c.mode.empty() ? g->order() <= kSymbolicGroupCap : parse_mode(c.mode) == CheckMode::kSymbolic;
  if (symbolic) {
    const auto theta = theta_symbolic(g);
    if (c.format == "json") {
      Json j;
      j["command"] = "theta";
      j["group"] = group_label(*g);
      j["mode"] = "symbolic";
      j["polynomial"] = theta.to_string();
      j["terms"] = io::polynomial_to_json(theta);
      out << j.dump(2) << "\n";
    } else {
      out << theta.to_string() << "\n";
    }
    return kExitPass;
  }
  if (c.n_points < 1) throw ParameterOutOfRange("--points must be positive");
  const auto points = random_points(g->order(), c.n_points, c.seed);
  Json evals = Json::array();
  for (const auto& p : points) {
    const Complex v = theta_at(g, p.values);
    if (c.format == "json") {
      Json coords = Json::array();
      for (const auto& x : p.values) coords.push_back({x.real(), x.imag()});
      evals.push_back({{"index", p.index}, {"point", std::move(coords)}, {"value", {v.real(), v.imag()}}});
    } else {
      out << "point " << p.index << ": " << sci(v.real()) << (v.imag() < 0 ? " - " : " + ")
          << sci(std::abs(v.imag())) << "i\n";
    }
  }
  if (c.format == "json") {
    Json j;
    j["command"] = "theta";
    j["group"] = group_label(*g);
    j["mode"] = "pit";
    j["seed"] = c.seed;
    j["evaluations"] = std::move(evals);
    out << j.dump(2) << "\n";
  }
  return kExitPass;
}

int cmd_irreps(const RunConfig& c, std::ostream& out) {
  const auto g = load_group(c);
  const auto set = irreducible_decomposition(g, irrep_seed(c));
  const auto degrees = set.degrees();
  const bool complete = set.sum_of_squared_degrees() == g->order();
  if (!c.export_path.empty()) io::write_text_file(c.export_path, io::irreps_to_json(set).dump(2) + "\n");
  if (c.format == "json") {
    Json j;
    j["command"] = "irreps";
    j["group"] = group_label(*g);
    j["order"] = g->order();
    j["seed"] = set.seed;
    j["degrees"] = degrees;
    j["sum_of_squares"] = set.sum_of_squared_degrees();
    j["complete"] = complete;
    out << j.dump(2) << "\n";
  } else {
    out << "degrees: [";
    for (std::size_t i = 0; i < degrees.size(); ++i) out << (i ? ", " : "") << degrees[i];
    out << "]\n";
    out << "sum of squares: " << set.sum_of_squared_degrees() << " (order " << g->order() << ")"
        << (complete ? "" : "  INCOMPLETE") << "\n";
  }
  return complete ? kExitPass : kExitFail;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const auto g = load_group(c);
  const auto options = check_options(c);
  std::vector<VerificationReport> reports;
  if (c.subgroup.empty()) {
    reports.push_back(classical_factorization_check(g, irreducible_decomposition(g, irrep_seed(c)), options));
  } else {
    for (const auto& h : resolve_subgroups(c, g))
      reports.push_back(generalized_factorization_check(h, irrep_seed(c), options));
  }
  return emit_reports(c, "verify", reports, out);
}

int cmd_lemma(const RunConfig& c, std::ostream& out) {
  const auto g = load_group(c);
  const auto whole = Subgroup::whole(g);
  const auto options = check_options(c);
  VerificationReport report;
  auto need_subgroup = [&] {
    if (c.subgroup.empty() || c.subgroup == "all") throw ParseError("lemma " + c.lemma + " needs --subgroup");
    return resolve_subgroup(c.subgroup, whole);
  };
  auto need_chain = [&] {
    if (c.chain.empty()) throw ParseError("lemma " + c.lemma + " needs --chain H,K");
    return resolve_chain(c, g);
  };

  if (c.lemma == "regnormal") {
    const auto h = need_subgroup();
    if (!is_normal(h)) throw NotNormal(h.describe() + " is not normal in " + group_label(*g));
    report = normal_form_check(left_transversal(h), lemma_matrix(c, whole, g));
  } else if (c.lemma == "tower") {
    const auto [h, k] = need_chain();
    const auto t = left_transversal(h);
    const auto u = left_transversal(h, k);
    report = tower_check(t, u, lemma_matrix(c, whole, g));
  } else if (c.lemma == "l314") {
    report = regular_determinant_check(g);
  } else if (c.lemma == "flatten-det") {
    const auto context = c.subgroup.empty() ? whole : need_subgroup();
    if (!context.as_group()->is_abelian()) throw NotAbelian(context.describe() + " is not abelian");
    report = flatten_determinant_check(lemma_matrix(c, context, g));
  } else if (c.lemma == "l411") {
    const auto h = need_subgroup();
    if (!is_normal(h)) throw NotNormal(h.describe() + " is not normal in " + group_label(*g));
    const auto t = left_transversal(h);
    report = quotient_factorization_check(t, lemma_matrix(c, whole, g),
                                          irreducible_decomposition(quotient_group(t), irrep_seed(c)), options);
  } else if (c.lemma == "l412") {
    const auto [h, k] = need_chain();
    if (!is_normal(k)) throw NotNormal(k.describe() + " is not normal in " + group_label(*g));
    if (!is_normal(k, h)) throw NotNormal(k.describe() + " is not normal in " + h.describe());
    const auto t = left_transversal(h);
    const auto u = left_transversal(h, k);
    const auto v = tower_transversal(t, u);
    report = tower_factorization_check(t, u, lemma_matrix(c, whole, g),
                                       irreducible_decomposition(quotient_group(v), irrep_seed(c)),
                                       irreducible_decomposition(quotient_group(u), irrep_seed(c)), options);
  } else {
    throw ParseError("unknown lemma '" + c.lemma + "'");
  }
  return emit_reports(c, "lemma", {report}, out);
}

int cmd_bound(const RunConfig& c, std::ostream& out) {
  const auto g = load_group(c);
  const auto rows = degree_bound_check(g, irrep_seed(c));
  bool all = true;
  for (const auto& r : rows) all = all && r.passed;
  const int max_g = rows.empty() ? 0 : rows.front().max_group_degree;
  if (c.format == "json") {
    Json j;
    j["command"] = "bound";
    j["group"] = group_label(*g);
    j["seed"] = irrep_seed(c);
    j["max_group_degree"] = max_g;
    j["passed"] = all;
    Json list = Json::array();
    for (const auto& r : rows)
      list.push_back({{"subgroup", r.subgroup.describe()}, {"order", r.subgroup.order()}, {"index", r.index},
                      {"max_subgroup_degree", r.max_subgroup_degree}, {"bound", r.bound},
                      {"max_group_degree", r.max_group_degree}, {"slack", r.slack}, {"tight", r.tight},
                      {"passed", r.passed}});
    j["rows"] = std::move(list);
    out << j.dump(2) << "\n";
  } else {
    out << "max degree of " << group_label(*g) << ": " << max_g << "\n";
    for (const auto& r : rows) {
      out << (r.passed ? "PASS " : "FAIL ") << "H=" << r.subgroup.describe() << "  index " << r.index
          << "  max deg H " << r.max_subgroup_degree << "  bound " << r.bound << "  slack " << r.slack
          << (r.tight ? "  tight" : "") << "\n";
    }
  }
  return all ? kExitPass : kExitFail;
}

void add_group_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--catalog", c.catalog, "catalog group, e.g. symmetric:3, dihedral:4, cyclic:2*cyclic:3");
  sub->add_option("--cayley", c.cayley, "JSON file with order, table and names");
  sub->add_option("--perms", c.perms, "generators in cycle notation separated by ';'");
  sub->add_option("--degree", c.degree, "number of points for --perms");
  sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--seed", c.seed, "random seed (default: $GROUPDET_SEED or 0)");
  sub->add_option("--irrep-seed", c.irrep_seed, "seed for irreducible decompositions (default: --seed)");
}

void add_check_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--mode", c.mode, "symbolic or pit")->check(CLI::IsMember({"symbolic", "pit"}));
  sub->add_option("--points", c.n_points, "evaluation points for pit mode");
  sub->add_option("--tol", c.tolerance, "relative residual tolerance for pit mode");
  sub->add_flag("--timing", c.timing, "include elapsed time in reports");
}

}  // namespace

std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '{' || ch == '(') ++depth;
    if (ch == '}' || ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(trim(cur));
  return parts;
}

Subgroup resolve_subgroup(const std::string& raw, const Subgroup& within) {
  const std::string token = trim(raw);
  const auto& g = *within.parent();
  if (token == "G") return within;
  if (is_index_list(token)) {
    std::vector<int> seeds;
    for (const auto& item : split_top_level(token)) seeds.push_back(resolve_element(g, item));
    return generated_within(within, seeds);
  }
  if (token.size() >= 2 && token.front() == '{' && token.back() == '}') {
    std::vector<int> seeds;
    const auto inner = trim(token.substr(1, token.size() - 2));
    if (!inner.empty())
      for (const auto& item : split_top_level(inner)) seeds.push_back(resolve_element(g, item));
    return generated_within(within, seeds);
  }
  if (token.size() >= 2 && token.front() == 'C') {
    const int n = parse_int(token.substr(1), "cyclic subgroup order");
    for (int x : within.elements())
      if (g.element_order(x) == n) return generated_within(within, {x});
    throw NotASubgroup("no element of order " + std::to_string(n) + " in " + within.describe());
  }
  throw ParseError("cannot parse subgroup '" + token + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  if (const char* env = std::getenv("GROUPDET_SEED")) {
    try {
      c.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: GROUPDET_SEED is not an unsigned integer\n";
      return kExitConfig;
    }
  }

  CLI::App app{"Group determinants, regular representations and their factorizations"};
  app.name("groupdet");
  app.require_subcommand(1);

  auto* group = app.add_subcommand("group", "order, elements, center and subgroup normality");
  add_group_options(group, c);
  group->add_option("--subgroup", c.subgroup, "subgroup to report on, or 'all'");

  auto* theta = app.add_subcommand("theta", "the group determinant, expanded or evaluated");
  add_group_options(theta, c);
  theta->add_option("--mode", c.mode, "symbolic or pit")->check(CLI::IsMember({"symbolic", "pit"}));
  theta->add_option("--points", c.n_points, "evaluation points for pit mode");

  auto* irreps = app.add_subcommand("irreps", "degrees of the irreducible representations");
  add_group_options(irreps, c);
  irreps->add_option("--export", c.export_path, "write the representations as JSON");

  auto* verify = app.add_subcommand("verify", "factorization of the group determinant");
  add_group_options(verify, c);
  add_check_options(verify, c);
  verify->add_option("--subgroup", c.subgroup, "factor over this subgroup, or 'all'");

  auto* lemma = app.add_subcommand("lemma", "check one supporting identity");
  lemma->add_option("which", c.lemma, "regnormal, tower, l314, flatten-det, l411 or l412")
      ->required()
      ->check(CLI::IsMember({"regnormal", "tower", "l314", "flatten-det", "l411", "l412"}));
  add_group_options(lemma, c);
  add_check_options(lemma, c);
  lemma->add_option("--subgroup", c.subgroup, "subgroup H");
  lemma->add_option("--chain", c.chain, "subgroup chain H,K with K <= H");
  lemma->add_option("--matrix", c.matrix, "generic (alpha on the diagonal) or random")
      ->check(CLI::IsMember({"generic", "random"}));
  lemma->add_option("--size", c.size, "matrix size m");
  lemma->add_option("--terms", c.terms, "terms per entry of a random matrix");

  auto* bound = app.add_subcommand("bound", "irreducible degree bound over every subgroup");
  add_group_options(bound, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    if (*group) return cmd_group(c, out);
    if (*theta) return cmd_theta(c, out);
    if (*irreps) return cmd_irreps(c, out);
    if (*verify) return cmd_verify(c, out);
    if (*lemma) return cmd_lemma(c, out);
    if (*bound) return cmd_bound(c, out);
  } catch (const DecompositionFailed& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const NotAGroup& e) {
    err << "error: " << e.what() << " (witness " << e.witness()[0] << ", " << e.witness()[1] << ", "
        << e.witness()[2] << ")\n";
    return kExitConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace groupdet::cli
