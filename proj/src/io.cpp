#include "groupdet/io.hpp"

#include <fstream>

namespace groupdet::io {

namespace {

template <class F>
auto parse_guard(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
}

Monomial read_exponents(const Json& j, const GroupPtr& universe) {
  const auto exps = j.at("exponents").get<std::vector<int>>();
  if (static_cast<int>(exps.size()) != universe->order()) {
    throw ParseError("exponent vector of length " + std::to_string(exps.size()) +
                     " for a universe of order " + std::to_string(universe->order()));
  }
  Monomial m(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 0xffff) throw ParseError("exponent out of range");
    m[i] = static_cast<std::uint16_t>(exps[i]);
  }
  return m;
}

}  // namespace

Json group_to_json(const FiniteGroup& group) {
  Json j;
  j["order"] = group.order();
  j["table"] = group.table();
  j["names"] = group.names();
  return j;
}

GroupPtr group_from_json(const Json& j, const GroupLimits& limits) {
  auto [table, names] = parse_guard("group JSON", [&] {
    if (!j.is_object()) throw ParseError("group JSON must be an object");
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(table.size())) {
      throw MalformedTable("declared order " + std::to_string(j.at("order").get<int>()) +
                           " but table has " + std::to_string(table.size()) + " rows");
    }
    return std::pair{std::move(table), std::move(names)};
  });
  return make_group(std::move(table), std::move(names), limits);
}

GroupPtr read_group_file(const std::string& path, const GroupLimits& limits) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  const auto j = parse_guard(path, [&] { return Json::parse(in); });
  return group_from_json(j, limits);
}

Json polynomial_to_json(const RationalPolynomial& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    out.push_back({{"exponents", m}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return out;
}

Json polynomial_to_json(const ComplexPolynomial& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) out.push_back({{"exponents", m}, {"re", c.real()}, {"im", c.imag()}});
  return out;
}

RationalPolynomial rational_polynomial_from_json(const Json& j, const GroupPtr& universe) {
  return parse_guard("polynomial JSON", [&] {
    RationalPolynomial p(universe);
    for (const auto& term : j) {
      // Numerators and denominators may be strings (arbitrary size) or integers.
      auto big = [](const Json& v) {
        return v.is_string() ? mpz_class(v.get<std::string>()) : mpz_class(v.get<long>());
      };
      const mpz_class den = big(term.at("den"));
      if (den == 0) throw ParseError("zero denominator");
      Rational c(big(term.at("num")), den);
      c.canonicalize();
      p.add_term(read_exponents(term, universe), c);
    }
    return p;
  });
}

ComplexPolynomial complex_polynomial_from_json(const Json& j, const GroupPtr& universe) {
  return parse_guard("polynomial JSON", [&] {
    ComplexPolynomial p(universe);
    for (const auto& term : j) {
      p.add_term(read_exponents(term, universe),
                 Complex(term.at("re").get<double>(), term.at("im").get<double>()));
    }
    return p;
  });
}

Json irreps_to_json(const IrrepSet& irreps) {
  Json j;
  j["group"] = irreps.group->label();
  j["order"] = irreps.group->order();
  j["seed"] = irreps.seed;
  Json list = Json::array();
  for (const auto& rep : irreps.irreps) {
    Json matrices = Json::array();
    for (const auto& m : rep.matrices) {
      Json rows = Json::array();
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(std::move(row));
      }
      matrices.push_back(std::move(rows));
    }
    list.push_back({{"degree", rep.degree}, {"matrices", std::move(matrices)}});
  }
  j["irreps"] = std::move(list);
  return j;
}

IrrepSet irreps_from_json(const Json& j, const GroupPtr& group) {
  return parse_guard("irrep JSON", [&] {
    if (j.at("order").get<int>() != group->order()) throw ParseError("irrep JSON is for a group of another order");
    IrrepSet set{group, j.at("seed").get<std::uint64_t>(), {}};
    for (const auto& item : j.at("irreps")) {
      Representation rep{group, item.at("degree").get<int>(), {}};
      for (const auto& rows : item.at("matrices")) {
        ComplexMatrix m(rep.degree, rep.degree);
        if (static_cast<int>(rows.size()) != rep.degree) throw ParseError("matrix row count differs from degree");
        for (int r = 0; r < rep.degree; ++r) {
          if (static_cast<int>(rows[r].size()) != rep.degree) throw ParseError("matrix column count differs from degree");
          for (int c = 0; c < rep.degree; ++c) m(r, c) = {rows[r][c][0].get<double>(), rows[r][c][1].get<double>()};
        }
        rep.matrices.push_back(std::move(m));
      }
      if (static_cast<int>(rep.matrices.size()) != group->order()) throw ParseError("one matrix per element expected");
      set.irreps.push_back(std::move(rep));
    }
    return set;
  });
}

Json permutations_to_json(const std::vector<Permutation>& generators) {
  Json out = Json::array();
  for (const auto& p : generators) out.push_back(format_cycles(p));
  return out;
}

std::vector<Permutation> permutations_from_json(const Json& j, int degree) {
  const auto strings = parse_guard("permutation JSON", [&] { return j.get<std::vector<std::string>>(); });
  std::vector<Permutation> out;
  out.reserve(strings.size());
  for (const auto& s : strings) out.push_back(parse_cycles(s, degree));
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
  if (!out) throw ParseError("write to " + path + " failed");
}

}  // namespace groupdet::io
