#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "groupdet/group.hpp"

namespace groupdet {

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) r[x] = p[q[x]];
  return r;
}

Permutation parse_cycles(const std::string& text, int degree) {
  if (degree < 1) throw ParseError("permutation degree must be positive");
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle string \"" + text + "\"");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) throw ParseError("unterminated cycle in \"" + text + "\"");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ParseError("unexpected character '" + std::string(1, text[pos]) + "' in \"" + text +
                         "\"");
      }
      int point = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        point = point * 10 + (text[pos] - '0');
        if (point > 1'000'000) throw ParseError("point out of range in \"" + text + "\"");
        ++pos;
      }
      if (point < 1 || point > degree) {
        throw ParseError("point " + std::to_string(point) + " outside 1.." +
                         std::to_string(degree));
      }
      if (std::find(cycle.begin(), cycle.end(), point - 1) != cycle.end()) {
        throw ParseError("repeated point in cycle \"" + text + "\"");
      }
      cycle.push_back(point - 1);
    }
    // Cycles compose right to left, like the permutation product.
    Permutation c(degree);
    std::iota(c.begin(), c.end(), 0);
    for (std::size_t i = 0; i < cycle.size(); ++i) c[cycle[i]] = cycle[(i + 1) % cycle.size()];
    p = compose(p, c);
    skip_space();
  }
  return p;
}

std::string format_cycles(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  std::ostringstream os;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == static_cast<int>(start)) continue;
    os << '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) os << ' ';
      os << x + 1;
      first = false;
      x = static_cast<std::size_t>(p[x]);
    }
    os << ')';
  }
  const auto out = os.str();
  return out.empty() ? "()" : out;
}

GroupPtr from_permutations(const std::vector<std::string>& generators, int degree,
                           int max_order) {
  std::vector<Permutation> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(parse_cycles(g, degree));

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> elements{id};
  std::map<Permutation, int> index{{id, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& s : gens) {
      auto x = compose(elements[i], s);
      if (index.contains(x)) continue;
      if (static_cast<int>(elements.size()) >= max_order) {
        throw GroupTooLarge("permutation group exceeds order cap " + std::to_string(max_order));
      }
      index.emplace(x, static_cast<int>(elements.size()));
      elements.push_back(std::move(x));
    }
  }

  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = i == 0 ? "e" : format_cycles(elements[i]);
    for (int j = 0; j < n; ++j) table[i][j] = index.at(compose(elements[i], elements[j]));
  }
  return make_group(std::move(table), std::move(names));
}

}  // namespace groupdet
