#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "groupdet/group.hpp"

namespace groupdet {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ParameterOutOfRange(message);
}

std::string power_name(const std::string& base, int k) {
  if (k == 0) return "";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

GroupPtr permutation_group(const std::vector<Permutation>& perms, std::string label) {
  std::map<Permutation, int> index;
  for (int i = 0; i < static_cast<int>(perms.size()); ++i) index[perms[i]] = i;
  const int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    const auto cycles = format_cycles(perms[i]);
    names[i] = cycles == "()" ? "e" : cycles;
    for (int j = 0; j < n; ++j) table[i][j] = index.at(compose(perms[i], perms[j]));
  }
  return make_group(std::move(table), std::move(names), {}, std::move(label));
}

bool is_even(const Permutation& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

}  // namespace

namespace catalog {

GroupPtr cyclic(int n) {
  require(n >= 1 && n <= 1024, "cyclic(n) requires 1 <= n <= 1024");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = a == 0 ? "e" : power_name("a", a);
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return make_group(std::move(table), std::move(names), {}, "cyclic:" + std::to_string(n));
}

GroupPtr dihedral(int n) {
  require(n >= 1 && n <= 512, "dihedral(n) requires 1 <= n <= 512");
  // index k < n is r^k, index n + k is r^k s; s r = r^{-1} s.
  const int order = 2 * n;
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  std::vector<std::string> names(order);
  for (int x = 0; x < order; ++x) {
    const int a = x % n, i = x / n;
    names[x] = i == 0 ? (a == 0 ? "e" : power_name("r", a)) : power_name("r", a) + "s";
    for (int y = 0; y < order; ++y) {
      const int b = y % n, j = y / n;
      const int rot = ((a + (i ? -b : b)) % n + n) % n;
      table[x][y] = ((i + j) % 2) * n + rot;
    }
  }
  return make_group(std::move(table), std::move(names), {}, "dihedral:" + std::to_string(n));
}

GroupPtr symmetric(int n) {
  require(n >= 1 && n <= 5, "symmetric(n) requires 1 <= n <= 5");
  std::vector<Permutation> perms;
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return permutation_group(perms, "symmetric:" + std::to_string(n));
}

GroupPtr alternating(int n) {
  require(n >= 1 && n <= 5, "alternating(n) requires 1 <= n <= 5");
  std::vector<Permutation> perms;
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  do
    if (is_even(p)) perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return permutation_group(perms, "alternating:" + std::to_string(n));
}

GroupPtr quaternion8() {
  // index = 2·unit + negative, unit ∈ {1, i, j, k}
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const char* kNames[8] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int neg = (x % 2 + y % 2 + kSign[u][v]) % 2;
      table[x][y] = 2 * kUnit[u][v] + neg;
    }
  }
  return make_group(std::move(table), std::vector<std::string>(kNames, kNames + 8), {},
                    "quaternion8");
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const int na = a->order(), nb = b->order();
  require(na * nb <= 1024, "direct product order exceeds 1024");
  const int n = na * nb;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int x = 0; x < n; ++x) {
    names[x] = "(" + a->name(x / nb) + "," + b->name(x % nb) + ")";
    for (int y = 0; y < n; ++y) {
      table[x][y] = a->mul(x / nb, y / nb) * nb + b->mul(x % nb, y % nb);
    }
  }
  return make_group(std::move(table), std::move(names), {}, a->label() + "*" + b->label());
}

GroupPtr from_name(const std::string& entry) {
  if (const auto star = entry.find('*'); star != std::string::npos) {
    return direct_product(from_name(entry.substr(0, star)), from_name(entry.substr(star + 1)));
  }
  const auto colon = entry.find(':');
  const std::string name = entry.substr(0, colon);
  if (name == "quaternion8" || name == "Q8") {
    if (colon != std::string::npos) throw ParseError("quaternion8 takes no parameter");
    return quaternion8();
  }
  if (colon == std::string::npos) throw ParseError("catalog entry '" + entry + "' needs NAME:PARAM");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(entry.substr(colon + 1), &used);
    if (used != entry.size() - colon - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ParseError("bad catalog parameter in '" + entry + "'");
  }
  if (name == "cyclic") return cyclic(n);
  if (name == "dihedral") return dihedral(n);
  if (name == "symmetric") return symmetric(n);
  if (name == "alternating") return alternating(n);
  throw ParseError("unknown catalog group '" + name + "'");
}

}  // namespace catalog
}  // namespace groupdet
