#include "groupdet/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace groupdet {

namespace {

std::string triple(int a, int b, int c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> names,
                         const GroupLimits& limits, std::string label)
    : label_(std::move(label)) {
  const auto n = static_cast<int>(table.size());
  if (n == 0) throw MalformedTable("Cayley table is empty");
  if (n > limits.max_order) {
    throw GroupTooLarge("group order " + std::to_string(n) + " exceeds cap " +
                        std::to_string(limits.max_order));
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) {
      throw MalformedTable("Cayley table row " + std::to_string(a) + " has length " +
                           std::to_string(table[a].size()) + ", expected " + std::to_string(n));
    }
  }
  order_ = n;
  table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int v = table[a][b];
      if (v < 0 || v >= n) {
        throw NotAGroup("closure", {a, b, -1},
                        "closure fails: entry " + std::to_string(a) + "·" + std::to_string(b) +
                            " = " + std::to_string(v) + " is out of range");
      }
      table_[static_cast<std::size_t>(a) * n + b] = v;
    }
  }

  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw NotAGroup("identity", {-1, -1, -1}, "no two-sided identity element");

  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0) {
      throw NotAGroup("inverses", {a, -1, -1},
                      "element " + std::to_string(a) + " has no two-sided inverse");
    }
  }

  if (n <= limits.associativity_cap || !limits.unsafe_skip_associativity) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const int ab = mul(a, b);
        for (int c = 0; c < n; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) {
            throw NotAGroup("associativity", {a, b, c},
                            "associativity fails at witness triple " + triple(a, b, c));
          }
        }
      }
    }
  }

  if (names.empty()) {
    names_.resize(n);
    for (int a = 0; a < n; ++a) names_[a] = std::to_string(a);
  } else if (static_cast<int>(names.size()) != n) {
    throw MalformedTable("expected " + std::to_string(n) + " element names, got " +
                         std::to_string(names.size()));
  } else {
    names_ = std::move(names);
  }
}

GroupPtr make_group(std::vector<std::vector<int>> table, std::vector<std::string> names,
                    const GroupLimits& limits, std::string label) {
  return std::make_shared<const FiniteGroup>(std::move(table), std::move(names), limits,
                                             std::move(label));
}

std::optional<int> FiniteGroup::find(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> out(order_, std::vector<int>(order_));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) out[a][b] = mul(a, b);
  return out;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> out;
  for (int a = 0; a < order_; ++a) {
    bool central = true;
    for (int b = 0; b < order_ && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  std::vector<int> cls(order_, -1);
  std::vector<std::vector<int>> out;
  for (int a = 0; a < order_; ++a) {
    if (cls[a] >= 0) continue;
    std::vector<int> members;
    for (int g = 0; g < order_; ++g) {
      const int c = conjugate(g, a);
      if (cls[c] < 0) {
        cls[c] = static_cast<int>(out.size());
        members.push_back(c);
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return order_ == other.order_ && table_ == other.table_;
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<int> elements) : parent_(std::move(parent)) {
  const int n = parent_->order();
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  member_.assign(n, 0);
  for (int g : elements) {
    if (g < 0 || g >= n) throw NotASubgroup("element index " + std::to_string(g) + " out of range");
    member_[g] = 1;
  }
  if (elements.empty() || !member_[parent_->identity()]) {
    throw NotASubgroup("subset does not contain the identity");
  }
  for (int a : elements) {
    if (!member_[parent_->inverse(a)]) {
      throw NotASubgroup("subset not closed under inverse at " + parent_->name(a));
    }
    for (int b : elements) {
      if (!member_[parent_->mul(a, b)]) {
        throw NotASubgroup("subset not closed under multiplication at " + parent_->name(a) +
                           "·" + parent_->name(b));
      }
    }
  }
  if (n % static_cast<int>(elements.size()) != 0) {
    throw NotASubgroup("subgroup order does not divide group order");
  }
  elements_ = std::move(elements);
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<int> all(parent->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  const int e = parent->identity();
  return Subgroup(std::move(parent), {e});
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (parent_ != other.parent_ && !parent_->same_table(*other.parent_)) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](int g) { return other.contains(g); });
}

GroupPtr Subgroup::as_group() const {
  const int k = order();
  std::vector<int> local(parent_->order(), -1);
  for (int i = 0; i < k; ++i) local[elements_[i]] = i;
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  std::vector<std::string> names(k);
  for (int i = 0; i < k; ++i) {
    names[i] = parent_->name(elements_[i]);
    for (int j = 0; j < k; ++j) table[i][j] = local[parent_->mul(elements_[i], elements_[j])];
  }
  return make_group(std::move(table), std::move(names));
}

std::string Subgroup::describe() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ", ";
    out += parent_->name(elements_[i]);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------

Transversal::Transversal(Subgroup subgroup, std::vector<int> reps)
    : Transversal(Subgroup::whole(subgroup.parent()), subgroup, std::move(reps)) {}

Transversal::Transversal(Subgroup ambient, Subgroup subgroup, std::vector<int> reps)
    : ambient_(std::move(ambient)), subgroup_(std::move(subgroup)), reps_(std::move(reps)) {
  const auto& g = *subgroup_.parent();
  if (!subgroup_.is_subgroup_of(ambient_)) {
    throw NotASubgroupChain(subgroup_.describe() + " is not contained in " + ambient_.describe());
  }
  const int n = g.order();
  const int index = ambient_.order() / subgroup_.order();
  if (static_cast<int>(reps_.size()) != index) {
    throw NotASubgroup("transversal has " + std::to_string(reps_.size()) +
                       " representatives, index is " + std::to_string(index));
  }
  if (reps_.empty() || reps_[0] != g.identity()) {
    throw NotASubgroup("first coset representative must be the identity");
  }
  block_of_.assign(n, -1);
  h_of_.assign(n, -1);
  for (int i = 0; i < size(); ++i) {
    const int t = reps_[i];
    if (t < 0 || t >= n || !ambient_.contains(t)) {
      throw NotASubgroup("representative outside the ambient group");
    }
    for (int h : subgroup_.elements()) {
      const int x = g.mul(t, h);
      if (block_of_[x] >= 0) {
        throw NotASubgroup("cosets of representatives " + g.name(reps_[block_of_[x]]) + " and " +
                           g.name(t) + " overlap");
      }
      block_of_[x] = i;
      h_of_[x] = h;
    }
  }
}

Transversal left_transversal(const Subgroup& subgroup) {
  return left_transversal(Subgroup::whole(subgroup.parent()), subgroup);
}

Transversal left_transversal(const Subgroup& ambient, const Subgroup& subgroup) {
  const auto& g = *subgroup.parent();
  if (!subgroup.is_subgroup_of(ambient)) {
    throw NotASubgroupChain(subgroup.describe() + " is not contained in " + ambient.describe());
  }
  std::vector<char> covered(g.order(), 0);
  std::vector<int> reps;
  auto cover = [&](int t) {
    reps.push_back(t);
    for (int h : subgroup.elements()) covered[g.mul(t, h)] = 1;
  };
  cover(g.identity());
  for (int x : ambient.elements())
    if (!covered[x]) cover(x);
  return Transversal(ambient, subgroup, std::move(reps));
}

Subgroup subgroup_generated(const GroupPtr& group, std::span<const int> seeds) {
  const int n = group->order();
  std::vector<char> in(n, 0);
  std::vector<int> elements{group->identity()};
  in[group->identity()] = 1;
  for (int s : seeds) {
    if (s < 0 || s >= n) throw NotASubgroup("seed index " + std::to_string(s) + " out of range");
  }
  // Finite groups: closure under multiplication by the seeds suffices.
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (int s : seeds) {
      const int x = group->mul(elements[i], s);
      if (!in[x]) {
        in[x] = 1;
        elements.push_back(x);
      }
    }
  }
  return Subgroup(group, std::move(elements));
}

std::vector<Subgroup> all_subgroups(const GroupPtr& group, int max_order) {
  if (group->order() > max_order) {
    throw GroupTooLarge("subgroup enumeration is capped at order " + std::to_string(max_order));
  }
  std::vector<std::vector<int>> found;
  auto add = [&](const Subgroup& s) {
    if (std::find(found.begin(), found.end(), s.elements()) != found.end()) return false;
    found.push_back(s.elements());
    return true;
  };
  for (int g = 0; g < group->order(); ++g) {
    const int seed[] = {g};
    add(subgroup_generated(group, seed));
  }
  std::size_t done = 0;
  while (done < found.size()) {
    const std::size_t end = found.size();
    for (std::size_t i = done; i < end; ++i) {
      for (std::size_t j = 0; j < end; ++j) {
        std::vector<int> seeds = found[i];
        seeds.insert(seeds.end(), found[j].begin(), found[j].end());
        add(subgroup_generated(group, seeds));
      }
    }
    done = end;
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& f : found) out.emplace_back(group, std::move(f));
  return out;
}

bool is_normal(const Subgroup& subgroup) {
  return is_normal(subgroup, Subgroup::whole(subgroup.parent()));
}

bool is_normal(const Subgroup& subgroup, const Subgroup& ambient) {
  if (!subgroup.is_subgroup_of(ambient)) return false;
  const auto& g = *subgroup.parent();
  for (int x : ambient.elements())
    for (int h : subgroup.elements())
      if (!subgroup.contains(g.conjugate(x, h))) return false;
  return true;
}

GroupPtr quotient_group(const Transversal& transversal) {
  const auto& sub = transversal.subgroup();
  if (!is_normal(sub, transversal.ambient())) {
    throw NotNormal("subgroup " + sub.describe() + " is not normal in " +
                    transversal.ambient().describe());
  }
  const auto& g = *transversal.group();
  const int k = transversal.size();
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  std::vector<std::string> names(k);
  for (int i = 0; i < k; ++i) {
    names[i] = g.name(transversal.rep(i)) + "H";
    for (int j = 0; j < k; ++j) {
      table[i][j] = transversal.decompose(g.mul(transversal.rep(i), transversal.rep(j))).block;
    }
  }
  return make_group(std::move(table), std::move(names));
}

}  // namespace groupdet
