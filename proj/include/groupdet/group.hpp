#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "groupdet/errors.hpp"

namespace groupdet {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct GroupLimits {
  // Associativity is verified in O(n^3) for groups up to this order.
  int associativity_cap = 128;
  // Above the cap, associativity is still checked unless this is set.
  bool unsafe_skip_associativity = false;
  int max_order = 1024;
};

// A finite group given by its Cayley table. Elements are the indices
// 0..order()-1; mul(a, b) is the index of a·b.
class FiniteGroup {
 public:
  // Validates closure, identity, inverses and associativity. Throws
  // MalformedTable or NotAGroup.
  explicit FiniteGroup(std::vector<std::vector<int>> table,
                       std::vector<std::string> names = {},
                       const GroupLimits& limits = {}, std::string label = {});

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inverse(int a) const { return inverse_[a]; }
  // a·b·a⁻¹
  int conjugate(int a, int b) const { return mul(mul(a, b), inverse(a)); }

  // Free-form description used in reports, e.g. "symmetric:3".
  const std::string& label() const { return label_; }
  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(const std::string& name) const;

  std::vector<std::vector<int>> table() const;

  int element_order(int a) const;
  bool is_abelian() const;
  std::vector<int> center() const;
  // Classes sorted by their smallest element; each class sorted ascending.
  std::vector<std::vector<int>> conjugacy_classes() const;

  bool same_table(const FiniteGroup& other) const;

 private:
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::string> names_;
  std::string label_;
};

GroupPtr make_group(std::vector<std::vector<int>> table, std::vector<std::string> names = {},
                    const GroupLimits& limits = {}, std::string label = {});

// Sorted set of elements of a parent group closed under multiplication and
// inversion.
class Subgroup {
 public:
  // `elements` need not be sorted; throws NotASubgroup if the set is not a
  // subgroup of `parent`.
  Subgroup(GroupPtr parent, std::vector<int> elements);

  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  int index() const { return parent_->order() / order(); }
  bool contains(int g) const { return member_[g] != 0; }
  bool is_whole() const { return order() == parent_->order(); }
  bool is_trivial() const { return order() == 1; }
  bool is_subgroup_of(const Subgroup& other) const;

  // The subgroup as a group in its own right. Element i of the result is
  // elements()[i]; names are inherited.
  GroupPtr as_group() const;

  // "{e, a^2}" style description using parent element names.
  std::string describe() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  GroupPtr parent_;
  std::vector<int> elements_;
  std::vector<char> member_;
};

struct CosetPosition {
  int block = 0;  // index into the transversal
  int h = 0;      // element of the subgroup, as a parent-group index

  friend bool operator==(const CosetPosition&, const CosetPosition&) = default;
};

// Complete list of left coset representatives reps[i]·K of a subgroup K
// inside an ambient subgroup H (by default the whole group). reps[0] is
// always the identity.
class Transversal {
 public:
  Transversal(Subgroup subgroup, std::vector<int> reps);
  Transversal(Subgroup ambient, Subgroup subgroup, std::vector<int> reps);

  const Subgroup& ambient() const { return ambient_; }
  const Subgroup& subgroup() const { return subgroup_; }
  const GroupPtr& group() const { return subgroup_.parent(); }
  const std::vector<int>& reps() const { return reps_; }
  int rep(int i) const { return reps_[i]; }
  int size() const { return static_cast<int>(reps_.size()); }

  // The unique (i, h) with g = reps[i]·h. g must lie in the ambient group.
  CosetPosition decompose(int g) const {
    if (block_of_[g] < 0) throw NotASubgroup("element outside the ambient group of the transversal");
    return {block_of_[g], h_of_[g]};
  }

  friend bool operator==(const Transversal& a, const Transversal& b) {
    return a.ambient_ == b.ambient_ && a.subgroup_ == b.subgroup_ && a.reps_ == b.reps_;
  }

 private:
  Subgroup ambient_;
  Subgroup subgroup_;
  std::vector<int> reps_;
  std::vector<int> block_of_;
  std::vector<int> h_of_;
};

// reps[0] = e, then repeatedly the smallest element index not yet covered.
Transversal left_transversal(const Subgroup& subgroup);
Transversal left_transversal(const Subgroup& ambient, const Subgroup& subgroup);

Subgroup subgroup_generated(const GroupPtr& group, std::span<const int> seeds);

// Every subgroup, ascending by order and then by element list. Built by
// closing the cyclic subgroups under pairwise joins.
std::vector<Subgroup> all_subgroups(const GroupPtr& group, int max_order = 48);

bool is_normal(const Subgroup& subgroup);
// Normality of `subgroup` inside `ambient`; false if it is not contained.
bool is_normal(const Subgroup& subgroup, const Subgroup& ambient);

// H/K with cosets numbered by their representative's position in T, where
// H is the ambient group of T. Throws NotNormal.
GroupPtr quotient_group(const Transversal& transversal);

// Catalog constructors with fixed element orderings:
//   cyclic      residues 0..n-1, names e, a, a^2, ...
//   dihedral    rotations r^k then reflections r^k s (order 2n)
//   symmetric   permutations of {1..n} in lexicographic one-line order
//   alternating even permutations, same order as symmetric
//   quaternion8 1, -1, i, -i, j, -j, k, -k
//   direct      (a, b) at index a·|B| + b
namespace catalog {

GroupPtr cyclic(int n);
GroupPtr dihedral(int n);
GroupPtr symmetric(int n);
GroupPtr alternating(int n);
GroupPtr quaternion8();
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

// Parses "cyclic:6", "dihedral:4", "symmetric:3", "alternating:4",
// "quaternion8", and products joined with '*', e.g. "cyclic:2*cyclic:3".
GroupPtr from_name(const std::string& entry);

}  // namespace catalog

// Permutations of {0..degree-1} as image vectors; composition applies the
// right factor first: (p*q)(x) = p(q(x)).
using Permutation = std::vector<int>;

Permutation compose(const Permutation& p, const Permutation& q);
// "(1 2)(3 4)", 1-based points. "()" or "" is the identity.
Permutation parse_cycles(const std::string& text, int degree);
// Canonical cycle notation: cycles start at their smallest point, ordered by
// that point, fixed points omitted, identity printed as "()".
std::string format_cycles(const Permutation& p);

// Closure of the generators; elements are numbered in breadth-first
// discovery order from the identity.
GroupPtr from_permutations(const std::vector<std::string>& generators, int degree,
                           int max_order = 1024);

}  // namespace groupdet
