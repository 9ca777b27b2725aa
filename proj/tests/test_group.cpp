#include <gtest/gtest.h>

#include <map>
#include <random>

#include "groupdet/group.hpp"
#include "groupdet/io.hpp"
#include "oracles.hpp"

using namespace groupdet;

namespace {

// Smallest non-associative loop: identity 0, every element self-inverse.
const std::vector<std::vector<int>> kLoop5 = {
    {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};

std::vector<GroupPtr> small_catalog() {
  return {catalog::cyclic(1),      catalog::cyclic(2),      catalog::cyclic(6),
          catalog::dihedral(3),    catalog::dihedral(4),    catalog::symmetric(3),
          catalog::symmetric(4),   catalog::alternating(4), catalog::quaternion8(),
          catalog::direct_product(catalog::cyclic(2), catalog::cyclic(2))};
}

std::multiset<int> order_census(const FiniteGroup& g) {
  std::multiset<int> out;
  for (int a = 0; a < g.order(); ++a) out.insert(g.element_order(a));
  return out;
}

}  // namespace

TEST(FromCayleyTable, TrivialGroup) {
  auto g = make_group({{0}});
  EXPECT_EQ(g->order(), 1);
  EXPECT_EQ(g->identity(), 0);
}

TEST(FromCayleyTable, CyclicTwo) {
  auto g = make_group({{0, 1}, {1, 0}});
  EXPECT_EQ(g->order(), 2);
  EXPECT_EQ(g->inverse(1), 1);
  EXPECT_TRUE(g->is_abelian());
}

TEST(FromCayleyTable, SymmetricThreeFromPermutationComposition) {
  // Oracle: compose the six permutations of {0,1,2} by hand.
  std::vector<Permutation> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      Permutation ab(3);
      for (int x = 0; x < 3; ++x) ab[x] = perms[a][perms[b][x]];
      table[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), ab) - perms.begin());
    }
  auto g = make_group(table);
  EXPECT_EQ(g->order(), 6);
  int involutions = 0;
  for (int a = 0; a < 6; ++a) involutions += g->element_order(a) == 2;
  EXPECT_EQ(involutions, 3);
  EXPECT_TRUE(g->same_table(*catalog::symmetric(3)));
}

TEST(FromCayleyTable, RejectsNonAssociativeWithWitness) {
  try {
    make_group(kLoop5);
    FAIL() << "expected NotAGroup";
  } catch (const NotAGroup& e) {
    EXPECT_EQ(e.axiom(), "associativity");
    const auto [a, b, c] = e.witness();
    const auto& t = kLoop5;
    EXPECT_NE(t[t[a][b]][c], t[a][t[b][c]]);
  }
}

TEST(FromCayleyTable, RejectsBadShapesAndAxioms) {
  EXPECT_THROW(make_group({}), MalformedTable);
  EXPECT_THROW(make_group({{0, 1}, {1}}), MalformedTable);
  EXPECT_THROW(make_group({{0, 2}, {1, 0}}), NotAGroup);  // closure
  EXPECT_THROW(make_group({{1, 1}, {1, 0}}), NotAGroup);  // no identity
  EXPECT_THROW(make_group({{0, 1, 2}, {1, 1, 1}, {2, 1, 0}}), NotAGroup);
  EXPECT_THROW(make_group({{0}}, {"e", "x"}), MalformedTable);
}

TEST(FromCayleyTable, AssociativityCapAndUnsafeFlag) {
  GroupLimits limits;
  limits.associativity_cap = 2;
  EXPECT_THROW(make_group(kLoop5, {}, limits), NotAGroup);
  limits.unsafe_skip_associativity = true;
  EXPECT_NO_THROW(make_group(kLoop5, {}, limits));
}

TEST(Catalog, TrivialAndParameterBounds) {
  EXPECT_EQ(catalog::cyclic(1)->order(), 1);
  EXPECT_THROW(catalog::cyclic(0), ParameterOutOfRange);
  EXPECT_THROW(catalog::symmetric(6), ParameterOutOfRange);
  EXPECT_THROW(catalog::alternating(0), ParameterOutOfRange);
  EXPECT_THROW(catalog::dihedral(0), ParameterOutOfRange);
  EXPECT_THROW(catalog::from_name("cyclic"), ParseError);
  EXPECT_THROW(catalog::from_name("klein:4"), ParseError);
}

TEST(Catalog, QuaternionHasOneInvolution) {
  auto q = catalog::quaternion8();
  EXPECT_EQ(q->order(), 8);
  int involutions = 0;
  for (int a = 0; a < 8; ++a) involutions += q->element_order(a) == 2;
  EXPECT_EQ(involutions, 1);
}

TEST(Catalog, DirectProductC2C3MatchesC6Census) {
  auto p = catalog::direct_product(catalog::cyclic(2), catalog::cyclic(3));
  EXPECT_EQ(order_census(*p), order_census(*catalog::cyclic(6)));
  EXPECT_EQ(p->label(), "cyclic:2*cyclic:3");
  EXPECT_TRUE(catalog::from_name("cyclic:2*cyclic:3")->same_table(*p));
}

TEST(Catalog, DocumentedOrderings) {
  auto c = catalog::cyclic(5);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) EXPECT_EQ(c->mul(a, b), (a + b) % 5);
  auto d = catalog::dihedral(4);
  EXPECT_EQ(d->order(), 8);
  EXPECT_EQ(d->name(1), "r");
  EXPECT_EQ(d->name(4), "s");
  for (int k = 0; k < 4; ++k) EXPECT_EQ(d->element_order(k + 4), 2);
  auto s3 = catalog::symmetric(3);
  EXPECT_EQ(s3->name(0), "e");
  EXPECT_EQ(s3->name(1), "(2 3)");
  EXPECT_EQ(s3->name(4), "(1 3 2)");
  EXPECT_EQ(catalog::alternating(4)->order(), 12);
  EXPECT_EQ(catalog::symmetric(5)->order(), 120);
  EXPECT_EQ(catalog::alternating(5)->order(), 60);
}

TEST(Catalog, TablesAreAssociativeWithInvolutiveInverse) {
  for (const auto& g : small_catalog()) {
    const int n = g->order();
    for (int a = 0; a < n; ++a) {
      EXPECT_EQ(g->inverse(g->inverse(a)), a);
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) ASSERT_EQ(g->mul(g->mul(a, b), c), g->mul(a, g->mul(b, c)));
    }
  }
}

TEST(Permutations, ParseAndFormat) {
  EXPECT_EQ(parse_cycles("(1 2 3)", 3), (Permutation{1, 2, 0}));
  EXPECT_EQ(parse_cycles("()", 2), (Permutation{0, 1}));
  // Right-to-left: (1 2)(2 3) sends 3 -> 2 -> 1.
  EXPECT_EQ(parse_cycles("(1 2)(2 3)", 3)[2], 0);
  EXPECT_EQ(format_cycles(parse_cycles("(3 1 2)", 3)), "(1 2 3)");
  EXPECT_EQ(format_cycles({0, 1, 2}), "()");
  EXPECT_THROW(parse_cycles("(1 4)", 3), ParseError);
  EXPECT_THROW(parse_cycles("(1 1)", 3), ParseError);
  EXPECT_THROW(parse_cycles("(1 2", 3), ParseError);
  EXPECT_THROW(parse_cycles("(a b)", 3), ParseError);
}

TEST(Permutations, GeneratedGroups) {
  EXPECT_EQ(from_permutations({"(1 2)"}, 2)->order(), 2);
  auto s3 = from_permutations({"(1 2)", "(1 2 3)"}, 3);
  EXPECT_EQ(s3->order(), 6);
  EXPECT_EQ(s3->name(0), "e");
  auto d4 = from_permutations({"(1 2 3 4)", "(1 3)"}, 4);
  EXPECT_EQ(d4->order(), 8);
  EXPECT_EQ(order_census(*d4), order_census(*catalog::dihedral(4)));
  EXPECT_THROW(from_permutations({"(1 2 3 4 5)", "(1 2)"}, 5, 100), GroupTooLarge);
}

TEST(Permutations, JsonRoundTrip) {
  const std::vector<Permutation> gens = {parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)};
  const auto j = io::permutations_to_json(gens);
  EXPECT_EQ(j.dump(), R"json(["(1 2)","(1 2 3)"])json");
  EXPECT_EQ(io::permutations_from_json(j, 3), gens);
}

TEST(GroupJson, RoundTrip) {
  for (const auto& g : small_catalog()) {
    const auto back = io::group_from_json(io::group_to_json(*g));
    EXPECT_TRUE(back->same_table(*g));
    EXPECT_EQ(back->names(), g->names());
  }
  EXPECT_THROW(io::group_from_json(io::Json::parse(R"({"order": 3, "table": [[0]]})")), MalformedTable);
  EXPECT_THROW(io::group_from_json(io::Json::parse(R"({"table": "x"})")), ParseError);
}

TEST(SubgroupGenerated, Examples) {
  auto s3 = catalog::symmetric(3);
  EXPECT_TRUE(subgroup_generated(s3, std::vector<int>{}).is_trivial());
  std::vector<int> all(6);
  std::iota(all.begin(), all.end(), 0);
  EXPECT_TRUE(subgroup_generated(s3, all).is_whole());
  EXPECT_EQ(subgroup_generated(s3, std::vector<int>{4}).order(), 3);
}

TEST(SubgroupType, Validation) {
  auto s3 = catalog::symmetric(3);
  EXPECT_THROW(Subgroup(s3, {1}), NotASubgroup);
  EXPECT_THROW(Subgroup(s3, {0, 3}), NotASubgroup);
  EXPECT_THROW(Subgroup(s3, {0, 1, 2}), NotASubgroup);
  const Subgroup c3(s3, {4, 0, 3});
  EXPECT_EQ(c3.elements(), (std::vector<int>{0, 3, 4}));
  EXPECT_EQ(c3.describe(), "{e, (1 2 3), (1 3 2)}");
  EXPECT_EQ(c3.index(), 2);
}

TEST(AllSubgroups, ExamplesAndOrdering) {
  EXPECT_EQ(all_subgroups(catalog::cyclic(1)).size(), 1u);
  auto c6 = all_subgroups(catalog::cyclic(6));
  ASSERT_EQ(c6.size(), 4u);
  std::vector<int> orders;
  for (const auto& h : c6) orders.push_back(h.order());
  EXPECT_EQ(orders, (std::vector<int>{1, 2, 3, 6}));
  auto s3 = all_subgroups(catalog::symmetric(3));
  ASSERT_EQ(s3.size(), 6u);
  EXPECT_EQ(s3[4].order(), 3);
  EXPECT_THROW(all_subgroups(catalog::symmetric(5)), GroupTooLarge);
}

TEST(AllSubgroups, MatchesSubsetEnumeration) {
  for (const auto& g : small_catalog()) {
    if (g->order() > 12) continue;
    std::vector<std::vector<int>> found;
    for (const auto& h : all_subgroups(g)) found.push_back(h.elements());
    EXPECT_EQ(found, oracle::subgroups_by_subsets(*g)) << g->label();
  }
}

TEST(AllSubgroups, KnownCounts) {
  EXPECT_EQ(all_subgroups(catalog::dihedral(4)).size(), 10u);
  EXPECT_EQ(all_subgroups(catalog::quaternion8()).size(), 6u);
  EXPECT_EQ(all_subgroups(catalog::alternating(4)).size(), 10u);
  EXPECT_EQ(all_subgroups(catalog::symmetric(4)).size(), 30u);
}

TEST(LeftTransversal, Examples) {
  auto s3 = catalog::symmetric(3);
  EXPECT_EQ(left_transversal(Subgroup::whole(s3)).reps(), (std::vector<int>{0}));
  EXPECT_EQ(left_transversal(Subgroup::trivial(s3)).reps(), (std::vector<int>{0, 1, 2, 3, 4, 5}));
  const auto t = left_transversal(subgroup_generated(s3, std::vector<int>{4}));
  EXPECT_EQ(t.reps(), (std::vector<int>{0, 1}));
  EXPECT_EQ(s3->element_order(t.rep(1)), 2);
}

TEST(LeftTransversal, Deterministic) {
  auto s4 = catalog::symmetric(4);
  for (const auto& h : all_subgroups(s4)) EXPECT_EQ(left_transversal(h), left_transversal(h));
}

TEST(CosetDecompose, Examples) {
  auto c4 = catalog::cyclic(4);
  const Transversal t(Subgroup(c4, {0, 2}), {0, 1});
  EXPECT_EQ(t.decompose(0), (CosetPosition{0, 0}));
  EXPECT_EQ(t.decompose(1), (CosetPosition{1, 0}));
  EXPECT_EQ(t.decompose(3), (CosetPosition{1, 2}));
  EXPECT_THROW(Transversal(Subgroup(c4, {0, 2}), {0, 2}), NotASubgroup);
  EXPECT_THROW(Transversal(Subgroup(c4, {0, 2}), {1, 0}), NotASubgroup);
}

TEST(CosetDecompose, IsABijection) {
  for (const auto& g : small_catalog()) {
    for (const auto& h : all_subgroups(g)) {
      const auto t = left_transversal(h);
      std::set<std::pair<int, int>> seen;
      for (int x = 0; x < g->order(); ++x) {
        const auto p = t.decompose(x);
        ASSERT_TRUE(h.contains(p.h));
        ASSERT_EQ(g->mul(t.rep(p.block), p.h), x);
        seen.insert({p.block, p.h});
      }
      EXPECT_EQ(static_cast<int>(seen.size()), g->order());
    }
  }
}

TEST(IsNormal, Examples) {
  auto s3 = catalog::symmetric(3);
  EXPECT_TRUE(is_normal(Subgroup::trivial(s3)));
  EXPECT_FALSE(is_normal(subgroup_generated(s3, std::vector<int>{1})));
  for (const auto& g : small_catalog())
    for (const auto& h : all_subgroups(g))
      if (h.index() == 2) EXPECT_TRUE(is_normal(h));
}

TEST(IsNormal, MatchesConjugationOracle) {
  for (const auto& g : small_catalog())
    for (const auto& h : all_subgroups(g)) {
      bool normal = true;
      for (int x = 0; x < g->order(); ++x)
        for (int y : h.elements()) normal = normal && h.contains(g->mul(g->mul(x, y), g->inverse(x)));
      EXPECT_EQ(is_normal(h), normal);
    }
}

TEST(QuotientGroup, CosetsFollowTransversal) {
  auto d4 = catalog::dihedral(4);
  const auto center = Subgroup(d4, {0, 2});
  const auto t = left_transversal(center);
  const auto q = quotient_group(t);
  EXPECT_EQ(q->order(), 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) EXPECT_EQ(q->mul(a, b), t.decompose(d4->mul(t.rep(a), t.rep(b))).block);
  EXPECT_THROW(quotient_group(left_transversal(Subgroup(d4, {0, 4}))), NotNormal);
}

TEST(ConjugacyClasses, CountsMatchOracle) {
  for (const auto& g : small_catalog())
    EXPECT_EQ(static_cast<int>(g->conjugacy_classes().size()), oracle::class_count(*g)) << g->label();
}
