#include <gtest/gtest.h>

#include <set>

#include "orelab/catalog.hpp"
#include "orelab/errors.hpp"
#include "orelab/maxden.hpp"
#include "orelab/product.hpp"
#include "support/oracle.hpp"

using namespace orelab;

namespace {

oracle::ESet E(const Subset& s) { return s.elements(); }

std::set<oracle::ESet> family(const std::vector<MulSet>& v) {
  std::set<oracle::ESet> out;
  for (auto& s : v) out.insert(E(s.elements()));
  return out;
}

}  // namespace

TEST(Saturated, Zmod6) {
  auto sat = saturated_denominator_sets(zmod(6));
  ASSERT_EQ(sat.size(), 3u);
  EXPECT_EQ(E(sat[0].ideal), (oracle::ESet{0}));
  EXPECT_EQ(E(sat[0].set.elements()), (oracle::ESet{1, 5}));
  EXPECT_EQ(E(sat[1].ideal), (oracle::ESet{0, 3}));
  EXPECT_EQ(E(sat[1].set.elements()), (oracle::ESet{1, 2, 4, 5}));
  EXPECT_EQ(E(sat[2].ideal), (oracle::ESet{0, 2, 4}));
  EXPECT_EQ(E(sat[2].set.elements()), (oracle::ESet{1, 3, 5}));
}

TEST(Saturated, FieldAndZmod4) {
  auto f = saturated_denominator_sets(zmod(5));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].set.size(), 4u);
  auto z4 = saturated_denominator_sets(zmod(4));
  ASSERT_EQ(z4.size(), 1u);
  EXPECT_EQ(E(z4[0].set.elements()), (oracle::ESet{1, 3}));
}

TEST(BruteForce, MatchesOracleAndSaturates) {
  for (const char* spec : {"zmod(6)", "zmod(4)", "zmod(2)", "zmod(8)", "upper_triangular(gf(2),2)"}) {
    auto r = construct(spec);
    auto lib = brute_force_denominator_sets(r);
    auto ref = oracle::all_denominator_sets(r);
    EXPECT_EQ(family(lib), std::set<oracle::ESet>(ref.begin(), ref.end())) << spec;
    std::set<oracle::ESet> saturations;
    for (auto& s : ref) saturations.insert(oracle::saturation(r, s));
    std::set<oracle::ESet> expected;
    for (auto& s : saturated_denominator_sets(r)) expected.insert(E(s.set.elements()));
    EXPECT_EQ(saturations, expected) << spec;
  }
  auto f2 = brute_force_denominator_sets(zmod(2));
  ASSERT_EQ(f2.size(), 1u);
  EXPECT_EQ(E(f2[0].elements()), (oracle::ESet{1}));
}

TEST(BruteForce, GuardRaises) {
  EXPECT_THROW(brute_force_denominator_sets(zmod(9)), SizeGuardExceeded);
}

TEST(MaxDen, Examples) {
  EXPECT_EQ(family(max_den_l(zmod(6))), (std::set<oracle::ESet>{{1, 3, 5}, {1, 2, 4, 5}}));
  EXPECT_EQ(family(max_den_l(zmod(4))), (std::set<oracle::ESet>{{1, 3}}));
  auto m2 = matrix_ring(galois_field(2), 2);
  auto md = max_den_l(m2);
  ASSERT_EQ(md.size(), 1u);
  EXPECT_EQ(md[0].elements(), units(m2));
}

TEST(MaxDen, MatchesOracleOnSmallCatalog) {
  for (const auto& spec : default_catalog()) {
    auto r = construct(spec);
    if (r.order() > 16) continue;
    auto ref = oracle::max_den(r);
    EXPECT_EQ(family(max_den_l(r)), std::set<oracle::ESet>(ref.begin(), ref.end())) << spec;
  }
}

TEST(Radical, Examples) {
  EXPECT_EQ(E(left_localization_radical(zmod(6))), (oracle::ESet{0}));
  EXPECT_EQ(E(left_localization_radical(zmod(4))), (oracle::ESet{0}));
  auto t2 = upper_triangular_ring(galois_field(2), 2);
  auto md = oracle::max_den(t2);
  oracle::ESet rad = oracle::all(t2);
  for (auto& s : md) rad = oracle::meet(rad, oracle::ass(t2, s));
  EXPECT_EQ(E(left_localization_radical(t2)), rad);
}

TEST(Localizable, Verdicts) {
  auto v6 = is_left_localizable(zmod(6));
  EXPECT_TRUE(v6.localizable);
  EXPECT_FALSE(v6.partial);
  auto v4 = is_left_localizable(zmod(4));
  EXPECT_FALSE(v4.localizable);
  ASSERT_TRUE(v4.witness);
  EXPECT_EQ(*v4.witness, 2u);
  auto vm = is_left_localizable(matrix_ring(galois_field(2), 2));
  EXPECT_FALSE(vm.localizable);
  EXPECT_TRUE(vm.semiprime_goldie.ran);
  EXPECT_FALSE(vm.semiprime_goldie.holds);
}

TEST(Localizable, PartialWhenGoldieRouteIsGuarded) {
  Limits tight;
  tight.max_left_ideal_order = 4;
  auto v = is_left_localizable(zmod(6), tight);
  EXPECT_TRUE(v.localizable);
  EXPECT_TRUE(v.partial);
  EXPECT_FALSE(v.semiprime_goldie.ran);
}

TEST(LocalizationMaximal, Examples) {
  EXPECT_TRUE(is_localization_maximal(matrix_ring(galois_field(2), 2)));
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) EXPECT_TRUE(is_localization_maximal(galois_field(q)));
  EXPECT_FALSE(is_localization_maximal(zmod(6)));
  EXPECT_TRUE(is_localization_maximal(zmod(4)));
  for (const auto& spec : default_catalog()) {
    auto r = construct(spec);
    if (r.order() > 16) continue;
    EXPECT_EQ(is_localization_maximal(r), oracle::is_localization_maximal(r)) << spec;
  }
}

TEST(Profile, Zmod6) {
  auto p = profile(zmod(6));
  EXPECT_EQ(p.max_den.size(), 2u);
  EXPECT_EQ(E(p.localizable), (oracle::ESet{1, 2, 3, 4, 5}));
  EXPECT_EQ(E(p.completely), (oracle::ESet{1, 5}));
  EXPECT_EQ(E(p.non_localizable), (oracle::ESet{0}));
  EXPECT_EQ(p.ass_l.size(), 3u);
  ASSERT_EQ(p.localizations.size(), 2u);
  for (auto& l : p.localizations) EXPECT_TRUE(is_division_ring(l.ring));
}

TEST(Decomposition, Examples) {
  auto ok = product_decomposition(profile(construct("product(gf(2),matrix(gf(2),2))")));
  ASSERT_TRUE(ok.success);
  ASSERT_EQ(ok.decomposition->factors.size(), 2u);
  std::multiset<std::size_t> orders;
  for (auto& f : ok.decomposition->factors) orders.insert(f.order());
  EXPECT_EQ(orders, (std::multiset<std::size_t>{2, 16}));
  EXPECT_TRUE(ok.decomposition->sigma.is_bijective());
  for (auto& c : ok.decomposition->conclusions) EXPECT_TRUE(c.holds) << c.name;

  auto z6 = product_decomposition(profile(zmod(6)));
  ASSERT_TRUE(z6.success);
  EXPECT_EQ(z6.decomposition->factors.size(), 2u);

  auto t2 = product_decomposition(profile(upper_triangular_ring(galois_field(2), 2)));
  EXPECT_FALSE(t2.success);
  EXPECT_EQ(t2.failed_condition, 2);
  EXPECT_FALSE(t2.witness.empty());
  EXPECT_FALSE(t2.reason.empty());
}

TEST(Decomposition, Zmod4IsItsOwnSingleFactor) {
  auto d = product_decomposition(profile(zmod(4)));
  ASSERT_TRUE(d.success);
  EXPECT_EQ(d.decomposition->factors.size(), 1u);
}

TEST(Sided, CommutativeAgrees) {
  auto s = sided_profiles(zmod(6));
  EXPECT_EQ(s.left.localizable, s.right.localizable);
  EXPECT_EQ(s.two_sided_localizable, s.left.localizable);
}

TEST(Sided, MatrixAndTriangular) {
  auto m = sided_profiles(matrix_ring(galois_field(2), 2));
  EXPECT_EQ(m.left.localizable, m.right.localizable);
  EXPECT_EQ(m.left.max_den.size(), m.right.max_den.size());
  auto t = sided_profiles(upper_triangular_ring(galois_field(2), 2));
  EXPECT_TRUE(t.two_sided_localizable.subset_of(t.left_right_localizable));
  EXPECT_EQ(t.left_right_localizable, t.left.localizable & t.right.localizable);
}
