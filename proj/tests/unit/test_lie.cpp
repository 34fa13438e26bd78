#include <gtest/gtest.h>

#include <random>
#include <set>

#include "coulomb/error.hpp"
#include "coulomb/lie.hpp"

using namespace coulomb;
using namespace coulomb::lie;

namespace {

std::int64_t determinant(const IntMatrix& m) {
  // Integer Bareiss elimination; fine for the tiny matrices used here.
  const std::size_t n = m.rows();
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return n == 0 ? 1 : sign * a[n - 1][n - 1];
}

RootDatum g2() {
  return RootDatum::from_simple("G2", 2, {{2, -1}, {-3, 2}}, {{1, 0}, {0, 1}});
}

}  // namespace

TEST(RootDatum, PresetConventions) {
  auto sl2 = make_root_datum(Preset::SL, 2);
  EXPECT_EQ(sl2.simple_roots(), (std::vector<Weight>{{2}}));
  EXPECT_EQ(sl2.simple_coroots(), (std::vector<Coweight>{{1}}));

  auto pgl2 = make_root_datum(Preset::PGL, 2);
  EXPECT_EQ(pgl2.simple_roots(), (std::vector<Weight>{{1}}));
  EXPECT_EQ(pgl2.simple_coroots(), (std::vector<Coweight>{{2}}));

  auto sp4 = make_root_datum(Preset::Sp, 4);
  IntMatrix expected(2, 2);
  expected(0, 0) = 2;
  expected(0, 1) = -1;
  expected(1, 0) = -2;
  expected(1, 1) = 2;
  EXPECT_EQ(sp4.cartan_matrix(), expected);
}

TEST(RootDatum, RootCounts) {
  for (int n = 2; n <= 5; ++n) EXPECT_EQ(make_root_datum(Preset::SL, n).roots().size(), std::size_t(n * (n - 1)));
  for (int n = 1; n <= 3; ++n) {
    EXPECT_EQ(make_root_datum(Preset::Sp, 2 * n).roots().size(), std::size_t(2 * n * n));
    EXPECT_EQ(make_root_datum(Preset::SO, 2 * n + 1).roots().size(), std::size_t(2 * n * n));
  }
  for (int n = 2; n <= 4; ++n) EXPECT_EQ(make_root_datum(Preset::SO, 2 * n).roots().size(), std::size_t(2 * n * (n - 1)));
  EXPECT_EQ(g2().roots().size(), 12u);
  EXPECT_TRUE(make_root_datum(Preset::Torus, 3).roots().empty());
}

struct WeylCase {
  Preset preset;
  int size;
  std::size_t order;
};

class WeylOrder : public ::testing::TestWithParam<WeylCase> {};

TEST_P(WeylOrder, MatchesClassicalFormula) {
  const auto c = GetParam();
  auto d = make_root_datum(c.preset, c.size);
  auto w = weyl_elements(d);
  EXPECT_EQ(w.size(), c.order) << d.name();
  std::set<IntMatrix> distinct(w.begin(), w.end());
  EXPECT_EQ(distinct.size(), w.size());
  if (!d.roots().empty()) {
    std::size_t even = 0;
    for (const auto& g : w) {
      const auto det = determinant(g);
      ASSERT_TRUE(det == 1 || det == -1);
      if (det == 1) ++even;
    }
    EXPECT_EQ(2 * even, w.size());
  }
}

INSTANTIATE_TEST_SUITE_P(Classical, WeylOrder,
                         ::testing::Values(WeylCase{Preset::SL, 2, 2}, WeylCase{Preset::SL, 3, 6},
                                           WeylCase{Preset::SL, 4, 24}, WeylCase{Preset::PGL, 3, 6},
                                           WeylCase{Preset::GL, 3, 6}, WeylCase{Preset::Sp, 4, 8},
                                           WeylCase{Preset::Sp, 6, 48}, WeylCase{Preset::SO, 5, 8},
                                           WeylCase{Preset::SO, 7, 48}, WeylCase{Preset::SO, 4, 4},
                                           WeylCase{Preset::SO, 6, 24}, WeylCase{Preset::SO, 8, 192},
                                           WeylCase{Preset::Torus, 2, 1}));

TEST(RootDatum, G2WeylGroup) { EXPECT_EQ(weyl_elements(g2()).size(), 12u); }

TEST(RootDatum, RootsAreWeylStable) {
  for (auto d : {make_root_datum(Preset::Sp, 6), make_root_datum(Preset::SO, 8), g2()}) {
    std::set<Weight> roots(d.roots().begin(), d.roots().end());
    for (const auto& w : weyl_elements(d))
      for (const auto& a : d.roots()) EXPECT_TRUE(roots.contains(w.apply_right(a)));
  }
}

TEST(RootDatum, PairingOfRootsAndCoroots) {
  auto d = make_root_datum(Preset::SO, 7);
  for (std::size_t i = 0; i < d.simple_roots().size(); ++i) {
    EXPECT_EQ(pairing(d.simple_roots()[i], d.simple_coroots()[i]), 2);
    const auto s = d.simple_reflection(i);
    EXPECT_EQ(s * s, IntMatrix::identity(d.rank()));
  }
}

TEST(RootDatum, RejectsInvalidData) {
  EXPECT_THROW(RootDatum::from_simple("bad", 1, {{1}}, {{1}}), ValidationError);
  EXPECT_THROW(RootDatum::from_simple("affine", 3, {{2, -2, 0}, {-2, 2, 1}}, {{1, 0, 0}, {0, 1, 0}}), ValidationError);
  EXPECT_THROW(RootDatum::from_simple("dependent", 2, {{2, -2}, {-2, 2}}, {{1, 0}, {0, 1}}), ValidationError);
  EXPECT_THROW(RootDatum::from_simple("asym", 2, {{2, 0}, {-1, 2}}, {{1, 0}, {0, 1}}), ValidationError);
  EXPECT_THROW(RootDatum::from_simple("short", 2, {{2}}, {{1, 0}}), ValidationError);
  EXPECT_THROW(make_root_datum(Preset::SL, 0), ValidationError);
}

TEST(RootDatum, ProductConcatenates) {
  auto d = product(make_root_datum(Preset::Sp, 4), make_root_datum(Preset::SO, 4));
  EXPECT_EQ(d.rank(), 4u);
  EXPECT_EQ(d.roots().size(), 12u);
  EXPECT_EQ(d.simple_roots().size(), 4u);
  EXPECT_EQ(d.factors().size(), 2u);
  EXPECT_EQ(weyl_elements(d).size(), 32u);
}

TEST(RootDatum, WeylCapIsEnforced) { EXPECT_THROW(weyl_elements(make_root_datum(Preset::SL, 5), 100), ValidationError); }

TEST(RootDatum, DominantCoweights) {
  auto sl2 = make_root_datum(Preset::SL, 2);
  EXPECT_EQ(dominant_coweights(sl2, 3), (std::vector<Coweight>{{0}, {1}, {2}, {3}}));
  auto sp4 = make_root_datum(Preset::Sp, 4);
  for (const auto& l : dominant_coweights(sp4, 4)) {
    EXPECT_GE(l[0], l[1]);
    EXPECT_GE(l[1], 0);
  }
  EXPECT_EQ(dominant_coweights(sp4, 4).size(), 15u);
}

TEST(WeightRep, Sl2Irreps) {
  auto sl2 = make_root_datum(Preset::SL, 2);
  for (int k = 0; k <= 6; ++k) {
    auto v = sl2_irrep(sl2, k);
    EXPECT_EQ(v.dimension(), k + 1);
    for (int j = -k; j <= k; j += 2) EXPECT_EQ(v.multiplicity({j}), 1);
  }
  auto pgl2 = make_root_datum(Preset::PGL, 2);
  EXPECT_THROW(sl2_irrep(pgl2, 1), ValidationError);
  EXPECT_EQ(sl2_irrep(pgl2, 2), WeightRep(1, {{{-1}, 1}, {{0}, 1}, {{1}, 1}}));
}

TEST(WeightRep, Builders) {
  auto sp4 = make_root_datum(Preset::Sp, 4);
  auto v = defining_rep(sp4);
  EXPECT_EQ(v.dimension(), 4);
  EXPECT_EQ(dual(v), v);
  EXPECT_EQ(tensor(v, v).dimension(), 16);
  EXPECT_EQ(tensor(v, v).multiplicity({0, 0}), 4);
  EXPECT_EQ(direct_sum(v, v).multiplicity({1, 0}), 2);

  auto sl3 = make_root_datum(Preset::GL, 3);
  auto std3 = defining_rep(sl3);
  EXPECT_NE(dual(std3), std3);
  EXPECT_EQ(cotangent(std3), direct_sum(std3, dual(std3)));
  EXPECT_TRUE(is_weyl_invariant(sl3, tensor(std3, dual(std3))));
}

TEST(WeightRep, RejectsBadEntries) {
  using Entries = std::vector<std::pair<Weight, std::int64_t>>;
  EXPECT_THROW(WeightRep(2, Entries{{Weight{1}, 1}}), ValidationError);
  EXPECT_THROW(WeightRep(1, Entries{{Weight{1}, 0}}), ValidationError);
  EXPECT_EQ(WeightRep(1, Entries{{Weight{1}, 1}, {Weight{1}, 2}}).multiplicity({1}), 3);
}

TEST(WeightRep, SymplecticCheck) {
  auto sl2 = make_root_datum(Preset::SL, 2);
  EXPECT_TRUE(is_symplectic_weights(sl2, sl2_irrep(sl2, 1)).ok);
  EXPECT_FALSE(is_symplectic_weights(sl2, sl2_irrep(sl2, 2)).ok);
  // Weight level looks fine (dim 4, zero weight twice) but V^2 (+) V^0 carries
  // no invariant symplectic form.
  auto bad = direct_sum(sl2_irrep(sl2, 2), sl2_irrep(sl2, 0));
  auto check = is_symplectic_weights(sl2, bad);
  EXPECT_FALSE(check.ok);
  EXPECT_FALSE(check.diagnostic.empty());
  EXPECT_TRUE(is_symplectic_weights(sl2, direct_sum(sl2_irrep(sl2, 2), sl2_irrep(sl2, 2))).ok);

  auto gl3 = make_root_datum(Preset::GL, 3);
  EXPECT_FALSE(is_symplectic_weights(gl3, defining_rep(gl3)).ok);
  EXPECT_TRUE(is_symplectic_weights(gl3, cotangent(defining_rep(gl3))).ok);
}

TEST(WeightRep, IsotypicRoundTrip) {
  auto sl2 = make_root_datum(Preset::SL, 2);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::map<int, std::int64_t> dec;
    for (int k = 0; k <= 7; ++k) {
      const auto m = static_cast<std::int64_t>(rng() % 4);
      if (m > 0) dec[k] = m;
    }
    auto r = sl2_reconstruct(sl2, dec);
    EXPECT_EQ(sl2_isotypic_decomposition(sl2, r), dec);
  }
  WeightRep lonely(1);
  lonely.add({2}, 1);
  EXPECT_THROW(sl2_isotypic_decomposition(sl2, lonely), ValidationError);
}

TEST(WeightRep, CotangentSplit) {
  auto sp4 = make_root_datum(Preset::Sp, 4);
  auto split = weight_level_cotangent_split(defining_rep(sp4));
  ASSERT_TRUE(split.has_value());
  EXPECT_EQ(*split, WeightRep(2, {{{1, 0}, 1}, {{0, 1}, 1}}));

  auto sl2 = make_root_datum(Preset::SL, 2);
  for (int k = 0; k <= 5; ++k) {
    auto r = direct_sum(sl2_irrep(sl2, k), sl2_irrep(sl2, k));
    auto n = weight_level_cotangent_split(r);
    ASSERT_TRUE(n.has_value());
    EXPECT_EQ(direct_sum(*n, dual(*n)), r);
  }
  WeightRep lonely(1);
  lonely.add({1}, 1);
  EXPECT_FALSE(weight_level_cotangent_split(lonely).has_value());
}

TEST(RootDatum, SmallExamples) {
  auto sl2 = make_root_datum(Preset::SL, 2);
  IntMatrix two(1, 1);
  two(0, 0) = 2;
  EXPECT_EQ(sl2.cartan_matrix(), two);
  const auto v1 = sl2_irrep(sl2, 1);
  for (const auto& [chi, m] : v1.entries()) EXPECT_EQ(std::abs(pairing(chi, sl2.simple_coroots()[0])), 1);

  auto t1 = make_root_datum(Preset::Torus, 1);
  EXPECT_TRUE(t1.roots().empty());
  EXPECT_EQ(weyl_elements(t1).size(), 1u);
  EXPECT_EQ(dominant_coweights(t1, 1), (std::vector<Coweight>{{-1}, {0}, {1}}));

  auto mixed = product(sl2, t1);
  EXPECT_EQ(mixed.rank(), 2u);
  EXPECT_EQ(mixed.simple_roots().size(), 1u);
  EXPECT_EQ(mixed.roots().size(), 2u);

  auto t0 = make_root_datum(Preset::Torus, 0);
  auto same = product(t0, sl2);
  EXPECT_EQ(same.rank(), 1u);
  EXPECT_EQ(same.roots(), sl2.roots());
  EXPECT_EQ(same.name(), sl2.name());

  auto sp4 = make_root_datum(Preset::Sp, 4);
  EXPECT_EQ(dominant_coweights(sp4, 1), (std::vector<Coweight>{{0, 0}, {1, 0}, {1, 1}}));
}

TEST(WeightRep, SmallExamples) {
  auto sl2 = make_root_datum(Preset::SL, 2);
  EXPECT_EQ(sl2_irrep(sl2, 2), WeightRep(1, {{{2}, 1}, {{0}, 1}, {{-2}, 1}}));
  WeightRep one(1);
  one.add({1}, 1);
  EXPECT_EQ(cotangent(one), WeightRep(1, {{{1}, 1}, {{-1}, 1}}));
  EXPECT_TRUE(is_symplectic_weights(sl2, WeightRep(1)).ok);

  using Dec = std::map<int, std::int64_t>;
  EXPECT_EQ(sl2_isotypic_decomposition(sl2, sl2_irrep(sl2, 1)), (Dec{{1, 1}}));
  WeightRep v3_shape(1, {{{3}, 1}, {{1}, 1}, {{-1}, 1}, {{-3}, 1}});
  EXPECT_EQ(sl2_isotypic_decomposition(sl2, v3_shape), (Dec{{3, 1}}));
  WeightRep mixed(1, {{{1}, 2}, {{-1}, 2}, {{2}, 1}, {{0}, 2}, {{-2}, 1}});
  EXPECT_EQ(sl2_isotypic_decomposition(sl2, mixed), (Dec{{0, 1}, {1, 2}, {2, 1}}));

  WeightRep zeros(1);
  zeros.add({0}, 2);
  auto half = weight_level_cotangent_split(zeros);
  ASSERT_TRUE(half.has_value());
  EXPECT_EQ(half->multiplicity({0}), 1);
  EXPECT_EQ(half->dimension(), 1);
}
