#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "coulomb/error.hpp"
#include "coulomb/monopole.hpp"

using namespace coulomb;
using namespace coulomb::lie;
using namespace coulomb::monopole;

namespace {

HilbertSeries inverse_product(std::vector<int> degrees, std::int64_t order) {
  auto s = HilbertSeries::one(order);
  for (int d : degrees) {
    std::vector<Rational> den(d + 1, Rational(0));
    den[0] = 1;
    den[d] = -1;
    s = s * HilbertSeries::from_rational_function({1}, den, order);
  }
  return s;
}

WeightRep sl2_flavors(const RootDatum& sl2, std::int64_t n) {
  // 2N copies of V^1 give monopole number N.
  WeightRep r(1);
  r.add({1}, 2 * n);
  r.add({-1}, 2 * n);
  (void)sl2;
  return r;
}

std::int64_t iabs(std::int64_t x) { return x < 0 ? -x : x; }

}  // namespace

TEST(Delta, HandComputedValues) {
  auto sl2 = make_root_datum(Preset::SL, 2);
  auto v1 = sl2_irrep(sl2, 1);
  EXPECT_EQ(delta(sl2, v1, Coweight{1}), Rational(-3, 2));
  EXPECT_EQ(delta(sl2, direct_sum(v1, v1), Coweight{1}), -1);
  for (std::int64_t n = 3; n <= 6; ++n)
    for (std::int64_t m = 0; m <= 4; ++m) EXPECT_EQ(delta(sl2, sl2_flavors(sl2, n), Coweight{m}), m * (n - 2));
  EXPECT_THROW(delta(sl2, v1, Coweight{1, 2}), ValidationError);
}

TEST(Molien, ClosedForms) {
  auto sl2 = weyl_elements(make_root_datum(Preset::SL, 2));
  EXPECT_EQ(molien_series(sl2, 20), inverse_product({2}, 20));
  auto sl3 = weyl_elements(make_root_datum(Preset::SL, 3));
  EXPECT_EQ(molien_series(sl3, 20), inverse_product({2, 3}, 20));
  auto sp4 = weyl_elements(make_root_datum(Preset::Sp, 4));
  EXPECT_EQ(molien_series(sp4, 20), inverse_product({2, 4}, 20));
  auto so8 = weyl_elements(make_root_datum(Preset::SO, 8));
  EXPECT_EQ(molien_series(so8, 12), inverse_product({2, 4, 4, 6}, 12));
  auto trivial = std::vector<WeylElement>{IntMatrix::identity(3)};
  EXPECT_EQ(molien_series(trivial, 10), inverse_product({1, 1, 1}, 10));
}

TEST(Molien, RejectsNonGroups) {
  auto w = weyl_elements(make_root_datum(Preset::SL, 3));
  std::vector<WeylElement> partial(w.begin(), w.begin() + 3);
  EXPECT_THROW(molien_series(partial, 5), ValidationError);
  std::vector<WeylElement> doubled{IntMatrix::identity(1), IntMatrix::identity(1)};
  EXPECT_THROW(molien_series(doubled, 5), ValidationError);
}

TEST(Stabilizer, Sp4) {
  auto d = make_root_datum(Preset::Sp, 4);
  EXPECT_EQ(stabilizer_weyl(d, Coweight{0, 0}).size(), 8u);
  EXPECT_EQ(stabilizer_weyl(d, Coweight{1, 1}).size(), 2u);
  EXPECT_EQ(stabilizer_weyl(d, Coweight{2, 0}).size(), 2u);
  EXPECT_EQ(stabilizer_weyl(d, Coweight{3, 1}).size(), 1u);
}

TEST(MonopoleSeries, Sl2AgreesWithPresentation) {
  auto sl2 = make_root_datum(Preset::SL, 2);
  for (std::int64_t n = 3; n <= 8; ++n) {
    auto r = sl2_flavors(sl2, n);
    auto ms = monopole_hilbert_series(sl2, r, 25);
    auto p = sl2_presentation(sl2, r);
    EXPECT_EQ(p.n, n);
    EXPECT_TRUE(compare_series(ms.series, presentation_hilbert_series(p, 25)).equal) << n;
    EXPECT_EQ(ms.series.order(), 25);
    EXPECT_TRUE(ms.warnings.empty());
  }
  auto n3 = monopole_hilbert_series(sl2, sl2_flavors(sl2, 3), 4).series.dense();
  EXPECT_EQ(n3, (std::vector<Rational>{1, 1, 3, 3, 5}));
}

TEST(MonopoleSeries, TorusClosedForm) {
  auto t1 = make_root_datum(Preset::Torus, 1);
  WeightRep r(1, {{{1}, 2}, {{-1}, 2}});
  auto s = monopole_hilbert_series(t1, r, 30).series;
  EXPECT_EQ(s, HilbertSeries::from_rational_function({1, 1}, {1, -2, 1}, 30));

  auto t2 = make_root_datum(Preset::Torus, 2);
  WeightRep r2(2, {{{1, 0}, 2}, {{-1, 0}, 2}, {{0, 1}, 2}, {{0, -1}, 2}});
  auto s2 = monopole_hilbert_series(t2, r2, 12).series;
  auto one = HilbertSeries::from_rational_function({1, 1}, {1, -2, 1}, 12);
  EXPECT_EQ(s2, one * one);
}

// Independent summation over dominant (a, b), a >= b >= 0, with the Sp(4)
// roots and stabilizers written out by hand.
TEST(MonopoleSeries, Sp4FlavorsAgainstDirectSum) {
  auto d = make_root_datum(Preset::Sp, 4);
  WeightRep r(2);
  const auto v = defining_rep(d);
  for (const auto& [chi, m] : v.entries()) r.add(chi, 10 * m);
  const std::int64_t order = 9;
  auto computed = monopole_hilbert_series(d, r, order).series;

  HilbertSeries expected(order);
  for (std::int64_t a = 0; a <= 2 * order + 2; ++a) {
    for (std::int64_t b = 0; b <= a; ++b) {
      const std::int64_t four_delta = -4 * (iabs(a - b) + iabs(a + b) + 2 * a + 2 * b) + 20 * (a + b);
      ASSERT_EQ(four_delta % 4, 0);
      const std::int64_t dlt = four_delta / 4;
      if (dlt > order) continue;
      std::vector<int> degrees;
      if (a == 0) degrees = {2, 4};
      else if (a == b || b == 0) degrees = {1, 2};
      else degrees = {1, 1};
      expected += inverse_product(degrees, order - dlt).shifted(dlt);
    }
  }
  EXPECT_EQ(computed, expected);
}

TEST(MonopoleSeries, ThreadCountDoesNotMatter) {
  auto d = make_root_datum(Preset::Sp, 4);
  WeightRep r(2);
  const auto v = defining_rep(d);
  for (const auto& [chi, m] : v.entries()) r.add(chi, 12 * m);
  auto one = monopole_hilbert_series(d, r, 14, {64, 1});
  auto four = monopole_hilbert_series(d, r, 14, {64, 4});
  EXPECT_EQ(one.series, four.series);
  EXPECT_EQ(one.contributing_coweights, four.contributing_coweights);
}

TEST(MonopoleSeries, NotGoodAndShellCap) {
  auto sl2 = make_root_datum(Preset::SL, 2);
  EXPECT_THROW(monopole_hilbert_series(sl2, sl2_irrep(sl2, 1), 5), ConvergenceError);
  EXPECT_THROW(monopole_hilbert_series(sl2, sl2_flavors(sl2, 2), 5), ConvergenceError);
  EXPECT_THROW(monopole_hilbert_series(sl2, sl2_flavors(sl2, 3), 100, {64, 1}), ConvergenceError);
  EXPECT_NO_THROW(monopole_hilbert_series(sl2, sl2_flavors(sl2, 3), 100, {128, 1}));
  EXPECT_THROW(monopole_hilbert_series(sl2, sl2_irrep(sl2, 2), 5), PreconditionError);
}

TEST(MonopoleSeries, AnomalousRepresentationWarns) {
  // V^3 (+) V^1 is anomalous (N = 5/2), but Delta grows along the coroot.
  auto sl2 = make_root_datum(Preset::SL, 2);
  auto r = direct_sum(sl2_irrep(sl2, 3), sl2_irrep(sl2, 1));
  ASSERT_EQ(delta(sl2, r, Coweight{1}), Rational(1, 2));
  auto ms = monopole_hilbert_series(sl2, r, 6);
  EXPECT_FALSE(ms.anomaly_free);
  EXPECT_TRUE(ms.series.has_half_integral_exponents());
  ASSERT_FALSE(ms.warnings.empty());
  EXPECT_NE(ms.warnings.front().find("anomalous"), std::string::npos);
  EXPECT_EQ(ms.series.coefficient(Rational(1, 2)), 1);
}

// Every dominant coweight with Delta <= order lies inside the certified box.
TEST(MonopoleSeries, CertifiedBoxIsSound) {
  auto t2 = make_root_datum(Preset::Torus, 2);
  WeightRep skew(2, {{{1, -2}, 40}, {{-1, 2}, 40}, {{1, 0}, 4}, {{-1, 0}, 4}, {{0, 1}, 4}, {{0, -1}, 4}});
  std::mt19937_64 rng(23);
  std::vector<WeightRep> reps{skew};
  for (int trial = 0; trial < 15; ++trial) {
    WeightRep r(2);
    for (int k = 0; k < 3; ++k) {
      Weight chi{static_cast<std::int64_t>(rng() % 7) - 3, static_cast<std::int64_t>(rng() % 7) - 3};
      if (chi == Weight{0, 0}) continue;
      const auto m = 1 + static_cast<std::int64_t>(rng() % 6);
      r.add(chi, m);
      r.add({-chi[0], -chi[1]}, m);
    }
    reps.push_back(r);
  }
  for (const auto& r : reps) {
    for (std::int64_t order : {0, 3, 7}) {
      std::int64_t radius = 0;
      try {
        radius = certified_box_radius(t2, r, order);
      } catch (const ConvergenceError&) {
        continue;
      }
      for (std::int64_t x = -80; x <= 80; ++x)
        for (std::int64_t y = -80; y <= 80; ++y)
          if (delta(t2, r, Coweight{x, y}) <= order) {
            ASSERT_LE(std::max(iabs(x), iabs(y)), radius) << x << "," << y;
          }
    }
  }
}

TEST(Presentation, Sl2Relations) {
  auto p0 = sl2_presentation_for(0);
  EXPECT_EQ(p0.relation, "xi^2 = delta*eta^2 + eta");
  auto p3 = sl2_presentation_for(3);
  EXPECT_EQ(p3.relation, "xi^2 = delta*eta^2 - delta^2");
  EXPECT_EQ(p3.degree_eta, 1);
  EXPECT_EQ(p3.degree_xi, 2);
  for (std::int64_t n = 1; n <= 10; ++n) EXPECT_TRUE(sl2_presentation_for(n).is_homogeneous()) << n;

  auto series = presentation_hilbert_series(p3, 4).dense();
  EXPECT_EQ(series, (std::vector<Rational>{1, 1, 3, 3, 5}));
  EXPECT_THROW(presentation_hilbert_series(sl2_presentation_for(2), 4), ValidationError);

  auto sl2 = make_root_datum(Preset::SL, 2);
  EXPECT_THROW(sl2_presentation(sl2, sl2_irrep(sl2, 1)), PreconditionError);
  auto sp4 = make_root_datum(Preset::Sp, 4);
  EXPECT_THROW(sl2_presentation(sp4, defining_rep(sp4)), ValidationError);
}

TEST(Delta, ZeroCoweight) {
  auto sp4 = make_root_datum(Preset::Sp, 4);
  EXPECT_EQ(delta(sp4, defining_rep(sp4), Coweight{0, 0}), 0);
}

TEST(Stabilizer, SmallExamples) {
  auto sl2 = make_root_datum(Preset::SL, 2);
  auto s = stabilizer_weyl(sl2, Coweight{1});
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], IntMatrix::identity(1));
  EXPECT_EQ(stabilizer_weyl(sl2, Coweight{0}).size(), 2u);

  auto sp4 = make_root_datum(Preset::Sp, 4);
  IntMatrix swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  auto pair = stabilizer_weyl(sp4, Coweight{1, 1});
  EXPECT_NE(std::find(pair.begin(), pair.end(), swap), pair.end());
  EXPECT_EQ(molien_series(std::vector<WeylElement>{IntMatrix::identity(1)}, 5), inverse_product({1}, 5));
}

TEST(Presentation, MoreExamples) {
  EXPECT_EQ(sl2_presentation_for(1).relation, "xi^2 = delta*eta^2 - 1");
  auto n4 = presentation_hilbert_series(sl2_presentation_for(4), 6).dense();
  EXPECT_EQ(n4, (std::vector<Rational>{1, 0, 2, 1, 3, 2, 4}));
  auto cmp = compare_series(presentation_hilbert_series(sl2_presentation_for(3), 10),
                            presentation_hilbert_series(sl2_presentation_for(4), 10));
  EXPECT_FALSE(cmp.equal);
  ASSERT_TRUE(cmp.first_mismatch.has_value());
  EXPECT_EQ(*cmp.first_mismatch, 1);
}

TEST(MonopoleSeries, ZeroRepOnTorusIsNotGood) {
  auto t1 = make_root_datum(Preset::Torus, 1);
  WeightRep zeros(1);
  zeros.add({0}, 2);
  EXPECT_THROW(monopole_hilbert_series(t1, zeros, 3), ConvergenceError);
}
