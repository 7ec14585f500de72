#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gce/core.hpp"
#include "gce/param.hpp"

namespace {

using namespace gce;

constexpr double kGmemsC = 0.763762615825973334;

// Uniform point inside the purity region with Delta uniform in its bounds.
PurityPoint random_valid_point(std::mt19937_64& rng, double mu_floor = 0.1) {
  std::uniform_real_distribution<double> marginal(mu_floor, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  PurityPoint p;
  p.mu1 = marginal(rng);
  p.mu2 = marginal(rng);
  const double lo = p.mu1 * p.mu2;
  p.mu = lo + (max_global_purity(p.mu1, p.mu2) - lo) * unit(rng);
  const DeltaBounds b = delta_bounds(p.mu1, p.mu2, p.mu);
  p.delta = b.min + (b.max - b.min) * unit(rng);
  return p;
}

void expect_point_near(const PurityPoint& x, const PurityPoint& y, double tol) {
  EXPECT_NEAR(x.mu1, y.mu1, tol);
  EXPECT_NEAR(x.mu2, y.mu2, tol);
  EXPECT_NEAR(x.mu, y.mu, tol);
  ASSERT_TRUE(x.delta && y.delta);
  EXPECT_NEAR(*x.delta, *y.delta, tol);
}

TEST(PurityPoint, ReferenceStandardForms) {
  expect_point_near(purity_point({0.5, 0.5, 0.0, 0.0}), {1.0, 1.0, 1.0, 0.5}, 1e-15);
  expect_point_near(purity_point({1.0, 1.0, 0.0, 0.0}), {0.5, 0.5, 0.25, 2.0}, 1e-15);
  expect_point_near(purity_point({1.0, 1.0, kGmemsC, -kGmemsC}), {0.5, 0.5, 0.6, 5.0 / 6.0},
                    1e-14);
}

TEST(PurityPoint, UnphysicalStandardFormThrows) {
  EXPECT_THROW((void)purity_point({1.0, 1.0, 1.0, 1.0}), Error);
}

TEST(StandardFormFromPurities, ReferencePoints) {
  const StandardForm vac = standard_form_from_purities({1.0, 1.0, 1.0, 0.5});
  EXPECT_NEAR(vac.a, 0.5, 1e-15);
  EXPECT_NEAR(vac.b, 0.5, 1e-15);
  EXPECT_NEAR(vac.c_plus, 0.0, 1e-12);
  EXPECT_NEAR(vac.c_minus, 0.0, 1e-12);

  // At Delta = delta_min the sum radical vanishes and c± = ±eps, i.e. GMEMS.
  const StandardForm gm = standard_form_from_purities({0.5, 0.5, 0.6, 5.0 / 6.0});
  EXPECT_NEAR(gm.a, 1.0, 1e-15);
  EXPECT_NEAR(gm.b, 1.0, 1e-15);
  EXPECT_NEAR(gm.c_plus, kGmemsC, 1e-7);
  EXPECT_NEAR(gm.c_minus, -kGmemsC, 1e-7);

  // delta_min = delta_max = 2 leaves only the thermal product.
  const StandardForm th = standard_form_from_purities({0.5, 0.5, 0.25, 2.0});
  EXPECT_NEAR(th.a, 1.0, 1e-15);
  EXPECT_NEAR(th.c_plus, 0.0, 1e-7);
  EXPECT_NEAR(th.c_minus, 0.0, 1e-7);
}

TEST(StandardFormFromPurities, RequiresDelta) {
  try {
    (void)standard_form_from_purities({0.5, 0.5, 0.6, std::nullopt});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::malformed_input);
  }
}

TEST(StandardFormFromPurities, NamesViolatedDeltaBound) {
  try {
    (void)standard_form_from_purities({0.5, 0.5, 0.6, 0.8});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::out_of_region);
    EXPECT_NE(std::string(e.what()).find("lower bound"), std::string::npos) << e.what();
  }
  try {
    (void)standard_form_from_purities({0.5, 0.5, 0.6, 1.0});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::out_of_region);
    EXPECT_NE(std::string(e.what()).find("upper bound"), std::string::npos) << e.what();
  }
}

TEST(DeltaBounds, ReferencePoints) {
  const DeltaBounds thermal = delta_bounds(0.5, 0.5, 0.25);
  EXPECT_DOUBLE_EQ(thermal.min, 2.0);
  EXPECT_DOUBLE_EQ(thermal.max, 2.0);

  const DeltaBounds vac = delta_bounds(1.0, 1.0, 1.0);
  EXPECT_DOUBLE_EQ(vac.min, 0.5);
  EXPECT_DOUBLE_EQ(vac.max, 0.5);

  // Heisenberg branch (1 + 1/mu²)/4 = 0.9444... beats 4 - 1/1.2.
  const DeltaBounds mid = delta_bounds(0.5, 0.5, 0.6);
  EXPECT_NEAR(mid.min, 5.0 / 6.0, 1e-15);
  EXPECT_NEAR(mid.max, 0.25 * (1.0 + 1.0 / 0.36), 1e-15);
  EXPECT_NEAR(mid.max, 0.944444444444444444, 1e-15);
}

TEST(DeltaBounds, RejectsInvalidPurities) {
  EXPECT_THROW((void)delta_bounds(0.5, 0.5, 0.2), Error);
  EXPECT_THROW((void)delta_bounds(0.8, 0.4, 0.6), Error);
}

TEST(PurityConstraints, ReferencePoints) {
  const PurityCheck low = check_purity_constraints(0.5, 0.5, 0.2);
  EXPECT_EQ(low.violation, PurityCheck::Violation::lower);
  EXPECT_DOUBLE_EQ(low.lower_bound, 0.25);
  EXPECT_NE(low.message.find("mu >= mu1*mu2"), std::string::npos);

  EXPECT_TRUE(check_purity_constraints(0.5, 0.5, 0.9).ok());
  EXPECT_DOUBLE_EQ(check_purity_constraints(0.5, 0.5, 0.9).upper_bound, 1.0);

  const PurityCheck high = check_purity_constraints(0.8, 0.4, 0.6);
  EXPECT_EQ(high.violation, PurityCheck::Violation::upper);
  EXPECT_NEAR(high.upper_bound, 4.0 / 9.0, 1e-15);

  EXPECT_EQ(check_purity_constraints(0.0, 0.5, 0.5).violation, PurityCheck::Violation::range);
  EXPECT_EQ(check_purity_constraints(0.5, 1.5, 0.5).violation, PurityCheck::Violation::range);
}

TEST(PurityConstraints, BoundariesAreClosed) {
  EXPECT_TRUE(check_purity_constraints(0.5, 0.5, 0.25).ok());
  EXPECT_TRUE(check_purity_constraints(0.8, 0.4, 4.0 / 9.0).ok());
  EXPECT_TRUE(check_purity_constraints(0.5, 0.5, 0.25 - 5e-10).ok());
  EXPECT_FALSE(check_purity_constraints(0.5, 0.5, 0.25 - 5e-9).ok());
}

TEST(ParamProperties, InversionRoundTrip) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100000; ++i) {
    const PurityPoint p = random_valid_point(rng);
    const PurityPoint back = purity_point(standard_form_from_purities(p));
    ASSERT_NEAR(back.mu1, p.mu1, 1e-9) << i;
    ASSERT_NEAR(back.mu2, p.mu2, 1e-9) << i;
    ASSERT_NEAR(back.mu, p.mu, 1e-9) << i;
    ASSERT_NEAR(*back.delta, *p.delta, 1e-9) << i;
  }
}

TEST(ParamProperties, InversionKeepsCanonicalOrientation) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 10000; ++i) {
    const StandardForm sf = standard_form_from_purities(random_valid_point(rng));
    ASSERT_GE(sf.c_plus, std::abs(sf.c_minus) - 1e-12);
  }
}

TEST(ParamProperties, BoundTightness) {
  std::mt19937_64 rng(23);
  const double tol = kDefaultTolerance;
  for (int i = 0; i < 2000; ++i) {
    PurityPoint p = random_valid_point(rng);
    const DeltaBounds b = delta_bounds(p.mu1, p.mu2, p.mu);
    for (double d : {b.min, b.max}) {
      p.delta = d;
      EXPECT_NO_THROW((void)standard_form_from_purities(p));
    }
    p.delta = b.min - 10.0 * tol;
    EXPECT_THROW((void)standard_form_from_purities(p), Error);
    p.delta = b.max + 10.0 * tol;
    EXPECT_THROW((void)standard_form_from_purities(p), Error);
  }
}

TEST(ParamProperties, NoLessPureThanProductStates) {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> diag(0.5, 5.0);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  int accepted = 0;
  while (accepted < 100000) {
    StandardForm sf{diag(rng), diag(rng), 0.0, 0.0};
    const double bound = std::sqrt(sf.a * sf.b);
    sf.c_plus = bound * unit(rng);
    sf.c_minus = bound * unit(rng);
    if (!is_physical(sf, 0.0)) continue;
    ++accepted;
    const PurityPoint p = purities(from_standard_form(sf, 0.0));
    ASSERT_GE(p.mu, p.mu1 * p.mu2 - 1e-12);
    ASSERT_LE(p.mu, max_global_purity(p.mu1, p.mu2) + 1e-12);
    const DeltaBounds b = delta_bounds(p.mu1, p.mu2, p.mu);
    ASSERT_GE(*p.delta, b.min - 1e-9);
    ASSERT_LE(*p.delta, b.max + 1e-9);
  }
}

TEST(ParamInvariants, FromPurityPoint) {
  const Invariants inv = invariants(PurityPoint{0.5, 0.5, 0.6, 5.0 / 6.0});
  EXPECT_DOUBLE_EQ(inv.det_alpha, 1.0);
  EXPECT_DOUBLE_EQ(inv.det_beta, 1.0);
  EXPECT_NEAR(inv.det_sigma, 1.0 / (16.0 * 0.36), 1e-15);
  EXPECT_NEAR(inv.det_gamma, -kGmemsC * kGmemsC, 1e-14);
}

}  // namespace
