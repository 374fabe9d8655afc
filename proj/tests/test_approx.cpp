/*
   Copyright 2026 The circlezero Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "circlezero/approx.hpp"
#include "circlezero/verify.hpp"
#include "circlezero/zeta.hpp"

namespace {

namespace approx = circlezero::approx;
namespace precision = circlezero::precision;
using circlezero::exact::BigRational;
using precision::ComplexEnclosure;
using precision::RealEnclosure;

using cld = std::complex<long double>;
constexpr long double kPi = 3.141592653589793238462643383279502884L;

ComplexEnclosure cz(const BigRational& re, const BigRational& im, precision::Bits bits) {
  return {RealEnclosure(re, bits), RealEnclosure(im, bits)};
}

cld mid(const ComplexEnclosure& z) { return {z.re().mid_double(), z.im().mid_double()}; }

TEST(Ramanujan, ClassicalSeriesAtOne) {
  // z = 1, k = 2: rhs = -2 sum 1/(n^3 (e^{2 pi n} - 1))
  long double s = 0;
  for (int n = 1; n <= 30; ++n) s += 1 / (std::pow(static_cast<long double>(n), 3) * std::expm1(2 * kPi * n));
  const auto e = approx::ramanujan_identity_residual(2, cz(1, 0, 256), 30, 256);
  EXPECT_TRUE(e.holds());
  EXPECT_LT(e.width(), 1e-30);
  EXPECT_NEAR(e.rhs.re().mid_double(), static_cast<double>(-2 * s), 1e-18);
  EXPECT_TRUE(e.rhs.im().contains(BigRational(0)));
}

TEST(Ramanujan, GridHolds) {
  for (long k = 2; k <= 10; ++k) {
    for (const auto& z : {cz(BigRational(1, 2), 0, 256), cz(BigRational(3, 2), 0, 256),
                          cz(BigRational(3, 10), BigRational(7, 10), 256)}) {
      const auto e = approx::ramanujan_identity_residual(k, z, 0, 256);
      EXPECT_TRUE(e.holds()) << "k=" << k;
      EXPECT_LT(e.width(), 1e-25) << "k=" << k;
      EXPECT_LT(e.tail_bound.upper_double(), std::ldexp(1.0, -128));
    }
  }
}

TEST(Ramanujan, FiveAtThreeHalvesFixedDepth) {
  EXPECT_TRUE(approx::ramanujan_identity_residual(5, cz(BigRational(3, 2), 0, 256), 40, 256).holds());
}

TEST(Ramanujan, RejectsImaginaryAxis) {
  EXPECT_THROW(approx::ramanujan_identity_residual(2, cz(0, 1, 128), 10, 128), std::domain_error);
}

TEST(Ramanujan, TailSoundnessUnderHalving) {
  const auto z = cz(BigRational(4, 5), BigRational(1, 5), 256);
  for (long n : {6L, 10L, 16L}) {
    const auto coarse = approx::ramanujan_identity_residual(3, z, n, 256);
    const auto fine = approx::ramanujan_identity_residual(3, z, 2 * n, 256);
    EXPECT_TRUE(coarse.rhs.contains(fine.rhs.midpoint())) << "N=" << n;
    EXPECT_TRUE(coarse.holds());
  }
}

TEST(Sech, KOneAtOneIsZero) {
  const auto e = approx::sech_identity_residual(1, RealEnclosure(1L, 256), 25, 256);
  EXPECT_TRUE(e.lhs.re().contains(BigRational(0)));
  EXPECT_TRUE(e.rhs.re().contains_zero());
  EXPECT_TRUE(e.holds());
}

TEST(Sech, KTwoAtOneMatchesLongDouble) {
  // rhs = 2 sum chi(n) sech(pi n / 2) / n^5
  long double s = 0;
  for (int n = 1; n <= 60; n += 2) {
    const long double chi = (n % 4 == 1) ? 1 : -1;
    s += chi / std::cosh(kPi * n / 2) / std::pow(static_cast<long double>(n), 5);
  }
  const auto e = approx::sech_identity_residual(2, RealEnclosure(1L, 256), 25, 256);
  EXPECT_TRUE(e.holds());
  EXPECT_LT(e.width(), 1e-16);  // first omitted term ~ 2 e^{-27 pi / 2}
  EXPECT_NEAR(e.rhs.re().mid_double(), static_cast<double>(2 * s), 1e-17);
}

TEST(Sech, GridHolds) {
  for (long k = 1; k <= 8; ++k) {
    for (const BigRational& z : {BigRational(1, 2), BigRational(1), BigRational(2)}) {
      const auto e = approx::sech_identity_residual(k, RealEnclosure(z, 256), 0, 256);
      EXPECT_TRUE(e.holds()) << "k=" << k;
      EXPECT_LT(e.width(), 1e-25) << "k=" << k;
    }
  }
  EXPECT_TRUE(approx::sech_identity_residual(3, RealEnclosure(BigRational(1, 2), 256), 40, 256).holds());
}

TEST(Newton, SimpleRootOfExpTerms) {
  // (z - 1)/(e^{pi z} - 1) vanishes at z = 1
  const std::vector<approx::ExpTerm> terms{{1, 1, 1, 1}, {-1, 0, 1, 1}};
  const auto r = approx::newton_solve(terms, cz(BigRational(51, 50), BigRational(1, 100), 128), 128);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.root.re().mid_double(), 1.0, 1e-30);
  EXPECT_NEAR(r.root.im().mid_double(), 0.0, 1e-30);
  const auto v = approx::exp_sum(terms, cz(2, 0, 128));
  EXPECT_NEAR(v.re().mid_double(), static_cast<double>(1 / std::expm1(2 * kPi)), 1e-18);
}

TEST(Newton, DerivativeMatchesDifferenceQuotient) {
  const auto terms = approx::approx2_constraint();
  const auto z = cz(BigRational(9, 10), BigRational(-2, 5), 192);
  const auto h = cz(BigRational(1, 1000000000), 0, 192);
  const auto fd = (approx::exp_sum(terms, z + h) - approx::exp_sum(terms, z - h)) / (h + h);
  const auto d = approx::exp_sum_derivative(terms, z);
  EXPECT_LT(std::abs(mid(fd) - mid(d)), 1e-12L);
}

TEST(Approx1, SixDecimals) {
  const auto r = approx::approx1_zeta3(128);
  EXPECT_GE(r.matched_decimals, 6);
  EXPECT_LT(precision::abs(r.residual).upper_double(), 1e-30);
  EXPECT_LT(precision::abs(precision::abs(r.seed) - RealEnclosure(1L, 128)).upper_double(), 1e-20);
  const cld z = mid(r.root);
  const cld q = (z * z * z * z + 5.0L * z * z + 1.0L) / (z * z * z + z) * (kPi * kPi * kPi / 90);
  EXPECT_NEAR(r.estimate.mid_double(), static_cast<double>(q.real()), 1e-14);
  EXPECT_NEAR(r.zeta3.mid_double(), 1.2020569031595942, 1e-15);
}

TEST(Approx2, FourDecimalsAndWorseThanApprox1) {
  const auto r2 = approx::approx2_zeta3(128);
  const auto r1 = approx::approx1_zeta3(128);
  EXPECT_GE(r2.matched_decimals, 4);
  EXPECT_LT(r2.matched_decimals, r1.matched_decimals);
  EXPECT_LT(precision::abs(r2.residual).upper_double(), 1e-30);
  EXPECT_NEAR(r2.root.re().mid_double(), 0.92, 0.01);
  EXPECT_NEAR(r2.root.im().mid_double(), -0.39, 0.01);
  const cld z = mid(r2.root);
  const cld q = z / (1.0L + z * z) * (kPi * kPi * kPi / 14);
  EXPECT_NEAR(r2.estimate.mid_double(), static_cast<double>(q.real()), 1e-14);
}

TEST(Approx, DeterministicAcrossRuns) {
  for (auto s : {approx::Scheme::approx1, approx::Scheme::approx2}) {
    const auto a = approx::run_scheme(s, 160), b = approx::run_scheme(s, 160);
    EXPECT_EQ(a.estimate.mid_string(), b.estimate.mid_string());
    EXPECT_EQ(a.root.re().mid_string(), b.root.re().mid_string());
  }
  EXPECT_EQ(approx::parse_scheme("approx2"), approx::Scheme::approx2);
  EXPECT_THROW(approx::parse_scheme("approx3"), std::invalid_argument);
  EXPECT_EQ(approx::parse_seed_convention("alternate"), approx::SeedConvention::alternate);
}

TEST(Approx, AlternateSeedConvention) {
  const auto r = approx::approx1_zeta3(128, approx::SeedConvention::alternate);
  EXPECT_GT(r.matched_decimals, 0);
  EXPECT_NE(r.root.re().mid_string(), approx::approx1_zeta3(128).root.re().mid_string());
}

TEST(MatchedDecimals, SignificantDigits) {
  const auto z3 = precision::zeta_odd(3, 128);
  EXPECT_EQ(approx::matched_decimals(RealEnclosure(BigRational(120201, 100000), 128), z3), 5);
  EXPECT_EQ(approx::matched_decimals(RealEnclosure(BigRational(12020571, 10000000), 128), z3), 6);
  EXPECT_EQ(approx::matched_decimals(RealEnclosure(BigRational(12030, 10000), 128), z3), 3);
  EXPECT_EQ(approx::matched_decimals(RealEnclosure(2L, 128), z3), 0);
}

TEST(Auxiliary, PairingsForSmallK) {
  const auto p2 = approx::auxiliary_zeros(2, 128);
  ASSERT_EQ(p2.size(), 4u);
  for (const auto& pr : p2) {
    ASSERT_TRUE(pr.distance.has_value()) << pr.error;
    EXPECT_LT(pr.distance->upper_double(), 2e-4);
  }
  const auto p3 = approx::auxiliary_zeros(3, 128);
  EXPECT_EQ(p3.size(), 6u);
}

}  // namespace
