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

#include "circlezero/exact.hpp"
#include "circlezero/identities.hpp"

namespace {

namespace fam = circlezero::families;
namespace ids = circlezero::identities;
using circlezero::exact::BigInt;
using circlezero::exact::BigRational;
using fam::Family;

constexpr long double kPi = 3.141592653589793238462643383279502884L;

BigInt choose(long n, long k) {
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt eul(long n) {
  static std::vector<BigInt> e{1, 0};
  while (static_cast<long>(e.size()) <= n) {
    const long m = static_cast<long>(e.size());
    BigInt s = 0;
    if (m % 2 == 0) {
      for (long j = 0; j < m; j += 2) s += choose(m, j) * e[j];
    }
    e.push_back(-s);
  }
  return e[n];
}

BigRational bern(long n) {
  static std::vector<BigRational> b{1};
  while (static_cast<long>(b.size()) <= n) {
    const long m = static_cast<long>(b.size());
    BigRational s = 0;
    for (long j = 0; j < m; ++j) s += BigRational(choose(m + 1, j)) * b[j];
    BigRational v = -s / (m + 1);
    v.canonicalize();
    b.push_back(v);
  }
  return b[n];
}

TEST(SAtOne, ClosedFormFromOracles) {
  for (long k = 1; k <= 50; ++k) {
    BigInt s = 0;
    for (long j = 0; j <= k; ++j) s += choose(2 * k, 2 * j) * eul(2 * j) * eul(2 * k - 2 * j);
    BigRational closed = BigRational((BigInt(1) << static_cast<unsigned>(2 * k + 1)) *
                                     ((BigInt(1) << static_cast<unsigned>(2 * k + 2)) - 1)) *
                         abs(bern(2 * k + 2)) / (k + 1);
    closed.canonicalize();
    EXPECT_EQ(BigRational(abs(s)), closed) << "k=" << k;
    const auto id = ids::s_at_one(k);
    EXPECT_TRUE(id.holds()) << "k=" << k;
    EXPECT_EQ(id.lhs.a(), BigRational(abs(s)));
  }
  EXPECT_EQ(ids::s_at_one(2).lhs.a(), 16);
}

TEST(YCoefficientSum, MatchesBernoulliClosedForm) {
  for (long k = 2; k <= 50; ++k) {
    BigRational sum = 0;
    for (const auto& c : fam::build_Y(k).coeffs) sum += c.a();
    BigRational f = 1;
    for (long i = 2; i <= 2 * k; ++i) f *= i;
    BigRational closed = -BigRational(BigInt(1) << static_cast<unsigned>(2 * k)) * (2 * k - 1) *
                         (1 - BigRational(1, BigInt(1) << static_cast<unsigned>(2 * k))) * bern(2 * k) / f;
    closed.canonicalize();
    sum.canonicalize();
    EXPECT_EQ(sum, closed) << "k=" << k;
    const auto id = ids::y_coefficient_sum(k);
    EXPECT_TRUE(id.holds()) << "k=" << k;
    EXPECT_EQ(id.lhs.a(), sum);
  }
}

TEST(Combinations, HoldToFifty) {
  for (long k = 2; k <= 50; ++k) {
    EXPECT_TRUE(ids::q_combination_matches(k)) << "k=" << k;
    EXPECT_TRUE(ids::w_combination_matches(k)) << "k=" << k;
  }
}

TEST(SelfInversive, AllSixFamilies) {
  for (Family f : {Family::R, Family::P, Family::Q, Family::Y, Family::W, Family::S}) {
    for (long k = fam::family_min_k(f); k <= 50; ++k) EXPECT_TRUE(ids::self_inversive(f, k)) << fam::family_name(f) << k;
  }
}

TEST(Observation, ResidualEnclosesZeroToFifty) {
  for (long k = 2; k <= 50; ++k) {
    const auto r = ids::observation_check(k, 256);
    EXPECT_TRUE(r.residual.contains_zero()) << "k=" << k;
    EXPECT_LT(2 * r.residual.rad_double(), 1e-30) << "k=" << k;
    EXPECT_TRUE(r.exact_holds) << "k=" << k;
    EXPECT_EQ(static_cast<long>(r.signs.size()), 4 * k + 1);
  }
}

TEST(Observation, SignsMatchLongDouble) {
  for (long k = 2; k <= 6; ++k) {
    long double z = 0;
    for (int m = 400000; m >= 1; --m) z += std::pow(static_cast<long double>(m), -static_cast<long double>(2 * k - 1));
    const long double lambda = z / std::pow(kPi, 2 * k - 1);
    const auto a = fam::abs_square_coeffs(k);
    auto val = [&](const fam::ZetaCoefficient& c) {
      return static_cast<long double>(c.a().get_d()) + static_cast<long double>(c.b().get_d()) * lambda +
             static_cast<long double>(c.c().get_d()) * lambda * lambda;
    };
    const auto r = ids::observation_check(k, 128);
    const long double top = val(a.back());
    long double sum = 0;
    for (size_t j = 0; j < a.size(); ++j) {
      const long double d = top - val(a[j]);
      const int s = std::fabs(d) < 1e-30L ? 0 : (d > 0 ? 1 : -1);
      EXPECT_EQ(r.signs[j], s) << "k=" << k << " j=" << j;
      sum += std::fabs(d);
    }
    EXPECT_NEAR(static_cast<double>(sum / std::fabs(top)), 4.0 * k * (k - 1), 1e-9);
  }
}

}  // namespace
