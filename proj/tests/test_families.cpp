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

#include <random>

#include "circlezero/exact.hpp"
#include "circlezero/families.hpp"
#include "circlezero/zeta.hpp"

namespace circlezero::families {
void PrintTo(const ZetaCoefficient& c, std::ostream* os) { *os << c.to_string(); }
}  // namespace circlezero::families

namespace {

namespace fam = circlezero::families;
namespace precision = circlezero::precision;
using circlezero::exact::BigInt;
using circlezero::exact::BigRational;
using fam::Family;
using fam::FamilyPoly;
using fam::ZetaCoefficient;
using precision::ComplexEnclosure;
using precision::RealEnclosure;

// Independent small oracles: naive recurrences, plain loops.
BigInt choose(long n, long k) {
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt fact(long n) {
  BigInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
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

std::vector<ZetaCoefficient> rational(std::initializer_list<BigRational> v) {
  std::vector<ZetaCoefficient> out;
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

void expect_coeffs(const FamilyPoly& p, const std::vector<ZetaCoefficient>& want) {
  ASSERT_EQ(p.coeffs.size(), want.size()) << fam::family_name(p.family) << p.k;
  for (size_t j = 0; j < want.size(); ++j) {
    EXPECT_EQ(p.coeffs[j], want[j]) << fam::family_name(p.family) << p.k << " j=" << j << " got "
                                    << p.coeffs[j].to_string() << " want " << want[j].to_string();
  }
}

TEST(ZetaCoefficient, ArithmeticInLambda) {
  const ZetaCoefficient x(1, 2), y(BigRational(1, 2), -1);
  const auto s = x + y;
  EXPECT_EQ(s, ZetaCoefficient(BigRational(3, 2), 1));
  const auto p = x * y;  // (1 + 2L)(1/2 - L) = 1/2 + 0 L - 2 L^2
  EXPECT_EQ(p, ZetaCoefficient(BigRational(1, 2), 0, -2));
  EXPECT_THROW(p * x, std::overflow_error);
  EXPECT_TRUE(ZetaCoefficient().is_zero());
  EXPECT_TRUE(ZetaCoefficient(5).is_rational());
  const RealEnclosure lambda(BigRational(1, 3), 64);
  EXPECT_TRUE(p.evaluate(lambda).contains(BigRational(1, 2) - BigRational(2, 9)));
}

TEST(FamilyNames, ParseAndMinimum) {
  EXPECT_EQ(fam::parse_family("p"), Family::P);
  EXPECT_EQ(fam::parse_family("S"), Family::S);
  EXPECT_THROW(fam::parse_family("X"), std::invalid_argument);
  EXPECT_EQ(fam::family_min_k(Family::S), 1);
  EXPECT_EQ(fam::family_min_k(Family::P), 2);
  EXPECT_THROW(fam::build_P(1), std::domain_error);
}

TEST(BuildS, SmallGolden) {
  expect_coeffs(fam::build_S(1), rational({-1, -1}));
  expect_coeffs(fam::build_S(2), rational({5, 6, 5}));
}

TEST(BuildS, MatchesEulerOracle) {
  for (long k = 1; k <= 40; ++k) {
    std::vector<ZetaCoefficient> want;
    for (long j = 0; j <= k; ++j) want.emplace_back(BigRational(choose(2 * k, 2 * j) * eul(2 * j) * eul(2 * k - 2 * j)));
    const auto p = fam::build_S(k);
    expect_coeffs(p, want);
    for (const auto& c : p.coeffs) EXPECT_EQ(sgn(c.a()), k % 2 == 0 ? 1 : -1);
  }
}

TEST(BuildR, MatchesBernoulliOracle) {
  for (long k = 1; k <= 30; ++k) {
    std::vector<ZetaCoefficient> want(static_cast<size_t>(2 * k + 3));
    for (long j = 0; j <= k + 1; ++j) {
      BigRational c = bern(2 * j) * bern(2 * k + 2 - 2 * j) / BigRational(fact(2 * j) * fact(2 * k + 2 - 2 * j));
      c.canonicalize();
      want[2 * j] = c;
    }
    expect_coeffs(fam::build_R(k), want);
  }
  EXPECT_EQ(fam::build_R(2).coeffs[0], ZetaCoefficient(BigRational(1, 30240)));
  EXPECT_EQ(fam::build_R_truncated(3).degree(), 4);
}

TEST(BuildP, FirstZetaThreePolynomial) {
  // -(1/90)(1 + 5z^2 + z^4) + lambda (z + z^3)
  const auto p = fam::build_P(2);
  EXPECT_EQ(p.pi_power, 3);
  expect_coeffs(p, {BigRational(-1, 90), ZetaCoefficient::lambda(1), BigRational(-1, 18), ZetaCoefficient::lambda(1),
                    BigRational(-1, 90)});
}

TEST(BuildP, MatchesClosedFormOracle) {
  for (long k = 2; k <= 40; ++k) {
    const int eps = k % 2 == 0 ? 1 : -1;
    std::vector<ZetaCoefficient> want(static_cast<size_t>(2 * k + 1));
    for (long j = 0; j <= k; ++j) {
      BigRational c = BigRational(BigInt(1) << static_cast<unsigned>(2 * k - 1), fact(2 * k)) * (j % 2 == 0 ? 1 : -1) *
                      bern(2 * j) * bern(2 * k - 2 * j) * BigRational(choose(2 * k, 2 * j));
      c.canonicalize();
      want[2 * j] = c;
    }
    want[1] += ZetaCoefficient::lambda(eps);
    want[2 * k - 1] += ZetaCoefficient::lambda(1);
    const auto p = fam::build_P(k);
    expect_coeffs(p, want);
    EXPECT_EQ(p.epsilon, eps);
    EXPECT_EQ(p.degree(), 2 * k);
  }
}

TEST(BuildQ, KTwoGolden) {
  const auto q = fam::build_Q(2);
  expect_coeffs(q, {BigRational(0), ZetaCoefficient::lambda(7), BigRational(-1, 2), ZetaCoefficient::lambda(7)});
  EXPECT_EQ(q.origin_multiplicity(), 1);
}

TEST(BuildQ, LinearCoefficient) {
  for (long k = 2; k <= 30; ++k) {
    const BigRational m = (k % 2 == 0 ? 1 : -1) * (BigRational(BigInt(1) << static_cast<unsigned>(2 * k - 1)) - 1);
    EXPECT_EQ(fam::build_Q(k).coeffs[1], ZetaCoefficient::lambda(m)) << "k=" << k;
  }
}

TEST(BuildW, KTwoProportionalToSevenTenSeven) {
  const auto w = fam::build_W(2);
  ASSERT_EQ(w.degree(), 4);
  const BigRational s = w.coeffs[0].a() / 7;
  expect_coeffs(w, {BigRational(7 * s), BigRational(0), BigRational(-10 * s), BigRational(0), BigRational(7 * s)});
  EXPECT_EQ(w.combination_scale, 2);
}

TEST(BuildY, SmallGolden) {
  expect_coeffs(fam::build_Y(3), {BigRational(0), BigRational(-1, 192), BigRational(-1, 192)});
  expect_coeffs(fam::build_Y(2), {BigRational(0), BigRational(1, 16)});
  EXPECT_EQ(fam::build_Y(2).nontrivial_degree(), 0);
}

TEST(BuildY, ClosedFormMatchesSymmetrization) {
  for (long k = 2; k <= 40; ++k) {
    const auto y = fam::build_Y(k), s = fam::build_Y_symmetrized(k);
    expect_coeffs(y, s.coeffs);
    EXPECT_EQ(y.origin_multiplicity(), 1);
    EXPECT_EQ(y.degree(), k - 1);
    EXPECT_EQ(y.coeffs.front(), ZetaCoefficient());
  }
}

TEST(Combinations, QExactWTwice) {
  for (long k = 2; k <= 60; ++k) {
    expect_coeffs(fam::build_Q(k), fam::build_Q_combination(k).coeffs);
    auto wc = fam::build_W_combination(k).coeffs;
    for (auto& c : wc) c *= BigRational(2);
    expect_coeffs(fam::build_W(k), wc);
  }
}

TEST(SelfInversive, AllFamiliesToSixty) {
  for (long k = 1; k <= 60; ++k) {
    for (Family f : {Family::R, Family::P, Family::Q, Family::Y, Family::W, Family::S}) {
      if (k < fam::family_min_k(f)) continue;
      const auto r = fam::build(f, k).reduced();
      const size_t n = r.coeffs.size() - 1;
      for (size_t j = 0; j <= n; ++j) {
        EXPECT_EQ(r.coeffs[n - j], r.coeffs[j] * BigRational(r.epsilon)) << fam::family_name(f) << k << " j=" << j;
      }
      EXPECT_TRUE(fam::build(f, k).is_self_inversive());
    }
  }
}

TEST(SelfInversive, NumericReflectionForP3) {
  const auto p = fam::build_P(3);
  const auto coeffs = p.bind(128);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-1000, 1000);
  for (int i = 0; i < 20; ++i) {
    const ComplexEnclosure z(RealEnclosure(BigRational(d(rng), 500), 128), RealEnclosure(BigRational(d(rng) + 1001, 700), 128));
    const ComplexEnclosure one(RealEnclosure(1L, 128), RealEnclosure(0L, 128));
    const auto lhs = precision::pow(z, 6) * fam::evaluate(coeffs, one / z);
    const auto rhs = fam::evaluate(coeffs, z) * RealEnclosure(-1L, 128);
    EXPECT_TRUE((lhs - rhs).contains_zero());
  }
}

TEST(Chebyshev, KTwoGolden) {
  const auto form = fam::chebyshev_reduce(2);
  ASSERT_EQ(form.degree(), 4);
  const std::vector<ZetaCoefficient> want{BigRational(-1, 90), ZetaCoefficient::lambda(1), BigRational(-1, 18),
                                          ZetaCoefficient::lambda(1), BigRational(-1, 90)};
  for (size_t m = 0; m < want.size(); ++m) EXPECT_EQ(form.coeffs[m], want[m]) << "m=" << m;
  // T_4 = 8u^4 - 8u^2 + 1, T_3 = 4u^3 - 3u, T_2 = 2u^2 - 1
  const auto pb = fam::to_power_basis(form);
  EXPECT_EQ(pb[4], ZetaCoefficient(BigRational(-4, 45)));
  EXPECT_EQ(pb[3], ZetaCoefficient::lambda(4));
  EXPECT_EQ(pb[0], ZetaCoefficient(BigRational(-1, 90) + BigRational(1, 18) - BigRational(1, 90)));
}

TEST(Chebyshev, RoundTripOnUnitCircle) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(1, 9999);
  for (long k : {2L, 5L, 10L, 25L}) {
    const auto p = fam::build_P(k);
    const auto form = fam::chebyshev_reduce(k);
    const auto pc = p.bind(192);
    const auto fc = form.bind(192);
    for (int i = 0; i < 50; ++i) {
      const RealEnclosure t(BigRational(d(rng), 1000), 192);
      const ComplexEnclosure z(precision::cos(t), precision::sin(t));
      const auto zn = precision::pow(z, 2 * k);
      const auto lhs = zn * (fam::clenshaw(fc, precision::cos(t)) * 2);
      const ComplexEnclosure eps(RealEnclosure(k % 2 == 0 ? 1L : -1L, 192), RealEnclosure(0L, 192));
      const auto rhs = (zn + eps) * fam::evaluate(pc, z);
      EXPECT_TRUE((lhs - rhs).contains_zero()) << "k=" << k;
    }
  }
}

TEST(Chebyshev, EndpointValue) {
  for (long k = 2; k <= 20; ++k) {
    const auto p = fam::build_P(k);
    ZetaCoefficient at_one;
    for (const auto& c : p.coeffs) at_one += c;
    const auto form = fam::chebyshev_reduce(k);
    EXPECT_EQ(form.endpoint_value(1) * BigRational(2), at_one * BigRational(1 + (k % 2 == 0 ? 1 : -1)));
  }
}

TEST(AbsSquare, MatchesNumericModulus) {
  for (long k : {2L, 3L, 6L}) {
    const auto a = fam::abs_square_coeffs(k);
    ASSERT_EQ(static_cast<long>(a.size()), 4 * k + 1);
    EXPECT_EQ(a.front(), a.back());
    const auto lambda = precision::lambda_k(k, 160);
    std::vector<RealEnclosure> bound;
    for (const auto& c : a) bound.push_back(c.evaluate(lambda));
    const auto pc = fam::build_P(k).bind(160);
    for (const BigRational& x : {BigRational(37, 100), BigRational(-3, 2), BigRational(2, 7), BigRational(5)}) {
      const ComplexEnclosure iz(RealEnclosure(0L, 160), RealEnclosure(x, 160));
      const auto want = precision::norm(fam::evaluate(pc, iz));
      const auto got = fam::evaluate(bound, RealEnclosure(x, 160));
      EXPECT_TRUE(got.overlaps(want)) << "k=" << k << " x=" << x.get_str();
    }
  }
}

}  // namespace
