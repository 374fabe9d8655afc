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


#include <algorithm>
#include <stdexcept>

#include "circlezero/identities.hpp"
#include "circlezero/zeta.hpp"

namespace circlezero::identities {

using exact::bernoulli;
using exact::pow2;

ExactIdentity s_at_one(long k) {
  const families::FamilyPoly s = families::build_S(k);
  BigRational sum = 0;
  for (const auto& c : s.coeffs) sum += c.a();
  BigRational rhs = pow2(2 * k + 1) * (pow2(2 * k + 2) - 1) * abs(bernoulli(2 * k + 2)) / (k + 1);
  rhs.canonicalize();
  return {"sk-at-1", k, BigRational(abs(sum)), rhs};
}

ExactIdentity y_coefficient_sum(long k) {
  const families::FamilyPoly y = families::build_Y(k);
  BigRational sum = 0;
  for (size_t j = 1; j < y.coeffs.size(); ++j) sum += y.coeffs[j].a();
  BigRational rhs = -pow2(2 * k) * (2 * k - 1) * (1 - pow2(-2 * k)) * bernoulli(2 * k) /
                    BigRational(exact::factorial(2 * k));
  rhs.canonicalize();
  sum.canonicalize();
  return {"qk-sum", k, sum, rhs};
}

namespace {

bool same_coeffs(const families::FamilyPoly& a, const families::FamilyPoly& b, const BigRational& scale) {
  const size_t n = std::max(a.coeffs.size(), b.coeffs.size());
  for (size_t j = 0; j < n; ++j) {
    const ZetaCoefficient x = j < a.coeffs.size() ? a.coeffs[j] : ZetaCoefficient();
    const ZetaCoefficient y = j < b.coeffs.size() ? b.coeffs[j] * scale : ZetaCoefficient();
    if (!(x == y)) return false;
  }
  return true;
}

}  // namespace

bool q_combination_matches(long k) {
  return same_coeffs(families::build_Q(k), families::build_Q_combination(k), 1);
}

bool w_combination_matches(long k) {
  return same_coeffs(families::build_W(k), families::build_W_combination(k), 2);
}

bool self_inversive(Family f, long k) { return families::build(f, k).is_self_inversive(); }

ObservationReport observation_check(long k, Bits bits) {
  if (k < 2) throw std::domain_error("observation_check requires k >= 2");
  const std::vector<ZetaCoefficient> a = families::abs_square_coeffs(k);
  const ZetaCoefficient& top = a.back();
  if (!top.is_rational() || top.a() == 0) throw std::logic_error("leading coefficient of |P_k(iz)|^2 not rational");
  ObservationReport rep;
  rep.k = k;
  rep.bits = bits;
  PrecisionConfig cfg;
  cfg.bits = bits;
  // signs of A_top - A_j; retry at higher precision if one is undecided
  std::vector<ZetaCoefficient> diffs;
  for (const auto& x : a) diffs.push_back(top - x);
  Bits sign_bits = bits;
  for (int attempt = 0;; ++attempt) {
    const RealEnclosure lambda = precision::lambda_k(k, sign_bits);
    rep.signs.clear();
    bool undecided = false;
    for (const auto& d : diffs) {
      if (d.is_zero()) {
        rep.signs.push_back(0);
        continue;
      }
      const int s = d.evaluate(lambda).sign();
      if (s == 0) undecided = true;
      rep.signs.push_back(s);
    }
    if (!undecided) break;
    if (attempt >= cfg.max_retries) throw precision::PrecisionError("observation signs undecided");
    sign_bits *= 2;
  }
  const BigRational abs_top = abs(top.a());
  const BigRational lhs = BigRational(4 * k * (k - 1)) * abs_top;
  ZetaCoefficient signed_sum;
  for (size_t j = 0; j < diffs.size(); ++j) {
    if (rep.signs[j] > 0) signed_sum += diffs[j];
    if (rep.signs[j] < 0) signed_sum -= diffs[j];
  }
  rep.exact_holds = signed_sum == ZetaCoefficient(lhs);

  const RealEnclosure lambda = precision::lambda_k(k, bits);
  RealEnclosure sum(bits);
  for (const auto& d : diffs) sum += precision::abs(d.evaluate(lambda));
  const RealEnclosure top_abs(abs_top, bits);
  rep.residual = (RealEnclosure(lhs, bits) - sum) / top_abs;
  return rep;
}

}  // namespace circlezero::identities
