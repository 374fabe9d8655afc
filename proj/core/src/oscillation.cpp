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

#include "circlezero/verify.hpp"
#include "circlezero/zeta.hpp"

namespace circlezero::verify {

namespace {

RealEnclosure angle(const BigRational& r, Bits bits) { return precision::pi_enclosure(bits) * RealEnclosure(r, bits); }

// sin((k-3) t) / sin t, i.e. U_{k-4}(cos t)
RealEnclosure dirichlet_ratio(long k, const BigRational& r, Bits bits) {
  if (r == 0) return RealEnclosure(k - 3, bits);
  const RealEnclosure t = angle(r, bits);
  return precision::sin(t * (k - 3)) / precision::sin(t);
}

long certified_floor(const RealEnclosure& x) {
  const mpq_class lo = x.lower_rational();
  const mpq_class hi = x.upper_rational();
  mpz_class flo, fhi;
  mpz_fdiv_q(flo.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  mpz_fdiv_q(fhi.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
  if (flo != fhi) throw precision::PrecisionError("floor of an enclosure is undecided");
  return flo.get_si();
}

long j0_from(long k, RealEnclosure (*alpha)(Bits)) {
  return precision::with_retries(PrecisionConfig{}, [&](Bits bits) -> std::optional<long> {
    try {
      return certified_floor(alpha(bits) * (k - 1)) + 1;
    } catch (const precision::PrecisionError&) {
      return std::nullopt;
    }
  });
}

// Positive half of the sample grid as multiples of pi.
std::vector<BigRational> positive_grid(long k, long j0) {
  std::vector<BigRational> out;
  const BigRational step(1, k - 1);
  for (long j = 1; j <= j0 - 1; ++j) out.emplace_back(BigRational(j) * step);
  for (long j = j0; j <= k - j0; ++j) out.emplace_back((BigRational(j) - BigRational(1, 2)) * step);
  for (long j = k - j0; j <= k - 2; ++j) out.emplace_back(BigRational(j) * step);
  const BigRational eps(1, 8 * k);
  out.emplace_back((BigRational(k - 1) - eps) * step);
  for (auto& q : out) q.canonicalize();
  return out;
}

std::vector<BigRational> mirrored(const std::vector<BigRational>& pos_full, const std::vector<BigRational>& pos_kept) {
  std::vector<BigRational> out;
  for (auto it = pos_full.rbegin(); it != pos_full.rend(); ++it) out.emplace_back(-*it);
  out.emplace_back(0);
  out.insert(out.end(), pos_kept.begin(), pos_kept.end());
  return out;
}

VerificationReport routed(Family family, long k, const PrecisionConfig& cfg, const char* why) {
  VerificationReport rep = verify_sign_count(families::build(family, k), cfg);
  rep.requested = Method::oscillation;
  rep.note = why;
  return rep;
}

template <class BoundFn>
std::pair<RealEnclosure, int> decide_bound(BoundFn bound, const BigRational& d, const PrecisionConfig& cfg) {
  PrecisionConfig cur = cfg;
  while (true) {
    RealEnclosure b = bound(cur.bits);
    const int s = (RealEnclosure(d, cur.bits) - b).sign();
    if (s != 0 || cur.max_retries <= 0) return {b, s};
    cur = cur.doubled();
  }
}

VerificationReport finish(Family family, long k, long zeros, long origin, const RealEnclosure& bound, int bound_sign,
                          const OscillationReport& alt, long required) {
  VerificationReport rep;
  rep.family = family;
  rep.k = k;
  rep.method = Method::oscillation;
  rep.requested = Method::oscillation;
  rep.degree = zeros;
  rep.zeros_at_origin = origin;
  rep.bound = bound;
  rep.margin = alt.min_abs;
  rep.order_achieved = alt.order_achieved;
  rep.target = required;
  rep.bits = alt.bits;
  const bool ok = bound_sign > 0 && alt.distance_certified && alt.order_achieved >= required;
  if (ok) {
    rep.status = Status::certified;
    rep.zeros_on_circle = zeros;
  } else {
    rep.status = Status::indeterminate;
    rep.note = bound_sign <= 0 ? "uniform bound not below the oscillation distance" : "alternation not certified";
  }
  return rep;
}

}  // namespace

RealEnclosure wk(long k, const BigRational& r, Bits bits) {
  const RealEnclosure t = angle(r, bits);
  const RealEnclosure pi = precision::pi_enclosure(bits);
  BigRational lead = 2 / (1 - exact::pow2(1 - 2 * k));
  lead.canonicalize();
  return precision::cos(t * k) * 2 + pi * pi / 3 * precision::cos(t * (k - 2)) +
         RealEnclosure(lead, bits) * dirichlet_ratio(k, r, bits);
}

RealEnclosure qk(long k, const BigRational& r, Bits bits) {
  const RealEnclosure t = angle(r, bits);
  const RealEnclosure pi = precision::pi_enclosure(bits);
  BigRational scale = 8 * (1 - exact::pow2(3 - 2 * k)) / (1 - exact::pow2(2 - 2 * k));
  scale.canonicalize();
  const RealEnclosure c = RealEnclosure(scale, bits) / (pi * pi);
  return precision::cos(t * (k - 2)) * 2 + RealEnclosure(4, bits) / pi * precision::sin(t * (k - 1)) +
         c * dirichlet_ratio(k, r, bits);
}

RealEnclosure alpha_w(Bits bits) {
  const RealEnclosure pi = precision::pi_enclosure(bits);
  const RealEnclosure x = RealEnclosure(BigRational(3, 10), bits) / (pi * pi / 3 - RealEnclosure(2, bits));
  return precision::acos(x) / pi;
}

RealEnclosure alpha_q(Bits bits) {
  const RealEnclosure pi = precision::pi_enclosure(bits);
  const RealEnclosure x = RealEnclosure(BigRational(3, 100), bits) / (RealEnclosure(2, bits) - RealEnclosure(16, bits) / (pi * pi));
  return precision::acos(x) / pi;
}

long j0_w(long k) { return j0_from(k, alpha_w); }
long j0_q(long k) { return j0_from(k, alpha_q); }

std::vector<BigRational> build_wk_samples(long k) {
  if (k <= 10) throw std::domain_error("w_k sample set requires k > 10");
  const auto pos = positive_grid(k, j0_w(k));
  return mirrored(pos, pos);
}

std::vector<BigRational> build_qk_samples_full(long k) {
  if (k <= 5) throw std::domain_error("q_k sample set requires k > 5");
  const auto pos = positive_grid(k, j0_q(k));
  return mirrored(pos, pos);
}

std::vector<BigRational> build_qk_samples(long k) {
  if (k <= 5) throw std::domain_error("q_k sample set requires k > 5");
  const long j0 = j0_q(k);
  const auto pos = positive_grid(k, j0);
  BigRational drop1 = (BigRational(j0) - BigRational(1, 2)) / (k - 1);
  BigRational drop2 = (BigRational(k - j0) - BigRational(1, 2)) / (k - 1);
  drop1.canonicalize();
  drop2.canonicalize();
  std::vector<BigRational> kept;
  for (const auto& q : pos) {
    if (q != drop1 && q != drop2) kept.push_back(q);
  }
  return mirrored(pos, kept);
}

OscillationReport alternating_verify(const AngleFunction& f, const std::vector<BigRational>& points,
                                     const BigRational& d, const PrecisionConfig& cfg) {
  cfg.validate();
  for (size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1] < points[i])) throw std::domain_error("alternating_verify requires increasing points");
  }
  OscillationReport rep;
  rep.points = points;
  rep.d = d;
  PrecisionConfig cur = cfg;
  while (true) {
    rep.bits = cur.bits;
    rep.values.clear();
    rep.signs.clear();
    bool all_clear = true;
    std::optional<RealEnclosure> min_abs;
    for (const auto& p : points) {
      RealEnclosure v = f(p, cur.bits);
      const int s = v.sign();
      RealEnclosure a = precision::abs(v);
      if ((a - RealEnclosure(d, cur.bits)).sign() <= 0) all_clear = false;
      min_abs = min_abs ? precision::min(*min_abs, a) : a;
      rep.signs.push_back(s);
      rep.values.push_back(std::move(v));
    }
    rep.min_abs = min_abs ? *min_abs : RealEnclosure(cur.bits);
    rep.distance_certified = all_clear;
    rep.order_achieved = 0;
    int last = 0;
    for (int s : rep.signs) {
      if (s == 0) continue;
      if (last != 0 && s != last) ++rep.order_achieved;
      last = s;
    }
    const bool undecided = std::any_of(rep.signs.begin(), rep.signs.end(), [](int s) { return s == 0; });
    if ((!undecided && all_clear) || cur.max_retries <= 0) return rep;
    // a point that is certified on the wrong side of d will not improve
    bool improvable = undecided;
    for (const auto& v : rep.values) {
      if ((precision::abs(v) - RealEnclosure(d, cur.bits)).sign() == 0) improvable = true;
    }
    if (!improvable) return rep;
    cur = cur.doubled();
  }
}

RealEnclosure oscillation_bound_W(long k, Bits bits) {
  if (k < 4) throw std::domain_error("oscillation_bound_W requires k >= 4");
  const FamilyPoly w = families::build_W(k);
  std::vector<BigRational> a(static_cast<size_t>(k) + 1);
  for (long j = 0; j <= k; ++j) {
    const BigRational& c = w.coeffs[static_cast<size_t>(2 * j)].a();
    a[static_cast<size_t>(j)] = j % 2 == 0 ? c : BigRational(-c);
  }
  BigRational target = 2 / (1 - exact::pow2(1 - 2 * k));
  BigRational tail = 0;
  for (long j = 2; j <= k - 2; ++j) tail += abs(a[static_cast<size_t>(j)] / a[0] - target);
  tail.canonicalize();
  BigRational r1 = a[1] / a[0];
  r1.canonicalize();
  const RealEnclosure pi = precision::pi_enclosure(bits);
  return precision::abs(RealEnclosure(r1, bits) - pi * pi / 6) * 2 + RealEnclosure(tail, bits);
}

RealEnclosure oscillation_bound_Q(long k, Bits bits) {
  if (k < 4) throw std::domain_error("oscillation_bound_Q requires k >= 4");
  const FamilyPoly q = families::build_Q(k);
  std::vector<BigRational> a(static_cast<size_t>(k) + 1);
  for (long j = 0; j <= k; ++j) {
    const size_t m = static_cast<size_t>(2 * j);
    const BigRational c = m < q.coeffs.size() ? q.coeffs[m].a() : BigRational(0);
    a[static_cast<size_t>(j)] = j % 2 == 0 ? c : BigRational(-c);
  }
  const RealEnclosure pi = precision::pi_enclosure(bits);
  BigRational cs = 8 * (1 - exact::pow2(3 - 2 * k)) / (1 - exact::pow2(2 - 2 * k));
  cs.canonicalize();
  const RealEnclosure c = RealEnclosure(cs, bits) / (pi * pi);
  RealEnclosure sum(bits);
  for (long j = 2; j <= k - 2; ++j) {
    BigRational r = a[static_cast<size_t>(j)] / a[1];
    r.canonicalize();
    sum += precision::abs(RealEnclosure(r, bits) - c);
  }
  BigRational odd = (exact::pow2(2 * k - 1) - 1) / a[1];
  if (k % 2 == 1) odd = -odd;
  odd.canonicalize();
  const RealEnclosure lambda = precision::lambda_k(k, bits);
  const RealEnclosure two_over_pi = RealEnclosure(2, bits) / pi;
  return sum + precision::abs(lambda * RealEnclosure(odd, bits) - two_over_pi) * 2;
}

VerificationReport oscillation_verify_W(long k, const PrecisionConfig& cfg) {
  if (k <= 10) return routed(Family::W, k, cfg, "k <= 10 routed to sign-count");
  const BigRational d(3, 10);
  const auto [bound, sign] = decide_bound([k](Bits b) { return oscillation_bound_W(k, b); }, d, cfg);
  const AngleFunction f = [k](const BigRational& r, Bits b) { return wk(k, r, b); };
  const OscillationReport alt = alternating_verify(f, build_wk_samples(k), d, cfg);
  return finish(Family::W, k, 2 * k, 0, bound, sign, alt, 2 * k);
}

VerificationReport oscillation_verify_Q(long k, const PrecisionConfig& cfg) {
  if (k <= 5) return routed(Family::Q, k, cfg, "k <= 5 routed to sign-count");
  const BigRational d(3, 100);
  const auto [bound, sign] = decide_bound([k](Bits b) { return oscillation_bound_Q(k, b); }, d, cfg);
  const AngleFunction f = [k](const BigRational& r, Bits b) { return qk(k, r, b); };
  const OscillationReport alt = alternating_verify(f, build_qk_samples(k), d, cfg);
  return finish(Family::Q, k, 2 * k - 2, 1, bound, sign, alt, 2 * k - 2);
}

}  // namespace circlezero::verify
