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
#include <cmath>
#include <stdexcept>

#include "circlezero/approx.hpp"
#include "circlezero/families.hpp"

namespace circlezero::approx {

namespace {

constexpr long kMaxDepth = 1000000;

RealEnclosure upper_ball(const RealEnclosure& x, Bits bits) {
  const mpq_class u = x.upper_rational();
  return RealEnclosure::hull(u, u, bits);
}

RealEnclosure lower_ball(const RealEnclosure& x, Bits bits) {
  const mpq_class l = x.lower_rational();
  return RealEnclosure::hull(l, l, bits);
}

// sum_{n > N} c e^{-n b} / (1 - e^{-b})^p for b > 0, c >= 0
RealEnclosure geometric_tail(const RealEnclosure& c, const RealEnclosure& b, long N, int p, Bits bits) {
  const RealEnclosure b_lo = lower_ball(b, bits);
  const RealEnclosure q = precision::exp(-b_lo);
  RealEnclosure denom = RealEnclosure(1, bits) - q;
  denom = p == 2 ? denom * denom : denom;
  return upper_ball(upper_ball(c, bits) * precision::exp(-(b_lo * (N + 1))) / denom, bits);
}

// Decay rates and prefactors for the two sums of each identity.
struct TailShape {
  RealEnclosure c1, b1, c2, b2;
  int power;
};

TailShape ramanujan_shape(long k, const ComplexEnclosure& z, Bits bits) {
  const RealEnclosure two_pi = precision::pi_enclosure(bits) * 2L;
  const RealEnclosure re_inv = z.re() / precision::norm(z);
  if (z.re().sign() <= 0 || re_inv.sign() <= 0) {
    throw std::domain_error("ramanujan identity requires Re z > 0");
  }
  const RealEnclosure mod = precision::abs(z);
  return {precision::pow(mod, 2 * k - 1), two_pi * re_inv, mod, two_pi * z.re(), 2};
}

TailShape sech_shape(long k, const RealEnclosure& z, Bits bits) {
  if (z.sign() <= 0) throw std::domain_error("sech identity requires z > 0");
  const RealEnclosure half_pi = precision::pi_enclosure(bits) / 2L;
  const RealEnclosure two(2, bits);
  return {two * precision::pow(z, 2 * k), half_pi / z, two, half_pi * z, 1};
}

RealEnclosure tail_of(const TailShape& s, long N, Bits bits) {
  return geometric_tail(s.c1, s.b1, N, s.power, bits) + geometric_tail(s.c2, s.b2, N, s.power, bits);
}

long pick_depth(const TailShape& s, Bits bits) {
  // estimate with doubles, then confirm with the rigorous bound
  const double target = std::ldexp(1.0, -static_cast<int>(bits / 2));
  const double rate = std::min(s.b1.lower_double(), s.b2.lower_double());
  if (!(rate > 0)) throw std::domain_error("series does not converge");
  const double scale = std::max({1.0, s.c1.upper_double(), s.c2.upper_double()});
  long n = std::max(1L, static_cast<long>(std::ceil((std::log(scale) - std::log(target)) / rate)));
  if (n > kMaxDepth) throw std::domain_error("point too close to the imaginary axis");
  const RealEnclosure t(mpq_class(target), bits);
  while ((t - tail_of(s, n, bits)).sign() <= 0) {
    n = std::max(n + 1, n + n / 8);
    if (n > kMaxDepth) throw std::domain_error("point too close to the imaginary axis");
  }
  // walk back while the smaller depth still qualifies
  while (n > 1 && (t - tail_of(s, n - 1, bits)).sign() > 0) --n;
  return n;
}

RealEnclosure inv_power(long n, long e, Bits bits) {
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(e));
  return RealEnclosure(mpq_class(mpz_class(1), d), bits);
}

RealEnclosure sech(const RealEnclosure& y) {
  const RealEnclosure e = precision::exp(-y);
  return e * 2L / (RealEnclosure(1, y.precision()) + e * e);
}

void widen(ComplexEnclosure& x, const RealEnclosure& r) {
  x.re().add_error(r);
  x.im().add_error(r);
}

}  // namespace

double SeriesEvaluation::width() const { return std::max(residual.re().rad_double(), residual.im().rad_double()); }

long auto_depth_ramanujan(long k, const ComplexEnclosure& z, Bits bits) {
  return pick_depth(ramanujan_shape(k, z, bits), bits);
}

long auto_depth_sech(long k, const RealEnclosure& z, Bits bits) { return pick_depth(sech_shape(k, z, bits), bits); }

SeriesEvaluation ramanujan_identity_residual(long k, const ComplexEnclosure& z_in, long N, Bits bits) {
  if (k < 2) throw std::domain_error("ramanujan identity requires k >= 2");
  if (N < 0) throw std::domain_error("N must be nonnegative");
  const ComplexEnclosure z(z_in.re().with_precision(bits), z_in.im().with_precision(bits));
  const TailShape shape = ramanujan_shape(k, z, bits);
  if (N == 0) N = pick_depth(shape, bits);

  SeriesEvaluation ev;
  ev.identity = "ramanujan";
  ev.k = k;
  ev.z = z;
  ev.N = N;
  ev.bits = bits;

  const RealEnclosure pi = precision::pi_enclosure(bits);
  const families::FamilyPoly p = families::build_P(k);
  ev.lhs = families::evaluate(p.bind(bits), z) * (precision::pow(pi, 2 * k - 1) / 2L);

  const ComplexEnclosure one(RealEnclosure(1, bits));
  const ComplexEnclosure two_pi(pi * 2L);
  const ComplexEnclosure w1 = two_pi / z;
  const ComplexEnclosure w2 = two_pi * z;
  const ComplexEnclosure zp = precision::pow(z, 2 * k - 1);
  ComplexEnclosure s1(bits), s2(bits);
  for (long n = 1; n <= N; ++n) {
    const RealEnclosure c = inv_power(n, 2 * k - 1, bits);
    const ComplexEnclosure nn(RealEnclosure(n, bits));
    s1 += (zp / (precision::exp(w1 * nn) - one)) * c;
    s2 += (z / (precision::exp(w2 * nn) - one)) * c;
  }
  ev.rhs = k % 2 == 1 ? s2 - s1 : -s1 - s2;
  ev.tail_bound = tail_of(shape, N, bits);
  widen(ev.rhs, ev.tail_bound);
  ev.residual = ev.lhs - ev.rhs;
  return ev;
}

SeriesEvaluation sech_identity_residual(long k, const RealEnclosure& z_in, long N, Bits bits) {
  if (k < 1) throw std::domain_error("sech identity requires k >= 1");
  if (N < 0) throw std::domain_error("N must be nonnegative");
  const RealEnclosure z = z_in.with_precision(bits);
  const TailShape shape = sech_shape(k, z, bits);
  if (N == 0) N = pick_depth(shape, bits);

  SeriesEvaluation ev;
  ev.identity = "sech";
  ev.k = k;
  ev.z = ComplexEnclosure(z);
  ev.N = N;
  ev.bits = bits;

  const RealEnclosure pi = precision::pi_enclosure(bits);
  const families::FamilyPoly s = families::build_S(k);
  const RealEnclosure x = -(z * z);
  const RealEnclosure scale =
      precision::pow(pi / 2L, 2 * k + 1) / RealEnclosure(mpz_class(exact::factorial(2 * k) * 2), bits);
  ev.lhs = ComplexEnclosure(families::evaluate(s.bind(bits), x) * scale);

  RealEnclosure s1(bits), s2(bits);
  const RealEnclosure half_pi = pi / 2L;
  for (long n = 1; n <= N; n += 2) {
    const RealEnclosure c = inv_power(n, 2 * k + 1, bits);
    const RealEnclosure t1 = sech(half_pi * n / z) * c;
    const RealEnclosure t2 = sech(half_pi * n * z) * c;
    if (n % 4 == 1) {
      s1 += t1;
      s2 += t2;
    } else {
      s1 -= t1;
      s2 -= t2;
    }
  }
  RealEnclosure rhs = s1 * precision::pow(z, 2 * k) + (k % 2 == 0 ? s2 : -s2);
  ev.tail_bound = tail_of(shape, N, bits);
  rhs.add_error(ev.tail_bound);
  ev.rhs = ComplexEnclosure(rhs);
  ev.residual = ev.lhs - ev.rhs;
  return ev;
}

}  // namespace circlezero::approx
