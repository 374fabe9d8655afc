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

#include "circlezero/approx.hpp"
#include "circlezero/families.hpp"
#include "circlezero/verify.hpp"
#include "circlezero/zeta.hpp"

namespace circlezero::approx {

namespace {

mpz_class floor_scaled(const mpq_class& v, int d) {
  mpz_class ten;
  mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(d));
  const mpq_class s = v * mpq_class(ten);
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
  return out;
}

ApproxResult finish(Scheme scheme, const NewtonResult& nr, const ComplexEnclosure& quotient, Bits bits) {
  ApproxResult r;
  r.scheme = scheme;
  r.seed = nr.seed;
  r.root = nr.root;
  r.residual = nr.residual;
  r.newton_steps = nr.steps;
  r.bits = bits;
  r.estimate = quotient.re();
  r.estimate_imag = quotient.im();
  r.zeta3 = precision::zeta_odd(3, bits);
  r.error = r.estimate - r.zeta3;
  r.matched_decimals = matched_decimals(r.estimate, r.zeta3);
  return r;
}

void require_bits(Bits bits) {
  if (bits < 128) throw std::domain_error("zeta(3) schemes require at least 128 bits");
}

}  // namespace

std::string to_string(Scheme s) { return s == Scheme::approx1 ? "approx1" : "approx2"; }

Scheme parse_scheme(const std::string& name) {
  if (name == "approx1") return Scheme::approx1;
  if (name == "approx2") return Scheme::approx2;
  throw std::invalid_argument("unknown scheme: " + name);
}

std::string to_string(SeedConvention c) { return c == SeedConvention::standard ? "standard" : "alternate"; }

SeedConvention parse_seed_convention(const std::string& name) {
  if (name == "standard") return SeedConvention::standard;
  if (name == "alternate") return SeedConvention::alternate;
  throw std::invalid_argument("unknown seed convention: " + name);
}

int matched_decimals(const RealEnclosure& x, const RealEnclosure& ref) {
  const mpq_class pts[4] = {x.lower_rational(), x.upper_rational(), ref.lower_rational(), ref.upper_rational()};
  if (sgn(pts[0]) <= 0 || sgn(pts[2]) <= 0) throw std::domain_error("matched_decimals expects positive values");
  // shift so that the leading digit of ref sits at 10^0
  int lead = 0;
  mpq_class r = pts[2];
  while (r >= 10) {
    r /= 10;
    ++lead;
  }
  while (r < 1) {
    r *= 10;
    --lead;
  }
  int d = 0;
  for (int digits = 1; digits <= 400; ++digits) {
    const int shift = digits - 1 - lead;
    mpq_class scale = 1;
    for (int i = 0; i < std::abs(shift); ++i) scale *= 10;
    const mpq_class factor = shift >= 0 ? scale : mpq_class(1 / scale);
    const mpz_class f0 = floor_scaled(pts[0] * factor, 0);
    bool same = true;
    for (const auto& p : pts) {
      if (floor_scaled(p * factor, 0) != f0) same = false;
    }
    if (!same) break;
    d = digits;
  }
  return d;
}

ApproxResult approx1_zeta3(Bits bits, SeedConvention convention) {
  require_bits(bits);
  const auto roots = verify::find_roots(families::build_P(2), bits);
  std::vector<ComplexEnclosure> quadrant;
  for (const auto& z : roots) {
    if (z.re().sign() > 0 && z.im().sign() < 0) quadrant.push_back(z.midpoint());
  }
  std::sort(quadrant.begin(), quadrant.end(), [](const ComplexEnclosure& a, const ComplexEnclosure& b) {
    return precision::certainly_greater(a.re(), b.re());
  });
  const size_t pick = convention == SeedConvention::standard ? 0 : 1;
  if (quadrant.size() <= pick) throw verify::NumericError("no P_2 root in the seed quadrant");
  const NewtonResult nr = newton_solve(approx1_constraint(), quadrant[pick], bits);
  const ComplexEnclosure& z = nr.root;
  const ComplexEnclosure z2 = z * z;
  const ComplexEnclosure one(RealEnclosure(1, bits));
  const ComplexEnclosure num = z2 * z2 + z2 * RealEnclosure(5, bits) + one;
  const ComplexEnclosure den = z2 * z + z;
  const RealEnclosure pi = precision::pi_enclosure(bits);
  return finish(Scheme::approx1, nr, num / den * (pi * pi * pi / 90L), bits);
}

ApproxResult approx2_zeta3(Bits bits) {
  require_bits(bits);
  const ComplexEnclosure seed(RealEnclosure(mpq_class(92, 100), bits), RealEnclosure(mpq_class(-39, 100), bits));
  const NewtonResult nr = newton_solve(approx2_constraint(), seed, bits);
  const ComplexEnclosure& z = nr.root;
  const ComplexEnclosure one(RealEnclosure(1, bits));
  const RealEnclosure pi = precision::pi_enclosure(bits);
  return finish(Scheme::approx2, nr, z / (one + z * z) * (pi * pi * pi / 14L), bits);
}

ApproxResult run_scheme(Scheme s, Bits bits, SeedConvention seed) {
  return s == Scheme::approx1 ? approx1_zeta3(bits, seed) : approx2_zeta3(bits);
}

std::vector<AuxiliaryPair> auxiliary_zeros(long k, Bits bits) {
  if (k < 2) throw std::domain_error("auxiliary_zeros requires k >= 2");
  const verify::RootCertificate cert = verify::certify_roots(families::build_P(k), bits);
  const auto terms = auxiliary_constraint(k);
  std::vector<AuxiliaryPair> out;
  for (const auto& root : cert.roots) {
    if (root.contains_zero() && root.re().is_exact() && root.im().is_exact()) continue;
    AuxiliaryPair pair;
    pair.poly_root = root;
    try {
      const NewtonResult nr = newton_solve(terms, root.midpoint(), bits);
      pair.aux_root = nr.root;
      pair.distance = precision::abs(nr.root - root.midpoint());
    } catch (const verify::NumericError& e) {
      pair.error = e.what();
    }
    out.push_back(std::move(pair));
  }
  return out;
}

}  // namespace circlezero::approx
