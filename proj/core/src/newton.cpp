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


#include <cmath>
#include <sstream>

#include "circlezero/approx.hpp"
#include "circlezero/verify.hpp"

namespace circlezero::approx {

namespace {

ComplexEnclosure power(const ComplexEnclosure& z, long p) {
  if (p == 0) return ComplexEnclosure(RealEnclosure(1, z.precision()));
  return precision::pow(z, p);
}

double magnitude(const ComplexEnclosure& z) { return std::hypot(z.re().mid_double(), z.im().mid_double()); }

std::string describe(const ComplexEnclosure& z) {
  std::ostringstream os;
  os << "(" << z.re().mid_string(12) << ", " << z.im().mid_string(12) << ")";
  return os.str();
}

}  // namespace

ComplexEnclosure exp_sum(const std::vector<ExpTerm>& terms, const ComplexEnclosure& z) {
  const Bits bits = z.precision();
  const RealEnclosure pi = precision::pi_enclosure(bits);
  const ComplexEnclosure one(RealEnclosure(1, bits));
  ComplexEnclosure s(bits);
  for (const auto& t : terms) {
    const ComplexEnclosure arg = (t.q > 0 ? z : one / z) * (pi * RealEnclosure(t.scale, bits));
    s += power(z, t.p) / (precision::exp(arg) - one) * RealEnclosure(t.coef, bits);
  }
  return s;
}

ComplexEnclosure exp_sum_derivative(const std::vector<ExpTerm>& terms, const ComplexEnclosure& z) {
  const Bits bits = z.precision();
  const RealEnclosure pi = precision::pi_enclosure(bits);
  const ComplexEnclosure one(RealEnclosure(1, bits));
  ComplexEnclosure s(bits);
  for (const auto& t : terms) {
    const RealEnclosure c = pi * RealEnclosure(t.scale, bits);
    const ComplexEnclosure arg = (t.q > 0 ? z : one / z) * c;
    const ComplexEnclosure e = precision::exp(arg);
    const ComplexEnclosure em1 = e - one;
    // d/dz z^p/(E-1) = p z^{p-1}/(E-1) - z^p E (c q z^{q-1})/(E-1)^2
    const ComplexEnclosure darg = (t.q > 0 ? one : -(one / (z * z))) * c;
    ComplexEnclosure d = -(power(z, t.p) * e * darg / (em1 * em1));
    if (t.p != 0) d += power(z, t.p - 1) * RealEnclosure(t.p, bits) / em1;
    s += d * RealEnclosure(t.coef, bits);
  }
  return s;
}

NewtonResult newton_solve(const std::vector<ExpTerm>& terms, const ComplexEnclosure& seed_in, Bits bits,
                          int max_steps) {
  NewtonResult res;
  ComplexEnclosure z(seed_in.re().with_precision(bits).midpoint(), seed_in.im().with_precision(bits).midpoint());
  res.seed = z;
  const double tol = std::ldexp(1.0, -static_cast<int>(bits) + 10);
  ComplexEnclosure f = exp_sum(terms, z).midpoint();
  double fmag = magnitude(f);
  for (int step = 0; step < max_steps; ++step) {
    res.steps = step + 1;
    const ComplexEnclosure df = exp_sum_derivative(terms, z).midpoint();
    if (!std::isfinite(fmag) || magnitude(df) == 0.0) break;
    const ComplexEnclosure delta = (f / df).midpoint();
    double damping = 1.0;
    ComplexEnclosure next = z;
    ComplexEnclosure fnext = f;
    double nmag = fmag;
    for (int halvings = 0; halvings < 40; ++halvings) {
      const RealEnclosure t = RealEnclosure::from_double(damping, bits);
      next = (z - delta * t).midpoint();
      fnext = exp_sum(terms, next).midpoint();
      nmag = magnitude(fnext);
      if (std::isfinite(nmag) && (nmag < fmag || fmag == 0.0)) break;
      damping /= 2;
    }
    const double moved = magnitude(delta) * damping;
    z = next;
    f = fnext;
    fmag = nmag;
    if (!std::isfinite(magnitude(z))) break;
    if (moved <= tol * std::max(1.0, magnitude(z)) || fmag == 0.0) {
      res.converged = true;
      break;
    }
  }
  if (!res.converged) {
    throw verify::NumericError("Newton did not converge from seed " + describe(res.seed) + "; last iterate " +
                               describe(z));
  }
  res.root = z;
  res.residual = exp_sum(terms, z);
  return res;
}

std::vector<ExpTerm> approx1_constraint() {
  return {{BigRational(1), 1, BigRational(2), -1}, {BigRational(1), -1, BigRational(2), 1}};
}

std::vector<ExpTerm> approx2_constraint() {
  return {{BigRational(2), 1, BigRational(4), 1},    {BigRational(8), 3, BigRational(1), -1},
          {BigRational(-17), 1, BigRational(2), 1},  {BigRational(-17), 3, BigRational(2), -1},
          {BigRational(8), 1, BigRational(1), 1},    {BigRational(2), 3, BigRational(4), -1}};
}

std::vector<ExpTerm> auxiliary_constraint(long k) {
  return {{BigRational(1), k - 1, BigRational(2), -1}, {BigRational(k % 2 == 0 ? 1 : -1), 1 - k, BigRational(2), 1}};
}

}  // namespace circlezero::approx
