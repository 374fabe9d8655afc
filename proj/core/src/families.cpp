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


#include "circlezero/families.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "circlezero/zeta.hpp"

namespace circlezero::families {

using exact::bernoulli;
using exact::binomial;
using exact::euler;
using exact::factorial;
using exact::pow2;

namespace {

void canon(BigRational& q) { q.canonicalize(); }

void require_k(Family f, long k) {
  if (k < family_min_k(f)) {
    throw std::domain_error("family " + family_name(f) + " requires k >= " + std::to_string(family_min_k(f)));
  }
}

FamilyPoly make(Family f, long k, long pi_power, long degree, int epsilon) {
  FamilyPoly p;
  p.family = f;
  p.k = k;
  p.pi_power = pi_power;
  p.epsilon = epsilon;
  p.coeffs.assign(static_cast<size_t>(degree) + 1, ZetaCoefficient());
  return p;
}

int parity_sign(long k) { return k % 2 == 0 ? 1 : -1; }

// 2^{2k-1}/(2k)! (-1)^j B_{2j} B_{2k-2j} C(2k, 2j)
BigRational p_even(long k, long j) {
  BigRational r = pow2(2 * k - 1) / BigRational(factorial(2 * k)) * bernoulli(2 * j) * bernoulli(2 * k - 2 * j) *
                  BigRational(binomial(2 * k, 2 * j));
  canon(r);
  return j % 2 == 0 ? r : BigRational(-r);
}

// coefficients of a P(z) + b P(z/2) + c P(2z)
FamilyPoly combine_P(long k, const BigRational& a, const BigRational& b, const BigRational& c) {
  const FamilyPoly p = build_P(k);
  FamilyPoly out = p;
  for (size_t m = 0; m < p.coeffs.size(); ++m) {
    const long e = static_cast<long>(m);
    BigRational scale = a + b * pow2(-e) + c * pow2(e);
    canon(scale);
    out.coeffs[m] = p.coeffs[m] * scale;
  }
  while (out.coeffs.size() > 1 && out.coeffs.back().is_zero()) out.coeffs.pop_back();
  return out;
}

}  // namespace

ZetaCoefficient::ZetaCoefficient(BigRational a, BigRational b, BigRational c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  canon(a_);
  canon(b_);
  canon(c_);
}

ZetaCoefficient& ZetaCoefficient::operator+=(const ZetaCoefficient& rhs) {
  a_ += rhs.a_;
  b_ += rhs.b_;
  c_ += rhs.c_;
  return *this;
}

ZetaCoefficient& ZetaCoefficient::operator-=(const ZetaCoefficient& rhs) {
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  c_ -= rhs.c_;
  return *this;
}

ZetaCoefficient& ZetaCoefficient::operator*=(const ZetaCoefficient& rhs) {
  const bool cubic = (b_ != 0 && rhs.c_ != 0) || (c_ != 0 && rhs.b_ != 0) || (c_ != 0 && rhs.c_ != 0);
  if (cubic) throw std::overflow_error("ZetaCoefficient product exceeds lambda^2");
  BigRational a = a_ * rhs.a_;
  BigRational b = a_ * rhs.b_ + b_ * rhs.a_;
  BigRational c = a_ * rhs.c_ + b_ * rhs.b_ + c_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  c_ = std::move(c);
  return *this;
}

ZetaCoefficient& ZetaCoefficient::operator*=(const BigRational& rhs) {
  a_ *= rhs;
  b_ *= rhs;
  c_ *= rhs;
  return *this;
}

RealEnclosure ZetaCoefficient::evaluate(const RealEnclosure& lambda) const {
  const Bits bits = lambda.precision();
  RealEnclosure out(a_, bits);
  if (b_ != 0) out += RealEnclosure(b_, bits) * lambda;
  if (c_ != 0) out += RealEnclosure(c_, bits) * lambda * lambda;
  return out;
}

std::string ZetaCoefficient::to_string() const {
  std::ostringstream os;
  bool any = false;
  auto term = [&](const BigRational& q, const char* suffix) {
    if (q == 0) return;
    if (any) os << (q < 0 ? " - " : " + ") << BigRational(abs(q)).get_str();
    else os << q.get_str();
    os << suffix;
    any = true;
  };
  term(a_, "");
  term(b_, "*L");
  term(c_, "*L^2");
  if (!any) os << "0";
  return os.str();
}

std::string family_name(Family f) {
  switch (f) {
    case Family::R: return "R";
    case Family::P: return "P";
    case Family::Q: return "Q";
    case Family::Y: return "Y";
    case Family::W: return "W";
    case Family::S: return "S";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(name[0]))) {
      case 'R': return Family::R;
      case 'P': return Family::P;
      case 'Q': return Family::Q;
      case 'Y': return Family::Y;
      case 'W': return Family::W;
      case 'S': return Family::S;
      default: break;
    }
  }
  throw std::invalid_argument("unknown family: " + name);
}

long family_min_k(Family f) { return (f == Family::R || f == Family::S) ? 1 : 2; }

long FamilyPoly::degree() const {
  for (long i = static_cast<long>(coeffs.size()) - 1; i >= 0; --i) {
    if (!coeffs[static_cast<size_t>(i)].is_zero()) return i;
  }
  return 0;
}

long FamilyPoly::origin_multiplicity() const {
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) return static_cast<long>(i);
  }
  return 0;
}

bool FamilyPoly::has_lambda() const {
  return std::any_of(coeffs.begin(), coeffs.end(), [](const ZetaCoefficient& c) { return !c.is_rational(); });
}

FamilyPoly FamilyPoly::reduced() const {
  FamilyPoly out = *this;
  const long lo = origin_multiplicity();
  const long hi = degree();
  out.coeffs.assign(coeffs.begin() + lo, coeffs.begin() + hi + 1);
  return out;
}

bool FamilyPoly::is_self_inversive() const {
  const FamilyPoly r = reduced();
  const size_t n = r.coeffs.size();
  for (size_t j = 0; j < n; ++j) {
    const ZetaCoefficient mirrored = epsilon > 0 ? r.coeffs[j] : -r.coeffs[j];
    if (!(r.coeffs[n - 1 - j] == mirrored)) return false;
  }
  return true;
}

std::vector<RealEnclosure> FamilyPoly::bind(Bits bits) const {
  std::vector<RealEnclosure> out;
  out.reserve(coeffs.size());
  const RealEnclosure lambda = has_lambda() ? precision::lambda_k(k, bits) : RealEnclosure(bits);
  for (const auto& c : coeffs) out.push_back(c.evaluate(lambda));
  return out;
}

FamilyPoly build_R(long k) {
  require_k(Family::R, k);
  FamilyPoly p = make(Family::R, k, 0, 2 * k + 2, 1);
  for (long j = 0; j <= k + 1; ++j) {
    BigRational c = bernoulli(2 * j) * bernoulli(2 * k + 2 - 2 * j) /
                    BigRational(factorial(2 * j) * factorial(2 * k + 2 - 2 * j));
    canon(c);
    p.coeffs[static_cast<size_t>(2 * j)] = c;
  }
  return p;
}

FamilyPoly build_R_truncated(long k) {
  require_k(Family::R, k);
  FamilyPoly p = build_R(k);
  p.coeffs.resize(static_cast<size_t>(2 * k - 1));
  return p;
}

FamilyPoly build_P(long k) {
  require_k(Family::P, k);
  const int eps = parity_sign(k);
  FamilyPoly p = make(Family::P, k, 2 * k - 1, 2 * k, eps);
  for (long j = 0; j <= k; ++j) p.coeffs[static_cast<size_t>(2 * j)] = p_even(k, j);
  p.coeffs[static_cast<size_t>(2 * k - 1)] += ZetaCoefficient::lambda(1);
  p.coeffs[1] += ZetaCoefficient::lambda(eps);
  return p;
}

FamilyPoly build_Q(long k) {
  require_k(Family::Q, k);
  const int eps = parity_sign(k);
  FamilyPoly p = make(Family::Q, k, 2 * k - 1, 2 * k - 1, eps);
  for (long j = 1; j < k; ++j) {
    BigRational f = (pow2(2 * j) - 1) * (pow2(2 * k - 2 * j) - 1);
    p.coeffs[static_cast<size_t>(2 * j)] = ZetaCoefficient(BigRational(p_even(k, j) * f));
  }
  const BigRational odd = pow2(2 * k - 1) - 1;
  p.coeffs[static_cast<size_t>(2 * k - 1)] += ZetaCoefficient::lambda(odd);
  p.coeffs[1] += ZetaCoefficient::lambda(eps * odd);
  return p;
}

FamilyPoly build_W(long k) {
  require_k(Family::W, k);
  FamilyPoly p = make(Family::W, k, 2 * k - 1, 2 * k, parity_sign(k));
  for (long j = 0; j <= k; ++j) {
    BigRational f = pow2(2 * k) * (1 - pow2(1 - 2 * j)) * (1 - pow2(1 - 2 * k + 2 * j));
    p.coeffs[static_cast<size_t>(2 * j)] = ZetaCoefficient(BigRational(p_even(k, j) * f));
  }
  p.combination_scale = 2;
  return p;
}

FamilyPoly build_Y(long k) {
  require_k(Family::Y, k);
  FamilyPoly p = make(Family::Y, k, 2 * k, k, 1);
  for (long j = 0; j <= k; ++j) {
    BigRational c = bernoulli(2 * j) * bernoulli(2 * k - 2 * j) * (pow2(2 * j) - 1) * (pow2(2 * k - 2 * j) - 1) *
                    BigRational(binomial(2 * k, 2 * j)) / BigRational(factorial(2 * k));
    canon(c);
    p.coeffs[static_cast<size_t>(j)] = c;
  }
  p.coeffs.resize(static_cast<size_t>(p.degree()) + 1);
  return p;
}

FamilyPoly build_S(long k) {
  require_k(Family::S, k);
  FamilyPoly p = make(Family::S, k, 0, k, 1);
  for (long j = 0; j <= k; ++j) {
    p.coeffs[static_cast<size_t>(j)] = BigRational(euler(2 * j) * euler(2 * k - 2 * j) * binomial(2 * k, 2 * j));
  }
  return p;
}

FamilyPoly build(Family f, long k) {
  switch (f) {
    case Family::R: return build_R(k);
    case Family::P: return build_P(k);
    case Family::Q: return build_Q(k);
    case Family::Y: return build_Y(k);
    case Family::W: return build_W(k);
    case Family::S: return build_S(k);
  }
  throw std::invalid_argument("unknown family");
}

FamilyPoly build_Q_combination(long k) {
  FamilyPoly q = combine_P(k, pow2(2 * k) + 1, -pow2(2 * k), -1);
  q.family = Family::Q;
  return q;
}

FamilyPoly build_W_combination(long k) {
  FamilyPoly w = combine_P(k, pow2(2 * k - 1) + 2, -pow2(2 * k), -1);
  w.family = Family::W;
  return w;
}

FamilyPoly build_Y_symmetrized(long k) {
  const FamilyPoly q = build_Q_combination(k);
  FamilyPoly y = make(Family::Y, k, 2 * k, k, 1);
  // (i sqrt z)^{2j} + (-i sqrt z)^{2j} = 2 (-1)^j z^j; odd powers cancel.
  for (long j = 0; j <= k; ++j) {
    const size_t m = static_cast<size_t>(2 * j);
    if (m >= q.coeffs.size()) break;
    if (!q.coeffs[m].is_rational()) throw std::logic_error("even Q coefficient carries lambda");
    BigRational c = q.coeffs[m].a() * 2 * pow2(-2 * k);
    canon(c);
    y.coeffs[static_cast<size_t>(j)] = j % 2 == 0 ? c : BigRational(-c);
  }
  y.coeffs.resize(static_cast<size_t>(y.degree()) + 1);
  return y;
}

std::vector<ZetaCoefficient> abs_square_coeffs(long k) {
  if (k < 2) throw std::domain_error("abs_square_coeffs requires k >= 2");
  std::vector<BigRational> e(static_cast<size_t>(k) + 1);
  for (long j = 0; j <= k; ++j) {
    e[static_cast<size_t>(j)] = j % 2 == 0 ? p_even(k, j) : BigRational(-p_even(k, j));
  }
  std::vector<ZetaCoefficient> out(static_cast<size_t>(4 * k) + 1);
  for (long i = 0; i <= k; ++i) {
    for (long j = 0; j <= k; ++j) {
      out[static_cast<size_t>(2 * i + 2 * j)] += ZetaCoefficient(BigRational(e[static_cast<size_t>(i)] * e[static_cast<size_t>(j)]));
    }
  }
  // lambda^2 (z^{2k-1} - z)^2
  out[static_cast<size_t>(4 * k - 2)] += ZetaCoefficient(0, 0, 1);
  out[static_cast<size_t>(2 * k)] += ZetaCoefficient(0, 0, -2);
  out[2] += ZetaCoefficient(0, 0, 1);
  return out;
}

ComplexEnclosure evaluate(const std::vector<RealEnclosure>& coeffs, const ComplexEnclosure& z) {
  ComplexEnclosure acc(z.precision());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= z;
    acc.re() += *it;
  }
  return acc;
}

RealEnclosure evaluate(const std::vector<RealEnclosure>& coeffs, const RealEnclosure& x) {
  RealEnclosure acc(x.precision());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

ComplexEnclosure evaluate_full(const FamilyPoly& poly, const ComplexEnclosure& z, Bits bits) {
  const ComplexEnclosure v = evaluate(poly.bind(bits), z);
  return v * precision::pow(precision::pi_enclosure(bits), poly.pi_power);
}

std::vector<RealEnclosure> ChebyshevForm::bind(Bits bits) const {
  bool lam = std::any_of(coeffs.begin(), coeffs.end(), [](const ZetaCoefficient& c) { return !c.is_rational(); });
  const RealEnclosure lambda = lam ? precision::lambda_k(k, bits) : RealEnclosure(bits);
  std::vector<RealEnclosure> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c.evaluate(lambda));
  return out;
}

ZetaCoefficient ChebyshevForm::endpoint_value(int sign) const {
  ZetaCoefficient sum;
  for (size_t m = 0; m < coeffs.size(); ++m) {
    if (sign < 0 && m % 2 == 1) sum -= coeffs[m];
    else sum += coeffs[m];
  }
  return sum;
}

ChebyshevForm chebyshev_reduce(const FamilyPoly& poly) {
  if (!poly.is_self_inversive()) throw std::domain_error("chebyshev_reduce requires a self-inversive polynomial");
  const FamilyPoly r = poly.reduced();
  ChebyshevForm form;
  form.family = poly.family;
  form.k = poly.k;
  form.epsilon = poly.epsilon;
  // (z^n + eps) V(z) z^{-n} = sum_m v_m (z^m + z^{-m}) = 2 sum_m v_m T_m(u)
  form.coeffs = r.coeffs;
  return form;
}

ChebyshevForm chebyshev_reduce(long k) { return chebyshev_reduce(build_P(k)); }

std::vector<ZetaCoefficient> to_power_basis(const ChebyshevForm& form) {
  const size_t n = form.coeffs.size();
  std::vector<ZetaCoefficient> out(n);
  // T_{m+1} = 2u T_m - T_{m-1}, integer coefficient rows
  std::vector<exact::BigInt> prev(n), cur(n), next(n);
  if (n == 0) return out;
  prev[0] = 1;
  out[0] += form.coeffs[0];
  if (n == 1) return out;
  cur[1] = 1;
  out[1] += form.coeffs[1];
  for (size_t m = 2; m < n; ++m) {
    for (size_t i = 0; i < n; ++i) {
      next[i] = -prev[i];
      if (i > 0) next[i] += 2 * cur[i - 1];
    }
    for (size_t i = 0; i <= m; ++i) {
      if (next[i] != 0) out[i] += form.coeffs[m] * BigRational(next[i]);
    }
    prev.swap(cur);
    cur.swap(next);
  }
  return out;
}

RealEnclosure clenshaw(const std::vector<RealEnclosure>& coeffs, const RealEnclosure& u) {
  const Bits bits = u.precision();
  if (coeffs.empty()) return RealEnclosure(bits);
  RealEnclosure b1(bits), b2(bits);
  const RealEnclosure two_u = u.scaled_pow2(1);
  for (size_t m = coeffs.size() - 1; m >= 1; --m) {
    RealEnclosure b0 = coeffs[m] + two_u * b1 - b2;
    b2 = std::move(b1);
    b1 = std::move(b0);
  }
  return coeffs[0] + u * b1 - b2;
}

}  // namespace circlezero::families
