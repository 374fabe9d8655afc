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


#include <stdexcept>

#include "circlezero/verify.hpp"
#include "circlezero/zeta.hpp"

namespace circlezero::verify {

using families::ZetaCoefficient;

namespace {

using CoeffFn = std::function<std::vector<RealEnclosure>(Bits)>;
using ConstFn = std::function<RealEnclosure(Bits)>;

RealEnclosure margin_of(const std::vector<RealEnclosure>& a, const RealEnclosure* c) {
  const RealEnclosure& top = a.back();
  RealEnclosure sum(top.precision());
  for (const auto& x : a) sum += precision::abs((c != nullptr ? *c * x : x) - top);
  return precision::abs(top) - sum;
}

BigRational exact_margin(const std::vector<BigRational>& a, const BigRational& c) {
  const BigRational& top = a.back();
  BigRational sum = 0;
  for (const auto& x : a) sum += abs(c * x - top);
  BigRational m = abs(top) - sum;
  m.canonicalize();
  return m;
}

CriteriaReport run_enclosure(Family family, long k, Criterion criterion, const CoeffFn& coeffs, const ConstFn* c,
                             const PrecisionConfig& cfg) {
  cfg.validate();
  CriteriaReport rep;
  rep.family = family;
  rep.k = k;
  rep.criterion = criterion;
  PrecisionConfig cur = cfg;
  while (true) {
    const std::vector<RealEnclosure> a = coeffs(cur.bits);
    if (c != nullptr) {
      rep.c = (*c)(cur.bits);
      rep.margin = margin_of(a, &rep.c);
    } else {
      rep.c = RealEnclosure(1, cur.bits);
      rep.margin = margin_of(a, nullptr);
    }
    rep.bits = cur.bits;
    rep.holds = verdict_of(rep.margin);
    if (rep.holds != Verdict::indeterminate || cur.max_retries <= 0) return rep;
    cur = cur.doubled();
  }
}

std::vector<BigRational> rational_coeffs(const FamilyPoly& r) {
  std::vector<BigRational> out;
  for (const auto& x : r.coeffs) out.push_back(x.a());
  return out;
}

CoeffFn bound_coeffs(const FamilyPoly& r) {
  return [r](Bits bits) { return r.bind(bits); };
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::certified_true: return "certified-true";
    case Verdict::certified_false: return "certified-false";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "?";
}

std::string to_string(Criterion c) { return c == Criterion::lakatos ? "lakatos" : "schinzel"; }

std::string to_string(Method m) {
  switch (m) {
    case Method::criteria: return "criteria";
    case Method::oscillation: return "oscillation";
    case Method::sign_count: return "sign-count";
    case Method::roots: return "roots";
  }
  return "?";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::certified: return "certified";
    case Status::refuted: return "refuted";
    case Status::indeterminate: return "indeterminate";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  if (name == "criteria") return Method::criteria;
  if (name == "oscillation") return Method::oscillation;
  if (name == "sign-count" || name == "sign_count") return Method::sign_count;
  if (name == "roots") return Method::roots;
  throw std::invalid_argument("unknown method: " + name);
}

Verdict verdict_of(const RealEnclosure& margin) {
  const int s = margin.sign();
  if (s > 0) return Verdict::certified_true;
  if (s < 0) return Verdict::certified_false;
  return Verdict::indeterminate;
}

CriteriaReport lakatos_check(const FamilyPoly& poly, const PrecisionConfig& cfg) {
  const FamilyPoly r = poly.reduced();
  if (poly.epsilon != 1 || !poly.is_self_inversive()) {
    throw std::domain_error("lakatos_check requires a reciprocal polynomial");
  }
  if (r.is_rational()) {
    CriteriaReport rep;
    rep.family = poly.family;
    rep.k = poly.k;
    rep.criterion = Criterion::lakatos;
    rep.bits = cfg.bits;
    rep.c = RealEnclosure(1, cfg.bits);
    const BigRational m = exact_margin(rational_coeffs(r), 1);
    rep.margin = RealEnclosure(m, cfg.bits);
    rep.holds = m > 0 ? Verdict::certified_true : (m < 0 ? Verdict::certified_false : Verdict::indeterminate);
    rep.exact = true;
    return rep;
  }
  return run_enclosure(poly.family, poly.k, Criterion::lakatos, bound_coeffs(r), nullptr, cfg);
}

CriteriaReport lakatos_check(const std::vector<ZetaCoefficient>& coeffs, long k, const PrecisionConfig& cfg) {
  const size_t n = coeffs.size();
  for (size_t j = 0; j < n; ++j) {
    if (!(coeffs[j] == coeffs[n - 1 - j])) throw std::domain_error("lakatos_check requires a reciprocal polynomial");
  }
  CoeffFn fn = [coeffs, k](Bits bits) {
    const RealEnclosure lambda = precision::lambda_k(k, bits);
    std::vector<RealEnclosure> out;
    for (const auto& c : coeffs) out.push_back(c.evaluate(lambda));
    return out;
  };
  return run_enclosure(Family::P, k, Criterion::lakatos, fn, nullptr, cfg);
}

CriteriaReport schinzel_check(const FamilyPoly& poly, const RealEnclosure& c, const PrecisionConfig& cfg) {
  if (!poly.is_self_inversive()) throw std::domain_error("schinzel_check requires a self-inversive polynomial");
  const ConstFn cf = [c](Bits) { return c; };
  return run_enclosure(poly.family, poly.k, Criterion::schinzel, bound_coeffs(poly.reduced()), &cf, cfg);
}

CriteriaReport schinzel_check(const FamilyPoly& poly, const BigRational& c, const PrecisionConfig& cfg) {
  if (!poly.is_self_inversive()) throw std::domain_error("schinzel_check requires a self-inversive polynomial");
  const FamilyPoly r = poly.reduced();
  if (!r.is_rational()) return schinzel_check(poly, RealEnclosure(c, cfg.bits), cfg);
  CriteriaReport rep;
  rep.family = poly.family;
  rep.k = poly.k;
  rep.criterion = Criterion::schinzel;
  rep.bits = cfg.bits;
  rep.c = RealEnclosure(c, cfg.bits);
  const BigRational m = exact_margin(rational_coeffs(r), c);
  rep.margin = RealEnclosure(m, cfg.bits);
  rep.holds = m > 0 ? Verdict::certified_true : (m < 0 ? Verdict::certified_false : Verdict::indeterminate);
  rep.exact = true;
  return rep;
}

RealEnclosure schinzel_constant_S(long k, Bits bits) {
  exact::BigInt three;
  mpz_ui_pow_ui(three.get_mpz_t(), 3, static_cast<unsigned long>(2 * k + 1));
  const BigRational scale(three, 4 * (three + 1));
  return precision::pi_enclosure(bits) * RealEnclosure(scale, bits);
}

RealEnclosure schinzel_constant_Y(long k, Bits bits) {
  BigRational scale = (1 - exact::pow2(2 - 2 * k)) / (8 * (1 - exact::pow2(3 - 2 * k)));
  scale.canonicalize();
  const RealEnclosure pi = precision::pi_enclosure(bits);
  return pi * pi * RealEnclosure(scale, bits);
}

CriteriaReport family_criteria_check(Family family, long k, const PrecisionConfig& cfg) {
  const FamilyPoly poly = families::build(family, k);
  if (family == Family::S || family == Family::Y) {
    const ConstFn cf = family == Family::S ? ConstFn([k](Bits b) { return schinzel_constant_S(k, b); })
                                           : ConstFn([k](Bits b) { return schinzel_constant_Y(k, b); });
    if (!poly.is_self_inversive()) throw std::domain_error("schinzel_check requires a self-inversive polynomial");
    return run_enclosure(family, k, Criterion::schinzel, bound_coeffs(poly.reduced()), &cf, cfg);
  }
  return lakatos_check(poly, cfg);
}

}  // namespace circlezero::verify
