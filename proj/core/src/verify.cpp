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

namespace circlezero::verify {

namespace {

VerificationReport base_report(const FamilyPoly& poly, Method method, Bits bits) {
  VerificationReport rep;
  rep.family = poly.family;
  rep.k = poly.k;
  rep.method = method;
  rep.requested = method;
  rep.degree = poly.nontrivial_degree();
  rep.zeros_at_origin = poly.origin_multiplicity();
  rep.bits = bits;
  return rep;
}

VerificationReport trivial(const FamilyPoly& poly, Method method, Bits bits) {
  VerificationReport rep = base_report(poly, method, bits);
  rep.status = Status::certified;
  rep.simple = true;
  rep.note = "no nontrivial zeros";
  return rep;
}

}  // namespace

VerificationReport verify_sign_count(const FamilyPoly& poly, const PrecisionConfig& cfg) {
  cfg.validate();
  if (poly.nontrivial_degree() == 0) return trivial(poly, Method::sign_count, cfg.bits);
  const ChebyshevForm form = families::chebyshev_reduce(poly);
  const VerificationReport counted = sign_change_count(form, cfg);
  VerificationReport rep = base_report(poly, Method::sign_count, counted.bits);
  rep.sign_changes = counted.sign_changes;
  rep.target = counted.target;
  rep.status = counted.status;
  rep.note = counted.note;
  if (rep.certified()) {
    rep.zeros_on_circle = rep.degree;
    rep.simple = true;
  }
  return rep;
}

VerificationReport verify_criteria(const FamilyPoly& poly, const PrecisionConfig& cfg) {
  cfg.validate();
  if (poly.nontrivial_degree() == 0) return trivial(poly, Method::criteria, cfg.bits);
  CriteriaReport cr;
  try {
    cr = family_criteria_check(poly.family, poly.k, cfg);
  } catch (const std::domain_error& e) {
    VerificationReport rep = base_report(poly, Method::criteria, cfg.bits);
    rep.status = Status::indeterminate;
    rep.note = std::string("criterion not applicable: ") + e.what();
    return rep;
  }
  VerificationReport rep = base_report(poly, Method::criteria, cr.bits);
  rep.margin = cr.margin;
  if (cr.holds == Verdict::certified_true) {
    rep.status = Status::certified;
    rep.zeros_on_circle = rep.degree;
  } else {
    rep.status = Status::indeterminate;
    rep.note = to_string(cr.criterion) + " criterion " + to_string(cr.holds);
  }
  return rep;
}

VerificationReport verify_roots(const FamilyPoly& poly, const PrecisionConfig& cfg) {
  cfg.validate();
  if (poly.nontrivial_degree() == 0) return trivial(poly, Method::roots, cfg.bits);
  PrecisionConfig cur = cfg;
  while (true) {
    const RootCertificate cert = certify_roots(poly, cur.bits);
    VerificationReport rep = base_report(poly, Method::roots, cur.bits);
    const RealEnclosure one(1, cur.bits);
    long on = 0, off = 0;
    bool isolated = true;
    std::optional<RealEnclosure> dev;
    for (size_t i = 0; i < cert.roots.size(); ++i) {
      const bool origin = cert.roots[i].re().is_exact() && cert.roots[i].im().is_exact() &&
                          cert.roots[i].re().sign() == 0 && cert.roots[i].im().sign() == 0;
      if (origin) continue;
      if (cert.on_circle[i]) ++on;
      if (cert.off_circle[i]) ++off;
      isolated = isolated && cert.isolated[i];
      const RealEnclosure d = precision::abs(precision::abs(cert.roots[i]) - one);
      dev = dev ? precision::max(*dev, d) : d;
    }
    rep.zeros_on_circle = on;
    rep.zeros_off_circle = off;
    rep.max_modulus_deviation = dev;
    if (cert.roots.size() >= 2) {
      rep.min_root_distance = simplicity_check(cert.roots);
      rep.simple = rep.min_root_distance->sign() > 0;
    } else {
      rep.simple = true;
    }
    if (off > 0) {
      rep.status = Status::refuted;
      return rep;
    }
    if (on == rep.degree && isolated) {
      rep.status = Status::certified;
      return rep;
    }
    if (cur.max_retries <= 0) {
      rep.status = Status::indeterminate;
      rep.note = "root discs not separated";
      return rep;
    }
    cur = cur.doubled();
  }
}

VerificationReport verify(Family family, long k, Method method, const PrecisionConfig& cfg) {
  if (k < families::family_min_k(family)) throw std::domain_error("k below the family minimum");
  switch (method) {
    case Method::criteria: return verify_criteria(families::build(family, k), cfg);
    case Method::oscillation:
      if (family == Family::W) return oscillation_verify_W(k, cfg);
      if (family == Family::Q) return oscillation_verify_Q(k, cfg);
      {
        VerificationReport rep = verify_sign_count(families::build(family, k), cfg);
        rep.requested = Method::oscillation;
        rep.note = "oscillation applies to W and Q only; routed to sign-count";
        return rep;
      }
    case Method::sign_count: return verify_sign_count(families::build(family, k), cfg);
    case Method::roots: return verify_roots(families::build(family, k), cfg);
  }
  throw std::invalid_argument("unknown method");
}

}  // namespace circlezero::verify
