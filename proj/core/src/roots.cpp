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
#include <complex>
#include <numeric>
#include <stdexcept>

#include "circlezero/verify.hpp"

namespace circlezero::verify {

namespace {

using cld = std::complex<long double>;

constexpr int kSweeps = 200;
constexpr int kPolishSweeps = 12;

long double to_ld(const RealEnclosure& x) { return mpfr_get_ld(x.mid(), MPFR_RNDN); }

RealEnclosure from_ld(long double v, Bits bits) {
  mpfr_t t;
  mpfr_init2(t, bits);
  mpfr_set_ld(t, v, MPFR_RNDN);
  RealEnclosure out = RealEnclosure::from_mpfr(t, 0, nullptr);
  mpfr_clear(t);
  return out;
}

// Ehrlich-Aberth on monic long double coefficients.
std::vector<cld> aberth(const std::vector<cld>& a) {
  const size_t n = a.size() - 1;
  std::vector<cld> z(n);
  const long double two_pi = 2 * std::acos(-1.0L);
  for (size_t j = 0; j < n; ++j) z[j] = std::polar(1.01L, two_pi * static_cast<long double>(j) / n + 0.37L);
  if (n == 1) return {-a[0] / a[1]};
  std::vector<bool> done(n, false);
  for (int sweep = 0; sweep < kSweeps; ++sweep) {
    long double worst = 0;
    for (size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      cld p = a[n], dp = 0;
      for (size_t j = n; j-- > 0;) {
        dp = dp * z[i] + p;
        p = p * z[i] + a[j];
      }
      if (p == cld(0)) {
        done[i] = true;
        continue;
      }
      const cld w = p / dp;
      cld s = 0;
      for (size_t j = 0; j < n; ++j) {
        if (j != i) s += 1.0L / (z[i] - z[j]);
      }
      const cld corr = w / (1.0L - w * s);
      if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) throw NumericError("root iteration diverged");
      z[i] -= corr;
      const long double rel = std::abs(corr) / std::max(1.0L, std::abs(z[i]));
      if (rel < 1e-17L) done[i] = true;
      worst = std::max(worst, rel);
    }
    if (std::all_of(done.begin(), done.end(), [](bool b) { return b; }) || worst < 1e-17L) return z;
  }
  long double worst = 0;
  for (size_t i = 0; i < n; ++i) {
    cld p = a[n];
    for (size_t j = n; j-- > 0;) p = p * z[i] + a[j];
    worst = std::max(worst, std::abs(p));
  }
  if (worst > 1e-8L) throw NumericError("root iteration did not converge in " + std::to_string(kSweeps) + " sweeps");
  return z;
}

// Aberth correction sweeps at full precision on midpoints.
void polish(const std::vector<RealEnclosure>& c, std::vector<ComplexEnclosure>& z, Bits bits) {
  const size_t n = z.size();
  std::vector<RealEnclosure> dc;
  for (size_t j = 1; j < c.size(); ++j) dc.push_back(c[j] * static_cast<long>(j));
  const ComplexEnclosure one(RealEnclosure(1, bits));
  const double tol = std::ldexp(1.0, -static_cast<int>(bits) + 8);
  for (int sweep = 0; sweep < kPolishSweeps; ++sweep) {
    double worst = 0;
    for (size_t i = 0; i < n; ++i) {
      const ComplexEnclosure p = families::evaluate(c, z[i]).midpoint();
      if (p.re().sign() == 0 && p.im().sign() == 0 && p.re().is_exact() && p.im().is_exact()) continue;
      const ComplexEnclosure dp = families::evaluate(dc, z[i]).midpoint();
      ComplexEnclosure s(bits);
      for (size_t j = 0; j < n; ++j) {
        if (j != i) s += (one / (z[i] - z[j]).midpoint()).midpoint();
      }
      const ComplexEnclosure w = (p / dp).midpoint();
      const ComplexEnclosure corr = (w / (one - w * s).midpoint()).midpoint();
      const double size = std::hypot(corr.re().mid_double(), corr.im().mid_double());
      if (!std::isfinite(size)) throw NumericError("root polish produced a non-finite value");
      z[i] = (z[i] - corr).midpoint();
      worst = std::max(worst, size / std::max(1.0, std::hypot(z[i].re().mid_double(), z[i].im().mid_double())));
    }
    if (worst < tol) return;
  }
}

RealEnclosure upper_ball(const RealEnclosure& x, Bits bits) {
  const mpq_class u = x.upper_rational();
  return RealEnclosure::hull(u, u, bits);
}

// |a - b| > r certified, compared through squares.
bool apart(const ComplexEnclosure& a, const ComplexEnclosure& b, const RealEnclosure& r) {
  return (precision::norm(a - b) - r * r).sign() > 0;
}

}  // namespace

RootCertificate find_roots(const std::function<std::vector<RealEnclosure>(Bits)>& coeffs, Bits bits,
                           bool self_inversive) {
  std::vector<RealEnclosure> c = coeffs(bits);
  while (!c.empty() && c.back().is_exact() && c.back().sign() == 0) c.pop_back();
  if (c.size() < 2) throw std::domain_error("find_roots requires degree >= 1");
  if (c.back().contains_zero()) throw NumericError("leading coefficient not bounded away from zero");

  RootCertificate cert;
  size_t origin = 0;
  while (c[origin].is_exact() && c[origin].sign() == 0) ++origin;
  for (size_t i = 0; i < origin; ++i) {
    cert.roots.emplace_back(bits);
    cert.radii.emplace_back(bits);
    cert.isolated.push_back(origin == 1);
    cert.on_circle.push_back(false);
    cert.off_circle.push_back(true);
  }
  c.erase(c.begin(), c.begin() + static_cast<long>(origin));
  const size_t n = c.size() - 1;
  if (n == 0) return cert;

  std::vector<cld> monic(n + 1);
  for (size_t j = 0; j <= n; ++j) monic[j] = to_ld(c[j] / c[n]);
  std::vector<cld> approx = aberth(monic);
  std::sort(approx.begin(), approx.end(), [](const cld& x, const cld& y) { return std::arg(x) < std::arg(y); });

  std::vector<ComplexEnclosure> z;
  for (const auto& v : approx) z.emplace_back(from_ld(v.real(), bits), from_ld(v.imag(), bits));
  polish(c, z, bits);

  // Inclusion discs D(z_i, n |p(z_i)| / |a_n prod (z_i - z_j)|).
  std::vector<RealEnclosure> r;
  const RealEnclosure lead = precision::abs(c[n]);
  for (size_t i = 0; i < n; ++i) {
    RealEnclosure denom = lead;
    for (size_t j = 0; j < n; ++j) {
      if (j != i) denom *= precision::abs(z[i] - z[j]);
    }
    const RealEnclosure num = precision::abs(families::evaluate(c, z[i])) * static_cast<long>(n);
    if (denom.contains_zero()) {
      r.push_back(RealEnclosure::from_double(1e300, bits));
    } else {
      r.push_back(upper_ball(num / denom, bits));
    }
  }

  const RealEnclosure one(1, bits);
  for (size_t i = 0; i < n; ++i) {
    bool isolated = true;
    for (size_t j = 0; j < n && isolated; ++j) {
      if (j != i && !apart(z[i], z[j], r[i] + r[j])) isolated = false;
    }
    const RealEnclosure mod = precision::abs(z[i]);
    const bool off = (mod - r[i] - one).sign() > 0 || (one - mod - r[i]).sign() > 0;
    bool on = false;
    if (self_inversive && isolated && !off) {
      const RealEnclosure rho = precision::abs(mod - one) + r[i];
      if ((one - rho).sign() > 0) {
        const RealEnclosure grow = upper_ball(r[i] + rho * (rho + one + one) / (one - rho), bits);
        on = true;
        for (size_t j = 0; j < n && on; ++j) {
          if (j != i && !apart(z[i], z[j], grow + r[j])) on = false;
        }
      }
    }
    ComplexEnclosure box = z[i];
    box.re().add_error(r[i]);
    box.im().add_error(r[i]);
    cert.roots.push_back(std::move(box));
    cert.radii.push_back(r[i]);
    cert.isolated.push_back(isolated);
    cert.on_circle.push_back(on);
    cert.off_circle.push_back(off);
  }
  return cert;
}

RootCertificate certify_roots(const FamilyPoly& poly, Bits bits) {
  const FamilyPoly full = poly;
  const bool si = poly.is_self_inversive();
  return find_roots([full](Bits b) { return full.bind(b); }, bits, si);
}

std::vector<ComplexEnclosure> find_roots(const FamilyPoly& poly, Bits bits) { return certify_roots(poly, bits).roots; }

RealEnclosure simplicity_check(const std::vector<ComplexEnclosure>& roots) {
  if (roots.size() < 2) throw std::domain_error("simplicity_check needs at least two roots");
  std::optional<RealEnclosure> best;
  for (size_t i = 0; i < roots.size(); ++i) {
    const ComplexEnclosure ci = roots[i].midpoint();
    const RealEnclosure ri = precision::disc_radius(roots[i]);
    for (size_t j = i + 1; j < roots.size(); ++j) {
      const RealEnclosure d =
          precision::abs(ci - roots[j].midpoint()) - ri - precision::disc_radius(roots[j]);
      best = best ? precision::min(*best, d) : d;
    }
  }
  return *best;
}

bool roots_simple(const std::vector<ComplexEnclosure>& roots) {
  return roots.size() < 2 || simplicity_check(roots).sign() > 0;
}

}  // namespace circlezero::verify
