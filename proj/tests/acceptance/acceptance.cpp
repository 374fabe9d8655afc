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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "circlezero/approx.hpp"
#include "circlezero/exact.hpp"
#include "circlezero/identities.hpp"
#include "circlezero/verify.hpp"
#include "circlezero/zeta.hpp"

namespace {

using namespace circlezero;
using exact::BigRational;
using families::Family;
using precision::ComplexEnclosure;
using precision::RealEnclosure;
using verify::Method;
using verify::Status;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (pass) detail << "first failure: " << what << "; ";
    pass = false;
  }
};

int failures = 0;

void criterion(int id, const char* title, const std::function<void(Outcome&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s [%d] %s (%s%.1fs)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.str().c_str(), secs);
  std::fflush(stdout);
  failures += o.pass ? 0 : 1;
}

std::string name(Family f, long k) { return families::family_name(f) + std::to_string(k); }

}  // namespace

int main() {
  criterion(1, "P_k sign-count certified for 2 <= k <= 200; roots simple for k <= 60", [](Outcome& o) {
    long certified = 0;
    for (long k = 2; k <= 200; ++k) {
      const auto r = verify::verify(Family::P, k, Method::sign_count);
      if (r.status != Status::certified || r.zeros_on_circle != 2 * k) {
        o.fail(name(Family::P, k) + " " + verify::to_string(r.status));
      } else {
        ++certified;
      }
    }
    double min_sep = 1e300;
    for (long k = 2; k <= 60; ++k) {
      const auto sep = verify::simplicity_check(verify::find_roots(families::build(Family::P, k), 128));
      min_sep = std::min(min_sep, sep.lower_double());
      if (!(sep.lower_double() > 1e-10)) o.fail("separation " + name(Family::P, k));
    }
    o.detail << certified << "/199 certified, min separation " << min_sep << "; ";
  });

  criterion(2, "Schinzel criterion with the stated constants: S_k 1..50, Y_k/z 3..50", [](Outcome& o) {
    double min_margin = 1e300;
    for (Family f : {Family::S, Family::Y}) {
      for (long k = f == Family::S ? 1 : 3; k <= 50; ++k) {
        const auto r = verify::family_criteria_check(f, k);
        min_margin = std::min(min_margin, r.margin.lower_double());
        if (r.holds != verify::Verdict::certified_true || !(r.margin.lower_double() > 0)) o.fail(name(f, k));
      }
    }
    o.detail << "min margin lower bound " << min_margin << "; ";
  });

  criterion(3, "oscillation: W_k 11..60, Q_k 7..60; smaller k by sign-count", [](Outcome& o) {
    double wmax = 0, qmax = 0;
    for (long k = 11; k <= 60; ++k) {
      const auto r = verify::oscillation_verify_W(k);
      if (r.status != Status::certified || r.order_achieved < 2 * k) o.fail(name(Family::W, k));
      if (r.bound) wmax = std::max(wmax, r.bound->upper_double());
    }
    for (long k = 7; k <= 60; ++k) {
      const auto r = verify::oscillation_verify_Q(k);
      if (r.status != Status::certified || r.order_achieved < 2 * k - 2) o.fail(name(Family::Q, k));
      if (r.bound) qmax = std::max(qmax, r.bound->upper_double());
    }
    for (long k = 2; k <= 10; ++k) {
      const auto r = verify::verify(Family::W, k, Method::oscillation);
      if (r.status != Status::certified) o.fail(name(Family::W, k) + " routed");
    }
    for (long k = 2; k <= 6; ++k) {
      const auto r = verify::verify(Family::Q, k, Method::oscillation);
      if (r.status != Status::certified) o.fail(name(Family::Q, k) + " routed");
    }
    o.detail << "max W bound " << wmax << " (< 0.3), max Q bound " << qmax << " (< 0.03); ";
  });

  criterion(4, "cross-method roots for certified cases k <= 40: max ||z|-1| < 1e-20, origin structure", [](Outcome& o) {
    double worst = 0;
    long cases = 0;
    for (Family f : {Family::R, Family::P, Family::Q, Family::Y, Family::W, Family::S}) {
      for (long k = families::family_min_k(f); k <= 40; ++k) {
        const auto sc = verify::verify(f, k, Method::sign_count);
        if (sc.status != Status::certified) continue;
        ++cases;
        const auto r = verify::verify(f, k, Method::roots, precision::PrecisionConfig{128});
        const long origin = (f == Family::Q || f == Family::Y) ? 1 : 0;
        if (r.status != Status::certified) o.fail(name(f, k) + " roots " + verify::to_string(r.status));
        if (r.zeros_at_origin != origin) o.fail(name(f, k) + " origin");
        if (r.zeros_on_circle != r.degree || r.zeros_off_circle != 0) o.fail(name(f, k) + " count");
        if (r.max_modulus_deviation) {
          const double d = r.max_modulus_deviation->upper_double();
          worst = std::max(worst, d);
          if (!(d < 1e-20)) o.fail(name(f, k) + " deviation");
        }
      }
    }
    o.detail << cases << " certified cases, worst deviation " << worst << "; ";
  });

  criterion(5, "zeta(3): approx1 >= 6 decimals, approx2 >= 4 decimals and fewer than approx1", [](Outcome& o) {
    const auto a1 = approx::approx1_zeta3(128);
    const auto a2 = approx::approx2_zeta3(128);
    if (a1.matched_decimals < 6) o.fail("approx1");
    if (a2.matched_decimals < 4) o.fail("approx2");
    if (!(a2.matched_decimals < a1.matched_decimals)) o.fail("ordering");
    o.detail << "approx1 " << a1.matched_decimals << ", approx2 " << a2.matched_decimals << "; ";
  });

  criterion(6, "exact identities for k <= 50 and self-inversive symmetry of all six families", [](Outcome& o) {
    long checked = 0;
    for (long k = 1; k <= 50; ++k) {
      if (!identities::s_at_one(k).holds()) o.fail("S(1) k=" + std::to_string(k));
      ++checked;
      if (k >= 2) {
        if (!identities::y_coefficient_sum(k).holds()) o.fail("Y sum k=" + std::to_string(k));
        if (!identities::q_combination_matches(k)) o.fail("Q combination k=" + std::to_string(k));
        if (!identities::w_combination_matches(k)) o.fail("W combination k=" + std::to_string(k));
        checked += 3;
      }
      for (Family f : {Family::R, Family::P, Family::Q, Family::Y, Family::W, Family::S}) {
        if (k < families::family_min_k(f)) continue;
        if (!identities::self_inversive(f, k)) o.fail(name(f, k) + " symmetry");
        ++checked;
      }
    }
    o.detail << checked << " exact checks; ";
  });

  criterion(7, "observation residual encloses 0 with width < 1e-30 at 256 bits, 2 <= k <= 50", [](Outcome& o) {
    double widest = 0;
    for (long k = 2; k <= 50; ++k) {
      const auto r = identities::observation_check(k, 256);
      const double w = 2 * r.residual.rad_double();
      widest = std::max(widest, w);
      if (!r.residual.contains_zero() || !(w < 1e-30) || !r.exact_holds) o.fail("k=" + std::to_string(k));
    }
    o.detail << "widest " << widest << "; ";
  });

  criterion(8, "series identity grids hold with widths < 1e-25", [](Outcome& o) {
    const precision::Bits bits = 256;
    double widest = 0;
    long cells = 0;
    const std::vector<std::pair<BigRational, BigRational>> zs{
        {BigRational(1, 2), 0}, {1, 0}, {BigRational(3, 2), 0}, {BigRational(3, 10), BigRational(7, 10)}};
    for (long k = 2; k <= 10; ++k) {
      for (const auto& [re, im] : zs) {
        const ComplexEnclosure z(RealEnclosure(re, bits), RealEnclosure(im, bits));
        const auto e = approx::ramanujan_identity_residual(k, z, 0, bits);
        widest = std::max(widest, e.width());
        ++cells;
        if (!e.holds() || !(e.width() < 1e-25)) o.fail("ramanujan k=" + std::to_string(k));
      }
    }
    for (long k = 1; k <= 8; ++k) {
      for (const BigRational& z : {BigRational(1, 2), BigRational(1), BigRational(2)}) {
        const auto e = approx::sech_identity_residual(k, RealEnclosure(z, bits), 0, bits);
        widest = std::max(widest, e.width());
        ++cells;
        if (!e.holds() || !(e.width() < 1e-25)) o.fail("sech k=" + std::to_string(k));
      }
    }
    o.detail << cells << " cells, widest " << widest << "; ";
  });

  criterion(9, "Bernoulli and Euler bounds for n <= 200; zeta sandwich for 3 <= n <= 64", [](Outcome& o) {
    for (long n = 1; n <= 200; ++n) {
      const auto [classical, sharp] = exact::check_bernoulli_bounds(n);
      if (!classical || !sharp) o.fail("Bernoulli n=" + std::to_string(n));
      if (!exact::check_euler_bounds(n)) o.fail("Euler n=" + std::to_string(n));
    }
    for (long n = 3; n <= 64; ++n) {
      const auto z = precision::zeta_value(n, 256);
      const RealEnclosure lo(BigRational(1 / (1 - exact::pow2(-n))), 256);
      const RealEnclosure hi(BigRational(1 / (1 - exact::pow2(1 - n))), 256);
      if (!precision::certainly_greater(z, lo) || !precision::certainly_less(z, hi)) {
        o.fail("zeta n=" + std::to_string(n));
      }
    }
  });

  return failures == 0 ? 0 : 1;
}
