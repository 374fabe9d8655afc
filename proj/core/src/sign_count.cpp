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

namespace circlezero::verify {

namespace {

// sum c_m T_m(cos(theta)) = sum c_m Re(e^{i m theta}), theta = r pi.
// Powers of e^{i theta} keep the ball radii growing linearly in m.
RealEnclosure eval_at_angle(const std::vector<RealEnclosure>& c, const BigRational& r, Bits bits) {
  if (r == 0 || r == 1) {
    RealEnclosure s(bits);
    for (size_t m = 0; m < c.size(); ++m) s += (r == 1 && m % 2 == 1) ? -c[m] : c[m];
    return s;
  }
  const RealEnclosure t = precision::pi_enclosure(bits) * RealEnclosure(r, bits);
  const ComplexEnclosure w(precision::cos(t), precision::sin(t));
  ComplexEnclosure p(RealEnclosure(1, bits));
  RealEnclosure s = c[0];
  for (size_t m = 1; m < c.size(); ++m) {
    p *= w;
    s += c[m] * p.re();
  }
  return s;
}

// Sign of cos(pi q) (eps = 1) or sin(pi q) (eps = -1) for rational q.
int trig_sign(BigRational q, int eps) {
  mpz_class fl;
  const BigRational two(2);
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  // reduce to [0, 2)
  mpz_class pairs = fl;
  mpz_fdiv_q_2exp(pairs.get_mpz_t(), fl.get_mpz_t(), 1);
  q -= two * BigRational(pairs);
  q.canonicalize();
  if (eps > 0) {
    if (q == BigRational(1, 2) || q == BigRational(3, 2)) return 0;
    return (q < BigRational(1, 2) || q > BigRational(3, 2)) ? 1 : -1;
  }
  if (q == 0 || q == 1) return 0;
  return q < 1 ? 1 : -1;
}

struct Sample {
  BigRational theta;  // theta / pi
  int sign;
};

// Certified zeros of V* between consecutive certified samples. With a known
// factor c(theta) = cos(n theta/2) (eps = 1) or sin(n theta/2) (eps = -1),
// V*(cos theta) = H(theta) c(theta) and the zeros of H and c add up.
long count_zeros(const std::vector<Sample>& samples, int factor_eps, long n) {
  std::vector<int> cs(samples.size(), 0);
  if (factor_eps != 0) {
    for (size_t s = 0; s < samples.size(); ++s) cs[s] = trig_sign(samples[s].theta * n / 2, factor_eps);
  }
  long total = 0;
  for (size_t s = 1; s < samples.size(); ++s) {
    long best = samples[s - 1].sign != samples[s].sign ? 1 : 0;
    if (factor_eps != 0 && cs[s - 1] != 0 && cs[s] != 0) {
      // zeros of c in (a, b): theta = j/n with j odd (eps = 1) or even (eps = -1)
      const BigRational lo = samples[s - 1].theta * n;
      const BigRational hi = samples[s].theta * n;
      mpz_class j;
      mpz_fdiv_q(j.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
      long zc = 0;
      for (j += 1; BigRational(j) < hi; ++j) {
        const bool odd = mpz_odd_p(j.get_mpz_t()) != 0;
        if (odd == (factor_eps > 0)) ++zc;
      }
      const long h = samples[s - 1].sign * cs[s - 1] != samples[s].sign * cs[s] ? 1 : 0;
      best = std::max(best, zc + h);
    }
    total += best;
  }
  return total;
}

VerificationReport count_engine(const std::function<std::vector<RealEnclosure>(Bits)>& coeffs, long target,
                                bool zero_at_plus_one, bool zero_at_minus_one, int factor_eps,
                                const PrecisionConfig& cfg) {
  cfg.validate();
  VerificationReport rep;
  rep.method = Method::sign_count;
  rep.requested = Method::sign_count;
  rep.target = target;
  PrecisionConfig cur = cfg;
  while (true) {
    const std::vector<RealEnclosure> c = coeffs(cur.bits);
    const long n = static_cast<long>(c.size()) - 1;
    rep.degree = std::max(0L, n);
    rep.bits = cur.bits;
    if (target <= 0) {
      rep.sign_changes = 0;
      rep.status = Status::certified;
      return rep;
    }
    const long cap = std::max(256L, 64 * n);
    long m = std::max(8L, 2 * n);
    std::vector<int> signs;  // index i on grid m, theta = i pi / m
    bool stalled = false;
    while (true) {
      std::vector<int> next(static_cast<size_t>(m) + 1, 0);
      for (long i = 0; i <= m; ++i) {
        if ((i == 0 && zero_at_plus_one) || (i == m && zero_at_minus_one)) continue;
        if (!signs.empty() && i % 2 == 0) {
          next[static_cast<size_t>(i)] = signs[static_cast<size_t>(i / 2)];
          if (next[static_cast<size_t>(i)] != 0) continue;
        }
        next[static_cast<size_t>(i)] = eval_at_angle(c, BigRational(i, m), cur.bits).sign();
      }
      signs = std::move(next);
      std::vector<Sample> certified;
      long uncertain = 0;
      for (long i = 0; i <= m; ++i) {
        const int s = signs[static_cast<size_t>(i)];
        if (s != 0) {
          BigRational th(i, m);
          th.canonicalize();
          certified.push_back({th, s});
        } else {
          ++uncertain;
        }
      }
      const long before = rep.sign_changes;
      rep.sign_changes = count_zeros(certified, 0, n);
      if (rep.sign_changes < target && factor_eps != 0) {
        rep.sign_changes = std::max(rep.sign_changes, count_zeros(certified, factor_eps, n));
      }
      if (rep.sign_changes >= target) {
        rep.status = Status::certified;
        rep.zeros_on_circle = n;
        return rep;
      }
      // many undecided samples and no progress: precision, not resolution, is short
      stalled = uncertain > m / 4 && rep.sign_changes <= before;
      if (m >= cap || stalled) break;
      m *= 2;
    }
    if (cur.max_retries <= 0) {
      rep.status = Status::indeterminate;
      rep.note = "sign-change budget exhausted";
      return rep;
    }
    cur = cur.doubled();
  }
}

}  // namespace

long sign_change_target(const ChebyshevForm& form) {
  long target = form.degree();
  if (form.endpoint_value(1).is_zero()) --target;
  if (form.endpoint_value(-1).is_zero()) --target;
  return std::max(0L, target);
}

VerificationReport sign_change_count(const std::function<std::vector<RealEnclosure>(Bits)>& coeffs, long target,
                                     bool zero_at_plus_one, bool zero_at_minus_one, const PrecisionConfig& cfg) {
  return count_engine(coeffs, target, zero_at_plus_one, zero_at_minus_one, 0, cfg);
}

VerificationReport sign_change_count(const ChebyshevForm& form, long target, const PrecisionConfig& cfg) {
  const ChebyshevForm f = form;
  VerificationReport rep = count_engine([f](Bits bits) { return f.bind(bits); }, target,
                                        form.endpoint_value(1).is_zero(), form.endpoint_value(-1).is_zero(),
                                        form.epsilon, cfg);
  rep.family = form.family;
  rep.k = form.k;
  return rep;
}

VerificationReport sign_change_count(const ChebyshevForm& form, const PrecisionConfig& cfg) {
  return sign_change_count(form, sign_change_target(form), cfg);
}

}  // namespace circlezero::verify
