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


#include "circlezero/zeta.hpp"

#include <cmath>
#include <vector>

#include <gmpxx.h>

namespace circlezero::precision {

namespace {

constexpr long kDirectLimit = 2000;

// Sum_{n<=N} n^{-s} plus the integral tail (0, N^{1-s}/(s-1)).
RealEnclosure zeta_direct(long s, long n_terms, Bits bits) {
  RealEnclosure sum(bits);
  for (long n = n_terms; n >= 1; --n) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(s));
    sum += RealEnclosure(mpq_class(1, p), bits);
  }
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n_terms), static_cast<unsigned long>(s - 1));
  const mpq_class tail(1, p * (s - 1));
  return sum + RealEnclosure::hull(0, tail, bits);
}

// Borwein's alternating-series scheme for eta(s) = (1 - 2^{1-s}) zeta(s).
RealEnclosure zeta_borwein(long s, Bits bits) {
  // error <= 3 / (3 + sqrt 8)^n / (1 - 2^{1-s}); 5.8 < 3 + sqrt 8
  const long n = static_cast<long>(std::ceil((static_cast<double>(bits) + 8.0) / std::log2(5.8)));
  const Bits work = bits + 32 + static_cast<Bits>(std::log2(static_cast<double>(n)) + 1);

  std::vector<mpz_class> d(static_cast<size_t>(n) + 1);
  // term_i = (n+i-1)! 4^i / ((n-i)! (2i)!), built incrementally
  mpq_class term(1, n);  // i = 0: (n-1)!/n! = 1/n
  mpq_class acc = 0;
  for (long i = 0; i <= n; ++i) {
    if (i > 0) {
      term *= mpq_class(4 * (n + i - 1) * (n - i + 1), (2 * i) * (2 * i - 1));
    }
    acc += term;
    mpq_class dk = acc * n;
    dk.canonicalize();
    d[static_cast<size_t>(i)] = dk.get_num();  // integral by construction
  }

  RealEnclosure sum(work);
  for (long k = 0; k < n; ++k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(k + 1), static_cast<unsigned long>(s));
    mpq_class t(d[static_cast<size_t>(k)] - d[static_cast<size_t>(n)], p);
    t.canonicalize();
    if (k % 2 == 1) t = -t;
    sum += RealEnclosure(t, work);
  }
  const mpq_class eta_scale = 1 - mpq_class(1, mpz_class(1) << static_cast<mp_bitcnt_t>(s - 1));
  RealEnclosure denom(mpq_class(d[static_cast<size_t>(n)] * eta_scale), work);
  RealEnclosure result = -(sum / denom);

  mpz_class five = 1, twenty_nine = 1;
  mpz_ui_pow_ui(five.get_mpz_t(), 5, static_cast<unsigned long>(n));
  mpz_ui_pow_ui(twenty_nine.get_mpz_t(), 29, static_cast<unsigned long>(n));
  const mpq_class err = mpq_class(3 * five, twenty_nine) / eta_scale;
  result.add_error(RealEnclosure(err, work));
  return result.with_precision(bits);
}

}  // namespace

RealEnclosure zeta_value(long s, Bits bits) {
  if (s < 2) throw std::domain_error("zeta_value requires s >= 2");
  // direct summation when N^{1-s}/(s-1) < 2^{-bits-4} for a small N
  const double log2_n = (static_cast<double>(bits) + 4.0) / static_cast<double>(s - 1);
  if (log2_n < std::log2(static_cast<double>(kDirectLimit))) {
    const long n = static_cast<long>(std::ceil(std::exp2(log2_n))) + 1;
    return zeta_direct(s, n, bits + 16).with_precision(bits);
  }
  return zeta_borwein(s, bits);
}

RealEnclosure zeta_odd(long s, Bits bits) {
  if (s < 3 || s % 2 == 0) throw std::domain_error("zeta_odd requires an odd s >= 3");
  return zeta_value(s, bits);
}

RealEnclosure lambda_k(long k, Bits bits) {
  if (k < 2) throw std::domain_error("lambda_k requires k >= 2");
  const Bits work = bits + 16;
  return (zeta_odd(2 * k - 1, work) / pow(pi_enclosure(work), 2 * k - 1)).with_precision(bits);
}

}  // namespace circlezero::precision
