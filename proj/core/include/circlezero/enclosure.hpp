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

#ifndef CIRCLEZERO_ENCLOSURE_HPP
#define CIRCLEZERO_ENCLOSURE_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace circlezero::precision {

using Bits = mpfr_prec_t;

inline constexpr Bits kDefaultBits = 128;
inline constexpr Bits kMinBits = 64;

/// Raised when an enclosure is too wide to decide a comparison and the
/// caller has run out of precision retries.
class PrecisionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bits, retry budget and series truncation shared by every certified
/// computation. `tail_cutoff == 0` selects the truncation automatically.
struct PrecisionConfig {
  Bits bits = kDefaultBits;
  int max_retries = 4;
  long tail_cutoff = 0;

  void validate() const;
  PrecisionConfig doubled() const;
};

/// Runs `attempt(bits)` at cfg.bits, doubling up to cfg.max_retries times
/// while it returns an empty optional.
template <class F>
auto with_retries(const PrecisionConfig& cfg, F&& attempt) {
  cfg.validate();
  PrecisionConfig cur = cfg;
  while (true) {
    auto result = attempt(cur.bits);
    if (result) return std::move(*result);
    if (cur.max_retries <= 0) {
      throw PrecisionError("comparison still undecided at " + std::to_string(cur.bits) + " bits");
    }
    cur = cur.doubled();
  }
}

/// Midpoint-radius ball [mid - rad, mid + rad] containing an exact real.
///
/// The midpoint carries the working precision; the radius is a short
/// MPFR number that is only ever rounded upward. Every operation returns a
/// ball that contains the exact result for every choice of inputs inside
/// the operand balls.
class RealEnclosure {
public:
  explicit RealEnclosure(Bits bits = kDefaultBits);
  RealEnclosure(long value, Bits bits);
  RealEnclosure(const mpz_class& value, Bits bits);
  RealEnclosure(const mpq_class& value, Bits bits);

  /// Ball [mid - rad, mid + rad] from decimal strings, rad rounded up.
  static RealEnclosure from_decimal(const std::string& mid, const std::string& rad, Bits bits);
  /// Exact dyadic value of a double.
  static RealEnclosure from_double(double value, Bits bits);
  /// Smallest ball covering [lo, hi] for rationals lo <= hi.
  static RealEnclosure hull(const mpq_class& lo, const mpq_class& hi, Bits bits);
  /// Ball around an MPFR midpoint. A nonzero `ternary` adds one ulp; `extra`
  /// (may be null) is added to the radius.
  static RealEnclosure from_mpfr(mpfr_srcptr mid, int ternary, mpfr_srcptr extra);

  RealEnclosure(const RealEnclosure& other);
  RealEnclosure(RealEnclosure&& other) noexcept;
  RealEnclosure& operator=(const RealEnclosure& other);
  RealEnclosure& operator=(RealEnclosure&& other) noexcept;
  ~RealEnclosure();

  Bits precision() const { return mpfr_get_prec(mid_); }
  mpfr_srcptr mid() const { return mid_; }
  mpfr_srcptr rad() const { return rad_; }

  double mid_double() const;
  double rad_double() const;
  /// Rigorous endpoint bounds rounded outward to doubles.
  double lower_double() const;
  double upper_double() const;

  bool is_exact() const { return mpfr_zero_p(rad_) != 0; }
  bool is_finite() const;

  /// +1 or -1 when the whole ball lies on one side of zero, otherwise 0.
  int sign() const;
  bool contains_zero() const { return sign() == 0; }
  bool contains(const mpq_class& value) const;
  bool contains(const RealEnclosure& inner) const;
  bool overlaps(const RealEnclosure& other) const;

  /// Lower and upper endpoints, rounded outward, as exact rationals.
  mpq_class lower_rational() const;
  mpq_class upper_rational() const;

  /// Midpoint as a zero-radius ball (drops the error bound).
  RealEnclosure midpoint() const;
  /// Same ball carried at a different working precision (still sound).
  RealEnclosure with_precision(Bits bits) const;

  /// Enlarges the radius by `err` (rounded up).
  void add_error(const RealEnclosure& err);
  void add_error(double err);

  RealEnclosure& operator+=(const RealEnclosure& rhs);
  RealEnclosure& operator-=(const RealEnclosure& rhs);
  RealEnclosure& operator*=(const RealEnclosure& rhs);
  RealEnclosure& operator/=(const RealEnclosure& rhs);

  friend RealEnclosure operator-(const RealEnclosure& x);
  friend RealEnclosure operator+(RealEnclosure a, const RealEnclosure& b) { return a += b; }
  friend RealEnclosure operator-(RealEnclosure a, const RealEnclosure& b) { return a -= b; }
  friend RealEnclosure operator*(RealEnclosure a, const RealEnclosure& b) { return a *= b; }
  friend RealEnclosure operator/(RealEnclosure a, const RealEnclosure& b) { return a /= b; }
  friend RealEnclosure operator*(RealEnclosure a, long b);
  friend RealEnclosure operator*(long b, RealEnclosure a) { return std::move(a) * b; }
  friend RealEnclosure operator/(RealEnclosure a, long b);

  /// Multiplies by 2^e exactly.
  RealEnclosure scaled_pow2(long e) const;

  /// Scientific decimal rendering of the midpoint with `digits` significant
  /// digits (0 picks enough digits for the working precision).
  std::string mid_string(int digits = 0) const;
  /// Radius rendered with 3 significant digits, rounded up.
  std::string rad_string() const;

private:
  void round_error(int ternary);

  mpfr_t mid_;
  mpfr_t rad_;
};

RealEnclosure abs(const RealEnclosure& x);
RealEnclosure sqrt(const RealEnclosure& x);
RealEnclosure exp(const RealEnclosure& x);
RealEnclosure log(const RealEnclosure& x);
RealEnclosure sin(const RealEnclosure& x);
RealEnclosure cos(const RealEnclosure& x);
RealEnclosure acos(const RealEnclosure& x);
RealEnclosure pow(const RealEnclosure& x, long n);
/// Ball of the larger of two values (componentwise upper-max semantics).
RealEnclosure max(const RealEnclosure& a, const RealEnclosure& b);
RealEnclosure min(const RealEnclosure& a, const RealEnclosure& b);

/// a < b holds for every pair of points in the balls.
bool certainly_less(const RealEnclosure& a, const RealEnclosure& b);
bool certainly_greater(const RealEnclosure& a, const RealEnclosure& b);

RealEnclosure pi_enclosure(Bits bits);

/// Ball with real and imaginary components.
class ComplexEnclosure {
public:
  explicit ComplexEnclosure(Bits bits = kDefaultBits) : re_(bits), im_(bits) {}
  ComplexEnclosure(RealEnclosure re, RealEnclosure im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit ComplexEnclosure(RealEnclosure re);

  const RealEnclosure& re() const { return re_; }
  const RealEnclosure& im() const { return im_; }
  RealEnclosure& re() { return re_; }
  RealEnclosure& im() { return im_; }
  Bits precision() const { return re_.precision(); }

  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
  bool contains(const ComplexEnclosure& inner) const {
    return re_.contains(inner.re_) && im_.contains(inner.im_);
  }
  bool overlaps(const ComplexEnclosure& other) const {
    return re_.overlaps(other.re_) && im_.overlaps(other.im_);
  }
  ComplexEnclosure midpoint() const { return {re_.midpoint(), im_.midpoint()}; }

  ComplexEnclosure& operator+=(const ComplexEnclosure& rhs);
  ComplexEnclosure& operator-=(const ComplexEnclosure& rhs);
  ComplexEnclosure& operator*=(const ComplexEnclosure& rhs);
  ComplexEnclosure& operator*=(const RealEnclosure& rhs);
  ComplexEnclosure& operator/=(const ComplexEnclosure& rhs);

  friend ComplexEnclosure operator-(const ComplexEnclosure& z) { return {-z.re_, -z.im_}; }
  friend ComplexEnclosure operator+(ComplexEnclosure a, const ComplexEnclosure& b) { return a += b; }
  friend ComplexEnclosure operator-(ComplexEnclosure a, const ComplexEnclosure& b) { return a -= b; }
  friend ComplexEnclosure operator*(ComplexEnclosure a, const ComplexEnclosure& b) { return a *= b; }
  friend ComplexEnclosure operator*(ComplexEnclosure a, const RealEnclosure& b) { return a *= b; }
  friend ComplexEnclosure operator*(const RealEnclosure& b, ComplexEnclosure a) { return a *= b; }
  friend ComplexEnclosure operator/(ComplexEnclosure a, const ComplexEnclosure& b) { return a /= b; }

private:
  RealEnclosure re_;
  RealEnclosure im_;
};

ComplexEnclosure conj(const ComplexEnclosure& z);
RealEnclosure abs(const ComplexEnclosure& z);
RealEnclosure norm(const ComplexEnclosure& z);  // |z|^2
ComplexEnclosure exp(const ComplexEnclosure& z);
ComplexEnclosure pow(const ComplexEnclosure& z, long n);
ComplexEnclosure exp_complex(const ComplexEnclosure& z);

/// Radius of the smallest disc around the midpoint that covers the ball.
RealEnclosure disc_radius(const ComplexEnclosure& z);

}  // namespace circlezero::precision

#endif  // CIRCLEZERO_ENCLOSURE_HPP
