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

#include "circlezero/enclosure.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace circlezero::precision {

namespace {

constexpr mpfr_prec_t kRadBits = 32;

// Small RAII holder for scratch radius arithmetic.
struct Scratch {
  explicit Scratch(mpfr_prec_t bits = kRadBits) { mpfr_init2(v, bits); mpfr_set_zero(v, 1); }
  ~Scratch() { mpfr_clear(v); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  mpfr_t v;
};

// out <- one unit in the last place of x (0 for zero / non-regular x).
void ulp_of(mpfr_ptr out, mpfr_srcptr x) {
  if (!mpfr_regular_p(x)) {
    mpfr_set_zero(out, 1);
    return;
  }
  mpfr_set_ui_2exp(out, 1, mpfr_get_exp(x) - mpfr_get_prec(x), MPFR_RNDU);
}

void raise_precision(mpfr_ptr x, mpfr_prec_t bits) {
  if (mpfr_get_prec(x) < bits) mpfr_prec_round(x, bits, MPFR_RNDN);
}

}  // namespace

void PrecisionConfig::validate() const {
  if (bits < kMinBits) throw std::invalid_argument("precision must be at least 64 bits");
  if (max_retries < 0) throw std::invalid_argument("max_retries must be nonnegative");
  if (tail_cutoff < 0) throw std::invalid_argument("tail cutoff must be nonnegative");
}

PrecisionConfig PrecisionConfig::doubled() const {
  PrecisionConfig next = *this;
  next.bits = bits * 2;
  next.max_retries = max_retries - 1;
  return next;
}

RealEnclosure::RealEnclosure(Bits bits) {
  mpfr_init2(mid_, std::max<Bits>(bits, MPFR_PREC_MIN));
  mpfr_init2(rad_, kRadBits);
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

RealEnclosure::RealEnclosure(long value, Bits bits) : RealEnclosure(bits) {
  round_error(mpfr_set_si(mid_, value, MPFR_RNDN));
}

RealEnclosure::RealEnclosure(const mpz_class& value, Bits bits) : RealEnclosure(bits) {
  round_error(mpfr_set_z(mid_, value.get_mpz_t(), MPFR_RNDN));
}

RealEnclosure::RealEnclosure(const mpq_class& value, Bits bits) : RealEnclosure(bits) {
  round_error(mpfr_set_q(mid_, value.get_mpq_t(), MPFR_RNDN));
}

RealEnclosure RealEnclosure::from_decimal(const std::string& mid, const std::string& rad, Bits bits) {
  RealEnclosure out(bits);
  if (mpfr_set_str(out.mid_, mid.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("malformed decimal: " + mid);
  }
  // decimal input is treated as inexact
  ulp_of(out.rad_, out.mid_);
  Scratch r;
  if (mpfr_set_str(r.v, rad.c_str(), 10, MPFR_RNDU) == -1) {
    throw std::invalid_argument("malformed decimal: " + rad);
  }
  mpfr_abs(r.v, r.v, MPFR_RNDU);
  mpfr_add(out.rad_, out.rad_, r.v, MPFR_RNDU);
  return out;
}

RealEnclosure RealEnclosure::from_mpfr(mpfr_srcptr mid, int ternary, mpfr_srcptr extra) {
  RealEnclosure out(mpfr_get_prec(mid));
  mpfr_set(out.mid_, mid, MPFR_RNDN);
  if (extra != nullptr) {
    Scratch e;
    mpfr_abs(e.v, extra, MPFR_RNDU);
    mpfr_add(out.rad_, out.rad_, e.v, MPFR_RNDU);
  }
  out.round_error(ternary);
  return out;
}

RealEnclosure RealEnclosure::from_double(double value, Bits bits) {
  RealEnclosure out(bits);
  out.round_error(mpfr_set_d(out.mid_, value, MPFR_RNDN));
  return out;
}

RealEnclosure RealEnclosure::hull(const mpq_class& lo, const mpq_class& hi, Bits bits) {
  if (hi < lo) throw std::invalid_argument("hull: hi < lo");
  RealEnclosure out(mpq_class((lo + hi) / 2), bits);
  mpq_class half_width = (hi - lo) / 2;
  Scratch w;
  mpfr_set_q(w.v, half_width.get_mpq_t(), MPFR_RNDU);
  mpfr_add(out.rad_, out.rad_, w.v, MPFR_RNDU);
  return out;
}

RealEnclosure::RealEnclosure(const RealEnclosure& other) {
  mpfr_init2(mid_, mpfr_get_prec(other.mid_));
  mpfr_init2(rad_, kRadBits);
  mpfr_set(mid_, other.mid_, MPFR_RNDN);
  mpfr_set(rad_, other.rad_, MPFR_RNDU);
}

RealEnclosure::RealEnclosure(RealEnclosure&& other) noexcept {
  mpfr_init2(mid_, MPFR_PREC_MIN);
  mpfr_init2(rad_, kRadBits);
  mpfr_swap(mid_, other.mid_);
  mpfr_swap(rad_, other.rad_);
}

RealEnclosure& RealEnclosure::operator=(const RealEnclosure& other) {
  if (this != &other) {
    mpfr_set_prec(mid_, mpfr_get_prec(other.mid_));
    mpfr_set(mid_, other.mid_, MPFR_RNDN);
    mpfr_set(rad_, other.rad_, MPFR_RNDU);
  }
  return *this;
}

RealEnclosure& RealEnclosure::operator=(RealEnclosure&& other) noexcept {
  mpfr_swap(mid_, other.mid_);
  mpfr_swap(rad_, other.rad_);
  return *this;
}

RealEnclosure::~RealEnclosure() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

void RealEnclosure::round_error(int ternary) {
  if (ternary == 0) return;
  Scratch u;
  ulp_of(u.v, mid_);
  mpfr_add(rad_, rad_, u.v, MPFR_RNDU);
}

double RealEnclosure::mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }
double RealEnclosure::rad_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }

double RealEnclosure::lower_double() const {
  Scratch t(precision() + 8);
  mpfr_sub(t.v, mid_, rad_, MPFR_RNDD);
  return mpfr_get_d(t.v, MPFR_RNDD);
}

double RealEnclosure::upper_double() const {
  Scratch t(precision() + 8);
  mpfr_add(t.v, mid_, rad_, MPFR_RNDU);
  return mpfr_get_d(t.v, MPFR_RNDU);
}

bool RealEnclosure::is_finite() const {
  return mpfr_number_p(mid_) != 0 && mpfr_number_p(rad_) != 0;
}

int RealEnclosure::sign() const {
  if (!is_finite()) return 0;
  if (mpfr_cmpabs(mid_, rad_) > 0) return mpfr_sgn(mid_);
  return 0;
}

mpq_class RealEnclosure::lower_rational() const {
  mpq_class m, r;
  mpfr_get_q(m.get_mpq_t(), mid_);
  mpfr_get_q(r.get_mpq_t(), rad_);
  return m - r;
}

mpq_class RealEnclosure::upper_rational() const {
  mpq_class m, r;
  mpfr_get_q(m.get_mpq_t(), mid_);
  mpfr_get_q(r.get_mpq_t(), rad_);
  return m + r;
}

bool RealEnclosure::contains(const mpq_class& value) const {
  return lower_rational() <= value && value <= upper_rational();
}

bool RealEnclosure::contains(const RealEnclosure& inner) const {
  return lower_rational() <= inner.lower_rational() && inner.upper_rational() <= upper_rational();
}

bool RealEnclosure::overlaps(const RealEnclosure& other) const {
  return lower_rational() <= other.upper_rational() && other.lower_rational() <= upper_rational();
}

RealEnclosure RealEnclosure::midpoint() const {
  RealEnclosure out(precision());
  mpfr_set(out.mid_, mid_, MPFR_RNDN);
  return out;
}

RealEnclosure RealEnclosure::with_precision(Bits bits) const {
  RealEnclosure out(bits);
  mpfr_set(out.rad_, rad_, MPFR_RNDU);
  out.round_error(mpfr_set(out.mid_, mid_, MPFR_RNDN));
  return out;
}

void RealEnclosure::add_error(const RealEnclosure& err) {
  Scratch e;
  mpfr_abs(e.v, err.mid_, MPFR_RNDU);
  mpfr_add(e.v, e.v, err.rad_, MPFR_RNDU);
  mpfr_add(rad_, rad_, e.v, MPFR_RNDU);
}

void RealEnclosure::add_error(double err) {
  Scratch e;
  mpfr_set_d(e.v, std::fabs(err), MPFR_RNDU);
  mpfr_add(rad_, rad_, e.v, MPFR_RNDU);
}

RealEnclosure& RealEnclosure::operator+=(const RealEnclosure& rhs) {
  raise_precision(mid_, rhs.precision());
  mpfr_add(rad_, rad_, rhs.rad_, MPFR_RNDU);
  round_error(mpfr_add(mid_, mid_, rhs.mid_, MPFR_RNDN));
  return *this;
}

RealEnclosure& RealEnclosure::operator-=(const RealEnclosure& rhs) {
  raise_precision(mid_, rhs.precision());
  mpfr_add(rad_, rad_, rhs.rad_, MPFR_RNDU);
  round_error(mpfr_sub(mid_, mid_, rhs.mid_, MPFR_RNDN));
  return *this;
}

RealEnclosure& RealEnclosure::operator*=(const RealEnclosure& rhs) {
  raise_precision(mid_, rhs.precision());
  Scratch ax, ay, t, r;
  mpfr_abs(ax.v, mid_, MPFR_RNDU);
  mpfr_abs(ay.v, rhs.mid_, MPFR_RNDU);
  mpfr_mul(r.v, ax.v, rhs.rad_, MPFR_RNDU);
  mpfr_mul(t.v, ay.v, rad_, MPFR_RNDU);
  mpfr_add(r.v, r.v, t.v, MPFR_RNDU);
  mpfr_mul(t.v, rad_, rhs.rad_, MPFR_RNDU);
  mpfr_add(r.v, r.v, t.v, MPFR_RNDU);
  mpfr_set(rad_, r.v, MPFR_RNDU);
  round_error(mpfr_mul(mid_, mid_, rhs.mid_, MPFR_RNDN));
  return *this;
}

RealEnclosure& RealEnclosure::operator/=(const RealEnclosure& rhs) {
  raise_precision(mid_, rhs.precision());
  Scratch ylow, yabs_dn;
  mpfr_abs(yabs_dn.v, rhs.mid_, MPFR_RNDD);
  mpfr_sub(ylow.v, yabs_dn.v, rhs.rad_, MPFR_RNDD);
  if (mpfr_sgn(ylow.v) <= 0 || !rhs.is_finite()) {
    throw std::domain_error("division by an enclosure that contains zero");
  }
  Scratch ax, ay, num, t, den;
  mpfr_abs(ax.v, mid_, MPFR_RNDU);
  mpfr_abs(ay.v, rhs.mid_, MPFR_RNDU);
  mpfr_mul(num.v, ax.v, rhs.rad_, MPFR_RNDU);
  mpfr_mul(t.v, rad_, ay.v, MPFR_RNDU);
  mpfr_add(num.v, num.v, t.v, MPFR_RNDU);
  mpfr_mul(den.v, yabs_dn.v, ylow.v, MPFR_RNDD);
  mpfr_div(rad_, num.v, den.v, MPFR_RNDU);
  round_error(mpfr_div(mid_, mid_, rhs.mid_, MPFR_RNDN));
  return *this;
}

RealEnclosure operator-(const RealEnclosure& x) {
  RealEnclosure out(x);
  mpfr_neg(out.mid_, out.mid_, MPFR_RNDN);
  return out;
}

RealEnclosure operator*(RealEnclosure a, long b) {
  Scratch ab;
  mpfr_set_si(ab.v, b, MPFR_RNDU);
  mpfr_abs(ab.v, ab.v, MPFR_RNDU);
  mpfr_mul(a.rad_, a.rad_, ab.v, MPFR_RNDU);
  a.round_error(mpfr_mul_si(a.mid_, a.mid_, b, MPFR_RNDN));
  return a;
}

RealEnclosure operator/(RealEnclosure a, long b) {
  if (b == 0) throw std::domain_error("division by zero");
  Scratch ab;
  mpfr_set_si(ab.v, b, MPFR_RNDD);
  mpfr_abs(ab.v, ab.v, MPFR_RNDD);
  mpfr_div(a.rad_, a.rad_, ab.v, MPFR_RNDU);
  a.round_error(mpfr_div_si(a.mid_, a.mid_, b, MPFR_RNDN));
  return a;
}

RealEnclosure RealEnclosure::scaled_pow2(long e) const {
  RealEnclosure out(*this);
  mpfr_mul_2si(out.mid_, out.mid_, e, MPFR_RNDN);
  mpfr_mul_2si(out.rad_, out.rad_, e, MPFR_RNDU);
  return out;
}

std::string RealEnclosure::mid_string(int digits) const {
  if (digits <= 0) {
    digits = static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30102999566398120)) + 1;
  }
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, mid_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string RealEnclosure::rad_string() const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.2RUe", rad_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

RealEnclosure abs(const RealEnclosure& x) {
  if (mpfr_cmpabs(x.mid(), x.rad()) >= 0) {
    return mpfr_sgn(x.mid()) < 0 ? -x : x;
  }
  // The ball straddles zero: cover [0, |mid| + rad].
  Scratch hi(x.precision());
  mpfr_abs(hi.v, x.mid(), MPFR_RNDU);
  mpfr_add(hi.v, hi.v, x.rad(), MPFR_RNDU);
  mpfr_div_2ui(hi.v, hi.v, 1, MPFR_RNDU);
  mpq_class half;
  mpfr_get_q(half.get_mpq_t(), hi.v);
  return RealEnclosure::hull(mpq_class(0), mpq_class(2 * half), x.precision());
}

RealEnclosure sqrt(const RealEnclosure& x) {
  const Bits bits = x.precision();
  Scratch lo(bits);
  mpfr_sub(lo.v, x.mid(), x.rad(), MPFR_RNDD);
  if (mpfr_sgn(lo.v) <= 0) {
    Scratch hi(bits);
    mpfr_add(hi.v, x.mid(), x.rad(), MPFR_RNDU);
    if (mpfr_sgn(hi.v) < 0) throw std::domain_error("sqrt of a negative enclosure");
    mpfr_sqrt(hi.v, hi.v, MPFR_RNDU);
    mpq_class h;
    mpfr_get_q(h.get_mpq_t(), hi.v);
    return RealEnclosure::hull(mpq_class(0), h, bits);
  }
  // |sqrt(m + t) - sqrt(m)| <= r / (2 sqrt(m - r))
  Scratch s, prop, m(bits);
  mpfr_sqrt(s.v, lo.v, MPFR_RNDD);
  mpfr_mul_2ui(s.v, s.v, 1, MPFR_RNDD);
  mpfr_div(prop.v, x.rad(), s.v, MPFR_RNDU);
  const int t = mpfr_sqrt(m.v, x.mid(), MPFR_RNDN);
  return RealEnclosure::from_mpfr(m.v, t, prop.v);
}

RealEnclosure exp(const RealEnclosure& x) {
  const Bits bits = x.precision();
  Scratch m(bits);
  const int t = mpfr_exp(m.v, x.mid(), MPFR_RNDN);
  if (mpfr_inf_p(m.v)) throw std::range_error("exp overflow");
  Scratch up, em1;
  mpfr_exp(up.v, x.mid(), MPFR_RNDU);
  mpfr_expm1(em1.v, x.rad(), MPFR_RNDU);
  mpfr_mul(up.v, up.v, em1.v, MPFR_RNDU);
  if (mpfr_inf_p(up.v)) throw std::range_error("exp overflow");
  return RealEnclosure::from_mpfr(m.v, t, up.v);
}

RealEnclosure log(const RealEnclosure& x) {
  const Bits bits = x.precision();
  Scratch lo;
  mpfr_sub(lo.v, x.mid(), x.rad(), MPFR_RNDD);
  if (mpfr_sgn(lo.v) <= 0) throw std::domain_error("log of an enclosure that reaches zero");
  Scratch m(bits), prop;
  const int t = mpfr_log(m.v, x.mid(), MPFR_RNDN);
  mpfr_div(prop.v, x.rad(), lo.v, MPFR_RNDU);
  return RealEnclosure::from_mpfr(m.v, t, prop.v);
}

RealEnclosure sin(const RealEnclosure& x) {
  Scratch m(x.precision());
  const int t = mpfr_sin(m.v, x.mid(), MPFR_RNDN);
  return RealEnclosure::from_mpfr(m.v, t, x.rad());
}

RealEnclosure cos(const RealEnclosure& x) {
  Scratch m(x.precision());
  const int t = mpfr_cos(m.v, x.mid(), MPFR_RNDN);
  return RealEnclosure::from_mpfr(m.v, t, x.rad());
}

RealEnclosure acos(const RealEnclosure& x) {
  Scratch u;
  mpfr_abs(u.v, x.mid(), MPFR_RNDU);
  mpfr_add(u.v, u.v, x.rad(), MPFR_RNDU);
  if (mpfr_cmp_ui(u.v, 1) >= 0) throw std::domain_error("acos argument must lie inside (-1, 1)");
  // derivative bound 1 / sqrt(1 - u^2)
  Scratch d;
  mpfr_sqr(d.v, u.v, MPFR_RNDU);
  mpfr_ui_sub(d.v, 1, d.v, MPFR_RNDD);
  mpfr_sqrt(d.v, d.v, MPFR_RNDD);
  Scratch prop;
  mpfr_div(prop.v, x.rad(), d.v, MPFR_RNDU);
  Scratch m(x.precision());
  const int t = mpfr_acos(m.v, x.mid(), MPFR_RNDN);
  return RealEnclosure::from_mpfr(m.v, t, prop.v);
}

RealEnclosure pow(const RealEnclosure& x, long n) {
  if (n < 0) return RealEnclosure(1, x.precision()) / pow(x, -n);
  RealEnclosure result(1, x.precision());
  RealEnclosure base = x;
  unsigned long e = static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

bool certainly_less(const RealEnclosure& a, const RealEnclosure& b) { return (b - a).sign() > 0; }
bool certainly_greater(const RealEnclosure& a, const RealEnclosure& b) { return (a - b).sign() > 0; }

RealEnclosure max(const RealEnclosure& a, const RealEnclosure& b) {
  if (certainly_greater(a, b)) return a;
  if (certainly_less(a, b)) return b;
  const Bits bits = std::max(a.precision(), b.precision());
  return RealEnclosure::hull(std::max(a.lower_rational(), b.lower_rational()),
                             std::max(a.upper_rational(), b.upper_rational()), bits);
}

RealEnclosure min(const RealEnclosure& a, const RealEnclosure& b) {
  if (certainly_less(a, b)) return a;
  if (certainly_greater(a, b)) return b;
  const Bits bits = std::max(a.precision(), b.precision());
  return RealEnclosure::hull(std::min(a.lower_rational(), b.lower_rational()),
                             std::min(a.upper_rational(), b.upper_rational()), bits);
}

RealEnclosure pi_enclosure(Bits bits) {
  Scratch m(bits);
  const int t = mpfr_const_pi(m.v, MPFR_RNDN);
  return RealEnclosure::from_mpfr(m.v, t, nullptr);
}

ComplexEnclosure::ComplexEnclosure(RealEnclosure re) : re_(std::move(re)), im_(re_.precision()) {}

ComplexEnclosure& ComplexEnclosure::operator+=(const ComplexEnclosure& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

ComplexEnclosure& ComplexEnclosure::operator-=(const ComplexEnclosure& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

ComplexEnclosure& ComplexEnclosure::operator*=(const ComplexEnclosure& rhs) {
  RealEnclosure re = re_ * rhs.re_ - im_ * rhs.im_;
  RealEnclosure im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ComplexEnclosure& ComplexEnclosure::operator*=(const RealEnclosure& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

ComplexEnclosure& ComplexEnclosure::operator/=(const ComplexEnclosure& rhs) {
  const RealEnclosure n = norm(rhs);
  RealEnclosure re = (re_ * rhs.re_ + im_ * rhs.im_) / n;
  RealEnclosure im = (im_ * rhs.re_ - re_ * rhs.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ComplexEnclosure conj(const ComplexEnclosure& z) { return {z.re(), -z.im()}; }

RealEnclosure norm(const ComplexEnclosure& z) {
  const RealEnclosure a = abs(z.re());
  const RealEnclosure b = abs(z.im());
  return a * a + b * b;
}

RealEnclosure abs(const ComplexEnclosure& z) { return sqrt(norm(z)); }

ComplexEnclosure exp(const ComplexEnclosure& z) {
  const RealEnclosure scale = exp(z.re());
  return {scale * cos(z.im()), scale * sin(z.im())};
}

ComplexEnclosure exp_complex(const ComplexEnclosure& z) { return exp(z); }

ComplexEnclosure pow(const ComplexEnclosure& z, long n) {
  const Bits bits = z.precision();
  if (n < 0) return ComplexEnclosure(RealEnclosure(1, bits)) / pow(z, -n);
  ComplexEnclosure result{RealEnclosure(1, bits)};
  ComplexEnclosure base = z;
  unsigned long e = static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

RealEnclosure disc_radius(const ComplexEnclosure& z) {
  Scratch r;
  mpfr_add(r.v, z.re().rad(), z.im().rad(), MPFR_RNDU);
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), r.v);
  return RealEnclosure(q, std::max<Bits>(64, kRadBits * 2));
}

}  // namespace circlezero::precision
