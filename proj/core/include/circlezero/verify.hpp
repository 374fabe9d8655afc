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


#ifndef CIRCLEZERO_VERIFY_HPP
#define CIRCLEZERO_VERIFY_HPP

#include <algorithm>
#include <exception>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "circlezero/enclosure.hpp"
#include "circlezero/families.hpp"

namespace circlezero::verify {

using exact::BigRational;
using families::ChebyshevForm;
using families::Family;
using families::FamilyPoly;
using precision::Bits;
using precision::ComplexEnclosure;
using precision::PrecisionConfig;
using precision::RealEnclosure;

/// Raised when an iterative numeric procedure fails outright.
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Verdict { certified_true, certified_false, indeterminate };
enum class Criterion { lakatos, schinzel };
enum class Method { criteria, oscillation, sign_count, roots };
enum class Status { certified, refuted, indeterminate };

std::string to_string(Verdict v);
std::string to_string(Criterion c);
std::string to_string(Method m);
std::string to_string(Status s);
/// "criteria", "oscillation", "sign-count", "roots"; throws std::invalid_argument.
Method parse_method(const std::string& name);

/// Verdict from an enclosure: lower > 0, upper < 0, or undecided.
Verdict verdict_of(const RealEnclosure& margin);

struct CriteriaReport {
  Family family = Family::P;
  long k = 0;
  Criterion criterion = Criterion::lakatos;
  RealEnclosure c;
  RealEnclosure margin;
  Verdict holds = Verdict::indeterminate;
  /// true when margin was computed in exact rational arithmetic
  bool exact = false;
  Bits bits = precision::kDefaultBits;
};

/// |A_n| - sum_{j=0}^{n} |A_j - A_n| on the reduced polynomial.
/// Throws std::domain_error unless the reduced polynomial is reciprocal.
CriteriaReport lakatos_check(const FamilyPoly& poly, const PrecisionConfig& cfg = {});
/// |A_n| - sum_{j=0}^{n} |c A_j - A_n| on the reduced polynomial (d = 1).
/// Throws std::domain_error unless the reduced polynomial is self-inversive.
CriteriaReport schinzel_check(const FamilyPoly& poly, const RealEnclosure& c, const PrecisionConfig& cfg = {});
/// Exact rational path when c is rational.
CriteriaReport schinzel_check(const FamilyPoly& poly, const BigRational& c, const PrecisionConfig& cfg = {});

/// Lakatos margin of an arbitrary reciprocal coefficient list in Q[lambda_k].
CriteriaReport lakatos_check(const std::vector<families::ZetaCoefficient>& coeffs, long k,
                             const PrecisionConfig& cfg = {});

/// pi / (4 (1 + 3^{-1-2k}))
RealEnclosure schinzel_constant_S(long k, Bits bits);
/// pi^2 (1 - 2^{2-2k}) / (8 (1 - 2^{3-2k}))
RealEnclosure schinzel_constant_Y(long k, Bits bits);

/// Real function of theta = r pi, evaluated at `bits`.
using AngleFunction = std::function<RealEnclosure(const BigRational& r, Bits bits)>;

struct OscillationReport {
  long k = 0;
  std::vector<BigRational> points;  // theta / pi
  std::vector<int> signs;           // 0 where undecided
  std::vector<RealEnclosure> values;
  RealEnclosure min_abs;
  long order_achieved = 0;
  BigRational d;
  /// every |f(p_i)| certified above d
  bool distance_certified = false;
  Bits bits = precision::kDefaultBits;
};

/// Evaluates f at each point; order = number of strict sign changes.
OscillationReport alternating_verify(const AngleFunction& f, const std::vector<BigRational>& points,
                                     const BigRational& d, const PrecisionConfig& cfg = {});

/// 2cos(k t) + pi^2/3 cos((k-2) t) + 2/(1-2^{1-2k}) sin((k-3) t)/sin t
RealEnclosure wk(long k, const BigRational& r, Bits bits);
/// 2cos((k-2) t) + 4/pi sin((k-1) t) + C sin((k-3) t)/sin t
RealEnclosure qk(long k, const BigRational& r, Bits bits);
/// (1/pi) arccos(0.3 / (pi^2/3 - 2))
RealEnclosure alpha_w(Bits bits);
/// (1/pi) arccos(0.03 / (2 - 16/pi^2))
RealEnclosure alpha_q(Bits bits);
long j0_w(long k);
long j0_q(long k);

/// Sample set on (-pi, pi) as multiples of pi, increasing (2k+1 points).
std::vector<BigRational> build_wk_samples(long k);
/// Sample set with the two excluded half-integer points removed.
std::vector<BigRational> build_qk_samples(long k);
/// Full 2k+1 point set before exclusion.
std::vector<BigRational> build_qk_samples_full(long k);

/// Exact coefficient-difference bound for |z^{-k} W_k(iz)/A_0 - w_k|.
RealEnclosure oscillation_bound_W(long k, Bits bits);
/// Same for |z^{-k} Q_k(iz)/A_1 - q_k|.
RealEnclosure oscillation_bound_Q(long k, Bits bits);

struct VerificationReport {
  Family family = Family::P;
  long k = 0;
  Method method = Method::sign_count;
  Method requested = Method::sign_count;
  long zeros_on_circle = 0;
  long degree = 0;  // nontrivial degree
  long zeros_at_origin = 0;
  long zeros_off_circle = 0;
  std::optional<RealEnclosure> max_modulus_deviation;
  std::optional<RealEnclosure> min_root_distance;
  std::optional<RealEnclosure> margin;
  std::optional<RealEnclosure> bound;
  long order_achieved = 0;
  long sign_changes = 0;
  long target = 0;
  bool simple = false;
  Status status = Status::indeterminate;
  Bits bits = precision::kDefaultBits;
  std::string note;

  bool certified() const { return status == Status::certified; }
};

VerificationReport oscillation_verify_W(long k, const PrecisionConfig& cfg = {});
VerificationReport oscillation_verify_Q(long k, const PrecisionConfig& cfg = {});

/// Certified sign changes of sum c_m T_m(u) on [-1, 1].
VerificationReport sign_change_count(const ChebyshevForm& form, long target, const PrecisionConfig& cfg = {});
/// Target derived from the degree and the exact zeros at u = +-1.
VerificationReport sign_change_count(const ChebyshevForm& form, const PrecisionConfig& cfg = {});
/// Generic real T-basis coefficients.
VerificationReport sign_change_count(const std::function<std::vector<RealEnclosure>(Bits)>& coeffs, long target,
                                     bool zero_at_plus_one, bool zero_at_minus_one, const PrecisionConfig& cfg = {});
/// Required sign changes for the form (degree minus exact endpoint zeros).
long sign_change_target(const ChebyshevForm& form);

struct RootCertificate {
  std::vector<ComplexEnclosure> roots;  // boxes covering the discs
  std::vector<RealEnclosure> radii;     // disc radii (upper bounds)
  std::vector<bool> isolated;           // disc disjoint from all others
  std::vector<bool> on_circle;          // proven |z| = 1
  std::vector<bool> off_circle;         // proven |z| != 1
};

/// All roots of sum coeffs[j] z^j; `self_inversive` enables the |z| = 1 proof.
RootCertificate find_roots(const std::function<std::vector<RealEnclosure>(Bits)>& coeffs, Bits bits,
                           bool self_inversive);
/// Roots of a family polynomial: exact zeros for the origin multiplicity first.
std::vector<ComplexEnclosure> find_roots(const FamilyPoly& poly, Bits bits);
RootCertificate certify_roots(const FamilyPoly& poly, Bits bits);
/// Lower bound on the minimal pairwise distance, as an enclosure.
RealEnclosure simplicity_check(const std::vector<ComplexEnclosure>& roots);
/// Pairwise disjoint boxes.
bool roots_simple(const std::vector<ComplexEnclosure>& roots);

/// Dispatches to one engine; oscillation and criteria fall back to sign-count
/// where they do not apply.
VerificationReport verify(Family family, long k, Method method, const PrecisionConfig& cfg = {});
VerificationReport verify_roots(const FamilyPoly& poly, const PrecisionConfig& cfg = {});
VerificationReport verify_sign_count(const FamilyPoly& poly, const PrecisionConfig& cfg = {});
VerificationReport verify_criteria(const FamilyPoly& poly, const PrecisionConfig& cfg = {});

/// The standard criterion per family: Schinzel with its constant for S and Y,
/// Lakatos otherwise.
CriteriaReport family_criteria_check(Family family, long k, const PrecisionConfig& cfg = {});

/// Deterministic parallel map; results keep the input order.
template <class T, class F>
auto parallel_map(const std::vector<T>& tasks, int workers, F&& fn) {
  using R = decltype(fn(tasks.front()));
  std::vector<std::optional<R>> slots(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  const size_t n_workers = std::max<size_t>(1, std::min<size_t>(static_cast<size_t>(std::max(workers, 1)), tasks.size()));
  auto run = [&](size_t start) {
    for (size_t i = start; i < tasks.size(); i += n_workers) {
      try {
        slots[i].emplace(fn(tasks[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (n_workers <= 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (size_t w = 0; w < n_workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::vector<R> out;
  out.reserve(tasks.size());
  for (size_t i = 0; i < tasks.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace circlezero::verify

#endif  // CIRCLEZERO_VERIFY_HPP
