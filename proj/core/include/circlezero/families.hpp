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


#ifndef CIRCLEZERO_FAMILIES_HPP
#define CIRCLEZERO_FAMILIES_HPP

#include <string>
#include <vector>

#include "circlezero/enclosure.hpp"
#include "circlezero/exact.hpp"

namespace circlezero::families {

using exact::BigRational;
using precision::Bits;
using precision::ComplexEnclosure;
using precision::RealEnclosure;

/// a + b*lambda + c*lambda^2 with rational a, b, c.
class ZetaCoefficient {
public:
  ZetaCoefficient() = default;
  ZetaCoefficient(BigRational a) : a_(std::move(a)) {}  // NOLINT(implicit)
  ZetaCoefficient(BigRational a, BigRational b, BigRational c = 0);

  static ZetaCoefficient lambda(BigRational b) { return {0, std::move(b), 0}; }

  const BigRational& a() const { return a_; }
  const BigRational& b() const { return b_; }
  const BigRational& c() const { return c_; }

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0; }
  bool is_rational() const { return b_ == 0 && c_ == 0; }

  ZetaCoefficient& operator+=(const ZetaCoefficient& rhs);
  ZetaCoefficient& operator-=(const ZetaCoefficient& rhs);
  /// Throws std::overflow_error when a lambda^3 term would appear.
  ZetaCoefficient& operator*=(const ZetaCoefficient& rhs);
  ZetaCoefficient& operator*=(const BigRational& rhs);

  friend ZetaCoefficient operator+(ZetaCoefficient x, const ZetaCoefficient& y) { return x += y; }
  friend ZetaCoefficient operator-(ZetaCoefficient x, const ZetaCoefficient& y) { return x -= y; }
  friend ZetaCoefficient operator*(ZetaCoefficient x, const ZetaCoefficient& y) { return x *= y; }
  friend ZetaCoefficient operator*(ZetaCoefficient x, const BigRational& y) { return x *= y; }
  friend ZetaCoefficient operator*(const BigRational& y, ZetaCoefficient x) { return x *= y; }
  friend ZetaCoefficient operator-(const ZetaCoefficient& x) { return {-x.a_, -x.b_, -x.c_}; }
  friend bool operator==(const ZetaCoefficient& x, const ZetaCoefficient& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
  }

  RealEnclosure evaluate(const RealEnclosure& lambda) const;
  std::string to_string() const;

private:
  BigRational a_{0}, b_{0}, c_{0};
};

enum class Family { R, P, Q, Y, W, S };

std::string family_name(Family f);
/// Accepts "R", "P", ... (case-insensitive); throws std::invalid_argument.
Family parse_family(const std::string& name);
long family_min_k(Family f);

/// Polynomial in z with coefficients in Q[lambda_k], stored divided by pi^pi_power.
struct FamilyPoly {
  Family family = Family::P;
  long k = 2;
  long pi_power = 0;
  std::vector<ZetaCoefficient> coeffs;  // degree 0 upward
  int epsilon = 1;
  /// closed form = combination_scale * linear combination (W: 2)
  BigRational combination_scale{1};

  long degree() const;
  /// Multiplicity of the zero at z = 0.
  long origin_multiplicity() const;
  long nontrivial_degree() const { return degree() - origin_multiplicity(); }
  bool has_lambda() const;
  bool is_rational() const { return !has_lambda(); }
  /// Divided by z^origin_multiplicity, trailing zero coefficients dropped.
  FamilyPoly reduced() const;
  /// coeffs[n-j] == epsilon * coeffs[j] on the reduced polynomial, exactly.
  bool is_self_inversive() const;
  /// Coefficient enclosures with lambda_k bound at `bits` (still pi-normalized).
  std::vector<RealEnclosure> bind(Bits bits) const;
};

FamilyPoly build_R(long k);
/// The sum over j = 0..k-1 only.
FamilyPoly build_R_truncated(long k);
FamilyPoly build_P(long k);
FamilyPoly build_Q(long k);
FamilyPoly build_W(long k);
FamilyPoly build_Y(long k);
FamilyPoly build_S(long k);
FamilyPoly build(Family f, long k);

/// (2^{2k}+1) P(z) - 2^{2k} P(z/2) - P(2z)
FamilyPoly build_Q_combination(long k);
/// (2^{2k-1}+2) P(z) - 2^{2k} P(z/2) - P(2z)
FamilyPoly build_W_combination(long k);
/// pi/2^{2k} (Q(i sqrt z) + Q(-i sqrt z)), normalized by pi^{2k}
FamilyPoly build_Y_symmetrized(long k);

/// Coefficients A_0..A_{4k} of |P_k(iz)|^2 for real z, divided by pi^{4k-2}.
std::vector<ZetaCoefficient> abs_square_coeffs(long k);

/// Horner evaluation of bound coefficients.
ComplexEnclosure evaluate(const std::vector<RealEnclosure>& coeffs, const ComplexEnclosure& z);
RealEnclosure evaluate(const std::vector<RealEnclosure>& coeffs, const RealEnclosure& x);
/// Value of the family polynomial including the pi^pi_power factor.
ComplexEnclosure evaluate_full(const FamilyPoly& poly, const ComplexEnclosure& z, Bits bits);

/// V*(u) = sum c_m T_m(u) with (z^n + eps) V(z) = 2 z^n V*((z + 1/z)/2).
struct ChebyshevForm {
  Family family = Family::P;
  long k = 2;
  int epsilon = 1;
  std::vector<ZetaCoefficient> coeffs;  // T-basis, degree 0 upward

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  std::vector<RealEnclosure> bind(Bits bits) const;
  /// Exact value at u = +1 (sign > 0) or u = -1.
  ZetaCoefficient endpoint_value(int sign) const;
};

ChebyshevForm chebyshev_reduce(long k);
/// For any self-inversive family polynomial (applied to the reduced form).
ChebyshevForm chebyshev_reduce(const FamilyPoly& poly);
/// Monomial coefficients in u.
std::vector<ZetaCoefficient> to_power_basis(const ChebyshevForm& form);
/// sum c_m T_m(u) by Clenshaw's recurrence.
RealEnclosure clenshaw(const std::vector<RealEnclosure>& coeffs, const RealEnclosure& u);

}  // namespace circlezero::families

#endif  // CIRCLEZERO_FAMILIES_HPP
