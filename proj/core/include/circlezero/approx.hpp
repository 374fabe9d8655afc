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


#ifndef CIRCLEZERO_APPROX_HPP
#define CIRCLEZERO_APPROX_HPP

#include <optional>
#include <string>
#include <vector>

#include "circlezero/enclosure.hpp"
#include "circlezero/exact.hpp"

namespace circlezero::approx {

using exact::BigRational;
using precision::Bits;
using precision::ComplexEnclosure;
using precision::RealEnclosure;

/// Both sides of a series identity at one point.
struct SeriesEvaluation {
  std::string identity;  // "ramanujan" or "sech"
  long k = 0;
  ComplexEnclosure z;
  long N = 0;
  ComplexEnclosure lhs;
  ComplexEnclosure rhs;  // truncated sums, radius includes tail_bound
  RealEnclosure tail_bound;
  ComplexEnclosure residual;  // lhs - rhs
  Bits bits = precision::kDefaultBits;

  bool holds() const { return residual.contains_zero(); }
  /// Larger of the two residual radii, rounded up to a double.
  double width() const;
};

/// pi^{2k-1}/2 P_k(z) against
///   -sum n^{1-2k} z^{2k-1}/(e^{2 pi n/z}-1) + (-1)^{k+1} sum n^{1-2k} z/(e^{2 pi n z}-1).
/// Requires k >= 2 and Re z > 0 (certified). N = 0 picks the depth automatically.
SeriesEvaluation ramanujan_identity_residual(long k, const ComplexEnclosure& z, long N, Bits bits);

/// (pi/2)^{2k+1}/(2 (2k)!) S_k(-z^2) against
///   z^{2k} sum chi(n) sech(pi n/(2z))/n^{2k+1} + (-1)^k sum chi(n) sech(pi n z/2)/n^{2k+1},
/// chi the nontrivial character mod 4. Requires k >= 1 and z > 0.
SeriesEvaluation sech_identity_residual(long k, const RealEnclosure& z, long N, Bits bits);

/// Smallest N whose tail bound for the given identity is below 2^{-bits/2}.
long auto_depth_ramanujan(long k, const ComplexEnclosure& z, Bits bits);
long auto_depth_sech(long k, const RealEnclosure& z, Bits bits);

/// coef * z^p / (e^{scale pi z^q} - 1), q = +1 or -1.
struct ExpTerm {
  BigRational coef;
  long p = 1;
  BigRational scale;
  int q = 1;
};

/// Sum of ExpTerm and its derivative.
ComplexEnclosure exp_sum(const std::vector<ExpTerm>& terms, const ComplexEnclosure& z);
ComplexEnclosure exp_sum_derivative(const std::vector<ExpTerm>& terms, const ComplexEnclosure& z);

struct NewtonResult {
  ComplexEnclosure seed;
  ComplexEnclosure root;      // exact midpoint
  ComplexEnclosure residual;  // F(root) as an enclosure
  int steps = 0;
  bool converged = false;
};

/// Damped complex Newton: step halves while |F| does not decrease; at most
/// `max_steps` iterations. Throws verify::NumericError on divergence.
NewtonResult newton_solve(const std::vector<ExpTerm>& terms, const ComplexEnclosure& seed, Bits bits,
                          int max_steps = 100);

/// z/(e^{2 pi/z}-1) + z^{-1}/(e^{2 pi z}-1)
std::vector<ExpTerm> approx1_constraint();
/// 2z/(e^{4 pi z}-1) + 8z^3/(e^{pi/z}-1) - 17z/(e^{2 pi z}-1)
///   - 17z^3/(e^{2 pi/z}-1) + 8z/(e^{pi z}-1) + 2z^3/(e^{4 pi/z}-1)
std::vector<ExpTerm> approx2_constraint();
/// z^{k-1}/(e^{2 pi/z}-1) + (-1)^k z^{1-k}/(e^{2 pi z}-1)
std::vector<ExpTerm> auxiliary_constraint(long k);

enum class Scheme { approx1, approx2 };
std::string to_string(Scheme s);
Scheme parse_scheme(const std::string& name);

/// Which P_2 root seeds approx1: the default takes Re > 0, Im < 0 with the
/// largest real part; "alternate" takes the other one in that quadrant.
enum class SeedConvention { standard, alternate };
SeedConvention parse_seed_convention(const std::string& name);
std::string to_string(SeedConvention c);

struct ApproxResult {
  Scheme scheme = Scheme::approx1;
  ComplexEnclosure seed;
  ComplexEnclosure root;
  RealEnclosure estimate;      // real part of the quotient
  RealEnclosure estimate_imag; // imaginary part (tiny near the circle)
  RealEnclosure zeta3;
  RealEnclosure error;         // estimate - zeta(3)
  int matched_decimals = 0;
  ComplexEnclosure residual;
  int newton_steps = 0;
  Bits bits = precision::kDefaultBits;
};

ApproxResult approx1_zeta3(Bits bits, SeedConvention seed = SeedConvention::standard);
ApproxResult approx2_zeta3(Bits bits);
ApproxResult run_scheme(Scheme s, Bits bits, SeedConvention seed = SeedConvention::standard);

/// Leading significant decimal digits shared by every point of `x` and of `ref`.
int matched_decimals(const RealEnclosure& x, const RealEnclosure& ref);

struct AuxiliaryPair {
  ComplexEnclosure poly_root;
  std::optional<ComplexEnclosure> aux_root;
  std::optional<RealEnclosure> distance;
  std::string error;  // set when Newton failed for this root
};

/// Newton on the auxiliary equation from every nontrivial root of P_k.
std::vector<AuxiliaryPair> auxiliary_zeros(long k, Bits bits);

}  // namespace circlezero::approx

#endif  // CIRCLEZERO_APPROX_HPP
