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


#ifndef CIRCLEZERO_IDENTITIES_HPP
#define CIRCLEZERO_IDENTITIES_HPP

#include <string>
#include <vector>

#include "circlezero/enclosure.hpp"
#include "circlezero/families.hpp"

namespace circlezero::identities {

using exact::BigRational;
using families::Family;
using families::ZetaCoefficient;
using precision::Bits;
using precision::PrecisionConfig;
using precision::RealEnclosure;

/// Exact comparison of two sides in Q[lambda].
struct ExactIdentity {
  std::string name;
  long k = 0;
  ZetaCoefficient lhs;
  ZetaCoefficient rhs;
  bool holds() const { return lhs == rhs; }
};

/// |S_k(1)| against 2^{2k+1} (2^{2k+2}-1) |B_{2k+2}| / (k+1).
ExactIdentity s_at_one(long k);
/// Sum of the coefficients of Y_k/z against -2^{2k} (2k-1)(1-2^{-2k}) B_{2k}/(2k)!
/// (both pi-normalized).
ExactIdentity y_coefficient_sum(long k);

/// Closed form against the combination form (W: combination times 2); every
/// coefficient compared exactly.
bool q_combination_matches(long k);
bool w_combination_matches(long k);
/// coeffs[n-j] == eps coeffs[j] on the reduced polynomial.
bool self_inversive(Family f, long k);

struct ObservationReport {
  long k = 0;
  /// (4k(k-1)|A_{4k}| - sum |A_{4k} - A_j|) / |A_{4k}|
  RealEnclosure residual;
  /// sign of A_{4k} - A_j, 0 where the difference vanishes exactly
  std::vector<int> signs;
  /// the signed sum recomputed in Q[lambda^2] equals 4k(k-1)|A_{4k}| exactly
  bool exact_holds = false;
  Bits bits = precision::kDefaultBits;
};

ObservationReport observation_check(long k, Bits bits);

}  // namespace circlezero::identities

#endif  // CIRCLEZERO_IDENTITIES_HPP
