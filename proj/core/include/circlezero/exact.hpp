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


#ifndef CIRCLEZERO_EXACT_HPP
#define CIRCLEZERO_EXACT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <utility>
#include <vector>

#include "circlezero/enclosure.hpp"

namespace circlezero::exact {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline constexpr long kDefaultTableCap = 4096;

/// Index beyond the configured table cap.
class CapacityError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// Even-index Bernoulli numbers: values[i] = B_{2i}.
struct BernoulliTable {
  std::vector<BigRational> values;
  long max_index() const { return 2 * (static_cast<long>(values.size()) - 1); }
};

/// Even-index Euler numbers: values[i] = E_{2i}.
struct EulerTable {
  std::vector<BigInt> values;
  long max_index() const { return 2 * (static_cast<long>(values.size()) - 1); }
};

/// Largest n accepted by bernoulli() / euler().
void set_table_cap(long cap);
long table_cap();

/// Snapshot of the current tables covering at least index n. The returned
/// reference stays valid for the lifetime of the process.
const BernoulliTable& bernoulli_table(long n);
const EulerTable& euler_table(long n);

/// B_n (B_1 = -1/2, odd n > 1 give 0).
BigRational bernoulli(long n);
/// E_n (odd n give 0).
BigInt euler(long n);
/// C(n, k); throws std::domain_error unless 0 <= k <= n.
BigInt binomial(long n, long k);
BigInt factorial(long n);

/// r with zeta(2n) = r pi^{2n}.
BigRational zeta_even_rational(long n);
/// B_n(1/2) = (2^{1-n} - 1) B_n.
BigRational bernoulli_half_value(long n);

/// (classical two-sided bound holds, sharper lower bound holds) for |B_{2n}|.
std::pair<bool, bool> check_bernoulli_bounds(long n, const precision::PrecisionConfig& cfg = {});
/// Two-sided bound for |E_{2n}|.
bool check_euler_bounds(long n, const precision::PrecisionConfig& cfg = {});

/// 2^e as a rational (e may be negative).
BigRational pow2(long e);

}  // namespace circlezero::exact

#endif  // CIRCLEZERO_EXACT_HPP
