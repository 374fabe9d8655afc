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


#include "circlezero/exact.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>
#include <string>

namespace circlezero::exact {

namespace {

std::atomic<long> g_cap{kDefaultTableCap};

template <class Table>
struct Registry {
  std::mutex mutex;
  std::atomic<const Table*> current{nullptr};
  std::vector<std::unique_ptr<Table>> retained;
};

Registry<BernoulliTable>& bernoulli_registry() {
  static Registry<BernoulliTable> r;
  return r;
}

Registry<EulerTable>& euler_registry() {
  static Registry<EulerTable> r;
  return r;
}

void check_index(long n, const char* what) {
  if (n < 0) throw std::domain_error(std::string(what) + ": negative index");
  if (n > g_cap.load()) {
    throw CapacityError(std::string(what) + ": index " + std::to_string(n) + " exceeds table cap " +
                        std::to_string(g_cap.load()));
  }
}

// Tangent numbers T_1..T_m, then B_{2k} = (-1)^{k-1} 2k T_k / (4^k (4^k - 1)).
std::unique_ptr<BernoulliTable> build_bernoulli(long m) {
  std::vector<BigInt> t(static_cast<size_t>(m) + 1);
  if (m >= 1) t[1] = 1;
  for (long k = 2; k <= m; ++k) t[k] = (k - 1) * t[k - 1];
  for (long k = 2; k <= m; ++k) {
    for (long j = k; j <= m; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
  }
  auto table = std::make_unique<BernoulliTable>();
  table->values.resize(static_cast<size_t>(m) + 1);
  table->values[0] = 1;
  for (long k = 1; k <= m; ++k) {
    BigInt four_k = BigInt(1) << static_cast<mp_bitcnt_t>(2 * k);
    BigRational b(2 * k * t[k], four_k * (four_k - 1));
    b.canonicalize();
    table->values[k] = (k % 2 == 1) ? b : BigRational(-b);
  }
  return table;
}

// Seidel-Entringer boustrophedon; zigzag numbers give |E_{2i}|.
std::unique_ptr<EulerTable> build_euler(long m) {
  const long top = 2 * m;
  auto table = std::make_unique<EulerTable>();
  table->values.resize(static_cast<size_t>(m) + 1);
  table->values[0] = 1;
  std::vector<BigInt> prev{BigInt(1)};
  std::vector<BigInt> row;
  for (long n = 1; n <= top; ++n) {
    row.assign(static_cast<size_t>(n) + 1, BigInt(0));
    for (long k = 1; k <= n; ++k) row[k] = row[k - 1] + prev[n - k];
    if (n % 2 == 0) {
      const long i = n / 2;
      table->values[i] = (i % 2 == 0) ? row[n] : BigInt(-row[n]);
    }
    prev.swap(row);
  }
  return table;
}

template <class Table, class Build>
const Table& grow(Registry<Table>& reg, long n, Build build) {
  const long need = n / 2;
  const Table* cur = reg.current.load(std::memory_order_acquire);
  if (cur != nullptr && cur->max_index() >= n) return *cur;
  std::lock_guard<std::mutex> lock(reg.mutex);
  cur = reg.current.load(std::memory_order_acquire);
  if (cur != nullptr && cur->max_index() >= n) return *cur;
  long m = std::max<long>(need, 32);
  if (cur != nullptr) m = std::max<long>(m, 2 * (static_cast<long>(cur->values.size()) - 1));
  m = std::max(need, std::min(m, g_cap.load() / 2));
  reg.retained.push_back(build(m));
  const Table* fresh = reg.retained.back().get();
  reg.current.store(fresh, std::memory_order_release);
  return *fresh;
}

}  // namespace

void set_table_cap(long cap) {
  if (cap < 2) throw std::invalid_argument("table cap must be at least 2");
  g_cap.store(cap);
}

long table_cap() { return g_cap.load(); }

const BernoulliTable& bernoulli_table(long n) {
  check_index(n, "bernoulli");
  return grow(bernoulli_registry(), n, build_bernoulli);
}

const EulerTable& euler_table(long n) {
  check_index(n, "euler");
  return grow(euler_registry(), n, build_euler);
}

BigRational bernoulli(long n) {
  check_index(n, "bernoulli");
  if (n == 1) return BigRational(-1, 2);
  if (n % 2 == 1) return 0;
  return bernoulli_table(n).values[static_cast<size_t>(n / 2)];
}

BigInt euler(long n) {
  check_index(n, "euler");
  if (n % 2 == 1) return 0;
  return euler_table(n).values[static_cast<size_t>(n / 2)];
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) throw std::domain_error("binomial requires 0 <= k <= n");
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigRational pow2(long e) {
  BigInt p = BigInt(1) << static_cast<mp_bitcnt_t>(e < 0 ? -e : e);
  return e < 0 ? BigRational(1, p) : BigRational(p);
}

BigRational zeta_even_rational(long n) {
  if (n < 1) throw std::domain_error("zeta_even_rational requires n >= 1");
  BigRational r = bernoulli(2 * n) * pow2(2 * n - 1) / BigRational(factorial(2 * n));
  r.canonicalize();
  return n % 2 == 1 ? r : BigRational(-r);
}

BigRational bernoulli_half_value(long n) {
  if (n < 0 || n % 2 == 1) throw std::domain_error("bernoulli_half_value requires even n >= 0");
  BigRational r = (pow2(1 - n) - 1) * bernoulli(n);
  r.canonicalize();
  return r;
}

std::pair<bool, bool> check_bernoulli_bounds(long n, const precision::PrecisionConfig& cfg) {
  using precision::RealEnclosure;
  if (n < 1) throw std::domain_error("check_bernoulli_bounds requires n >= 1");
  const BigRational abs_b = abs(bernoulli(2 * n));
  const BigRational up_scale = 1 / (1 - pow2(1 - 2 * n));
  const BigRational dan_scale = 1 / (1 - pow2(-2 * n));
  const BigInt fact = factorial(2 * n);
  return precision::with_retries(cfg, [&](precision::Bits bits) -> std::optional<std::pair<bool, bool>> {
    const RealEnclosure two_pi = precision::pi_enclosure(bits).scaled_pow2(1);
    const RealEnclosure lower = RealEnclosure(BigInt(2 * fact), bits) / precision::pow(two_pi, 2 * n);
    const RealEnclosure b(abs_b, bits);
    const int s1 = (b - lower).sign();
    const int s2 = (lower * RealEnclosure(up_scale, bits) - b).sign();
    const int s3 = (b - lower * RealEnclosure(dan_scale, bits)).sign();
    if (s1 == 0 || s2 == 0 || s3 == 0) return std::nullopt;
    return std::make_pair(s1 > 0 && s2 > 0, s3 > 0);
  });
}

bool check_euler_bounds(long n, const precision::PrecisionConfig& cfg) {
  using precision::RealEnclosure;
  if (n < 1) throw std::domain_error("check_euler_bounds requires n >= 1");
  const BigInt abs_e = abs(euler(2 * n));
  const BigInt scale = (BigInt(1) << static_cast<mp_bitcnt_t>(2 * n + 2)) * factorial(2 * n);
  BigInt three = 1;
  mpz_ui_pow_ui(three.get_mpz_t(), 3, static_cast<unsigned long>(2 * n + 1));
  const BigRational low_scale = BigRational(three, three + 1);
  return precision::with_retries(cfg, [&](precision::Bits bits) -> std::optional<bool> {
    const RealEnclosure top = RealEnclosure(scale, bits) / precision::pow(precision::pi_enclosure(bits), 2 * n + 1);
    const RealEnclosure e(abs_e, bits);
    const int s1 = (top - e).sign();
    const int s2 = (e - top * RealEnclosure(BigRational(low_scale), bits)).sign();
    if (s1 == 0 || s2 == 0) return std::nullopt;
    return s1 > 0 && s2 > 0;
  });
}

}  // namespace circlezero::exact
