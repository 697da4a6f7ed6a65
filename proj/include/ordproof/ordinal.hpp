/* Copyright 2026 The ordproof Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef ORDPROOF_ORDINAL_HPP_
#define ORDPROOF_ORDINAL_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordproof {

using BigInt = boost::multiprecision::cpp_int;

class OrdinalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Summand;

// Cantor normal form below epsilon_0. The empty list is zero.
struct Ordinal {
  std::vector<Summand> terms;

  Ordinal() = default;
  Ordinal(int n);  // NOLINT
  Ordinal(const BigInt& n);  // NOLINT

  static Ordinal omega();
  static Ordinal omega_pow(const Ordinal& e, const BigInt& coef = 1);

  bool is_zero() const { return terms.empty(); }
  bool is_finite() const;
  bool is_successor() const;
  bool is_limit() const;
  // Value when finite.
  BigInt nat() const;
  // Least exponent (the exponent of the last summand); zero for zero.
  Ordinal min_exponent() const;
  Ordinal leading_exponent() const;
  std::size_t depth() const;

  std::string str() const;
};

struct Summand {
  Ordinal exp;
  BigInt coef;
};

enum class Ordering { Less, Equal, Greater };

Ordering ord_cmp(const Ordinal& a, const Ordinal& b);
bool operator==(const Ordinal& a, const Ordinal& b);
std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

Ordinal ord_add(const Ordinal& a, const Ordinal& b);
Ordinal operator+(const Ordinal& a, const Ordinal& b);
Ordinal ord_mul_nat(const Ordinal& a, const BigInt& n);
Ordinal omega_exp(const Ordinal& a);

bool meshes(const Ordinal& a, const Ordinal& g);
Ordinal three_pow(const Ordinal& a);

Ordinal fund_one(const Ordinal& a, const BigInt& n);
Ordinal fund_iter(const Ordinal& a, const BigInt& n, const BigInt& x);

// Least x with fund_iter(a, n, x) == target.
std::optional<BigInt> steps_to(const Ordinal& a, const BigInt& n,
                               const Ordinal& target);
// Same by literal iteration; max_steps guards runaway paths.
std::optional<BigInt> steps_to_naive(const Ordinal& a, const BigInt& n,
                                     const Ordinal& target,
                                     std::uint64_t max_steps = 50000000);
// Whether the path from a at base n passes through target, decided
// structurally without walking the path.
bool reaches(const Ordinal& a, const BigInt& n, const Ordinal& target);
// Number of fund steps from a down to 0 at base n.
BigInt descent_length(const Ordinal& a, const BigInt& n);

BigInt num_bound(const Ordinal& a, const BigInt& n);

// omega_0 = 1, omega_{k+1} = omega^{omega_k}.
Ordinal omega_tower(unsigned k);

inline constexpr std::size_t kDefaultDepthCap = 64;

Ordinal parse_ordinal(const std::string& text,
                      std::size_t depth_cap = kDefaultDepthCap);

// Parses one summand (atom with optional "*n" factors) starting at pos and
// advances pos past it.
Ordinal parse_ordinal_product(const std::string& text, std::size_t& pos);

std::ostream& operator<<(std::ostream& os, const Ordinal& a);

}  // namespace ordproof

#endif  // ORDPROOF_ORDINAL_HPP_
