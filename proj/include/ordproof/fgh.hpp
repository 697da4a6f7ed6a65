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

#ifndef ORDPROOF_FGH_HPP_
#define ORDPROOF_FGH_HPP_

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ordproof/ordinal.hpp"

namespace ordproof {

struct FghBudget {
  std::uint64_t steps = 1000000;
  BigInt value_cap = BigInt(1) << 64;
};

enum class BudgetKind { Steps, ValueCap };

struct FghOutcome {
  bool defined = false;
  BigInt value;
  BudgetKind exceeded = BudgetKind::Steps;

  static FghOutcome Defined(BigInt v) { return {true, std::move(v), {}}; }
  static FghOutcome Exceeded(BudgetKind k) { return {false, 0, k}; }
};

// Raised when a comparison cannot be decided within the step budget.
class FghBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CmpResult {
  bool below = false;  // ValueIs(value) when true, AtLeastC otherwise
  BigInt value;

  static CmpResult ValueIs(BigInt v) { return {true, std::move(v)}; }
  static CmpResult AtLeastC() { return {false, 0}; }
};

FghOutcome fgh_eval(const Ordinal& a, const BigInt& n,
                    const FghBudget& budget = {});
FghOutcome fgh_iter(const Ordinal& a, const BigInt& i, const BigInt& n,
                    const FghBudget& budget = {});
FghOutcome fgh_eps(const BigInt& n, const FghBudget& budget = {});

CmpResult fgh_cmp_const(const Ordinal& a, const BigInt& n, const BigInt& c,
                        std::uint64_t max_steps = 10000000);

// min over the chain of F_alpha(arg).
struct SymBound {
  std::vector<std::pair<Ordinal, BigInt>> chain;
};

CmpResult symbound_cmp(const SymBound& k, const BigInt& c,
                       std::uint64_t max_steps = 10000000);

}  // namespace ordproof

#endif  // ORDPROOF_FGH_HPP_
