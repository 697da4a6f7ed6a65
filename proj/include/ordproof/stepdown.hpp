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

#ifndef ORDPROOF_STEPDOWN_HPP_
#define ORDPROOF_STEPDOWN_HPP_

#include <memory>
#include <optional>
#include <string>

#include "ordproof/ordinal.hpp"

namespace ordproof {

class StepDownError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SdNode;

// Immutable step-down certificate with cached type (bo, to, ba).
class StepDown {
 public:
  enum class Kind { Fund, Compose, Plus, OmegaLift };

  static StepDown Fund(const BigInt& m, const Ordinal& top);
  static StepDown Compose(const StepDown& lower, const StepDown& upper);
  static StepDown Plus(const Ordinal& shift, const StepDown& body);
  static StepDown OmegaLift(const StepDown& body);

  Kind kind() const;
  const Ordinal& bo() const;
  const Ordinal& to() const;
  const BigInt& ba() const;
  bool valid() const;
  // First failing node and clause; empty when valid.
  const std::string& diagnostic() const;

  const BigInt& fund_base() const;
  const Ordinal& fund_top() const;
  const Ordinal& shift() const;
  const StepDown& lower() const;
  const StepDown& upper() const;
  const StepDown& body() const;

  std::size_t size() const;
  std::string str() const;

  bool same(const StepDown& o) const { return node_ == o.node_; }

 private:
  explicit StepDown(std::shared_ptr<const SdNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const SdNode> node_;
};

struct SdReaders {
  Ordinal bo;
  Ordinal to;
  BigInt ba;
};

SdReaders sd_readers(const StepDown& s);
bool sd_validate(const StepDown& s, std::string* diagnostic = nullptr);

enum class SdCheck { Holds, Fails, Invalid, BaseTooSmall };
SdCheck sd_check_semantics(const StepDown& s, const BigInt& n);
const char* sd_check_name(SdCheck c);

enum class SdConst { Id, ToZero, ToOne, ToTwo };
StepDown sd_const(SdConst kind, const Ordinal& a);

enum class LiftBase { Three, Omega };
enum class LiftKind { Times2Plus1, Plus1, Plus2 };

struct LiftResult {
  StepDown arg;
  bool degenerate;  // preconditions failed and arg is id^0
};

LiftResult sd_lift_ex(LiftBase base, LiftKind kind, const StepDown& s,
                      const BigInt& k);
StepDown sd_lift(LiftBase base, LiftKind kind, const StepDown& s,
                 const BigInt& k);

StepDown sd_tower(unsigned n);

// Right-folded composition of a non-empty chain listed from the bottom.
StepDown sd_chain(const std::vector<StepDown>& bottom_up);

StepDown parse_stepdown(const std::string& text);

}  // namespace ordproof

#endif  // ORDPROOF_STEPDOWN_HPP_
