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

#include "ordproof/fgh.hpp"

#include <memory>
#include <optional>

namespace ordproof {

namespace {

// An ordinal as a list of summands, last summand first. Fundamental
// sequences only rewrite the last summand, so frames share their prefixes.
struct Cell {
  Summand term;
  std::shared_ptr<Cell> prev;

  ~Cell() {
    std::shared_ptr<Cell> p = std::move(prev);
    while (p && p.use_count() == 1) p = std::move(p->prev);
  }
};
using Chain = std::shared_ptr<Cell>;

Chain to_chain(const Ordinal& a) {
  Chain c;
  for (const Summand& t : a.terms) c = std::make_shared<Cell>(Cell{t, std::move(c)});
  return c;
}

Chain push_cell(Chain c, Summand t) {
  return std::make_shared<Cell>(Cell{std::move(t), std::move(c)});
}

// {b + w^e*c}(n) is b + w^e*(c-1) followed by w^{e-1}*(n+1) when e is a
// successor, or by w^{e}(n) when e is a limit.
Chain chain_fund(const Chain& c, const BigInt& n) {
  const Summand& t = c->term;
  Chain out = c->prev;
  if (t.coef > 1) out = push_cell(std::move(out), Summand{t.exp, t.coef - 1});
  if (t.exp.is_zero()) return out;
  if (t.exp.is_successor()) return push_cell(std::move(out), Summand{fund_one(t.exp, 0), n + 1});
  return push_cell(std::move(out), Summand{fund_one(t.exp, n), 1});
}

bool chain_is_one(const Chain& c) {
  return c && !c->prev && c->term.exp.is_zero() && c->term.coef == 1;
}

struct Frame {
  Chain alpha;
  BigInt remaining;
};

// F_2(x) = 2^(x+1)(x+1) - 1, or c when that is at least c.
BigInt f2_capped(const BigInt& x, const BigInt& c) {
  if (x + 1 > msb(c) + 1) return c;
  BigInt v = (BigInt(1) << (x + 1).convert_to<unsigned>()) * (x + 1) - 1;
  return v < c ? v : c;
}

// A lower bound for F_k(n), capped at c.
BigInt rank_bound(const BigInt& rank, const BigInt& n, const BigInt& c) {
  if (rank < 2) return 0;
  if (rank == 2) return f2_capped(n, c);
  BigInt v = n;
  for (BigInt i = 0; i <= n && v < c; ++i) v = f2_capped(v, c);
  return v;
}

// A lower bound for F_a(n), capped at c. Every a >= w steps down at base n
// to each k <= n+1, and F is monotone along step-downs.
BigInt lower_bound(const Ordinal& a, const BigInt& n, const BigInt& c) {
  return rank_bound(a.is_finite() ? a.nat() : n + 1, n, c);
}

enum class Halt { Done, Steps, Limit };

// Runs pending iterations until the stack empties, the step budget runs out,
// or the register passes limit (strictly greater, or >= when inclusive).
class Machine {
 public:
  Machine(BigInt start, std::uint64_t steps, std::optional<BigInt> limit,
          bool inclusive)
      : v_(std::move(start)), steps_(steps), limit_(std::move(limit)),
        inclusive_(inclusive) {
    if (limit_) {
      BigInt c = inclusive_ ? *limit_ : *limit_ + 1;
      t2_ = least_arg(2, c, msb(c) + 1);
      t3_ = least_arg(3, c, t2_);
    }
  }

  void push(const Ordinal& a, BigInt r) { stack_.push_back({to_chain(a), std::move(r)}); }

  Halt run() {
    if (over()) return Halt::Limit;
    while (!stack_.empty()) {
      if (steps_ == 0) return Halt::Steps;
      --steps_;
      Frame& top = stack_.back();
      if (top.remaining == 0) {
        stack_.pop_back();
        continue;
      }
      if (!top.alpha) {
        v_ += top.remaining;
        stack_.pop_back();
      } else if (chain_is_one(top.alpha)) {
        while (top.remaining > 0 && !over()) {
          v_ = 2 * v_ + 1;
          --top.remaining;
        }
        if (top.remaining == 0) stack_.pop_back();
      } else {
        --top.remaining;
        Frame next = top.alpha->term.exp.is_zero() ? Frame{chain_fund(top.alpha, 0), v_ + 1}
                                                   : Frame{chain_fund(top.alpha, v_), 1};
        if (hopeless(next)) return Halt::Limit;
        if (top.remaining == 0) {
          top = std::move(next);
        } else {
          stack_.push_back(std::move(next));
        }
      }
      if (over()) return Halt::Limit;
    }
    return Halt::Done;
  }

  const BigInt& value() const { return v_; }

 private:
  // The register never decreases, so a frame whose value is already known to
  // pass the limit decides the run.
  bool hopeless(const Frame& f) const {
    if (!limit_ || !f.alpha) return false;
    const Summand& t = f.alpha->term;
    const BigInt& rank = !f.alpha->prev && t.exp.is_zero() ? t.coef : v_ + 1;
    if (rank < 2) return false;
    return v_ >= (rank == 2 ? t2_ : t3_);
  }

  // The least x <= hi with rank_bound(rank, x, c) >= c.
  static BigInt least_arg(int rank, const BigInt& c, BigInt hi) {
    BigInt lo = 0;
    while (lo < hi) {
      BigInt mid = (lo + hi) / 2;
      if (rank_bound(rank, mid, c) >= c) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return lo;
  }

  bool over() const {
    if (!limit_) return false;
    return inclusive_ ? v_ >= *limit_ : v_ > *limit_;
  }

  BigInt v_;
  std::uint64_t steps_;
  std::optional<BigInt> limit_;
  bool inclusive_;
  BigInt t2_, t3_;
  std::vector<Frame> stack_;
};

}  // namespace

FghOutcome fgh_iter(const Ordinal& a, const BigInt& i, const BigInt& n,
                    const FghBudget& budget) {
  Machine m(n, budget.steps, budget.value_cap, false);
  m.push(a, i);
  switch (m.run()) {
    case Halt::Done:
      return FghOutcome::Defined(m.value());
    case Halt::Steps:
      return FghOutcome::Exceeded(BudgetKind::Steps);
    default:
      return FghOutcome::Exceeded(BudgetKind::ValueCap);
  }
}

FghOutcome fgh_eval(const Ordinal& a, const BigInt& n, const FghBudget& budget) {
  return fgh_iter(a, 1, n, budget);
}

FghOutcome fgh_eps(const BigInt& n, const FghBudget& budget) {
  if (n > 1000) return FghOutcome::Exceeded(BudgetKind::ValueCap);
  return fgh_eval(omega_tower(n.convert_to<unsigned>() + 1), n, budget);
}

CmpResult fgh_cmp_const(const Ordinal& a, const BigInt& n, const BigInt& c,
                        std::uint64_t max_steps) {
  if (c <= n + 1) return CmpResult::AtLeastC();
  if (lower_bound(a, n, c) >= c) return CmpResult::AtLeastC();
  Machine m(n, max_steps, c, true);
  m.push(a, 1);
  switch (m.run()) {
    case Halt::Done:
      return CmpResult::ValueIs(m.value());
    case Halt::Limit:
      return CmpResult::AtLeastC();
    default:
      throw FghBudgetError("comparison F_" + a.str() + "(" + n.str() +
                           ") against " + c.str() + " exceeded the step budget");
  }
}

CmpResult symbound_cmp(const SymBound& k, const BigInt& c,
                       std::uint64_t max_steps) {
  std::optional<BigInt> least;
  for (const auto& [alpha, arg] : k.chain) {
    CmpResult r = fgh_cmp_const(alpha, arg, c, max_steps);
    if (r.below && (!least || r.value < *least)) least = r.value;
  }
  return least ? CmpResult::ValueIs(*least) : CmpResult::AtLeastC();
}

}  // namespace ordproof
