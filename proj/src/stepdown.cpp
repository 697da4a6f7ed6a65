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

#include "ordproof/stepdown.hpp"

#include <cctype>
#include <vector>

namespace ordproof {

struct SdNode {
  StepDown::Kind kind;
  BigInt m;
  Ordinal ord;  // top for Fund, shift for Plus
  std::optional<StepDown> a;  // lower / body
  std::optional<StepDown> b;  // upper
  Ordinal bo;
  Ordinal to;
  BigInt ba;
  std::size_t size = 1;
  std::string diag;
};

StepDown StepDown::Fund(const BigInt& m, const Ordinal& top) {
  auto n = std::make_shared<SdNode>();
  n->kind = Kind::Fund;
  n->m = m;
  n->ord = top;
  n->to = top;
  n->bo = fund_one(top, m);
  n->ba = m;
  return StepDown(n);
}

StepDown StepDown::Compose(const StepDown& lower, const StepDown& upper) {
  auto n = std::make_shared<SdNode>();
  n->kind = Kind::Compose;
  n->a = lower;
  n->b = upper;
  n->bo = lower.bo();
  n->to = upper.to();
  n->ba = std::max(lower.ba(), upper.ba());
  n->size = 1 + lower.size() + upper.size();
  if (!lower.valid()) {
    n->diag = lower.diagnostic();
  } else if (!upper.valid()) {
    n->diag = upper.diagnostic();
  } else if (!(lower.to() == upper.bo())) {
    n->diag = "compose: lower ends at " + lower.to().str() +
              " but upper starts at " + upper.bo().str();
  }
  return StepDown(n);
}

StepDown StepDown::Plus(const Ordinal& shift, const StepDown& body) {
  auto n = std::make_shared<SdNode>();
  n->kind = Kind::Plus;
  n->ord = shift;
  n->a = body;
  n->bo = shift + body.bo();
  n->to = shift + body.to();
  n->ba = body.ba();
  n->size = 1 + body.size();
  if (!body.valid()) {
    n->diag = body.diagnostic();
  } else if (!meshes(shift, body.to())) {
    n->diag = "plus: " + shift.str() + " does not mesh with " + body.to().str();
  }
  return StepDown(n);
}

StepDown StepDown::OmegaLift(const StepDown& body) {
  auto n = std::make_shared<SdNode>();
  n->kind = Kind::OmegaLift;
  n->a = body;
  n->bo = Ordinal::omega_pow(body.bo());
  n->to = Ordinal::omega_pow(body.to());
  n->ba = body.ba();
  n->size = 1 + body.size();
  n->diag = body.diagnostic();
  return StepDown(n);
}

StepDown::Kind StepDown::kind() const { return node_->kind; }
const Ordinal& StepDown::bo() const { return node_->bo; }
const Ordinal& StepDown::to() const { return node_->to; }
const BigInt& StepDown::ba() const { return node_->ba; }
bool StepDown::valid() const { return node_->diag.empty(); }
const std::string& StepDown::diagnostic() const { return node_->diag; }
const BigInt& StepDown::fund_base() const { return node_->m; }
const Ordinal& StepDown::fund_top() const { return node_->ord; }
const Ordinal& StepDown::shift() const { return node_->ord; }
const StepDown& StepDown::lower() const { return *node_->a; }
const StepDown& StepDown::upper() const { return *node_->b; }
const StepDown& StepDown::body() const { return *node_->a; }
std::size_t StepDown::size() const { return node_->size; }

namespace {

std::string ord_operand(const Ordinal& a) {
  std::string s = a.str();
  if (s.find_first_of(" *") == std::string::npos) return s;
  return "(" + s + ")";
}

}  // namespace

std::string StepDown::str() const {
  switch (kind()) {
    case Kind::Fund:
      return "fund(" + fund_base().str() + ")@" + ord_operand(fund_top());
    case Kind::Compose:
      return "(" + lower().str() + " * " + upper().str() + ")";
    case Kind::Plus:
      return "(" + shift().str() + " + " + body().str() + ")";
    default:
      return "w^" + body().str();
  }
}

SdReaders sd_readers(const StepDown& s) { return {s.bo(), s.to(), s.ba()}; }

bool sd_validate(const StepDown& s, std::string* diagnostic) {
  if (diagnostic) *diagnostic = s.diagnostic();
  return s.valid();
}

SdCheck sd_check_semantics(const StepDown& s, const BigInt& n) {
  if (!s.valid()) return SdCheck::Invalid;
  if (n < s.ba()) return SdCheck::BaseTooSmall;
  return reaches(s.to(), n, s.bo()) ? SdCheck::Holds : SdCheck::Fails;
}

const char* sd_check_name(SdCheck c) {
  switch (c) {
    case SdCheck::Holds:
      return "holds";
    case SdCheck::Fails:
      return "fails";
    case SdCheck::Invalid:
      return "invalid certificate";
    default:
      return "base below certificate base";
  }
}

StepDown sd_chain(const std::vector<StepDown>& bottom_up) {
  if (bottom_up.empty()) throw StepDownError("empty composition chain");
  StepDown acc = bottom_up.back();
  for (std::size_t i = bottom_up.size() - 1; i-- > 0;) {
    acc = StepDown::Compose(bottom_up[i], acc);
  }
  return acc;
}

namespace {

StepDown id_zero() { return StepDown::Fund(0, Ordinal()); }

StepDown id_of(const Ordinal& a) {
  if (a.is_zero()) return id_zero();
  return StepDown::Plus(a, id_zero());
}

// Drops one copy of the last summand: a = prefix + w^last.
Ordinal drop_last_copy(const Ordinal& a, Ordinal* last) {
  Ordinal r = a;
  *last = r.terms.back().exp;
  if (--r.terms.back().coef == 0) r.terms.pop_back();
  return r;
}

StepDown to_one(const Ordinal& a);

// Steps down from a = prefix + w^e to prefix.
StepDown drop_summand(const Ordinal& a, const Ordinal& prefix, const Ordinal& e) {
  if (e.is_zero()) return StepDown::Fund(0, a);
  StepDown inner = sd_chain({StepDown::Fund(0, Ordinal(1)),
                             StepDown::Fund(0, Ordinal::omega()),
                             StepDown::OmegaLift(to_one(e))});
  return StepDown::Plus(prefix, inner);
}

StepDown to_one(const Ordinal& a) {
  if (a.is_zero()) throw StepDownError("to_one requires a positive ordinal");
  if (a == Ordinal(1)) return id_of(a);
  Ordinal e;
  Ordinal prefix = drop_last_copy(a, &e);
  if (prefix.is_zero()) {
    return StepDown::Compose(StepDown::Fund(0, Ordinal::omega()),
                             StepDown::OmegaLift(to_one(e)));
  }
  // Peel the finite tail and repeated copies iteratively.
  std::vector<StepDown> top_down;
  Ordinal cur = a;
  for (;;) {
    Ordinal last;
    Ordinal pre = drop_last_copy(cur, &last);
    if (pre.is_zero()) {
      top_down.push_back(to_one(cur));
      break;
    }
    top_down.push_back(drop_summand(cur, pre, last));
    cur = pre;
  }
  std::vector<StepDown> bottom_up(top_down.rbegin(), top_down.rend());
  return sd_chain(bottom_up);
}

StepDown to_zero(const Ordinal& a) {
  if (a.is_zero()) return id_zero();
  return StepDown::Compose(StepDown::Fund(0, Ordinal(1)), to_one(a));
}

StepDown to_two(const Ordinal& a) {
  if (a < Ordinal(2)) throw StepDownError("to_two requires an ordinal >= 2");
  if (a.is_finite()) {
    BigInt v = a.nat();
    if (v == 2) return id_of(a);
    std::vector<StepDown> bottom_up;
    for (BigInt j = 3; j <= v; ++j) bottom_up.push_back(StepDown::Fund(0, j));
    return sd_chain(bottom_up);
  }
  Ordinal a0 = a.leading_exponent();
  Ordinal lead = Ordinal::omega_pow(a0);
  Ordinal rest = a;
  if (--rest.terms.front().coef == 0) rest.terms.erase(rest.terms.begin());
  return sd_chain({StepDown::Fund(1, Ordinal::omega()),
                   StepDown::OmegaLift(to_one(a0)),
                   StepDown::Plus(lead, to_zero(rest))});
}

struct Dec {
  BigInt p;
  BigInt q;
};

std::optional<Dec> below_omega_sq(const Ordinal& a) {
  if (!(a < Ordinal::omega_pow(Ordinal(2)))) return std::nullopt;
  Dec d{0, 0};
  for (const Summand& t : a.terms) (t.exp.is_zero() ? d.q : d.p) = t.coef;
  return d;
}

BigInt pow3(const BigInt& e) {
  if (e > 4096) throw StepDownError("three-lift exponent too large");
  return boost::multiprecision::pow(BigInt(3), e.convert_to<unsigned>());
}

Ordinal wp(const BigInt& p, const BigInt& c) {
  return Ordinal::omega_pow(Ordinal(p), c);
}

// Descends from w^p * hi to w^p * lo by repeated shifted to_zero arguments.
void descend_coefficient(const BigInt& p, const BigInt& hi, const BigInt& lo,
                         std::vector<StepDown>* top_down) {
  StepDown unit = to_zero(wp(p, 1));
  for (BigInt j = hi - 1; j >= lo; --j) {
    top_down->push_back(StepDown::Plus(wp(p, j), unit));
  }
}

std::optional<StepDown> three_lift(LiftKind kind, const StepDown& s,
                                   const BigInt& k) {
  BigInt delta = kind == LiftKind::Plus2 ? 2 : 1;
  if (!s.valid() || s.ba() > k) return std::nullopt;
  auto top = below_omega_sq(s.to());
  auto bot = below_omega_sq(s.bo());
  if (!top || !bot || bot->q < delta) return std::nullopt;
  BigInt p = top->p, q = top->q;
  BigInt pp = bot->p, qq = bot->q - delta;
  BigInt c = kind == LiftKind::Times2Plus1 ? pow3(qq) * 2 : pow3(qq);
  // Stop coefficient on the w^pp level before the finishing argument.
  bool finite_plus2 = kind == LiftKind::Plus2 && pp == 0;
  BigInt stop = finite_plus2 ? c + 2 : c + 1;
  std::vector<StepDown> top_down;
  BigInt hi = pow3(q);
  if (pp == p) {
    if (stop > hi) return std::nullopt;
    descend_coefficient(p, hi, stop, &top_down);
  } else if (pp < p) {
    if (qq + delta > k + 1) return std::nullopt;
    descend_coefficient(p, hi, 1, &top_down);
    for (BigInt j = p; j > pp + 1; --j) {
      top_down.push_back(StepDown::Fund(0, wp(j, 1)));
    }
    top_down.push_back(StepDown::Fund(stop - 1, wp(pp + 1, 1)));
  } else {
    return std::nullopt;
  }
  if (!finite_plus2) {
    Ordinal unit = wp(pp, 1);
    StepDown fin = kind == LiftKind::Plus2 ? to_two(unit) : to_one(unit);
    top_down.push_back(StepDown::Plus(wp(pp, c), fin));
  }
  if (top_down.empty()) return id_of(wp(p, hi));
  std::vector<StepDown> bottom_up(top_down.rbegin(), top_down.rend());
  return sd_chain(bottom_up);
}

std::optional<StepDown> omega_lift(LiftKind kind, const StepDown& s,
                                   const BigInt& k) {
  BigInt delta = kind == LiftKind::Plus2 ? 2 : 1;
  if (!s.valid() || k < 2 || s.ba() > k) return std::nullopt;
  const Ordinal& b = s.bo();
  Ordinal alpha = b;
  for (BigInt i = 0; i < delta; ++i) {
    if (!alpha.is_successor()) return std::nullopt;
    alpha = fund_one(alpha, 0);
  }
  Ordinal wa = Ordinal::omega_pow(alpha);
  Ordinal a1 = alpha + Ordinal(1);
  std::vector<StepDown> top_down{StepDown::OmegaLift(s)};
  switch (kind) {
    case LiftKind::Times2Plus1:
      top_down.push_back(StepDown::Fund(2, Ordinal::omega_pow(a1)));
      top_down.push_back(
          StepDown::Plus(Ordinal::omega_pow(alpha, 2), to_one(wa)));
      break;
    case LiftKind::Plus1:
      top_down.push_back(StepDown::Fund(1, Ordinal::omega_pow(a1)));
      top_down.push_back(StepDown::Plus(wa, to_one(wa)));
      break;
    case LiftKind::Plus2:
      top_down.push_back(StepDown::Fund(0, Ordinal::omega_pow(a1 + Ordinal(1))));
      if (alpha.is_zero()) {
        top_down.push_back(StepDown::Fund(2, Ordinal::omega()));
      } else {
        top_down.push_back(StepDown::Fund(1, Ordinal::omega_pow(a1)));
        top_down.push_back(StepDown::Plus(wa, to_two(wa)));
      }
      break;
  }
  std::vector<StepDown> bottom_up(top_down.rbegin(), top_down.rend());
  return sd_chain(bottom_up);
}

}  // namespace

StepDown sd_const(SdConst kind, const Ordinal& a) {
  switch (kind) {
    case SdConst::Id:
      return id_of(a);
    case SdConst::ToZero:
      return to_zero(a);
    case SdConst::ToOne:
      return to_one(a);
    default:
      return to_two(a);
  }
}

LiftResult sd_lift_ex(LiftBase base, LiftKind kind, const StepDown& s,
                      const BigInt& k) {
  std::optional<StepDown> r = base == LiftBase::Three ? three_lift(kind, s, k)
                                                      : omega_lift(kind, s, k);
  if (r) return {*r, false};
  return {id_zero(), true};
}

StepDown sd_lift(LiftBase base, LiftKind kind, const StepDown& s,
                 const BigInt& k) {
  return sd_lift_ex(base, kind, s, k).arg;
}

StepDown sd_tower(unsigned n) {
  StepDown s = StepDown::Fund(1, Ordinal::omega());
  for (unsigned i = 0; i < n; ++i) {
    Ordinal wi = omega_tower(i);
    Ordinal wi1 = omega_tower(i + 1);
    s = sd_chain({StepDown::Plus(wi1, to_one(wi1)),
                  StepDown::Fund(1, Ordinal::omega_pow(wi + Ordinal(1))),
                  StepDown::OmegaLift(s)});
  }
  return s;
}

namespace {

class SdParser {
 public:
  explicit SdParser(const std::string& s) : s_(s) {}

  StepDown parse() {
    StepDown r = sd();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw StepDownError("step-down parse error at column " + std::to_string(pos_ + 1) +
                        ": " + why + " in '" + s_ + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool peek(const std::string& tok) {
    skip();
    return s_.compare(pos_, tok.size(), tok) == 0;
  }

  bool eat(const std::string& tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  StepDown sd() {
    std::vector<StepDown> parts{prim()};
    while (eat("*")) parts.push_back(prim());
    return sd_chain(parts);
  }

  std::optional<StepDown> try_prim() {
    std::size_t save = pos_;
    try {
      return prim();
    } catch (const std::exception&) {
      pos_ = save;
      return std::nullopt;
    }
  }

  // Exponent of a lift: a certificate that cannot be read as an ordinal.
  StepDown lift_body() {
    if (peek("fund(")) return prim();
    if (eat("(")) {
      StepDown r = sd();
      if (!eat(")")) fail("expected ')'");
      return r;
    }
    if (eat("w^")) return StepDown::OmegaLift(lift_body());
    fail("expected a lift exponent");
  }

  StepDown prim() {
    if (eat("fund(")) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      if (start == pos_) fail("expected a base");
      BigInt m(s_.substr(start, pos_ - start));
      if (!eat(")") || !eat("@")) fail("expected ')@'");
      skip();
      return StepDown::Fund(m, parse_ordinal_product(s_, pos_));
    }
    std::size_t save = pos_;
    if (eat("(")) {
      try {
        StepDown r = sd();
        if (eat(")")) return r;
      } catch (const StepDownError&) {
      }
      pos_ = save;
    }
    if (eat("w^")) {
      try {
        return StepDown::OmegaLift(lift_body());
      } catch (const std::exception&) {
        pos_ = save;
      }
    }
    Ordinal shift;
    for (;;) {
      skip();
      try {
        shift = shift + parse_ordinal_product(s_, pos_);
      } catch (const OrdinalError& e) {
        fail(e.what());
      }
      if (!eat("+")) fail("expected '+' after a shift ordinal");
      if (auto body = try_prim()) return StepDown::Plus(shift, *body);
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

StepDown parse_stepdown(const std::string& text) { return SdParser(text).parse(); }

}  // namespace ordproof
