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

#include "ordproof/infinite_proof.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <unordered_map>

#include "ordproof/sexp.hpp"

namespace ordproof {

struct IpNode {
  IpKind kind;
  std::optional<FiniteProof> d;
  std::uint64_t m = 0;
  int level = 0;
  Sequent g;
  Ordinal alpha;
  std::optional<StepDown> s;
  std::optional<Formula> a;
  std::vector<InfProof> kids;

  Sequent pend;
  std::optional<Ordinal> pord;
  std::string pord_error;
  int dcut = 0;
  int dacc = 0;

  std::mutex mu;
  std::optional<InfRule> rule;
  std::optional<StepDown> step;
  std::map<std::uint64_t, InfProof> pred;
};

struct IpAccess {
  static InfProof make(std::shared_ptr<IpNode> n) { return InfProof(std::move(n)); }
  static IpNode& node(const InfProof& p) { return *p.node_; }
};

namespace {

using K = Formula::Kind;

Ordinal omega_sq() { return Ordinal::omega_pow(Ordinal(2)); }

// w*(2h+c)
Ordinal embed_ord(std::size_t h, std::uint64_t c) {
  return ord_mul_nat(Ordinal::omega(), BigInt(2 * h + c));
}

bool is_universal(const Formula& b) { return b.kind() == K::All || b.kind() == K::BAll; }
bool is_existential(const Formula& b) { return b.kind() == K::Ex || b.kind() == K::BEx; }

Sequent not_in_n_upto(std::uint64_t m) {
  Sequent r;
  for (std::uint64_t i = 0; i <= m; ++i) r.insert(Formula::not_in_n(Term::num(i)));
  return r;
}

bool is_n_axiom(const Sequent& g) {
  for (const Formula& f : g.items()) {
    if (!f.is_not_in_n() || !f.args()[0].closed()) continue;
    const Term& t = f.args()[0];
    if (g.contains(Formula::in_n(t)) || g.contains(Formula::in_n(t.S()))) return true;
  }
  return false;
}

int least_level(const FiniteProof& d) {
  int n = 1;
  std::function<void(const FiniteProof&)> go = [&](const FiniteProof& x) {
    if (x.kind() == FpKind::Cut || x.kind() == FpKind::Ind) {
      Class c = classify(x.formula());
      if (c.kind == Class::Sigma) n = std::max(n, c.level);
    }
    for (const FiniteProof& k : x.children()) go(k);
  };
  go(d);
  return n;
}

std::shared_ptr<IpNode> node(IpKind k) {
  auto n = std::make_shared<IpNode>();
  n->kind = k;
  return n;
}

const IpNode& N(const InfProof& p) { return IpAccess::node(p); }

bool pord_ok(const InfProof& p) { return N(p).pord.has_value(); }

void inherit_pord_error(IpNode& n, const InfProof& p) {
  n.pord_error = N(p).pord_error;
}

std::uint64_t closed_value(const Term& t) {
  if (!t.closed()) throw IpError("term is not closed: " + t.str());
  return t.succ;
}

}  // namespace

const char* ip_kind_name(IpKind k) {
  switch (k) {
    case IpKind::Embed:
      return "embed";
    case IpKind::AxN:
      return "axN";
    case IpKind::Acc:
      return "acc";
    case IpKind::CutI:
      return "cut";
    case IpKind::Inv:
      return "inv";
    case IpKind::Red:
      return "red";
    case IpKind::E0:
      return "E0";
    default:
      return "E";
  }
}

std::optional<int> sigma_rank(const Formula& a) {
  Class c = classify(a);
  if (c.kind == Class::Delta0Proper || c.kind == Class::SpecialInN) return 0;
  if (c.kind == Class::Sigma) return c.level;
  return std::nullopt;
}

InfProof InfProof::embed(const FiniteProof& d, std::uint64_t m, int n) {
  if (!free_vars(d.end()).empty()) {
    throw IpError("embedded proof has an open end-sequent: " + d.end().str());
  }
  auto x = node(IpKind::Embed);
  x->d = d;
  x->m = m;
  x->level = n > 0 ? n : least_level(d);
  x->pend = d.end().unite(not_in_n_upto(m));
  x->pord = embed_ord(d.height(), 1);
  x->dcut = fp_metrics(d, x->level).dcut;
  x->dacc = 0;
  return InfProof(x);
}

InfProof InfProof::axn(const Sequent& g, const Ordinal& alpha) {
  if (!is_n_axiom(g)) throw IpError("not an N-axiom: " + g.str());
  if (alpha < Ordinal(2)) throw IpError("axiom ordinal must be at least 2");
  auto x = node(IpKind::AxN);
  x->g = g;
  x->alpha = alpha;
  x->pend = g;
  x->pord = alpha;
  return InfProof(x);
}

InfProof InfProof::acc(std::uint64_t m, const StepDown& s, const InfProof& p) {
  auto x = node(IpKind::Acc);
  x->m = m;
  x->s = s;
  x->kids = {p};
  x->pend = m > 0 ? N(p).pend.with(Formula::not_in_n(Term::num(m - 1))) : N(p).pend;
  x->pord = s.to();
  x->dcut = N(p).dcut;
  x->dacc = N(p).dacc;
  return InfProof(x);
}

InfProof InfProof::cut(const Formula& a, const InfProof& p0, const InfProof& p1) {
  auto k = sigma_rank(a);
  if (!k) throw IpError("cut formula outside every Sigma_k: " + a.str());
  auto x = node(IpKind::CutI);
  x->a = a;
  x->kids = {p0, p1};
  x->pend = N(p0).pend.without(negate(a)).unite(N(p1).pend.without(a));
  if (pord_ok(p0)) {
    x->pord = *N(p0).pord + Ordinal(1);
  } else {
    inherit_pord_error(*x, p0);
  }
  x->dcut = std::max({*k, N(p0).dcut, N(p1).dcut});
  x->dacc = std::max(N(p0).dacc, N(p1).dacc);
  return InfProof(x);
}

InfProof InfProof::inv(std::uint64_t n, const Formula& b, const InfProof& p) {
  if (!is_universal(b)) throw IpError("inversion needs a universal formula: " + b.str());
  auto x = node(IpKind::Inv);
  x->m = n;
  x->a = b;
  x->kids = {p};
  Term t = Term::num(n);
  x->pend = N(p).pend.without(b).with(Formula::not_in_n(t)).with(fp_instance(b, t));
  x->pord = N(p).pord;
  inherit_pord_error(*x, p);
  x->dcut = N(p).dcut;
  x->dacc = 1;
  return InfProof(x);
}

InfProof InfProof::red(const Formula& c, const InfProof& p0, const InfProof& p1) {
  auto k = sigma_rank(c);
  if (!k || *k < 1) throw IpError("reduction formula must be in some Sigma_k, k >= 1: " + c.str());
  auto x = node(IpKind::Red);
  x->a = c;
  x->kids = {p0, p1};
  x->pend = N(p0).pend.without(negate(c)).unite(N(p1).pend.without(c));
  if (pord_ok(p0) && pord_ok(p1)) {
    x->pord = *N(p0).pord + *N(p1).pord;
  } else {
    inherit_pord_error(*x, pord_ok(p0) ? p1 : p0);
  }
  x->dcut = std::max({*k - 1, N(p0).dcut, N(p1).dcut});
  x->dacc = 1;
  return InfProof(x);
}

InfProof InfProof::e0(const InfProof& p) {
  auto x = node(IpKind::E0);
  x->kids = {p};
  x->pend = N(p).pend;
  if (!pord_ok(p)) {
    inherit_pord_error(*x, p);
  } else if (!(*N(p).pord < omega_sq())) {
    x->pord_error = "E0 applied to ordinal " + N(p).pord->str() + " >= w^2";
  } else {
    x->pord = three_pow(*N(p).pord);
  }
  x->dcut = std::max(0, N(p).dcut - 1);
  x->dacc = 1;
  return InfProof(x);
}

InfProof InfProof::e(const InfProof& p) {
  auto x = node(IpKind::E);
  x->kids = {p};
  x->pend = N(p).pend;
  if (pord_ok(p)) {
    x->pord = Ordinal::omega_pow(*N(p).pord);
  } else {
    inherit_pord_error(*x, p);
  }
  x->dcut = std::max(0, N(p).dcut - 1);
  x->dacc = 1;
  return InfProof(x);
}

IpKind InfProof::kind() const { return node_->kind; }
const FiniteProof& InfProof::proof() const {
  if (!node_->d) throw IpError("not an embedded proof");
  return *node_->d;
}
std::uint64_t InfProof::bound() const { return node_->m; }
int InfProof::level() const { return node_->level; }
const Sequent& InfProof::axiom() const { return node_->g; }
const Ordinal& InfProof::alpha() const { return node_->alpha; }
std::uint64_t InfProof::index() const { return node_->m; }
const StepDown& InfProof::arg() const {
  if (!node_->s) throw IpError("term has no step-down argument");
  return *node_->s;
}
const Formula& InfProof::formula() const {
  if (!node_->a) throw IpError("term has no formula");
  return *node_->a;
}
const std::vector<InfProof>& InfProof::children() const { return node_->kids; }
const InfProof& InfProof::child(std::size_t i) const { return node_->kids.at(i); }

const Sequent& ip_pend(const InfProof& p) { return N(p).pend; }

const Ordinal& ip_pord(const InfProof& p) {
  if (!N(p).pord) throw IpError(N(p).pord_error);
  return *N(p).pord;
}

int ip_dcut(const InfProof& p) { return N(p).dcut; }
int ip_dacc(const InfProof& p) { return N(p).dacc; }

IpMetrics ip_metrics(const InfProof& p) {
  return {ip_pend(p), ip_pord(p), ip_dcut(p), ip_dacc(p)};
}

int InfRule::dcut() const {
  if (kind != Cut) return 0;
  return sigma_rank(*a).value_or(0);
}

std::string InfRule::str() const {
  switch (kind) {
    case Ax:
      return "ax";
    case Acc:
      return "acc^" + std::to_string(n);
    case Or:
      return "or_" + std::to_string(n) + " " + a->str();
    case And:
      return "and " + a->str();
    case Cut:
      return "cut " + a->str();
    case Ex:
      return "ex_" + std::to_string(n) + " " + a->str();
    default:
      return "omega " + a->str();
  }
}

bool InfRule::operator==(const InfRule& o) const {
  return kind == o.kind && n == o.n && a.has_value() == o.a.has_value() &&
         (!a || *a == *o.a);
}

namespace {

InfRule rule_of(InfRule::Kind k, std::uint64_t n = 0,
                std::optional<Formula> a = std::nullopt) {
  InfRule r;
  r.kind = k;
  r.n = n;
  r.a = std::move(a);
  return r;
}

// fund(m_last) * ... * fund(m_first) starting at top.
StepDown fund_path(const Ordinal& top, const std::vector<BigInt>& from_top) {
  StepDown s = StepDown::Fund(from_top[0], top);
  for (std::size_t i = 1; i < from_top.size(); ++i) {
    s = StepDown::Compose(StepDown::Fund(from_top[i], s.bo()), s);
  }
  return s;
}

StepDown id_of(const Ordinal& a) { return sd_const(SdConst::Id, a); }

bool cut_above_zero(const InfRule& r) {
  return r.kind == InfRule::Cut && sigma_rank(*r.a).value_or(0) >= 1;
}

StepDown embed_step(const InfProof& p) {
  const FiniteProof& d = p.proof();
  if (d.kind() == FpKind::Ax) return id_of(Ordinal(0));
  Ordinal top = embed_ord(d.child(0).height(), 3);
  switch (d.kind()) {
    case FpKind::Ex:
      return fund_path(top, {0, 0, 1});
    case FpKind::All:
      return fund_path(top, {0});
    case FpKind::Ind:
      return fund_path(top, {0, 0, BigInt(closed_value(d.term()))});
    default:
      return fund_path(top, {0, 0, 0});
  }
}

InfRule embed_rule(const InfProof& p) {
  const FiniteProof& d = p.proof();
  switch (d.kind()) {
    case FpKind::Ax:
      return rule_of(InfRule::Ax);
    case FpKind::Rep:
    case FpKind::Ind:
      return rule_of(InfRule::Acc, 0);
    case FpKind::And:
      return rule_of(InfRule::And, 0, d.formula());
    case FpKind::Or:
      return rule_of(InfRule::Or, d.index(), d.formula());
    case FpKind::Cut:
      return rule_of(InfRule::Cut, 0, d.formula());
    case FpKind::Ex:
      return rule_of(InfRule::Ex, closed_value(d.term()), d.formula());
    default:
      return rule_of(InfRule::Omega, 0, d.formula());
  }
}

InfProof embed_pred(const InfProof& p, std::uint64_t n) {
  const FiniteProof& d = p.proof();
  std::uint64_t m = p.bound();
  int lv = p.level();
  switch (d.kind()) {
    case FpKind::Ax:
      return p;
    case FpKind::Rep:
    case FpKind::Or:
      return InfProof::embed(d.child(0), m, lv);
    case FpKind::And:
    case FpKind::Cut:
      return InfProof::embed(d.child(n == 1 ? 1 : 0), m, lv);
    case FpKind::Ex: {
      if (n == 1) return InfProof::embed(d.child(0), m, lv);
      Term t = Term::num(closed_value(d.term()));
      return InfProof::axn(Sequent{Formula::in_n(t), Formula::not_in_n(t)},
                           embed_ord(d.child(0).height(), 1));
    }
    case FpKind::All:
      return ip_univ(d.var(), d.child(0), m, n, lv);
    default:
      return ip_ind(d.var(), d.formula(), d.child(0), d.child(1), m,
                    closed_value(d.term()), lv);
  }
}

InfRule compute_rule(const InfProof& p) {
  switch (p.kind()) {
    case IpKind::Embed:
      return embed_rule(p);
    case IpKind::AxN:
      return rule_of(InfRule::Ax);
    case IpKind::Acc:
      return rule_of(InfRule::Acc, 0);
    case IpKind::CutI:
      return rule_of(InfRule::Cut, 0, p.formula());
    case IpKind::Inv: {
      InfRule r = ip_rule(p.child(0));
      if (r.kind == InfRule::Omega && *r.a == p.formula()) return rule_of(InfRule::Acc, p.index());
      return r;
    }
    case IpKind::Red: {
      InfRule r = ip_rule(p.child(1));
      if (r.kind == InfRule::Ex && *r.a == p.formula()) {
        return rule_of(InfRule::Cut, 0, negate(fp_instance(p.formula(), Term::num(r.n))));
      }
      return r;
    }
    default: {
      InfRule r = ip_rule(p.child(0));
      if (cut_above_zero(r)) return rule_of(InfRule::Acc, 0);
      return r;
    }
  }
}

StepDown compute_step(const InfProof& p) {
  switch (p.kind()) {
    case IpKind::Embed:
      return embed_step(p);
    case IpKind::AxN:
      return id_of(Ordinal(0));
    case IpKind::Acc:
      return p.arg();
    case IpKind::CutI:
      return id_of(ip_pord(p.child(0)) + Ordinal(1));
    case IpKind::Inv:
      return ip_step(p.child(0));
    case IpKind::Red: {
      StepDown s = StepDown::Plus(ip_pord(p.child(0)), ip_step(p.child(1)));
      return s.valid() ? s : id_of(Ordinal(0));
    }
    default: {
      const InfProof& q = p.child(0);
      InfRule r = ip_rule(q);
      LiftKind lk = cut_above_zero(r) ? LiftKind::Times2Plus1
                    : r.kind == InfRule::Ex ? LiftKind::Plus2
                                            : LiftKind::Plus1;
      StepDown s = ip_step(q);
      if (p.kind() == IpKind::E0) return sd_lift(LiftBase::Three, lk, s, s.ba());
      return sd_lift(LiftBase::Omega, lk, s, std::max(s.ba(), BigInt(2)));
    }
  }
}

InfProof compute_pred(const InfProof& p, std::uint64_t n) {
  switch (p.kind()) {
    case IpKind::Embed:
      return embed_pred(p, n);
    case IpKind::AxN:
      return p;
    case IpKind::Acc:
      return p.child(0);
    case IpKind::CutI:
      return p.child(n == 1 ? 1 : 0);
    case IpKind::Inv: {
      InfProof q = ip_pred(p.child(0), n);
      if (q.id() == p.child(0).id()) return p;
      return InfProof::inv(p.index(), p.formula(), q);
    }
    case IpKind::Red: {
      const Formula& c = p.formula();
      const InfProof& p0 = p.child(0);
      const InfProof& p1 = p.child(1);
      InfRule r = ip_rule(p1);
      if (!(r.kind == InfRule::Ex && *r.a == c)) {
        InfProof q = ip_pred(p1, n);
        if (q.id() == p1.id()) return p;
        return InfProof::red(c, p0, q);
      }
      if (n != 1) {
        InfProof q = ip_pred(p1, 1);
        Ordinal top = ip_pord(p0) + ip_pord(q) + Ordinal(1);
        return InfProof::acc(0, id_of(top), InfProof::red(c, p0, q));
      }
      InfProof q0 = ip_pred(p1, 0);
      Term t = Term::num(r.n);
      InfProof inv = InfProof::inv(r.n, negate(c), p0);
      InfProof right = InfProof::red(c, p0, q0);
      const Ordinal& o = ip_pord(q0);
      if (!o.is_zero()) {
        StepDown s = StepDown::Plus(ip_pord(p0), sd_const(SdConst::ToOne, o));
        if (s.valid()) return InfProof::cut(Formula::in_n(t), InfProof::acc(0, s, inv), right);
      }
      return InfProof::cut(Formula::in_n(t), inv, right);
    }
    default: {
      const InfProof& q = p.child(0);
      InfRule r = ip_rule(q);
      auto wrap = [&](const InfProof& x) {
        return p.kind() == IpKind::E0 ? InfProof::e0(x) : InfProof::e(x);
      };
      if (cut_above_zero(r)) return InfProof::red(*r.a, wrap(ip_pred(q, 0)), wrap(ip_pred(q, 1)));
      InfProof c = ip_pred(q, n);
      if (c.id() == q.id()) return p;
      return wrap(c);
    }
  }
}

}  // namespace

InfRule ip_rule(const InfProof& p) {
  IpNode& x = IpAccess::node(p);
  {
    std::lock_guard<std::mutex> lock(x.mu);
    if (x.rule) return *x.rule;
  }
  InfRule r = compute_rule(p);
  std::lock_guard<std::mutex> lock(x.mu);
  if (!x.rule) x.rule = r;
  return *x.rule;
}

StepDown ip_step(const InfProof& p) {
  IpNode& x = IpAccess::node(p);
  {
    std::lock_guard<std::mutex> lock(x.mu);
    if (x.step) return *x.step;
  }
  StepDown s = compute_step(p);
  std::lock_guard<std::mutex> lock(x.mu);
  if (!x.step) x.step = s;
  return *x.step;
}

InfProof ip_pred(const InfProof& p, std::uint64_t n) {
  IpNode& x = IpAccess::node(p);
  {
    std::lock_guard<std::mutex> lock(x.mu);
    auto it = x.pred.find(n);
    if (it != x.pred.end()) return it->second;
  }
  InfProof q = compute_pred(p, n);
  std::lock_guard<std::mutex> lock(x.mu);
  return x.pred.emplace(n, q).first->second;
}

IpUnfold ip_unfold(const InfProof& p, std::uint64_t n) {
  return {ip_rule(p), ip_step(p), ip_pred(p, n)};
}

InfProof ip_univ(const std::string& v, const FiniteProof& d0, std::uint64_t m_bound,
                 std::uint64_t m, int n) {
  std::size_t h = d0.height();
  InfProof aux = InfProof::embed(fp_subst(d0, v, m), m_bound + m, n);
  for (std::uint64_t k = 0; k < m; ++k) {
    Term hi = Term::num(m_bound + (m - k));
    Term lo = Term::num(m_bound + (m - k - 1));
    InfProof ax = InfProof::axn(Sequent{Formula::not_in_n(lo), Formula::in_n(hi)},
                                embed_ord(h, 1) + Ordinal(BigInt(k)));
    aux = InfProof::cut(Formula::in_n(hi), aux, ax);
  }
  Ordinal top = ord_mul_nat(Ordinal::omega(), BigInt(2 * (h + 1)));
  return InfProof::acc(m + 1, StepDown::Fund(m, top), aux);
}

InfProof ip_ind(const std::string& v, const Formula& a, const FiniteProof& d0,
                const FiniteProof& d1, std::uint64_t m_bound, std::uint64_t m, int n) {
  std::size_t h = d0.height();
  InfProof r = InfProof::embed(d0, m_bound, n);
  for (std::uint64_t k = 0; k < m; ++k) {
    InfProof aux = InfProof::embed(fp_subst(d1, v, k), m_bound + k, n);
    for (std::uint64_t l = 0; l < k; ++l) {
      Term hi = Term::num(m_bound + (k - l));
      Term lo = Term::num(m_bound + (k - l - 1));
      InfProof ax = InfProof::axn(Sequent{Formula::not_in_n(lo), Formula::in_n(hi)},
                                  embed_ord(h, 1) + Ordinal(BigInt(l)));
      aux = InfProof::cut(Formula::in_n(hi), aux, ax);
    }
    r = InfProof::cut(subst(a, v, Term::num(k)), aux, r);
  }
  return r;
}

namespace {

struct ProperChecker {
  std::unordered_map<const IpNode*, std::optional<std::string>> memo;

  std::optional<IpDiagnostic> run(const InfProof& p, const std::string& path) {
    auto it = memo.find(p.id());
    if (it != memo.end()) {
      if (!it->second) return std::nullopt;
      return IpDiagnostic{path, *it->second};
    }
    std::optional<IpDiagnostic> r;
    for (std::size_t i = 0; i < p.children().size() && !r; ++i) {
      r = run(p.child(i), path + "/" + std::to_string(i));
    }
    if (!r) {
      if (auto msg = local(p)) r = IpDiagnostic{path, *msg};
    }
    if (r && r->path == path) {
      memo[p.id()] = r->message;
    } else if (!r) {
      memo[p.id()] = std::nullopt;
    }
    return r;
  }

  static std::optional<std::string> local(const InfProof& p) {
    const IpNode& x = N(p);
    if (!x.pord) return x.pord_error;
    switch (p.kind()) {
      case IpKind::Embed: {
        std::size_t dt = fp_dterm(p.proof());
        if (p.bound() < dt) {
          return "embed: bound " + std::to_string(p.bound()) + " below term depth " +
                 std::to_string(dt);
        }
        if (auto diag = fp_check(p.proof(), p.level())) {
          return "embed: not a finite proof at " + diag->path + ": " + diag->message;
        }
        return std::nullopt;
      }
      case IpKind::AxN:
        return std::nullopt;
      case IpKind::Acc: {
        const StepDown& s = p.arg();
        if (!s.valid()) return "acc: invalid step-down: " + s.diagnostic();
        Ordinal want = ip_pord(p.child(0)) + Ordinal(1);
        if (!(s.bo() == want)) {
          return "acc: step-down ends at " + s.bo().str() + ", expected " + want.str();
        }
        BigInt k = k_of(x.pend);
        if (s.ba() > k) return "acc: step-down base " + s.ba().str() + " exceeds k = " + k.str();
        return std::nullopt;
      }
      case IpKind::CutI:
        if (!(ip_pord(p.child(0)) == ip_pord(p.child(1)))) {
          return "cut: premise ordinals differ: " + ip_pord(p.child(0)).str() + " vs " +
                 ip_pord(p.child(1)).str();
        }
        return std::nullopt;
      case IpKind::Inv:
      case IpKind::E:
        return std::nullopt;
      case IpKind::Red:
        if (!meshes(ip_pord(p.child(0)), ip_pord(p.child(1)))) {
          return "red: " + ip_pord(p.child(0)).str() + " does not mesh with " +
                 ip_pord(p.child(1)).str();
        }
        return std::nullopt;
      default:
        if (ip_dacc(p.child(0)) != 0) return "E0: accumulation rank of the premise is 1";
        return std::nullopt;
    }
  }
};

bool inter_sub(const Sequent& a, const Sequent& b, std::initializer_list<Formula> extra) {
  Sequent bb = b;
  for (const Formula& f : extra) bb.insert(f);
  return a.subset_of(bb);
}

}  // namespace

std::optional<IpDiagnostic> ip_check_proper(const InfProof& p) {
  ProperChecker c;
  return c.run(p, "root");
}

bool ip_is_proper(const InfProof& p) { return !ip_check_proper(p); }

bool contains_inf_axiom(const Sequent& g) {
  if (is_n_axiom(g)) return true;
  for (const Formula& f : g.items()) {
    if (f.is_atom() && !f.is_special() && is_closed(f) && eval_closed(f)) return true;
  }
  return false;
}

LcReport ip_lc(const InfProof& p, std::uint64_t n) {
  LcReport r;
  InfRule rule = ip_rule(p);
  StepDown s = ip_step(p);
  InfProof q = ip_pred(p, n);
  const Sequent& g = ip_pend(p);
  std::string why;

  r.cut = ip_dcut(p) >= rule.dcut() && ip_dcut(p) >= ip_dcut(q);
  if (!r.cut) why += "cut: rank " + std::to_string(ip_dcut(p)) + " below rule or premise; ";
  r.acc = ip_dacc(p) >= ip_dacc(q);
  if (!r.acc) why += "acc: premise has accumulation rank 1; ";

  try {
    const Ordinal& o = ip_pord(p);
    if (rule.kind == InfRule::Ax) {
      r.step = !(o < Ordinal(2));
    } else {
      BigInt k = k_of(g);
      BigInt base = k;
      if (ip_dacc(p) == 1) base = boost::multiprecision::pow(BigInt(3), (k + 1).convert_to<unsigned>());
      Ordinal want = ip_pord(q) + Ordinal(rule.kind == InfRule::Ex ? 2 : 1);
      r.step = s.valid() && s.to() == o && s.bo() == want && s.ba() <= base &&
               sd_check_semantics(s, base) == SdCheck::Holds;
    }
  } catch (const std::exception& e) {
    r.step = false;
    why += std::string("step: ") + e.what() + "; ";
  }
  if (!r.step && why.find("step:") == std::string::npos) {
    why += "step: " + s.str() + " does not certify the premise ordinal; ";
  }

  switch (rule.kind) {
    case InfRule::Ax:
      r.end = contains_inf_axiom(g);
      break;
    case InfRule::Acc:
      r.end = rule.n != n || ip_pend(q).subset_of(g);
      break;
    case InfRule::Or: {
      const Formula& a = *rule.a;
      Formula aj = rule.n == 0 ? a.left() : a.right();
      r.end = g.contains(a) && inter_sub(ip_pend(ip_pred(p, 0)), g, {aj});
      break;
    }
    case InfRule::And: {
      const Formula& a = *rule.a;
      r.end = g.contains(a) && inter_sub(ip_pend(ip_pred(p, 0)), g, {a.left()}) &&
              inter_sub(ip_pend(ip_pred(p, 1)), g, {a.right()});
      break;
    }
    case InfRule::Cut: {
      const Formula& a = *rule.a;
      r.end = inter_sub(ip_pend(ip_pred(p, 0)), g, {negate(a)}) &&
              inter_sub(ip_pend(ip_pred(p, 1)), g, {a});
      break;
    }
    case InfRule::Ex: {
      const Formula& a = *rule.a;
      Term t = Term::num(rule.n);
      r.end = g.contains(a) && inter_sub(ip_pend(ip_pred(p, 0)), g, {Formula::in_n(t)}) &&
              inter_sub(ip_pend(ip_pred(p, 1)), g, {fp_instance(a, t)});
      break;
    }
    default: {
      const Formula& a = *rule.a;
      Term t = Term::num(n);
      r.end = g.contains(a) &&
              inter_sub(ip_pend(q), g, {Formula::not_in_n(t), fp_instance(a, t)});
      break;
    }
  }
  if (!r.end) why += "end: sequent inclusion fails for rule " + rule.str() + "; ";
  r.detail = why;
  return r;
}

namespace {

Sequent seq_of(const Sexp& e) {
  if (!e.list || e.items.empty() || e.head() != "seq") {
    throw IpError("expected (seq ...): " + e.str());
  }
  Sequent g;
  for (std::size_t i = 1; i < e.items.size(); ++i) g.insert(formula_of(e.items[i]));
  return g;
}

std::uint64_t nat_of(const Sexp& e) {
  if (e.list) throw IpError("expected a number: " + e.str());
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(e.atom, &used);
    if (used != e.atom.size()) throw IpError("expected a number: " + e.atom);
    return v;
  } catch (const std::logic_error&) {
    throw IpError("expected a number: " + e.atom);
  }
}

std::string text_of(const Sexp& e) {
  if (e.list) throw IpError("expected an atom or a quoted string: " + e.str());
  return e.atom;
}

InfProof term_of_sexp(const Sexp& e) {
  const std::string& h = e.head();
  auto need = [&](std::size_t n) {
    if (e.items.size() != n + 1) {
      throw IpError(h + " takes " + std::to_string(n) + " arguments: " + e.str());
    }
  };
  if (h == "embed") {
    if (e.items.size() != 3 && e.items.size() != 4) throw IpError("embed takes 2 or 3 arguments");
    FiniteProof d = parse_proof(e.items[1].str());
    int n = e.items.size() == 4 ? static_cast<int>(nat_of(e.items[3])) : 0;
    return InfProof::embed(d, nat_of(e.items[2]), n);
  }
  if (h == "axN") {
    need(2);
    return InfProof::axn(seq_of(e.items[1]), parse_ordinal(text_of(e.items[2])));
  }
  if (h == "acc") {
    need(3);
    return InfProof::acc(nat_of(e.items[1]), parse_stepdown(text_of(e.items[2])),
                         term_of_sexp(e.items[3]));
  }
  if (h == "cut") {
    need(3);
    return InfProof::cut(formula_of(e.items[1]), term_of_sexp(e.items[2]),
                         term_of_sexp(e.items[3]));
  }
  if (h == "inv") {
    need(3);
    return InfProof::inv(nat_of(e.items[1]), formula_of(e.items[2]), term_of_sexp(e.items[3]));
  }
  if (h == "red") {
    need(3);
    return InfProof::red(formula_of(e.items[1]), term_of_sexp(e.items[2]),
                         term_of_sexp(e.items[3]));
  }
  if (h == "E0") {
    need(1);
    return InfProof::e0(term_of_sexp(e.items[1]));
  }
  if (h == "E") {
    need(1);
    return InfProof::e(term_of_sexp(e.items[1]));
  }
  throw IpError("unknown infinite proof constructor: " + h);
}

void indent_lines(const std::string& text, int indent, std::string& out) {
  std::string pad(indent, ' ');
  std::size_t pos = 0;
  bool first = true;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    if (!line.empty()) {
      if (!first) out += "\n" + pad;
      out += line;
      first = false;
    }
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
}

void print_term(const InfProof& p, int indent, std::string& out) {
  std::string pad(indent, ' ');
  out += pad + "(" + ip_kind_name(p.kind());
  switch (p.kind()) {
    case IpKind::Embed:
      out += "\n" + pad + "  ";
      indent_lines(print_proof(p.proof()), indent + 2, out);
      out += "\n" + pad + "  " + std::to_string(p.bound()) + " " + std::to_string(p.level()) + ")";
      return;
    case IpKind::AxN:
      out += " (seq";
      for (const Formula& f : p.axiom().items()) out += " " + f.str();
      out += ") \"" + p.alpha().str() + "\")";
      return;
    case IpKind::Acc:
      out += " " + std::to_string(p.index()) + " \"" + p.arg().str() + "\"";
      break;
    case IpKind::CutI:
    case IpKind::Red:
      out += " " + p.formula().str();
      break;
    case IpKind::Inv:
      out += " " + std::to_string(p.index()) + " " + p.formula().str();
      break;
    default:
      break;
  }
  for (const InfProof& k : p.children()) {
    out += "\n";
    print_term(k, indent + 2, out);
  }
  out += ")";
}

}  // namespace

InfProof parse_inf_proof(const std::string& text) {
  try {
    return term_of_sexp(parse_sexp(text));
  } catch (const SexpError& e) {
    throw IpError(e.what());
  } catch (const LanguageError& e) {
    throw IpError(e.what());
  } catch (const FpError& e) {
    throw IpError(e.what());
  } catch (const OrdinalError& e) {
    throw IpError(e.what());
  } catch (const StepDownError& e) {
    throw IpError(e.what());
  }
}

std::string print_inf_proof(const InfProof& p) {
  std::string out;
  print_term(p, 0, out);
  return out;
}

}  // namespace ordproof
