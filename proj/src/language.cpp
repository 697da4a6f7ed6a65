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

#include "ordproof/language.hpp"

#include <algorithm>
#include <functional>

#include "ordproof/sexp.hpp"

namespace ordproof {

std::string Term::str() const {
  if (var.empty()) return std::to_string(succ);
  std::string r = var;
  for (std::uint64_t i = 0; i < succ; ++i) r = "(S " + r + ")";
  return r;
}

struct FormulaNode {
  Formula::Kind kind = Formula::Kind::Atom;
  Rel rel = Rel::Eq;
  bool pos = true;
  std::vector<Term> args;
  std::optional<Formula> box;
  std::optional<Formula> a;
  std::optional<Formula> b;
  std::string var;
  Term bound;
  std::string key;
  std::size_t hash = 0;
  std::size_t size = 1;
};

namespace {

void write_term_key(const Term& t, const std::vector<std::string>& binders,
                    std::string& out) {
  if (t.var.empty()) {
    out += std::to_string(t.succ);
    return;
  }
  std::string name = t.var;
  for (std::size_t i = binders.size(); i-- > 0;) {
    if (binders[i] == t.var) {
      name = "%" + std::to_string(i);
      break;
    }
  }
  out += name;
  if (t.succ) out += "+" + std::to_string(t.succ);
}

const char* rel_name(Rel r, bool pos) {
  switch (r) {
    case Rel::Eq:
      return pos ? "=" : "!=";
    case Rel::Lt:
      return pos ? "<" : "!<";
    case Rel::Add:
      return pos ? "add" : "!add";
    case Rel::Mult:
      return pos ? "mult" : "!mult";
    case Rel::InN:
      return pos ? "in-N" : "not-in-N";
    default:
      return "box";
  }
}

void write_key(const Formula& f, std::vector<std::string>& binders,
               std::string& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom:
      out += '(';
      out += rel_name(f.rel(), f.positive());
      if (f.is_boxed()) {
        out += ' ';
        out += f.box_body().key();
      }
      for (const Term& t : f.args()) {
        out += ' ';
        write_term_key(t, binders, out);
      }
      out += ')';
      return;
    case K::And:
    case K::Or:
      out += f.kind() == K::And ? "(and " : "(or ";
      write_key(f.left(), binders, out);
      out += ' ';
      write_key(f.right(), binders, out);
      out += ')';
      return;
    default:
      break;
  }
  const char* tag = f.kind() == K::All   ? "(all"
                    : f.kind() == K::Ex  ? "(ex"
                    : f.kind() == K::BAll ? "(ball"
                                          : "(bex";
  out += tag;
  if (f.kind() == K::BAll || f.kind() == K::BEx) {
    out += ' ';
    write_term_key(f.bound(), binders, out);
  }
  out += ' ';
  binders.push_back(f.var());
  write_key(f.body(), binders, out);
  binders.pop_back();
  out += ')';
}

}  // namespace

Formula make_formula(FormulaNode&& n) {
  auto p = std::make_shared<FormulaNode>(std::move(n));
  if (p->a) p->size += p->a->size();
  if (p->b) p->size += p->b->size();
  Formula f(p);
  std::vector<std::string> binders;
  std::string key;
  write_key(f, binders, key);
  p->key = std::move(key);
  p->hash = std::hash<std::string>()(p->key);
  return f;
}

namespace {

Formula atom(Rel r, std::vector<Term> args, bool pos) {
  FormulaNode n;
  n.rel = r;
  n.pos = pos;
  n.args = std::move(args);
  return make_formula(std::move(n));
}

Formula binary(Formula::Kind k, const Formula& a, const Formula& b) {
  if (a.is_special() || b.is_special()) {
    throw LanguageError("special formulas cannot be combined: " + a.str() +
                        ", " + b.str());
  }
  FormulaNode n;
  n.kind = k;
  n.a = a;
  n.b = b;
  return make_formula(std::move(n));
}

Formula binder(Formula::Kind k, const std::string& x, const Term& bound,
               const Formula& body) {
  if (body.is_special()) {
    throw LanguageError("special formulas cannot be quantified: " + body.str());
  }
  if ((k == Formula::Kind::BAll || k == Formula::Kind::BEx) && bound.var == x) {
    throw LanguageError("bound variable occurs in its bounding term");
  }
  FormulaNode n;
  n.kind = k;
  n.var = x;
  n.bound = bound;
  n.a = body;
  return make_formula(std::move(n));
}

}  // namespace

Formula Formula::eq(Term a, Term b, bool positive) {
  return atom(Rel::Eq, {std::move(a), std::move(b)}, positive);
}
Formula Formula::lt(Term a, Term b, bool positive) {
  return atom(Rel::Lt, {std::move(a), std::move(b)}, positive);
}
Formula Formula::add(Term a, Term b, Term c, bool positive) {
  return atom(Rel::Add, {std::move(a), std::move(b), std::move(c)}, positive);
}
Formula Formula::mult(Term a, Term b, Term c, bool positive) {
  return atom(Rel::Mult, {std::move(a), std::move(b), std::move(c)}, positive);
}
Formula Formula::in_n(Term t) { return atom(Rel::InN, {std::move(t)}, true); }
Formula Formula::not_in_n(Term t) { return atom(Rel::InN, {std::move(t)}, false); }

Formula Formula::boxed(const Formula& body, const std::vector<std::string>& vars,
                       const std::vector<Term>& args) {
  if (!is_delta0_primed(body)) {
    throw LanguageError("boxed subscript must be a bounded formula: " + body.str());
  }
  if (vars.size() != args.size()) {
    throw LanguageError("boxed atom arity mismatch for " + body.str());
  }
  std::map<std::string, Term> given;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (given.count(vars[i])) throw LanguageError("repeated superscript variable");
    given[vars[i]] = args[i];
  }
  std::map<std::string, Term> ren;
  std::vector<Term> ordered;
  for (const std::string& v : free_vars(body)) {
    auto it = given.find(v);
    if (it == given.end()) {
      throw LanguageError("free variable " + v + " missing from superscript");
    }
    ren[v] = Term::v("#" + std::to_string(ordered.size()));
    ordered.push_back(it->second);
  }
  FormulaNode n;
  n.rel = Rel::Box;
  n.box = subst_many(body, ren);
  n.args = std::move(ordered);
  return make_formula(std::move(n));
}

Formula Formula::conj(const Formula& a, const Formula& b) {
  return binary(Kind::And, a, b);
}
Formula Formula::disj(const Formula& a, const Formula& b) {
  return binary(Kind::Or, a, b);
}
Formula Formula::all(const std::string& x, const Formula& body) {
  return binder(Kind::All, x, {}, body);
}
Formula Formula::ex(const std::string& x, const Formula& body) {
  return binder(Kind::Ex, x, {}, body);
}
Formula Formula::ball(const std::string& x, const Term& bound,
                      const Formula& body) {
  return binder(Kind::BAll, x, bound, body);
}
Formula Formula::bex(const std::string& x, const Term& bound,
                     const Formula& body) {
  return binder(Kind::BEx, x, bound, body);
}

Formula::Kind Formula::kind() const { return node_->kind; }
Rel Formula::rel() const { return node_->rel; }
bool Formula::positive() const { return node_->pos; }
const std::vector<Term>& Formula::args() const { return node_->args; }
const Formula& Formula::box_body() const { return *node_->box; }
const Formula& Formula::left() const { return *node_->a; }
const Formula& Formula::right() const { return *node_->b; }
const Formula& Formula::body() const { return *node_->a; }
const std::string& Formula::var() const { return node_->var; }
const Term& Formula::bound() const { return node_->bound; }
const std::string& Formula::key() const { return node_->key; }
std::size_t Formula::hash() const { return node_->hash; }
std::size_t Formula::size() const { return node_->size; }

namespace {

std::string box_var_name(const std::string& v) {
  return v.size() > 1 && v[0] == '#' ? "_" + v.substr(1) : v;
}

std::string print(const Formula& f, bool in_box) {
  using K = Formula::Kind;
  auto term = [&](const Term& t) {
    Term u = t;
    if (in_box) u.var = box_var_name(u.var);
    return u.str();
  };
  switch (f.kind()) {
    case K::Atom: {
      std::string r = "(";
      r += rel_name(f.rel(), f.positive());
      if (f.is_boxed()) {
        const Formula& b = f.box_body();
        r += " " + print(b, true);
        std::vector<std::string> fv = free_vars(b);
        bool canonical = fv.size() == f.args().size();
        for (std::size_t i = 0; canonical && i < fv.size(); ++i) {
          canonical = fv[i] == "#" + std::to_string(i);
        }
        if (!canonical) {
          r += " (";
          for (std::size_t i = 0; i < f.args().size(); ++i) {
            r += (i ? " _" : "_") + std::to_string(i);
          }
          r += ")";
        }
        r += " (";
        for (std::size_t i = 0; i < f.args().size(); ++i) {
          if (i) r += ' ';
          r += f.args()[i].str();
        }
        return r + "))";
      }
      for (const Term& t : f.args()) r += " " + term(t);
      return r + ")";
    }
    case K::And:
      return "(and " + print(f.left(), in_box) + " " + print(f.right(), in_box) + ")";
    case K::Or:
      return "(or " + print(f.left(), in_box) + " " + print(f.right(), in_box) + ")";
    case K::All:
      return "(all " + f.var() + " " + print(f.body(), in_box) + ")";
    case K::Ex:
      return "(ex " + f.var() + " " + print(f.body(), in_box) + ")";
    case K::BAll:
      return "(ball " + f.var() + " " + term(f.bound()) + " " +
             print(f.body(), in_box) + ")";
    default:
      return "(bex " + f.var() + " " + term(f.bound()) + " " +
             print(f.body(), in_box) + ")";
  }
}

}  // namespace

std::string Formula::str() const { return print(*this, false); }

Formula negate(const Formula& a) {
  using K = Formula::Kind;
  switch (a.kind()) {
    case K::Atom: {
      if (a.is_boxed()) {
        FormulaNode n;
        n.rel = Rel::Box;
        n.box = negate(a.box_body());
        n.args = a.args();
        return make_formula(std::move(n));
      }
      FormulaNode n;
      n.rel = a.rel();
      n.pos = !a.positive();
      n.args = a.args();
      return make_formula(std::move(n));
    }
    case K::And:
      return Formula::disj(negate(a.left()), negate(a.right()));
    case K::Or:
      return Formula::conj(negate(a.left()), negate(a.right()));
    case K::All:
      return Formula::ex(a.var(), negate(a.body()));
    case K::Ex:
      return Formula::all(a.var(), negate(a.body()));
    case K::BAll:
      return Formula::bex(a.var(), a.bound(), negate(a.body()));
    default:
      return Formula::ball(a.var(), a.bound(), negate(a.body()));
  }
}

Term subst_term(const Term& t, const std::string& x, const Term& r) {
  if (t.var != x || x.empty()) return t;
  return Term{r.var, r.succ + t.succ};
}

namespace {

Term subst_term_many(const Term& t, const std::map<std::string, Term>& s) {
  if (t.var.empty()) return t;
  auto it = s.find(t.var);
  if (it == s.end()) return t;
  return Term{it->second.var, it->second.succ + t.succ};
}

void collect_free(const Formula& a, std::vector<std::string>& bound,
                  std::vector<std::string>& out) {
  using K = Formula::Kind;
  auto add = [&](const Term& t) {
    if (t.var.empty()) return;
    if (std::find(bound.begin(), bound.end(), t.var) != bound.end()) return;
    if (std::find(out.begin(), out.end(), t.var) == out.end()) out.push_back(t.var);
  };
  switch (a.kind()) {
    case K::Atom:
      for (const Term& t : a.args()) add(t);
      return;
    case K::And:
    case K::Or:
      collect_free(a.left(), bound, out);
      collect_free(a.right(), bound, out);
      return;
    default:
      if (a.kind() == K::BAll || a.kind() == K::BEx) add(a.bound());
      bound.push_back(a.var());
      collect_free(a.body(), bound, out);
      bound.pop_back();
  }
}

}  // namespace

std::vector<std::string> free_vars(const Formula& a) {
  std::vector<std::string> bound, out;
  collect_free(a, bound, out);
  return out;
}

bool is_closed(const Formula& a) { return free_vars(a).empty(); }

std::string fresh_var(const std::string& base, const std::set<std::string>& avoid) {
  std::string stem = base.empty() ? "v" : base;
  while (!stem.empty() && (std::isdigit(static_cast<unsigned char>(stem.back())) ||
                           stem.back() == '_'))
    stem.pop_back();
  if (stem.empty()) stem = "v";
  for (int i = 0;; ++i) {
    std::string c = stem + "_" + std::to_string(i);
    if (!avoid.count(c)) return c;
  }
}

Formula subst_many(const Formula& a, const std::map<std::string, Term>& s) {
  using K = Formula::Kind;
  if (s.empty()) return a;
  switch (a.kind()) {
    case K::Atom: {
      FormulaNode n;
      n.rel = a.rel();
      n.pos = a.positive();
      if (a.is_boxed()) n.box = a.box_body();
      for (const Term& t : a.args()) n.args.push_back(subst_term_many(t, s));
      return make_formula(std::move(n));
    }
    case K::And:
      return Formula::conj(subst_many(a.left(), s), subst_many(a.right(), s));
    case K::Or:
      return Formula::disj(subst_many(a.left(), s), subst_many(a.right(), s));
    default:
      break;
  }
  Term bound = subst_term_many(a.bound(), s);
  std::map<std::string, Term> inner = s;
  inner.erase(a.var());
  std::vector<std::string> body_free = free_vars(a.body());
  bool capture = false;
  std::set<std::string> avoid(body_free.begin(), body_free.end());
  for (const auto& [x, t] : inner) {
    avoid.insert(x);
    if (!t.var.empty()) avoid.insert(t.var);
    if (t.var == a.var() &&
        std::find(body_free.begin(), body_free.end(), x) != body_free.end()) {
      capture = true;
    }
  }
  std::string v = a.var();
  Formula body = a.body();
  if (capture) {
    if (!bound.var.empty()) avoid.insert(bound.var);
    v = fresh_var(a.var(), avoid);
    body = subst(body, a.var(), Term::v(v));
  }
  body = subst_many(body, inner);
  switch (a.kind()) {
    case K::All:
      return Formula::all(v, body);
    case K::Ex:
      return Formula::ex(v, body);
    case K::BAll:
      return Formula::ball(v, bound, body);
    default:
      return Formula::bex(v, bound, body);
  }
}

Formula subst(const Formula& a, const std::string& x, const Term& t) {
  return subst_many(a, {{x, t}});
}

bool is_primed(const Formula& a) {
  using K = Formula::Kind;
  switch (a.kind()) {
    case K::Atom:
      return a.is_builtin();
    case K::And:
    case K::Or:
      return is_primed(a.left()) && is_primed(a.right());
    default:
      return is_primed(a.body());
  }
}

bool is_delta0_primed(const Formula& a) {
  using K = Formula::Kind;
  switch (a.kind()) {
    case K::Atom:
      return a.is_builtin();
    case K::And:
    case K::Or:
      return is_delta0_primed(a.left()) && is_delta0_primed(a.right());
    case K::BAll:
    case K::BEx:
      return is_delta0_primed(a.body());
    default:
      return false;
  }
}

Class classify(const Formula& a) {
  using K = Formula::Kind;
  switch (a.kind()) {
    case K::Atom:
      if (a.is_in_n()) return {Class::SpecialInN};
      if (a.is_not_in_n()) return {Class::SpecialNotInN};
      return {Class::Delta0Proper};
    case K::Ex: {
      Class c = classify(a.body());
      if (c.kind == Class::Delta0Proper) return {Class::Sigma, 1};
      if (c.kind == Class::Pi) return {Class::Sigma, c.level + 1};
      return {Class::Outside};
    }
    case K::All: {
      Class c = classify(a.body());
      if (c.kind == Class::Delta0Proper) return {Class::Pi, 1};
      if (c.kind == Class::Sigma) return {Class::Pi, c.level + 1};
      return {Class::Outside};
    }
    default:
      return {Class::Outside};
  }
}

bool is_delta0(const Formula& a) {
  Class c = classify(a);
  return c.kind == Class::Delta0Proper || c.kind == Class::SpecialInN;
}

bool in_cumulative_sigma(const Formula& a, int n) {
  Class c = classify(a);
  if (c.kind == Class::Delta0Proper || c.kind == Class::SpecialInN) return true;
  return c.kind == Class::Sigma && c.level <= n;
}

Formula unbox(const Formula& a) {
  if (!a.is_boxed()) throw LanguageError("not a boxed atom: " + a.str());
  std::map<std::string, Term> s;
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    s["#" + std::to_string(i)] = a.args()[i];
  }
  return subst_many(a.box_body(), s);
}

namespace {

BigInt num_value(const Term& t) {
  if (!t.closed()) throw LanguageError("open term " + t.str());
  return BigInt(t.succ);
}

bool eval_builtin(const Formula& a) {
  const auto& g = a.args();
  bool v = false;
  switch (a.rel()) {
    case Rel::Eq:
      v = num_value(g[0]) == num_value(g[1]);
      break;
    case Rel::Lt:
      v = num_value(g[0]) < num_value(g[1]);
      break;
    case Rel::Add:
      v = num_value(g[0]) + num_value(g[1]) == num_value(g[2]);
      break;
    case Rel::Mult:
      v = num_value(g[0]) * num_value(g[1]) == num_value(g[2]);
      break;
    default:
      throw LanguageError("not a built-in atom");
  }
  return a.positive() ? v : !v;
}

}  // namespace

bool eval_primed(const Formula& a) {
  using K = Formula::Kind;
  switch (a.kind()) {
    case K::Atom:
      if (a.is_special()) throw LanguageError("special formula in a subscript");
      if (a.is_boxed()) return eval_primed(unbox(a));
      return eval_builtin(a);
    case K::And:
      return eval_primed(a.left()) && eval_primed(a.right());
    case K::Or:
      return eval_primed(a.left()) || eval_primed(a.right());
    case K::BAll:
    case K::BEx: {
      std::uint64_t n = num_value(a.bound()).convert_to<std::uint64_t>();
      bool universal = a.kind() == K::BAll;
      for (std::uint64_t i = 0; i < n; ++i) {
        bool v = eval_primed(subst(a.body(), a.var(), Term::num(i)));
        if (v != universal) return v;
      }
      return universal;
    }
    default:
      throw LanguageError("unbounded quantifier in a bounded evaluation: " + a.str());
  }
}

bool eval_closed(const Formula& a) {
  if (!a.is_atom()) throw LanguageError("eval_closed expects an atom: " + a.str());
  if (a.is_special()) throw LanguageError("eval_closed on a special formula");
  if (!is_closed(a)) throw LanguageError("eval_closed on an open formula: " + a.str());
  return eval_primed(a);
}

Formula box(const Formula& a) {
  using K = Formula::Kind;
  if (is_delta0_primed(a)) {
    std::vector<std::string> fv = free_vars(a);
    std::vector<Term> args;
    for (const std::string& v : fv) args.push_back(Term::v(v));
    return Formula::boxed(a, fv, args);
  }
  switch (a.kind()) {
    case K::Atom:
      return a;
    case K::And:
      return Formula::conj(box(a.left()), box(a.right()));
    case K::Or:
      return Formula::disj(box(a.left()), box(a.right()));
    case K::All:
      return Formula::all(a.var(), box(a.body()));
    case K::Ex:
      return Formula::ex(a.var(), box(a.body()));
    case K::BAll:
      return Formula::all(
          a.var(), Formula::disj(box(Formula::lt(Term::v(a.var()), a.bound(), false)),
                                 box(a.body())));
    default:
      return Formula::ex(
          a.var(), Formula::conj(box(Formula::lt(Term::v(a.var()), a.bound())),
                                 box(a.body())));
  }
}

Sequent::Sequent(std::initializer_list<Formula> fs) {
  for (const Formula& f : fs) insert(f);
}

Sequent::Sequent(const std::vector<Formula>& fs) {
  for (const Formula& f : fs) insert(f);
}

void Sequent::insert(const Formula& f) {
  auto it = std::lower_bound(items_.begin(), items_.end(), f);
  if (it != items_.end() && *it == f) return;
  items_.insert(it, f);
}

bool Sequent::contains(const Formula& f) const {
  return std::binary_search(items_.begin(), items_.end(), f);
}

bool Sequent::subset_of(const Sequent& o) const {
  return std::includes(o.items_.begin(), o.items_.end(), items_.begin(),
                       items_.end());
}

Sequent Sequent::unite(const Sequent& o) const {
  Sequent r;
  std::set_union(items_.begin(), items_.end(), o.items_.begin(), o.items_.end(),
                 std::back_inserter(r.items_));
  return r;
}

Sequent Sequent::with(const Formula& f) const {
  Sequent r = *this;
  r.insert(f);
  return r;
}

Sequent Sequent::without(const Formula& f) const {
  Sequent r = *this;
  auto it = std::lower_bound(r.items_.begin(), r.items_.end(), f);
  if (it != r.items_.end() && *it == f) r.items_.erase(it);
  return r;
}

std::string Sequent::str() const {
  std::string r = "{";
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) r += ", ";
    r += items_[i].str();
  }
  return r + "}";
}

bool Sequent::operator==(const Sequent& o) const {
  if (items_.size() != o.items_.size()) return false;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (!(items_[i] == o.items_[i])) return false;
  }
  return true;
}

Sequent subst(const Sequent& g, const std::string& x, const Term& t) {
  Sequent r;
  for (const Formula& f : g.items()) r.insert(subst(f, x, t));
  return r;
}

std::set<std::string> free_vars(const Sequent& g) {
  std::set<std::string> r;
  for (const Formula& f : g.items()) {
    for (const std::string& v : free_vars(f)) r.insert(v);
  }
  return r;
}

std::uint64_t k_of(const Sequent& g) {
  std::uint64_t k = 1;
  for (const Formula& f : g.items()) {
    if (f.is_not_in_n() && f.args()[0].closed()) k = std::max(k, f.args()[0].succ);
  }
  return k;
}

const char* axiom_kind_name(AxiomKind k) {
  switch (k) {
    case AxiomKind::Logical:
      return "logical";
    case AxiomKind::Elementary:
      return "elementary";
    case AxiomKind::BoundedLogic:
      return "bounded-logic";
    case AxiomKind::TruthAxiom:
      return "truth";
    default:
      return "N-axiom";
  }
}

const std::vector<Sequent>& elementary_axioms() {
  static const std::vector<Sequent> axioms = [] {
    Term x = Term::v("x"), y = Term::v("y"), z = Term::v("z"), w = Term::v("w");
    Term x1 = Term::v("x'"), y1 = Term::v("y'"), z1 = Term::v("z'");
    Term o = Term::zero();
    using F = Formula;
    return std::vector<Sequent>{
        {F::eq(x, x)},
        {F::eq(x, y, false), F::eq(y, x)},
        {F::eq(x, y, false), F::eq(y, z, false), F::eq(x, z)},
        {F::eq(x.S(), o, false)},
        {F::eq(x.S(), y.S(), false), F::eq(x, y)},
        {F::eq(x, y, false), F::eq(x.S(), y.S())},
        {F::add(x, o, x)},
        {F::add(x, y, z, false), F::add(x, y.S(), z.S())},
        {F::add(x, y, z, false), F::add(x, y, z1, false), F::eq(z, z1)},
        {F::eq(x, x1, false), F::eq(y, y1, false), F::eq(z, z1, false),
         F::add(x, y, z, false), F::add(x1, y1, z1)},
        {F::mult(x, o, o)},
        {F::mult(x, y, w, false), F::add(w, x, z, false), F::mult(x, y.S(), z)},
        {F::mult(x, y, z, false), F::mult(x, y, z1, false), F::eq(z, z1)},
        {F::eq(x, x1, false), F::eq(y, y1, false), F::eq(z, z1, false),
         F::mult(x, y, z, false), F::mult(x1, y1, z1)},
        {F::lt(x, o, false)},
        {F::lt(x, y.S(), false), F::lt(x, y), F::eq(x, y)},
        {F::lt(o, x.S())},
        {F::lt(x, y, false), F::lt(x.S(), y.S())},
        {F::lt(x.S(), y, false), F::lt(x, y)},
        {F::lt(x, x.S())},
        {F::eq(x, x1, false), F::eq(y, y1, false), F::lt(x, y, false),
         F::lt(x1, y1)},
    };
  }();
  return axioms;
}

namespace {

using Binding = std::map<std::string, Term>;

bool match_term(const Term& pat, const Term& t, Binding& b) {
  if (pat.var.empty()) return t.var.empty() && t.succ == pat.succ;
  if (t.succ < pat.succ) return false;
  Term val{t.var, t.succ - pat.succ};
  auto it = b.find(pat.var);
  if (it != b.end()) return it->second == val;
  b[pat.var] = val;
  return true;
}

bool match_atom(const Formula& pat, const Formula& f, Binding& b) {
  if (!f.is_builtin() || f.rel() != pat.rel() || f.positive() != pat.positive())
    return false;
  Binding trial = b;
  for (std::size_t i = 0; i < pat.args().size(); ++i) {
    if (!match_term(pat.args()[i], f.args()[i], trial)) return false;
  }
  b = std::move(trial);
  return true;
}

bool match_schema(const std::vector<Formula>& pats, std::size_t i,
                  const std::vector<Formula>& atoms, Binding& b) {
  if (i == pats.size()) return true;
  for (const Formula& f : atoms) {
    Binding trial = b;
    if (match_atom(pats[i], f, trial) && match_schema(pats, i + 1, atoms, trial)) {
      b = std::move(trial);
      return true;
    }
  }
  return false;
}

bool bounded_logic_axiom(const Sequent& g) {
  using K = Formula::Kind;
  std::vector<Formula> unboxed;
  std::set<std::string> keys;
  for (const Formula& f : g.items()) {
    if (f.is_boxed()) {
      unboxed.push_back(unbox(f));
      keys.insert(unboxed.back().key());
    }
  }
  auto has = [&](const Formula& u) { return keys.count(u.key()) > 0; };
  for (const Formula& f : g.items()) {
    if (f.is_builtin() && has(negate(f))) return true;
  }
  for (const Formula& u : unboxed) {
    if (has(negate(u))) return true;
    switch (u.kind()) {
      case K::And:
        if (has(negate(u.left())) && has(negate(u.right()))) return true;
        break;
      case K::Or:
        if (has(negate(u.left())) || has(negate(u.right()))) return true;
        break;
      case K::BEx:
        for (const Formula& w : unboxed) {
          if (w.kind() != K::Or || !w.left().is_builtin()) continue;
          const Formula& l = w.left();
          if (l.rel() != Rel::Lt || l.positive() || !(l.args()[1] == u.bound()))
            continue;
          Formula inst = negate(subst(u.body(), u.var(), l.args()[0]));
          if (w.right() == inst) return true;
        }
        break;
      case K::BAll:
        if (u.bound() == Term::zero()) return true;
        if (u.bound().succ > 0) {
          Term t{u.bound().var, u.bound().succ - 1};
          if (has(negate(Formula::ball(u.var(), t, u.body()))) &&
              has(negate(subst(u.body(), u.var(), t)))) {
            return true;
          }
        }
        break;
      default:
        break;
    }
  }
  return false;
}

}  // namespace

std::optional<AxiomKind> is_axiom(const Sequent& g) {
  for (const Formula& f : g.items()) {
    if (f.is_atom() && !f.is_special() && g.contains(negate(f))) {
      return AxiomKind::Logical;
    }
  }
  std::vector<Formula> atoms;
  for (const Formula& f : g.items()) {
    if (f.is_builtin()) atoms.push_back(f);
  }
  for (const Sequent& ax : elementary_axioms()) {
    Binding b;
    if (match_schema(ax.items(), 0, atoms, b)) return AxiomKind::Elementary;
  }
  if (bounded_logic_axiom(g)) return AxiomKind::BoundedLogic;
  for (const Formula& f : g.items()) {
    if (f.is_atom() && !f.is_special() && is_closed(f) && eval_closed(f)) {
      return AxiomKind::TruthAxiom;
    }
  }
  for (const Formula& f : g.items()) {
    if (!f.is_not_in_n()) continue;
    const Term& t = f.args()[0];
    if (g.contains(Formula::in_n(t)) || g.contains(Formula::in_n(t.S()))) {
      return AxiomKind::NAxiom;
    }
  }
  return std::nullopt;
}

bool Bound::exceeds(const BigInt& c) const {
  if (value) return c < *value;
  return !symbound_cmp(sym, c + 1, max_steps).below;
}

namespace {

BigInt pow3(std::uint64_t e) {
  return boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(e));
}

}  // namespace

Truth true_bounded(const Formula& phi, const Bound& k, std::uint64_t witness_cap) {
  if (!is_closed(phi)) throw LanguageError("truth of an open formula: " + phi.str());
  Class c = classify(phi);
  Truth r;
  r.formula = phi;
  switch (c.kind) {
    case Class::SpecialInN:
      r.kind = k.exceeds(pow3(phi.args()[0].succ + 1)) ? Truth::True : Truth::False;
      return r;
    case Class::SpecialNotInN:
      r.kind = Truth::False;
      return r;
    case Class::Delta0Proper:
      r.kind = eval_closed(phi) ? Truth::True : Truth::False;
      return r;
    case Class::Sigma:
      if (c.level == 1) break;
      [[fallthrough]];
    default:
      throw LanguageError("bounded truth needs a Delta_0 or Sigma_1 formula: " +
                          phi.str());
  }
  for (std::uint64_t n = 0; n < witness_cap; ++n) {
    if (eval_closed(subst(phi.body(), phi.var(), Term::num(n)))) {
      if (k.exceeds(pow3(n + 1))) {
        r.kind = Truth::True;
        r.witness = n;
      } else {
        r.kind = Truth::False;
      }
      return r;
    }
  }
  r.kind = k.exceeds(pow3(witness_cap + 1)) ? Truth::Exhausted : Truth::False;
  return r;
}

Truth true_bounded_sequent(const Sequent& g, const Bound& k,
                           std::uint64_t witness_cap) {
  Truth out;
  for (const Formula& f : g.items()) {
    Class c = classify(f);
    bool member = c.kind == Class::Delta0Proper || c.kind == Class::SpecialInN ||
                  (c.kind == Class::Sigma && c.level == 1);
    if (!member || !is_closed(f)) continue;
    Truth t = true_bounded(f, k, witness_cap);
    if (t.kind == Truth::True) return t;
    if (t.kind == Truth::Exhausted) out = t;
  }
  return out;
}

bool is_sigma1_sequent(const Sequent& g) {
  for (const Formula& f : g.items()) {
    Class c = classify(f);
    bool ok = c.kind == Class::Delta0Proper || c.kind == Class::SpecialInN ||
              c.kind == Class::SpecialNotInN || (c.kind == Class::Sigma && c.level == 1);
    if (!ok) return false;
  }
  return true;
}

namespace {

bool is_number(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

void check_var_name(const std::string& s) {
  if (s.empty() || s[0] == '#' || s[0] == '%' ||
      std::isdigit(static_cast<unsigned char>(s[0]))) {
    throw LanguageError("bad variable name '" + s + "'");
  }
}

}  // namespace

Term term_of(const Sexp& e) {
  if (!e.list) {
    if (is_number(e.atom)) return Term::num(std::stoull(e.atom));
    check_var_name(e.atom);
    return Term::v(e.atom);
  }
  if (e.items.size() == 2 && (e.head() == "S" || e.head() == "s")) return term_of(e.items[1]).S();
  throw LanguageError("bad term " + e.str());
}

Formula formula_of(const Sexp& e) {
  if (!e.list || e.items.empty()) throw LanguageError("bad formula " + e.str());
  const std::string& h = e.head();
  auto arity = [&](std::size_t n) {
    if (e.items.size() != n + 1) {
      throw LanguageError("wrong arity in " + e.str());
    }
  };
  auto t = [&](std::size_t i) { return term_of(e.items[i]); };
  bool neg = h.size() > 1 && h[0] == '!';
  std::string base = neg ? h.substr(1) : h;
  if (base == "=") {
    arity(2);
    return Formula::eq(t(1), t(2), !neg);
  }
  if (base == "<") {
    arity(2);
    return Formula::lt(t(1), t(2), !neg);
  }
  if (base == "add") {
    arity(3);
    return Formula::add(t(1), t(2), t(3), !neg);
  }
  if (base == "mult") {
    arity(3);
    return Formula::mult(t(1), t(2), t(3), !neg);
  }
  if (h == "in-N") {
    arity(1);
    return Formula::in_n(t(1));
  }
  if (h == "not-in-N") {
    arity(1);
    return Formula::not_in_n(t(1));
  }
  if (h == "not") {
    arity(1);
    return negate(formula_of(e.items[1]));
  }
  if (h == "and" || h == "or") {
    if (e.items.size() < 3) throw LanguageError("connective needs two operands");
    Formula acc = formula_of(e.items.back());
    for (std::size_t i = e.items.size() - 1; i-- > 1;) {
      Formula l = formula_of(e.items[i]);
      acc = h == "and" ? Formula::conj(l, acc) : Formula::disj(l, acc);
    }
    return acc;
  }
  if (h == "all" || h == "ex") {
    arity(2);
    if (e.items[1].list) throw LanguageError("bad bound variable in " + e.str());
    check_var_name(e.items[1].atom);
    Formula b = formula_of(e.items[2]);
    return h == "all" ? Formula::all(e.items[1].atom, b)
                      : Formula::ex(e.items[1].atom, b);
  }
  if (h == "ball" || h == "bex") {
    arity(3);
    if (e.items[1].list) throw LanguageError("bad bound variable in " + e.str());
    check_var_name(e.items[1].atom);
    Formula b = formula_of(e.items[3]);
    return h == "ball" ? Formula::ball(e.items[1].atom, t(2), b)
                       : Formula::bex(e.items[1].atom, t(2), b);
  }
  if (h == "box") {
    if (e.items.size() < 2 || e.items.size() > 4) {
      throw LanguageError("box expects a subscript and optional arguments");
    }
    Formula body = formula_of(e.items[1]);
    std::vector<std::string> vars = free_vars(body);
    std::vector<Term> args;
    if (e.items.size() == 4) {
      vars.clear();
      for (const Sexp& v : e.items[2].items) {
        if (v.list) throw LanguageError("bad superscript variable");
        vars.push_back(v.atom);
      }
    }
    if (e.items.size() >= 3) {
      for (const Sexp& a : e.items.back().items) args.push_back(term_of(a));
    } else {
      for (const std::string& v : vars) args.push_back(Term::v(v));
    }
    return Formula::boxed(body, vars, args);
  }
  throw LanguageError("unknown formula head '" + h + "'");
}

Term parse_term(const std::string& text) { return term_of(parse_sexp(text)); }

Formula parse_formula(const std::string& text) {
  return formula_of(parse_sexp(text));
}

Sequent parse_sequent(const std::string& text) {
  Sequent g;
  for (const Sexp& e : parse_sexps(text)) g.insert(formula_of(e));
  return g;
}

}  // namespace ordproof
