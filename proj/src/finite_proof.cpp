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

#include "ordproof/finite_proof.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "ordproof/sexp.hpp"

namespace ordproof {

struct FpNode {
  FpKind kind = FpKind::Ax;
  Sequent gamma;
  std::optional<Formula> formula;
  std::string var;
  Term term;
  int index = 0;
  std::vector<FiniteProof> kids;
  std::size_t height = 0;
};

const char* fp_kind_name(FpKind k) {
  switch (k) {
    case FpKind::Ax: return "ax";
    case FpKind::Rep: return "rep";
    case FpKind::And: return "and";
    case FpKind::Or: return "or";
    case FpKind::All: return "all";
    case FpKind::Ex: return "ex";
    case FpKind::Cut: return "cut";
    default: return "ind";
  }
}

FiniteProof FiniteProof::make(FpNode&& n) {
  n.height = 0;
  for (const FiniteProof& k : n.kids) n.height = std::max(n.height, k.height() + 1);
  return FiniteProof(std::make_shared<const FpNode>(std::move(n)));
}

FiniteProof fp_pad(const FiniteProof& d, std::size_t height) {
  FiniteProof r = d;
  while (r.height() < height) r = FiniteProof::rep(r.end(), r);
  return r;
}

namespace {

void pad_pair(FiniteProof& a, FiniteProof& b) {
  std::size_t h = std::max(a.height(), b.height());
  a = fp_pad(a, h);
  b = fp_pad(b, h);
}

}  // namespace

FiniteProof FiniteProof::ax(const Sequent& g) {
  FpNode n;
  n.gamma = g;
  return make(std::move(n));
}

FiniteProof FiniteProof::rep(const Sequent& g, const FiniteProof& d0) {
  FpNode n;
  n.kind = FpKind::Rep;
  n.gamma = g;
  n.kids = {d0};
  return make(std::move(n));
}

FiniteProof FiniteProof::conj(const Sequent& g, const Formula& a,
                              const FiniteProof& d0, const FiniteProof& d1,
                              bool pad) {
  FpNode n;
  n.kind = FpKind::And;
  n.gamma = g;
  n.formula = a;
  n.kids = {d0, d1};
  if (pad) pad_pair(n.kids[0], n.kids[1]);
  return make(std::move(n));
}

FiniteProof FiniteProof::disj(const Sequent& g, int i, const Formula& a,
                              const FiniteProof& d0) {
  FpNode n;
  n.kind = FpKind::Or;
  n.gamma = g;
  n.index = i;
  n.formula = a;
  n.kids = {d0};
  return make(std::move(n));
}

FiniteProof FiniteProof::all(const Sequent& g, const std::string& v,
                             const Formula& a, const FiniteProof& d0) {
  FpNode n;
  n.kind = FpKind::All;
  n.gamma = g;
  n.var = v;
  n.formula = a;
  n.kids = {d0};
  return make(std::move(n));
}

FiniteProof FiniteProof::ex(const Sequent& g, const Term& t, const Formula& a,
                            const FiniteProof& d0) {
  FpNode n;
  n.kind = FpKind::Ex;
  n.gamma = g;
  n.term = t;
  n.formula = a;
  n.kids = {d0};
  return make(std::move(n));
}

FiniteProof FiniteProof::cut(const Sequent& g, const Formula& a,
                             const FiniteProof& d0, const FiniteProof& d1,
                             bool pad) {
  FpNode n;
  n.kind = FpKind::Cut;
  n.gamma = g;
  n.formula = a;
  n.kids = {d0, d1};
  if (pad) pad_pair(n.kids[0], n.kids[1]);
  return make(std::move(n));
}

FiniteProof FiniteProof::ind(const Sequent& g, const std::string& v, const Term& t,
                             const Formula& a, const FiniteProof& d0,
                             const FiniteProof& d1, bool pad) {
  FpNode n;
  n.kind = FpKind::Ind;
  n.gamma = g;
  n.var = v;
  n.term = t;
  n.formula = a;
  n.kids = {d0, d1};
  if (pad) pad_pair(n.kids[0], n.kids[1]);
  return make(std::move(n));
}

FpKind FiniteProof::kind() const { return node_->kind; }
const Sequent& FiniteProof::end() const { return node_->gamma; }
const Formula& FiniteProof::formula() const {
  if (!node_->formula) throw FpError("node has no formula");
  return *node_->formula;
}
const std::string& FiniteProof::var() const { return node_->var; }
const Term& FiniteProof::term() const { return node_->term; }
int FiniteProof::index() const { return node_->index; }
const std::vector<FiniteProof>& FiniteProof::children() const { return node_->kids; }
std::size_t FiniteProof::height() const { return node_->height; }

Formula fp_instance(const Formula& a, const Term& t) {
  using K = Formula::Kind;
  Formula body = subst(a.body(), a.var(), t);
  switch (a.kind()) {
    case K::All:
    case K::Ex:
      return body;
    case K::BAll:
      return Formula::disj(Formula::lt(t, a.bound(), false), body);
    case K::BEx:
      return Formula::conj(Formula::lt(t, a.bound()), body);
    default:
      throw FpError("not a quantified formula: " + a.str());
  }
}

namespace {

bool sub_with(const Sequent& g0, const Sequent& g, std::initializer_list<Formula> extra) {
  for (const Formula& f : g0.items()) {
    if (g.contains(f)) continue;
    bool ok = false;
    for (const Formula& e : extra) ok = ok || e == f;
    if (!ok) return false;
  }
  return true;
}

bool term_vars_in(const Term& t, const std::set<std::string>& fv) {
  return t.var.empty() || fv.count(t.var) > 0;
}

bool finite_axiom(const Sequent& g) {
  auto k = is_axiom(g);
  return k && (*k == AxiomKind::Logical || *k == AxiomKind::Elementary ||
               *k == AxiomKind::BoundedLogic);
}

struct Checker {
  int n;
  bool primed;
  std::unordered_set<const FpNode*> done;
  std::optional<FpDiagnostic> diag;

  bool cls_ok(const Formula& a) const {
    if (primed) {
      if (!is_primed(a)) return false;
      return in_cumulative_sigma(box(a), n);
    }
    return in_cumulative_sigma(a, n);
  }

  bool fail(const std::string& path, std::string msg) {
    diag = FpDiagnostic{path, std::move(msg)};
    return false;
  }

  bool run(const FiniteProof& d, const std::string& path) {
    if (done.count(d.id())) return true;
    const Sequent& g = d.end();
    const auto& k = d.children();
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (!run(k[i], path + "/" + std::to_string(i))) return false;
    }
    if (primed) {
      for (const Formula& f : g.items()) {
        if (!is_primed(f)) return fail(path, "formula outside the old language: " + f.str());
      }
    } else {
      for (const Formula& f : g.items()) {
        if (f.is_special()) return fail(path, "special formula in a finite proof");
      }
    }
    if (k.size() == 2 && k[0].height() != k[1].height()) {
      return fail(path, std::string(fp_kind_name(d.kind())) +
                            ": premises have different heights");
    }
    std::set<std::string> fv = free_vars(g);
    switch (d.kind()) {
      case FpKind::Ax:
        if (!finite_axiom(g)) return fail(path, "ax: no axiom in " + g.str());
        break;
      case FpKind::Rep:
        if (!k[0].end().subset_of(g)) return fail(path, "rep: premise not contained");
        break;
      case FpKind::And: {
        const Formula& a = d.formula();
        if (!g.contains(a)) return fail(path, "and: principal formula missing");
        if (a.kind() != Formula::Kind::And) return fail(path, "and: not a conjunction");
        if (!sub_with(k[0].end(), g, {a.left()}) || !sub_with(k[1].end(), g, {a.right()}))
          return fail(path, "and: premise not contained");
        break;
      }
      case FpKind::Or: {
        const Formula& a = d.formula();
        if (!g.contains(a)) return fail(path, "or: principal formula missing");
        if (a.kind() != Formula::Kind::Or) return fail(path, "or: not a disjunction");
        if (d.index() != 0 && d.index() != 1) return fail(path, "or: bad index");
        if (!sub_with(k[0].end(), g, {d.index() == 0 ? a.left() : a.right()}))
          return fail(path, "or: premise not contained");
        break;
      }
      case FpKind::All: {
        const Formula& a = d.formula();
        if (!g.contains(a)) return fail(path, "all: principal formula missing");
        if (a.kind() != Formula::Kind::All && a.kind() != Formula::Kind::BAll)
          return fail(path, "all: not a universal formula");
        if (fv.count(d.var())) return fail(path, "all: eigenvariable " + d.var() + " is free");
        if (!sub_with(k[0].end(), g, {fp_instance(a, Term::v(d.var()))}))
          return fail(path, "all: premise not contained");
        break;
      }
      case FpKind::Ex: {
        const Formula& a = d.formula();
        if (!g.contains(a)) return fail(path, "ex: principal formula missing");
        if (a.kind() != Formula::Kind::Ex && a.kind() != Formula::Kind::BEx)
          return fail(path, "ex: not an existential formula");
        if (!term_vars_in(d.term(), fv)) return fail(path, "ex: witness term not free in the sequent");
        if (!sub_with(k[0].end(), g, {fp_instance(a, d.term())}))
          return fail(path, "ex: premise not contained");
        break;
      }
      case FpKind::Cut: {
        const Formula& a = d.formula();
        if (!cls_ok(a)) return fail(path, "cut: formula outside the allowed classes: " + a.str());
        for (const std::string& v : free_vars(a)) {
          if (!fv.count(v)) return fail(path, "cut: variable " + v + " not free in the sequent");
        }
        if (!sub_with(k[0].end(), g, {negate(a)}) || !sub_with(k[1].end(), g, {a}))
          return fail(path, "cut: premise not contained");
        break;
      }
      case FpKind::Ind: {
        const Formula& a = d.formula();
        const std::string& v = d.var();
        if (!cls_ok(a)) return fail(path, "ind: formula outside the allowed classes: " + a.str());
        if (!g.contains(subst(a, v, d.term())))
          return fail(path, "ind: conclusion instance missing");
        if (fv.count(v)) return fail(path, "ind: variable " + v + " is free");
        if (!term_vars_in(d.term(), fv)) return fail(path, "ind: term not free in the sequent");
        Term var = Term::v(v);
        if (!sub_with(k[0].end(), g, {subst(a, v, Term::zero())}) ||
            !sub_with(k[1].end(), g, {negate(a), subst(a, v, var.S())}))
          return fail(path, "ind: premise not contained");
        break;
      }
    }
    done.insert(d.id());
    return true;
  }
};

}  // namespace

std::optional<FpDiagnostic> fp_check(const FiniteProof& d, int n) {
  if (n < 1) return FpDiagnostic{"", "n must be at least 1"};
  Checker c{n, false, {}, {}};
  c.run(d, "root");
  return c.diag;
}

std::optional<FpDiagnostic> fp_check_primed(const FiniteProof& d, int n) {
  if (n < 1) return FpDiagnostic{"", "n must be at least 1"};
  Checker c{n, true, {}, {}};
  c.run(d, "root");
  return c.diag;
}

namespace {

template <class F>
void visit(const FiniteProof& d, F&& f) {
  std::unordered_set<const FpNode*> seen;
  std::vector<FiniteProof> stack{d};
  while (!stack.empty()) {
    FiniteProof x = stack.back();
    stack.pop_back();
    if (!seen.insert(x.id()).second) continue;
    f(x);
    for (const FiniteProof& k : x.children()) stack.push_back(k);
  }
}

}  // namespace

std::size_t fp_dterm(const FiniteProof& d) {
  std::size_t r = 0;
  visit(d, [&](const FiniteProof& x) {
    if (x.kind() == FpKind::Ex || x.kind() == FpKind::Ind) r = std::max(r, x.term().depth());
  });
  return r;
}

bool fp_uses_ind(const FiniteProof& d) {
  bool r = false;
  visit(d, [&](const FiniteProof& x) { r = r || x.kind() == FpKind::Ind; });
  return r;
}

FpMetrics fp_metrics(const FiniteProof& d, int n) {
  FpMetrics m;
  m.height = d.height();
  m.dterm = fp_dterm(d);
  m.end = d.end();
  if (fp_uses_ind(d)) {
    m.dcut = n;
    return m;
  }
  visit(d, [&](const FiniteProof& x) {
    if (x.kind() != FpKind::Cut) return;
    Class c = classify(x.formula());
    if (c.kind == Class::Sigma) m.dcut = std::max(m.dcut, c.level);
  });
  return m;
}

FiniteProof fp_subst(const FiniteProof& d, const std::string& v, std::uint64_t m) {
  std::unordered_map<const FpNode*, FiniteProof> memo;
  Term num = Term::num(m);
  std::function<FiniteProof(const FiniteProof&)> go = [&](const FiniteProof& x) {
    auto it = memo.find(x.id());
    if (it != memo.end()) return it->second;
    Sequent g = subst(x.end(), v, num);
    std::vector<FiniteProof> k;
    for (std::size_t i = 0; i < x.children().size(); ++i) {
      bool bound = (x.kind() == FpKind::All && x.var() == v) ||
                   (x.kind() == FpKind::Ind && x.var() == v && i == 1);
      k.push_back(bound ? x.child(i) : go(x.child(i)));
    }
    FiniteProof r = x;
    switch (x.kind()) {
      case FpKind::Ax:
        r = FiniteProof::ax(g);
        break;
      case FpKind::Rep:
        r = FiniteProof::rep(g, k[0]);
        break;
      case FpKind::And:
        r = FiniteProof::conj(g, subst(x.formula(), v, num), k[0], k[1], false);
        break;
      case FpKind::Or:
        r = FiniteProof::disj(g, x.index(), subst(x.formula(), v, num), k[0]);
        break;
      case FpKind::All:
        r = FiniteProof::all(g, x.var(), subst(x.formula(), v, num), k[0]);
        break;
      case FpKind::Ex:
        r = FiniteProof::ex(g, subst_term(x.term(), v, num), subst(x.formula(), v, num), k[0]);
        break;
      case FpKind::Cut:
        r = FiniteProof::cut(g, subst(x.formula(), v, num), k[0], k[1], false);
        break;
      case FpKind::Ind: {
        Formula a = x.var() == v ? x.formula() : subst(x.formula(), v, num);
        r = FiniteProof::ind(g, x.var(), subst_term(x.term(), v, num), a, k[0], k[1], false);
        break;
      }
    }
    memo.emplace(x.id(), r);
    return r;
  };
  return go(d);
}

std::optional<FiniteProof> fp_search_cuts(const Sequent& g,
                                          const std::vector<Formula>& atoms,
                                          int depth) {
  std::map<std::string, std::optional<FiniteProof>> memo;
  std::function<std::optional<FiniteProof>(const Sequent&, int)> go =
      [&](const Sequent& s, int left) -> std::optional<FiniteProof> {
    if (finite_axiom(s)) return FiniteProof::ax(s);
    if (left == 0) return std::nullopt;
    std::string key = std::to_string(left) + s.str();
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    memo[key] = std::nullopt;
    std::set<std::string> fv = free_vars(s);
    for (const Formula& a : atoms) {
      if (s.contains(a) || s.contains(negate(a))) continue;
      bool vars_ok = true;
      for (const std::string& v : free_vars(a)) vars_ok = vars_ok && fv.count(v);
      if (!vars_ok) continue;
      auto d0 = go(s.with(negate(a)), left - 1);
      if (!d0) continue;
      auto d1 = go(s.with(a), left - 1);
      if (!d1) continue;
      FiniteProof r = FiniteProof::cut(s, a, *d0, *d1);
      memo[key] = r;
      return r;
    }
    return std::nullopt;
  };
  return go(g, depth);
}

namespace {

using FP = FiniteProof;

void collect_names(const Formula& a, std::set<std::string>& out) {
  using K = Formula::Kind;
  switch (a.kind()) {
    case K::Atom:
      for (const Term& t : a.args()) if (!t.var.empty()) out.insert(t.var);
      return;
    case K::And:
    case K::Or:
      collect_names(a.left(), out);
      collect_names(a.right(), out);
      return;
    default:
      out.insert(a.var());
      if (!a.bound().var.empty()) out.insert(a.bound().var);
      collect_names(a.body(), out);
  }
}

std::string fresh_for(const std::string& base, std::initializer_list<Formula> fs,
                      const std::set<std::string>& extra = {}) {
  std::set<std::string> avoid = extra;
  for (const Formula& f : fs) collect_names(f, avoid);
  return fresh_var(base, avoid);
}

Sequent plus(const Sequent& g, std::initializer_list<Formula> fs) {
  Sequent r = g;
  for (const Formula& f : fs) r.insert(f);
  return r;
}

Formula le(const Term& a, const Term& b) {
  return Formula::disj(Formula::lt(a, b), Formula::eq(a, b));
}

Formula nle(const Term& a, const Term& b) { return negate(le(a, b)); }

std::vector<Formula> builtin_atoms_over(const std::vector<Term>& ts) {
  std::vector<Formula> r;
  for (const Term& a : ts) {
    r.push_back(Formula::eq(a, a));
    for (const Term& b : ts) {
      if (!(a == b)) r.push_back(Formula::lt(a, b));
    }
  }
  return r;
}

// Proof of g from d proving a subsequent of g + {a}, when box(a) is in g.
FP box_builtin(const Sequent& g, const Formula& a, const FP& d) {
  return FP::cut(g, a, FP::ax(plus(g, {negate(a)})), d);
}

// Proof of g + {box(a and b)} from proofs of g + {box a} and g + {box b}.
FP conj_in_box(const Sequent& g, const Formula& a, const Formula& b, const FP& da,
               const FP& db) {
  Sequent gg = plus(g, {box(Formula::conj(a, b))});
  Formula xa = box(a), xb = box(b);
  Sequent ga = plus(gg, {negate(xa)});
  FP inner = FP::cut(ga, xb, FP::ax(plus(ga, {negate(xb)})), db);
  return FP::cut(gg, xa, inner, da);
}

// Proves g after splitting the boxes of the quantifier-free formulas fs (each
// box(f) in g) into built-in atoms, closing the leaves by atomic cuts.
FP qf_unfold(const Sequent& g, std::vector<Formula> fs, const std::vector<Formula>& pool) {
  using K = Formula::Kind;
  if (fs.empty()) {
    auto d = fp_search_cuts(g, pool, 3);
    if (!d) throw FpError("internal: no atomic proof of " + g.str());
    return *d;
  }
  Formula f = fs.back();
  fs.pop_back();
  if (f.is_builtin()) {
    return FP::cut(g, f, FP::ax(plus(g, {negate(f)})), qf_unfold(plus(g, {f}), fs, pool));
  }
  Formula xa = box(f.left()), xb = box(f.right());
  if (f.kind() == K::Or) {
    Sequent g1 = plus(g, {xa});
    std::vector<Formula> rest = fs;
    rest.push_back(f.left());
    rest.push_back(f.right());
    FP inner = FP::cut(g1, xb, FP::ax(plus(g1, {negate(xb)})),
                       qf_unfold(plus(g1, {xb}), rest, pool));
    return FP::cut(g, xa, FP::ax(plus(g, {negate(xa)})), inner);
  }
  if (f.kind() != K::And) throw FpError("internal: quantifier in qf_unfold");
  Sequent ga = plus(g, {negate(xa)});
  std::vector<Formula> ra = fs, rb = fs;
  ra.push_back(f.left());
  rb.push_back(f.right());
  FP inner = FP::cut(ga, xb, FP::ax(plus(ga, {negate(xb)})),
                     qf_unfold(plus(ga, {xb}), rb, pool));
  return FP::cut(g, xa, inner, qf_unfold(plus(g, {xa}), ra, pool));
}

// Proof of side + {box(forall v<t B)} by induction on w, for bounded B.
// core(ctx) must prove a subsequent of ctx whenever ctx contains side,
// box(Sw not<= t) and box(B[v:=w]).
FP bounded_forall_intro(const Sequent& side, const Formula& a, const std::string& w,
                        const std::function<FP(const Sequent&)>& core) {
  using F = Formula;
  const std::string& v = a.var();
  const Term& t = a.bound();
  const Formula& b = a.body();
  Term W = Term::v(w), SW = W.S();
  Formula c = F::disj(nle(W, t), F::ball(v, W, b));
  Formula ind = box(c);
  Formula i0 = subst(ind, w, Term::zero());
  Formula it = subst(ind, w, t);
  Formula is = subst(ind, w, SW);
  Formula ba = box(a);
  std::vector<Formula> pool = builtin_atoms_over({W, SW, t});

  Sequent gb = plus(side, {i0});
  Formula x0 = box(F::ball(v, Term::zero(), b));
  FP base = FP::cut(gb, x0, FP::ax(plus(gb, {negate(x0)})), FP::ax(plus(gb, {x0})));

  Formula q1 = box(F::ball(v, SW, b));
  Formula nb = box(nle(SW, t));
  Formula pb = box(le(W, t));
  Formula eb = box(F::bex(v, W, negate(b)));
  Formula bwb = box(subst(b, v, W));

  Sequent gs = plus(side, {negate(ind), is});
  Sequent g1 = plus(gs, {q1});
  Sequent g2 = plus(g1, {nb});
  Sequent gp = plus(g2, {negate(pb)});
  Sequent ge = plus(gp, {eb});
  FP e_branch = FP::cut(ge, bwb, FP::ax(plus(ge, {negate(bwb)})), core(plus(ge, {bwb})));
  FP p_left = FP::cut(gp, eb, FP::ax(plus(gp, {negate(eb)})), e_branch);
  FP p_right = qf_unfold(plus(g2, {pb}), {le(W, t), nle(SW, t)}, pool);
  FP p2 = FP::cut(g2, pb, p_left, p_right);
  FP p1 = FP::cut(g1, nb, FP::ax(plus(g1, {negate(nb)})), p2);
  FP step = FP::cut(gs, q1, FP::ax(plus(gs, {negate(q1)})), p1);

  FP induction = FP::ind(plus(side, {it}), w, t, ind, base, step);

  Sequent gf = plus(side, {ba});
  Formula tb = box(le(t, t));
  Sequent l0 = plus(gf, {negate(it)});
  FP left = FP::cut(l0, tb, FP::ax(plus(l0, {negate(tb)})),
                    qf_unfold(plus(l0, {tb}), {le(t, t)}, pool));
  return FP::cut(gf, it, left, induction);
}

// Proves ctx + {box(f)} for a quantifier-free f, given that ctx contains
// box(S w not<= t) and that f follows from w < t or S w not<= t.
FP lt_from_succ(const Sequent& ctx, const Term& w, const Term& t, const Formula& f) {
  std::vector<Formula> pool = builtin_atoms_over({w, w.S(), t});
  return qf_unfold(plus(ctx, {box(f)}), {f, nle(w.S(), t)}, pool);
}

// Proof of {not p, q} where p and q differ only in boxed atoms with equal
// unboxings.
FP bridge(const Formula& p, const Formula& q) {
  using K = Formula::Kind;
  Sequent g{negate(p), q};
  if (p == q || p.is_atom()) {
    if (!q.is_atom()) throw FpError("internal: bridge shape mismatch");
    return FP::ax(g);
  }
  if (p.kind() != q.kind()) throw FpError("internal: bridge shape mismatch");
  Formula np = negate(p);
  switch (p.kind()) {
    case K::And: {
      FP l = FP::disj(Sequent{np, q.left()}, 0, np, bridge(p.left(), q.left()));
      FP r = FP::disj(Sequent{np, q.right()}, 1, np, bridge(p.right(), q.right()));
      return FP::conj(g, q, l, r);
    }
    case K::Or: {
      FP l = FP::disj(Sequent{negate(p.left()), q}, 0, q, bridge(p.left(), q.left()));
      FP r = FP::disj(Sequent{negate(p.right()), q}, 1, q, bridge(p.right(), q.right()));
      return FP::conj(g, np, l, r);
    }
    case K::All:
    case K::Ex: {
      std::set<std::string> avoid;
      collect_names(p, avoid);
      collect_names(q, avoid);
      std::string w = fresh_var(p.var(), avoid);
      Term W = Term::v(w);
      bool occurs = false;
      for (const std::string& v : free_vars(p.body())) occurs = occurs || v == p.var();
      for (const std::string& v : free_vars(q.body())) occurs = occurs || v == q.var();
      Term t = occurs ? W : Term::zero();
      Formula pw = subst(p.body(), p.var(), W), qw = subst(q.body(), q.var(), W);
      Formula pt = subst(p.body(), p.var(), t), qt = subst(q.body(), q.var(), t);
      FP lem = bridge(pt, qt);
      if (p.kind() == K::Ex) {
        FP exn = FP::ex(Sequent{negate(pw), q}, t, q, lem);
        return FP::all(g, w, np, exn);
      }
      FP exn = FP::ex(Sequent{np, qw}, t, np, lem);
      return FP::all(g, w, q, exn);
    }
    default:
      throw FpError("internal: bounded quantifier outside a box");
  }
}

// Proof of g, which contains target, from d proving a subsequent of g + {from}.
FP retarget(const Sequent& g, const Formula& target, const Formula& from, const FP& d,
            int n) {
  if (target == from) return d;
  FP br = bridge(from, target);
  if (in_cumulative_sigma(from, n)) return FP::cut(g, from, br, d);
  if (in_cumulative_sigma(negate(from), n)) return FP::cut(g, negate(from), d, br);
  throw FpError("cannot relate " + from.str() + " to " + target.str() +
                " by a cut within the allowed classes");
}

FP box_lemma(const Formula& a);

FP box_lemma_bounded(const Formula& a) {
  using F = Formula;
  using K = Formula::Kind;
  Formula na = negate(a), ba = box(a);
  Sequent g{na, ba};
  switch (a.kind()) {
    case K::Atom:
      return FP::ax(g);
    case K::And: {
      Formula nb = negate(a.left()), nc = negate(a.right());
      Formula xb = box(a.left()), xc = box(a.right());
      Sequent s{nb, nc, ba};
      FP c1 = FP::cut(plus(s, {negate(xb)}), xc, FP::ax(plus(s, {negate(xb), negate(xc)})),
                      box_lemma(a.right()));
      FP c2 = FP::cut(s, xb, c1, box_lemma(a.left()));
      FP o1 = FP::disj(Sequent{na, nc, ba}, 0, na, c2);
      return FP::disj(g, 1, na, o1);
    }
    case K::Or: {
      auto side = [&](const Formula& p) {
        Formula xp = box(p);
        Sequent s{negate(p), ba};
        return FP::cut(s, xp, FP::ax(plus(s, {negate(xp)})), box_lemma(p));
      };
      return FP::conj(g, na, side(a.left()), side(a.right()));
    }
    case K::BEx: {
      std::string w = fresh_for("w", {a});
      Term W = Term::v(w);
      Formula bw = subst(a.body(), a.var(), W);
      Formula lt = F::lt(W, a.bound()), nlt = F::lt(W, a.bound(), false);
      Sequent gor{na, ba, nlt, negate(bw)};
      Formula x = box(F::conj(lt, bw));
      FP px = conj_in_box(gor, lt, bw, FP::ax(plus(gor, {x, box(lt)})), box_lemma(bw));
      FP top = FP::cut(gor, x, FP::ax(plus(gor, {negate(x)})), px);
      Formula dd = fp_instance(na, W);
      FP o1 = FP::disj(Sequent{na, ba, dd, negate(bw)}, 0, dd, top);
      FP o2 = FP::disj(Sequent{na, ba, dd}, 1, dd, o1);
      return FP::all(g, w, na, o2);
    }
    case K::BAll: {
      std::string w = fresh_for("w", {a});
      Term W = Term::v(w);
      Formula bw = subst(a.body(), a.var(), W);
      Formula lt = F::lt(W, a.bound());
      auto core = [&](const Sequent& ctx) {
        Formula cj = F::conj(lt, negate(bw));
        Sequent gc = plus(ctx, {cj});
        std::vector<Formula> pool = builtin_atoms_over({W, W.S(), a.bound()});
        FP left = qf_unfold(plus(gc, {lt}), {nle(W.S(), a.bound())}, pool);
        FP andn = FP::conj(gc, cj, left, box_lemma(bw));
        return FP::ex(ctx, W, na, andn);
      };
      return bounded_forall_intro(Sequent{na}, a, w, core);
    }
    default:
      throw FpError("unbounded quantifier in a bounded formula");
  }
}

FP box_lemma(const Formula& a) {
  using F = Formula;
  using K = Formula::Kind;
  if (!is_primed(a)) throw FpError("box lemma expects an old-language formula: " + a.str());
  if (is_delta0_primed(a)) return box_lemma_bounded(a);
  Formula na = negate(a), ba = box(a);
  Sequent g{na, ba};
  switch (a.kind()) {
    case K::And: {
      FP l = FP::disj(Sequent{na, box(a.left())}, 0, na, box_lemma(a.left()));
      FP r = FP::disj(Sequent{na, box(a.right())}, 1, na, box_lemma(a.right()));
      return FP::conj(g, ba, l, r);
    }
    case K::Or: {
      FP l = FP::disj(Sequent{negate(a.left()), ba}, 0, ba, box_lemma(a.left()));
      FP r = FP::disj(Sequent{negate(a.right()), ba}, 1, ba, box_lemma(a.right()));
      return FP::conj(g, na, l, r);
    }
    case K::Ex:
    case K::All: {
      std::string w = fresh_for(a.var(), {a});
      bool occurs = false;
      for (const std::string& v : free_vars(a.body())) occurs = occurs || v == a.var();
      Formula bw = subst(a.body(), a.var(), Term::v(w));
      Term t = occurs ? Term::v(w) : Term::zero();
      Formula bt = subst(a.body(), a.var(), t);
      FP lem = box_lemma(bt);
      if (a.kind() == K::Ex) {
        FP exn = FP::ex(Sequent{negate(bw), ba}, t, ba, lem);
        return FP::all(g, w, na, exn);
      }
      FP exn = FP::ex(Sequent{na, box(bw)}, t, na, lem);
      return FP::all(g, w, ba, exn);
    }
    case K::BEx: {
      std::string w = fresh_for("w", {a});
      Term W = Term::v(w);
      Formula bw = subst(a.body(), a.var(), W);
      Formula nlt = F::lt(W, a.bound(), false);
      Formula cw = fp_instance(ba, W);
      Sequent ga{nlt, negate(bw), ba, cw};
      FP andn = FP::conj(ga, cw, FP::ax(Sequent{nlt, box(F::lt(W, a.bound()))}),
                         box_lemma(bw));
      FP exn = FP::ex(Sequent{nlt, negate(bw), ba}, W, ba, andn);
      Formula dd = fp_instance(na, W);
      FP o1 = FP::disj(Sequent{na, ba, dd, negate(bw)}, 0, dd, exn);
      FP o2 = FP::disj(Sequent{na, ba, dd}, 1, dd, o1);
      return FP::all(g, w, na, o2);
    }
    case K::BAll: {
      std::string w = fresh_for("w", {a});
      Term W = Term::v(w);
      Formula bw = subst(a.body(), a.var(), W);
      Formula lt = F::lt(W, a.bound());
      Formula nltb = box(F::lt(W, a.bound(), false));
      Formula cj = F::conj(lt, negate(bw));
      Sequent gc{na, nltb, box(bw), cj};
      FP andn = FP::conj(gc, cj, FP::ax(Sequent{lt, nltb}), box_lemma(bw));
      FP exn = FP::ex(Sequent{na, nltb, box(bw)}, W, na, andn);
      Formula dd = fp_instance(ba, W);
      FP o1 = FP::disj(Sequent{na, dd, box(bw)}, 0, dd, exn);
      FP o2 = FP::disj(Sequent{na, dd}, 1, dd, o1);
      return FP::all(g, w, ba, o2);
    }
    default:
      throw FpError("unexpected formula in the box lemma");
  }
}

Sequent box_sequent(const Sequent& g) {
  Sequent r;
  for (const Formula& f : g.items()) r.insert(box(f));
  return r;
}

struct Importer {
  int n;
  std::unordered_map<const FpNode*, FP> memo;

  FP run(const FP& d) {
    auto it = memo.find(d.id());
    if (it != memo.end()) return it->second;
    FP r = step(d);
    memo.emplace(d.id(), r);
    return r;
  }

  FP step(const FP& d) {
    using F = Formula;
    Sequent gb = box_sequent(d.end());
    switch (d.kind()) {
      case FpKind::Ax: {
        std::vector<Formula> atoms;
        for (const Formula& f : d.end().items()) {
          if (f.is_builtin()) atoms.push_back(f);
        }
        Sequent full = gb;
        for (const Formula& a : atoms) full.insert(a);
        FP r = FP::ax(full);
        for (std::size_t i = atoms.size(); i-- > 0;) {
          Sequent g = gb;
          for (std::size_t j = 0; j < i; ++j) g.insert(atoms[j]);
          r = box_builtin(g, atoms[i], r);
        }
        return r;
      }
      case FpKind::Rep:
        return FP::rep(gb, run(d.child(0)));
      case FpKind::And: {
        const Formula& a = d.formula();
        FP d0 = run(d.child(0)), d1 = run(d.child(1));
        if (!is_delta0_primed(a)) return FP::conj(gb, box(a), d0, d1);
        Formula xa = box(a.left()), xb = box(a.right());
        Sequent ga = plus(gb, {negate(xa)});
        FP inner = FP::cut(ga, xb, FP::ax(plus(ga, {negate(xb)})), d1);
        return FP::cut(gb, xa, inner, d0);
      }
      case FpKind::Or: {
        const Formula& a = d.formula();
        FP d0 = run(d.child(0));
        if (!is_delta0_primed(a)) return FP::disj(gb, d.index(), box(a), d0);
        Formula xi = box(d.index() == 0 ? a.left() : a.right());
        return FP::cut(gb, xi, FP::ax(plus(gb, {negate(xi)})), d0);
      }
      case FpKind::All: {
        Formula a = d.formula();
        FP d0 = run(d.child(0));
        if (!is_delta0_primed(a)) return FP::all(gb, d.var(), box(a), d0);
        const std::string& v = d.var();
        if (a.var() == v) {
          std::string x = fresh_for(a.var(), {a}, {v});
          a = F::ball(x, a.bound(), subst(a.body(), a.var(), Term::v(x)));
        }
        Term V = Term::v(v);
        Formula bv = subst(a.body(), a.var(), V);
        Formula dv = box(F::disj(F::lt(V, a.bound(), false), bv));
        auto core = [&](const Sequent& ctx) {
          Sequent k = plus(ctx, {negate(dv)});
          Formula pt = box(F::lt(V, a.bound()));
          FP left = FP::cut(k, pt, FP::ax(plus(k, {negate(pt)})),
                            lt_from_succ(k, V, a.bound(), F::lt(V, a.bound())));
          return FP::cut(ctx, dv, left, d0);
        };
        return bounded_forall_intro(gb, a, v, core);
      }
      case FpKind::Ex: {
        const Formula& a = d.formula();
        FP d0 = run(d.child(0));
        if (!is_delta0_primed(a)) {
          Formula ba = box(a);
          Formula p = fp_instance(ba, d.term());
          Formula q = box(fp_instance(a, d.term()));
          return FP::ex(gb, d.term(), ba, retarget(plus(gb, {p}), p, q, d0, n));
        }
        Formula x = box(fp_instance(a, d.term()));
        return FP::cut(gb, x, FP::ax(plus(gb, {negate(x)})), d0);
      }
      case FpKind::Cut:
        return FP::cut(gb, box(d.formula()), run(d.child(0)), run(d.child(1)));
      default: {
        const Formula& a = d.formula();
        const std::string& v = d.var();
        Formula ba = box(a);
        Term V = Term::v(v);
        Formula p0 = subst(ba, v, Term::zero()), q0 = box(subst(a, v, Term::zero()));
        Formula ps = subst(ba, v, V.S()), qs = box(subst(a, v, V.S()));
        Formula pt = subst(ba, v, d.term()), qt = box(subst(a, v, d.term()));
        FP base = retarget(plus(gb, {p0}), p0, q0, run(d.child(0)), n);
        FP step = retarget(plus(gb, {negate(ba), ps}), ps, qs, run(d.child(1)), n);
        FP ind = FP::ind(plus(gb, {pt}), v, d.term(), ba, base, step);
        return retarget(gb, qt, pt, ind, n);
      }
    }
  }
};

}  // namespace

FiniteProof fp_box_lemma(const Formula& a) { return box_lemma(a); }

FiniteProof fp_import_primed(const FiniteProof& d, int n) {
  if (auto diag = fp_check_primed(d, n)) {
    throw FpError("input is not a proof at " + diag->path + ": " + diag->message);
  }
  Importer im{n, {}};
  return im.run(d);
}

namespace {

Sequent sequent_of(const Sexp& e) {
  if (!e.list || e.head() != "seq") throw FpError("expected (seq ...), got " + e.str());
  Sequent g;
  for (std::size_t i = 1; i < e.items.size(); ++i) g.insert(formula_of(e.items[i]));
  return g;
}

bool is_seq(const Sexp& e) { return e.list && !e.items.empty() && e.head() == "seq"; }

Sequent minus(const Sequent& g, std::initializer_list<Formula> fs) {
  Sequent r = g;
  for (const Formula& f : fs) r = r.without(f);
  return r;
}

FP proof_of(const Sexp& e, bool pad) {
  if (!e.list || e.items.empty()) throw FpError("bad proof node " + e.str());
  const std::string& h = e.head();
  std::size_t n = e.items.size();
  bool annotated = is_seq(e.items.back());
  std::optional<Sequent> given;
  if (annotated) given = sequent_of(e.items.back());
  std::size_t core = annotated ? n - 1 : n;
  auto need = [&](std::size_t k) {
    if (core != k) throw FpError("wrong number of fields in " + h + " node");
  };
  auto sub = [&](std::size_t i) { return proof_of(e.items[i], pad); };
  auto fm = [&](std::size_t i) { return formula_of(e.items[i]); };
  auto name = [&](std::size_t i) {
    if (e.items[i].list) throw FpError("expected a variable in " + h + " node");
    return e.items[i].atom;
  };
  if (h == "ax") {
    if (!given) throw FpError("ax node needs a (seq ...) annotation");
    need(1);
    return FP::ax(*given);
  }
  if (h == "rep") {
    need(2);
    FP d0 = sub(1);
    return FP::rep(given ? *given : d0.end(), d0);
  }
  if (h == "and") {
    need(4);
    Formula a = fm(1);
    if (a.kind() != Formula::Kind::And) throw FpError("and node needs a conjunction");
    FP d0 = sub(2), d1 = sub(3);
    Sequent g = given ? *given
                      : minus(d0.end(), {a.left()}).unite(minus(d1.end(), {a.right()})).with(a);
    return FP::conj(g, a, d0, d1, pad);
  }
  if (h == "or") {
    need(4);
    if (e.items[1].list) throw FpError("or node needs an index");
    int i = std::stoi(e.items[1].atom);
    Formula a = fm(2);
    if (a.kind() != Formula::Kind::Or) throw FpError("or node needs a disjunction");
    FP d0 = sub(3);
    Sequent g = given ? *given : minus(d0.end(), {i == 0 ? a.left() : a.right()}).with(a);
    return FP::disj(g, i, a, d0);
  }
  if (h == "all") {
    need(4);
    std::string v = name(1);
    Formula a = fm(2);
    FP d0 = sub(3);
    Sequent g = given ? *given : minus(d0.end(), {fp_instance(a, Term::v(v))}).with(a);
    return FP::all(g, v, a, d0);
  }
  if (h == "ex") {
    need(4);
    Term t = term_of(e.items[1]);
    Formula a = fm(2);
    FP d0 = sub(3);
    Sequent g = given ? *given : minus(d0.end(), {fp_instance(a, t)}).with(a);
    return FP::ex(g, t, a, d0);
  }
  if (h == "cut") {
    need(4);
    Formula a = fm(1);
    FP d0 = sub(2), d1 = sub(3);
    Sequent g = given ? *given : minus(d0.end(), {negate(a)}).unite(minus(d1.end(), {a}));
    return FP::cut(g, a, d0, d1, pad);
  }
  if (h == "ind") {
    need(6);
    std::string v = name(1);
    Term t = term_of(e.items[2]);
    Formula a = fm(3);
    FP d0 = sub(4), d1 = sub(5);
    Term var = Term::v(v);
    Sequent g = given ? *given
                      : minus(d0.end(), {subst(a, v, Term::zero())})
                            .unite(minus(d1.end(), {negate(a), subst(a, v, var.S())}))
                            .with(subst(a, v, t));
    return FP::ind(g, v, t, a, d0, d1, pad);
  }
  throw FpError("unknown proof node '" + h + "'");
}

void print_node(const FP& d, int indent, std::string& out) {
  std::string pad(indent, ' ');
  out += pad + "(" + fp_kind_name(d.kind());
  switch (d.kind()) {
    case FpKind::Ax:
    case FpKind::Rep:
      break;
    case FpKind::Or:
      out += " " + std::to_string(d.index()) + " " + d.formula().str();
      break;
    case FpKind::All:
      out += " " + d.var() + " " + d.formula().str();
      break;
    case FpKind::Ex:
      out += " " + d.term().str() + " " + d.formula().str();
      break;
    case FpKind::Ind:
      out += " " + d.var() + " " + d.term().str() + " " + d.formula().str();
      break;
    default:
      out += " " + d.formula().str();
  }
  for (const FP& k : d.children()) {
    out += "\n";
    print_node(k, indent + 2, out);
  }
  out += "\n" + pad + "  (seq";
  for (const Formula& f : d.end().items()) out += " " + f.str();
  out += "))";
}

}  // namespace

FiniteProof parse_proof(const std::string& text, bool pad) {
  return proof_of(parse_sexp(text), pad);
}

std::string print_proof(const FiniteProof& d) {
  std::string out;
  print_node(d, 0, out);
  return out + "\n";
}

}  // namespace ordproof
