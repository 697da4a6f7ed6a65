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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ordproof/language.hpp"

using namespace ordproof;

namespace {

Formula P(const char* s) { return parse_formula(s); }
Sequent G(const char* s) { return parse_sequent(s); }
Bound K(long v) { return Bound::concrete(BigInt(v)); }

using Env = std::map<std::string, std::uint64_t>;

std::uint64_t val(const Term& t, const Env& env) {
  return (t.var.empty() ? 0 : env.at(t.var)) + t.succ;
}

// Evaluates under an environment instead of by substitution.
bool oracle_eval(const Formula& f, const Env& env) {
  using FK = Formula::Kind;
  switch (f.kind()) {
    case FK::Atom: {
      if (f.is_boxed()) {
        Env inner;
        for (std::size_t i = 0; i < f.args().size(); ++i)
          inner["#" + std::to_string(i)] = val(f.args()[i], env);
        return oracle_eval(f.box_body(), inner);
      }
      std::vector<std::uint64_t> a;
      for (const Term& t : f.args()) a.push_back(val(t, env));
      bool v = false;
      switch (f.rel()) {
        case Rel::Eq: v = a[0] == a[1]; break;
        case Rel::Lt: v = a[0] < a[1]; break;
        case Rel::Add: v = a[0] + a[1] == a[2]; break;
        case Rel::Mult: v = a[0] * a[1] == a[2]; break;
        default: FAIL("special atom");
      }
      return f.positive() ? v : !v;
    }
    case FK::And:
      return oracle_eval(f.left(), env) && oracle_eval(f.right(), env);
    case FK::Or:
      return oracle_eval(f.left(), env) || oracle_eval(f.right(), env);
    case FK::BAll:
    case FK::BEx: {
      std::uint64_t n = val(f.bound(), env);
      bool any = false, all = true;
      for (std::uint64_t i = 0; i < n; ++i) {
        Env e = env;
        e[f.var()] = i;
        bool b = oracle_eval(f.body(), e);
        any = any || b;
        all = all && b;
      }
      return f.kind() == FK::BAll ? all : any;
    }
    default:
      FAIL("unbounded quantifier");
      return false;
  }
}

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(unsigned seed) : rng(seed) {}
  int pick(int n) { return static_cast<int>(rng() % n); }

  Term term(const std::vector<std::string>& vars) {
    Term t = vars.empty() || pick(3) == 0 ? Term::num(pick(4))
                                          : Term::v(vars[pick(vars.size())]);
    if (pick(3) == 0) t = t.S();
    return t;
  }

  Formula atom(const std::vector<std::string>& vars) {
    bool pos = pick(2);
    switch (pick(4)) {
      case 0: return Formula::eq(term(vars), term(vars), pos);
      case 1: return Formula::lt(term(vars), term(vars), pos);
      case 2: return Formula::add(term(vars), term(vars), term(vars), pos);
      default: return Formula::mult(term(vars), term(vars), term(vars), pos);
    }
  }

  Formula bounded(std::vector<std::string> vars, int depth) {
    if (depth == 0 || pick(3) == 0) return atom(vars);
    switch (pick(4)) {
      case 0: return Formula::conj(bounded(vars, depth - 1), bounded(vars, depth - 1));
      case 1: return Formula::disj(bounded(vars, depth - 1), bounded(vars, depth - 1));
      default: {
        std::string x = "b" + std::to_string(depth);
        Term bound = term(vars);
        vars.push_back(x);
        Formula body = bounded(vars, depth - 1);
        return pick(2) ? Formula::ball(x, bound, body) : Formula::bex(x, bound, body);
      }
    }
  }
};

Formula close(const Formula& f, Gen& g) {
  std::map<std::string, Term> s;
  for (const std::string& v : free_vars(f)) s[v] = Term::num(g.pick(5));
  return subst_many(f, s);
}

}  // namespace

TEST_CASE("terms and parsing") {
  CHECK(parse_term("(S (S 0))") == Term::num(2));
  CHECK(parse_term("(S x)").depth() == 1);
  CHECK(parse_term("3").closed());
  CHECK_THROWS_AS(parse_formula("(= 1)"), LanguageError);
  CHECK_THROWS_AS(parse_formula("(and (in-N 1) (= 0 0))"), LanguageError);
  CHECK_THROWS_AS(parse_formula("(ex x (not-in-N x))"), LanguageError);
  CHECK_THROWS_AS(parse_formula("(ball x (S x) (= x x))"), LanguageError);
  CHECK_THROWS_AS(parse_formula("(box (ex x (= x y)))"), LanguageError);
  for (const char* s :
       {"(and (= x 0) (or (< x y) (!add x y z)))", "(all x (ex y (mult x y 3)))",
        "(box (ball v x (< v x)) (3))", "(not-in-N 4)",
        "(ex z (box (add _0 _1 _2) (x y z)))"}) {
    Formula f = P(s);
    CHECK(parse_formula(f.str()) == f);
  }
}

TEST_CASE("negation") {
  Formula p = P("(< x y)"), q = P("(add x y z)");
  CHECK(negate(Formula::conj(p, q)) == Formula::disj(negate(p), negate(q)));
  CHECK(negate(Formula::in_n(Term::num(5))) == Formula::not_in_n(Term::num(5)));
  Formula a = P("(all x (ex y (box (or (= x y) (bex v x (= v y))))))");
  CHECK(negate(negate(a)) == a);
  CHECK(classify(a) == Class{Class::Pi, 2});
  CHECK(classify(negate(a)) == Class{Class::Sigma, 2});
  Formula b = P("(box (< x y))");
  CHECK(negate(b) == P("(box (!< x y))"));
  CHECK(negate(b).is_boxed());
}

TEST_CASE("substitution") {
  Formula b = P("(box (< x y))");
  Formula r = subst(b, "x", Term::num(1));
  CHECK(r == P("(box (< x y) (1 y))"));
  CHECK(r.box_body() == b.box_body());
  Formula all = P("(all x (= x x))");
  CHECK(subst(all, "x", Term::v("t")) == all);
  CHECK(subst(P("(ex z (add x x z))"), "x", Term::num(2)) == P("(ex z (add 2 2 z))"));
  Formula cap = subst(P("(ex y (< x y))"), "x", Term::v("y"));
  CHECK(cap.kind() == Formula::Kind::Ex);
  CHECK(cap.var() != "y");
  CHECK(free_vars(cap) == std::vector<std::string>{"y"});
  CHECK(cap == P("(ex w (< y w))"));
  CHECK(P("(ex a (= a 0))") == P("(ex b (= b 0))"));
  CHECK(P("(box (< u v) (1 2))") == P("(box (< a b) (1 2))"));
  CHECK(P("(box (< u v) (v u) (1 2))") == P("(box (< a b) (2 1))"));
}

TEST_CASE("classification") {
  CHECK(classify(P("(box (= x 0))")) == Class{Class::Delta0Proper});
  CHECK(classify(P("(ex x (= x 0))")) == Class{Class::Sigma, 1});
  CHECK(classify(P("(all x (ex y (= x y)))")) == Class{Class::Pi, 2});
  CHECK(classify(P("(in-N 3)")) == Class{Class::SpecialInN});
  CHECK(classify(P("(not-in-N 3)")) == Class{Class::SpecialNotInN});
  CHECK(classify(P("(and (= x 0) (= x 1))")) == Class{Class::Outside});
  CHECK(classify(P("(ex x (ex y (= x y)))")) == Class{Class::Outside});
  CHECK(in_cumulative_sigma(P("(in-N 3)"), 0));
  CHECK(!in_cumulative_sigma(P("(not-in-N 3)"), 5));
  CHECK(!in_cumulative_sigma(P("(ex x (= x 0))"), 0));
  CHECK(in_cumulative_sigma(P("(ex x (= x 0))"), 1));
  CHECK(!in_cumulative_sigma(P("(all x (= x 0))"), 3));
}

TEST_CASE("closed evaluation") {
  CHECK(eval_closed(P("(add 2 2 4)")));
  CHECK(eval_closed(P("(box (ball v x (< v x)) (3))")));
  CHECK(!eval_closed(P("(= 0 (S 0))")));
  CHECK(eval_closed(P("(!mult 2 3 5)")));
  CHECK(!eval_closed(P("(box (bex v x (mult v v x)) (5))")));
  CHECK(eval_closed(P("(box (bex v x (mult v v x)) (9))")));
  CHECK_THROWS_AS(eval_closed(P("(= x 0)")), LanguageError);
  CHECK_THROWS_AS(eval_closed(P("(in-N 0)")), LanguageError);
  CHECK_THROWS_AS(eval_closed(P("(and (= 0 0) (= 0 0))")), LanguageError);
}

TEST_CASE("boxing") {
  Formula lt = P("(< x y)");
  CHECK(box(lt) == P("(box (< x y) (x y))"));
  Formula e = P("(ex z (add x y z))");
  CHECK(box(e) == Formula::ex("z", P("(box (add x y z) (x y z))")));
  for (const char* s : {"(ex z (add x y z))", "(ball v x (ex w (< v w)))",
                        "(bex v x (all w (= w v)))", "(and (< x y) (all w (= w w)))"}) {
    Formula a = P(s);
    CHECK(box(negate(a)) == negate(box(a)));
  }
  CHECK(box(P("(ball v x (ex w (< v w)))")) ==
        P("(all v (or (box (!< v x)) (ex w (box (< v w)))))"));
}

TEST_CASE("random bounded formulas agree with the oracle") {
  Gen g(11);
  for (int i = 0; i < 600; ++i) {
    Formula f = g.bounded({"x", "y"}, 3);
    Formula c = close(f, g);
    bool expect = oracle_eval(c, {});
    CHECK(eval_primed(c) == expect);
    Formula cb = close(box(f), g);
    CHECK(eval_closed(cb) == oracle_eval(cb, {}));
    Formula bc = box(c);
    CHECK(eval_closed(bc) == expect);
    CHECK(eval_closed(negate(bc)) == !expect);
    CHECK(negate(negate(f)) == f);
    // box then substitute agrees with substitute then box
    std::map<std::string, Term> s;
    for (const std::string& v : free_vars(f)) s[v] = Term::num(g.pick(5));
    CHECK(eval_closed(subst_many(box(f), s)) == eval_closed(box(subst_many(f, s))));
  }
}

TEST_CASE("k of a sequent") {
  CHECK(k_of(G("(ex x (= x 0))")) == 1);
  CHECK(k_of(G("(not-in-N 5) (= 0 0)")) == 5);
  CHECK(k_of(G("(not-in-N 2) (not-in-N 7)")) == 7);
}

TEST_CASE("axiom recognition") {
  CHECK(is_axiom(G("(= 1 1) (< 0 0)")) == AxiomKind::Elementary);
  CHECK(is_axiom(G("(< 0 1) (!< 0 1)")) == AxiomKind::Logical);
  CHECK(is_axiom(G("(not-in-N 5) (in-N 6)")) == AxiomKind::NAxiom);
  CHECK(is_axiom(G("(not-in-N 5) (in-N 5)")) == AxiomKind::NAxiom);
  CHECK(!is_axiom(G("(not-in-N 5) (in-N 7)")));
  CHECK(is_axiom(G("(< x y) (!< x y)")) == AxiomKind::Logical);
  CHECK(is_axiom(G("(!= a b) (= b a)")) == AxiomKind::Elementary);
  CHECK(is_axiom(G("(!< u (S v)) (< u v) (= u v) (= 0 1)")) == AxiomKind::Elementary);
  CHECK(is_axiom(G("(!mult x y w) (!add w x z) (mult x (S y) z)")) ==
        AxiomKind::Elementary);
  CHECK(is_axiom(G("(add 2 3 5)")) == AxiomKind::TruthAxiom);
  CHECK(!is_axiom(G("(add 2 3 6)")));
  CHECK(!is_axiom(G("(= x y)")));
  CHECK(!is_axiom(Sequent{}));

  CHECK(is_axiom(G("(< x y) (box (!< x y))")) == AxiomKind::BoundedLogic);
  CHECK(is_axiom(G("(box (and (= x 0) (< x y))) (box (!= x 0)) (box (!< x y))")) ==
        AxiomKind::BoundedLogic);
  CHECK(is_axiom(G("(box (or (= x 0) (< x y))) (box (!< x y))")) ==
        AxiomKind::BoundedLogic);
  CHECK(is_axiom(G("(box (ball v 0 (= v x)))")) == AxiomKind::BoundedLogic);
  CHECK(is_axiom(G("(box (bex v y (= v x))) (box (or (!< t y) (!= t x)))")) ==
        AxiomKind::BoundedLogic);
  CHECK(is_axiom(G("(box (ball v (S t) (= v x))) (box (bex v t (!= v x))) "
                   "(box (!= t x))")) == AxiomKind::BoundedLogic);
  CHECK(!is_axiom(G("(box (ball v (S t) (= v x))) (box (bex v t (!= v x)))")));
}

TEST_CASE("closed axiom instances contain a true prime formula") {
  Gen g(5);
  for (const Sequent& ax : elementary_axioms()) {
    CHECK(is_axiom(ax) == AxiomKind::Elementary);
    for (int i = 0; i < 60; ++i) {
      std::map<std::string, Term> s;
      for (const std::string& v : free_vars(ax)) s[v] = Term::num(g.pick(5));
      Sequent c;
      for (const Formula& f : ax.items()) c.insert(subst_many(f, s));
      bool some = false;
      for (const Formula& f : c.items()) some = some || eval_closed(f);
      INFO(c.str());
      CHECK(some);
      CHECK(is_axiom(c).has_value());
    }
  }
  for (int i = 0; i < 300; ++i) {
    Formula a = g.bounded({"x"}, 2), b = g.bounded({"x"}, 2);
    Term t = Term::num(g.pick(4));
    std::vector<Sequent> insts = {
        {box(Formula::conj(a, b)), box(negate(a)), box(negate(b))},
        {box(Formula::disj(a, b)), box(negate(a))},
        {box(Formula::disj(a, b)), box(negate(b))},
        {box(Formula::ball("v", Term::zero(), subst(a, "x", Term::v("v"))))},
        {box(Formula::ball("v", t.S(), subst(a, "x", Term::v("v")))),
         box(Formula::bex("v", t, subst(negate(a), "x", Term::v("v")))),
         box(subst(negate(a), "x", t))},
        {box(Formula::bex("v", Term::v("y"), subst(a, "x", Term::v("v")))),
         box(Formula::disj(Formula::lt(t, Term::v("y"), false),
                           subst(negate(a), "x", t)))},
    };
    for (const Sequent& inst : insts) {
      INFO(inst.str());
      REQUIRE(is_axiom(inst).has_value());
      Sequent c;
      std::map<std::string, Term> s = {{"x", Term::num(g.pick(4))},
                                        {"y", Term::num(g.pick(4))}};
      for (const Formula& f : inst.items()) c.insert(subst_many(f, s));
      bool some = false;
      for (const Formula& f : c.items()) some = some || eval_closed(f);
      CHECK(some);
    }
  }
}

TEST_CASE("bounded truth") {
  CHECK(true_bounded(P("(in-N 1)"), K(27)).kind == Truth::True);
  CHECK(true_bounded(P("(in-N 2)"), K(27)).kind == Truth::False);
  CHECK(true_bounded(P("(not-in-N 0)"), K(1000)).kind == Truth::False);
  Truth t = true_bounded(P("(ex z (add 2 2 z))"), K(1000000));
  CHECK(t.kind == Truth::True);
  CHECK(t.witness == 4u);
  CHECK(true_bounded(P("(ex z (add 2 2 z))"), K(243)).kind == Truth::False);
  CHECK(true_bounded(P("(ex z (add 2 2 z))"), K(244)).kind == Truth::True);
  CHECK(true_bounded(P("(ex z (= z 0))"), K(3)).kind == Truth::False);
  CHECK(true_bounded(P("(ex z (= z 100))"), K(1000000), 5).kind == Truth::Exhausted);
  CHECK(true_bounded(P("(ex z (= z 100))"), K(100), 50).kind == Truth::False);
  SymBound huge{{{Ordinal::omega(), BigInt(3)}}};
  CHECK(true_bounded(P("(ex z (add 2 2 z))"), Bound::symbolic(huge)).witness == 4u);
  CHECK_THROWS_AS(true_bounded(P("(all z (= z z))"), K(10)), LanguageError);
  CHECK_THROWS_AS(true_bounded(P("(ex z (= z x))"), K(10)), LanguageError);

  CHECK(true_bounded_sequent(G("(not-in-N 3)"), K(1000000)).kind == Truth::False);
  CHECK(true_bounded_sequent(Sequent{}, K(5)).kind == Truth::False);
  CHECK(is_sigma1_sequent(Sequent{}));
  CHECK(!is_sigma1_sequent(G("(all x (= x x))")));
  CHECK(is_sigma1_sequent(G("(not-in-N 3) (ex x (= x 1)) (in-N 2)")));
  Truth s = true_bounded_sequent(G("(ex z (= z 100)) (= 0 0)"), K(1000000), 50);
  CHECK(s.kind == Truth::True);
  CHECK(true_bounded_sequent(G("(ex z (= z 100)) (= 0 1)"), K(1000000), 5).kind ==
        Truth::Exhausted);
}

TEST_CASE("truth is monotone") {
  Gen g(23);
  for (int i = 0; i < 300; ++i) {
    auto pick_formula = [&]() {
      switch (g.pick(3)) {
        case 0: return Formula::in_n(Term::num(g.pick(6)));
        case 1: return close(Formula::ex("z", g.bounded({"z"}, 1)), g);
        default: return close(g.atom({}), g);
      }
    };
    Sequent a;
    for (int j = g.pick(3); j >= 0; --j) a.insert(pick_formula());
    Sequent b = a;
    for (int j = g.pick(3); j > 0; --j) b.insert(pick_formula());
    long k1 = 1 + g.pick(3000);
    long k2 = k1 + g.pick(3000);
    Truth t1 = true_bounded_sequent(a, K(k1), 200);
    Truth t2 = true_bounded_sequent(b, K(k2), 200);
    if (t1.kind == Truth::True) {
      INFO(a.str() << " / " << b.str());
      CHECK(t2.kind == Truth::True);
    }
  }
}
