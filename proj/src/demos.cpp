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

#include "ordproof/demos.hpp"

namespace ordproof {

namespace {

using F = Formula;
using FP = FiniteProof;

Term num(std::uint64_t n) { return Term::num(n); }

// {R} from the atom it boxes, by a cut against a bounded-logic axiom.
FP box_atom(const Formula& boxed, const FP& atom_proof) {
  Formula a = unbox(boxed);
  Sequent g{boxed};
  return FP::cut(g, a, FP::ax(Sequent{boxed, negate(a)}), atom_proof);
}

}  // namespace

Formula demo_add_goal(std::uint64_t a, std::uint64_t b) {
  Formula m = box(F::add(Term::v("x"), Term::v("y"), Term::v("z")));
  return F::ex("z", subst_many(m, {{"x", num(a)}, {"y", num(b)}}));
}

Formula demo_refl_goal() { return F::ex("z", box(F::eq(Term::v("z"), Term::v("z")))); }

Formula demo_eq_goal(const Term& v) {
  Formula m = box(F::eq(Term::v("v"), Term::v("z")));
  return F::ex("z", subst(m, "v", v));
}

FiniteProof demo_add_fact(std::uint64_t a, std::uint64_t b) {
  FP d = FP::ax(Sequent{F::add(num(a), num(0), num(a))});
  for (std::uint64_t i = 1; i <= b; ++i) {
    Formula prev = F::add(num(a), num(i - 1), num(a + i - 1));
    Formula cur = F::add(num(a), num(i), num(a + i));
    d = FP::cut(Sequent{cur}, prev, FP::ax(Sequent{negate(prev), cur}), d);
  }
  return d;
}

FiniteProof demo_add(std::uint64_t a, std::uint64_t b) {
  Formula goal = demo_add_goal(a, b);
  Formula inst = fp_instance(goal, num(a + b));
  return FP::ex(Sequent{goal}, num(a + b), goal, box_atom(inst, demo_add_fact(a, b)));
}

FiniteProof demo_refl() {
  Formula goal = demo_refl_goal();
  Formula inst = fp_instance(goal, num(0));
  return FP::ex(Sequent{goal}, num(0), goal,
                box_atom(inst, FP::ax(Sequent{F::eq(num(0), num(0))})));
}

FiniteProof demo_ind(std::uint64_t t) {
  Term v = Term::v("v");
  Term w = Term::v("w");
  Formula a = demo_eq_goal(v);

  Formula a0 = demo_eq_goal(num(0));
  FP base = FP::ex(Sequent{a0}, num(0), a0,
                   box_atom(fp_instance(a0, num(0)), FP::ax(Sequent{F::eq(num(0), num(0))})));

  Formula na = negate(a);
  Formula as = demo_eq_goal(v.S());
  Formula r = fp_instance(a, w);
  Formula rs = fp_instance(as, w.S());
  Formula e = F::eq(v, w);
  Formula es = F::eq(v.S(), w.S());
  Sequent inner{negate(r), rs};
  FP lhs = FP::cut(inner.with(negate(e)), es, FP::ax(Sequent{rs, negate(es)}),
                   FP::ax(Sequent{negate(e), es}));
  FP core = FP::cut(inner, e, lhs, FP::ax(Sequent{negate(r), e}));
  FP ex = FP::ex(Sequent{negate(r), as}, w.S(), as, core);
  FP step = FP::all(Sequent{na, as}, "w", na, ex);

  return FP::ind(Sequent{demo_eq_goal(num(t))}, "v", num(t), a, base, step);
}

FiniteProof demo_sigma1_cut(std::uint64_t a, std::uint64_t b) {
  Formula goal = demo_refl_goal();
  Formula c = demo_add_goal(a, b);
  return FP::cut(Sequent{goal}, c, demo_refl(), demo_add(a, b));
}

FiniteProof demo_sigma2_detour(std::uint64_t a, std::uint64_t b) {
  Formula goal = demo_add_goal(a, b);
  Formula c = F::ex("x", F::all("y", box(F::lt(Term::v("y"), Term::v("x")))));
  FP d = demo_add(a, b);
  FP right = FP::ex(Sequent{goal, c}, num(0), c, d);
  return FP::cut(Sequent{goal}, c, d, right);
}

}  // namespace ordproof
