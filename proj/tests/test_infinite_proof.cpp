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

#include <chrono>
#include <set>

#include "ordproof/demos.hpp"
#include "ordproof/infinite_proof.hpp"
#include "support.hpp"

using namespace ordproof;

namespace {

using FP = FiniteProof;
using IP = InfProof;
using F = Formula;
using support::all_refl;
using support::and_proof;
using support::corpus;
using support::height1;
using support::or_proof;

Formula P(const char* s) { return parse_formula(s); }
Sequent G(const char* s) { return parse_sequent(s); }
Ordinal O(const char* s) { return parse_ordinal(s); }
Ordinal w_times(std::uint64_t c) { return ord_mul_nat(Ordinal::omega(), BigInt(c)); }

bool proper(const IP& p) {
  auto d = ip_check_proper(p);
  if (d) MESSAGE(d->path << ": " << d->message);
  return !d;
}

IP embed_min(const FP& d, int n = 0) { return IP::embed(d, fp_dterm(d), n); }

Sequent with_bounds(Sequent g, std::uint64_t m) {
  for (std::uint64_t i = 0; i <= m; ++i) g.insert(F::not_in_n(Term::num(i)));
  return g;
}

}  // namespace

TEST_CASE("metrics") {
  IP p = IP::embed(height1(), 2);
  CHECK(ip_pord(p) == w_times(3));
  CHECK(ip_pend(p) == with_bounds(G("(= 0 0)"), 2));
  CHECK(ip_dacc(p) == 0);

  IP e = IP::e(p);
  CHECK(ip_pord(e) == Ordinal::omega_pow(w_times(3)));
  CHECK(ip_dacc(e) == 1);

  IP q = IP::embed(demo_sigma2_detour(2, 2), fp_dterm(demo_sigma2_detour(2, 2)), 2);
  CHECK(ip_dcut(q) == 2);
  CHECK(ip_dcut(IP::e0(q)) == 1);
  CHECK(ip_dcut(IP::e(IP::e0(q))) == 0);

  IP e0 = IP::e0(p);
  CHECK(ip_pord(e0) == Ordinal::omega_pow(Ordinal(3)));

  Sequent axg{F::not_in_n(Term::num(3)), F::in_n(Term::num(4))};
  IP ax = IP::axn(axg, Ordinal(5));
  IP acc = IP::acc(3, sd_const(SdConst::Id, Ordinal(6)), ax);
  CHECK(ip_pend(acc) == axg.with(F::not_in_n(Term::num(2))));
  CHECK(ip_pend(IP::acc(0, sd_const(SdConst::Id, Ordinal(6)), ax)) == axg);
  CHECK(ip_pord(acc) == Ordinal(6));

  IP r = IP::red(demo_add_goal(2, 2), IP::e0(IP::embed(demo_ind(2), 2)),
                 IP::e0(IP::embed(demo_add(2, 2), 4)));
  CHECK(ip_pord(r) == ip_pord(r.child(0)) + ip_pord(r.child(1)));
  CHECK(ip_dacc(r) == 1);

  CHECK_THROWS_AS(IP::axn(G("(= 0 0)"), Ordinal(3)), IpError);
  CHECK_THROWS_AS(IP::axn(axg, Ordinal(1)), IpError);
  CHECK_THROWS_AS(IP::embed(FP::ax(G("(= x x)")), 0), IpError);
  CHECK_THROWS_AS(IP::cut(P("(not-in-N 0)"), ax, ax), IpError);
  CHECK_THROWS_AS(IP::red(P("(= 0 0)"), ax, ax), IpError);
  CHECK_THROWS_AS(IP::inv(0, P("(ex x (= x x))"), ax), IpError);

  IP big = IP::e0(IP::e(p));
  CHECK_THROWS_AS(ip_pord(big), IpError);
  CHECK_THROWS_AS(ip_metrics(big), IpError);
}

TEST_CASE("embedding terms") {
  FP d = all_refl();
  const FP& d0 = d.child(0);

  IP u0 = ip_univ("x", d0, 0, 0);
  CHECK(u0.kind() == IpKind::Acc);
  CHECK(u0.index() == 1);
  REQUIRE(u0.child(0).kind() == IpKind::Embed);
  CHECK(u0.child(0).proof().end() == G("(= 0 0)"));
  CHECK(ip_pord(u0) == w_times(2));

  for (std::uint64_t m : {0u, 1u, 3u, 6u}) {
    for (std::uint64_t bound : {0u, 2u}) {
      IP u = ip_univ("x", d0, bound, m);
      CHECK(ip_pord(u) == w_times(2));
      CHECK(proper(u));
      CHECK(ip_dacc(u) == 0);
      Sequent allowed = with_bounds(Sequent{F::not_in_n(Term::num(m)),
                                            F::eq(Term::num(m), Term::num(m))},
                                    bound);
      CHECK(ip_pend(u).subset_of(allowed));
    }
  }

  Formula a = P("(= v v)");
  FP i0 = FP::ax(G("(= 0 0)"));
  FP i1 = FP::ax(Sequent{P("(not (= v v))"), P("(= (S v) (S v))")});
  IP n0 = ip_ind("v", a, i0, i1, 1, 0);
  CHECK(n0.kind() == IpKind::Embed);
  CHECK(n0.proof().end() == i0.end());
  IP n2 = ip_ind("v", a, i0, i1, 0, 2);
  CHECK(ip_pord(n2) == Ordinal::omega() + Ordinal(2));
  CHECK(proper(n2));
  CHECK(ip_dcut(n2) <= 1);
  CHECK(ip_pend(n2).subset_of(with_bounds(G("(= 2 2)"), 1)));

  FP di = demo_ind(3);
  IP pi = embed_min(di);
  for (std::uint64_t n : {0u, 1u, 5u}) {
    IP x = ip_pred(pi, n);
    CHECK(proper(x));
    CHECK(ip_dcut(x) <= 1);
    CHECK(ip_pord(x) == w_times(2 * di.child(0).height() + 1) + Ordinal(3));
  }
}

TEST_CASE("unfolding examples") {
  IP ax = IP::embed(FP::ax(G("(= 0 0)")), 3);
  IpUnfold u = ip_unfold(ax, 7);
  CHECK(u.rule.kind == InfRule::Ax);
  CHECK(u.step.valid());
  CHECK(u.step.to() == Ordinal(0));
  CHECK(u.step.bo() == Ordinal(0));
  CHECK(u.child.id() == ax.id());

  FP d = and_proof();
  IP p = IP::embed(d, 0);
  IpUnfold v = ip_unfold(p, 1);
  CHECK(v.rule.kind == InfRule::And);
  CHECK(*v.rule.a == d.formula());
  CHECK(v.step.to() == w_times(2 * d.child(0).height() + 3));
  CHECK(v.step.bo() == ip_pord(v.child) + Ordinal(1));
  CHECK(v.step.ba() == 0);
  REQUIRE(v.child.kind() == IpKind::Embed);
  CHECK(v.child.proof().end() == d.child(1).end());
  CHECK(ip_pred(p, 0).proof().end() == d.child(0).end());

  FP c = demo_sigma1_cut(2, 2);
  IP e = IP::e0(embed_min(c));
  InfRule inner = ip_rule(e.child(0));
  REQUIRE(inner.kind == InfRule::Cut);
  CHECK(sigma_rank(*inner.a) == 1);
  for (std::uint64_t n : {0u, 1u, 4u}) {
    IpUnfold w = ip_unfold(e, n);
    CHECK(w.rule.kind == InfRule::Acc);
    CHECK(w.rule.n == 0);
    StepDown lifted = sd_lift(LiftBase::Three, LiftKind::Times2Plus1, ip_step(e.child(0)),
                              ip_step(e.child(0)).ba());
    CHECK(w.step.str() == lifted.str());
    REQUIRE(w.child.kind() == IpKind::Red);
    CHECK(w.child.formula() == *inner.a);
    CHECK(w.child.child(0).kind() == IpKind::E0);
    CHECK(w.child.child(0).child(0).proof().end() == c.child(0).end());
    CHECK(w.child.child(1).child(0).proof().end() == c.child(1).end());
  }

  IP ex = embed_min(demo_add(2, 2));
  IpUnfold x0 = ip_unfold(ex, 0);
  CHECK(x0.rule.kind == InfRule::Ex);
  CHECK(x0.rule.n == 4);
  CHECK(x0.child.kind() == IpKind::AxN);
  CHECK(x0.child.axiom() == Sequent{F::in_n(Term::num(4)), F::not_in_n(Term::num(4))});
  CHECK(ip_unfold(ex, 1).child.kind() == IpKind::Embed);

  IP univ = IP::embed(all_refl(), 0);
  IpUnfold o = ip_unfold(univ, 5);
  CHECK(o.rule.kind == InfRule::Omega);
  CHECK(o.child.kind() == IpKind::Acc);
  CHECK(o.child.index() == 6);

  IP inv = IP::inv(5, all_refl().formula(), univ);
  CHECK(ip_rule(inv).kind == InfRule::Acc);
  CHECK(ip_rule(inv).n == 5);
  CHECK(ip_pend(inv).contains(P("(= 5 5)")));
  CHECK(!ip_pend(inv).contains(all_refl().formula()));

  IP ind = embed_min(demo_ind(2));
  CHECK(ip_rule(ind).kind == InfRule::Acc);
  CHECK(ip_rule(ind).n == 0);
}

TEST_CASE("proper proofs") {
  FP d = demo_add(2, 2);
  CHECK(proper(IP::embed(d, fp_dterm(d))));
  CHECK(!ip_is_proper(IP::embed(d, fp_dterm(d) - 1)));

  IP q = embed_min(demo_refl());
  CHECK(!ip_is_proper(IP::e0(IP::e(q))));
  CHECK(proper(IP::e(IP::e0(q))));
  auto diag = ip_check_proper(IP::e0(IP::e(q)));
  REQUIRE(diag);
  CHECK(diag->path == "root");

  IP a = IP::embed(height1(), 0);
  IP b = IP::embed(FP::ax(G("(= 0 0)")), 0);
  CHECK(!ip_is_proper(IP::cut(P("(= 0 0)"), a, b)));
  CHECK(proper(IP::cut(P("(= 0 0)"), a, a)));

  IP acc_bad = IP::acc(0, sd_const(SdConst::Id, ip_pord(a)), a);
  CHECK(!ip_is_proper(acc_bad));
  IP mid = IP::acc(0, StepDown::Plus(ip_pord(a), sd_const(SdConst::ToOne, Ordinal(5))), a);
  CHECK(proper(mid));
  StepDown far = StepDown::Fund(5, ip_pord(a) + Ordinal::omega());
  CHECK(far.bo() == ip_pord(mid) + Ordinal(1));
  CHECK(!ip_is_proper(IP::acc(0, far, mid)));
  CHECK(proper(IP::acc(6, far, mid)));

  IP small = IP::e0(IP::embed(demo_add(2, 2), 4));
  IP large = IP::e0(IP::embed(demo_ind(2), 2));
  CHECK(proper(IP::red(demo_add_goal(2, 2), large, small)));
  CHECK(!ip_is_proper(IP::red(demo_add_goal(2, 2), small, large)));

  FP bad = FP::ax(G("(= 0 1)"));
  CHECK(!ip_is_proper(IP::embed(bad, 0)));
}

TEST_CASE("local correctness checker") {
  Sequent axg{F::not_in_n(Term::num(1)), F::in_n(Term::num(2))};
  IP ax = IP::axn(axg, Ordinal(5));
  LcReport r = ip_lc(ax, 3);
  CHECK(r.step);
  CHECK(r.ok());

  IP a = IP::embed(height1(), 0);
  StepDown good = StepDown::Fund(0, ip_pord(a) + Ordinal::omega());
  IP acc = IP::acc(0, good, a);
  CHECK(proper(acc));
  CHECK(ip_lc(acc, 0).ok());

  StepDown wrong = StepDown::Fund(0, ip_pord(a) + Ordinal::omega() + Ordinal::omega());
  IP mutant = IP::acc(0, wrong, a);
  LcReport m = ip_lc(mutant, 0);
  CHECK(!m.step);
  CHECK(m.cut);
  CHECK(m.acc);
  CHECK(m.end);
  CHECK(!m.detail.empty());

  Formula goal = demo_refl_goal();
  IP leak = IP::embed(FP::ex(Sequent{goal}, Term::num(0), goal, FP::ax(G("(= 1 1)"))), 0);
  CHECK(!ip_is_proper(leak));
  LcReport l = ip_lc(leak, 1);
  CHECK(!l.end);
  CHECK(l.step);
}

namespace {

void check_closure(const IP& p, std::uint64_t n, const std::string& tag) {
  CAPTURE(tag);
  CAPTURE(n);
  IP q = ip_pred(p, n);
  CHECK(proper(q));
  LcReport lc = ip_lc(p, n);
  if (!lc.ok()) MESSAGE(lc.detail);
  CHECK(lc.cut);
  CHECK(lc.acc);
  CHECK(lc.step);
  CHECK(lc.end);

  InfRule r = ip_rule(p);
  CHECK(ip_pord(q) == ip_pord(ip_pred(p, 0)));
  CHECK(!(ip_pord(p) < ip_pord(q)));
  if (r.kind == InfRule::Ax) {
    CHECK(q.id() == p.id());
  } else {
    StepDown s = ip_step(p);
    CHECK(s.bo() == ip_pord(q) + Ordinal(r.kind == InfRule::Ex ? 2 : 1));
    CHECK(s.to() == ip_pord(p));
  }
}

}  // namespace

TEST_CASE("closure over a corpus of proper proofs") {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<IP> c = corpus();
  CHECK(c.size() >= 50);
  std::set<std::string> kinds;
  for (std::size_t i = 0; i < c.size(); ++i) {
    REQUIRE(proper(c[i]));
    kinds.insert(ip_kind_name(c[i].kind()));
    for (std::uint64_t n : {0u, 1u, 2u, 7u}) check_closure(c[i], n, "corpus " + std::to_string(i));
  }
  CHECK(kinds.size() == 7);

  // a few levels below every corpus element
  std::size_t visited = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::vector<IP> frontier = {c[i]};
    for (int depth = 0; depth < 3; ++depth) {
      std::vector<IP> next;
      for (const IP& p : frontier) {
        for (std::uint64_t n : {0u, 1u, 3u}) {
          IP q = ip_pred(p, n);
          check_closure(q, n, "descendant of " + std::to_string(i));
          ++visited;
          if (next.size() < 8) next.push_back(q);
        }
      }
      frontier = std::move(next);
    }
  }
  CHECK(visited > 500);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 30.0);
}

TEST_CASE("text format") {
  std::vector<IP> c = corpus();
  for (const IP& p : c) {
    std::string s = print_inf_proof(p);
    IP q = parse_inf_proof(s);
    CHECK(print_inf_proof(q) == s);
    CHECK(ip_pend(q) == ip_pend(p));
    CHECK(ip_pord(q) == ip_pord(p));
  }
  IP p = parse_inf_proof(
      "(acc 3 \"fund(0)@w\" (axN (seq (not-in-N 0) (in-N 0)) \"2\"))");
  CHECK(p.kind() == IpKind::Acc);
  CHECK_THROWS_AS(parse_inf_proof("(acc 3)"), IpError);
  CHECK_THROWS_AS(parse_inf_proof("(frob 1)"), IpError);
  CHECK_THROWS_AS(parse_inf_proof("(axN (seq (= 0 0)) \"3\")"), IpError);
}
