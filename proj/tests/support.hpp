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

// Generators and proof corpora shared by the unit tests and the acceptance
// runner.

#ifndef ORDPROOF_TESTS_SUPPORT_HPP_
#define ORDPROOF_TESTS_SUPPORT_HPP_

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ordproof/demos.hpp"
#include "ordproof/finite_proof.hpp"
#include "ordproof/infinite_proof.hpp"
#include "ordproof/ordinal.hpp"
#include "ordproof/stepdown.hpp"

namespace support {

using namespace ordproof;

// Up to max_len summands w^e * c with 1 <= c <= max_coef and exponents
// nested depth levels deep.
inline Ordinal random_ordinal(std::mt19937& rng, int depth, int max_len = 2, int max_coef = 3) {
  Ordinal r;
  int len = rng() % (max_len + 1);
  for (int i = 0; i < len; ++i) {
    Ordinal e = depth > 0 ? random_ordinal(rng, depth - 1, max_len, max_coef) : Ordinal();
    r = r + Ordinal::omega_pow(e, 1 + rng() % max_coef);
  }
  return r;
}

// A random certificate ending at top.
inline StepDown random_certificate(std::mt19937& rng, const Ordinal& top, int depth) {
  int choice = depth > 0 ? rng() % 6 : 0;
  if (choice == 1) {
    StepDown upper = random_certificate(rng, top, depth - 1);
    return StepDown::Compose(random_certificate(rng, upper.bo(), depth - 1), upper);
  }
  if (choice == 2 && top.terms.size() > 1) {
    Ordinal shift;
    shift.terms.assign(top.terms.begin(), top.terms.begin() + 1);
    Ordinal rest;
    rest.terms.assign(top.terms.begin() + 1, top.terms.end());
    return StepDown::Plus(shift, random_certificate(rng, rest, depth - 1));
  }
  if (choice == 3 && top.terms.size() == 1 && top.terms[0].coef == 1 &&
      !top.terms[0].exp.is_zero()) {
    return StepDown::OmegaLift(random_certificate(rng, top.terms[0].exp, depth - 1));
  }
  if (choice == 4 && top >= Ordinal(2)) return sd_const(SdConst::ToTwo, top);
  if (choice == 5 && !top.is_zero()) return sd_const(SdConst::ToOne, top);
  return StepDown::Fund(rng() % 3, top);
}

// The chain of fund(k) steps from top down to bot, if bot is on that path.
inline std::optional<StepDown> path_certificate(const Ordinal& top, const Ordinal& bot, int k) {
  if (!steps_to(top, k, bot)) return std::nullopt;
  if (top == bot) return sd_const(SdConst::Id, top);
  std::vector<StepDown> top_down;
  for (Ordinal cur = top; !(cur == bot); cur = fund_one(cur, k)) {
    top_down.push_back(StepDown::Fund(k, cur));
  }
  return sd_chain(std::vector<StepDown>(top_down.rbegin(), top_down.rend()));
}

// Random formulas over =, < and add; bounded unless unbounded is set.
struct FormulaGen {
  std::mt19937_64 rng;
  explicit FormulaGen(unsigned seed) : rng(seed) {}
  int pick(int n) { return static_cast<int>(rng() % n); }
  std::string name(const std::vector<std::string>& vs) { return vs[pick(vs.size())]; }

  Term term(const std::vector<std::string>& vs) {
    Term t = vs.empty() || pick(3) == 0 ? Term::num(pick(3)) : Term::v(name(vs));
    if (pick(4) == 0) t = t.S();
    return t;
  }

  Formula atom(const std::vector<std::string>& vs) {
    bool pos = pick(2);
    switch (pick(3)) {
      case 0: return Formula::eq(term(vs), term(vs), pos);
      case 1: return Formula::lt(term(vs), term(vs), pos);
      default: return Formula::add(term(vs), term(vs), term(vs), pos);
    }
  }

  Formula formula(std::vector<std::string> vs, int depth, bool unbounded) {
    if (depth == 0 || pick(4) == 0) return atom(vs);
    int k = pick(unbounded ? 6 : 4);
    if (k == 0)
      return Formula::conj(formula(vs, depth - 1, unbounded), formula(vs, depth - 1, unbounded));
    if (k == 1)
      return Formula::disj(formula(vs, depth - 1, unbounded), formula(vs, depth - 1, unbounded));
    std::string x = "q" + std::to_string(depth);
    Term bound = term(vs);
    vs.push_back(x);
    Formula body = formula(vs, depth - 1, unbounded);
    switch (k) {
      case 2: return Formula::ball(x, bound, body);
      case 3: return Formula::bex(x, bound, body);
      case 4: return Formula::all(x, body);
      default: return Formula::ex(x, body);
    }
  }
};

inline FiniteProof height1() {
  Sequent g = parse_sequent("(= 0 0)");
  return FiniteProof::rep(g, FiniteProof::ax(g));
}

inline FiniteProof all_refl() {
  Formula a = parse_formula("(all x (= x x))");
  return FiniteProof::all(Sequent{a}, "x", a, FiniteProof::ax(parse_sequent("(= x x)")));
}

inline FiniteProof and_proof() {
  Formula a = parse_formula("(and (= 0 0) (= 1 1))");
  return FiniteProof::conj(Sequent{a}, a, FiniteProof::ax(parse_sequent("(= 0 0)")),
                           FiniteProof::ax(parse_sequent("(= 1 1)")));
}

inline FiniteProof or_proof() {
  Formula a = parse_formula("(or (= 0 1) (= 1 1))");
  return FiniteProof::disj(Sequent{a}, 1, a, FiniteProof::ax(parse_sequent("(= 1 1)")));
}

inline std::vector<FiniteProof> base_proofs() {
  std::vector<FiniteProof> r = {demo_add(2, 2),           demo_add(1, 3),  demo_refl(),
                                demo_ind(2),              demo_ind(0),     demo_sigma1_cut(2, 2),
                                demo_sigma2_detour(2, 2), and_proof(),     or_proof(),
                                all_refl(),               height1()};
  for (const char* s : {"(ball x 2 (bex y 3 (< x y)))", "(and (= 1 1) (or (< 0 1) (= 0 1)))",
                        "(bex x 3 (add x x 2))", "(< 2 1)"}) {
    r.push_back(fp_box_lemma(parse_formula(s)));
  }
  return r;
}

// Proper terms: embedded proofs under E0 and E, and hand-built Acc, CutI,
// Inv and Red nodes.
inline std::vector<InfProof> corpus() {
  using IP = InfProof;
  auto embed_min = [](const FiniteProof& d) { return IP::embed(d, fp_dterm(d)); };
  std::vector<IP> r;
  for (const FiniteProof& d : base_proofs()) {
    std::size_t dt = fp_dterm(d);
    for (std::size_t m : {dt, dt + 2}) {
      IP p = IP::embed(d, m);
      IP e0 = IP::e0(p);
      r.insert(r.end(), {p, e0, IP::e(p), IP::e(e0), IP::e(IP::e(e0))});
    }
  }

  IP a = IP::embed(height1(), 0);
  IP b = IP::embed(or_proof(), 0);
  r.push_back(IP::acc(0, StepDown::Fund(0, ip_pord(a) + Ordinal::omega()), a));
  r.push_back(IP::acc(3, StepDown::Fund(0, ip_pord(a) + Ordinal::omega()), a));
  r.push_back(IP::cut(parse_formula("(= 0 0)"), a, b));
  r.push_back(IP::cut(parse_formula("(in-N 0)"),
                      IP::axn(parse_sequent("(not-in-N 0) (in-N 0)"),
                              ord_mul_nat(Ordinal::omega(), 3)),
                      a));

  FiniteProof u = all_refl();
  IP univ = IP::embed(u, 0);
  r.push_back(IP::inv(2, u.formula(), univ));
  r.push_back(IP::inv(0, u.formula(), IP::e0(univ)));
  r.push_back(IP::inv(4, parse_formula("(all y (not (= y 7)))"), IP::e0(embed_min(demo_add(2, 2)))));

  IP small = IP::e0(IP::embed(demo_add(2, 2), 4));
  IP large = IP::e0(IP::embed(demo_ind(2), 2));
  r.push_back(IP::red(demo_add_goal(2, 2), large, small));
  r.push_back(IP::red(demo_add_goal(2, 2), IP::e0(embed_min(demo_sigma1_cut(2, 2))), small));
  r.push_back(IP::e(IP::red(demo_add_goal(2, 2), large, small)));
  return r;
}

}  // namespace support

#endif  // ORDPROOF_TESTS_SUPPORT_HPP_
