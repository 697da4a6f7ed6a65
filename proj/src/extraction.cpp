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

#include "ordproof/extraction.hpp"

#include <functional>

namespace ordproof {

namespace {

BigInt pow3(std::uint64_t e) {
  return boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(e));
}


SymBound extend(const SymBound& k, const InfProof& q) {
  SymBound r = k;
  r.chain.emplace_back(ip_pord(q), pow3(k_of(ip_pend(q)) + 1));
  return r;
}

Bound bound_of(const SymBound& k, const ExLimits& limits) {
  return Bound::symbolic(k, limits.fgh_steps);
}

bool is_delta0_class(const Formula& a) {
  Class c = classify(a);
  return c.kind == Class::Delta0Proper || c.kind == Class::SpecialInN;
}

// Truth of the axiom contained in an axiom state.
bool axiom_true(const Sequent& g, const Bound& k) {
  for (const Formula& f : g.items()) {
    if (f.is_atom() && !f.is_special() && is_closed(f) && eval_closed(f)) return true;
  }
  for (const Formula& f : g.items()) {
    if (!f.is_not_in_n() || !f.args()[0].closed()) continue;
    const Term& t = f.args()[0];
    for (const Term& u : {t, t.S()}) {
      if (g.contains(Formula::in_n(u)) && k.exceeds(pow3(u.succ + 1))) return true;
    }
  }
  return false;
}

std::string truth_text(const Truth& t) {
  switch (t.kind) {
    case Truth::True:
      return t.witness ? "true:witness=" + std::to_string(*t.witness) : "true";
    case Truth::Exhausted:
      return "cap";
    default:
      return "false";
  }
}

}  // namespace

const char* ex_case_name(ExCase c) {
  switch (c) {
    case ExCase::Acc:
      return "acc";
    case ExCase::Delta0Left:
      return "delta0-cut:left";
    case ExCase::Delta0Right:
      return "delta0-cut:right";
    case ExCase::Sigma1Invert:
      return "sigma1-cut:invert";
    case ExCase::Sigma1Right:
      return "sigma1-cut:right";
    case ExCase::ExLeft:
      return "ex:left";
    case ExCase::ExRight:
      return "ex:right";
    default:
      return "other";
  }
}

const char* ex_outcome_name(ExtractionReport::Outcome o) {
  switch (o) {
    case ExtractionReport::Witness:
      return "witness";
    case ExtractionReport::True:
      return "true";
    case ExtractionReport::Exhausted:
      return "exhausted";
    default:
      return "stuck";
  }
}

const char* ex_reason_name(ExtractionReport::Reason r) {
  switch (r) {
    case ExtractionReport::IterationLimit:
      return "iteration-limit";
    case ExtractionReport::WitnessCap:
      return "witness-cap";
    default:
      return "fgh-budget";
  }
}

DescentState ex_initial(const InfProof& p, std::uint64_t iteration) {
  return {p, extend(SymBound{}, p), iteration};
}

DescentState ex_step(const DescentState& s, const ExLimits& limits, ExStepInfo* info) {
  const InfProof& p = s.proof;
  InfRule r = ip_rule(p);
  ExStepInfo local;
  local.rule = r;
  std::optional<InfProof> next;

  switch (r.kind) {
    case InfRule::Acc:
      local.which = ExCase::Acc;
      next = ip_pred(p, r.n);
      break;
    case InfRule::Cut: {
      const Formula& a = *r.a;
      InfProof q1 = ip_pred(p, 1);
      Bound k1 = bound_of(extend(s.bound, q1), limits);
      Class c = classify(a);
      if (is_delta0_class(a)) {
        if (true_bounded(a, k1, limits.witness_cap).kind == Truth::True) {
          local.which = ExCase::Delta0Left;
          next = ip_pred(p, 0);
        } else {
          local.which = ExCase::Delta0Right;
          next = q1;
        }
      } else if (c.kind == Class::Sigma && c.level == 1 && a.kind() == Formula::Kind::Ex) {
        std::optional<std::uint64_t> found;
        for (std::uint64_t m = 0; k1.exceeds(pow3(m + 1)); ++m) {
          if (m >= limits.witness_cap) {
            throw ExError(ExError::WitnessSearchExhausted,
                          "no witness below the cap for cut formula " + a.str());
          }
          if (eval_closed(subst(a.body(), a.var(), Term::num(m)))) {
            found = m;
            break;
          }
        }
        if (found) {
          local.which = ExCase::Sigma1Invert;
          local.m = found;
          next = InfProof::inv(*found, negate(a), ip_pred(p, 0));
        } else {
          local.which = ExCase::Sigma1Right;
          next = q1;
        }
      } else {
        next = q1;
      }
      break;
    }
    case InfRule::Ex: {
      InfProof q0 = ip_pred(p, 0);
      Bound k0 = bound_of(extend(s.bound, q0), limits);
      if (!k0.exceeds(pow3(r.n + 1))) {
        local.which = ExCase::ExLeft;
        next = q0;
      } else {
        local.which = ExCase::ExRight;
        next = ip_pred(p, 1);
      }
      break;
    }
    default:
      throw ExError(ExError::RuleImpossible,
                    "rule " + r.str() + " cannot occur at a false Sigma_1 state");
  }
  if (info) *info = local;
  return {*next, extend(s.bound, *next), s.iteration + 1};
}

ExtractionReport ex_descend(const InfProof& p, const ExLimits& limits) {
  return ex_descend_from(ex_initial(p), limits);
}

ExtractionReport ex_descend_from(const DescentState& start, const ExLimits& limits) {
  ExtractionReport rep;
  DescentState s = start;
  bool tainted = false;

  auto finish = [&](const DescentState& at) {
    rep.iteration = at.iteration;
    Truth t = true_bounded_sequent(ip_pend(start.proof), bound_of(start.bound, limits),
                                   limits.witness_cap);
    if (t.kind == Truth::True) {
      rep.outcome = t.witness ? ExtractionReport::Witness : ExtractionReport::True;
      rep.witness = t.witness.value_or(0);
      rep.formula = t.formula;
    } else if (t.kind == Truth::Exhausted) {
      rep.outcome = ExtractionReport::Exhausted;
      rep.reason = ExtractionReport::WitnessCap;
      rep.detail = "witness search hit the cap at the initial state";
    } else {
      rep.outcome = ExtractionReport::Stuck;
      rep.detail = "descent reached a true state but the initial end-sequent is false";
    }
  };

  try {
    for (std::uint64_t i = 0;; ++i) {
      if (i >= limits.max_iterations) {
        rep.outcome = ExtractionReport::Exhausted;
        rep.reason = tainted ? ExtractionReport::WitnessCap : ExtractionReport::IterationLimit;
        rep.iteration = s.iteration;
        rep.detail = "iteration limit " + std::to_string(limits.max_iterations) + " reached";
        return rep;
      }
      const Sequent& g = ip_pend(s.proof);
      Bound k = bound_of(s.bound, limits);
      Truth t = true_bounded_sequent(g, k, limits.witness_cap);
      if (t.kind == Truth::Exhausted) tainted = true;
      InfRule r = ip_rule(s.proof);

      TraceEntry e;
      e.iteration = s.iteration;
      e.rule = r.str();
      e.ord = ip_pord(s.proof).str();
      e.k_end = k_of(g);
      e.truth = truth_text(t);
      e.digest = std::hash<std::string>()(g.str());
      e.tainted = tainted;
      if (limits.verbose) e.sequent = g.str();

      if (limits.stop == ExStop::Eager && t.kind == Truth::True) {
        e.action = "stop:truth";
        rep.trace.push_back(e);
        finish(s);
        return rep;
      }
      if (r.kind == InfRule::Ax) {
        if (!axiom_true(g, k)) {
          e.action = "stuck:axiom";
          rep.trace.push_back(e);
          rep.outcome = ExtractionReport::Stuck;
          rep.iteration = s.iteration;
          rep.detail = "axiom state with an axiom that is false under the bound: " + g.str();
          return rep;
        }
        e.action = "stop:axiom";
        rep.trace.push_back(e);
        finish(s);
        return rep;
      }
      ExStepInfo info;
      DescentState next = s;
      try {
        next = ex_step(s, limits, &info);
      } catch (const ExError& err) {
        if (err.code != ExError::RuleImpossible) throw;
        e.action = "stuck:rule";
        rep.trace.push_back(e);
        rep.outcome = ExtractionReport::Stuck;
        rep.iteration = s.iteration;
        rep.detail = err.what();
        return rep;
      }
      e.action = ex_case_name(info.which);
      if (info.m) e.action += " m=" + std::to_string(*info.m);
      rep.trace.push_back(e);
      s = std::move(next);
    }
  } catch (const FghBudgetError& err) {
    rep.outcome = ExtractionReport::Exhausted;
    rep.reason = ExtractionReport::FghBudget;
    rep.iteration = s.iteration;
    rep.detail = err.what();
    return rep;
  } catch (const ExError& err) {
    if (err.code != ExError::WitnessSearchExhausted) throw;
    rep.outcome = ExtractionReport::Exhausted;
    rep.reason = ExtractionReport::WitnessCap;
    rep.iteration = s.iteration;
    rep.detail = err.what();
    return rep;
  }
}

DescentState ex_embed(const FiniteProof& d, int n) {
  if (n < 2) throw ExError(ExError::Precondition, "the system index must be at least 2");
  if (auto diag = fp_check(d, n)) {
    throw ExError(ExError::Precondition,
                  "not a proof of the system at " + diag->path + ": " + diag->message);
  }
  const Sequent& g = d.end();
  if (g.size() != 1 || !is_closed(g.items()[0]) ||
      !(classify(g.items()[0]) == Class{Class::Sigma, 1})) {
    throw ExError(ExError::Precondition, "end-sequent must be one closed Sigma_1 formula: " + g.str());
  }
  InfProof p = InfProof::e0(InfProof::embed(d, fp_dterm(d), n));
  for (int i = 2; i < n; ++i) p = InfProof::e(p);
  return ex_initial(p);
}

ExtractionReport ex_extract(const FiniteProof& d, int n, const ExLimits& limits) {
  DescentState s = ex_embed(d, n);
  ExtractionReport rep = ex_descend_from(s, limits);
  if (rep.outcome == ExtractionReport::Witness) {
    const Formula& a = *rep.formula;
    if (!eval_closed(subst(a.body(), a.var(), Term::num(rep.witness)))) {
      throw ExError(ExError::RuleImpossible, "witness does not satisfy the matrix");
    }
    try {
      rep.bound_confirmed = bound_of(s.bound, limits).exceeds(pow3(rep.witness + 1));
    } catch (const FghBudgetError&) {
      rep.bound_confirmed.reset();
    }
  }
  return rep;
}

}  // namespace ordproof
