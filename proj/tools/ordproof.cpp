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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ordproof/extraction.hpp"
#include "ordproof/fgh.hpp"
#include "ordproof/finite_proof.hpp"
#include "ordproof/infinite_proof.hpp"
#include "ordproof/ordinal.hpp"
#include "ordproof/stepdown.hpp"

using namespace ordproof;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFalse = 1, kError = 2 };

struct Result {
  int code = kOk;
  json data = json::object();
  std::vector<std::string> lines;

  void put(const std::string& key, json value, const std::string& text) {
    data[key] = std::move(value);
    lines.push_back(key + ": " + text);
  }
  void put(const std::string& key, const std::string& value) { put(key, json(value), value); }
};

std::string read_input(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  if (!in) throw std::runtime_error("cannot read " + arg);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

BigInt parse_nat(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("expected a natural number, got '" + s + "'");
  return BigInt(s);
}

std::vector<std::uint64_t> parse_path(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_nat(item).convert_to<std::uint64_t>());
  return out;
}

std::string seq_text(const Sequent& g) { return g.str(); }

void put_outcome(Result& r, const FghOutcome& o) {
  if (o.defined) {
    r.put("value", json(o.value.str()), o.value.str());
  } else {
    r.code = kError;
    std::string why = o.exceeded == BudgetKind::Steps ? "steps" : "value-cap";
    r.put("exceeded", why);
  }
}

json step_json(const StepDown& s) {
  return {{"certificate", s.str()}, {"bo", s.bo().str()}, {"to", s.to().str()},
          {"ba", s.ba().str()}};
}

void put_inf_metrics(Result& r, const InfProof& p) {
  IpMetrics m = ip_metrics(p);
  r.put("pend", seq_text(m.pend));
  r.put("pord", m.pord.str());
  r.put("dcut", json(m.dcut), std::to_string(m.dcut));
  r.put("dacc", json(m.dacc), std::to_string(m.dacc));
}

std::string truth_word(bool b) { return b ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordinal analysis and witness extraction for bounded arithmetic proofs"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print the result as a JSON object");

  FghBudget budget;
  std::uint64_t fgh_steps = 10000000;
  auto add_budget = [&](CLI::App* c) {
    c->add_option("--steps", budget.steps, "Machine step budget")
        ->envname("ORDPROOF_FGH_EVAL_STEPS")
        ->capture_default_str();
    c->add_option_function<std::string>(
         "--cap", [&](const std::string& v) { budget.value_cap = parse_nat(v); },
         "Value cap (default 2^64)")
        ->envname("ORDPROOF_FGH_VALUE_CAP");
  };

  Result res;
  std::function<void()> run;

  // ord
  auto* ord = app.add_subcommand("ord", "Ordinals below epsilon_0")->require_subcommand(1);
  std::string a_text, b_text, n_text, c_text;
  {
    auto* c = ord->add_subcommand("cmp", "Compare two ordinals");
    c->add_option("a", a_text)->required();
    c->add_option("b", b_text)->required();
    c->callback([&] {
      run = [&] {
        Ordering o = ord_cmp(parse_ordinal(a_text), parse_ordinal(b_text));
        res.put("result", o == Ordering::Less ? "<" : o == Ordering::Equal ? "=" : ">");
      };
    });
    auto* add = ord->add_subcommand("add", "Ordinal sum");
    add->add_option("a", a_text)->required();
    add->add_option("b", b_text)->required();
    add->callback([&] {
      run = [&] { res.put("result", (parse_ordinal(a_text) + parse_ordinal(b_text)).str()); };
    });
    auto* fund = ord->add_subcommand("fund", "Fundamental sequence element {a}(n)");
    fund->add_option("a", a_text)->required();
    fund->add_option("n", n_text)->required();
    fund->callback([&] {
      run = [&] { res.put("result", fund_one(parse_ordinal(a_text), parse_nat(n_text)).str()); };
    });
    auto* num = ord->add_subcommand("num", "Descent length bound at base n");
    num->add_option("a", a_text)->required();
    num->add_option("n", n_text)->required();
    num->callback([&] {
      run = [&] { res.put("result", num_bound(parse_ordinal(a_text), parse_nat(n_text)).str()); };
    });
  }

  // fgh
  auto* fgh = app.add_subcommand("fgh", "Fast-growing hierarchy")->require_subcommand(1);
  std::string i_text;
  {
    auto* ev = fgh->add_subcommand("eval", "F_a(n)");
    ev->add_option("a", a_text)->required();
    ev->add_option("n", n_text)->required();
    add_budget(ev);
    ev->callback([&] {
      run = [&] { put_outcome(res, fgh_eval(parse_ordinal(a_text), parse_nat(n_text), budget)); };
    });
    auto* it = fgh->add_subcommand("iter", "F_a^i(n)");
    it->add_option("a", a_text)->required();
    it->add_option("i", i_text)->required();
    it->add_option("n", n_text)->required();
    add_budget(it);
    it->callback([&] {
      run = [&] {
        put_outcome(res, fgh_iter(parse_ordinal(a_text), parse_nat(i_text), parse_nat(n_text),
                                  budget));
      };
    });
    auto* cmp = fgh->add_subcommand("cmp", "Compare F_a(n) with a constant c");
    cmp->add_option("a", a_text)->required();
    cmp->add_option("n", n_text)->required();
    cmp->add_option("c", c_text)->required();
    cmp->add_option("--fgh-steps", fgh_steps, "Machine step budget")
        ->envname("ORDPROOF_FGH_STEPS")
        ->capture_default_str();
    cmp->callback([&] {
      run = [&] {
        CmpResult r = fgh_cmp_const(parse_ordinal(a_text), parse_nat(n_text), parse_nat(c_text),
                                    fgh_steps);
        if (r.below) {
          res.put("result", "below");
          res.put("value", json(r.value.str()), r.value.str());
        } else {
          res.put("result", "at-least");
        }
      };
    });
    auto* eps = fgh->add_subcommand("eps", "F_epsilon_0(n)");
    eps->add_option("n", n_text)->required();
    add_budget(eps);
    eps->callback([&] { run = [&] { put_outcome(res, fgh_eps(parse_nat(n_text), budget)); }; });
  }

  // sd
  auto* sd = app.add_subcommand("sd", "Step-down certificates")->require_subcommand(1);
  std::optional<std::string> base_text;
  {
    auto* v = sd->add_subcommand("verify", "Validate a certificate and check its semantics");
    v->add_option("certificate", a_text)->required();
    v->add_option("--base", base_text, "Base for the semantic check (default: the certificate's)");
    v->callback([&] {
      run = [&] {
        StepDown s = parse_stepdown(a_text);
        std::string diag;
        bool valid = sd_validate(s, &diag);
        res.put("bo", s.bo().str());
        res.put("to", s.to().str());
        res.put("ba", s.ba().str());
        res.put("valid", json(valid), truth_word(valid));
        if (!valid) {
          res.put("diagnostic", diag);
          res.code = kFalse;
          return;
        }
        BigInt base = base_text ? parse_nat(*base_text) : s.ba();
        SdCheck c = sd_check_semantics(s, base);
        res.put("semantics", sd_check_name(c));
        if (c != SdCheck::Holds) res.code = kFalse;
      };
    });
  }

  // proof
  auto* proof = app.add_subcommand("proof", "Finite proofs")->require_subcommand(1);
  int sys_n = 1;
  {
    auto* chk = proof->add_subcommand("check", "Check a finite proof in the system of index n");
    chk->add_option("proof", a_text, "File or inline proof text")->required();
    chk->add_option("--n", sys_n, "System index")->capture_default_str();
    chk->callback([&] {
      run = [&] {
        auto d = fp_check(parse_proof(read_input(a_text)), sys_n);
        res.put("valid", json(!d), truth_word(!d));
        if (d) {
          res.put("path", d->path);
          res.put("diagnostic", d->message);
          res.code = kFalse;
        }
      };
    });
    auto* met = proof->add_subcommand("metrics", "Height, term depth and cut degree");
    met->add_option("proof", a_text, "File or inline proof text")->required();
    met->add_option("--n", sys_n, "System index")->capture_default_str();
    met->callback([&] {
      run = [&] {
        FpMetrics m = fp_metrics(parse_proof(read_input(a_text)), sys_n);
        res.put("height", json(m.height), std::to_string(m.height));
        res.put("dterm", json(m.dterm), std::to_string(m.dterm));
        res.put("dcut", json(m.dcut), std::to_string(m.dcut));
        res.put("end", seq_text(m.end));
      };
    });
    auto* bx = proof->add_subcommand("box", "Proof of {not A, box A} for a bounded formula A");
    bx->add_option("formula", a_text)->required();
    bx->callback([&] {
      run = [&] { res.put("proof", print_proof(fp_box_lemma(parse_formula(read_input(a_text))))); };
    });
    auto* imp = proof->add_subcommand("import", "Translate a proof over the old language");
    imp->add_option("proof", a_text, "File or inline proof text")->required();
    imp->add_option("--n", sys_n, "System index")->capture_default_str();
    imp->callback([&] {
      run = [&] {
        res.put("proof", print_proof(fp_import_primed(parse_proof(read_input(a_text)), sys_n)));
      };
    });
  }

  // inf
  auto* inf = app.add_subcommand("inf", "Infinite proof terms")->require_subcommand(1);
  std::string path_text;
  std::uint64_t premise = 0;
  {
    auto* met = inf->add_subcommand("metrics", "End-sequent, ordinal and degrees");
    met->add_option("term", a_text, "File or inline term")->required();
    met->callback([&] { run = [&] { put_inf_metrics(res, parse_inf_proof(read_input(a_text))); }; });
    auto* unf = inf->add_subcommand("unfold", "Rule, step and metrics along a premise path");
    unf->add_option("term", a_text, "File or inline term")->required();
    unf->add_option("--path", path_text, "Comma-separated premise indices");
    unf->callback([&] {
      run = [&] {
        InfProof p = parse_inf_proof(read_input(a_text));
        std::vector<std::uint64_t> path = path_text.empty() ? std::vector<std::uint64_t>{}
                                                            : parse_path(path_text);
        json nodes = json::array();
        for (std::size_t i = 0; i <= path.size(); ++i) {
          IpMetrics m = ip_metrics(p);
          InfRule rule = ip_rule(p);
          json node = {{"depth", i}, {"rule", rule.str()}, {"pend", seq_text(m.pend)},
                       {"pord", m.pord.str()}, {"dcut", m.dcut}, {"dacc", m.dacc}};
          std::string line = std::to_string(i) + " " + rule.str() + " ord=" + m.pord.str() +
                             " dcut=" + std::to_string(m.dcut) + " pend=" + seq_text(m.pend);
          if (rule.kind != InfRule::Ax) {
            StepDown s = ip_step(p);
            node["step"] = step_json(s);
            line += " step=" + s.str();
          }
          nodes.push_back(node);
          res.lines.push_back(line);
          if (i < path.size()) p = ip_pred(p, path[i]);
        }
        res.data["nodes"] = nodes;
      };
    });
    auto* pr = inf->add_subcommand("proper", "Check that a term is proper");
    pr->add_option("term", a_text, "File or inline term")->required();
    pr->callback([&] {
      run = [&] {
        auto d = ip_check_proper(parse_inf_proof(read_input(a_text)));
        res.put("proper", json(!d), truth_word(!d));
        if (d) {
          res.put("path", d->path);
          res.put("diagnostic", d->message);
          res.code = kFalse;
        }
      };
    });
    auto* lc = inf->add_subcommand("lc", "Local correctness at premise n");
    lc->add_option("term", a_text, "File or inline term")->required();
    lc->add_option("--n", premise, "Premise index")->capture_default_str();
    lc->callback([&] {
      run = [&] {
        LcReport r = ip_lc(parse_inf_proof(read_input(a_text)), premise);
        res.put("cut", json(r.cut), truth_word(r.cut));
        res.put("acc", json(r.acc), truth_word(r.acc));
        res.put("step", json(r.step), truth_word(r.step));
        res.put("end", json(r.end), truth_word(r.end));
        if (!r.detail.empty()) res.put("detail", r.detail);
        if (!r.ok()) res.code = kFalse;
      };
    });
  }

  // extract
  auto* ex = app.add_subcommand("extract", "Extract a witness from a proof of a Sigma_1 sentence");
  ExLimits limits;
  std::string trace_path, stop_text = "eager";
  int ex_n = 2;
  {
    ex->add_option("proof", a_text, "File or inline proof text")->required();
    ex->add_option("--n", ex_n, "System index (at least 2)")->capture_default_str();
    ex->add_option("--max-iter", limits.max_iterations, "Iteration limit")
        ->envname("ORDPROOF_MAX_ITER")
        ->capture_default_str();
    ex->add_option("--witness-cap", limits.witness_cap, "Largest witness searched by truth checks")
        ->envname("ORDPROOF_WITNESS_CAP")
        ->capture_default_str();
    ex->add_option("--fgh-steps", limits.fgh_steps, "Step budget per capped comparison")
        ->envname("ORDPROOF_FGH_STEPS")
        ->capture_default_str();
    ex->add_option("--trace", trace_path, "Write the descent as JSON lines");
    ex->add_option("--stop", stop_text, "Stopping rule")
        ->check(CLI::IsMember({"eager", "axiom"}))
        ->capture_default_str();
    ex->add_flag("--verbose", limits.verbose, "Record full sequents in the trace");
    ex->callback([&] {
      run = [&] {
        limits.stop = stop_text == "axiom" ? ExStop::Axiom : ExStop::Eager;
        ExtractionReport r = ex_extract(parse_proof(read_input(a_text)), ex_n, limits);
        if (!trace_path.empty()) {
          std::ofstream out(trace_path);
          if (!out) throw std::runtime_error("cannot write " + trace_path);
          for (const TraceEntry& t : r.trace) {
            json j = {{"iteration", t.iteration}, {"rule", t.rule}, {"ord", t.ord},
                      {"kEnd", t.k_end},          {"truth", t.truth}, {"action", t.action},
                      {"digest", t.digest}};
            if (t.tainted) j["tainted"] = true;
            if (!t.sequent.empty()) j["sequent"] = t.sequent;
            out << j.dump() << "\n";
          }
        }
        res.put("outcome", ex_outcome_name(r.outcome));
        if (r.outcome == ExtractionReport::Witness)
          res.put("witness", json(r.witness), std::to_string(r.witness));
        if (r.formula) res.put("formula", r.formula->str());
        if (r.outcome == ExtractionReport::Exhausted) res.put("reason", ex_reason_name(r.reason));
        res.put("iterations", json(r.iteration), std::to_string(r.iteration));
        if (r.bound_confirmed)
          res.put("boundConfirmed", json(*r.bound_confirmed), truth_word(*r.bound_confirmed));
        if (!r.detail.empty()) res.put("detail", r.detail);
        if (!r.ok()) res.code = kError;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    run();
  } catch (const std::exception& e) {
    if (as_json) {
      std::cout << json{{"error", e.what()}}.dump() << std::endl;
    }
    std::cerr << "error: " << e.what() << std::endl;
    return kError;
  }
  if (as_json) {
    std::cout << res.data.dump() << std::endl;
  } else {
    if (res.lines.size() == 1 && res.data.contains("result")) {
      std::cout << res.data["result"].get<std::string>() << std::endl;
    } else {
      for (const auto& l : res.lines) std::cout << l << std::endl;
    }
  }
  return res.code;
}
