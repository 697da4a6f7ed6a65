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

#ifndef ORDPROOF_EXTRACTION_HPP_
#define ORDPROOF_EXTRACTION_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordproof/fgh.hpp"
#include "ordproof/infinite_proof.hpp"

namespace ordproof {

class ExError : public std::runtime_error {
 public:
  enum Code { RuleImpossible, WitnessSearchExhausted, Precondition };
  ExError(Code c, const std::string& what) : std::runtime_error(what), code(c) {}
  Code code;
};

struct DescentState {
  InfProof proof;
  // min over the chain; the newest entry is (pord(proof), 3^(k(pend(proof))+1)).
  SymBound bound;
  std::uint64_t iteration = 0;
};

// eager stops at the first state whose end-sequent is true; axiom takes the
// steps regardless and stops at the first axiom state.
enum class ExStop { Eager, Axiom };

struct ExLimits {
  std::uint64_t max_iterations = 10000;
  std::uint64_t witness_cap = 10000;
  std::uint64_t fgh_steps = 10000000;
  ExStop stop = ExStop::Eager;
  // Record full end-sequents in the trace, not only digests.
  bool verbose = false;
};

// Which branch of the step function was taken.
enum class ExCase { Acc, Delta0Left, Delta0Right, Sigma1Invert, Sigma1Right, ExLeft, ExRight, Other };
const char* ex_case_name(ExCase c);

struct ExStepInfo {
  ExCase which = ExCase::Other;
  InfRule rule;
  std::optional<std::uint64_t> m;
};

DescentState ex_step(const DescentState& s, const ExLimits& limits = {},
                     ExStepInfo* info = nullptr);

struct TraceEntry {
  std::uint64_t iteration = 0;
  std::string rule;
  std::string ord;
  std::uint64_t k_end = 0;
  std::string truth;
  std::string action;
  std::size_t digest = 0;
  bool tainted = false;
  std::string sequent;
};

struct ExtractionReport {
  // True is a Delta_0 member of the end-sequent with no witness to report.
  // Stuck is a state the step functions cannot handle, such as an axiom
  // that is false under the current bound; it cannot arise from a bad pair.
  enum Outcome { Witness, True, Exhausted, Stuck };
  enum Reason { IterationLimit, WitnessCap, FghBudget };

  Outcome outcome = Exhausted;
  Reason reason = IterationLimit;
  std::uint64_t witness = 0;
  std::optional<Formula> formula;
  std::uint64_t iteration = 0;
  std::string detail;
  std::vector<TraceEntry> trace;
  // Set by ex_extract when the capped comparison resolves.
  std::optional<bool> bound_confirmed;

  bool ok() const { return outcome == Witness || outcome == True; }
};

const char* ex_outcome_name(ExtractionReport::Outcome o);
const char* ex_reason_name(ExtractionReport::Reason r);

DescentState ex_initial(const InfProof& p, std::uint64_t iteration = 0);
ExtractionReport ex_descend(const InfProof& p, const ExLimits& limits = {});
ExtractionReport ex_descend_from(const DescentState& s, const ExLimits& limits = {});

DescentState ex_embed(const FiniteProof& d, int n);
ExtractionReport ex_extract(const FiniteProof& d, int n, const ExLimits& limits = {});

}  // namespace ordproof

#endif  // ORDPROOF_EXTRACTION_HPP_
