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

#ifndef ORDPROOF_FINITE_PROOF_HPP_
#define ORDPROOF_FINITE_PROOF_HPP_

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordproof/language.hpp"

namespace ordproof {

class FpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FpKind { Ax, Rep, And, Or, All, Ex, Cut, Ind };

const char* fp_kind_name(FpKind k);

struct FpNode;

// A term of Z_n. Binary constructors pad the shorter child with repetitions
// unless pad is false.
class FiniteProof {
 public:
  static FiniteProof ax(const Sequent& g);
  static FiniteProof rep(const Sequent& g, const FiniteProof& d0);
  static FiniteProof conj(const Sequent& g, const Formula& a, const FiniteProof& d0,
                          const FiniteProof& d1, bool pad = true);
  static FiniteProof disj(const Sequent& g, int i, const Formula& a,
                          const FiniteProof& d0);
  static FiniteProof all(const Sequent& g, const std::string& v, const Formula& a,
                         const FiniteProof& d0);
  static FiniteProof ex(const Sequent& g, const Term& t, const Formula& a,
                        const FiniteProof& d0);
  static FiniteProof cut(const Sequent& g, const Formula& a, const FiniteProof& d0,
                         const FiniteProof& d1, bool pad = true);
  static FiniteProof ind(const Sequent& g, const std::string& v, const Term& t,
                         const Formula& a, const FiniteProof& d0,
                         const FiniteProof& d1, bool pad = true);

  FpKind kind() const;
  const Sequent& end() const;
  // Principal formula (And, Or, All, Ex), cut formula, or induction formula.
  const Formula& formula() const;
  const std::string& var() const;
  const Term& term() const;
  int index() const;
  const std::vector<FiniteProof>& children() const;
  const FiniteProof& child(std::size_t i) const { return children()[i]; }
  std::size_t height() const;
  const FpNode* id() const { return node_.get(); }

 private:
  explicit FiniteProof(std::shared_ptr<const FpNode> n) : node_(std::move(n)) {}
  static FiniteProof make(FpNode&& n);
  std::shared_ptr<const FpNode> node_;
};

FiniteProof fp_pad(const FiniteProof& d, std::size_t height);

// Premise formula of the quantifier rules; bounded quantifiers are read as
// abbreviations of their unbounded forms.
Formula fp_instance(const Formula& a, const Term& t);

struct FpDiagnostic {
  std::string path;
  std::string message;
};

std::optional<FpDiagnostic> fp_check(const FiniteProof& d, int n);

// Checks against the old-language classes: cut and induction formulas are
// judged by their boxed images.
std::optional<FpDiagnostic> fp_check_primed(const FiniteProof& d, int n);

struct FpMetrics {
  std::size_t height = 0;
  std::size_t dterm = 0;
  int dcut = 0;
  Sequent end;
};

FpMetrics fp_metrics(const FiniteProof& d, int n);
std::size_t fp_dterm(const FiniteProof& d);
bool fp_uses_ind(const FiniteProof& d);

FiniteProof fp_subst(const FiniteProof& d, const std::string& v, std::uint64_t m);

// Proof of {not A, box A} for an old-language formula A.
FiniteProof fp_box_lemma(const Formula& a);

FiniteProof fp_import_primed(const FiniteProof& d, int n);

// Searches for a proof of g by cuts on the given atoms, with axioms at the
// leaves.
std::optional<FiniteProof> fp_search_cuts(const Sequent& g,
                                          const std::vector<Formula>& atoms,
                                          int depth);

FiniteProof parse_proof(const std::string& text, bool pad = true);
std::string print_proof(const FiniteProof& d);

}  // namespace ordproof

#endif  // ORDPROOF_FINITE_PROOF_HPP_
