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

#ifndef ORDPROOF_INFINITE_PROOF_HPP_
#define ORDPROOF_INFINITE_PROOF_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordproof/finite_proof.hpp"
#include "ordproof/language.hpp"
#include "ordproof/ordinal.hpp"
#include "ordproof/stepdown.hpp"

namespace ordproof {

class IpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class IpKind { Embed, AxN, Acc, CutI, Inv, Red, E0, E };
const char* ip_kind_name(IpKind k);

struct IpNode;

// A term for an infinite pre-proof. Terms are immutable and shared.
class InfProof {
 public:
  // n is the index of the finite system; 0 picks the least admissible one.
  static InfProof embed(const FiniteProof& d, std::uint64_t m, int n = 0);
  static InfProof axn(const Sequent& g, const Ordinal& alpha);
  static InfProof acc(std::uint64_t m, const StepDown& s, const InfProof& p);
  static InfProof cut(const Formula& a, const InfProof& p0, const InfProof& p1);
  static InfProof inv(std::uint64_t n, const Formula& b, const InfProof& p);
  static InfProof red(const Formula& c, const InfProof& p0, const InfProof& p1);
  static InfProof e0(const InfProof& p);
  static InfProof e(const InfProof& p);

  IpKind kind() const;
  const FiniteProof& proof() const;
  std::uint64_t bound() const;
  int level() const;
  const Sequent& axiom() const;
  const Ordinal& alpha() const;
  std::uint64_t index() const;
  const StepDown& arg() const;
  const Formula& formula() const;
  const std::vector<InfProof>& children() const;
  const InfProof& child(std::size_t i) const;
  const IpNode* id() const { return node_.get(); }

 private:
  explicit InfProof(std::shared_ptr<IpNode> n) : node_(std::move(n)) {}
  std::shared_ptr<IpNode> node_;
  friend struct IpAccess;
};

struct IpMetrics {
  Sequent pend;
  Ordinal pord;
  int dcut = 0;
  int dacc = 0;
};

// Throws IpError when the ordinal tag is undefined (3^a with a >= w^2).
IpMetrics ip_metrics(const InfProof& p);
const Sequent& ip_pend(const InfProof& p);
const Ordinal& ip_pord(const InfProof& p);
int ip_dcut(const InfProof& p);
int ip_dacc(const InfProof& p);

struct InfRule {
  enum Kind { Ax, Acc, Or, And, Cut, Ex, Omega };
  Kind kind = Ax;
  // Repeated premise for Acc, witness for Ex, side for Or.
  std::uint64_t n = 0;
  std::optional<Formula> a;

  int dcut() const;
  std::string str() const;
  bool operator==(const InfRule& o) const;
};

// Rank of a formula in the strict classes Sigma_k (Delta_0 and m in N have
// rank 0); nullopt outside every Sigma_k.
std::optional<int> sigma_rank(const Formula& a);

struct IpUnfold {
  InfRule rule;
  StepDown step;
  InfProof child;
};

InfRule ip_rule(const InfProof& p);
StepDown ip_step(const InfProof& p);
InfProof ip_pred(const InfProof& p, std::uint64_t n);
IpUnfold ip_unfold(const InfProof& p, std::uint64_t n);

InfProof ip_univ(const std::string& v, const FiniteProof& d0, std::uint64_t m_bound,
                 std::uint64_t m, int n = 0);
InfProof ip_ind(const std::string& v, const Formula& a, const FiniteProof& d0,
                const FiniteProof& d1, std::uint64_t m_bound, std::uint64_t m, int n = 0);

struct IpDiagnostic {
  std::string path;
  std::string message;
};

std::optional<IpDiagnostic> ip_check_proper(const InfProof& p);
bool ip_is_proper(const InfProof& p);

struct LcReport {
  bool cut = false;
  bool acc = false;
  bool step = false;
  bool end = false;
  std::string detail;

  bool ok() const { return cut && acc && step && end; }
};

LcReport ip_lc(const InfProof& p, std::uint64_t n);

// True when g contains an N-axiom or a true closed prime formula.
bool contains_inf_axiom(const Sequent& g);

InfProof parse_inf_proof(const std::string& text);
std::string print_inf_proof(const InfProof& p);

}  // namespace ordproof

#endif  // ORDPROOF_INFINITE_PROOF_HPP_
