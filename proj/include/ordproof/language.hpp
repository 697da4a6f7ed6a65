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

#ifndef ORDPROOF_LANGUAGE_HPP_
#define ORDPROOF_LANGUAGE_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordproof/fgh.hpp"

namespace ordproof {

class LanguageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// S^succ(var), or the numeral succ when var is empty.
struct Term {
  std::string var;
  std::uint64_t succ = 0;

  static Term zero() { return {}; }
  static Term num(std::uint64_t n) { return {"", n}; }
  static Term v(std::string name) { return {std::move(name), 0}; }
  Term S() const { return {var, succ + 1}; }

  bool closed() const { return var.empty(); }
  std::size_t depth() const { return succ; }
  std::string str() const;
  auto operator<=>(const Term&) const = default;
};

enum class Rel { Eq, Lt, Add, Mult, Box, InN };

struct FormulaNode;

class Formula {
 public:
  enum class Kind { Atom, And, Or, All, Ex, BAll, BEx };

  // Built-in atoms; positive=false gives the complement symbol.
  static Formula eq(Term a, Term b, bool positive = true);
  static Formula lt(Term a, Term b, bool positive = true);
  static Formula add(Term a, Term b, Term c, bool positive = true);
  static Formula mult(Term a, Term b, Term c, bool positive = true);
  static Formula in_n(Term t);
  static Formula not_in_n(Term t);
  // R_body^vars(args); body must be a bounded formula of the old language
  // whose free variables are among vars.
  static Formula boxed(const Formula& body, const std::vector<std::string>& vars,
                       const std::vector<Term>& args);
  static Formula conj(const Formula& a, const Formula& b);
  static Formula disj(const Formula& a, const Formula& b);
  static Formula all(const std::string& x, const Formula& body);
  static Formula ex(const std::string& x, const Formula& body);
  static Formula ball(const std::string& x, const Term& bound,
                      const Formula& body);
  static Formula bex(const std::string& x, const Term& bound,
                     const Formula& body);

  Kind kind() const;
  Rel rel() const;
  bool positive() const;
  const std::vector<Term>& args() const;
  // Canonical subscript of a boxed atom; free variables are #0, #1, ...
  const Formula& box_body() const;
  const Formula& left() const;
  const Formula& right() const;
  const Formula& body() const;
  const std::string& var() const;
  const Term& bound() const;

  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_special() const { return is_atom() && rel() == Rel::InN; }
  bool is_in_n() const { return is_special() && positive(); }
  bool is_not_in_n() const { return is_special() && !positive(); }
  bool is_boxed() const { return is_atom() && rel() == Rel::Box; }
  bool is_builtin() const { return is_atom() && !is_boxed() && !is_special(); }

  // Alpha-invariant canonical key; equality and ordering use it.
  const std::string& key() const;
  std::size_t hash() const;
  std::size_t size() const;
  std::string str() const;

  bool operator==(const Formula& o) const { return key() == o.key(); }
  bool operator<(const Formula& o) const { return key() < o.key(); }

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> n) : node_(std::move(n)) {}
  friend Formula make_formula(FormulaNode&& n);
  std::shared_ptr<const FormulaNode> node_;
};

Formula negate(const Formula& a);
Formula subst(const Formula& a, const std::string& x, const Term& t);
Formula subst_many(const Formula& a, const std::map<std::string, Term>& s);
Term subst_term(const Term& t, const std::string& x, const Term& r);

// Free variables in order of first occurrence.
std::vector<std::string> free_vars(const Formula& a);
bool is_closed(const Formula& a);
std::string fresh_var(const std::string& base, const std::set<std::string>& avoid);

// Old-language predicates.
bool is_primed(const Formula& a);
bool is_delta0_primed(const Formula& a);

struct Class {
  enum Kind { Delta0Proper, SpecialInN, SpecialNotInN, Sigma, Pi, Outside };
  Kind kind;
  int level = 0;
  bool operator==(const Class&) const = default;
};

Class classify(const Formula& a);
// A in the union of Sigma_k for k <= n (Delta_0 includes n in N).
bool in_cumulative_sigma(const Formula& a, int n);
bool is_delta0(const Formula& a);

bool eval_closed(const Formula& a);
// Truth of a closed old-language bounded formula.
bool eval_primed(const Formula& a);
// Substitutes the arguments of a boxed atom into its subscript.
Formula unbox(const Formula& a);
Formula box(const Formula& a);

class Sequent {
 public:
  Sequent() = default;
  Sequent(std::initializer_list<Formula> fs);
  explicit Sequent(const std::vector<Formula>& fs);

  void insert(const Formula& f);
  bool contains(const Formula& f) const;
  bool subset_of(const Sequent& o) const;
  Sequent unite(const Sequent& o) const;
  Sequent with(const Formula& f) const;
  Sequent without(const Formula& f) const;
  const std::vector<Formula>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  std::string str() const;
  bool operator==(const Sequent& o) const;

 private:
  std::vector<Formula> items_;
};

Sequent subst(const Sequent& g, const std::string& x, const Term& t);
std::set<std::string> free_vars(const Sequent& g);

std::uint64_t k_of(const Sequent& g);

enum class AxiomKind { Logical, Elementary, BoundedLogic, TruthAxiom, NAxiom };
std::optional<AxiomKind> is_axiom(const Sequent& g);
const char* axiom_kind_name(AxiomKind k);

// The elementary axiom schemata, instantiated with variables x y z x' y' z' w.
const std::vector<Sequent>& elementary_axioms();

// Either a concrete natural or a symbolic min-chain.
struct Bound {
  std::optional<BigInt> value;
  SymBound sym;
  std::uint64_t max_steps = 10000000;

  static Bound concrete(BigInt v) { return {std::move(v), {}}; }
  static Bound symbolic(SymBound s, std::uint64_t steps = 10000000) {
    return {std::nullopt, std::move(s), steps};
  }
  // c < K.
  bool exceeds(const BigInt& c) const;
};

struct Truth {
  enum Kind { True, False, Exhausted };
  Kind kind = False;
  std::optional<std::uint64_t> witness;
  std::optional<Formula> formula;
};

inline constexpr std::uint64_t kDefaultWitnessCap = 10000;

Truth true_bounded(const Formula& phi, const Bound& k,
                   std::uint64_t witness_cap = kDefaultWitnessCap);
Truth true_bounded_sequent(const Sequent& g, const Bound& k,
                           std::uint64_t witness_cap = kDefaultWitnessCap);
bool is_sigma1_sequent(const Sequent& g);

struct Sexp;
Term term_of(const Sexp& e);
Formula formula_of(const Sexp& e);

Term parse_term(const std::string& text);
Formula parse_formula(const std::string& text);
Sequent parse_sequent(const std::string& text);

}  // namespace ordproof

#endif  // ORDPROOF_LANGUAGE_HPP_
