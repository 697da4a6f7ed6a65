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

#ifndef ORDPROOF_DEMOS_HPP_
#define ORDPROOF_DEMOS_HPP_

#include <cstdint>

#include "ordproof/finite_proof.hpp"

namespace ordproof {

// ex z R_add(#0,#1,#2)(a, b, z)
Formula demo_add_goal(std::uint64_t a, std::uint64_t b);
// ex z R_(#0=#0)(z)
Formula demo_refl_goal();
// ex z R_(#0=#1)(v, z)
Formula demo_eq_goal(const Term& v);

// {add(a, b, a+b)} from the recursion axioms.
FiniteProof demo_add_fact(std::uint64_t a, std::uint64_t b);
// {demo_add_goal(a, b)} by an existential at a+b.
FiniteProof demo_add(std::uint64_t a, std::uint64_t b);
// {demo_refl_goal()} by an existential at 0.
FiniteProof demo_refl();
// {demo_eq_goal(t)} by Sigma_1 induction up to t.
FiniteProof demo_ind(std::uint64_t t);
// {demo_refl_goal()} through a cut on demo_add_goal(a, b).
FiniteProof demo_sigma1_cut(std::uint64_t a, std::uint64_t b);
// {demo_add_goal(a, b)} through a cut on the Sigma_2 formula
// ex x all y R_(#0<#1)(y, x), whose right premise picks the witness 0.
FiniteProof demo_sigma2_detour(std::uint64_t a, std::uint64_t b);

}  // namespace ordproof

#endif  // ORDPROOF_DEMOS_HPP_
