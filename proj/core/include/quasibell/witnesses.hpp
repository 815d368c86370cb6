// Copyright 2026 The quasibell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUASIBELL_WITNESSES_HPP_
#define QUASIBELL_WITNESSES_HPP_

// Negativity witnesses: functionals of a model that vanish whenever the
// hidden-variable weights are all non-negative.
//
// Every witness here has the form
//
//   sum over support points of  c(lambda) * (|w(lambda)| - w(lambda))
//
// with a non-negative coefficient c, so only negatively weighted points
// contribute. For the CHSH witness the coefficient is
//
//   c_+/-(lambda) = 2 +/- (<A>^1 <B>^1 + <A>^1 <B>^0)
//
// where <K>^x is the lambda-local expectation of party K at setting x. The
// chained witness sums one such term per link x = 1..n-1 with Alice's
// setting x and Bob's settings x and x-1.

#include <cstddef>
#include <vector>

#include "quasibell/model.hpp"

namespace quasibell {

enum class Sign { Plus, Minus };
enum class Branch { Plus, Minus };

// Which correlators decide the branch of a chained link x.
//
// kProofDerived uses E(x_A, x_B) + E(x_A, x-1_B): the CHSH sub-inequality the
// chaining argument applies to Alice's settings {0, x} and Bob's {x-1, x}.
// For x = 1 it coincides with the two-setting rule E(1_A,0_B) + E(1_A,1_B).
//
// kPrinted uses E(0_A, x_B) + E(0_A, x-1_B). The bound is not guaranteed
// under this rule; it is kept so both readings can be compared.
enum class DiscriminantConvention { kProofDerived, kPrinted };

const char* to_string(Branch branch);
const char* to_string(DiscriminantConvention convention);

struct WitnessReport {
  double n_plus = 0.0;
  double n_minus = 0.0;
  double selected = 0.0;
  Branch branch = Branch::Minus;
  // Correlator sum that picked the branch (PLUS iff strictly negative).
  double discriminant = 0.0;
  // The same quantity under the other chained convention (equal to
  // discriminant for the two-setting witness).
  double alternate_discriminant = 0.0;
  // Selected-branch contribution of each support point, aligned with
  // Model::dist().support().
  std::vector<double> per_lambda_contributions;
  double faithful = 0.0;
  // Settings entering the coefficient c(lambda).
  std::size_t alice_setting = 1;
  std::size_t bob_setting = 1;
  std::size_t bob_previous_setting = 0;
  // Alice's setting in the correlators of the discriminant.
  std::size_t discriminant_alice_setting = 1;
};

struct ChainedWitnessReport {
  // terms[i] is link x = i + 1.
  std::vector<WitnessReport> terms;
  double total = 0.0;
  DiscriminantConvention convention = DiscriminantConvention::kProofDerived;
};

// N_+ or N_- of the two-setting inequality. Requires two settings per party.
double witness_pm(const Model& model, Sign sign);

// Case-selected two-setting witness: N_+ if E(1_A,0_B) + E(1_A,1_B) < 0,
// N_- otherwise (a zero discriminant selects N_-).
WitnessReport witness_chsh(const Model& model);

// Faithful witness: sum of 4 (|w| - w), i.e. eight times the negative mass.
double witness_faithful(const QuasiDist& dist);

// One link of the chained witness.
WitnessReport chained_link_witness(
    const Model& model, std::size_t link,
    DiscriminantConvention convention = DiscriminantConvention::kProofDerived);

// Sum of the link witnesses x = 1..n-1.
ChainedWitnessReport witness_chained(
    const Model& model, std::size_t n,
    DiscriminantConvention convention = DiscriminantConvention::kProofDerived);

}  // namespace quasibell

#endif  // QUASIBELL_WITNESSES_HPP_
