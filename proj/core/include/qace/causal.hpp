// Copyright 2026 The qace authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "qace/errors.hpp"

namespace qace {

/// Probability distribution over the outcome alphabet {0, ..., n-1}.
/// Nonnegative entries summing to 1 within 1e-12.
class FiniteDistribution {
 public:
  explicit FiniteDistribution(std::vector<double> probabilities);

  int size() const { return static_cast<int>(p_.size()); }
  double operator[](int i) const { return p_[static_cast<size_t>(i)]; }
  const std::vector<double>& probabilities() const { return p_; }

 private:
  std::vector<double> p_;
};

/// Finite causal model A -> B with a latent common cause Lambda:
/// p(lambda), p(a|lambda), p(b|a,lambda). Alphabets are 0-based ranges.
struct ClassicalCausalModel {
  int card_a = 0;
  int card_b = 0;
  int card_lambda = 0;
  std::vector<double> lambda_dist;              // [lambda]
  std::vector<std::vector<double>> a_given_lambda;  // [lambda][a]
  std::vector<std::vector<std::vector<double>>> b_given_a_lambda;  // [a][lambda][b]

  /// Checks cardinalities and that every row is a distribution.
  void validate() const;
};

/// Observational conditional p(b|a) = sum_l p(l|a) p(b|a,l), with p(l|a) by
/// Bayes' rule. Conditioning on an a with p(a) = 0 is an error.
FiniteDistribution observational(const ClassicalCausalModel& model, int a);

/// Interventional p(b|do(a)) = sum_l p(l) p(b|a,l).
FiniteDistribution interventional(const ClassicalCausalModel& model, int a);

/// Total variation distance (1/2) sum_x |P(x) - Q(x)|, in [0, 1].
double tvd(const FiniteDistribution& p, const FiniteDistribution& q);

/// |P1(b=1) - P0(b=1)| for binary alphabets.
double ace_binary(const FiniteDistribution& p1, const FiniteDistribution& p0);

/// max_b |P1(b) - P0(b)|.
double ace_max(const FiniteDistribution& p1, const FiniteDistribution& p0);

/// tvd(P1, P0); equals the largest ace over all binary coarse-grainings.
double ace_tvd(const FiniteDistribution& p1, const FiniteDistribution& p0);

/// Model file format: JSON object with "card_a", "card_b", "card_lambda",
/// "lambda_dist" (array), "a_given_lambda" (array over lambda of arrays
/// over a) and "b_given_a_lambda" (array over a of arrays over lambda of
/// arrays over b). Validated on load.
ClassicalCausalModel load_causal_model(const std::string& json_text);

}  // namespace qace
