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

#include "qace/causal.hpp"

#include <cmath>
#include <cstdlib>

#include "json.hpp"

namespace qace {

namespace {

void check_distribution_row(const std::vector<double>& row, const char* what) {
  double sum = 0.0;
  for (double p : row) {
    if (!(p >= 0.0) || !std::isfinite(p))
      throw ValidationError(std::string(what) + ": negative or non-finite probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw ValidationError(std::string(what) + ": probabilities do not sum to 1");
}

}  // namespace

FiniteDistribution::FiniteDistribution(std::vector<double> probabilities)
    : p_(std::move(probabilities)) {
  if (p_.empty()) throw ValidationError("distribution must have at least one outcome");
  check_distribution_row(p_, "distribution");
}

void ClassicalCausalModel::validate() const {
  if (card_a <= 0 || card_b <= 0 || card_lambda <= 0)
    throw ValidationError("model cardinalities must be positive");
  if (static_cast<int>(lambda_dist.size()) != card_lambda)
    throw ValidationError("lambda_dist length does not match card_lambda");
  check_distribution_row(lambda_dist, "lambda_dist");
  if (static_cast<int>(a_given_lambda.size()) != card_lambda)
    throw ValidationError("a_given_lambda must have one row per lambda");
  for (const auto& row : a_given_lambda) {
    if (static_cast<int>(row.size()) != card_a)
      throw ValidationError("a_given_lambda row length does not match card_a");
    check_distribution_row(row, "a_given_lambda");
  }
  if (static_cast<int>(b_given_a_lambda.size()) != card_a)
    throw ValidationError("b_given_a_lambda must have one block per a");
  for (const auto& block : b_given_a_lambda) {
    if (static_cast<int>(block.size()) != card_lambda)
      throw ValidationError("b_given_a_lambda block must have one row per lambda");
    for (const auto& row : block) {
      if (static_cast<int>(row.size()) != card_b)
        throw ValidationError("b_given_a_lambda row length does not match card_b");
      check_distribution_row(row, "b_given_a_lambda");
    }
  }
}

FiniteDistribution observational(const ClassicalCausalModel& model, int a) {
  model.validate();
  if (a < 0 || a >= model.card_a) throw ValidationError("a outside the model alphabet");
  double pa = 0.0;
  for (int l = 0; l < model.card_lambda; ++l)
    pa += model.lambda_dist[l] * model.a_given_lambda[l][a];
  if (pa <= 0.0)
    throw ValidationError("cannot condition on a value of A with probability zero");
  std::vector<double> out(model.card_b, 0.0);
  for (int l = 0; l < model.card_lambda; ++l) {
    const double post = model.lambda_dist[l] * model.a_given_lambda[l][a] / pa;
    for (int b = 0; b < model.card_b; ++b) out[b] += post * model.b_given_a_lambda[a][l][b];
  }
  return FiniteDistribution(std::move(out));
}

FiniteDistribution interventional(const ClassicalCausalModel& model, int a) {
  model.validate();
  if (a < 0 || a >= model.card_a) throw ValidationError("a outside the model alphabet");
  std::vector<double> out(model.card_b, 0.0);
  for (int l = 0; l < model.card_lambda; ++l)
    for (int b = 0; b < model.card_b; ++b)
      out[b] += model.lambda_dist[l] * model.b_given_a_lambda[a][l][b];
  return FiniteDistribution(std::move(out));
}

double tvd(const FiniteDistribution& p, const FiniteDistribution& q) {
  if (p.size() != q.size()) throw ValidationError("tvd requires matching alphabets");
  double sum = 0.0;
  for (int i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
  return 0.5 * sum;
}

double ace_binary(const FiniteDistribution& p1, const FiniteDistribution& p0) {
  if (p1.size() != 2 || p0.size() != 2)
    throw ValidationError("ace_binary requires binary alphabets");
  return std::abs(p1[1] - p0[1]);
}

double ace_max(const FiniteDistribution& p1, const FiniteDistribution& p0) {
  if (p1.size() != p0.size()) throw ValidationError("ace_max requires matching alphabets");
  double m = 0.0;
  for (int i = 0; i < p1.size(); ++i) m = std::max(m, std::abs(p1[i] - p0[i]));
  return m;
}

double ace_tvd(const FiniteDistribution& p1, const FiniteDistribution& p0) {
  return tvd(p1, p0);
}

ClassicalCausalModel load_causal_model(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("model file is not valid JSON: ") + e.what());
  }
  ClassicalCausalModel model;
  try {
    model.card_a = doc.at("card_a").get<int>();
    model.card_b = doc.at("card_b").get<int>();
    model.card_lambda = doc.at("card_lambda").get<int>();
    model.lambda_dist = doc.at("lambda_dist").get<std::vector<double>>();
    model.a_given_lambda = doc.at("a_given_lambda").get<std::vector<std::vector<double>>>();
    model.b_given_a_lambda =
        doc.at("b_given_a_lambda").get<std::vector<std::vector<std::vector<double>>>>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("model file has a malformed field: ") + e.what());
  }
  model.validate();
  return model;
}

}  // namespace qace
