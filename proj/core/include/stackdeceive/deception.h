// Copyright 2026 The Stackdeceive Authors
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

#ifndef STACKDECEIVE_DECEPTION_H_
#define STACKDECEIVE_DECEPTION_H_

#include <map>
#include <optional>
#include <vector>

#include "stackdeceive/game.h"
#include "stackdeceive/inducibility.h"
#include "stackdeceive/rational.h"

namespace stackdeceive {

// Leader utilities in the reduced coordinates (y_1, ..., y_{m-1}) of the
// simplex, anchored at a point y*:
//   leader(y, l) = gradient[l] . (y - y*) + leader(y*, l)
// with gradient[l][i] = leader(i, l) - leader(m, l). The simplex is
// { y : normal[i] . y >= offset[i] } where normal[i] is the i-th unit
// vector for i < m - 1 and (-1, ..., -1) for the last facet.
struct ReducedGeometry {
  std::vector<std::vector<Rational>> gradients;  // n vectors of length m-1
  std::vector<std::vector<Rational>> normals;    // m vectors of length m-1
  std::vector<Rational> offsets;                 // m entries
  MixedStrategy anchor;
  std::vector<int> tight_facets;  // facets active at the anchor

  static ReducedGeometry Build(const Matrix& leader,
                               const MixedStrategy& anchor);

  // Reduced coordinates of a simplex point (drops the last entry).
  static std::vector<Rational> Reduce(const MixedStrategy& y);
};

struct FarkasCoefficients {
  std::map<int, Rational> lambda;  // column l in S -> lambda_l >= 0
  std::map<int, Rational> mu;      // tight facet i -> mu_i >= 0
};

// Finds lambda, mu >= 0 with
//   -gradient[j] = sum_{l in S} lambda_l gradient[l] + sum_{i in B} mu_i normal[i]
// by a zero-objective feasibility LP. Throws Error(kInfeasibleDecomposition)
// when no such combination exists.
FarkasCoefficients FarkasDecompose(const ReducedGeometry& geometry, int j,
                                   const std::vector<int>& tight_columns);

enum class ConstructionBranch { kDominantColumn, kEasyCase, kHardCase };

const char* ConstructionBranchName(ConstructionBranch branch);

struct DeceptionConstruction {
  StrategyProfile target;
  ConstructionBranch branch = ConstructionBranch::kDominantColumn;
  InducibilityCertificate certificate;
  std::vector<int> active_columns;  // S-hat; empty for the dominant branch
  std::optional<int> anchor_column;  // k
  std::optional<Rational> alpha;
  FarkasCoefficients farkas;                // hard case only
  std::optional<ReducedGeometry> geometry;  // hard case only
  Matrix fake_payoffs;

  // Total bits over all numerators and denominators of fake_payoffs.
  std::size_t FakePayoffBits() const;
};

// Matrix whose column j strictly dominates: 1 in column j, 0 elsewhere.
Matrix DominantColumnPayoffs(int m, int n, int j);

// Evaluates the threat payoffs at every pure strategy i:
//   l in active:        -leader(i, l)
//   l not in active, l != j:  -leader(i, k) - 1
//   l == j:             -leader(i, k) + alpha * (leader(x, j) - leader(i, j))
Matrix ThreatPayoffs(const Matrix& leader, const StrategyProfile& target,
                     const std::vector<int>& active, int k,
                     const Rational& alpha);

// Builds a fake follower matrix for which `target` is an SSE.
// Throws Error(kNotInducible) when leader(x, j) < maximin.
DeceptionConstruction ConstructInducingPayoffs(const Matrix& leader,
                                               const StrategyProfile& target);

struct OptimalDeception {
  OptimalInducibleProfile optimum;
  DeceptionConstruction construction;
};

// Optimal inducible profile together with a matrix inducing it.
OptimalDeception DeceiveOptimal(const Game& game);

}  // namespace stackdeceive

#endif  // STACKDECEIVE_DECEPTION_H_
