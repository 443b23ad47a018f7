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

#include "stackdeceive/deception.h"

#include <algorithm>
#include <string>
#include <utility>

#include "stackdeceive/error.h"
#include "stackdeceive/lp.h"

namespace stackdeceive {
namespace {

// Smallest column of `candidates` minimising leader(x, .).
int ArgminColumn(const Matrix& leader, const MixedStrategy& x,
                 const std::vector<int>& candidates) {
  int best = -1;
  Rational best_value;
  for (int l : candidates) {
    Rational v = Utility(leader, x, l);
    if (best < 0 || v < best_value) {
      best = l;
      best_value = std::move(v);
    }
  }
  if (best < 0) throw Error(ErrorCode::kInternal, "argmin over no columns");
  return best;
}

}  // namespace

const char* ConstructionBranchName(ConstructionBranch branch) {
  switch (branch) {
    case ConstructionBranch::kDominantColumn: return "dominant_column";
    case ConstructionBranch::kEasyCase: return "easy_case";
    case ConstructionBranch::kHardCase: return "hard_case";
  }
  return "unknown";
}

std::vector<Rational> ReducedGeometry::Reduce(const MixedStrategy& y) {
  return {y.probabilities().begin(), y.probabilities().end() - 1};
}

ReducedGeometry ReducedGeometry::Build(const Matrix& leader,
                                       const MixedStrategy& anchor) {
  const int m = leader.rows();
  const int d = m - 1;
  ReducedGeometry g{{}, {}, {}, anchor, {}};
  for (int l = 0; l < leader.cols(); ++l) {
    std::vector<Rational> grad(d);
    for (int i = 0; i < d; ++i) grad[i] = leader.at(i, l) - leader.at(d, l);
    g.gradients.push_back(std::move(grad));
  }
  for (int i = 0; i < m; ++i) {
    std::vector<Rational> normal(d);
    if (i < d) {
      normal[i] = 1;
      g.offsets.emplace_back(0);
    } else {
      std::fill(normal.begin(), normal.end(), Rational(-1));
      g.offsets.emplace_back(-1);
    }
    g.normals.push_back(std::move(normal));
  }
  const std::vector<Rational> reduced = Reduce(anchor);
  for (int i = 0; i < m; ++i) {
    if (Dot(g.normals[i], reduced) == g.offsets[i]) g.tight_facets.push_back(i);
  }
  return g;
}

FarkasCoefficients FarkasDecompose(const ReducedGeometry& geometry, int j,
                                   const std::vector<int>& tight_columns) {
  const int d = static_cast<int>(geometry.normals.size()) - 1;
  const int num_lambda = static_cast<int>(tight_columns.size());
  const int num_vars =
      num_lambda + static_cast<int>(geometry.tight_facets.size());
  LpProblem lp(num_vars);
  for (int c = 0; c < d; ++c) {
    std::vector<Rational> row;
    row.reserve(num_vars);
    for (int l : tight_columns) row.push_back(geometry.gradients[l][c]);
    for (int i : geometry.tight_facets) row.push_back(geometry.normals[i][c]);
    lp.AddConstraint(std::move(row), Relation::kEqual,
                     -geometry.gradients[j][c]);
  }
  const LpOutcome res = Solve(lp);
  if (!res.optimal()) {
    throw Error(ErrorCode::kInfeasibleDecomposition,
                "-gradient of column " + std::to_string(j + 1) +
                    " is not a nonnegative combination of the tight "
                    "gradients and facet normals");
  }
  FarkasCoefficients out;
  for (int t = 0; t < num_lambda; ++t) {
    out.lambda[tight_columns[t]] = res.point[t];
  }
  for (std::size_t t = 0; t < geometry.tight_facets.size(); ++t) {
    out.mu[geometry.tight_facets[t]] = res.point[num_lambda + t];
  }
  return out;
}

Matrix DominantColumnPayoffs(int m, int n, int j) {
  Matrix out(m, n);
  for (int i = 0; i < m; ++i) out.at(i, j) = 1;
  return out;
}

Matrix ThreatPayoffs(const Matrix& leader, const StrategyProfile& target,
                     const std::vector<int>& active, int k,
                     const Rational& alpha) {
  const int j = target.response;
  const Rational target_value = Utility(leader, target.strategy, j);
  Matrix out(leader.rows(), leader.cols());
  for (int i = 0; i < leader.rows(); ++i) {
    for (int l = 0; l < leader.cols(); ++l) {
      if (l == j) {
        out.at(i, l) =
            -leader.at(i, k) + alpha * (target_value - leader.at(i, j));
      } else if (std::binary_search(active.begin(), active.end(), l)) {
        out.at(i, l) = -leader.at(i, l);
      } else {
        out.at(i, l) = -leader.at(i, k) - 1;
      }
    }
  }
  return out;
}

std::size_t DeceptionConstruction::FakePayoffBits() const {
  std::size_t bits = 0;
  for (int i = 0; i < fake_payoffs.rows(); ++i) {
    for (int l = 0; l < fake_payoffs.cols(); ++l) {
      bits += fake_payoffs.at(i, l).BitSize();
    }
  }
  return bits;
}

DeceptionConstruction ConstructInducingPayoffs(const Matrix& leader,
                                               const StrategyProfile& target) {
  DeceptionConstruction out{target, ConstructionBranch::kDominantColumn,
                            CertifyInducibility(leader, target),
                            {}, std::nullopt, std::nullopt, {}, std::nullopt,
                            Matrix()};
  const InducibilityCertificate& cert = out.certificate;
  const int j = target.response;
  if (!cert.inducible) {
    throw Error(ErrorCode::kNotInducible,
                "leader utility " + cert.target_value.ToString() +
                    " at the target is below the maximin value " +
                    cert.maximin.ToString());
  }

  if (cert.threat.region_empty) {
    out.fake_payoffs = DominantColumnPayoffs(leader.rows(), leader.cols(), j);
    return out;
  }

  if (ExtendedRational(cert.target_value) >= cert.restricted_maximin) {
    out.branch = ConstructionBranch::kEasyCase;
    for (int l = 0; l < leader.cols(); ++l) {
      if (l != j) out.active_columns.push_back(l);
    }
    out.alpha = Rational(1);
  } else {
    out.branch = ConstructionBranch::kHardCase;
    if (!cert.threat.witness) {
      throw Error(ErrorCode::kInternal, "threat LP produced no witness");
    }
    const MixedStrategy& anchor = *cert.threat.witness;
    if (Utility(leader, anchor, j) != cert.target_value) {
      throw Error(ErrorCode::kInternal,
                  "threat witness does not sit on the target's level set");
    }
    out.geometry = ReducedGeometry::Build(leader, anchor);
    out.farkas = FarkasDecompose(*out.geometry, j, cert.threat.tight_columns);
    for (const auto& [l, lambda] : out.farkas.lambda) {
      if (lambda.sign() > 0) out.active_columns.push_back(l);
    }
    if (out.active_columns.empty()) {
      throw Error(ErrorCode::kInternal,
                  "decomposition puts no weight on any tight column");
    }
  }
  out.anchor_column = ArgminColumn(leader, target.strategy, out.active_columns);
  if (out.branch == ConstructionBranch::kHardCase) {
    out.alpha = Rational(1) / out.farkas.lambda.at(*out.anchor_column);
  }
  out.fake_payoffs = ThreatPayoffs(leader, target, out.active_columns,
                                   *out.anchor_column, *out.alpha);
  return out;
}

OptimalDeception DeceiveOptimal(const Game& game) {
  OptimalInducibleProfile optimum = ComputeOptimalInducibleProfile(game);
  DeceptionConstruction construction =
      ConstructInducingPayoffs(game.leader, optimum.profile);
  return {std::move(optimum), std::move(construction)};
}

}  // namespace stackdeceive
