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

#ifndef STACKDECEIVE_TESTS_ORACLES_H_
#define STACKDECEIVE_TESTS_ORACLES_H_

#include <optional>
#include <utility>
#include <vector>

#include "stackdeceive/game.h"
#include "stackdeceive/lp.h"
#include "stackdeceive/rational.h"

// Oracles that never call the simplex code. They enumerate vertices by
// solving every square subsystem of the constraint set exactly.
namespace stackdeceive::testing {

using Vector = std::vector<Rational>;
using Rows = std::vector<Vector>;

// Explicit constraints plus variable lower bounds, as one list.
struct HalfSpaces {
  Rows rows;
  std::vector<Relation> relations;
  Vector rhs;
};

inline HalfSpaces Expand(const LpProblem& lp) {
  HalfSpaces out;
  for (const LpConstraint& c : lp.constraints) {
    out.rows.push_back(c.coefficients);
    out.relations.push_back(c.relation);
    out.rhs.push_back(c.rhs);
  }
  for (int v = 0; v < lp.num_vars; ++v) {
    if (!lp.lower_bounds[v]) continue;
    Vector row(lp.num_vars);
    row[v] = 1;
    out.rows.push_back(std::move(row));
    out.relations.push_back(Relation::kGreaterEqual);
    out.rhs.push_back(*lp.lower_bounds[v]);
  }
  return out;
}

// Row echelon form in place; returns the rank.
inline int Eliminate(Rows& a, Vector* b = nullptr) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (!a[r][c].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    if (b) std::swap((*b)[rank], (*b)[pivot]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (int k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
      if (b) (*b)[r] -= f * (*b)[rank];
    }
    ++rank;
  }
  return rank;
}

inline int Rank(Rows a) { return Eliminate(a); }

inline std::optional<Vector> SolveSquare(Rows a, Vector b) {
  const int n = static_cast<int>(a.size());
  if (Eliminate(a, &b) < n) return std::nullopt;
  Vector x(n);
  for (int r = 0; r < n; ++r) {
    int c = 0;
    while (a[r][c].is_zero()) ++c;
    x[c] = b[r] / a[r][c];
  }
  return x;
}

inline Rational Determinant(Rows a) {
  const int n = static_cast<int>(a.size());
  Rational det(1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r) {
      if (!a[r][c].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != c) {
      std::swap(a[c], a[pivot]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

inline bool Satisfies(const Vector& row, Relation relation, const Rational& rhs,
                      const Vector& x) {
  const Rational lhs = Dot(row, x);
  switch (relation) {
    case Relation::kLessEqual: return lhs <= rhs;
    case Relation::kEqual: return lhs == rhs;
    case Relation::kGreaterEqual: return lhs >= rhs;
  }
  return false;
}

inline std::vector<int> TightSet(const HalfSpaces& h, const Vector& x) {
  std::vector<int> out;
  for (std::size_t r = 0; r < h.rows.size(); ++r) {
    if (Dot(h.rows[r], x) == h.rhs[r]) out.push_back(static_cast<int>(r));
  }
  return out;
}

template <typename F>
void ForEachSubset(int size, int k, F&& f) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > size) return;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == size - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int t = i + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

struct VertexOptimum {
  bool feasible = false;
  Rational value;
  Vector point;
};

// Best vertex of a pointed feasible region; assumes the objective is
// bounded above on it.
inline VertexOptimum BruteForceLp(const LpProblem& lp) {
  const HalfSpaces h = Expand(lp);
  const int n = lp.num_vars;
  VertexOptimum best;
  ForEachSubset(static_cast<int>(h.rows.size()), n,
                [&](const std::vector<int>& subset) {
                  Rows a;
                  Vector b;
                  for (int r : subset) {
                    a.push_back(h.rows[r]);
                    b.push_back(h.rhs[r]);
                  }
                  const auto x = SolveSquare(std::move(a), std::move(b));
                  if (!x) return;
                  for (std::size_t r = 0; r < h.rows.size(); ++r) {
                    if (!Satisfies(h.rows[r], h.relations[r], h.rhs[r], *x)) {
                      return;
                    }
                  }
                  const Rational v = Dot(lp.objective, *x);
                  if (!best.feasible || v > best.value) {
                    best = {true, v, *x};
                  }
                });
  return best;
}

// True when no edge direction leaving `x` inside the feasible region
// raises the objective. Edges are the one-dimensional solution sets of
// n - 1 independent tight constraints.
inline bool NoImprovingEdge(const LpProblem& lp, const Vector& x) {
  const HalfSpaces h = Expand(lp);
  const int n = lp.num_vars;
  const std::vector<int> tight = TightSet(h, x);
  if (n == 1) {
    for (int sign : {1, -1}) {
      const Vector d = {Rational(sign)};
      bool feasible = true;
      for (int r : tight) {
        const Rational s = Dot(h.rows[r], d);
        if ((h.relations[r] == Relation::kEqual && !s.is_zero()) ||
            (h.relations[r] == Relation::kLessEqual && s.sign() > 0) ||
            (h.relations[r] == Relation::kGreaterEqual && s.sign() < 0)) {
          feasible = false;
        }
      }
      if (feasible && Dot(lp.objective, d).sign() > 0) return false;
    }
    return true;
  }
  bool ok = true;
  ForEachSubset(static_cast<int>(tight.size()), n - 1,
                [&](const std::vector<int>& subset) {
                  if (!ok) return;
                  Rows a;
                  for (int t : subset) a.push_back(h.rows[tight[t]]);
                  if (Rank(a) < n - 1) return;
                  // Generalized cross product spans the null space of a.
                  Vector d(n);
                  for (int c = 0; c < n; ++c) {
                    Rows minor;
                    for (const Vector& row : a) {
                      Vector cut;
                      for (int k = 0; k < n; ++k) {
                        if (k != c) cut.push_back(row[k]);
                      }
                      minor.push_back(std::move(cut));
                    }
                    d[c] = Determinant(std::move(minor));
                    if (c % 2 == 1) d[c] = -d[c];
                  }
                  for (int sign : {1, -1}) {
                    Vector dir = d;
                    if (sign < 0) {
                      for (Rational& v : dir) v = -v;
                    }
                    bool feasible = true;
                    for (int r : tight) {
                      const Rational s = Dot(h.rows[r], dir);
                      if ((h.relations[r] == Relation::kEqual &&
                           !s.is_zero()) ||
                          (h.relations[r] == Relation::kLessEqual &&
                           s.sign() > 0) ||
                          (h.relations[r] == Relation::kGreaterEqual &&
                           s.sign() < 0)) {
                        feasible = false;
                        break;
                      }
                    }
                    if (feasible && Dot(lp.objective, dir).sign() > 0) {
                      ok = false;
                    }
                  }
                });
  return ok;
}

// Maximin value by vertex enumeration over (y, mu): maximize mu subject
// to mu <= leader(y, l) for each listed column and y in the simplex.
inline Rational BruteForceWorstCase(const Matrix& leader,
                                    const std::vector<int>& columns) {
  const int m = leader.rows();
  LpProblem lp(m + 1);
  lp.lower_bounds[m] = std::nullopt;
  lp.objective = Vector(m + 1);
  lp.objective[m] = 1;
  Vector simplex(m + 1, Rational(1));
  simplex[m] = 0;
  lp.constraints.push_back({simplex, Relation::kEqual, Rational(1)});
  for (int l : columns) {
    Vector row = leader.Column(l);
    row.emplace_back(-1);
    lp.constraints.push_back({row, Relation::kGreaterEqual, Rational(0)});
  }
  return BruteForceLp(lp).value;
}

inline Rational BruteForceMaximin(const Matrix& leader) {
  std::vector<int> all(leader.cols());
  for (int l = 0; l < leader.cols(); ++l) all[l] = l;
  return BruteForceWorstCase(leader, all);
}

}  // namespace stackdeceive::testing

#endif  // STACKDECEIVE_TESTS_ORACLES_H_
