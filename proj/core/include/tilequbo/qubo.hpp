// Copyright 2026 The tilequbo authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "tilequbo/catalog.hpp"

namespace tilequbo {

/// Binary variable values, one bit per variable.
using Assignment = std::vector<std::uint8_t>;

/// One upper-triangular pairwise coefficient, i < j.
struct QuadTerm {
    std::int32_t i = 0;
    std::int32_t j = 0;
    double value = 0.0;

    friend bool operator==(const QuadTerm&, const QuadTerm&) = default;
};

/// A quadratic unconstrained binary optimization problem in canonical sparse
/// form: E(x) = sum_i linear[i] x_i + sum_{i<j} quad[i][j] x_i x_j + offset.
/// Quadratic terms are sorted by (i, j) and never zero-valued. Immutable
/// after construction; energy evaluation is pure and thread safe.
class Qubo {
  public:
    Qubo() = default;
    /// Canonicalizes: validates indices, sorts terms, merges duplicates,
    /// drops zeros. Throws std::invalid_argument on out-of-range indices.
    Qubo(int n, std::vector<double> linear, std::vector<QuadTerm> quadratic,
         double offset);

    int num_variables() const { return n_; }
    const std::vector<double>& linear() const { return linear_; }
    const std::vector<QuadTerm>& quadratic() const { return quadratic_; }
    double offset() const { return offset_; }

    /// E(x) as defined above. Throws std::invalid_argument on length mismatch.
    double energy(const Assignment& x) const;

    /// Largest absolute coefficient over linear and quadratic terms.
    double max_abs_coefficient() const;

    friend bool operator==(const Qubo&, const Qubo&) = default;

  private:
    int n_ = 0;
    std::vector<double> linear_;
    std::vector<QuadTerm> quadratic_;
    double offset_ = 0.0;
};

/// Accumulates coefficients before canonicalization.
class QuboBuilder {
  public:
    explicit QuboBuilder(int n);

    void add_linear(int i, double value);
    void add_quadratic(int i, int j, double value);  // any i != j
    void add_offset(double value) { offset_ += value; }

    Qubo build() const;

  private:
    int n_;
    std::vector<double> linear_;
    std::map<std::pair<int, int>, double> quadratic_;
    double offset_ = 0.0;
};

/// Penalty weights for the two constraint families: `piece` scales the
/// choose-exactly-c-placements-per-shape terms, `cover` the
/// cover-each-cell-exactly-once terms. Both must be positive so that
/// energy 0 certifies a valid tiling.
struct PenaltyWeights {
    double piece = 1.0;
    double cover = 1.0;
};

/// Expands the penalty Hamiltonian
///
///   piece * sum_j (c_j - sum_{i in I_j} x_i)^2
///     + cover * sum_k (1 - sum_{i in I_k} x_i)^2
///
/// into canonical QUBO form using x^2 = x, where I_j are the placements of
/// shape j and I_k the placements covering board cell k. The offset is
/// piece * sum_j c_j^2 + cover * board area. Throws std::invalid_argument
/// on an empty catalog or non-positive weights.
Qubo build_qubo(const PlacementCatalog& catalog, const PenaltyWeights& weights);

/// The two penalty terms of the Hamiltonian, evaluated directly without
/// expansion: first the per-shape count deviations, then the per-cell
/// coverage deviations. build_qubo's energy equals
/// weights.piece * first + weights.cover * second for every assignment.
std::pair<double, double> hamiltonian_terms(const PlacementCatalog& catalog,
                                            const Assignment& x);

}  // namespace tilequbo
