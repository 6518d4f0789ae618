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

#include "tilequbo/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tilequbo {

Qubo::Qubo(int n, std::vector<double> linear, std::vector<QuadTerm> quadratic,
           double offset)
    : n_(n), linear_(std::move(linear)), offset_(offset) {
    if (n < 0) throw std::invalid_argument("variable count must be non-negative");
    linear_.resize(n, 0.0);

    std::vector<QuadTerm> terms = std::move(quadratic);
    for (auto& t : terms) {
        if (t.i == t.j) throw std::invalid_argument("quadratic term with i == j");
        if (t.i > t.j) std::swap(t.i, t.j);
        if (t.i < 0 || t.j >= n) throw std::invalid_argument("quadratic index out of range");
    }
    std::sort(terms.begin(), terms.end(), [](const QuadTerm& a, const QuadTerm& b) {
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    });
    for (const auto& t : terms) {
        if (!quadratic_.empty() && quadratic_.back().i == t.i && quadratic_.back().j == t.j) {
            quadratic_.back().value += t.value;
        } else {
            quadratic_.push_back(t);
        }
    }
    std::erase_if(quadratic_, [](const QuadTerm& t) { return t.value == 0.0; });
}

double Qubo::energy(const Assignment& x) const {
    if (static_cast<int>(x.size()) != n_) {
        throw std::invalid_argument("assignment length does not match variable count");
    }
    double e = offset_;
    for (int i = 0; i < n_; ++i) {
        if (x[i]) e += linear_[i];
    }
    for (const auto& t : quadratic_) {
        if (x[t.i] && x[t.j]) e += t.value;
    }
    return e;
}

double Qubo::max_abs_coefficient() const {
    double m = 0.0;
    for (double v : linear_) m = std::max(m, std::abs(v));
    for (const auto& t : quadratic_) m = std::max(m, std::abs(t.value));
    return m;
}

QuboBuilder::QuboBuilder(int n) : n_(n), linear_(n, 0.0) {
    if (n < 0) throw std::invalid_argument("variable count must be non-negative");
}

void QuboBuilder::add_linear(int i, double value) {
    if (i < 0 || i >= n_) throw std::invalid_argument("linear index out of range");
    linear_[i] += value;
}

void QuboBuilder::add_quadratic(int i, int j, double value) {
    if (i == j) throw std::invalid_argument("quadratic term with i == j");
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n_) throw std::invalid_argument("quadratic index out of range");
    quadratic_[{i, j}] += value;
}

Qubo QuboBuilder::build() const {
    std::vector<QuadTerm> terms;
    terms.reserve(quadratic_.size());
    for (const auto& [key, value] : quadratic_) {
        terms.push_back({key.first, key.second, value});
    }
    return Qubo(n_, linear_, std::move(terms), offset_);
}

Qubo build_qubo(const PlacementCatalog& catalog, const PenaltyWeights& weights) {
    if (catalog.num_placements() == 0) {
        throw std::invalid_argument("catalog has no placements");
    }
    if (weights.piece <= 0.0 || weights.cover <= 0.0) {
        throw std::invalid_argument("penalty weights must be positive");
    }

    QuboBuilder builder(catalog.num_placements());

    // (c - sum q)^2 = c^2 + (1 - 2c) sum q + 2 sum_{i<j} q_i q_j using q^2 = q.
    for (int j = 0; j < catalog.num_shapes(); ++j) {
        const IndexRange& range = catalog.shape_ranges[j];
        double c = catalog.counts[j];
        builder.add_offset(weights.piece * c * c);
        for (int i = range.begin; i < range.end; ++i) {
            builder.add_linear(i, weights.piece * (1.0 - 2.0 * c));
        }
        for (int a = range.begin; a < range.end; ++a) {
            for (int b = a + 1; b < range.end; ++b) {
                builder.add_quadratic(a, b, 2.0 * weights.piece);
            }
        }
    }

    for (const auto& covering : catalog.cell_incidence) {
        builder.add_offset(weights.cover);
        for (int i : covering) builder.add_linear(i, -weights.cover);
        for (std::size_t a = 0; a < covering.size(); ++a) {
            for (std::size_t b = a + 1; b < covering.size(); ++b) {
                builder.add_quadratic(covering[a], covering[b], 2.0 * weights.cover);
            }
        }
    }

    return builder.build();
}

std::pair<double, double> hamiltonian_terms(const PlacementCatalog& catalog,
                                            const Assignment& x) {
    if (static_cast<int>(x.size()) != catalog.num_placements()) {
        throw std::invalid_argument("assignment length does not match catalog");
    }

    double piece_term = 0.0;
    for (int j = 0; j < catalog.num_shapes(); ++j) {
        const IndexRange& range = catalog.shape_ranges[j];
        double chosen = 0.0;
        for (int i = range.begin; i < range.end; ++i) chosen += x[i];
        double deviation = catalog.counts[j] - chosen;
        piece_term += deviation * deviation;
    }

    double cover_term = 0.0;
    for (const auto& covering : catalog.cell_incidence) {
        double chosen = 0.0;
        for (int i : covering) chosen += x[i];
        double deviation = 1.0 - chosen;
        cover_term += deviation * deviation;
    }

    return {piece_term, cover_term};
}

}  // namespace tilequbo
