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
#include <vector>

#include "tilequbo/qubo.hpp"

namespace tilequbo {

/// Spin values, one per variable, each -1 or +1.
using SpinAssignment = std::vector<std::int8_t>;

/// Spin model with energy convention
///   E(s) = -sum_{i<j} J_ij s_i s_j - sum_i h_i s_i + offset,  s_i in {-1,+1}.
/// Couplings are canonical sparse: sorted by (i, j), i < j, no zeros.
class IsingModel {
  public:
    IsingModel() = default;
    IsingModel(int n, std::vector<double> fields, std::vector<QuadTerm> couplings,
               double offset);

    int num_spins() const { return n_; }
    const std::vector<double>& fields() const { return fields_; }
    const std::vector<QuadTerm>& couplings() const { return couplings_; }
    double offset() const { return offset_; }

    double energy(const SpinAssignment& s) const;

    friend bool operator==(const IsingModel&, const IsingModel&) = default;

  private:
    int n_ = 0;
    std::vector<double> fields_;
    std::vector<QuadTerm> couplings_;
    double offset_ = 0.0;
};

/// Substitutes x = (s + 1)/2. Energies are preserved exactly: for every
/// assignment x, q.energy(x) == to_ising(q).energy(spins_from_bits(x)).
IsingModel to_ising(const Qubo& q);

/// Substitutes s = 2x - 1; the algebraic inverse of to_ising.
Qubo from_ising(const IsingModel& m);

/// Bit 1 -> spin +1, bit 0 -> spin -1, and back.
SpinAssignment spins_from_bits(const Assignment& x);
Assignment bits_from_spins(const SpinAssignment& s);

}  // namespace tilequbo
