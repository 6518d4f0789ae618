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

#include "tilequbo/ising.hpp"

#include <algorithm>
#include <stdexcept>

namespace tilequbo {

IsingModel::IsingModel(int n, std::vector<double> fields,
                       std::vector<QuadTerm> couplings, double offset)
    : n_(n), fields_(std::move(fields)), offset_(offset) {
    if (n < 0) throw std::invalid_argument("spin count must be non-negative");
    fields_.resize(n, 0.0);

    for (auto& t : couplings) {
        if (t.i == t.j) throw std::invalid_argument("coupling with i == j");
        if (t.i > t.j) std::swap(t.i, t.j);
        if (t.i < 0 || t.j >= n) throw std::invalid_argument("coupling index out of range");
    }
    std::sort(couplings.begin(), couplings.end(), [](const QuadTerm& a, const QuadTerm& b) {
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    });
    for (const auto& t : couplings) {
        if (!couplings_.empty() && couplings_.back().i == t.i && couplings_.back().j == t.j) {
            couplings_.back().value += t.value;
        } else {
            couplings_.push_back(t);
        }
    }
    std::erase_if(couplings_, [](const QuadTerm& t) { return t.value == 0.0; });
}

double IsingModel::energy(const SpinAssignment& s) const {
    if (static_cast<int>(s.size()) != n_) {
        throw std::invalid_argument("spin assignment length does not match spin count");
    }
    double e = offset_;
    for (const auto& t : couplings_) e -= t.value * s[t.i] * s[t.j];
    for (int i = 0; i < n_; ++i) e -= fields_[i] * s[i];
    return e;
}

IsingModel to_ising(const Qubo& q) {
    const int n = q.num_variables();
    std::vector<double> fields(n, 0.0);
    std::vector<QuadTerm> couplings;
    couplings.reserve(q.quadratic().size());

    // x_i = (s_i+1)/2 and x_i x_j = (s_i s_j + s_i + s_j + 1)/4, matched
    // against the minus signs of the spin energy convention.
    double offset = q.offset();
    for (int i = 0; i < n; ++i) {
        fields[i] = -q.linear()[i] / 2.0;
        offset += q.linear()[i] / 2.0;
    }
    for (const auto& t : q.quadratic()) {
        couplings.push_back({t.i, t.j, -t.value / 4.0});
        fields[t.i] -= t.value / 4.0;
        fields[t.j] -= t.value / 4.0;
        offset += t.value / 4.0;
    }
    return IsingModel(n, std::move(fields), std::move(couplings), offset);
}

Qubo from_ising(const IsingModel& m) {
    const int n = m.num_spins();
    std::vector<double> linear(n, 0.0);
    std::vector<QuadTerm> quadratic;
    quadratic.reserve(m.couplings().size());

    // s_i = 2x_i - 1.
    double offset = m.offset();
    for (int i = 0; i < n; ++i) {
        linear[i] = -2.0 * m.fields()[i];
        offset += m.fields()[i];
    }
    for (const auto& t : m.couplings()) {
        quadratic.push_back({t.i, t.j, -4.0 * t.value});
        linear[t.i] += 2.0 * t.value;
        linear[t.j] += 2.0 * t.value;
        offset -= t.value;
    }
    return Qubo(n, std::move(linear), std::move(quadratic), offset);
}

SpinAssignment spins_from_bits(const Assignment& x) {
    SpinAssignment s(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] ? 1 : -1;
    return s;
}

Assignment bits_from_spins(const SpinAssignment& s) {
    Assignment x(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) x[i] = s[i] > 0 ? 1 : 0;
    return x;
}

}  // namespace tilequbo
