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

#include <optional>
#include <stdexcept>
#include <string>

#include "tilequbo/ising.hpp"
#include "tilequbo/qubo.hpp"

namespace tilequbo {

/// Raised on malformed model files; carries a 1-based line number when the
/// offending line is known (0 otherwise).
class parse_error : public std::runtime_error {
  public:
    parse_error(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                      : what),
          line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

/// Optional provenance block attached to JSON exports.
struct ModelMetadata {
    std::string instance_hash;
    PenaltyWeights weights;
};

/// Serializes to the qbsolv text format:
///
///   c <comments>
///   c offset <value>                     (only when the offset is nonzero)
///   p qubo 0 <maxNodes> <nNodes> <nCouplers>
///   <i> <i> <value>                      (nNodes linear lines)
///   <i> <j> <value>                      (nCouplers coupler lines, i < j)
///
/// Output is canonical and byte stable: linear lines ascending, coupler
/// lines lexicographic, values printed with round-trip precision.
std::string export_qubo(const Qubo& q);

/// Inverse of export_qubo. Accepts comment lines anywhere; requires exactly
/// one header. Malformed lines, duplicate entries, indices outside the
/// declared range, and count mismatches raise parse_error with the line.
Qubo parse_qubo(const std::string& text);

/// JSON forms: {"model":"qubo","n":...,"offset":...,"linear":[...],
/// "quadratic":[[i,j,v],...]} and the ising equivalent with "fields" and
/// "couplings". `metadata`, when present, adds instance hash and weights.
std::string qubo_to_json(const Qubo& q,
                         const std::optional<ModelMetadata>& metadata = std::nullopt);
std::string ising_to_json(const IsingModel& m,
                          const std::optional<ModelMetadata>& metadata = std::nullopt);

Qubo qubo_from_json(const std::string& text);
IsingModel ising_from_json(const std::string& text);

/// "qubo" or "ising", from a JSON document's "model" field.
std::string json_model_kind(const std::string& text);

}  // namespace tilequbo
