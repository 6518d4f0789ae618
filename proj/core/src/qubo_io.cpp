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

#include "tilequbo/qubo_io.hpp"

#include <cstdio>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace tilequbo {

namespace {

// Shortest representation that parses back to the same double.
std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == v) {
        for (int precision = 1; precision < 17; ++precision) {
            char shorter[64];
            std::snprintf(shorter, sizeof(shorter), "%.*g", precision, v);
            std::sscanf(shorter, "%lf", &back);
            if (back == v) return shorter;
        }
    }
    return buf;
}

bool parse_double(const std::string& s, double& out) {
    try {
        std::size_t pos = 0;
        out = std::stod(s, &pos);
        return pos == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

bool parse_int(const std::string& s, int& out) {
    try {
        std::size_t pos = 0;
        out = std::stoi(s, &pos);
        return pos == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

}  // namespace

std::string export_qubo(const Qubo& q) {
    std::ostringstream out;
    int num_nodes = 0;
    for (double v : q.linear()) {
        if (v != 0.0) ++num_nodes;
    }
    out << "c tilequbo qubo export\n";
    if (q.offset() != 0.0) out << "c offset " << format_value(q.offset()) << "\n";
    out << "p qubo 0 " << q.num_variables() << " " << num_nodes << " "
        << q.quadratic().size() << "\n";
    for (int i = 0; i < q.num_variables(); ++i) {
        if (q.linear()[i] != 0.0) {
            out << i << " " << i << " " << format_value(q.linear()[i]) << "\n";
        }
    }
    for (const auto& t : q.quadratic()) {
        out << t.i << " " << t.j << " " << format_value(t.value) << "\n";
    }
    return out.str();
}

Qubo parse_qubo(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;

    bool header_seen = false;
    int max_nodes = 0, declared_nodes = 0, declared_couplers = 0;
    double offset = 0.0;
    std::vector<double> linear;
    std::vector<QuadTerm> quadratic;
    std::set<std::pair<int, int>> seen;
    int node_lines = 0, coupler_lines = 0;

    while (std::getline(in, raw)) {
        ++lineno;
        auto tokens = tokenize(raw);
        if (tokens.empty()) continue;

        if (tokens[0] == "c") {
            if (tokens.size() == 3 && tokens[1] == "offset") {
                if (!parse_double(tokens[2], offset)) {
                    throw parse_error(lineno, "bad offset value '" + tokens[2] + "'");
                }
            }
            continue;
        }

        if (tokens[0] == "p") {
            if (header_seen) throw parse_error(lineno, "duplicate header line");
            if (tokens.size() != 6 || tokens[1] != "qubo") {
                throw parse_error(lineno, "expected 'p qubo 0 maxNodes nNodes nCouplers'");
            }
            if (!parse_int(tokens[3], max_nodes) || !parse_int(tokens[4], declared_nodes) ||
                !parse_int(tokens[5], declared_couplers) || max_nodes < 0 ||
                declared_nodes < 0 || declared_couplers < 0) {
                throw parse_error(lineno, "bad header counts");
            }
            header_seen = true;
            linear.assign(max_nodes, 0.0);
            continue;
        }

        if (!header_seen) throw parse_error(lineno, "data before header line");
        if (tokens.size() != 3) {
            throw parse_error(lineno, "expected 'i j value'");
        }
        int i = 0, j = 0;
        double value = 0.0;
        if (!parse_int(tokens[0], i) || !parse_int(tokens[1], j) ||
            !parse_double(tokens[2], value)) {
            throw parse_error(lineno, "malformed entry '" + raw + "'");
        }
        if (i < 0 || i >= max_nodes || j < 0 || j >= max_nodes) {
            throw parse_error(lineno, "index out of declared range");
        }
        if (!seen.insert({i, j}).second) {
            throw parse_error(lineno, "duplicate entry for (" + tokens[0] + ", " +
                                          tokens[1] + ")");
        }
        if (i == j) {
            linear[i] = value;
            ++node_lines;
        } else {
            if (i > j) throw parse_error(lineno, "coupler indices must satisfy i < j");
            quadratic.push_back({i, j, value});
            ++coupler_lines;
        }
    }

    if (!header_seen) throw parse_error(0, "missing header line");
    if (node_lines != declared_nodes) {
        throw parse_error(0, "header declares " + std::to_string(declared_nodes) +
                                 " node lines, found " + std::to_string(node_lines));
    }
    if (coupler_lines != declared_couplers) {
        throw parse_error(0, "header declares " + std::to_string(declared_couplers) +
                                 " coupler lines, found " + std::to_string(coupler_lines));
    }
    return Qubo(max_nodes, std::move(linear), std::move(quadratic), offset);
}

namespace {

nlohmann::json metadata_json(const ModelMetadata& m) {
    return nlohmann::json{{"instance_hash", m.instance_hash},
                          {"weights", {{"piece", m.weights.piece}, {"cover", m.weights.cover}}}};
}

nlohmann::json terms_json(const std::vector<QuadTerm>& terms) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : terms) arr.push_back({t.i, t.j, t.value});
    return arr;
}

std::vector<QuadTerm> terms_from_json(const nlohmann::json& arr) {
    std::vector<QuadTerm> terms;
    for (const auto& entry : arr) {
        if (!entry.is_array() || entry.size() != 3) {
            throw parse_error(0, "quadratic entries must be [i, j, value] triples");
        }
        terms.push_back({entry[0].get<int>(), entry[1].get<int>(), entry[2].get<double>()});
    }
    return terms;
}

nlohmann::json parse_json_document(const std::string& text, const std::string& kind) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(0, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("model", "") != kind) {
        throw parse_error(0, "expected a JSON object with \"model\": \"" + kind + "\"");
    }
    return doc;
}

}  // namespace

std::string qubo_to_json(const Qubo& q, const std::optional<ModelMetadata>& metadata) {
    nlohmann::json doc{{"model", "qubo"},
                       {"n", q.num_variables()},
                       {"offset", q.offset()},
                       {"linear", q.linear()},
                       {"quadratic", terms_json(q.quadratic())}};
    if (metadata) doc["metadata"] = metadata_json(*metadata);
    return doc.dump(2) + "\n";
}

std::string ising_to_json(const IsingModel& m, const std::optional<ModelMetadata>& metadata) {
    nlohmann::json doc{{"model", "ising"},
                       {"n", m.num_spins()},
                       {"offset", m.offset()},
                       {"fields", m.fields()},
                       {"couplings", terms_json(m.couplings())}};
    if (metadata) doc["metadata"] = metadata_json(*metadata);
    return doc.dump(2) + "\n";
}

Qubo qubo_from_json(const std::string& text) {
    auto doc = parse_json_document(text, "qubo");
    try {
        return Qubo(doc.at("n").get<int>(), doc.at("linear").get<std::vector<double>>(),
                    terms_from_json(doc.at("quadratic")), doc.at("offset").get<double>());
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(0, std::string("bad qubo JSON: ") + e.what());
    }
}

IsingModel ising_from_json(const std::string& text) {
    auto doc = parse_json_document(text, "ising");
    try {
        return IsingModel(doc.at("n").get<int>(), doc.at("fields").get<std::vector<double>>(),
                          terms_from_json(doc.at("couplings")), doc.at("offset").get<double>());
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(0, std::string("bad ising JSON: ") + e.what());
    }
}

std::string json_model_kind(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(0, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("model")) {
        throw parse_error(0, "JSON document has no \"model\" field");
    }
    return doc["model"].get<std::string>();
}

}  // namespace tilequbo
