// Copyright 2026 The listcap Authors
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

#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "listcap/capacity.hpp"
#include "listcap/channel.hpp"
#include "listcap/code.hpp"
#include "listcap/errors.hpp"
#include "listcap/mc.hpp"
#include "listcap/renyi.hpp"
#include "listcap/rst.hpp"
#include "listcap/state.hpp"

namespace listcap {

/// JSON value for a double, with infinities encoded as the strings "inf"
/// and "-inf" (JSON has no literal for them).
inline nlohmann::json json_number(double v) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    return v;
}

/// Fixed 12-significant-digit rendering used for all CSV output.
inline std::string format_sig12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace detail {

inline const nlohmann::json &require_field(const nlohmann::json &j,
                                           const char *name) {
    const auto it = j.find(name);
    if (it == j.end()) {
        throw ParseError(std::string("missing field \"") + name + "\"");
    }
    return *it;
}

/// True for any integer-typed JSON value that is not negative. Values built
/// from C++ int literals are stored signed, so checking the unsigned type
/// alone would reject them.
inline bool nonneg_int(const nlohmann::json &j) {
    return j.is_number_unsigned() ||
           (j.is_number_integer() && j.get<long long>() >= 0);
}

inline std::vector<std::vector<double>>
real_matrix(const nlohmann::json &j, const char *what) {
    if (!j.is_array() || j.empty()) {
        throw ParseError(std::string(what) + " must be a nonempty array");
    }
    std::vector<std::vector<double>> rows;
    for (const auto &row : j) {
        if (!row.is_array()) {
            throw ParseError(std::string(what) + " rows must be arrays");
        }
        std::vector<double> values;
        for (const auto &v : row) {
            if (!v.is_number()) {
                throw ParseError(std::string(what) +
                                 " entries must be numbers");
            }
            values.push_back(v.get<double>());
        }
        rows.push_back(std::move(values));
    }
    return rows;
}

inline Eigen::MatrixXcd complex_matrix(const nlohmann::json &j,
                                       const char *what) {
    const auto re = real_matrix(require_field(j, "re"), what);
    std::vector<std::vector<double>> im;
    if (j.contains("im")) {
        im = real_matrix(j.at("im"), what);
    } else {
        im.assign(re.size(), std::vector<double>(re.front().size(), 0.0));
    }
    const auto rows = static_cast<Eigen::Index>(re.size());
    const auto cols = static_cast<Eigen::Index>(re.front().size());
    if (im.size() != re.size()) {
        throw ParseError(std::string(what) +
                         ": re and im have different shapes");
    }
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        if (static_cast<Eigen::Index>(re[r].size()) != cols ||
            static_cast<Eigen::Index>(im[r].size()) != cols) {
            throw ParseError(std::string(what) + ": ragged matrix");
        }
        for (Eigen::Index c = 0; c < cols; ++c) {
            m(r, c) = std::complex<double>(re[r][c], im[r][c]);
        }
    }
    return m;
}

inline nlohmann::json matrix_to_json(const Eigen::MatrixXcd &m) {
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        nlohmann::json re_row = nlohmann::json::array();
        nlohmann::json im_row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            re_row.push_back(m(r, c).real());
            im_row.push_back(m(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return nlohmann::json{{"re", std::move(re)}, {"im", std::move(im)}};
}

} // namespace detail

/// Builds a validated Channel from its JSON description:
///   {"kind":"classical","matrix":[[...],...]}  rows = inputs, or
///   {"kind":"cq","states":[{"re":[[...]],"im":[[...]]},...]}.
/// Out-of-tolerance numeric payloads are rejected, never renormalized.
inline Channel validate_channel(const nlohmann::json &raw) {
    if (!raw.is_object()) {
        throw ParseError("channel description must be a JSON object");
    }
    const auto &kind = detail::require_field(raw, "kind");
    if (kind == "classical") {
        return Channel::from_matrix(
            detail::real_matrix(detail::require_field(raw, "matrix"),
                                "matrix"));
    }
    if (kind == "cq") {
        const auto &states = detail::require_field(raw, "states");
        if (!states.is_array() || states.empty()) {
            throw ParseError("states must be a nonempty array");
        }
        std::vector<State> rows;
        for (const auto &s : states) {
            rows.emplace_back(
                DensityMatrix(detail::complex_matrix(s, "state")));
        }
        return Channel(std::move(rows));
    }
    throw ParseError("kind must be \"classical\" or \"cq\"");
}

inline nlohmann::json channel_to_json(const Channel &w) {
    if (w.classical()) {
        nlohmann::json matrix = nlohmann::json::array();
        for (std::size_t x = 0; x < w.input_count(); ++x) {
            const ProbDist &row = w.crow(x);
            matrix.push_back(std::vector<double>(row.values().begin(),
                                                 row.values().end()));
        }
        return nlohmann::json{{"kind", "classical"},
                              {"matrix", std::move(matrix)}};
    }
    nlohmann::json states = nlohmann::json::array();
    for (std::size_t x = 0; x < w.input_count(); ++x) {
        states.push_back(detail::matrix_to_json(w.qrow(x).matrix()));
    }
    return nlohmann::json{{"kind", "cq"}, {"states", std::move(states)}};
}

/// Builds a validated reference state from JSON:
///   {"kind":"classical","probs":[...]} or {"kind":"cq","re":…,"im":…}.
inline State validate_state(const nlohmann::json &raw) {
    if (!raw.is_object()) {
        throw ParseError("state description must be a JSON object");
    }
    const auto &kind = detail::require_field(raw, "kind");
    if (kind == "classical") {
        const auto &probs = detail::require_field(raw, "probs");
        if (!probs.is_array()) {
            throw ParseError("probs must be an array");
        }
        std::vector<double> p;
        for (const auto &v : probs) {
            if (!v.is_number()) {
                throw ParseError("probs entries must be numbers");
            }
            p.push_back(v.get<double>());
        }
        return ProbDist(std::move(p));
    }
    if (kind == "cq") {
        return DensityMatrix(detail::complex_matrix(raw, "state"));
    }
    throw ParseError("kind must be \"classical\" or \"cq\"");
}

inline nlohmann::json state_to_json(const State &s) {
    if (const auto *p = std::get_if<ProbDist>(&s)) {
        return nlohmann::json{
            {"kind", "classical"},
            {"probs",
             std::vector<double>(p->values().begin(), p->values().end())}};
    }
    nlohmann::json j = detail::matrix_to_json(std::get<DensityMatrix>(s).matrix());
    j["kind"] = "cq";
    return j;
}

/// Builds a validated ListCode from JSON. Message ids are 1-based in files
/// (the message universe is 1..N) and 0-based in memory; encoder letters
/// are 0-based input indices in both. The classical decoder map is indexed
/// by the output word's index with the last letter least significant.
inline ListCode validate_code(const nlohmann::json &raw) {
    if (!raw.is_object()) {
        throw ParseError("code description must be a JSON object");
    }
    const auto &jn = detail::require_field(raw, "n");
    const auto &jbig_n = detail::require_field(raw, "N");
    const auto &jl = detail::require_field(raw, "L");
    if (!detail::nonneg_int(jn) || !detail::nonneg_int(jbig_n) ||
        !detail::nonneg_int(jl)) {
        throw ParseError("n, N, L must be nonnegative integers");
    }
    const auto n = jn.get<std::size_t>();
    const auto n_messages = jbig_n.get<std::size_t>();
    const auto list_size = jl.get<std::size_t>();

    const auto &jenc = detail::require_field(raw, "encoder");
    if (!jenc.is_array() || jenc.size() != n_messages) {
        throw ParseError("encoder must be an array of N words");
    }
    std::vector<std::vector<std::size_t>> table;
    std::size_t alphabet = 1;
    for (const auto &jword : jenc) {
        if (!jword.is_array()) {
            throw ParseError("encoder words must be arrays");
        }
        std::vector<std::size_t> word;
        for (const auto &v : jword) {
            if (!detail::nonneg_int(v)) {
                throw ParseError("encoder letters must be nonnegative ints");
            }
            word.push_back(v.get<std::size_t>());
            alphabet = std::max(alphabet, word.back() + 1);
        }
        table.push_back(std::move(word));
    }

    const auto parse_subset = [n_messages](const nlohmann::json &jsub) {
        if (!jsub.is_array()) {
            throw ParseError("decoder lists must be arrays of message ids");
        }
        std::vector<std::size_t> subset;
        for (const auto &v : jsub) {
            if (!detail::nonneg_int(v) || v.get<std::size_t>() == 0 ||
                v.get<std::size_t>() > n_messages) {
                throw ParseError("message ids must lie in 1..N");
            }
            subset.push_back(v.get<std::size_t>() - 1);
        }
        return subset;
    };

    const auto &jdec = detail::require_field(raw, "decoder");
    const auto &kind = detail::require_field(jdec, "kind");
    ListDecoder decoder = [&]() -> ListDecoder {
        if (kind == "classical") {
            const auto &jmap = detail::require_field(jdec, "map");
            if (!jmap.is_array()) {
                throw ParseError("decoder map must be an array");
            }
            std::vector<std::vector<std::size_t>> map;
            for (const auto &jsub : jmap) {
                map.push_back(parse_subset(jsub));
            }
            return ClassicalListDecoder(list_size, std::move(map));
        }
        if (kind == "quantum") {
            const auto &jelems = detail::require_field(jdec, "elements");
            if (!jelems.is_array()) {
                throw ParseError("decoder elements must be an array");
            }
            std::vector<PovmElement> elements;
            for (const auto &je : jelems) {
                elements.push_back(PovmElement{
                    parse_subset(detail::require_field(je, "subset")),
                    detail::complex_matrix(je, "POVM element")});
            }
            return QuantumListDecoder(list_size, std::move(elements));
        }
        throw ParseError("decoder kind must be \"classical\" or \"quantum\"");
    }();
    return ListCode(Encoder(n, alphabet, std::move(table)),
                    std::move(decoder));
}

inline nlohmann::json code_to_json(const ListCode &code) {
    nlohmann::json encoder = nlohmann::json::array();
    for (std::size_t i = 0; i < code.num_messages(); ++i) {
        encoder.push_back(code.encoder().word(i));
    }
    nlohmann::json decoder;
    const auto subset_json = [](const std::vector<std::size_t> &subset) {
        std::vector<std::size_t> ids;
        ids.reserve(subset.size());
        for (std::size_t id : subset) {
            ids.push_back(id + 1);
        }
        return nlohmann::json(ids);
    };
    if (const auto *c = std::get_if<ClassicalListDecoder>(&code.decoder())) {
        nlohmann::json map = nlohmann::json::array();
        for (const auto &subset : c->map()) {
            map.push_back(subset_json(subset));
        }
        decoder = nlohmann::json{{"kind", "classical"},
                                 {"map", std::move(map)}};
    } else {
        const auto &q = std::get<QuantumListDecoder>(code.decoder());
        nlohmann::json elements = nlohmann::json::array();
        for (const auto &e : q.elements()) {
            nlohmann::json je = detail::matrix_to_json(e.matrix);
            je["subset"] = subset_json(e.subset);
            elements.push_back(std::move(je));
        }
        decoder = nlohmann::json{{"kind", "quantum"},
                                 {"elements", std::move(elements)}};
    }
    return nlohmann::json{{"n", code.n()},
                          {"N", code.num_messages()},
                          {"L", code.list_size()},
                          {"encoder", std::move(encoder)},
                          {"decoder", std::move(decoder)}};
}

/// Loads and parses a JSON file, wrapping stream and syntax failures in
/// ParseError.
inline nlohmann::json load_json(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline Channel load_channel(const std::string &path) {
    return validate_channel(load_json(path));
}

inline State load_state(const std::string &path) {
    return validate_state(load_json(path));
}

inline ListCode load_code(const std::string &path) {
    return validate_code(load_json(path));
}

/// Units for displayed entropic quantities. Internal values are nats.
enum class Units { nats, bits };

inline double display_value(double nats, Units units) {
    return units == Units::bits ? nats / std::log(2.0) : nats;
}

inline const char *units_name(Units units) {
    return units == Units::bits ? "bits" : "nats";
}

inline nlohmann::json capacity_result_to_json(const CapacityResult &r,
                                              Units units) {
    std::vector<double> p(r.p_star.values().begin(), r.p_star.values().end());
    return nlohmann::json{{"value", json_number(display_value(r.value, units))},
                          {"lower", json_number(display_value(r.lower, units))},
                          {"upper", json_number(display_value(r.upper, units))},
                          {"gap", json_number(display_value(r.gap, units))},
                          {"p_star", std::move(p)},
                          {"iterations", r.iterations},
                          {"units", units_name(units)}};
}

inline nlohmann::json exponent_result_to_json(const ExponentResult &r,
                                              Units units) {
    return nlohmann::json{
        {"exponent", json_number(display_value(r.exponent, units))},
        {"s_star", r.s_star},
        {"grid_evaluations", r.trace.size()},
        {"units", units_name(units)}};
}

inline nlohmann::json bound_report_to_json(const BoundReport &r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : r.rows) {
        rows.push_back(nlohmann::json{{"s", row.s},
                                      {"lhs", json_number(row.lhs)},
                                      {"rhs", json_number(row.rhs)},
                                      {"margin", json_number(row.margin)}});
    }
    return nlohmann::json{{"rows", std::move(rows)},
                          {"violated", r.violated}};
}

inline nlohmann::json code_metrics_to_json(const CodeMetrics &m) {
    return nlohmann::json{{"p_e", json_number(m.p_e)},
                          {"success", json_number(m.success)}};
}

inline nlohmann::json rst_summary_to_json(const RSTSummary &s) {
    nlohmann::json j{{"r_of_t", json_number(s.r_of_t)},
                     {"s_of_t", json_number(s.s_of_t)},
                     {"expected_s_of_t", json_number(s.expected_s_of_t)}};
    if (s.quantum_resolution_residual) {
        j["quantum_resolution_residual"] =
            json_number(*s.quantum_resolution_residual);
    }
    if (s.coverage_residual) {
        j["coverage_residual"] = json_number(*s.coverage_residual);
    }
    return j;
}

} // namespace listcap
