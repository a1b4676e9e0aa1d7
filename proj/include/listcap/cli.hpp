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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "listcap/capacity.hpp"
#include "listcap/code_eval.hpp"
#include "listcap/errors.hpp"
#include "listcap/io.hpp"
#include "listcap/mc.hpp"
#include "listcap/renyi.hpp"
#include "listcap/rst.hpp"
#include "listcap/sweep.hpp"

namespace listcap {

/// Process exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNotConverged = 2;
inline constexpr int kExitBoundViolation = 3;

namespace detail {

inline std::vector<double> split_doubles(const std::string &csv) {
    std::vector<double> values;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            values.push_back(std::stod(item, &pos));
            if (pos != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw InvalidArgumentError("cannot parse number \"" + item +
                                       "\"");
        }
    }
    if (values.empty()) {
        throw InvalidArgumentError("empty number list");
    }
    return values;
}

inline std::vector<std::size_t> split_sizes(const std::string &csv) {
    std::vector<std::size_t> values;
    for (double v : split_doubles(csv)) {
        if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
            throw InvalidArgumentError("expected nonnegative integers");
        }
        values.push_back(static_cast<std::size_t>(v));
    }
    return values;
}

/// Writes to the given path, stdout when the path is empty.
inline void emit(const std::string &path, const std::string &content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw InvalidArgumentError("cannot open output file " + path);
    }
    out << content;
}

/// Resolves a --sigma argument: the literal "capacity" means the optimal
/// output state from the capacity iteration, anything else is a state file.
inline State resolve_sigma(const std::string &spec, const Channel &w,
                           double tol) {
    if (spec == "capacity") {
        return arimoto_blahut(w, tol).sigma_star;
    }
    return load_state(spec);
}

inline Units parse_units(const std::string &name) {
    return name == "bits" ? Units::bits : Units::nats;
}

} // namespace detail

/// Entry point of the command-line tool; returns the process exit code.
inline int run_cli(int argc, const char *const *argv) {
    CLI::App app{"Channel capacities, strong-converse exponents, and list-"
                 "decoding code evaluation"};
    app.require_subcommand(1);

    std::string channel_path;
    std::string code_path;
    std::string sigma_spec = "capacity";
    std::string units_name = "nats";
    std::string out_path;
    std::string out_code_path;
    std::string s_csv;
    std::string rates_csv;
    std::string lengths_csv;
    double tol = 1e-8;
    double rate = 0.0;
    double s_lo = -8.0;
    std::optional<double> growth_rho;
    std::size_t max_iter = 100000;
    std::size_t grid_points = 257;
    std::size_t list_size = 1;
    std::size_t trials = 10000;
    std::uint64_t seed = 1;

    const auto units_check = CLI::IsMember({"nats", "bits"});

    auto *cmd_capacity = app.add_subcommand(
        "capacity", "Capacity with a duality-gap certificate");
    cmd_capacity->add_option("--channel", channel_path, "channel JSON file")
        ->required();
    cmd_capacity->add_option("--tol", tol, "duality-gap tolerance in nats");
    cmd_capacity->add_option("--max-iter", max_iter, "iteration budget");
    cmd_capacity->add_option("--units", units_name)->check(units_check);
    cmd_capacity->add_option("--out", out_path, "output path (default stdout)");

    auto *cmd_exponent = app.add_subcommand(
        "exponent", "Strong-converse exponent over an s grid");
    cmd_exponent->add_option("--channel", channel_path)->required();
    cmd_exponent->add_option("--rate", rate, "rate in nats per use")
        ->required();
    cmd_exponent->add_option("--sigma", sigma_spec,
                             "\"capacity\" or a state JSON file");
    cmd_exponent->add_option("--s-lo", s_lo, "grid lower end (< 0)");
    cmd_exponent->add_option("--grid-points", grid_points);
    cmd_exponent->add_option("--tol", tol, "capacity tolerance for sigma");
    cmd_exponent->add_option("--units", units_name)->check(units_check);
    cmd_exponent->add_option("--out", out_path, "CSV trace path");

    auto *cmd_verify = app.add_subcommand(
        "verify", "Check the converse bound on a code");
    cmd_verify->add_option("--code", code_path, "code JSON file")->required();
    cmd_verify->add_option("--channel", channel_path)->required();
    cmd_verify->add_option("--sigma", sigma_spec);
    cmd_verify->add_option("--s", s_csv, "comma-separated s values (<= 0)")
        ->required();
    cmd_verify->add_option("--tol", tol);
    cmd_verify->add_option("--out", out_path);

    auto *cmd_sweep = app.add_subcommand(
        "sweep", "Random-coding rate/blocklength sweep");
    cmd_sweep->add_option("--channel", channel_path)->required();
    cmd_sweep->add_option("--rates", rates_csv, "comma-separated nats rates")
        ->required();
    cmd_sweep->add_option("--lengths", lengths_csv,
                          "comma-separated block lengths")
        ->required();
    cmd_sweep->add_option("--list-size", list_size, "fixed list size");
    cmd_sweep->add_option("--rho", growth_rho,
                          "exponential rule L = ceil(e^{rho n})");
    cmd_sweep->add_option("--trials", trials);
    cmd_sweep->add_option("--seed", seed);
    cmd_sweep->add_option("--out", out_path, "CSV path");

    auto *cmd_lift = app.add_subcommand(
        "lift", "Lift a conventional code to a list code and evaluate it");
    cmd_lift->add_option("--code", code_path)->required();
    cmd_lift->add_option("--channel", channel_path)->required();
    cmd_lift->add_option("--L", list_size, "target list size")->required();
    cmd_lift->add_option("--out", out_path);
    cmd_lift->add_option("--out-code", out_code_path,
                         "write the lifted code JSON here");

    auto *cmd_eval = app.add_subcommand(
        "code-eval", "Exact error probability of a code");
    cmd_eval->add_option("--code", code_path)->required();
    cmd_eval->add_option("--channel", channel_path)->required();
    cmd_eval->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        const Units units = detail::parse_units(units_name);
        if (cmd_capacity->parsed()) {
            const Channel w = load_channel(channel_path);
            try {
                const CapacityResult res = arimoto_blahut(w, tol, max_iter);
                detail::emit(out_path,
                             capacity_result_to_json(res, units).dump(2) +
                                 "\n");
            } catch (const NotConvergedError &e) {
                detail::emit(out_path,
                             capacity_result_to_json(e.best(), units).dump(2) +
                                 "\n");
                std::cerr << e.what() << "\n";
                return kExitNotConverged;
            }
            return kExitOk;
        }
        if (cmd_exponent->parsed()) {
            const Channel w = load_channel(channel_path);
            const State sigma = detail::resolve_sigma(sigma_spec, w, tol);
            const ExponentResult res =
                sc_exponent(ExponentQuery{rate, s_lo, grid_points}, w, sigma);
            std::ostringstream csv;
            write_exponent_csv(res, csv);
            detail::emit(out_path, csv.str());
            std::cout << exponent_result_to_json(res, units).dump(2) << "\n";
            return kExitOk;
        }
        if (cmd_verify->parsed()) {
            const Channel w = load_channel(channel_path);
            const ListCode code = load_code(code_path);
            const State sigma = detail::resolve_sigma(sigma_spec, w, tol);
            const std::vector<double> s_list = detail::split_doubles(s_csv);
            const BoundReport report =
                verify_converse_bound(code, w, sigma, s_list);
            detail::emit(out_path, bound_report_to_json(report).dump(2) + "\n");
            return report.violated ? kExitBoundViolation : kExitOk;
        }
        if (cmd_sweep->parsed()) {
            const Channel w = load_channel(channel_path);
            SweepConfig config;
            config.rates = detail::split_doubles(rates_csv);
            config.block_lengths = detail::split_sizes(lengths_csv);
            config.fixed_list_size = list_size;
            config.growth_rho = growth_rho;
            config.trials = trials;
            config.seed = seed;
            const std::vector<SweepRow> rows = run_sweep(w, config);
            std::ostringstream csv;
            write_sweep_csv(rows, csv);
            detail::emit(out_path, csv.str());
            return kExitOk;
        }
        if (cmd_lift->parsed()) {
            const Channel w = load_channel(channel_path);
            const ListCode base = load_code(code_path);
            const ListCode lifted = lift_code(base, list_size);
            const CodeMetrics metrics = error_probability(lifted, w);
            if (!out_code_path.empty()) {
                detail::emit(out_code_path, code_to_json(lifted).dump(2) + "\n");
            }
            detail::emit(out_path, code_metrics_to_json(metrics).dump(2) + "\n");
            return kExitOk;
        }
        if (cmd_eval->parsed()) {
            const Channel w = load_channel(channel_path);
            const ListCode code = load_code(code_path);
            const CodeMetrics metrics = error_probability(code, w);
            detail::emit(out_path, code_metrics_to_json(metrics).dump(2) + "\n");
            return kExitOk;
        }
        return kExitInputError;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

} // namespace listcap
