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

#include <cmath>
#include <cstdint>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "listcap/code.hpp"
#include "listcap/code_eval.hpp"
#include "listcap/errors.hpp"
#include "listcap/words.hpp"

using Catch::Matchers::WithinAbs;

namespace {

// The one-use identity code: message i is sent as letter i and decoded from
// output word i.
listcap::ListCode identity_code(std::size_t n_messages) {
    std::vector<std::vector<std::size_t>> table;
    std::vector<std::vector<std::size_t>> map;
    for (std::size_t i = 0; i < n_messages; ++i) {
        table.push_back({i});
        map.push_back({i});
    }
    return listcap::ListCode(
        listcap::Encoder(1, n_messages, std::move(table)),
        listcap::ClassicalListDecoder(1, std::move(map)));
}

// Brute-force average error of a classical code, summed independently of
// the library's evaluation order.
double brute_force_pe(const listcap::ListCode &code,
                      const listcap::Channel &w) {
    const std::size_t n = code.n();
    const auto &dec = std::get<listcap::ClassicalListDecoder>(code.decoder());
    const std::uint64_t outputs = listcap::word_count(w.output_dim(), n);
    double total_success = 0.0;
    for (std::size_t i = 0; i < code.num_messages(); ++i) {
        const auto &x = code.encoder().word(i);
        for (std::uint64_t yi = 0; yi < outputs; ++yi) {
            const auto y = listcap::index_to_word(yi, w.output_dim(), n);
            const auto &list = dec.list_for(static_cast<std::size_t>(yi));
            bool listed = false;
            for (std::size_t id : list) {
                listed = listed || id == i;
            }
            if (!listed) {
                continue;
            }
            double lik = 1.0;
            for (std::size_t t = 0; t < n; ++t) {
                lik *= listcap::as_classical(w.row(x[t]))[y[t]];
            }
            total_success += lik;
        }
    }
    return 1.0 - total_success / static_cast<double>(code.num_messages());
}

} // namespace

TEST_CASE("codes are validated at construction", "[code]") {
    CHECK_THROWS_AS(listcap::Encoder(1, 2, {{0}, {2}}),
                    listcap::InvalidArgumentError);
    CHECK_THROWS_AS(listcap::Encoder(2, 2, {{0}, {1}}),
                    listcap::DimensionMismatchError);
    CHECK_THROWS_AS(listcap::Encoder(0, 2, {}),
                    listcap::InvalidArgumentError);

    // Subsets must be sorted, distinct, and of the declared size.
    CHECK_THROWS_AS(listcap::ClassicalListDecoder(2, {{1, 0}, {0, 1}}),
                    listcap::InvalidArgumentError);
    CHECK_THROWS_AS(listcap::ClassicalListDecoder(2, {{0, 0}, {0, 1}}),
                    listcap::InvalidArgumentError);
    CHECK_THROWS_AS(listcap::ClassicalListDecoder(2, {{0}, {0, 1}}),
                    listcap::InvalidArgumentError);

    // List size above the message count is rejected at code assembly.
    CHECK_THROWS_AS(
        listcap::ListCode(listcap::Encoder(1, 2, {{0}, {1}}),
                          listcap::ClassicalListDecoder(3, {{0, 1, 2},
                                                            {0, 1, 2}})),
        listcap::InvalidArgumentError);
    // So is a decoder that names a message the encoder does not have.
    CHECK_THROWS_AS(
        listcap::ListCode(listcap::Encoder(1, 2, {{0}, {1}}),
                          listcap::ClassicalListDecoder(1, {{0}, {5}})),
        listcap::InvalidArgumentError);
}

TEST_CASE("quantum decoders must form a POVM", "[code]") {
    const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(2, 2);
    Eigen::MatrixXcd p0(2, 2);
    p0 << 1.0, 0.0, 0.0, 0.0;

    CHECK_NOTHROW(listcap::QuantumListDecoder(
        1, {{{0}, p0}, {{1}, eye - p0}}));

    // Incomplete.
    CHECK_THROWS_AS(listcap::QuantumListDecoder(1, {{{0}, p0}, {{1}, 0.5 * p0}}),
                    listcap::InvalidArgumentError);
    // Not PSD.
    CHECK_THROWS_AS(listcap::QuantumListDecoder(
                        1, {{{0}, 2.0 * p0}, {{1}, eye - 2.0 * p0}}),
                    listcap::NotPositiveSemidefiniteError);
    // Duplicate subsets.
    CHECK_THROWS_AS(listcap::QuantumListDecoder(
                        1, {{{0}, p0}, {{0}, eye - p0}}),
                    listcap::InvalidArgumentError);
    // Mismatched dimensions.
    CHECK_THROWS_AS(listcap::QuantumListDecoder(
                        1, {{{0}, p0}, {{1}, Eigen::MatrixXcd::Zero(3, 3)}}),
                    listcap::DimensionMismatchError);
}

TEST_CASE("exact error probability on closed-form codes", "[code]") {
    const auto w = testutil::bsc(0.1);

    // One use, identity decoding: the flip probability.
    const auto metrics = listcap::error_probability(identity_code(2), w);
    CHECK_THAT(metrics.p_e, WithinAbs(0.1, 1e-15));
    CHECK_THAT(metrics.success, WithinAbs(0.9, 1e-15));

    // Listing both messages everywhere cannot err.
    const listcap::ListCode both(
        listcap::Encoder(1, 2, {{0}, {1}}),
        listcap::ClassicalListDecoder(2, {{0, 1}, {0, 1}}));
    CHECK(listcap::error_probability(both, w).p_e == 0.0);

    // Three-fold repetition with majority decoding.
    const listcap::Encoder rep3(3, 2, {{0, 0, 0}, {1, 1, 1}});
    const auto dec = listcap::make_list_decoder_ml(rep3, w, 1);
    const auto rep_metrics =
        listcap::error_probability(listcap::ListCode(rep3, dec), w);
    const double q = 0.1;
    CHECK_THAT(rep_metrics.p_e,
               WithinAbs(3.0 * q * q * (1.0 - q) + q * q * q, 1e-15));

    // Orthogonal pure states with the matching projective measurement.
    Eigen::VectorXcd e0(2);
    e0 << 1.0, 0.0;
    Eigen::VectorXcd e1(2);
    e1 << 0.0, 1.0;
    const listcap::Channel qw(
        {listcap::State(listcap::DensityMatrix::pure(e0)),
         listcap::State(listcap::DensityMatrix::pure(e1))});
    Eigen::MatrixXcd p0(2, 2);
    p0 << 1.0, 0.0, 0.0, 0.0;
    const listcap::ListCode qcode(
        listcap::Encoder(1, 2, {{0}, {1}}),
        listcap::QuantumListDecoder(
            1, {{{0}, p0}, {{1}, Eigen::MatrixXcd::Identity(2, 2) - p0}}));
    CHECK(listcap::error_probability(qcode, qw).p_e == 0.0);

    // Kind mismatch is rejected.
    CHECK_THROWS_AS(listcap::error_probability(qcode, w),
                    listcap::VariantMismatchError);
    CHECK_THROWS_AS(listcap::error_probability(identity_code(2), qw),
                    listcap::VariantMismatchError);
}

TEST_CASE("maximum-likelihood decoder shape and edge cases", "[code]") {
    const auto w = testutil::bsc(0.1);
    const listcap::Encoder enc(1, 2, {{0}, {1}});

    const auto dec = listcap::make_list_decoder_ml(enc, w, 1);
    const auto &map = std::get<listcap::ClassicalListDecoder>(dec).map();
    REQUIRE(map.size() == 2);
    CHECK(map[0] == std::vector<std::size_t>{0});
    CHECK(map[1] == std::vector<std::size_t>{1});

    // Full-size lists decode everything, so nothing is ever missed.
    const auto full = listcap::make_list_decoder_ml(enc, w, 2);
    const auto pe =
        listcap::error_probability(listcap::ListCode(enc, full), w).p_e;
    CHECK_THAT(pe, WithinAbs(0.0, 1e-12));

    // Ties break toward the smaller id: under a fully symmetric channel
    // every likelihood ties, so each list is {0, ..., L-1}.
    const auto flat = testutil::bsc(0.5);
    const auto tied = listcap::make_list_decoder_ml(enc, flat, 1);
    for (const auto &subset :
         std::get<listcap::ClassicalListDecoder>(tied).map()) {
        CHECK(subset == std::vector<std::size_t>{0});
    }

    CHECK_THROWS_AS(listcap::make_list_decoder_ml(enc, w, 0),
                    listcap::InvalidArgumentError);
    CHECK_THROWS_AS(listcap::make_list_decoder_ml(enc, w, 3),
                    listcap::InvalidArgumentError);

    // Encoder letters must exist in the channel.
    const listcap::Encoder wide(1, 3, {{0}, {2}});
    CHECK_THROWS_AS(listcap::make_list_decoder_ml(wide, w, 1),
                    listcap::DimensionMismatchError);
}

TEST_CASE("no total decoder of equal list size beats maximum likelihood",
          "[code][property]") {
    // Small enough to enumerate every decoder exhaustively.
    const auto w = testutil::bsc(0.2);
    for (std::uint64_t rep = 0; rep < 4; ++rep) {
        const auto enc = testutil::random_encoder(2, 3, 2, 6000 + rep);
        for (std::size_t list_size : {std::size_t{1}, std::size_t{2}}) {
            const auto ml = listcap::make_list_decoder_ml(enc, w, list_size);
            const double ml_pe =
                listcap::error_probability(listcap::ListCode(enc, ml), w).p_e;

            // All sorted subsets of {0,1,2} of the given size.
            std::vector<std::vector<std::size_t>> choices;
            if (list_size == 1) {
                choices = {{0}, {1}, {2}};
            } else {
                choices = {{0, 1}, {0, 2}, {1, 2}};
            }
            // Enumerate every assignment of a subset to each of the 4
            // output words: 81 decoders per instance.
            double best = 1.0;
            for (std::size_t a = 0; a < choices.size(); ++a) {
                for (std::size_t b = 0; b < choices.size(); ++b) {
                    for (std::size_t c = 0; c < choices.size(); ++c) {
                        for (std::size_t d = 0; d < choices.size(); ++d) {
                            const listcap::ListCode code(
                                enc,
                                listcap::ClassicalListDecoder(
                                    list_size, {choices[a], choices[b],
                                                choices[c], choices[d]}));
                            best = std::min(best, brute_force_pe(code, w));
                        }
                    }
                }
            }
            CHECK(ml_pe <= best + 1e-12);
            CHECK_THAT(ml_pe, WithinAbs(best, 1e-12));
        }
    }
}

TEST_CASE("lifting preserves the error probability bit for bit", "[code]") {
    const auto w = testutil::bsc(0.1);

    // Fixed example first: the identity code lifted three ways.
    const auto base = identity_code(2);
    const auto base_pe = listcap::error_probability(base, w).p_e;
    for (std::size_t list_size : {std::size_t{2}, std::size_t{3}}) {
        const auto lifted = listcap::lift_code(base, list_size);
        CHECK(lifted.num_messages() == 2 * list_size);
        CHECK(lifted.list_size() == list_size);
        const auto lifted_pe = listcap::error_probability(lifted, w).p_e;
        CHECK(lifted_pe == base_pe);
    }

    // Lift of list size 1 is the base code itself.
    const auto same = listcap::lift_code(base, 1);
    CHECK(same.num_messages() == 2);

    // Random classical bases, exact equality of doubles required.
    for (std::uint64_t rep = 0; rep < 25; ++rep) {
        const std::size_t n = 1 + rep % 3;
        const std::size_t n_messages = 2 + rep % 3;
        const auto rw =
            testutil::random_classical_channel(2, 2, 6100 + rep);
        const auto enc = testutil::random_encoder(n, n_messages, 2,
                                                  6200 + rep);
        const auto dec = testutil::random_classical_decoder(
            listcap::word_count(2, n), n_messages, 1, 6300 + rep);
        const listcap::ListCode code(enc, dec);
        const double pe = listcap::error_probability(code, rw).p_e;
        for (std::size_t list_size : {std::size_t{2}, std::size_t{5}}) {
            const auto lifted = listcap::lift_code(code, list_size);
            CHECK(listcap::error_probability(lifted, rw).p_e == pe);
        }
    }

    // Random quantum bases: projective decoders over one channel use.
    for (std::uint64_t rep = 0; rep < 10; ++rep) {
        const auto qw = testutil::random_cq_channel(3, 3, 6400 + rep);
        std::vector<std::vector<std::size_t>> table = {{0}, {1}, {2}};
        const listcap::Encoder enc(1, 3, std::move(table));
        const auto dec =
            testutil::random_projective_decoder(3, 3, 6500 + rep, 1);
        const listcap::ListCode code(enc, dec);
        const double pe = listcap::error_probability(code, qw).p_e;
        const auto lifted = listcap::lift_code(code, 2);
        CHECK(listcap::error_probability(lifted, qw).p_e == pe);
    }

    // Only list size 1 codes can be lifted.
    const auto big = listcap::lift_code(base, 2);
    CHECK_THROWS_AS(listcap::lift_code(big, 3),
                    listcap::InvalidArgumentError);
    CHECK_THROWS_AS(listcap::lift_code(base, 0),
                    listcap::InvalidArgumentError);
}

TEST_CASE("library evaluation matches brute force on random codes",
          "[code][property]") {
    for (std::uint64_t rep = 0; rep < 20; ++rep) {
        const std::size_t n = 1 + rep % 3;
        const std::size_t n_messages = 2 + rep % 4;
        const std::size_t list_size = 1 + rep % 2;
        if (list_size > n_messages) {
            continue;
        }
        const auto w = testutil::random_classical_channel(2, 3, 6600 + rep);
        const auto enc =
            testutil::random_encoder(n, n_messages, 2, 6700 + rep);
        const auto dec = testutil::random_classical_decoder(
            listcap::word_count(3, n), n_messages, list_size, 6800 + rep);
        const listcap::ListCode code(enc, dec);
        const double pe = listcap::error_probability(code, w).p_e;
        CHECK_THAT(pe, WithinAbs(brute_force_pe(code, w), 1e-12));
        CHECK(pe >= -1e-15);
        CHECK(pe <= 1.0 + 1e-15);
    }
}
