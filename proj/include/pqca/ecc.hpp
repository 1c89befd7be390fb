// Copyright 2026 The pqca Authors
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

// Noise, dissipative majority voting and redundancy sizing.
//
// Block layout (triples), repeated once per block:
//
//     [C = 1 shepherd, n] [blank, 2n] [A data, n] [blank, 2n]
//
// with blank margins on both sides wide enough for every shift the routines
// make. The 2n blanks keep a vote from ever pairing a data copy with a
// shepherd as its two partners. The only irreversible primitive is the decay pump on B.

#ifndef PQCA_ECC_HPP
#define PQCA_ECC_HPP

#include <array>
#include <random>
#include <string>
#include <vector>

#include "pqca/lattice.hpp"

namespace pqca::ecc {

struct NoiseModel {
    double epsilon = 0;  // per data unit per computational cycle
    double theta = 0;    // per data unit per vote
    uint64_t seed = 1;
};

struct BlockFormat {
    int n = 0;
    long margin = 0;
    std::vector<long> data_starts;  // first triple of each A-data block
    long triples = 0;

    // The shepherd block sits 3n triples before its data block.
    long shepherd_start(size_t block) const {
        return data_starts[block] - 3L * n;
    }
    Polymer polymer() const;  // ABC with the fast-decay level on B
};

// Margins cover the largest shift made by compile_scramble (about 2n).
BlockFormat make_block_format(int n, int blocks = 1);

// Shepherd ones plus `bits[j]` copied n times into block j.
Configuration place_blocks(const BlockFormat &f, const std::vector<int> &bits);
// Number of A copies in block j that differ from `bit`.
int wrong_copies(const Configuration &c, const BlockFormat &f, size_t block, int bit);

// Flips 0 <-> 1 on each unit independently; units in state 2 are left alone.
// Throws InvalidArgument unless rate is in [0, 1].
Configuration inject_errors(const Configuration &c, double rate, std::mt19937_64 &rng);

// Majority of every triple written to all three units. NoFastDecay if B has
// no fast-decay level.
PulseSequence compile_triple_vote(const Polymer &p);

// Each A copy at offset t of an A-data block is replaced by the majority of
// itself and the copies at t + (s2 - 2 s1) and t + (2 s2 - s1). ShiftOutOfRange
// unless s1, s2 >= 1, s1 + s2 <= n and neither partner offset is zero.
PulseSequence compile_block_vote(const Polymer &p, const BlockFormat &f, int s1, int s2);
std::array<long, 2> vote_partners(int s1, int s2);

// Exchanges the first m A copies of each block with the next m, then the last
// m with the m before them (once only when 2m = n, where the two coincide).
// ShiftOutOfRange unless 1 <= m <= n/2.
PulseSequence compile_scramble(const Polymer &p, const BlockFormat &f, int m);

// Voting-partner schedule used by the Monte Carlo driver.
const std::vector<std::array<int, 2>> &default_vote_schedule();
// Scramble sizes n/2, n/3, ..., n/6 in turn.
int scramble_size(int n, size_t vote);

// 1 - (p/n)^2 (2 - p/n) - theta, clamped to [0, 1].
double vote_success_prob(double p, double n, double theta);
// Wrong fraction after one vote under independent majority of three.
double majority_wrong_fraction(double x, double theta);

struct Redundancy {
    int k = 0;             // smallest k with (2 eps)^k <= 1/(c b^2)
    int copies = 0;        // 2k + 1
    double eta = 0;        // (2 eps)^k
    double expected_failures = 0;  // b (1 - (1 - eta)^{bc}) at k
    bool within_budget = false;    // expected_failures <= f
    int k_budget = 0;      // smallest k meeting the f budget directly
    int copies_budget = 0;
    int quoted_copies = 47;
};

// NoSolution when epsilon >= 1/2.
Redundancy redundancy_required(double epsilon, double b, double c, double f);
std::string format_redundancy(const Redundancy &r);

struct EcStats {
    std::vector<double> wrong_fraction;  // row 0 after the first injection, then one row per vote
    std::vector<double> stderr_;
    double residual = 0;
    // Final wrong fraction split by the value the block holds; one-blocks
    // lose copies at their edges, zero-blocks do not.
    double residual_zero = 0;
    double residual_one = 0;
    double theta = 0;
    int trials = 0;
};

// For each round: inject epsilon on the data units, then `votes` times run a
// block vote, a scramble and theta noise on the data units. Trials are
// bitsliced 64 per word and seeded from model.seed.
EcStats monte_carlo_ec(const BlockFormat &f, const NoiseModel &model, int votes, int rounds, int trials);
std::string format_ec_report(const EcStats &s);

}  // namespace pqca::ecc

#endif
