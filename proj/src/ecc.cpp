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

#include "pqca/ecc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <tuple>

#include "pqca/error.hpp"
#include "pqca/io.hpp"
#include "pqca/pulsec.hpp"

namespace pqca::ecc {

using pulsec::compile_shift;
using pulsec::flip;
using pulsec::ShiftPlan;
using pulsec::swap_pair;

Polymer BlockFormat::polymer() const {
    return Polymer::abc(3 * (size_t)triples, true);
}

BlockFormat make_block_format(int n, int blocks) {
    if (n < 1 || blocks < 1) {
        throw Error(ErrorCode::InvalidArgument, "block size and count must be positive");
    }
    BlockFormat f;
    f.n = n;
    f.margin = 2L * n + 16;
    for (int j = 0; j < blocks; j++) {
        f.data_starts.push_back(f.margin + 6L * n * j + 3L * n);
    }
    f.triples = 2 * f.margin + 6L * n * blocks + 1;
    return f;
}

Configuration place_blocks(const BlockFormat &f, const std::vector<int> &bits) {
    if (bits.size() != f.data_starts.size()) {
        throw Error(ErrorCode::InvalidArgument, "need one bit per block");
    }
    Configuration c(3 * (size_t)f.triples, 0);
    for (size_t j = 0; j < bits.size(); j++) {
        for (long t = 0; t < f.n; t++) {
            c[3 * (size_t)(f.shepherd_start(j) + t) + 2] = 1;
            c[3 * (size_t)(f.data_starts[j] + t)] = (uint8_t)(bits[j] != 0);
        }
    }
    return c;
}

int wrong_copies(const Configuration &c, const BlockFormat &f, size_t block, int bit) {
    int w = 0;
    for (long t = 0; t < f.n; t++) {
        w += c[3 * (size_t)(f.data_starts[block] + t)] != bit;
    }
    return w;
}

Configuration inject_errors(const Configuration &c, double rate, std::mt19937_64 &rng) {
    if (!(rate >= 0 && rate <= 1)) {
        throw Error(ErrorCode::InvalidArgument, "error rate must lie in [0, 1]");
    }
    std::bernoulli_distribution hit(rate);
    Configuration out = c;
    for (auto &v : out) {
        if (v <= 1 && hit(rng)) {
            v ^= 1;
        }
    }
    return out;
}

namespace {

void require_decay(const Polymer &p) {
    pulsec::require_abc(p);
    if (!p.species('B').fast_decay) {
        throw Error(ErrorCode::NoFastDecay, "voting pumps B, which has no fast-decay level");
    }
}

// B := majority(A, B, C) within each triple. B is reset where its
// neighbors agree on 0, and set where they agree on 1.
PulseSequence restore_b() {
    PulseSequence s;
    s.push(Pulse::pump('B', 0, 0));
    s.push(Pulse::pump('B', 1, 1));
    s.push(Pulse::pi('B', 1, 1));
    return s;
}

PulseSequence c_xor_b(const Polymer &p) {
    return flip(p, 'C', {1}, {0, 1});
}

}  // namespace

PulseSequence compile_triple_vote(const Polymer &p) {
    require_decay(p);
    PulseSequence r = restore_b();
    PulseSequence s = r;
    s += swap_pair(p, 'B', 'C');
    s += r;
    s += swap_pair(p, 'A', 'B');
    s += r;
    return s;
}

std::array<long, 2> vote_partners(int s1, int s2) {
    return {(long)s2 - 2L * s1, 2L * s2 - s1};
}

PulseSequence compile_block_vote(const Polymer &p, const BlockFormat &f, int s1, int s2) {
    require_decay(p);
    // With s1 + s2 > n some copies would have both partners outside the block.
    if (s1 < 1 || s2 < 1 || s1 + s2 > f.n || 2 * s1 == s2 || 2 * s2 == s1) {
        throw Error(ErrorCode::ShiftOutOfRange, "voting shifts (" + std::to_string(s1) + "," + std::to_string(s2) +
                                                    ") need s1, s2 >= 1, s1 + s2 <= n and distinct partners");
    }
    // Unfold A=1 into 111, leaving 000 and lone B or C data alone.
    PulseSequence unfold = c_xor_b(p);
    unfold += flip(p, 'B', {1}, {0});
    unfold += c_xor_b(p);
    ShiftPlan plan;
    plan.units = {3L * (s2 - s1), 3L * s1, -3L * s2};
    PulseSequence shift = compile_shift(p, plan);

    PulseSequence s = unfold;
    s += shift;
    PulseSequence ab = swap_pair(p, 'A', 'B');
    s += ab;
    s += restore_b();
    s += ab;
    s += shift.reversed();
    s += unfold.reversed();
    // The copies in B and C still agree with each other; clear them.
    s += c_xor_b(p);
    s.push(Pulse::pump('B', 0, 0));
    s.push(Pulse::pump('B', 1, 0));
    s += c_xor_b(p);
    return s;
}

namespace {

// One controlled exchange between A tokens and B tokens. Positions are in
// triples relative to the unshifted streams; with window type w the control
// C at triple T swaps A at T + dA[w] with B at T + dB[w].
constexpr int kDA[3] = {0, 1, 1};
constexpr int kDB[3] = {0, 0, 1};

struct Stage {
    long a, b, c;
    int w;
};

// A token t pairs with B token t + K; the shepherds sit so that
// c - a + dA = G, i.e. shepherd token s controls A token s + G.
Stage solve_stage(long K, long G) {
    for (int w = 0; w < 3; w++) {
        long num = K + 2 * kDA[w] - kDB[w] - G;
        if (((num % 3) + 3) % 3 != 0) {
            continue;
        }
        long a = num / 3;
        return {a, a - kDA[w] + kDB[w] - K, a + G - kDA[w], w};
    }
    throw Error(ErrorCode::InvariantViolation, "no window type balances the scramble stage");
}

PulseSequence window(const Polymer &p, int w) {
    switch (w) {
        case 0: return pulsec::window_fredkin(p, 'A', 2);
        case 1: return pulsec::window_fredkin(p, 'B', 1);
        default: return pulsec::window_fredkin(p, 'C', 0);
    }
}

// Three exchanges swapping data segment X with the segment m further on.
// G1 and G2 place the shepherds over X and over both segments.
void exchange(const Polymer &p, long G1, long G2, long m, std::array<long, 3> &at, PulseSequence &out) {
    long K1 = -G1 / 2;
    Stage st[3] = {solve_stage(K1, G1), solve_stage(K1 - m, G2), solve_stage(K1, G1)};
    for (const Stage &s : st) {
        ShiftPlan plan;
        plan.units = {3 * (s.a - at[0]), 3 * (s.b - at[1]), 3 * (s.c - at[2])};
        out += compile_shift(p, plan);
        at = {s.a, s.b, s.c};
        out += window(p, s.w);
    }
}

}  // namespace

PulseSequence compile_scramble(const Polymer &p, const BlockFormat &f, int m) {
    pulsec::require_abc(p);
    long n = f.n;
    if (m < 1 || 2L * m > n) {
        throw Error(ErrorCode::ShiftOutOfRange, "scramble size " + std::to_string(m) + " must lie in [1, n/2]");
    }
    // G = (first A token covered) - (first shepherd token). With the
    // shepherds g = 3n before the data, covering up to D + e needs
    // G = g - n + e and covering from D + s needs G = g + s.
    long g = 3 * n;
    long front1 = g - n + m, front2 = g - n + 2 * m;      // [D+m-n, D+m), [D+2m-n, D+2m)
    long back1 = g + n - m, back2 = g + n - 2 * m;        // [D+n-m, ...), [D+n-2m, ...)
    std::array<long, 3> at{0, 0, 0};
    PulseSequence out;
    exchange(p, front1, front2, m, at, out);
    // The mirrored exchange runs from the right, so B tokens pair leftwards.
    // When the two exchanges overlap (4m > n) the result is their
    // composition, not an involution; repeating the front exchange to force
    // one would hand the edge copies straight back to the edges.
    if (2L * m != n) {  // at 2m = n both exchanges are the same swap of halves
        exchange(p, back1, back2, -m, at, out);
    }
    ShiftPlan home;
    home.units = {-3 * at[0], -3 * at[1], -3 * at[2]};
    out += compile_shift(p, home);
    return out;
}

const std::vector<std::array<int, 2>> &default_vote_schedule() {
    static const std::vector<std::array<int, 2>> s = {{1, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}};
    return s;
}

int scramble_size(int n, size_t vote) {
    return std::max(1, n / (int)(2 + vote % 5));
}

double vote_success_prob(double p, double n, double theta) {
    double x = p / n;
    double v = 1 - x * x * (2 - x) - theta;
    return std::clamp(v, 0.0, 1.0);
}

double majority_wrong_fraction(double x, double theta) {
    double g = 3 * x * x - 2 * x * x * x;
    return g + theta - 2 * g * theta;
}

Redundancy redundancy_required(double epsilon, double b, double c, double f) {
    if (!(epsilon < 0.5) || epsilon < 0) {
        throw Error(ErrorCode::NoSolution, "voting cannot help once epsilon >= 1/2");
    }
    Redundancy r;
    double x = 2 * epsilon;
    auto failures = [&](double eta) { return -b * std::expm1(b * c * std::log1p(-eta)); };
    double target = 1 / (c * b * b);
    int k = 1;
    while (std::pow(x, k) > target) {
        k++;
    }
    r.k = k;
    r.copies = 2 * k + 1;
    r.eta = std::pow(x, k);
    r.expected_failures = failures(r.eta);
    r.within_budget = r.expected_failures <= f;
    int kb = 1;
    while (failures(std::pow(x, kb)) > f) {
        kb++;
    }
    r.k_budget = kb;
    r.copies_budget = 2 * kb + 1;
    return r;
}

std::string format_redundancy(const Redundancy &r) {
    std::string s;
    s += "k=" + std::to_string(r.k) + "\n";
    s += "copies=" + std::to_string(r.copies) + "\n";
    s += "eta=" + format_double(r.eta) + "\n";
    s += "expected_failures=" + format_double(r.expected_failures) + "\n";
    s += std::string("within_budget=") + (r.within_budget ? "true" : "false") + "\n";
    s += "k_budget=" + std::to_string(r.k_budget) + "\n";
    s += "copies_budget=" + std::to_string(r.copies_budget) + "\n";
    s += "quoted_copies=" + std::to_string(r.quoted_copies) + "\n";
    s += "copies_discrepancy=" + std::to_string(r.quoted_copies - r.copies) + "\n";
    return s;
}

namespace {

class BlockSim {
   public:
    BlockSim(const BlockFormat &f, int trials, std::mt19937_64 &rng)
        : f_(f), poly_(f.polymer()), trials_(trials), st_(poly_, ((size_t)trials + 63) / 64), rng_(rng) {
        bits_.assign(f.data_starts.size() * (size_t)trials, 0);
        for (size_t lane = 0; lane < (size_t)trials; lane++) {
            std::vector<int> b;
            for (size_t j = 0; j < f.data_starts.size(); j++) {
                b.push_back((int)(rng_() & 1));
                bits_[j * (size_t)trials + lane] = b.back();
            }
            Configuration c = place_blocks(f, b);
            for (size_t u = 0; u < c.size(); u++) {
                if (c[u]) {
                    st_.set(u, lane, true);
                }
            }
        }
    }

    const Polymer &polymer() const {
        return poly_;
    }

    void apply(const PulseSequence &s) {
        st_.apply(s);
    }

    void inject(double rate) {
        if (rate <= 0) {
            return;
        }
        std::bernoulli_distribution hit(rate);
        for (long d : f_.data_starts) {
            for (long t = 0; t < f_.n; t++) {
                size_t u = 3 * (size_t)(d + t);
                for (size_t lane = 0; lane < (size_t)trials_; lane++) {
                    if (hit(rng_)) {
                        st_.set(u, lane, !st_.get(u, lane));
                    }
                }
            }
        }
    }

    // Wrong-copy fraction over the blocks holding 0 and over those holding 1.
    std::pair<double, double> by_value() const {
        double wrong[2] = {0, 0}, total[2] = {0, 0};
        for (size_t lane = 0; lane < (size_t)trials_; lane++) {
            for (size_t j = 0; j < f_.data_starts.size(); j++) {
                int bit = bits_[j * (size_t)trials_ + lane] != 0;
                for (long t = 0; t < f_.n; t++) {
                    wrong[bit] += st_.get(3 * (size_t)(f_.data_starts[j] + t), lane) != (bit != 0);
                }
                total[bit] += f_.n;
            }
        }
        return {total[0] ? wrong[0] / total[0] : 0, total[1] ? wrong[1] / total[1] : 0};
    }

    // Mean and standard error of the per-trial wrong-copy fraction.
    std::pair<double, double> wrong_fraction() const {
        double sum = 0, sq = 0;
        double copies = (double)f_.n * (double)f_.data_starts.size();
        for (size_t lane = 0; lane < (size_t)trials_; lane++) {
            int w = 0;
            for (size_t j = 0; j < f_.data_starts.size(); j++) {
                int bit = bits_[j * (size_t)trials_ + lane];
                for (long t = 0; t < f_.n; t++) {
                    w += st_.get(3 * (size_t)(f_.data_starts[j] + t), lane) != (bit != 0);
                }
            }
            double x = w / copies;
            sum += x;
            sq += x * x;
        }
        double mean = sum / trials_;
        double var = trials_ > 1 ? (sq - trials_ * mean * mean) / (trials_ - 1) : 0.0;
        return {mean, std::sqrt(std::max(var, 0.0) / trials_)};
    }

   private:
    const BlockFormat &f_;
    Polymer poly_;
    int trials_;
    BitsliceState st_;
    std::mt19937_64 &rng_;
    std::vector<int> bits_;
};

}  // namespace

EcStats monte_carlo_ec(const BlockFormat &f, const NoiseModel &model, int votes, int rounds, int trials) {
    if (trials < 1 || votes < 0 || rounds < 1) {
        throw Error(ErrorCode::InvalidArgument, "need trials >= 1, rounds >= 1 and votes >= 0");
    }
    if (!(model.epsilon >= 0 && model.epsilon <= 1 && model.theta >= 0 && model.theta <= 1)) {
        throw Error(ErrorCode::InvalidArgument, "epsilon and theta must lie in [0, 1]");
    }
    std::mt19937_64 rng(model.seed);
    BlockSim sim(f, trials, rng);
    const Polymer &p = sim.polymer();
    const auto &sched = default_vote_schedule();
    std::vector<PulseSequence> programs;
    size_t distinct = std::min<size_t>((size_t)votes, sched.size());
    for (size_t v = 0; v < distinct; v++) {
        PulseSequence s = compile_block_vote(p, f, sched[v][0], sched[v][1]);
        s += compile_scramble(p, f, scramble_size(f.n, v));
        programs.push_back(std::move(s));
    }

    EcStats out;
    out.theta = model.theta;
    out.trials = trials;
    auto record = [&] {
        auto [m, e] = sim.wrong_fraction();
        out.wrong_fraction.push_back(m);
        out.stderr_.push_back(e);
    };
    for (int r = 0; r < rounds; r++) {
        sim.inject(model.epsilon);
        if (r == 0) {
            record();
        }
        for (int v = 0; v < votes; v++) {
            sim.apply(programs[(size_t)v % programs.size()]);
            sim.inject(model.theta);
            record();
        }
    }
    out.residual = out.wrong_fraction.back();
    std::tie(out.residual_zero, out.residual_one) = sim.by_value();
    return out;
}

std::string format_ec_report(const EcStats &s) {
    std::string out = "round wrong_fraction stderr\n";
    for (size_t i = 0; i < s.wrong_fraction.size(); i++) {
        out += std::to_string(i) + " " + format_double(s.wrong_fraction[i]) + " " + format_double(s.stderr_[i]) + "\n";
    }
    out += "residual=" + format_double(s.residual) + " theta=" + format_double(s.theta) + "\n";
    out += "residual_zero_blocks=" + format_double(s.residual_zero) +
           " residual_one_blocks=" + format_double(s.residual_one) + "\n";
    return out;
}

}  // namespace pqca::ecc
