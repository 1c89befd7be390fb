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

#include "pqca/qsim.hpp"

#include <algorithm>
#include <cmath>

#include "gtest/gtest.h"
#include "pqca/error.hpp"

using namespace pqca;
using namespace pqca::qsim;

namespace {

const cplx I(0, 1);

Pulse random_coherent(const Polymer &p, std::mt19937_64 &rng, bool classical) {
    char s = p.pattern()[rng() % p.period()].id;
    Pulse x = rng() % 4 == 0 ? Pulse::pi_end(s, rng() % 2 ? Side::Left : Side::Right, (int)(rng() % 2))
                             : Pulse::pi(s, (int)(rng() % 2), (int)(rng() % 2));
    if (x.end && p.species_at(x.side == Side::Left ? 0 : p.length() - 1).id != s) {
        x = Pulse::pi(s, (int)(rng() % 2), (int)(rng() % 2));
    }
    if (!classical) {
        std::uniform_real_distribution<double> u(0.01, 2 * kPi);
        x.area = u(rng);
        x.phase = u(rng);
    }
    return x;
}

struct BellFreqs {
    FrequencyTable t;
    double end0, end1, b10;
};

BellFreqs bell_table(const Polymer &p) {
    BellFreqs f{FrequencyTable::generic(p, 21), 0, 0, 0};
    f.end0 = f.t.end('A', Side::Left, 0, {0, 1});
    f.end1 = f.t.end('A', Side::Left, 1, {0, 1});
    f.b10 = f.t.interior('B', 1, 0, {0, 1});
    return f;
}

QuantumState bell_target(const Polymer &p, double phi2) {
    QuantumState t(p);
    t[0] = 1 / std::sqrt(2.0);
    t[t.index_of(config_from_string(p, "110"))] = std::exp(-I * phi2) / std::sqrt(2.0);
    return t;
}

}  // namespace

TEST(qsim, basis_index_unit_zero_most_significant) {
    Polymer p = Polymer::abc(4);
    QuantumState s(p);
    EXPECT_EQ(s.dimension(), 16u);
    EXPECT_EQ(s.index_of(config_from_string(p, "1000")), 8u);
    EXPECT_EQ(config_to_string(s.config_of(5)), "0101");
    QuantumState b = QuantumState::basis(p, config_from_string(p, "0011"));
    EXPECT_EQ(b[3], cplx(1));
}

TEST(qsim, pi_pulse_matches_classical_up_to_phase) {
    std::mt19937_64 rng(31);
    Polymer p = Polymer::abc(7);
    for (int trial = 0; trial < 300; trial++) {
        Configuration c(p.length());
        for (auto &v : c) {
            v = (uint8_t)(rng() % 2);
        }
        Pulse x = random_coherent(p, rng, true);
        QuantumState s = QuantumState::basis(p, c);
        apply_pulse_quantum(s, x);
        Configuration want = apply_pulse_classical(p, c, x);
        int flips = 0;
        for (size_t n = 0; n < c.size(); n++) {
            flips += c[n] != want[n];
        }
        EXPECT_NEAR(std::abs(s[s.index_of(want) ] - std::pow(-I, flips)), 0.0, 1e-12);
    }
}

TEST(qsim, two_pi_negates) {
    Polymer p = Polymer::abc(6);
    QuantumState s(p);
    Pulse h = Pulse::pi_end('A', Side::Left, 0);
    h.area = kPi / 2;
    apply_pulse_quantum(s, h);
    QuantumState before = s;
    Pulse full = Pulse::pi_end('A', Side::Left, 0);
    full.area = 2 * kPi;
    apply_pulse_quantum(s, full);
    for (size_t x = 0; x < s.dimension(); x++) {
        EXPECT_NEAR(std::abs(s[x] + before[x]), 0.0, 1e-14);
    }
}

TEST(qsim, norm_preserved) {
    std::mt19937_64 rng(32);
    Polymer p = Polymer::abc(8);
    QuantumState s(p);
    for (int k = 0; k < 200; k++) {
        apply_pulse_quantum(s, random_coherent(p, rng, false));
    }
    EXPECT_NEAR(s.norm(), 1.0, 1e-12);
}

TEST(qsim, same_species_units_commute) {
    std::mt19937_64 rng(33);
    Polymer p = Polymer::abc(10);
    for (int trial = 0; trial < 50; trial++) {
        QuantumState s(p);
        for (int k = 0; k < 12; k++) {
            apply_pulse_quantum(s, random_coherent(p, rng, false));
        }
        Pulse x = random_coherent(p, rng, false);
        std::vector<size_t> units = pulse_units(p, x);
        QuantumState a = s, b = s;
        for (size_t n : units) {
            apply_unit_rotation(a, x, n);
        }
        std::shuffle(units.begin(), units.end(), rng);
        for (size_t n : units) {
            apply_unit_rotation(b, x, n);
        }
        EXPECT_NEAR(fidelity(a, b), 1.0, 1e-12);
    }
}

TEST(qsim, errors) {
    Polymer d = Polymer::abc(6, true);
    QuantumState s(d);
    try {
        apply_pulse_quantum(s, Pulse::pump('B', 0, 0));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DissipativePulse);
    }
    try {
        QuantumState big(Polymer::abc(21));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionCap);
    }
    EXPECT_EQ(QuantumState(Polymer::abc(20)).dimension(), size_t{1} << 20);
    try {
        fidelity(QuantumState(Polymer::abc(3)), QuantumState(Polymer::abc(4)));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
}

TEST(qsim, half_pulse_phase_phi1) {
    Polymer p = Polymer::abc(3);
    BellFreqs f = bell_table(p);
    double T1 = 1.3e-12;
    QuantumState s(p);
    Pulse h = Pulse::pi_end('A', Side::Left, 0);
    h.area = kPi / 2;
    h.duration = T1;
    apply_pulse_quantum(s, h, &f.t);
    double phi1 = kPi / 2 + f.end0 * T1;
    QuantumState t(p);
    t[0] = 1 / std::sqrt(2.0);
    t[t.index_of(config_from_string(p, "100"))] = std::exp(-I * phi1) / std::sqrt(2.0);
    EXPECT_NEAR(fidelity(s, t), 1.0, 1e-10);
}

// The entangling construction: pi/2 on the end, a gap, then B[1,0].
// With zero-phase pulses the relative phase is pi + w0 (T1+T2) + (w1+wB) T3;
// giving the B pulse phase -pi/2 shifts the constant to 3pi/2.
TEST(qsim, bell_pair_phase) {
    Polymer p = Polymer::abc(3);
    BellFreqs f = bell_table(p);
    double T1 = 1.1e-12, T2 = 0.7e-12, T3 = 2.3e-12;
    auto run = [&](double b_phase) {
        QuantumState s(p);
        Pulse h = Pulse::pi_end('A', Side::Left, 0);
        h.area = kPi / 2;
        h.duration = T1;
        Pulse b = Pulse::pi('B', 1, 0);
        b.duration = T3;
        b.phase = b_phase;
        apply_pulse_quantum(s, h, &f.t);
        apply_pulse_quantum(s, Pulse::idle(T2), &f.t);
        apply_pulse_quantum(s, b, &f.t);
        return s;
    };
    double dyn = f.end0 * (T1 + T2) + (f.end1 + f.b10) * T3;
    EXPECT_NEAR(fidelity(run(0), bell_target(p, kPi + dyn)), 1.0, 1e-10);
    EXPECT_NEAR(fidelity(run(-kPi / 2), bell_target(p, 3 * kPi / 2 + dyn)), 1.0, 1e-10);
}

TEST(qsim, measurement_collapses_bell_pair) {
    Polymer p = Polymer::abc(3);
    std::mt19937_64 rng(34);
    int ones = 0;
    for (int trial = 0; trial < 400; trial++) {
        QuantumState s(p);
        Pulse h = Pulse::pi_end('A', Side::Left, 0);
        h.area = kPi / 2;
        apply_pulse_quantum(s, h);
        apply_pulse_quantum(s, Pulse::pi('B', 1, 0));
        Measurement m = measure_unit(s, 0, rng);
        EXPECT_NEAR(m.probability, 0.5, 1e-12);
        EXPECT_NEAR(unit_probability(s, 1, m.outcome), 1.0, 1e-12);
        ones += m.outcome;
    }
    EXPECT_GT(ones, 150);
    EXPECT_LT(ones, 250);
}

TEST(qsim, dump_format) {
    Polymer p = Polymer::abc(3);
    QuantumState s(p);
    Pulse h = Pulse::pi_end('A', Side::Left, 0);
    h.area = kPi / 2;
    apply_pulse_quantum(s, h);
    std::string d = dump_state(s);
    EXPECT_EQ(d.substr(0, 6), "|000> ");
    EXPECT_NE(d.find("\n|100> "), std::string::npos);
    EXPECT_EQ(std::count(d.begin(), d.end(), '\n'), 2);
}

TEST(synth, random_unitaries) {
    std::mt19937_64 rng(35);
    Polymer p = Polymer::abc(4);
    for (size_t k = 1; k <= 8; k++) {
        for (int trial = 0; trial < 4; trial++) {
            std::vector<size_t> all(16);
            for (size_t i = 0; i < 16; i++) {
                all[i] = i;
            }
            std::shuffle(all.begin(), all.end(), rng);
            std::vector<size_t> labels(all.begin(), all.begin() + (long)k);
            Matrix U = haar_random_unitary(k, rng);
            PrimitiveProgram prog = synthesize_unitary(U, labels, p);
            EXPECT_LT(distance_up_to_phase(compose_program(prog), U).distance, 1e-9) << "k=" << k;
            EXPECT_LT(distance_up_to_phase(compose_pulses(prog, p), U).distance, 1e-9) << "k=" << k;
            EXPECT_LE(prog.rotation_count(), k * (k - 1) / 2 + 2 * (k - 1));
        }
    }
}

TEST(synth, rejects_bad_input) {
    Polymer p = Polymer::abc(4);
    Matrix M = Matrix::identity(2);
    M(0, 1) = 0.5;
    try {
        synthesize_unitary(M, {0, 1}, p);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotUnitary);
    }
    try {
        synthesize_unitary(Matrix::identity(3), {0, 1}, p);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
    try {
        synthesize_unitary(Matrix::identity(2), {3, 3}, p);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
}

TEST(synth, unitary_file_round_trip) {
    std::mt19937_64 rng(36);
    UnitaryFile f{haar_random_unitary(3, rng), {"0000", "1000", "0110"}};
    UnitaryFile g = parse_unitary(serialize_unitary(f));
    EXPECT_EQ(g.labels, f.labels);
    EXPECT_EQ(g.U.a, f.U.a);
    EXPECT_THROW(parse_unitary("dim 2 labels=00,01\n1 0 0 0\n"), Error);
    EXPECT_THROW(parse_unitary("size 2\n"), Error);
}
