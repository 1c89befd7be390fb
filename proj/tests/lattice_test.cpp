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

#include "pqca/lattice.hpp"

#include <random>

#include "gtest/gtest.h"
#include "pqca/error.hpp"
#include "pqca/io.hpp"

using namespace pqca;

namespace {

Configuration random_config(const Polymer &p, std::mt19937_64 &rng) {
    Configuration c(p.length());
    for (size_t n = 0; n < c.size(); n++) {
        c[n] = (uint8_t)(rng() % 2);
    }
    return c;
}

Pulse random_pulse(const Polymer &p, std::mt19937_64 &rng) {
    char s = p.pattern()[rng() % p.period()].id;
    if (rng() % 4 == 0) {
        return Pulse::pi_end(s, rng() % 2 ? Side::Left : Side::Right, (int)(rng() % 2));
    }
    return Pulse::pi(s, (int)(rng() % 2), (int)(rng() % 2));
}

}  // namespace

TEST(lattice, polymer_basics) {
    Polymer p = Polymer::abc(9);
    EXPECT_EQ(p.length(), 9u);
    EXPECT_EQ(p.species_at(4).id, 'B');
    EXPECT_EQ(p.species_at(8).id, 'C');
    EXPECT_TRUE(p.is_end(0));
    EXPECT_TRUE(p.is_end(8));
    EXPECT_FALSE(p.is_end(3));
    EXPECT_EQ(p.dimension(), 512u);
    EXPECT_THROW(p.pattern_index('D'), Error);
}

TEST(lattice, matches_end_and_interior) {
    Polymer p = Polymer::abc(9);
    Configuration zero = zero_config(p);
    Pulse end0 = Pulse::pi_end('A', Side::Left, 0);
    EXPECT_TRUE(matches(p, end0, zero, 0));
    EXPECT_FALSE(matches(p, end0, zero, 3));

    Configuration c = config_from_string(p, "100000000");
    EXPECT_FALSE(matches(p, Pulse::pi('B', 1, 0), zero, 1));
    // Interior B of triple 1 with A=1 on its left.
    c = config_from_string(p, "000100000");
    EXPECT_TRUE(matches(p, Pulse::pi('B', 1, 0), c, 4));
    EXPECT_FALSE(matches(p, Pulse::pi('B', 0, 0), c, 4));
}

TEST(lattice, end_pulse_sets_first_unit) {
    Polymer p = Polymer::abc(9);
    Configuration c = apply_pulse_classical(p, zero_config(p), Pulse::pi_end('A', Side::Left, 0));
    EXPECT_EQ(config_to_string(c), "100000000");
    c = apply_pulse_classical(p, zero_config(p), Pulse::pi('B', 1, 1));
    EXPECT_EQ(config_to_string(c), "000000000");
}

TEST(lattice, decay_pump_resets) {
    Polymer p = Polymer::abc(9, true);
    Configuration c = config_from_string(p, "000010000");
    Configuration r = apply_pulse_classical(p, c, Pulse::pump('B', 0, 0));
    EXPECT_EQ(config_to_string(r), "000000000");
    // Pumping a unit in state 0 does nothing.
    EXPECT_EQ(apply_pulse_classical(p, r, Pulse::pump('B', 0, 0)), r);
}

TEST(lattice, non_classical_area_rejected) {
    Polymer p = Polymer::abc(6);
    Pulse half = Pulse::pi_end('A', Side::Left, 0);
    half.area = kPi / 2;
    try {
        apply_pulse_classical(p, zero_config(p), half);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NonClassicalPulse);
    }
    PulseSequence s;
    s.push(Pulse::pi('A', 0, 0));
    s.push(half);
    try {
        apply_sequence(p, zero_config(p), s);
        FAIL();
    } catch (const Error &e) {
        EXPECT_NE(std::string(e.what()).find("pulse 1"), std::string::npos);
    }
}

TEST(lattice, pi_pulse_involution_and_simultaneity) {
    std::mt19937_64 rng(11);
    Polymer p = Polymer::abc(15);
    for (int trial = 0; trial < 2000; trial++) {
        Configuration c = random_config(p, rng);
        Pulse x = random_pulse(p, rng);
        Configuration once = apply_pulse_classical(p, c, x);
        EXPECT_EQ(apply_pulse_classical(p, once, x), c);
        // Simultaneous reference: evaluate all matches first.
        Configuration ref = c;
        for (size_t n = 0; n < p.length(); n++) {
            if (matches(p, x, c, n)) {
                ref[n] ^= 1;
            }
        }
        EXPECT_EQ(once, ref);
    }
}

TEST(lattice, reversal_restores) {
    std::mt19937_64 rng(12);
    Polymer p = Polymer::abc(12);
    for (int trial = 0; trial < 500; trial++) {
        PulseSequence s;
        for (int k = 0; k < 20; k++) {
            s.push(random_pulse(p, rng));
        }
        Configuration c = random_config(p, rng);
        EXPECT_EQ(apply_sequence(p, apply_sequence(p, c, s), s.reversed()), c);
    }
}

TEST(lattice, bitslice_agrees_with_scalar) {
    std::mt19937_64 rng(13);
    Polymer p = Polymer::abc(12, true);
    BitsliceState st(p, 2);
    std::vector<Configuration> lanes;
    for (size_t lane = 0; lane < 128; lane++) {
        lanes.push_back(random_config(p, rng));
        for (size_t n = 0; n < p.length(); n++) {
            st.set(n, lane, lanes.back()[n]);
        }
    }
    for (int k = 0; k < 300; k++) {
        Pulse x = rng() % 5 == 0 ? Pulse::pump('B', (int)(rng() % 2), (int)(rng() % 2)) : random_pulse(p, rng);
        st.apply(x);
        for (auto &c : lanes) {
            apply_pulse_inplace(p, c, x);
        }
    }
    for (size_t lane = 0; lane < 128; lane++) {
        EXPECT_EQ(st.lane(lane), lanes[lane]);
    }
}

TEST(lattice, frequency_distinctness) {
    Polymer p = Polymer::abc(9);
    FrequencyTable t = FrequencyTable::generic(p, 5);
    EXPECT_TRUE(check_frequency_distinctness(p, t, 0).empty());

    FrequencyTable deg = t;
    deg.set_shift('A', 1, 0, {0, 1}, 1e11);
    deg.set_shift('A', 0, 1, {0, 1}, 1e11);
    auto hits = check_frequency_distinctness(p, deg, 0);
    ASSERT_EQ(hits.size(), 1u);

    FrequencyTable end_clash = t;
    end_clash.set_end_shift('A', Side::Left, 0, {0, 1}, 2e11);
    end_clash.set_shift('A', 1, 1, {0, 1}, 2e11);
    EXPECT_FALSE(check_frequency_distinctness(p, end_clash, 0).empty());

    FrequencyTable empty;
    try {
        check_frequency_distinctness(p, empty, 0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::MissingEntry);
    }
}

TEST(io, sequence_round_trip) {
    std::string text =
        "PI B L=1 R=0 T=0:1\n"
        "PI A END=left N=1 T=0:1\n"
        "CYCLE\n"
        "PUMP B L=0 R=0 T=1:2\n"
        "ROT A END=left N=0 area=1.5707963 phase=0 dur=1e-12\n"
        "WAIT dur=2e-12\n";
    PulseSequence s = parse_sequence(text);
    ASSERT_EQ(s.size(), 5u);
    EXPECT_EQ(s.cycle_marks, std::vector<size_t>{2});
    EXPECT_EQ(s.pulses[2].kind, PulseKind::DecayPump);
    EXPECT_EQ(parse_sequence(serialize_sequence(s)), s);
}

TEST(io, parse_errors_name_the_line) {
    try {
        parse_sequence("PI B L=1 R=0 T=0:1\nPI Q L=1\n");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::Parse);
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
}

TEST(io, polymer_round_trip) {
    Polymer p = parse_polymer("pattern=ABC length=12\nspecies B states=3 decay=2->0\n");
    EXPECT_EQ(p.length(), 12u);
    EXPECT_EQ(p.species('B').num_states, 3);
    EXPECT_TRUE(p.species('B').fast_decay.has_value());
    EXPECT_EQ(parse_polymer(serialize_polymer(p)), p);
}

TEST(io, frequency_table_round_trip) {
    Polymer p = Polymer::abc(6);
    FrequencyTable t = FrequencyTable::generic(p, 3);
    FrequencyTable u = parse_frequency_table(serialize_frequency_table(t));
    EXPECT_EQ(u.base_map(), t.base_map());
    EXPECT_EQ(u.shift_map(), t.shift_map());
    EXPECT_EQ(u.end_map(), t.end_map());
}
