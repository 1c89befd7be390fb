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

#include "pqca/pulsec.hpp"

#include <random>

#include "circuit_harness.hpp"
#include "gtest/gtest.h"
#include "pqca/error.hpp"
#include "pqca/io.hpp"

using namespace pqca;
using namespace pqca::pulsec;

namespace {

template <class F>
ErrorCode code_of(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode::InvariantViolation;
}

Configuration random_config(size_t L, std::mt19937_64 &rng) {
    Configuration c(L);
    for (auto &v : c) {
        v = (uint8_t)(rng() % 2);
    }
    return c;
}

// Streams end on species (x + d_x) mod 3; a shift must keep them distinct.
bool distinct_species(const ShiftPlan &plan) {
    int seen = 0;
    for (int x = 0; x < 3; x++) {
        seen |= 1 << (((x + plan.units[x]) % 3 + 3) % 3);
    }
    return seen == 7;
}

}  // namespace

TEST(pulsec, swap_ab_literal_sequence) {
    Polymer p = Polymer::abc(9);
    PulseSequence s = compile_swap(p, 'A', 'B', false);
    ASSERT_EQ(s.size(), 6u);
    EXPECT_EQ(s.pulses[0], Pulse::pi('B', 1, 0));
    EXPECT_EQ(s.pulses[1], Pulse::pi('B', 1, 1));
    EXPECT_EQ(s.pulses[2], Pulse::pi('A', 0, 1));
    EXPECT_EQ(s.pulses[3], Pulse::pi('A', 1, 1));
    EXPECT_EQ(s.pulses[4], Pulse::pi('B', 1, 0));
    EXPECT_EQ(s.pulses[5], Pulse::pi('B', 1, 1));
    PulseSequence e = compile_swap(p, 'A', 'B', true);
    ASSERT_EQ(e.size(), 7u);
    EXPECT_EQ(e.pulses[4], Pulse::pi_end('A', Side::Left, 1));
    EXPECT_EQ(code_of([&] { compile_swap(p, 'A', 'C', false); }), ErrorCode::NonAdjacentSpecies);
}

TEST(pulsec, swaps_exchange_every_pair_exhaustively) {
    // Two data triples plus a spare, every value of the first six units.
    Polymer p = Polymer::abc(9);
    const char pairs[3][2] = {{'A', 'B'}, {'B', 'C'}, {'C', 'A'}};
    for (auto &xy : pairs) {
        PulseSequence s = swap_pair(p, xy[0], xy[1]);
        for (int bits = 0; bits < 64; bits++) {
            Configuration c(9, 0);
            for (int n = 0; n < 6; n++) {
                c[n] = (bits >> n) & 1;
            }
            Configuration want = c;
            for (size_t n = 0; n + 1 < 6; n++) {
                if (p.species_at(n).id == xy[0] && p.species_at(n + 1).id == xy[1]) {
                    std::swap(want[n], want[n + 1]);
                }
            }
            if (xy[0] == 'C') {
                // C of triple 1 meets the spare A; A_0 meets nothing.
                std::swap(want[5], want[6]);
            }
            Configuration got = apply_sequence(p, c, s);
            EXPECT_EQ(got, want) << xy[0] << xy[1] << " bits=" << bits;
            EXPECT_EQ(apply_sequence(p, got, s.reversed()), c);
        }
    }
}

TEST(pulsec, fredkin_control_a_is_five_pulses) {
    Polymer p = Polymer::abc(9);
    PulseSequence f = compile_fredkin(p, 'A');
    ASSERT_EQ(f.size(), 5u);
    EXPECT_EQ(f.pulses[0], Pulse::pi('C', 1, 0));
    EXPECT_EQ(f.pulses[1], Pulse::pi('C', 1, 1));
    EXPECT_EQ(f.pulses[2], Pulse::pi('B', 1, 1));
    EXPECT_EQ(f.pulses[3], Pulse::pi('C', 1, 0));
    EXPECT_EQ(f.pulses[4], Pulse::pi('C', 1, 1));
    Configuration c = config_from_string(p, "101000000");
    EXPECT_EQ(config_to_string(apply_sequence(p, c, f)), "110000000");
    EXPECT_EQ(code_of([&] { compile_fredkin(p, 'D'); }), ErrorCode::UnknownSpecies);
}

TEST(pulsec, fredkin_truth_tables_in_every_context) {
    EXPECT_TRUE(characterize_fredkin_contexts().empty());
}

TEST(pulsec, shift_conservation_and_inverse) {
    Polymer p = Polymer::abc(30);
    EXPECT_EQ(code_of([&] { compile_shift(p, ShiftPlan{{3, 0, 0}}); }), ErrorCode::CenterOfGravityViolation);
    EXPECT_TRUE(compile_shift(p, ShiftPlan{}).empty());
    EXPECT_EQ(code_of([&] { compile_shift(Polymer::abc(31), ShiftPlan{}); }), ErrorCode::PartialPeriodPolymer);
    EXPECT_EQ(code_of([&] { compile_shift(p, ShiftPlan{{-1, 1, 0}}); }), ErrorCode::InvalidArgument);

    // B<->C then A<->B: A and B streams +1 unit, C stream -2.
    PulseSequence s = compile_shift(p, ShiftPlan{{1, 1, -2}});
    EXPECT_EQ(s, swap_pair(p, 'B', 'C') + swap_pair(p, 'A', 'B'));

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; trial++) {
        ShiftPlan plan;
        do {
            plan.units[0] = (long)(rng() % 9) - 4;
            plan.units[1] = (long)(rng() % 9) - 4;
            plan.units[2] = -plan.units[0] - plan.units[1];
        } while (!distinct_species(plan));
        PulseSequence f = compile_shift(p, plan);
        // Tagged placement in the middle of the polymer.
        Configuration c(30, 0);
        for (int s2 = 0; s2 < 3; s2++) {
            c[15 + s2] = 1;
        }
        c[12] = 1;
        Configuration moved = apply_sequence(p, c, f);
        Configuration want(30, 0);
        for (size_t n = 0; n < 30; n++) {
            if (c[n]) {
                long dest = (long)n + plan.units[n % 3];
                want[(size_t)dest] = 1;
            }
        }
        EXPECT_EQ(moved, want);
        EXPECT_EQ(apply_sequence(p, moved, f.reversed()), c);
        Configuration r = random_config(30, rng);
        EXPECT_EQ(apply_sequence(p, apply_sequence(p, r, f), f.reversed()), r);
    }
}

TEST(pulsec, elementary_moves) {
    Polymer p = Polymer::abc(18);
    Configuration c(18, 0);
    c[6] = 1;  // a at triple 2
    c[7] = 1;  // b at triple 2
    c[8] = 1;  // c at triple 2
    Configuration ab = apply_sequence(p, c, elementary_move(p, Move::AB, true));
    EXPECT_EQ(config_to_string(ab), "000010001100000000");
    Configuration ac = apply_sequence(p, c, elementary_move(p, Move::AC, true));
    EXPECT_EQ(config_to_string(ac), "000001010100000000");
    Configuration bc = apply_sequence(p, c, elementary_move(p, Move::BC, false));
    EXPECT_EQ(config_to_string(bc), "000010100001000000");
}

TEST(pulsec, load_literal_prefixes) {
    Polymer p = Polymer::abc(30);
    PulseSequence one = compile_load(p, "1");
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one.pulses[0], Pulse::pi_end('A', Side::Left, 0));
    PulseSequence b = compile_load(p, "01");
    ASSERT_EQ(b.size(), 3u);
    EXPECT_EQ(b.pulses[0], Pulse::pi_end('A', Side::Left, 0));
    EXPECT_EQ(b.pulses[1], Pulse::pi('B', 1, 0));
    EXPECT_EQ(b.pulses[2], Pulse::pi_end('A', Side::Left, 1));
    EXPECT_EQ(apply_sequence(p, zero_config(p), compile_load(p, "000000")), zero_config(p));
}

TEST(pulsec, load_exhaustive_small) {
    Polymer p = Polymer::abc(30);
    for (int len = 1; len <= 12; len++) {
        int step = len > 9 ? 7 : 1;
        for (int v = 0; v < (1 << len); v += step) {
            std::string bits;
            for (int k = 0; k < len; k++) {
                bits += ((v >> k) & 1) ? '1' : '0';
            }
            Configuration got = apply_sequence(p, zero_config(p), compile_load(p, bits));
            Configuration want = zero_config(p);
            for (int k = 0; k < len; k++) {
                want[k] = bits[k] == '1';
            }
            ASSERT_EQ(got, want) << bits;
        }
    }
}

TEST(pulsec, load_capacity_and_errors) {
    Polymer p = Polymer::abc(30);
    size_t cap = load_capacity(p);
    EXPECT_GT(cap, 0u);
    std::string full(cap, '1');
    Configuration got = apply_sequence(p, zero_config(p), compile_load(p, full));
    for (size_t k = 0; k < cap; k++) {
        EXPECT_EQ(got[k], 1);
    }
    EXPECT_EQ(code_of([&] { compile_load(p, full + "000"); }), ErrorCode::CapacityExceeded);
    Configuration dirty = zero_config(p);
    dirty[4] = 1;
    EXPECT_EQ(code_of([&] { compile_load(p, "1", dirty); }), ErrorCode::NonZeroInitialState);
}

TEST(pulsec, unload_round_trip) {
    Polymer p = Polymer::abc(36);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 60; trial++) {
        size_t len = 1 + rng() % 18;
        std::string bits;
        for (size_t k = 0; k < len; k++) {
            bits += rng() % 2 ? '1' : '0';
        }
        Configuration loaded = apply_sequence(p, zero_config(p), compile_load(p, bits));
        size_t k = rng() % len;
        UnloadProgram u = compile_unload(p, load_location(k));
        Configuration out = apply_sequence(p, loaded, u.sequence);
        EXPECT_EQ(read_probe(p, out, u.readout), bits[k] - '0') << bits << " k=" << k;
    }
}

TEST(pulsec, unload_bit_at_end) {
    Polymer p = Polymer::abc(12);
    UnloadProgram u = compile_unload(p, BitLocation{0, 0});
    Configuration c = zero_config(p);
    c[0] = 1;
    EXPECT_EQ(read_probe(p, apply_sequence(p, c, u.sequence), u.readout), 1);
    EXPECT_EQ(read_probe(p, apply_sequence(p, zero_config(p), u.sequence), u.readout), 0);
}

TEST(pulsec, circuit_parse_and_macros) {
    CircuitDesign c = parse_circuit("wires 4\nnames x y k z\nand x y z\nfredkin 0 1 2 # comment\n");
    EXPECT_EQ(c.num_wires, 4);
    ASSERT_EQ(c.gates.size(), 2u);
    EXPECT_EQ(c.gates[0], (Gate{0, 1, 3}));
    EXPECT_EQ(parse_circuit(serialize_circuit(c)).gates, c.gates);
    try {
        parse_circuit("wires 3\nfredkin 0 1\n");
        FAIL();
    } catch (const Error &e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
    // and: z = x AND y.
    CircuitDesign a = parse_circuit("wires 3\nand 0 1 2\n");
    for (uint64_t x = 0; x < 4; x++) {
        EXPECT_EQ((a.evaluate(x) >> 2) & 1, (x & 1) & (x >> 1));
    }
    // or with k=1: b = a OR b.
    CircuitDesign o = parse_circuit("wires 3\nor 0 1 2\n");
    for (uint64_t x = 0; x < 4; x++) {
        EXPECT_EQ((o.evaluate(x | 4) >> 1) & 1, (x & 1) | (x >> 1));
    }
    // not with x=0, y=1.
    CircuitDesign n = parse_circuit("wires 3\nnot 0 1 2\n");
    EXPECT_EQ((n.evaluate(0b100) >> 2) & 1, 1u);
    EXPECT_EQ((n.evaluate(0b101) >> 2) & 1, 0u);
}

TEST(pulsec, layouts) {
    SectionLayout s = make_sparse_layout(3);
    EXPECT_EQ(s.interval, 1);
    EXPECT_EQ(s.placement[0], (BitLocation{0, 0}));
    EXPECT_EQ(s.placement[1], (BitLocation{0, 1}));
    EXPECT_EQ(s.placement[2], (BitLocation{0, 2}));
    SectionLayout s7 = make_sparse_layout(7);
    EXPECT_EQ(s7.interval, 3);
    EXPECT_EQ(s7.placement[1], (BitLocation{3, 0}));
    EXPECT_EQ(s7.placement[4], (BitLocation{4, 1}));
    EXPECT_EQ(s7.placement[6], (BitLocation{0, 2}));
    SectionLayout m1 = make_shepherd_layout(5, 2);
    EXPECT_EQ(m1.section_length, 10);
    EXPECT_EQ(m1.shepherds[0], (BitLocation{5, 1}));
    EXPECT_EQ(m1.shepherds[1], (BitLocation{5, 2}));
    SectionLayout back = parse_layout(serialize_layout(m1));
    EXPECT_EQ(back.placement, m1.placement);
    EXPECT_EQ(back.origin, m1.origin);
    EXPECT_EQ(code_of([] { parse_layout("method=weird N=3"); }), ErrorCode::Parse);
}

TEST(pulsec, single_gate_method1_all_inputs) {
    CircuitDesign c = parse_circuit("wires 3\nfredkin 0 1 2\n");
    auto r = harness::check_circuit(c, make_shepherd_layout(3, 2));
    EXPECT_TRUE(r.ok) << r.detail;
    auto r2 = harness::check_circuit(c, make_sparse_layout(3, 2));
    EXPECT_TRUE(r2.ok) << r2.detail;
}

TEST(pulsec, empty_circuit_is_identity) {
    CircuitDesign c = parse_circuit("wires 4\n");
    SectionLayout l = make_shepherd_layout(4);
    Polymer p = Polymer::abc(3 * l.required_triples());
    EXPECT_TRUE(compile_circuit(p, c, l).empty());
    SectionLayout s = make_sparse_layout(4);
    Polymer ps = Polymer::abc(3 * s.required_triples());
    EXPECT_TRUE(compile_circuit(ps, c, s).empty());
}

TEST(pulsec, random_circuits_both_methods) {
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 30; trial++) {
        CircuitDesign c = harness::random_circuit(rng, 7, 5);
        auto r1 = harness::check_circuit(c, make_shepherd_layout(c.num_wires, 2));
        EXPECT_TRUE(r1.ok) << serialize_circuit(c) << r1.detail;
        auto r2 = harness::check_circuit(c, make_sparse_layout(c.num_wires, 2));
        EXPECT_TRUE(r2.ok) << serialize_circuit(c) << r2.detail;
    }
}

TEST(pulsec, layout_mismatch) {
    CircuitDesign c = parse_circuit("wires 3\nfredkin 0 1 2\n");
    SectionLayout l = make_shepherd_layout(4);
    Polymer p = Polymer::abc(3 * l.required_triples());
    EXPECT_EQ(code_of([&] { compile_circuit(p, c, l); }), ErrorCode::LayoutMismatch);
    EXPECT_EQ(code_of([&] { compile_circuit_method2(p, parse_circuit("wires 4\n"), l); }),
              ErrorCode::LayoutMismatch);
    Polymer small = Polymer::abc(12);
    EXPECT_EQ(code_of([&] { compile_circuit(small, parse_circuit("wires 4\n"), l); }), ErrorCode::SectionOverflow);
}

TEST(pulsec, cost_monotone_in_gates) {
    std::mt19937_64 rng(5);
    SectionLayout l = make_shepherd_layout(6, 1);
    Polymer p = Polymer::abc(3 * l.required_triples());
    CircuitDesign c = harness::random_circuit(rng, 6, 6);
    c.num_wires = 6;
    c.wire_names.resize(6, "w");
    size_t last = 0;
    CircuitDesign prefix = c;
    prefix.gates.clear();
    for (const Gate &g : c.gates) {
        prefix.gates.push_back(g);
        size_t n = cost_report(compile_circuit(p, prefix, l)).pulses;
        EXPECT_GE(n, last);
        last = n;
    }
}

TEST(pulsec, cost_report_counts) {
    Polymer p = Polymer::abc(9);
    EXPECT_EQ(cost_report(PulseSequence{}).pulses, 0u);
    EXPECT_EQ(cost_report(compile_swap(p, 'A', 'B', false)).pulses, 6u);
    EXPECT_EQ(cost_report(compile_swap(p, 'A', 'B', true)).pulses, 7u);
    EXPECT_EQ(cost_report(compile_fredkin(p, 'A')).pulses, 5u);
    CostReport r = cost_report(compile_swap(p, 'A', 'B', true));
    EXPECT_EQ(r.end_pulses, 1u);
    EXPECT_EQ(r.per_species['B'], 4u);
}

TEST(pulsec, section_transfer) {
    SectionLayout l = make_shepherd_layout(3, 3);
    Polymer p = Polymer::abc(3 * (l.required_triples() + l.stride));
    std::vector<uint64_t> data = {0b101, 0b011, 0b110};
    Configuration c = place_sections(p, l, data);

    // Nothing selected: identity.
    EXPECT_TRUE(compile_section_transfer(p, {}, Direction::Right, l).empty());

    PulseSequence one = compile_section_transfer(p, {1}, Direction::Right, l);
    Configuration r = apply_sequence(p, c, one);
    EXPECT_EQ(read_section(r, l, 0), 0b101u & ~0b010u);
    EXPECT_EQ(read_section(r, l, 1), (0b011u & ~0b010u) | (0b101u & 0b010u));
    EXPECT_EQ(read_section(r, l, 2), (0b110u & ~0b010u) | (0b011u & 0b010u));

    PulseSequence two = compile_section_transfer(p, {0, 2}, Direction::Right, l);
    r = apply_sequence(p, c, two);
    EXPECT_EQ(read_section(r, l, 1), (0b011u & 0b010u) | (0b101u & 0b101u));
    EXPECT_EQ(read_section(r, l, 2), (0b110u & 0b010u) | (0b011u & 0b101u));

    SectionLayout left = make_shepherd_layout(3, 3, 12);
    Polymer pl = Polymer::abc(3 * left.required_triples());
    Configuration cl = place_sections(pl, left, data);
    r = apply_sequence(pl, cl, compile_section_transfer(pl, {2}, Direction::Left, left));
    EXPECT_EQ(read_section(r, left, 0), (0b101u & 0b011u) | (0b011u & 0b100u));
    EXPECT_EQ(read_section(r, left, 1), (0b011u & 0b011u) | (0b110u & 0b100u));
    EXPECT_EQ(read_section(r, left, 2), 0b110u & 0b011u);
    EXPECT_EQ(code_of([&] { compile_section_transfer(p, {1}, Direction::Left, l); }), ErrorCode::LayoutMismatch);
}
