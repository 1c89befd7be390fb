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

// Loading and unloading through the end unit.
//
// Only A_0 is individually addressable, and its frequency depends on B_0.
// Loading therefore writes into triple 0 and moves the streams away from the
// end between writes:
//   1. for i = n-1 .. 0: write b_i into B_0 and a_i into A_0, then carry the
//      A and B streams one triple right (C, still blank, moves two left);
//   2. carry A and B further right so that the C stream can pass;
//   3. for i = n-1 .. 0: write c_i by rotating C_0 onto A_0, then walk the C
//      stream right one triple while A or B steps back.
// Every phase is checked by running the pulses on the classical engine.

#include <algorithm>

#include "pqca/error.hpp"
#include "pqca/pulsec.hpp"

namespace pqca::pulsec {

namespace {

struct Builder {
    const Polymer *poly;
    PulseSequence seq;
    Configuration cur;

    void add(const PulseSequence &s) {
        cur = apply_sequence(*poly, cur, s);
        seq += s;
    }
    void add(const Pulse &x) {
        apply_pulse_inplace(*poly, cur, x);
        seq.push(x);
    }
};

PulseSequence t1_word(const Polymer &p) {
    // BC AB CA BC AB CA: A and B streams +1 triple, C stream -2.
    PulseSequence s;
    for (int k = 0; k < 2; k++) {
        s += swap_pair(p, 'B', 'C');
        s += swap_pair(p, 'A', 'B');
        s += swap_pair(p, 'C', 'A');
    }
    return s;
}

}  // namespace

size_t load_capacity(const Polymer &p) {
    require_abc(p);
    long T = (long)p.length() / 3;
    size_t n = 0;
    while (true) {
        long k = (long)n;  // candidate n+1 triples
        if (k + (k + 1) / 2 + 1 > T - 2) {
            break;
        }
        n++;
    }
    return 3 * n;
}

PulseSequence compile_load(const Polymer &p, const std::string &bits) {
    require_abc(p);
    for (char ch : bits) {
        if (ch != '0' && ch != '1') {
            throw Error(ErrorCode::InvalidArgument, "load string may only contain 0 and 1");
        }
    }
    if (bits.size() > load_capacity(p)) {
        throw Error(ErrorCode::CapacityExceeded, std::to_string(bits.size()) + " characters exceed capacity " +
                                                     std::to_string(load_capacity(p)));
    }
    long n = ((long)bits.size() + 2) / 3;
    auto bit = [&](long i, int s) { return (size_t)(3 * i + s) < bits.size() && bits[3 * i + s] == '1'; };
    Builder b{&p, {}, zero_config(p)};
    if (n == 0) {
        return b.seq;
    }
    PulseSequence t1 = t1_word(p);

    for (long i = n - 1; i >= 0; i--) {
        if (bit(i, 1)) {
            // Copy A_0 into B_0 through a temporary 1 on the end, then uncopy.
            Builder trial = b;
            trial.add(Pulse::pi_end('A', Side::Left, 0));
            trial.add(Pulse::pi('B', 1, trial.cur[2]));
            trial.add(Pulse::pi_end('A', Side::Left, 1));
            Configuration want = b.cur;
            want[1] = 1;
            if (trial.cur == want) {
                b = trial;
            } else {
                PulseSequence ab = swap_pair(p, 'A', 'B');
                b.add(ab);
                b.add(Pulse::pi_end('A', Side::Left, b.cur[1]));
                b.add(ab);
            }
        }
        if (bit(i, 0)) {
            b.add(Pulse::pi_end('A', Side::Left, b.cur[1]));
        }
        if (i > 0) {
            b.add(t1);
        }
    }

    long extra = n - 1;
    for (long k = 0; k < extra / 2; k++) {
        b.add(t1);
    }
    if (extra % 2) {
        b.add(elementary_move(p, Move::AC, true));
    }
    // A and B streams now sit da, db triples right of their targets.
    long da = extra / 2 + extra % 2, db = extra / 2;

    PulseSequence bc_ab = swap_pair(p, 'B', 'C') + swap_pair(p, 'A', 'B');
    PulseSequence ab_bc = swap_pair(p, 'A', 'B') + swap_pair(p, 'B', 'C');
    for (long i = n - 1; i >= 0; i--) {
        if (bit(i, 2)) {
            b.add(bc_ab);
            b.add(Pulse::pi_end('A', Side::Left, b.cur[1]));
            b.add(ab_bc);
        }
        if (i > 0) {
            if (da >= db) {
                b.add(elementary_move(p, Move::AC, false));
                da--;
            } else {
                b.add(elementary_move(p, Move::BC, false));
                db--;
            }
        }
    }

    Configuration target = zero_config(p);
    for (size_t k = 0; k < bits.size(); k++) {
        target[k] = bits[k] == '1';
    }
    if (b.cur != target) {
        throw Error(ErrorCode::InvariantViolation, "load of '" + bits + "' did not reach its target placement");
    }
    return b.seq;
}

PulseSequence compile_load(const Polymer &p, const std::string &bits, const Configuration &initial) {
    if (initial.size() != p.length()) {
        throw Error(ErrorCode::InvalidArgument, "initial configuration has the wrong length");
    }
    if (std::any_of(initial.begin(), initial.end(), [](uint8_t v) { return v != 0; })) {
        throw Error(ErrorCode::NonZeroInitialState, "loading starts from the all-zero configuration");
    }
    return compile_load(p, bits);
}

BitLocation load_location(size_t k) {
    return {(long)(k / 3), (int)(k % 3)};
}

UnloadProgram compile_unload(const Polymer &p, BitLocation bit) {
    require_abc(p);
    long T = (long)p.length() / 3;
    if (bit.triple < 0 || bit.triple >= T - 1 || bit.species < 0 || bit.species > 2) {
        throw Error(ErrorCode::LayoutMismatch, "bit location outside the usable triples");
    }
    UnloadProgram u;
    // Walk the bit's stream down to triple 0, then park the bit on B_0.
    for (long k = 0; k < bit.triple; k++) {
        switch (bit.species) {
            case 0: u.sequence += elementary_move(p, Move::AC, false); break;
            case 1: u.sequence += elementary_move(p, Move::BC, false); break;
            default: u.sequence += elementary_move(p, Move::AC, true); break;
        }
    }
    if (bit.species == 0) {
        u.sequence += swap_pair(p, 'A', 'B');
    } else if (bit.species == 2) {
        u.sequence += swap_pair(p, 'B', 'C');
    }
    u.readout.probe0 = Pulse::pi_end('A', Side::Left, 0);
    u.readout.probe1 = Pulse::pi_end('A', Side::Left, 1);
    u.readout.rule =
        "probe A:end[N] is absorbed (attenuated) exactly when B_0 = N; the absorbed probe's N is the bit";

    // Self-check on a lone bit.
    Configuration c = zero_config(p);
    c[3 * bit.triple + bit.species] = 1;
    Configuration r = apply_sequence(p, c, u.sequence);
    if (r[1] != 1) {
        throw Error(ErrorCode::InvariantViolation, "unload did not bring the bit to B_0");
    }
    return u;
}

UnloadProgram compile_unload(const Polymer &p, int section, int wire, const SectionLayout &l) {
    return compile_unload(p, l.locate(section, wire));
}

int read_probe(const Polymer &p, const Configuration &c, const Readout &r) {
    bool m0 = matches(p, r.probe0, c, 0);
    bool m1 = matches(p, r.probe1, c, 0);
    if (m0 == m1) {
        return -1;
    }
    return m1 ? 1 : 0;
}

}  // namespace pqca::pulsec
