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

// Shared by the pulsec tests and the acceptance binary: run a compiled
// circuit on every input at once (one bitslice lane per input) and compare
// with direct evaluation.

#ifndef PQCA_TESTS_CIRCUIT_HARNESS_HPP
#define PQCA_TESTS_CIRCUIT_HARNESS_HPP

#include <random>
#include <string>

#include "pqca/pulsec.hpp"

namespace pqca::harness {

// Input for section q on lane x: section 0 gets x itself, the others get an
// unrelated bijection of it so sections carry different data.
inline uint64_t section_input(uint64_t x, int q, int n) {
    uint64_t mask = (n >= 64) ? ~0ull : ((1ull << n) - 1);
    uint64_t v = x;
    for (int k = 0; k < q; k++) {
        v = (v * 5 + 3) & mask;
        v ^= (mask >> 1);
    }
    return v;
}

struct OracleResult {
    bool ok = true;
    std::string detail;
    size_t pulses = 0;
};

inline OracleResult check_circuit(const pulsec::CircuitDesign &c, const pulsec::SectionLayout &l) {
    OracleResult r;
    Polymer p = Polymer::abc(3 * (size_t)l.required_triples());
    PulseSequence seq = pulsec::compile_circuit(p, c, l);
    r.pulses = seq.size();
    size_t inputs = size_t{1} << c.num_wires;
    size_t words = (inputs + 63) / 64;
    BitsliceState st(p, words);
    for (size_t x = 0; x < inputs; x++) {
        std::vector<uint64_t> data;
        for (int q = 0; q < l.num_sections; q++) {
            data.push_back(section_input(x, q, c.num_wires));
        }
        Configuration init = pulsec::place_sections(p, l, data);
        for (size_t n = 0; n < p.length(); n++) {
            if (init[n]) {
                st.set(n, x, true);
            }
        }
    }
    st.apply(seq);
    for (size_t x = 0; x < inputs && r.ok; x++) {
        Configuration fin = st.lane(x);
        std::vector<uint64_t> want;
        for (int q = 0; q < l.num_sections; q++) {
            want.push_back(c.evaluate(section_input(x, q, c.num_wires)));
        }
        // Whole-configuration comparison: data correct, shepherds home,
        // everything else still zero.
        Configuration expect = pulsec::place_sections(p, l, want);
        if (fin != expect) {
            r.ok = false;
            r.detail = "input " + std::to_string(x) + " wrong";
        }
    }
    return r;
}

inline pulsec::CircuitDesign random_circuit(std::mt19937_64 &rng, int max_wires, int max_gates) {
    pulsec::CircuitDesign c;
    c.num_wires = 3 + (int)(rng() % (size_t)(max_wires - 2));
    for (int i = 0; i < c.num_wires; i++) {
        c.wire_names.push_back("w" + std::to_string(i));
    }
    int gates = 1 + (int)(rng() % (size_t)max_gates);
    for (int g = 0; g < gates; g++) {
        int a = (int)(rng() % c.num_wires), b, d;
        do {
            b = (int)(rng() % c.num_wires);
        } while (b == a);
        do {
            d = (int)(rng() % c.num_wires);
        } while (d == a || d == b);
        c.gates.push_back({a, b, d});
    }
    return c;
}

}  // namespace pqca::harness

#endif
