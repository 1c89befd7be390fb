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

// Lowering of loads, shifts, Fredkin gates, whole reversible circuits,
// section transfers and unloads into pulse sequences for the ABC polymer.
//
// Stream picture used throughout: the information sitting on species X at
// triple t is "token t of stream X". A swap moves every token of the two
// affected species by one unit, so a sequence of swaps displaces each of the
// three streams rigidly. The net unit displacements always sum to zero.

#ifndef PQCA_PULSEC_HPP
#define PQCA_PULSEC_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pqca/lattice.hpp"

namespace pqca::pulsec {

// Throws PartialPeriodPolymer unless the polymer is ABC-periodic with a whole
// number of triples.
void require_abc(const Polymer &p);

// Conditioned flip of every unit of `species` whose left neighbor is in
// `lefts` and right neighbor in `rights`. When the species can sit at index 0
// and 0 is an allowed left state, the matching end pulses are added so the
// first unit behaves as if it had a zero on its left.
PulseSequence flip(const Polymer &p, char species, std::vector<int> lefts, std::vector<int> rights);

PulseSequence compile_swap(const Polymer &p, char x, char y, bool include_end);
// Exchanges information between every adjacent (x, y) pair, adding the end
// pulse whenever x can be the first unit.
PulseSequence swap_pair(const Polymer &p, char x, char y);

// Controlled swap on the triple of each A: control A swaps (B, C), control C
// swaps (A, B), control B swaps (A, C).
PulseSequence compile_fredkin(const Polymer &p, char control);

// Controlled swap on the three consecutive units that start at every unit of
// species `first`. Slot `control` (0..2) is the control.
PulseSequence window_fredkin(const Polymer &p, char first, int control);

// Unit displacement of the information held on each species.
struct ShiftPlan {
    std::array<long, 3> units{0, 0, 0};
    static ShiftPlan triples(char species, long offset, char compensate);
};

// The three elementary species-preserving moves (each moves two streams by
// one triple in opposite directions).
enum class Move { AB, BC, AC };
PulseSequence elementary_move(const Polymer &p, Move m, bool forward);

PulseSequence compile_shift(const Polymer &p, const ShiftPlan &plan);

// Load order: a1 b1 c1 a2 b2 c2 ... onto the first triples.
size_t load_capacity(const Polymer &p);
PulseSequence compile_load(const Polymer &p, const std::string &bits);
// Same, but first checks that the given starting configuration is all zero.
PulseSequence compile_load(const Polymer &p, const std::string &bits, const Configuration &initial);

struct Gate {
    int control = 0;
    int t1 = 1;
    int t2 = 2;
    bool operator==(const Gate &) const = default;
};

struct CircuitDesign {
    int num_wires = 0;
    std::vector<Gate> gates;
    std::vector<std::string> wire_names;

    void validate() const;
    // Bit w of the result is wire w.
    uint64_t evaluate(uint64_t input) const;
};

CircuitDesign parse_circuit(const std::string &text);
std::string serialize_circuit(const CircuitDesign &c);

enum class Method { Shepherd, SparseInterval };

struct BitLocation {
    long triple = 0;
    int species = 0;  // 0=A 1=B 2=C
    bool operator==(const BitLocation &) const = default;
};

struct SectionLayout {
    Method method = Method::Shepherd;
    int num_wires = 0;
    int num_sections = 1;
    long section_length = 0;  // triples holding data and shepherds
    long stride = 0;          // section plus the blank section after it
    long origin = 0;          // first triple of section 0
    int interval = 0;         // m for the sparse method
    std::vector<BitLocation> placement;  // section-relative, per wire
    std::vector<BitLocation> shepherds;  // section-relative constant ones

    BitLocation locate(int section, int wire) const;
    // Triples a polymer needs for this layout, routing slack and the spare
    // far-end triple included.
    long required_triples() const;
};

SectionLayout make_shepherd_layout(int num_wires, int num_sections = 1, long origin = -1);
SectionLayout make_sparse_layout(int num_wires, int num_sections = 1, long origin = -1);
SectionLayout parse_layout(const std::string &text);
std::string serialize_layout(const SectionLayout &l);

// Initial configuration holding `data[q]` (bit w = wire w) in section q plus
// the shepherd ones.
Configuration place_sections(const Polymer &p, const SectionLayout &l, const std::vector<uint64_t> &data);
uint64_t read_section(const Configuration &c, const SectionLayout &l, int section);

PulseSequence compile_circuit_method1(const Polymer &p, const CircuitDesign &c, const SectionLayout &l);
PulseSequence compile_circuit_method2(const Polymer &p, const CircuitDesign &c, const SectionLayout &l);
// Dispatches on l.method.
PulseSequence compile_circuit(const Polymer &p, const CircuitDesign &c, const SectionLayout &l);

enum class Direction { Left, Right };
PulseSequence compile_section_transfer(const Polymer &p, const std::vector<int> &wires, Direction dir,
                                       const SectionLayout &l);

// Readout: the bit is brought next to the end unit, whose frequency then
// depends on it. Exactly one probe is resonant and its subscript is the bit.
struct Readout {
    Pulse probe0;
    Pulse probe1;
    std::string rule;
};

struct UnloadProgram {
    PulseSequence sequence;
    Readout readout;
};

UnloadProgram compile_unload(const Polymer &p, BitLocation bit);
UnloadProgram compile_unload(const Polymer &p, int section, int wire, const SectionLayout &l);
// Location of character k of a load string.
BitLocation load_location(size_t k);
// Applies both probes to the configuration; returns the bit, or -1 when no
// probe (or both) matched.
int read_probe(const Polymer &p, const Configuration &c, const Readout &r);

struct CostReport {
    size_t pulses = 0;
    size_t coherent = 0;
    size_t pumps = 0;
    size_t end_pulses = 0;
    size_t cycles = 0;
    std::map<char, size_t> per_species;
};

CostReport cost_report(const PulseSequence &seq);
std::string format_cost_report(const CostReport &r);

// Exhaustive check of compile_fredkin on one triple for every triple value and
// every value of the surrounding units (previous C, next A, both neighbors'
// other units), at the left end and in the interior. Lists every context in
// which the action deviates from an isolated Fredkin gate.
struct FredkinContext {
    char control;
    bool at_left_end;
    int prev_c;  // -1 at the left end
    int next_a;
    int triple;  // ABC bits, A most significant
};

std::vector<FredkinContext> characterize_fredkin_contexts();

}  // namespace pqca::pulsec

#endif
