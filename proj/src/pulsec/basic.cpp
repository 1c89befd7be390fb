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

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "pqca/error.hpp"
#include "pqca/pulsec.hpp"
#include "tracker.hpp"

namespace pqca::pulsec {

using detail::mod3;

namespace {

constexpr char kSpecies[3] = {'A', 'B', 'C'};

int species_index(char s) {
    switch (s) {
        case 'A': return 0;
        case 'B': return 1;
        case 'C': return 2;
    }
    throw Error(ErrorCode::UnknownSpecies, std::string("species '") + s + "' is not one of A, B, C");
}

}  // namespace

void require_abc(const Polymer &p) {
    const auto &pat = p.pattern();
    if (pat.size() != 3 || pat[0].id != 'A' || pat[1].id != 'B' || pat[2].id != 'C') {
        throw Error(ErrorCode::PartialPeriodPolymer, "compiler routines need the ABC pattern");
    }
    if (p.length() % 3 != 0 || p.length() < 6) {
        throw Error(ErrorCode::PartialPeriodPolymer,
                    "polymer length " + std::to_string(p.length()) + " is not a whole number of triples (>= 2)");
    }
}

PulseSequence flip(const Polymer &p, char species, std::vector<int> lefts, std::vector<int> rights) {
    PulseSequence seq;
    for (int i : lefts) {
        for (int j : rights) {
            seq.push(Pulse::pi(species, i, j));
        }
    }
    bool first = p.species_at(0).id == species;
    if (first && std::find(lefts.begin(), lefts.end(), 0) != lefts.end()) {
        for (int j : rights) {
            seq.push(Pulse::pi_end(species, Side::Left, j));
        }
    }
    return seq;
}

PulseSequence compile_swap(const Polymer &p, char x, char y, bool include_end) {
    size_t kx = p.pattern_index(x);
    size_t ky = p.pattern_index(y);
    if ((kx + 1) % p.period() != ky || x == y) {
        throw Error(ErrorCode::NonAdjacentSpecies, std::string(1, x) + " is not immediately left of " + y);
    }
    PulseSequence seq;
    seq.push(Pulse::pi(y, 1, 0));
    seq.push(Pulse::pi(y, 1, 1));
    seq.push(Pulse::pi(x, 0, 1));
    seq.push(Pulse::pi(x, 1, 1));
    if (include_end) {
        seq.push(Pulse::pi_end(x, Side::Left, 1));
    }
    seq.push(Pulse::pi(y, 1, 0));
    seq.push(Pulse::pi(y, 1, 1));
    return seq;
}

PulseSequence swap_pair(const Polymer &p, char x, char y) {
    return compile_swap(p, x, y, p.species_at(0).id == x);
}

PulseSequence window_fredkin(const Polymer &p, char first, int control) {
    size_t k = p.pattern_index(first);
    size_t M = p.period();
    char s0 = p.pattern()[k].id;
    char s1 = p.pattern()[(k + 1) % M].id;
    char s2 = p.pattern()[(k + 2) % M].id;
    PulseSequence seq;
    switch (control) {
        case 0: {
            // R ^= M; M ^= L R; R ^= M
            auto cx = flip(p, s2, {1}, {0, 1});
            seq += cx;
            seq += flip(p, s1, {1}, {1});
            seq += cx;
            break;
        }
        case 2: {
            auto cx = flip(p, s0, {0, 1}, {1});
            seq += cx;
            seq += flip(p, s1, {1}, {1});
            seq += cx;
            break;
        }
        case 1: {
            auto sw = swap_pair(p, s1, s2);
            seq += sw;
            seq += window_fredkin(p, s0, 2);
            seq += sw;
            break;
        }
        default:
            throw Error(ErrorCode::InvalidArgument, "window control slot must be 0, 1 or 2");
    }
    return seq;
}

PulseSequence compile_fredkin(const Polymer &p, char control) {
    if (control != 'A' && control != 'B' && control != 'C') {
        throw Error(ErrorCode::UnknownSpecies, std::string("no Fredkin for control '") + control + "'");
    }
    p.pattern_index(control);
    return window_fredkin(p, p.pattern()[0].id, (int)p.pattern_index(control));
}

ShiftPlan ShiftPlan::triples(char species, long offset, char compensate) {
    ShiftPlan plan;
    plan.units[species_index(species)] += 3 * offset;
    plan.units[species_index(compensate)] -= 3 * offset;
    return plan;
}

PulseSequence elementary_move(const Polymer &p, Move m, bool forward) {
    static const std::vector<int> ab = {0, 1, 2, 1};
    static const std::vector<int> bc = {1, 0, 2, 0};
    static const std::vector<int> ac = {0, 1, 0, 2};
    const auto &w = m == Move::AB ? ab : m == Move::BC ? bc : ac;
    PulseSequence seq;
    for (size_t i = 0; i < w.size(); i++) {
        int s = forward ? w[i] : w[w.size() - 1 - i];
        seq += swap_pair(p, kSpecies[s], kSpecies[(s + 1) % 3]);
    }
    return seq;
}

namespace {

// Short swap words and the unit displacement they give each stream.
struct Word {
    std::vector<int> swaps;
    std::array<long, 3> disp;
};

const std::vector<Word> &short_words() {
    static const std::vector<Word> words = [] {
        std::vector<Word> out;
        std::map<std::array<long, 3>, size_t> seen;
        std::queue<Word> q;
        q.push({{}, {0, 0, 0}});
        seen[{0, 0, 0}] = 0;
        out.push_back({{}, {0, 0, 0}});
        while (!q.empty()) {
            Word cur = q.front();
            q.pop();
            if (cur.swaps.size() >= 6) {
                continue;
            }
            for (int s = 0; s < 3; s++) {
                Word nxt = cur;
                nxt.swaps.push_back(s);
                for (int x = 0; x < 3; x++) {
                    long sp = mod3(x + nxt.disp[x]);
                    if (sp == s) {
                        nxt.disp[x] += 1;
                    } else if (sp == (s + 1) % 3) {
                        nxt.disp[x] -= 1;
                    }
                }
                if (seen.emplace(nxt.disp, out.size()).second) {
                    out.push_back(nxt);
                    q.push(nxt);
                }
            }
        }
        return out;
    }();
    return words;
}

}  // namespace

PulseSequence compile_shift(const Polymer &p, const ShiftPlan &plan) {
    require_abc(p);
    const auto &d = plan.units;
    if (d[0] + d[1] + d[2] != 0) {
        throw Error(ErrorCode::CenterOfGravityViolation,
                    "displacements " + std::to_string(d[0]) + "," + std::to_string(d[1]) + "," +
                        std::to_string(d[2]) + " do not sum to zero");
    }
    // A short word fixes the final species of each stream; species-fixed
    // elementary moves (applied first) supply the rest.
    const Word *best = nullptr;
    long best_cost = 0;
    std::array<long, 3> best_rem{};
    for (const auto &w : short_words()) {
        std::array<long, 3> rem{};
        bool ok = true;
        for (int x = 0; x < 3; x++) {
            long r = d[x] - w.disp[x];
            ok = ok && mod3(r) == 0;
            rem[x] = r / 3;
        }
        if (!ok) {
            continue;
        }
        long steps = 0;
        for (long r : rem) {
            steps += r > 0 ? r : 0;
        }
        long cost = 4 * steps + (long)w.swaps.size();
        if (!best || cost < best_cost) {
            best = &w;
            best_cost = cost;
            best_rem = rem;
        }
    }
    if (!best) {
        // Streams only ever trade places, so they must end on distinct species.
        throw Error(ErrorCode::InvalidArgument, "shift plan would put two streams on one species");
    }
    PulseSequence seq;
    auto rem = best_rem;
    while (rem[0] || rem[1] || rem[2]) {
        int x = -1, y = -1;
        for (int i = 0; i < 3; i++) {
            if (rem[i] > 0 && x < 0) {
                x = i;
            }
            if (rem[i] < 0 && y < 0) {
                y = i;
            }
        }
        int lo = std::min(x, y), hi = std::max(x, y);
        Move m = lo == 0 ? (hi == 1 ? Move::AB : Move::AC) : Move::BC;
        seq += elementary_move(p, m, x < y);
        rem[x]--;
        rem[y]++;
    }
    for (int s : best->swaps) {
        seq += swap_pair(p, kSpecies[s], kSpecies[(s + 1) % 3]);
    }
    return seq;
}

CostReport cost_report(const PulseSequence &seq) {
    CostReport r;
    for (const auto &p : seq.pulses) {
        if (p.kind == PulseKind::Idle) {
            continue;
        }
        r.pulses++;
        if (p.kind == PulseKind::DecayPump) {
            r.pumps++;
        } else {
            r.coherent++;
        }
        if (p.end) {
            r.end_pulses++;
        }
        r.per_species[p.species]++;
    }
    r.cycles = seq.cycle_marks.size();
    return r;
}

std::string format_cost_report(const CostReport &r) {
    std::ostringstream out;
    out << "pulses=" << r.pulses << " coherent=" << r.coherent << " pumps=" << r.pumps << " end=" << r.end_pulses
        << " cycles=" << r.cycles;
    for (const auto &[s, n] : r.per_species) {
        out << " " << s << "=" << n;
    }
    return out.str();
}

std::vector<FredkinContext> characterize_fredkin_contexts() {
    // Four triples; the last is the spare far-end triple, whose A serves as
    // the "next A" of triple 2. All 2^12 configurations are checked, so every
    // triple value meets every value of its surrounding units.
    Polymer p = Polymer::abc(12);
    std::vector<FredkinContext> out;
    for (char control : {'A', 'B', 'C'}) {
        PulseSequence seq = compile_fredkin(p, control);
        int cs = species_index(control);
        for (uint32_t bits = 0; bits < (1u << 12); bits++) {
            Configuration c(12);
            for (int n = 0; n < 12; n++) {
                c[n] = (bits >> n) & 1;
            }
            Configuration r = apply_sequence(p, c, seq);
            for (int t = 0; t < 3; t++) {
                int v[3] = {c[3 * t], c[3 * t + 1], c[3 * t + 2]};
                if (v[cs]) {
                    int a = cs == 0 ? 1 : 0, b = cs == 2 ? 1 : 2;
                    std::swap(v[a], v[b]);
                }
                bool good = r[3 * t] == v[0] && r[3 * t + 1] == v[1] && r[3 * t + 2] == v[2];
                if (!good) {
                    out.push_back({control, t == 0, t == 0 ? -1 : (int)c[3 * t - 1], (int)c[3 * t + 3],
                                   c[3 * t] * 4 + c[3 * t + 1] * 2 + c[3 * t + 2]});
                }
            }
        }
    }
    return out;
}

}  // namespace pqca::pulsec
