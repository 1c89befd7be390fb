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

// Symbolic token tracker. Every unit that may hold a nonzero value is a
// token; everything else is known to be zero. The tracker follows tokens
// through swaps and windowed Fredkin pulses, and refuses any step whose effect
// on the finite polymer would differ from the intended one.

#ifndef PQCA_PULSEC_TRACKER_HPP
#define PQCA_PULSEC_TRACKER_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "pqca/lattice.hpp"

namespace pqca::pulsec::detail {

inline long floor_div(long a, long b) {
    long q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

inline long mod3(long a) {
    return ((a % 3) + 3) % 3;
}

struct Token {
    int stream = 0;  // home species: 0=A 1=B 2=C
    long home = 0;   // triple index within the stream
    bool one = false;
    int group = 0;
    int role = 0;
};

// Window of type w covers units 3T+w, 3T+w+1, 3T+w+2. Slot k holds species
// (w+k)%3 at triple T + (w+k)/3.
inline int slot_species(int w, int k) {
    return (w + k) % 3;
}
inline long slot_offset(int w, int k) {
    return (w + k) / 3;
}
inline int slot_of_species(int w, int s) {
    return (int)mod3(s - w);
}

enum class Verdict { Reject, Swap, Keep };

// (control, target1 or null, target2 or null) -> what the window may do.
using Intent = std::function<Verdict(const Token &, const Token *, const Token *)>;

class Tracker {
   public:
    Tracker(const Polymer &p, long lo_unit, long hi_unit);

    int add(const Token &t);
    void set_group(int i, int g) {
        tokens_[i].group = g;
    }
    const std::vector<Token> &tokens() const {
        return tokens_;
    }
    // Unit displacement of each stream relative to home.
    const std::array<long, 3> &displacement() const {
        return u_;
    }
    std::array<long, 3> offsets() const;  // triples, species-fixed frame only
    bool species_fixed() const;
    long unit_of(const Token &t) const {
        return 3 * t.home + t.stream + u_[t.stream];
    }
    long triple_of(const Token &t) const {
        return floor_div(unit_of(t), 3);
    }
    // Token whose stream sits on `species` at `triple` (species-fixed frame).
    const Token *at(int species, long triple) const;
    int index_at(int species, long triple) const;
    bool in_range() const;

    // Swap between species s and s+1 (s=2 is the C|A pair across triples).
    bool swap(int s, PulseSequence *out);
    // Elementary species-fixed move: stream x +1 triple, stream y -1 triple.
    bool step(int x, int y, PulseSequence *out);
    // Species-fixed shift to the given triple offsets.
    bool shift_to(const std::array<long, 3> &target, PulseSequence *out);
    // Window Fredkin of type w with control slot c. Every window whose
    // control holds a token is checked against `intent`.
    bool fredkin(int w, int c, const Intent &intent, PulseSequence *out);

    const Polymer &polymer() const {
        return *poly_;
    }

   private:
    void reindex();

    const Polymer *poly_;
    long lo_, hi_;
    std::array<long, 3> u_{0, 0, 0};
    std::vector<Token> tokens_;
    std::unordered_map<uint64_t, int> index_;
    std::array<long, 3> min_home_{}, max_home_{};
    std::array<bool, 3> has_{};
};

}  // namespace pqca::pulsec::detail

#endif
