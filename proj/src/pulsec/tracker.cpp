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

#include "tracker.hpp"

#include <algorithm>
#include <set>

#include "pqca/error.hpp"
#include "pqca/pulsec.hpp"

namespace pqca::pulsec::detail {

namespace {

uint64_t key(int stream, long home) {
    return ((uint64_t)(uint32_t)stream << 40) ^ (uint64_t)(home + (1L << 38));
}

constexpr char kSpecies[3] = {'A', 'B', 'C'};

// Swap words for the elementary moves, as left-species indices (0=AB 1=BC 2=CA).
const std::vector<int> &move_word(int x, int y, bool &reverse) {
    static const std::vector<int> ab = {0, 1, 2, 1};
    static const std::vector<int> bc = {1, 0, 2, 0};
    static const std::vector<int> ac = {0, 1, 0, 2};
    reverse = x > y;
    int lo = std::min(x, y), hi = std::max(x, y);
    if (lo == 0 && hi == 1) {
        return ab;
    }
    if (lo == 1 && hi == 2) {
        return bc;
    }
    return ac;
}

}  // namespace

Tracker::Tracker(const Polymer &p, long lo_unit, long hi_unit) : poly_(&p), lo_(lo_unit), hi_(hi_unit) {
}

int Tracker::add(const Token &t) {
    tokens_.push_back(t);
    reindex();
    return (int)tokens_.size() - 1;
}

void Tracker::reindex() {
    index_.clear();
    has_ = {false, false, false};
    for (size_t i = 0; i < tokens_.size(); i++) {
        const Token &t = tokens_[i];
        if (!index_.emplace(key(t.stream, t.home), (int)i).second) {
            throw Error(ErrorCode::InvariantViolation, "two tokens share a slot");
        }
        if (!has_[t.stream]) {
            has_[t.stream] = true;
            min_home_[t.stream] = max_home_[t.stream] = t.home;
        } else {
            min_home_[t.stream] = std::min(min_home_[t.stream], t.home);
            max_home_[t.stream] = std::max(max_home_[t.stream], t.home);
        }
    }
}

bool Tracker::species_fixed() const {
    return u_[0] % 3 == 0 && u_[1] % 3 == 0 && u_[2] % 3 == 0;
}

std::array<long, 3> Tracker::offsets() const {
    if (!species_fixed()) {
        throw Error(ErrorCode::InvariantViolation, "tracker not in a species-fixed frame");
    }
    return {u_[0] / 3, u_[1] / 3, u_[2] / 3};
}

int Tracker::index_at(int species, long triple) const {
    long home = triple - u_[species] / 3;
    auto it = index_.find(key(species, home));
    return it == index_.end() ? -1 : it->second;
}

const Token *Tracker::at(int species, long triple) const {
    int i = index_at(species, triple);
    return i < 0 ? nullptr : &tokens_[i];
}

bool Tracker::in_range() const {
    for (int s = 0; s < 3; s++) {
        if (!has_[s]) {
            continue;
        }
        long lo = 3 * min_home_[s] + s + u_[s];
        long hi = 3 * max_home_[s] + s + u_[s];
        if (lo < lo_ || hi > hi_) {
            return false;
        }
    }
    return true;
}

bool Tracker::swap(int s, PulseSequence *out) {
    int left = s, right = (s + 1) % 3;
    for (int x = 0; x < 3; x++) {
        long sp = mod3(x + u_[x]);
        if (sp == left) {
            u_[x] += 1;
        } else if (sp == right) {
            u_[x] -= 1;
        }
    }
    if (out) {
        *out += swap_pair(*poly_, kSpecies[left], kSpecies[right]);
    }
    return in_range();
}

bool Tracker::step(int x, int y, PulseSequence *out) {
    if (!species_fixed()) {
        throw Error(ErrorCode::InvariantViolation, "elementary move outside a species-fixed frame");
    }
    bool rev = false;
    const auto &word = move_word(x, y, rev);
    auto saved = u_;
    PulseSequence tmp;
    for (size_t i = 0; i < word.size(); i++) {
        int s = rev ? word[word.size() - 1 - i] : word[i];
        if (!swap(s, out ? &tmp : nullptr)) {
            u_ = saved;
            return false;
        }
    }
    if (out) {
        *out += tmp;
    }
    return true;
}

bool Tracker::shift_to(const std::array<long, 3> &target, PulseSequence *out) {
    if (target[0] + target[1] + target[2] != 0) {
        throw Error(ErrorCode::CenterOfGravityViolation, "stream offsets must sum to zero");
    }
    auto saved = u_;
    PulseSequence tmp;
    while (true) {
        auto d = offsets();
        std::array<long, 3> delta{target[0] - d[0], target[1] - d[1], target[2] - d[2]};
        if (delta[0] == 0 && delta[1] == 0 && delta[2] == 0) {
            break;
        }
        bool moved = false;
        for (int x = 0; x < 3 && !moved; x++) {
            for (int y = 0; y < 3 && !moved; y++) {
                if (x != y && delta[x] > 0 && delta[y] < 0) {
                    moved = step(x, y, out ? &tmp : nullptr);
                }
            }
        }
        if (!moved) {
            u_ = saved;
            return false;
        }
    }
    if (out) {
        *out += tmp;
    }
    return true;
}

bool Tracker::fredkin(int w, int c, const Intent &intent, PulseSequence *out) {
    auto D = offsets();
    if (c == 1) {
        // Control in the middle: the emitted pulses conjugate by a global
        // swap of the two right slots, which must itself stay in range.
        auto saved = u_;
        bool ok = swap((w + 1) % 3, nullptr);
        u_ = saved;
        if (!ok) {
            return false;
        }
    }
    std::set<long> instances;
    for (const auto &t : tokens_) {
        instances.insert(floor_div(unit_of(t) - w, 3));
    }
    struct Move {
        int token;
        int species;
        long triple;
    };
    std::vector<Move> moves;
    for (long T : instances) {
        int idx[3];
        for (int k = 0; k < 3; k++) {
            idx[k] = index_at(slot_species(w, k), T + slot_offset(w, k));
        }
        if (idx[c] < 0) {
            continue;
        }
        int k1 = c == 0 ? 1 : 0;
        int k2 = c == 2 ? 1 : 2;
        const Token *t1 = idx[k1] < 0 ? nullptr : &tokens_[idx[k1]];
        const Token *t2 = idx[k2] < 0 ? nullptr : &tokens_[idx[k2]];
        if (!t1 && !t2) {
            continue;
        }
        if (t1 && t2 && t1->one && t2->one) {
            continue;
        }
        Verdict v = intent(tokens_[idx[c]], t1, t2);
        if (v == Verdict::Reject) {
            return false;
        }
        if (v == Verdict::Swap) {
            if (t1) {
                moves.push_back({idx[k1], slot_species(w, k2), T + slot_offset(w, k2)});
            }
            if (t2) {
                moves.push_back({idx[k2], slot_species(w, k1), T + slot_offset(w, k1)});
            }
        }
    }
    if (!moves.empty()) {
        auto saved = tokens_;
        for (const auto &m : moves) {
            Token &t = tokens_[m.token];
            t.stream = m.species;
            t.home = m.triple - D[m.species];
        }
        bool ok = true;
        for (const auto &m : moves) {
            long unit = unit_of(tokens_[m.token]);
            ok = ok && unit >= lo_ && unit <= hi_;
        }
        if (ok) {
            try {
                reindex();
            } catch (const Error &) {
                ok = false;
            }
        }
        if (!ok) {
            tokens_ = saved;
            reindex();
            return false;
        }
    }
    if (out) {
        *out += window_fredkin(*poly_, kSpecies[w], c);
    }
    return true;
}

}  // namespace pqca::pulsec::detail
