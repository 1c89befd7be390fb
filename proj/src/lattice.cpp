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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "pqca/error.hpp"

namespace pqca {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Parse: return "ParseError";
        case ErrorCode::Io: return "IoError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::UnknownSpecies: return "UnknownSpecies";
        case ErrorCode::NonClassicalPulse: return "NonClassicalPulse";
        case ErrorCode::MissingEntry: return "MissingEntry";
        case ErrorCode::DissipativePulse: return "DissipativePulse";
        case ErrorCode::DimensionCap: return "DimensionCap";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::NonAdjacentSpecies: return "NonAdjacentSpecies";
        case ErrorCode::CenterOfGravityViolation: return "CenterOfGravityViolation";
        case ErrorCode::PartialPeriodPolymer: return "PartialPeriodPolymer";
        case ErrorCode::CapacityExceeded: return "CapacityExceeded";
        case ErrorCode::NonZeroInitialState: return "NonZeroInitialState";
        case ErrorCode::LayoutMismatch: return "LayoutMismatch";
        case ErrorCode::SectionOverflow: return "SectionOverflow";
        case ErrorCode::NoFastDecay: return "NoFastDecay";
        case ErrorCode::ShiftOutOfRange: return "ShiftOutOfRange";
        case ErrorCode::NoSolution: return "NoSolution";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
    }
    return "Error";
}

Polymer::Polymer(std::vector<Species> pattern, size_t length) : pattern_(std::move(pattern)), length_(length) {
    if (pattern_.empty()) {
        throw Error(ErrorCode::InvalidArgument, "empty species pattern");
    }
    if (length_ < 2) {
        throw Error(ErrorCode::InvalidArgument, "polymer length must be at least 2");
    }
    std::set<char> seen;
    for (const auto &s : pattern_) {
        if (!seen.insert(s.id).second) {
            throw Error(ErrorCode::InvalidArgument, std::string("species ") + s.id + " repeated in pattern");
        }
        if (s.num_states < 2 || s.num_states > 3) {
            throw Error(ErrorCode::InvalidArgument, std::string("species ") + s.id + " must have 2 or 3 states");
        }
        if (s.fast_decay) {
            if (s.fast_decay->ground_state != 0 || s.fast_decay->pump_state <= 1 ||
                s.fast_decay->pump_state >= s.num_states) {
                throw Error(ErrorCode::InvalidArgument, std::string("bad decay levels for species ") + s.id);
            }
        }
    }
}

Polymer Polymer::abc(size_t length, bool b_decays) {
    Species a{'A', 2, std::nullopt};
    Species b{'B', b_decays ? 3 : 2, std::nullopt};
    if (b_decays) {
        b.fast_decay = FastDecay{2, 0};
    }
    Species c{'C', 2, std::nullopt};
    return Polymer({a, b, c}, length);
}

size_t Polymer::pattern_index(char id) const {
    for (size_t k = 0; k < pattern_.size(); k++) {
        if (pattern_[k].id == id) {
            return k;
        }
    }
    throw Error(ErrorCode::UnknownSpecies, std::string("species '") + id + "' not in polymer pattern");
}

bool Polymer::has_species(char id) const {
    return std::any_of(pattern_.begin(), pattern_.end(), [&](const Species &s) { return s.id == id; });
}

size_t Polymer::dimension() const {
    size_t d = 1;
    for (size_t n = 0; n < length_; n++) {
        size_t k = (size_t)species_at(n).num_states;
        if (d > std::numeric_limits<size_t>::max() / k) {
            return std::numeric_limits<size_t>::max();
        }
        d *= k;
    }
    return d;
}

Configuration zero_config(const Polymer &p) {
    return Configuration(p.length(), 0);
}

Configuration config_from_string(const Polymer &p, const std::string &digits) {
    if (digits.size() != p.length()) {
        throw Error(ErrorCode::InvalidArgument, "configuration has " + std::to_string(digits.size()) +
                                                    " digits, polymer has " + std::to_string(p.length()) + " units");
    }
    Configuration c(p.length());
    for (size_t n = 0; n < digits.size(); n++) {
        int v = digits[n] - '0';
        if (v < 0 || v >= p.species_at(n).num_states) {
            throw Error(ErrorCode::InvalidArgument, "bad state '" + std::string(1, digits[n]) + "' at unit " +
                                                        std::to_string(n));
        }
        c[n] = (uint8_t)v;
    }
    return c;
}

std::string config_to_string(const Configuration &c) {
    std::string s(c.size(), '0');
    for (size_t n = 0; n < c.size(); n++) {
        s[n] = (char)('0' + c[n]);
    }
    return s;
}

Pulse Pulse::pi(char species, int left, int right, int a, int b) {
    Pulse p;
    p.species = species;
    p.left = left;
    p.right = right;
    p.a = a;
    p.b = b;
    return p;
}

Pulse Pulse::pi_end(char species, Side side, int neighbor, int a, int b) {
    Pulse p;
    p.species = species;
    p.end = true;
    p.side = side;
    p.neighbor = neighbor;
    p.a = a;
    p.b = b;
    return p;
}

Pulse Pulse::pump(char species, int left, int right, int pump_state) {
    Pulse p = pi(species, left, right, 1, pump_state);
    p.kind = PulseKind::DecayPump;
    return p;
}

Pulse Pulse::idle(double duration) {
    Pulse p;
    p.kind = PulseKind::Idle;
    p.area = 0;
    p.duration = duration;
    return p;
}

bool Pulse::is_full_transfer() const {
    return std::abs(area - kPi) <= 1e-9;
}

std::string Pulse::label() const {
    if (kind == PulseKind::Idle) {
        return "idle";
    }
    std::string s(1, species);
    if (end) {
        s += side == Side::Left ? ":end[" : ":far[";
        s += std::to_string(neighbor) + "]";
    } else {
        s += "[" + std::to_string(left) + "," + std::to_string(right) + "]";
    }
    if (a != 0 || b != 1) {
        s += "(" + std::to_string(a) + std::to_string(b) + ")";
    }
    if (kind == PulseKind::DecayPump) {
        s += "~";
    }
    return s;
}

void PulseSequence::mark_cycle() {
    if (cycle_marks.empty() || cycle_marks.back() < pulses.size()) {
        cycle_marks.push_back(pulses.size());
    }
}

PulseSequence &PulseSequence::operator+=(const PulseSequence &other) {
    size_t base = pulses.size();
    pulses.insert(pulses.end(), other.pulses.begin(), other.pulses.end());
    for (size_t m : other.cycle_marks) {
        if (cycle_marks.empty() || cycle_marks.back() < base + m) {
            cycle_marks.push_back(base + m);
        }
    }
    return *this;
}

PulseSequence operator+(PulseSequence a, const PulseSequence &b) {
    a += b;
    return a;
}

PulseSequence PulseSequence::reversed() const {
    PulseSequence r;
    r.pulses.assign(pulses.rbegin(), pulses.rend());
    for (auto it = cycle_marks.rbegin(); it != cycle_marks.rend(); ++it) {
        size_t m = pulses.size() - *it;
        if (r.cycle_marks.empty() || r.cycle_marks.back() < m) {
            r.cycle_marks.push_back(m);
        }
    }
    r.metadata = metadata;
    return r;
}

void validate_pulse(const Polymer &p, const Pulse &pulse) {
    if (pulse.kind == PulseKind::Idle) {
        if (!(pulse.duration >= 0)) {
            throw Error(ErrorCode::InvalidArgument, "idle duration must be non-negative");
        }
        return;
    }
    size_t k = p.pattern_index(pulse.species);
    const Species &s = p.pattern()[k];
    const Species &ls = p.pattern()[(k + p.period() - 1) % p.period()];
    const Species &rs = p.pattern()[(k + 1) % p.period()];
    if (pulse.a == pulse.b || pulse.a < 0 || pulse.b < 0 || pulse.a >= s.num_states || pulse.b >= s.num_states) {
        throw Error(ErrorCode::InvalidArgument, "bad transition for pulse " + pulse.label());
    }
    if (pulse.end) {
        const Species &ns = pulse.side == Side::Left ? rs : ls;
        if (pulse.neighbor < 0 || pulse.neighbor >= ns.num_states) {
            throw Error(ErrorCode::InvalidArgument, "bad neighbor state for pulse " + pulse.label());
        }
    } else if (pulse.left < 0 || pulse.left >= ls.num_states || pulse.right < 0 || pulse.right >= rs.num_states) {
        throw Error(ErrorCode::InvalidArgument, "bad neighbor states for pulse " + pulse.label());
    }
    if (!(pulse.area > 0 && pulse.area <= 2 * kPi + 1e-12)) {
        throw Error(ErrorCode::InvalidArgument, "pulse area must lie in (0, 2pi]");
    }
    if (pulse.kind == PulseKind::DecayPump) {
        if (!s.fast_decay) {
            throw Error(ErrorCode::NoFastDecay, std::string("species ") + s.id + " has no fast-decay level");
        }
        if (pulse.a != 1 || pulse.b != s.fast_decay->pump_state) {
            throw Error(ErrorCode::InvalidArgument, "decay pump must drive 1 -> pump state");
        }
    }
}

void validate_sequence(const Polymer &p, const PulseSequence &seq) {
    for (size_t m : seq.cycle_marks) {
        if (m > seq.pulses.size()) {
            throw Error(ErrorCode::InvalidArgument, "cycle mark out of range");
        }
    }
    for (size_t k = 1; k < seq.cycle_marks.size(); k++) {
        if (seq.cycle_marks[k] <= seq.cycle_marks[k - 1]) {
            throw Error(ErrorCode::InvalidArgument, "cycle marks must be strictly increasing");
        }
    }
    for (size_t i = 0; i < seq.pulses.size(); i++) {
        try {
            validate_pulse(p, seq.pulses[i]);
        } catch (const Error &e) {
            throw Error(e.code(), "pulse " + std::to_string(i) + ": " + e.what());
        }
    }
}

namespace {

bool condition_holds(const Polymer &p, const Pulse &pulse, const Configuration &c, size_t n) {
    size_t L = p.length();
    if (pulse.end) {
        if (pulse.side == Side::Left) {
            return n == 0 && c[1] == pulse.neighbor;
        }
        return n + 1 == L && c[n - 1] == pulse.neighbor;
    }
    if (n == 0 || n + 1 == L) {
        return false;
    }
    return c[n - 1] == pulse.left && c[n + 1] == pulse.right;
}

}  // namespace

bool matches(const Polymer &p, const Pulse &pulse, const Configuration &c, size_t index) {
    if (pulse.kind == PulseKind::Idle || p.species_at(index).id != pulse.species) {
        return false;
    }
    if (!condition_holds(p, pulse, c, index)) {
        return false;
    }
    if (pulse.kind == PulseKind::DecayPump) {
        return c[index] == pulse.a;
    }
    return c[index] == pulse.a || c[index] == pulse.b;
}

void apply_pulse_inplace(const Polymer &p, Configuration &c, const Pulse &pulse) {
    if (pulse.kind == PulseKind::Idle) {
        return;
    }
    if (pulse.kind == PulseKind::Coherent && !pulse.is_full_transfer()) {
        throw Error(ErrorCode::NonClassicalPulse, "pulse " + pulse.label() + " has area " +
                                                      std::to_string(pulse.area) + ", classical engine needs pi");
    }
    size_t k = p.pattern_index(pulse.species);
    size_t L = p.length();
    auto update = [&](Configuration &dst, size_t n) {
        if (!matches(p, pulse, c, n)) {
            return false;
        }
        if (pulse.kind == PulseKind::DecayPump) {
            dst[n] = 0;
        } else {
            dst[n] = (uint8_t)(c[n] == pulse.a ? pulse.b : pulse.a);
        }
        return true;
    };
    if (p.period() >= 2) {
        // Same-species units are never neighbors, so in-place update is simultaneous.
        if (pulse.end) {
            size_t n = pulse.side == Side::Left ? 0 : L - 1;
            if (p.pattern_index_at(n) == k) {
                update(c, n);
            }
            return;
        }
        for (size_t n = k; n < L; n += p.period()) {
            update(c, n);
        }
        return;
    }
    Configuration next = c;
    for (size_t n = 0; n < L; n++) {
        update(next, n);
    }
    c = std::move(next);
}

Configuration apply_pulse_classical(const Polymer &p, const Configuration &c, const Pulse &pulse) {
    Configuration out = c;
    apply_pulse_inplace(p, out, pulse);
    return out;
}

Configuration apply_sequence(const Polymer &p, const Configuration &c, const PulseSequence &seq) {
    Configuration out = c;
    for (size_t i = 0; i < seq.pulses.size(); i++) {
        try {
            apply_pulse_inplace(p, out, seq.pulses[i]);
        } catch (const Error &e) {
            throw Error(e.code(), "pulse " + std::to_string(i) + ": " + e.what());
        }
    }
    return out;
}

BitsliceState::BitsliceState(const Polymer &p, size_t words) : poly_(&p), words_(words), data_(p.length() * words, 0) {
    if (p.period() < 2) {
        throw Error(ErrorCode::InvalidArgument, "bitslice engine needs a pattern period of at least 2");
    }
}

bool BitsliceState::get(size_t n, size_t lane) const {
    return (unit(n)[lane / 64] >> (lane % 64)) & 1;
}

void BitsliceState::set(size_t n, size_t lane, bool v) {
    uint64_t bit = uint64_t{1} << (lane % 64);
    uint64_t &w = unit(n)[lane / 64];
    w = v ? (w | bit) : (w & ~bit);
}

Configuration BitsliceState::lane(size_t lane) const {
    Configuration c(poly_->length());
    for (size_t n = 0; n < c.size(); n++) {
        c[n] = get(n, lane);
    }
    return c;
}

void BitsliceState::apply(const Pulse &pulse) {
    if (pulse.kind == PulseKind::Idle) {
        return;
    }
    bool pump = pulse.kind == PulseKind::DecayPump;
    if (!pump && !pulse.is_full_transfer()) {
        throw Error(ErrorCode::NonClassicalPulse, "pulse " + pulse.label() + " is not a pi pulse");
    }
    if (!pump && !(pulse.a == 0 && pulse.b == 1)) {
        throw Error(ErrorCode::InvalidArgument, "bitslice engine only drives 0<->1");
    }
    const Polymer &p = *poly_;
    size_t k = p.pattern_index(pulse.species);
    size_t L = p.length();
    size_t W = words_;
    auto sel = [](uint64_t x, int want) { return want ? x : ~x; };
    auto act = [&](size_t n, const uint64_t *mask_src_l, const uint64_t *mask_src_r, int wl, int wr) {
        uint64_t *u = unit(n);
        for (size_t w = 0; w < W; w++) {
            uint64_t m = ~uint64_t{0};
            if (mask_src_l) {
                m &= sel(mask_src_l[w], wl);
            }
            if (mask_src_r) {
                m &= sel(mask_src_r[w], wr);
            }
            if (pump) {
                u[w] &= ~m;
            } else {
                u[w] ^= m;
            }
        }
    };
    if (pulse.end) {
        if (pulse.neighbor > 1) {
            return;
        }
        if (pulse.side == Side::Left) {
            if (k == 0) {
                act(0, nullptr, unit(1), 0, pulse.neighbor);
            }
        } else if (p.pattern_index_at(L - 1) == k) {
            act(L - 1, unit(L - 2), nullptr, pulse.neighbor, 0);
        }
        return;
    }
    if (pulse.left > 1 || pulse.right > 1) {
        return;
    }
    for (size_t n = (k == 0 ? p.period() : k); n + 1 < L; n += p.period()) {
        act(n, unit(n - 1), unit(n + 1), pulse.left, pulse.right);
    }
}

void BitsliceState::apply(const PulseSequence &seq) {
    for (const auto &pulse : seq.pulses) {
        apply(pulse);
    }
}

void FrequencyTable::set_base(char species, Transition t, double w) {
    base_[{species, t}] = w;
}

void FrequencyTable::set_shift(char species, int left, int right, Transition t, double w) {
    shift_[{species, left, right, t}] = w;
}

void FrequencyTable::set_end_shift(char species, Side side, int neighbor, Transition t, double w) {
    end_shift_[{species, side, neighbor, t}] = w;
}

namespace {

std::string tname(Transition t) {
    return std::to_string(t.a) + ":" + std::to_string(t.b);
}

Transition norm(int a, int b) {
    return a < b ? Transition{a, b} : Transition{b, a};
}

}  // namespace

double FrequencyTable::interior(char species, int left, int right, Transition t) const {
    auto b = base_.find({species, t});
    auto s = shift_.find({species, left, right, t});
    if (b == base_.end() || s == shift_.end()) {
        throw Error(ErrorCode::MissingEntry, std::string("no frequency for ") + species + "[" +
                                                 std::to_string(left) + "," + std::to_string(right) + "] " +
                                                 tname(t));
    }
    return b->second + s->second;
}

double FrequencyTable::end(char species, Side side, int neighbor, Transition t) const {
    auto b = base_.find({species, t});
    auto s = end_shift_.find({species, side, neighbor, t});
    if (b == base_.end() || s == end_shift_.end()) {
        throw Error(ErrorCode::MissingEntry, std::string("no end frequency for ") + species +
                                                 (side == Side::Left ? " left" : " right") + " neighbor " +
                                                 std::to_string(neighbor) + " " + tname(t));
    }
    return b->second + s->second;
}

double FrequencyTable::of(const Pulse &pulse) const {
    Transition t = norm(pulse.a, pulse.b);
    if (pulse.end) {
        return end(pulse.species, pulse.side, pulse.neighbor, t);
    }
    return interior(pulse.species, pulse.left, pulse.right, t);
}

double FrequencyTable::conditioned(const Polymer &p, const Configuration &c, size_t n, Transition t) const {
    char s = p.species_at(n).id;
    if (n == 0) {
        return end(s, Side::Left, c[1], t);
    }
    if (n + 1 == p.length()) {
        return end(s, Side::Right, c[n - 1], t);
    }
    return interior(s, c[n - 1], c[n + 1], t);
}

std::vector<Pulse> addressing_classes(const Polymer &p) {
    std::vector<Pulse> out;
    size_t M = p.period();
    for (size_t k = 0; k < M; k++) {
        const Species &s = p.pattern()[k];
        const Species &ls = p.pattern()[(k + M - 1) % M];
        const Species &rs = p.pattern()[(k + 1) % M];
        for (int a = 0; a + 1 < s.num_states; a++) {
            for (int i = 0; i < ls.num_states; i++) {
                for (int j = 0; j < rs.num_states; j++) {
                    out.push_back(Pulse::pi(s.id, i, j, a, a + 1));
                }
            }
        }
    }
    const Species &first = p.species_at(0);
    const Species &second = p.species_at(1);
    for (int a = 0; a + 1 < first.num_states; a++) {
        for (int i = 0; i < second.num_states; i++) {
            out.push_back(Pulse::pi_end(first.id, Side::Left, i, a, a + 1));
        }
    }
    const Species &last = p.species_at(p.length() - 1);
    const Species &before = p.species_at(p.length() - 2);
    for (int a = 0; a + 1 < last.num_states; a++) {
        for (int i = 0; i < before.num_states; i++) {
            out.push_back(Pulse::pi_end(last.id, Side::Right, i, a, a + 1));
        }
    }
    return out;
}

FrequencyTable FrequencyTable::generic(const Polymer &p, uint64_t seed, double base, double shift_scale) {
    FrequencyTable t;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.1, 1.0);
    size_t M = p.period();
    for (size_t k = 0; k < M; k++) {
        const Species &s = p.pattern()[k];
        for (int a = 0; a + 1 < s.num_states; a++) {
            // Species bases sit far apart; neighbor shifts are small perturbations.
            t.set_base(s.id, {a, a + 1}, base * (1.0 + 0.1 * (double)k + 0.05 * a));
        }
    }
    for (const Pulse &c : addressing_classes(p)) {
        double w = shift_scale * u(rng);
        if (c.end) {
            t.set_end_shift(c.species, c.side, c.neighbor, {c.a, c.b}, w);
        } else {
            t.set_shift(c.species, c.left, c.right, {c.a, c.b}, w);
        }
    }
    return t;
}

std::vector<Collision> check_frequency_distinctness(const Polymer &p, const FrequencyTable &t, double tolerance) {
    std::vector<AddressingClass> classes;
    for (const Pulse &c : addressing_classes(p)) {
        classes.push_back({c, t.of(c)});
    }
    std::vector<Collision> out;
    for (size_t i = 0; i < classes.size(); i++) {
        for (size_t j = i + 1; j < classes.size(); j++) {
            double d = std::abs(classes[i].frequency - classes[j].frequency);
            if (d <= tolerance) {
                out.push_back({classes[i], classes[j], d});
            }
        }
    }
    return out;
}

}  // namespace pqca
