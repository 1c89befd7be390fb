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

#ifndef PQCA_LATTICE_HPP
#define PQCA_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace pqca {

constexpr double kPi = std::numbers::pi;

struct FastDecay {
    int pump_state = 2;
    int ground_state = 0;
    bool operator==(const FastDecay &) const = default;
};

struct Species {
    char id = 'A';
    int num_states = 2;
    std::optional<FastDecay> fast_decay;
    bool operator==(const Species &) const = default;
};

class Polymer {
   public:
    Polymer(std::vector<Species> pattern, size_t length);

    // ABCABC... with binary units; B optionally gets the short-lived third level.
    static Polymer abc(size_t length, bool b_decays = false);

    size_t length() const {
        return length_;
    }
    size_t period() const {
        return pattern_.size();
    }
    const std::vector<Species> &pattern() const {
        return pattern_;
    }
    const Species &species_at(size_t n) const {
        return pattern_[n % pattern_.size()];
    }
    size_t pattern_index_at(size_t n) const {
        return n % pattern_.size();
    }
    // Position of the species in the pattern; throws UnknownSpecies.
    size_t pattern_index(char id) const;
    const Species &species(char id) const {
        return pattern_[pattern_index(id)];
    }
    bool has_species(char id) const;
    bool is_end(size_t n) const {
        return n == 0 || n + 1 == length_;
    }
    // Basis dimension, saturating at SIZE_MAX.
    size_t dimension() const;
    bool operator==(const Polymer &) const = default;

   private:
    std::vector<Species> pattern_;
    size_t length_;
};

// One state index per unit.
using Configuration = std::vector<uint8_t>;

Configuration zero_config(const Polymer &p);
Configuration config_from_string(const Polymer &p, const std::string &digits);
std::string config_to_string(const Configuration &c);

enum class Side : uint8_t { Left, Right };
enum class PulseKind : uint8_t { Coherent, DecayPump, Idle };

// A neighbor-conditioned resonant pulse. Interior pulses use (left, right);
// end pulses use (side, neighbor). Idle is a free-evolution gap used only for
// phase tracking; it matches nothing.
struct Pulse {
    PulseKind kind = PulseKind::Coherent;
    char species = 'A';
    bool end = false;
    Side side = Side::Left;
    int left = 0;
    int right = 0;
    int neighbor = 0;
    int a = 0;
    int b = 1;
    double area = kPi;
    double phase = 0;
    double duration = 0;

    static Pulse pi(char species, int left, int right, int a = 0, int b = 1);
    static Pulse pi_end(char species, Side side, int neighbor, int a = 0, int b = 1);
    static Pulse pump(char species, int left, int right, int pump_state = 2);
    static Pulse idle(double duration);

    bool is_full_transfer() const;
    // Short human label, e.g. B[1,0] or A:end[0].
    std::string label() const;
    bool operator==(const Pulse &) const = default;
};

struct PulseSequence {
    std::vector<Pulse> pulses;
    // A mark k sits between pulses[k-1] and pulses[k].
    std::vector<size_t> cycle_marks;
    std::string metadata;

    size_t size() const {
        return pulses.size();
    }
    bool empty() const {
        return pulses.empty();
    }
    void push(const Pulse &p) {
        pulses.push_back(p);
    }
    void mark_cycle();
    PulseSequence &operator+=(const PulseSequence &other);
    PulseSequence reversed() const;
    bool operator==(const PulseSequence &) const = default;
};

PulseSequence operator+(PulseSequence a, const PulseSequence &b);

// Throws UnknownSpecies / InvalidArgument / NoFastDecay.
void validate_pulse(const Polymer &p, const Pulse &pulse);
void validate_sequence(const Polymer &p, const PulseSequence &seq);

bool matches(const Polymer &p, const Pulse &pulse, const Configuration &c, size_t index);
void apply_pulse_inplace(const Polymer &p, Configuration &c, const Pulse &pulse);
Configuration apply_pulse_classical(const Polymer &p, const Configuration &c, const Pulse &pulse);
Configuration apply_sequence(const Polymer &p, const Configuration &c, const PulseSequence &seq);

// 64*words independent binary configurations, one bit plane per lane. Used by
// the exhaustive oracles and the Monte Carlo driver. Only binary dynamics are
// supported: 0<->1 pi pulses and 1->0 pumps.
class BitsliceState {
   public:
    BitsliceState(const Polymer &p, size_t words);
    size_t words() const {
        return words_;
    }
    uint64_t *unit(size_t n) {
        return &data_[n * words_];
    }
    const uint64_t *unit(size_t n) const {
        return &data_[n * words_];
    }
    bool get(size_t n, size_t lane) const;
    void set(size_t n, size_t lane, bool v);
    void apply(const Pulse &pulse);
    void apply(const PulseSequence &seq);
    // Lane configuration as a classical Configuration.
    Configuration lane(size_t lane) const;

   private:
    const Polymer *poly_;
    size_t words_;
    std::vector<uint64_t> data_;
};

struct Transition {
    int a = 0;
    int b = 1;
    auto operator<=>(const Transition &) const = default;
};

class FrequencyTable {
   public:
    void set_base(char species, Transition t, double w);
    void set_shift(char species, int left, int right, Transition t, double w);
    void set_end_shift(char species, Side side, int neighbor, Transition t, double w);

    // Effective frequency (base + shift). Throws MissingEntry.
    double interior(char species, int left, int right, Transition t) const;
    double end(char species, Side side, int neighbor, Transition t) const;
    double of(const Pulse &pulse) const;
    // Frequency of the transition for unit n given its current neighbors.
    double conditioned(const Polymer &p, const Configuration &c, size_t n, Transition t) const;

    // Table with well-separated random shifts for every addressing class.
    static FrequencyTable generic(const Polymer &p, uint64_t seed, double base = 1e15,
                                  double shift_scale = 1e12);

    const std::map<std::pair<char, Transition>, double> &base_map() const {
        return base_;
    }
    const std::map<std::tuple<char, int, int, Transition>, double> &shift_map() const {
        return shift_;
    }
    const std::map<std::tuple<char, Side, int, Transition>, double> &end_map() const {
        return end_shift_;
    }

   private:
    std::map<std::pair<char, Transition>, double> base_;
    std::map<std::tuple<char, int, int, Transition>, double> shift_;
    std::map<std::tuple<char, Side, int, Transition>, double> end_shift_;
};

struct AddressingClass {
    Pulse representative;
    double frequency = 0;
};

struct Collision {
    AddressingClass first;
    AddressingClass second;
    double separation = 0;
};

// Every (species, condition, transition) the polymer can address.
std::vector<Pulse> addressing_classes(const Polymer &p);
std::vector<Collision> check_frequency_distinctness(const Polymer &p, const FrequencyTable &t,
                                                    double tolerance);

}  // namespace pqca

#endif
