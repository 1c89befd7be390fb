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

#include <cmath>

#include "pqca/error.hpp"
#include "pqca/io.hpp"
#include "pqca/qsim.hpp"

namespace pqca::qsim {

QuantumState::QuantumState(const Polymer &p) : poly_(p) {
    size_t D = p.dimension();
    if (D > kMaxDimension) {
        throw Error(ErrorCode::DimensionCap, "polymer of length " + std::to_string(p.length()) +
                                                 " exceeds the statevector cap of 2^20 amplitudes");
    }
    size_t L = p.length();
    stride_.assign(L, 1);
    for (size_t n = L; n-- > 1;) {
        stride_[n - 1] = stride_[n] * (size_t)p.species_at(n).num_states;
    }
    amp_.assign(D, cplx(0));
    amp_[0] = 1;
}

QuantumState QuantumState::basis(const Polymer &p, const Configuration &c) {
    QuantumState s(p);
    s.amp_[0] = 0;
    s.amp_[s.index_of(c)] = 1;
    return s;
}

size_t QuantumState::index_of(const Configuration &c) const {
    if (c.size() != poly_.length()) {
        throw Error(ErrorCode::DimensionMismatch, "configuration length differs from the polymer");
    }
    size_t x = 0;
    for (size_t n = 0; n < c.size(); n++) {
        if (c[n] >= poly_.species_at(n).num_states) {
            throw Error(ErrorCode::InvalidArgument, "unit " + std::to_string(n) + " state out of range");
        }
        x += c[n] * stride_[n];
    }
    return x;
}

Configuration QuantumState::config_of(size_t index) const {
    Configuration c(poly_.length());
    for (size_t n = 0; n < c.size(); n++) {
        c[n] = (uint8_t)((index / stride_[n]) % (size_t)poly_.species_at(n).num_states);
    }
    return c;
}

double QuantumState::norm() const {
    double s = 0;
    for (const cplx &z : amp_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

void QuantumState::normalize() {
    double n = norm();
    if (n == 0) {
        throw Error(ErrorCode::InvalidArgument, "cannot normalize the zero vector");
    }
    for (cplx &z : amp_) {
        z /= n;
    }
}

std::vector<size_t> pulse_units(const Polymer &p, const Pulse &pulse) {
    std::vector<size_t> out;
    if (pulse.kind == PulseKind::Idle) {
        return out;
    }
    size_t L = p.length();
    if (pulse.end) {
        size_t n = pulse.side == Side::Left ? 0 : L - 1;
        if (p.species_at(n).id == pulse.species) {
            out.push_back(n);
        }
        return out;
    }
    for (size_t n = 1; n + 1 < L; n++) {
        if (p.species_at(n).id == pulse.species) {
            out.push_back(n);
        }
    }
    return out;
}

namespace {

// Neighbor condition on basis index x, for unit n.
bool condition_on_index(const QuantumState &s, const Pulse &pulse, size_t n, size_t x) {
    const Polymer &p = s.polymer();
    auto digit = [&](size_t m) { return (int)((x / s.stride(m)) % (size_t)p.species_at(m).num_states); };
    size_t L = p.length();
    if (pulse.end) {
        return pulse.side == Side::Left ? digit(1) == pulse.neighbor : digit(L - 2) == pulse.neighbor;
    }
    return digit(n - 1) == pulse.left && digit(n + 1) == pulse.right;
}

}  // namespace

void apply_unit_rotation(QuantumState &s, const Pulse &pulse, size_t unit) {
    const Polymer &p = s.polymer();
    if (pulse.kind == PulseKind::DecayPump) {
        throw Error(ErrorCode::DissipativePulse, "decay pump " + pulse.label() + " has no unitary action");
    }
    if (pulse.kind == PulseKind::Idle) {
        return;
    }
    int d = p.species_at(unit).num_states;
    if (pulse.a < 0 || pulse.b < 0 || pulse.a >= d || pulse.b >= d || pulse.a == pulse.b) {
        throw Error(ErrorCode::InvalidArgument, "pulse " + pulse.label() + " names a missing level");
    }
    size_t st = s.stride(unit);
    double c = std::cos(pulse.area / 2), sn = std::sin(pulse.area / 2);
    const cplx I(0, 1);
    cplx up = -I * std::exp(-I * pulse.phase) * sn;   // b -> a
    cplx low = -I * std::exp(I * pulse.phase) * sn;   // a -> b
    auto &amp = s.amplitudes();
    long shift = (long)(pulse.b - pulse.a) * (long)st;
    for (size_t x = 0; x < amp.size(); x++) {
        if ((int)((x / st) % (size_t)d) != pulse.a || !condition_on_index(s, pulse, unit, x)) {
            continue;
        }
        size_t y = (size_t)((long)x + shift);
        cplx ax = amp[x], ay = amp[y];
        amp[x] = c * ax + up * ay;
        amp[y] = low * ax + c * ay;
    }
}

double basis_energy(const Polymer &p, const Configuration &c, const FrequencyTable &freq) {
    double e = 0;
    for (size_t n = 0; n < c.size(); n++) {
        for (int t = 0; t < c[n]; t++) {
            e += freq.conditioned(p, c, n, {t, t + 1});
        }
    }
    return e;
}

void free_evolution(QuantumState &s, double duration, const FrequencyTable &freq) {
    if (duration == 0) {
        return;
    }
    auto &amp = s.amplitudes();
    for (size_t x = 0; x < amp.size(); x++) {
        if (amp[x] == cplx(0)) {
            continue;
        }
        double e = basis_energy(s.polymer(), s.config_of(x), freq);
        // Reduce before exponentiating: e*t is large at optical frequencies.
        double ph = std::fmod(e * duration, 2 * kPi);
        amp[x] *= std::polar(1.0, -ph);
    }
}

void apply_pulse_quantum(QuantumState &s, const Pulse &pulse, const FrequencyTable *freq) {
    validate_pulse(s.polymer(), pulse);
    if (pulse.kind == PulseKind::DecayPump) {
        throw Error(ErrorCode::DissipativePulse, "decay pump " + pulse.label() + " has no unitary action");
    }
    for (size_t n : pulse_units(s.polymer(), pulse)) {
        apply_unit_rotation(s, pulse, n);
    }
    if (freq) {
        free_evolution(s, pulse.duration, *freq);
    }
}

void apply_sequence_quantum(QuantumState &s, const PulseSequence &seq, const FrequencyTable *freq) {
    for (size_t i = 0; i < seq.size(); i++) {
        try {
            apply_pulse_quantum(s, seq.pulses[i], freq);
        } catch (const Error &e) {
            throw Error(e.code(), "pulse " + std::to_string(i) + ": " + e.what());
        }
    }
}

double unit_probability(const QuantumState &s, size_t index, int value) {
    if (index >= s.polymer().length()) {
        throw Error(ErrorCode::InvalidArgument, "unit index out of range");
    }
    size_t st = s.stride(index);
    size_t d = (size_t)s.polymer().species_at(index).num_states;
    double pr = 0;
    const auto &amp = s.amplitudes();
    for (size_t x = 0; x < amp.size(); x++) {
        if ((int)((x / st) % d) == value) {
            pr += std::norm(amp[x]);
        }
    }
    return pr;
}

Measurement measure_unit(QuantumState &s, size_t index, std::mt19937_64 &rng) {
    if (index >= s.polymer().length()) {
        throw Error(ErrorCode::InvalidArgument, "unit index out of range");
    }
    int d = s.polymer().species_at(index).num_states;
    std::vector<double> probs;
    for (int v = 0; v < d; v++) {
        probs.push_back(unit_probability(s, index, v));
    }
    std::discrete_distribution<int> dist(probs.begin(), probs.end());
    int k = dist(rng);
    size_t st = s.stride(index);
    auto &amp = s.amplitudes();
    for (size_t x = 0; x < amp.size(); x++) {
        if ((int)((x / st) % (size_t)d) != k) {
            amp[x] = 0;
        }
    }
    s.normalize();
    return {k, probs[k]};
}

double fidelity(const QuantumState &a, const QuantumState &b) {
    if (a.dimension() != b.dimension()) {
        throw Error(ErrorCode::DimensionMismatch, "states have different dimensions");
    }
    cplx ip = 0;
    for (size_t x = 0; x < a.dimension(); x++) {
        ip += std::conj(a[x]) * b[x];
    }
    return std::norm(ip);
}

std::string dump_state(const QuantumState &s) {
    std::string out;
    for (size_t x = 0; x < s.dimension(); x++) {
        if (std::abs(s[x]) < 1e-14) {
            continue;
        }
        out += "|" + config_to_string(s.config_of(x)) + "> " + format_double(s[x].real()) + " " +
               format_double(s[x].imag()) + "\n";
    }
    return out;
}

}  // namespace pqca::qsim
