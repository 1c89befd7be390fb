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

// Statevector engine for small polymers and the two-level synthesis of
// arbitrary unitaries on a chosen set of basis states.
//
// Basis index: mixed radix over units, unit 0 most significant, so the
// bitstring "1000" of a four-unit binary polymer is index 8.
//
// A coherent pulse of area theta and phase phi acts on every matching unit
// as the 2x2 matrix on (|a>, |b>)
//
//     [ cos(theta/2)                -i e^{-i phi} sin(theta/2) ]
//     [ -i e^{i phi} sin(theta/2)    cos(theta/2)              ]
//
// With phase tracking on, the rotation is applied at the start of the pulse
// and the state then evolves freely for the pulse duration; each basis state
// has energy equal to the sum, over its excited units, of the conditioned
// transition frequency of that unit.

#ifndef PQCA_QSIM_HPP
#define PQCA_QSIM_HPP

#include <complex>
#include <random>
#include <string>
#include <vector>

#include "pqca/lattice.hpp"

namespace pqca::qsim {

using cplx = std::complex<double>;

constexpr size_t kMaxDimension = size_t{1} << 20;

class QuantumState {
   public:
    // |0...0>. Throws DimensionCap past kMaxDimension.
    explicit QuantumState(const Polymer &p);
    static QuantumState basis(const Polymer &p, const Configuration &c);

    const Polymer &polymer() const {
        return poly_;
    }
    size_t dimension() const {
        return amp_.size();
    }
    std::vector<cplx> &amplitudes() {
        return amp_;
    }
    const std::vector<cplx> &amplitudes() const {
        return amp_;
    }
    cplx &operator[](size_t i) {
        return amp_[i];
    }
    const cplx &operator[](size_t i) const {
        return amp_[i];
    }

    size_t index_of(const Configuration &c) const;
    Configuration config_of(size_t index) const;
    // Place value of unit n in the basis index.
    size_t stride(size_t n) const {
        return stride_[n];
    }
    double norm() const;
    void normalize();

   private:
    Polymer poly_;
    std::vector<size_t> stride_;
    std::vector<cplx> amp_;
};

// Units a pulse can address (one entry for end pulses).
std::vector<size_t> pulse_units(const Polymer &p, const Pulse &pulse);

// The rotation of a single unit; apply_pulse_quantum is this over
// pulse_units in order.
void apply_unit_rotation(QuantumState &s, const Pulse &pulse, size_t unit);

// freq may be null (phase tracking off). Idle pulses only evolve.
// Throws DissipativePulse for DecayPump.
void apply_pulse_quantum(QuantumState &s, const Pulse &pulse, const FrequencyTable *freq = nullptr);
void apply_sequence_quantum(QuantumState &s, const PulseSequence &seq, const FrequencyTable *freq = nullptr);

// Energy (rad/s) of a basis state under the table.
double basis_energy(const Polymer &p, const Configuration &c, const FrequencyTable &freq);
void free_evolution(QuantumState &s, double duration, const FrequencyTable &freq);

struct Measurement {
    int outcome;
    double probability;
};
// Samples unit `index`, collapses the state, returns the outcome.
Measurement measure_unit(QuantumState &s, size_t index, std::mt19937_64 &rng);
// Marginal probability of unit `index` being in `value`.
double unit_probability(const QuantumState &s, size_t index, int value);

double fidelity(const QuantumState &a, const QuantumState &b);

// `|bitstring> re im` per amplitude of magnitude >= 1e-14.
std::string dump_state(const QuantumState &s);

// ---------------------------------------------------------------------------
// Synthesis.

struct TwoLevelRotation {
    size_t u = 0;
    size_t v = 1;
    double theta = 0;
    double phi = 0;
};

// Each pi pulse moves a basis state with a factor -i, so a permutation
// carries a phase per state.
struct PermutationStep {
    std::vector<size_t> map;    // basis index -> image
    std::vector<cplx> phase;    // factor picked up by each source state
    PulseSequence pulses;
};

struct ProgramStep {
    enum Kind { Permutation, Rotation } kind = Rotation;
    PermutationStep perm;
    TwoLevelRotation rot;  // phi already corrects for the permutation phases
    Pulse pulse;           // realizes rot (rotation steps only)
};

struct PrimitiveProgram {
    std::vector<size_t> labels;  // the k basis states U acts on, in order
    size_t dimension = 0;
    std::vector<ProgramStep> steps;

    size_t rotation_count() const;
    // All pulses in order.
    PulseSequence pulses() const;
};

// Row-major k x k complex matrix.
struct Matrix {
    size_t k = 0;
    std::vector<cplx> a;
    cplx &operator()(size_t r, size_t c) {
        return a[r * k + c];
    }
    const cplx &operator()(size_t r, size_t c) const {
        return a[r * k + c];
    }
    static Matrix identity(size_t k);
};

Matrix haar_random_unitary(size_t k, std::mt19937_64 &rng);

// Throws NotUnitary (tolerance 1e-10) or DimensionMismatch.
PrimitiveProgram synthesize_unitary(const Matrix &U, const std::vector<size_t> &labels, const Polymer &p);

// Action of the program on the label subspace, from the abstract steps
// (permutation tables and ideal two-level rotations).
Matrix compose_program(const PrimitiveProgram &prog);
// Same, but by running the program's pulses on the statevector engine.
Matrix compose_pulses(const PrimitiveProgram &prog, const Polymer &p);

struct PhaseDistance {
    double distance;  // Frobenius norm of M - e^{i alpha} U
    double alpha;
};
PhaseDistance distance_up_to_phase(const Matrix &M, const Matrix &U);

// `dim k labels=b1,b2,...` then k rows of k `re im` pairs.
struct UnitaryFile {
    Matrix U;
    std::vector<std::string> labels;
};
UnitaryFile parse_unitary(const std::string &text);
std::string serialize_unitary(const UnitaryFile &f);
std::string format_program(const PrimitiveProgram &prog, const Polymer &p);

}  // namespace pqca::qsim

#endif
