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


/* C interface to the pqca simulator and pulse compiler.
 *
 * Every object is an opaque handle released with its _free function. Every
 * fallible call returns a pqca_status; on failure the message is available
 * from pqca_last_error() on the same thread until the next failing call.
 * Strings returned through char** are heap copies owned by the caller and
 * released with pqca_string_free. Text arguments use the library's file
 * formats (polymer, sequence, circuit, layout, unitary, key=value params).
 */

#ifndef PQCA_PQCA_H
#define PQCA_PQCA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PQCA_API __declspec(dllexport)
#else
#define PQCA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pqca_status {
    PQCA_OK = 0,
    PQCA_ERR_PARSE,
    PQCA_ERR_IO,
    PQCA_ERR_INVALID_ARGUMENT,
    PQCA_ERR_UNKNOWN_SPECIES,
    PQCA_ERR_NON_CLASSICAL_PULSE,
    PQCA_ERR_MISSING_ENTRY,
    PQCA_ERR_DISSIPATIVE_PULSE,
    PQCA_ERR_DIMENSION_CAP,
    PQCA_ERR_DIMENSION_MISMATCH,
    PQCA_ERR_NOT_UNITARY,
    PQCA_ERR_NON_ADJACENT_SPECIES,
    PQCA_ERR_CENTER_OF_GRAVITY,
    PQCA_ERR_PARTIAL_PERIOD,
    PQCA_ERR_CAPACITY_EXCEEDED,
    PQCA_ERR_NON_ZERO_INITIAL_STATE,
    PQCA_ERR_LAYOUT_MISMATCH,
    PQCA_ERR_SECTION_OVERFLOW,
    PQCA_ERR_NO_FAST_DECAY,
    PQCA_ERR_SHIFT_OUT_OF_RANGE,
    PQCA_ERR_NO_SOLUTION,
    PQCA_ERR_INVARIANT_VIOLATION, /* a library bug, never bad input */
    PQCA_ERR_NULL_ARGUMENT,
    PQCA_ERR_INTERNAL
} pqca_status;

typedef struct pqca_polymer pqca_polymer;
typedef struct pqca_sequence pqca_sequence;
typedef struct pqca_qstate pqca_qstate;

PQCA_API const char *pqca_version(void);
PQCA_API const char *pqca_last_error(void);
PQCA_API const char *pqca_status_name(pqca_status s);
PQCA_API void pqca_string_free(char *s);

/* Polymers. */
PQCA_API pqca_status pqca_polymer_parse(const char *text, pqca_polymer **out);
/* ABC repeat of `units` units; b_decays gives B the 2->0 fast-decay level. */
PQCA_API pqca_status pqca_polymer_abc(size_t units, int b_decays, pqca_polymer **out);
PQCA_API void pqca_polymer_free(pqca_polymer *p);
PQCA_API size_t pqca_polymer_length(const pqca_polymer *p);
PQCA_API pqca_status pqca_polymer_serialize(const pqca_polymer *p, char **out);

/* Pulse sequences. */
PQCA_API pqca_status pqca_sequence_parse(const char *text, pqca_sequence **out);
PQCA_API pqca_status pqca_sequence_new(pqca_sequence **out);
PQCA_API void pqca_sequence_free(pqca_sequence *s);
PQCA_API size_t pqca_sequence_size(const pqca_sequence *s);
PQCA_API pqca_status pqca_sequence_serialize(const pqca_sequence *s, char **out);
PQCA_API pqca_status pqca_sequence_append(pqca_sequence *dst, const pqca_sequence *src);
PQCA_API pqca_status pqca_sequence_reversed(const pqca_sequence *s, pqca_sequence **out);
PQCA_API pqca_status pqca_sequence_cost(const pqca_sequence *s, char **report);

/* Compilation. layout_text may be NULL for the default shepherd layout with
 * one section. When polymer is NULL an ABC polymer just long enough for the
 * layout is used; the polymer actually used is returned through
 * polymer_out when that is not NULL. */
PQCA_API pqca_status pqca_compile_circuit(const char *circuit_text, const char *layout_text,
                                          const pqca_polymer *polymer, pqca_sequence **out,
                                          pqca_polymer **polymer_out);
/* Gates in a circuit text after validation. */
PQCA_API pqca_status pqca_circuit_gates(const char *circuit_text, size_t *gates);
PQCA_API pqca_status pqca_compile_load(const pqca_polymer *p, const char *bits, pqca_sequence **out);

/* Default layout text for `wires` wires: method 1 is the shepherd layout,
 * method 2 the sparse-interval one. */
PQCA_API pqca_status pqca_default_layout(int wires, int sections, int method, char **out);

/* Digits of the configuration holding data[q] in section q of the layout
 * (bit w = wire w) plus its shepherds, and the inverse read-back. */
PQCA_API pqca_status pqca_place_sections(const pqca_polymer *p, const char *layout_text, const uint64_t *data,
                                         size_t sections, char **digits);
PQCA_API pqca_status pqca_read_section(const char *digits, const char *layout_text, int section,
                                       uint64_t *value);

/* Classical run. `initial` is a digit string with one digit per unit, or
 * NULL for all zeros. The final configuration comes back as digits. */
PQCA_API pqca_status pqca_run(const pqca_polymer *p, const pqca_sequence *s, const char *initial,
                              char **final_digits);

/* Quantum state over the binary subspace, 2^length amplitudes. */
PQCA_API pqca_status pqca_qstate_new(const pqca_polymer *p, const char *basis_digits, pqca_qstate **out);
PQCA_API void pqca_qstate_free(pqca_qstate *q);
PQCA_API size_t pqca_qstate_dimension(const pqca_qstate *q);
/* freq_table_text NULL disables phase tracking (free evolution is skipped). */
PQCA_API pqca_status pqca_qstate_apply(pqca_qstate *q, const pqca_sequence *s, const char *freq_table_text);
PQCA_API pqca_status pqca_qstate_amplitude(const pqca_qstate *q, size_t index, double *re, double *im);
PQCA_API pqca_status pqca_qstate_dump(const pqca_qstate *q, char **out);
PQCA_API pqca_status pqca_qstate_fidelity(const pqca_qstate *a, const pqca_qstate *b, double *out);
/* Projective measurement of one unit; the state collapses. Randomness comes
 * from a per-state generator reseeded by pqca_qstate_seed (default 1). */
PQCA_API pqca_status pqca_qstate_seed(pqca_qstate *q, uint64_t seed);
PQCA_API pqca_status pqca_qstate_measure(pqca_qstate *q, size_t unit, int *outcome, double *probability);

/* Frequency table text with random well-separated shifts for every
 * transition the polymer can address. */
PQCA_API pqca_status pqca_generic_frequencies(const pqca_polymer *p, uint64_t seed, char **out);

/* Unitary synthesis. The program listing and the operator distance of the
 * composed pulses to the target (up to global phase) are returned; pulses_out
 * may be NULL. */
PQCA_API pqca_status pqca_synthesize(const pqca_polymer *p, const char *unitary_text, char **program,
                                     double *residual, pqca_sequence **pulses_out);

/* Error-correction Monte Carlo. */
typedef struct pqca_ec_options {
    double epsilon;
    double theta;
    int copies; /* n, copies per block */
    int votes;  /* votes per round */
    int rounds;
    int trials;
    uint64_t seed;
} pqca_ec_options;

PQCA_API void pqca_ec_options_default(pqca_ec_options *o);
PQCA_API pqca_status pqca_ec_simulate(const pqca_ec_options *o, char **report, double *residual);
PQCA_API pqca_status pqca_redundancy(double epsilon, double bits, double cycles, double budget, char **report);

/* Physics: operating window from a key=value parameter text. Infeasible
 * parameters are reported (feasible = 0), not an error. */
PQCA_API pqca_status pqca_analyze(const char *params_text, char **report, int *feasible);

#ifdef __cplusplus
}
#endif

#endif
