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


#include "pqca/pqca.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <random>
#include <string>

#include "pqca/ecc.hpp"
#include "pqca/error.hpp"
#include "pqca/io.hpp"
#include "pqca/lattice.hpp"
#include "pqca/physics.hpp"
#include "pqca/pulsec.hpp"
#include "pqca/qsim.hpp"

struct pqca_polymer {
    pqca::Polymer p;
};

struct pqca_sequence {
    pqca::PulseSequence s;
};

struct pqca_qstate {
    pqca::qsim::QuantumState q;
    std::mt19937_64 rng{1};
};

namespace {

thread_local std::string g_last_error;

pqca_status fail(pqca_status s, const std::string &msg) {
    g_last_error = msg;
    return s;
}

// ErrorCode and pqca_status list the same codes in the same order.
static_assert(static_cast<int>(pqca::ErrorCode::Parse) + 1 == PQCA_ERR_PARSE);
static_assert(static_cast<int>(pqca::ErrorCode::InvariantViolation) + 1 == PQCA_ERR_INVARIANT_VIOLATION);
pqca_status status_of(pqca::ErrorCode c) {
    return static_cast<pqca_status>(static_cast<int>(c) + 1);
}

template <class F>
pqca_status guard(F &&f) {
    try {
        f();
        return PQCA_OK;
    } catch (const pqca::Error &e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return fail(PQCA_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(PQCA_ERR_INTERNAL, e.what());
    }
}

char *dup(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

pqca::Configuration digits_or_zero(const pqca::Polymer &p, const char *digits) {
    return digits ? pqca::config_from_string(p, digits) : pqca::zero_config(p);
}

// Prefixes the failing pulse's position so callers can find it in the file.
template <class F>
void per_pulse(const pqca::PulseSequence &s, F &&f) {
    for (size_t i = 0; i < s.pulses.size(); i++) {
        try {
            f(s.pulses[i]);
        } catch (const pqca::Error &e) {
            std::string msg = e.what();
            std::string prefix = std::string(pqca::error_code_name(e.code())) + ": ";
            if (msg.rfind(prefix, 0) == 0) {
                msg = msg.substr(prefix.size());
            }
            throw pqca::Error(e.code(), "pulse " + std::to_string(i) + " (" + s.pulses[i].label() + "): " + msg);
        }
    }
}

}  // namespace

extern "C" {

const char *pqca_version(void) {
    return "0.1.0";
}

const char *pqca_last_error(void) {
    return g_last_error.c_str();
}

const char *pqca_status_name(pqca_status s) {
    if (s == PQCA_OK) {
        return "Ok";
    }
    if (s == PQCA_ERR_NULL_ARGUMENT) {
        return "NullArgument";
    }
    if (s > PQCA_OK && s <= PQCA_ERR_INVARIANT_VIOLATION) {
        return pqca::error_code_name(static_cast<pqca::ErrorCode>(s - 1));
    }
    return "Internal";
}

void pqca_string_free(char *s) {
    std::free(s);
}

pqca_status pqca_polymer_parse(const char *text, pqca_polymer **out) {
    if (!text || !out) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "text and out must not be NULL");
    }
    return guard([&] { *out = new pqca_polymer{pqca::parse_polymer(text)}; });
}

pqca_status pqca_polymer_abc(size_t units, int b_decays, pqca_polymer **out) {
    if (!out) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "out must not be NULL");
    }
    return guard([&] { *out = new pqca_polymer{pqca::Polymer::abc(units, b_decays != 0)}; });
}

void pqca_polymer_free(pqca_polymer *p) {
    delete p;
}

size_t pqca_polymer_length(const pqca_polymer *p) {
    return p ? p->p.length() : 0;
}

pqca_status pqca_polymer_serialize(const pqca_polymer *p, char **out) {
    if (!p || !out) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "polymer and out must not be NULL");
    }
    return guard([&] { *out = dup(pqca::serialize_polymer(p->p)); });
}

pqca_status pqca_sequence_parse(const char *text, pqca_sequence **out) {
    if (!text || !out) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "text and out must not be NULL");
    }
    return guard([&] { *out = new pqca_sequence{pqca::parse_sequence(text)}; });
}

pqca_status pqca_sequence_new(pqca_sequence **out) {
    if (!out) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "out must not be NULL");
    }
    return guard([&] { *out = new pqca_sequence{}; });
}

void pqca_sequence_free(pqca_sequence *s) {
    delete s;
}

size_t pqca_sequence_size(const pqca_sequence *s) {
    return s ? s->s.size() : 0;
}

pqca_status pqca_sequence_serialize(const pqca_sequence *s, char **out) {
    if (!s || !out) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "sequence and out must not be NULL");
    }
    return guard([&] { *out = dup(pqca::serialize_sequence(s->s)); });
}

pqca_status pqca_sequence_append(pqca_sequence *dst, const pqca_sequence *src) {
    if (!dst || !src) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "sequences must not be NULL");
    }
    return guard([&] { dst->s += src->s; });
}

pqca_status pqca_sequence_reversed(const pqca_sequence *s, pqca_sequence **out) {
    if (!s || !out) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "sequence and out must not be NULL");
    }
    return guard([&] { *out = new pqca_sequence{s->s.reversed()}; });
}

pqca_status pqca_sequence_cost(const pqca_sequence *s, char **report) {
    if (!s || !report) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "sequence and report must not be NULL");
    }
    return guard([&] { *report = dup(pqca::pulsec::format_cost_report(pqca::pulsec::cost_report(s->s))); });
}

pqca_status pqca_compile_circuit(const char *circuit_text, const char *layout_text, const pqca_polymer *polymer,
                                 pqca_sequence **out, pqca_polymer **polymer_out) {
    if (!circuit_text || !out) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "circuit text and out must not be NULL");
    }
    return guard([&] {
        using namespace pqca::pulsec;
        CircuitDesign c = parse_circuit(circuit_text);
        SectionLayout l = layout_text ? parse_layout(layout_text) : make_shepherd_layout(c.num_wires);
        pqca::Polymer p = polymer ? polymer->p : pqca::Polymer::abc(3 * (size_t)l.required_triples());
        auto seq = std::make_unique<pqca_sequence>(pqca_sequence{compile_circuit(p, c, l)});
        if (polymer_out) {
            *polymer_out = new pqca_polymer{p};
        }
        *out = seq.release();
    });
}

pqca_status pqca_circuit_gates(const char *circuit_text, size_t *gates) {
    if (!circuit_text || !gates) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "circuit text and gates must not be NULL");
    }
    return guard([&] { *gates = pqca::pulsec::parse_circuit(circuit_text).gates.size(); });
}

pqca_status pqca_compile_load(const pqca_polymer *p, const char *bits, pqca_sequence **out) {
    if (!p || !bits || !out) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "polymer, bits and out must not be NULL");
    }
    return guard([&] { *out = new pqca_sequence{pqca::pulsec::compile_load(p->p, bits)}; });
}

pqca_status pqca_default_layout(int wires, int sections, int method, char **out) {
    if (!out) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "out must not be NULL");
    }
    if (method != 1 && method != 2) {
        return fail(PQCA_ERR_INVALID_ARGUMENT, "method must be 1 or 2");
    }
    return guard([&] {
        using namespace pqca::pulsec;
        SectionLayout l = method == 1 ? make_shepherd_layout(wires, sections) : make_sparse_layout(wires, sections);
        *out = dup(serialize_layout(l));
    });
}

pqca_status pqca_place_sections(const pqca_polymer *p, const char *layout_text, const uint64_t *data,
                                size_t sections, char **digits) {
    if (!p || !layout_text || (!data && sections) || !digits) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "polymer, layout, data and digits must not be NULL");
    }
    return guard([&] {
        auto l = pqca::pulsec::parse_layout(layout_text);
        std::vector<uint64_t> d(data, data + sections);
        *digits = dup(pqca::config_to_string(pqca::pulsec::place_sections(p->p, l, d)));
    });
}

pqca_status pqca_read_section(const char *digits, const char *layout_text, int section, uint64_t *value) {
    if (!digits || !layout_text || !value) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "digits, layout and value must not be NULL");
    }
    return guard([&] {
        auto l = pqca::pulsec::parse_layout(layout_text);
        pqca::Configuration c;
        for (const char *d = digits; *d; d++) {
            if (*d < '0' || *d > '9') {
                throw pqca::Error(pqca::ErrorCode::Parse, "configuration digits expected");
            }
            c.push_back((uint8_t)(*d - '0'));
        }
        *value = pqca::pulsec::read_section(c, l, section);
    });
}

pqca_status pqca_run(const pqca_polymer *p, const pqca_sequence *s, const char *initial, char **final_digits) {
    if (!p || !s || !final_digits) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "polymer, sequence and output must not be NULL");
    }
    return guard([&] {
        pqca::Configuration c = digits_or_zero(p->p, initial);
        per_pulse(s->s, [&](const pqca::Pulse &x) {
            pqca::validate_pulse(p->p, x);
            pqca::apply_pulse_inplace(p->p, c, x);
        });
        *final_digits = dup(pqca::config_to_string(c));
    });
}

pqca_status pqca_qstate_new(const pqca_polymer *p, const char *basis_digits, pqca_qstate **out) {
    if (!p || !out) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "polymer and out must not be NULL");
    }
    return guard([&] {
        pqca::Configuration c = digits_or_zero(p->p, basis_digits);
        *out = new pqca_qstate{pqca::qsim::QuantumState::basis(p->p, c)};
    });
}

void pqca_qstate_free(pqca_qstate *q) {
    delete q;
}

size_t pqca_qstate_dimension(const pqca_qstate *q) {
    return q ? q->q.dimension() : 0;
}

pqca_status pqca_qstate_apply(pqca_qstate *q, const pqca_sequence *s, const char *freq_table_text) {
    if (!q || !s) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "state and sequence must not be NULL");
    }
    return guard([&] {
        std::unique_ptr<pqca::FrequencyTable> table;
        if (freq_table_text) {
            table = std::make_unique<pqca::FrequencyTable>(pqca::parse_frequency_table(freq_table_text));
        }
        per_pulse(s->s, [&](const pqca::Pulse &x) { pqca::qsim::apply_pulse_quantum(q->q, x, table.get()); });
    });
}

pqca_status pqca_qstate_amplitude(const pqca_qstate *q, size_t index, double *re, double *im) {
    if (!q || !re || !im) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "state and outputs must not be NULL");
    }
    if (index >= q->q.dimension()) {
        return fail(PQCA_ERR_INVALID_ARGUMENT, "amplitude index out of range");
    }
    *re = q->q[index].real();
    *im = q->q[index].imag();
    return PQCA_OK;
}

pqca_status pqca_qstate_dump(const pqca_qstate *q, char **out) {
    if (!q || !out) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "state and out must not be NULL");
    }
    return guard([&] { *out = dup(pqca::qsim::dump_state(q->q)); });
}

pqca_status pqca_qstate_fidelity(const pqca_qstate *a, const pqca_qstate *b, double *out) {
    if (!a || !b || !out) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "states and out must not be NULL");
    }
    return guard([&] { *out = pqca::qsim::fidelity(a->q, b->q); });
}

pqca_status pqca_qstate_seed(pqca_qstate *q, uint64_t seed) {
    if (!q) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "state must not be NULL");
    }
    q->rng.seed(seed);
    return PQCA_OK;
}

pqca_status pqca_qstate_measure(pqca_qstate *q, size_t unit, int *outcome, double *probability) {
    if (!q || !outcome) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "state and outcome must not be NULL");
    }
    return guard([&] {
        pqca::qsim::Measurement m = pqca::qsim::measure_unit(q->q, unit, q->rng);
        *outcome = m.outcome;
        if (probability) {
            *probability = m.probability;
        }
    });
}

pqca_status pqca_generic_frequencies(const pqca_polymer *p, uint64_t seed, char **out) {
    if (!p || !out) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "polymer and out must not be NULL");
    }
    return guard([&] { *out = dup(pqca::serialize_frequency_table(pqca::FrequencyTable::generic(p->p, seed))); });
}

pqca_status pqca_synthesize(const pqca_polymer *p, const char *unitary_text, char **program, double *residual,
                            pqca_sequence **pulses_out) {
    if (!p || !unitary_text || !program || !residual) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "polymer, unitary, program and residual must not be NULL");
    }
    return guard([&] {
        using namespace pqca::qsim;
        UnitaryFile f = parse_unitary(unitary_text);
        std::vector<size_t> labels;
        QuantumState probe(p->p);
        for (const auto &l : f.labels) {
            labels.push_back(probe.index_of(pqca::config_from_string(p->p, l)));
        }
        PrimitiveProgram prog = synthesize_unitary(f.U, labels, p->p);
        double r = distance_up_to_phase(compose_pulses(prog, p->p), f.U).distance;
        std::string text = format_program(prog, p->p);
        std::unique_ptr<pqca_sequence> seq;
        if (pulses_out) {
            seq = std::make_unique<pqca_sequence>(pqca_sequence{prog.pulses()});
        }
        *program = dup(text);
        *residual = r;
        if (pulses_out) {
            *pulses_out = seq.release();
        }
    });
}

void pqca_ec_options_default(pqca_ec_options *o) {
    if (o) {
        *o = pqca_ec_options{0.1, 0.0, 99, 5, 1, 1000, 1};
    }
}

pqca_status pqca_ec_simulate(const pqca_ec_options *o, char **report, double *residual) {
    if (!o || !report) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "options and report must not be NULL");
    }
    return guard([&] {
        using namespace pqca::ecc;
        if (o->trials < 1 || o->votes < 0 || o->rounds < 1) {
            throw pqca::Error(pqca::ErrorCode::InvalidArgument, "trials and rounds must be >= 1, votes >= 0");
        }
        BlockFormat f = make_block_format(o->copies);
        EcStats s = monte_carlo_ec(f, NoiseModel{o->epsilon, o->theta, o->seed}, o->votes, o->rounds, o->trials);
        *report = dup(format_ec_report(s));
        if (residual) {
            *residual = s.residual;
        }
    });
}

pqca_status pqca_redundancy(double epsilon, double bits, double cycles, double budget, char **report) {
    if (!report) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "report must not be NULL");
    }
    return guard([&] {
        *report = dup(pqca::ecc::format_redundancy(pqca::ecc::redundancy_required(epsilon, bits, cycles, budget)));
    });
}

pqca_status pqca_analyze(const char *params_text, char **report, int *feasible) {
    if (!params_text || !report) {
        return fail(PQCA_ERR_NULL_ARGUMENT, "params and report must not be NULL");
    }
    return guard([&] {
        using namespace pqca::physics;
        PhysicalParams p = parse_params(params_text);
        OperatingWindow w = operating_window(p);
        *report = dup(format_window(p, w));
        if (feasible) {
            *feasible = w.feasible ? 1 : 0;
        }
    });
}

}  // extern "C"
