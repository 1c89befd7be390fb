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


// pqca command-line front end. Everything goes through the C interface.
//
// Exit status: 0 success (an infeasible analysis is still a success),
// 1 bad input or usage, 2 internal invariant violation.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11/CLI11.hpp"
#include "pqca/pqca.h"

namespace {

struct Failure {
    int code;
    std::string message;
};

[[noreturn]] void raise(pqca_status s) {
    int code = (s == PQCA_ERR_INVARIANT_VIOLATION || s == PQCA_ERR_INTERNAL) ? 2 : 1;
    throw Failure{code, pqca_last_error()};
}

void check(pqca_status s) {
    if (s != PQCA_OK) {
        raise(s);
    }
}

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Failure{1, "cannot open '" + path + "'"};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw Failure{1, "cannot write '" + path + "'"};
    }
}

// Owning wrappers for the C handles.
struct StrDel {
    void operator()(char *s) const {
        pqca_string_free(s);
    }
};
struct PolyDel {
    void operator()(pqca_polymer *p) const {
        pqca_polymer_free(p);
    }
};
struct SeqDel {
    void operator()(pqca_sequence *s) const {
        pqca_sequence_free(s);
    }
};
struct QDel {
    void operator()(pqca_qstate *q) const {
        pqca_qstate_free(q);
    }
};
using Str = std::unique_ptr<char, StrDel>;
using Poly = std::unique_ptr<pqca_polymer, PolyDel>;
using Seq = std::unique_ptr<pqca_sequence, SeqDel>;
using QState = std::unique_ptr<pqca_qstate, QDel>;

std::string take(char *s) {
    Str owned(s);
    return owned ? std::string(owned.get()) : std::string();
}

Poly load_polymer(const std::string &path) {
    pqca_polymer *p = nullptr;
    check(pqca_polymer_parse(slurp(path).c_str(), &p));
    return Poly(p);
}

Seq load_sequence(const std::string &path) {
    pqca_sequence *s = nullptr;
    check(path.empty() ? pqca_sequence_new(&s) : pqca_sequence_parse(slurp(path).c_str(), &s));
    return Seq(s);
}

Seq load_program(const pqca_polymer *p, const std::string &bits) {
    pqca_sequence *s = nullptr;
    check(pqca_compile_load(p, bits.c_str(), &s));
    return Seq(s);
}

void emit(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        spit(path, text);
    }
}

struct CompileArgs {
    std::string circuit, layout, polymer, load, output, polymer_out, layout_out;
    int method = 1;
    int sections = 1;
};

// Wire count from the circuit header, for building a default layout.
int circuit_wires(const std::string &circuit) {
    std::istringstream in(circuit);
    std::string line, word;
    while (std::getline(in, line)) {
        std::istringstream ls(line.substr(0, line.find('#')));
        int n = 0;
        if (ls >> word) {
            if (word == "wires" && ls >> n) {
                return n;
            }
            break;
        }
    }
    throw Failure{1, "circuit has no 'wires N' header"};
}

void cmd_compile(const CompileArgs &a) {
    Poly poly;
    if (!a.polymer.empty()) {
        poly = load_polymer(a.polymer);
    }
    Seq seq;
    std::string prefix;
    if (!a.load.empty()) {
        if (!poly) {
            throw Failure{1, "--load needs --polymer"};
        }
        seq = load_program(poly.get(), a.load);
    } else {
        if (a.circuit.empty()) {
            throw Failure{1, "compile needs --circuit or --load"};
        }
        std::string circuit = slurp(a.circuit);
        size_t gates = 0;
        check(pqca_circuit_gates(circuit.c_str(), &gates));
        prefix = "gates=" + std::to_string(gates) + " ";
        std::string layout;
        if (!a.layout.empty()) {
            layout = slurp(a.layout);
        } else {
            char *l = nullptr;
            check(pqca_default_layout(circuit_wires(circuit), a.sections, a.method, &l));
            layout = take(l);
        }
        pqca_sequence *s = nullptr;
        pqca_polymer *used = nullptr;
        check(pqca_compile_circuit(circuit.c_str(), layout.c_str(), poly.get(), &s, &used));
        seq.reset(s);
        poly.reset(used);
        if (!a.layout_out.empty()) {
            spit(a.layout_out, layout);
        }
    }
    if (!a.polymer_out.empty()) {
        char *text = nullptr;
        check(pqca_polymer_serialize(poly.get(), &text));
        spit(a.polymer_out, take(text));
    }
    char *text = nullptr, *cost = nullptr;
    check(pqca_sequence_serialize(seq.get(), &text));
    emit(a.output, take(text));
    check(pqca_sequence_cost(seq.get(), &cost));
    std::string report = prefix + take(cost);
    if (!report.empty() && report.back() != '\n') {
        report += '\n';
    }
    // Keep stdout clean when it carries the sequence itself.
    (a.output.empty() || a.output == "-" ? std::cerr : std::cout) << report;
}

struct RunArgs {
    std::string polymer, sequence, init, load, layout;
    std::vector<uint64_t> data;
    bool reverse = false;
};

void cmd_run(const RunArgs &a) {
    Poly poly = load_polymer(a.polymer);
    Seq seq;
    pqca_sequence *s = nullptr;
    check(pqca_sequence_new(&s));
    seq.reset(s);
    if (!a.load.empty()) {
        Seq l = load_program(poly.get(), a.load);
        check(pqca_sequence_append(seq.get(), l.get()));
    }
    Seq body = load_sequence(a.sequence);
    if (a.reverse) {
        pqca_sequence *r = nullptr;
        check(pqca_sequence_reversed(body.get(), &r));
        body.reset(r);
    }
    check(pqca_sequence_append(seq.get(), body.get()));

    std::string layout = a.layout.empty() ? std::string() : slurp(a.layout);
    std::string init = a.init;
    if (!a.data.empty()) {
        if (a.layout.empty()) {
            throw Failure{1, "--data needs --layout"};
        }
        char *d = nullptr;
        check(pqca_place_sections(poly.get(), layout.c_str(), a.data.data(), a.data.size(), &d));
        init = take(d);
    }
    char *out = nullptr;
    check(pqca_run(poly.get(), seq.get(), init.empty() ? nullptr : init.c_str(), &out));
    std::string fin = take(out);
    std::cout << fin << "\n";
    if (!a.layout.empty()) {
        for (size_t q = 0; q < std::max<size_t>(a.data.size(), 1); q++) {
            uint64_t v = 0;
            check(pqca_read_section(fin.c_str(), layout.c_str(), (int)q, &v));
            std::cout << "section " << q << " = " << v << "\n";
        }
    }
}

struct QrunArgs {
    std::string polymer, sequence, init, freq;
    bool phases = false;
    std::vector<size_t> measure;
    uint64_t seed = 1;
};

void cmd_qrun(const QrunArgs &a) {
    Poly poly = load_polymer(a.polymer);
    Seq seq = load_sequence(a.sequence);
    pqca_qstate *q = nullptr;
    check(pqca_qstate_new(poly.get(), a.init.empty() ? nullptr : a.init.c_str(), &q));
    QState state(q);
    std::string table;
    if (!a.freq.empty()) {
        table = slurp(a.freq);
    } else if (a.phases) {
        char *t = nullptr;
        check(pqca_generic_frequencies(poly.get(), a.seed, &t));
        table = take(t);
    }
    check(pqca_qstate_apply(state.get(), seq.get(), table.empty() ? nullptr : table.c_str()));
    check(pqca_qstate_seed(state.get(), a.seed));
    for (size_t unit : a.measure) {
        int outcome = 0;
        double prob = 0;
        check(pqca_qstate_measure(state.get(), unit, &outcome, &prob));
        std::printf("measure unit=%zu outcome=%d p=%.12g\n", unit, outcome, prob);
    }
    char *dump = nullptr;
    check(pqca_qstate_dump(state.get(), &dump));
    std::cout << take(dump);
}

struct EcArgs {
    pqca_ec_options o{};
    double bits = 1e12, cycles = 1e20, budget = 0.01;
};

void cmd_ecsim(const EcArgs &a) {
    char *report = nullptr;
    check(pqca_ec_simulate(&a.o, &report, nullptr));
    std::cout << take(report);
    if (a.o.epsilon < 0.5) {
        char *r = nullptr;
        check(pqca_redundancy(a.o.epsilon, a.bits, a.cycles, a.budget, &r));
        std::cout << "\n" << take(r);
    }
}

void cmd_analyze(const std::string &params) {
    char *report = nullptr;
    int feasible = 0;
    check(pqca_analyze(slurp(params).c_str(), &report, &feasible));
    std::cout << take(report);
}

struct SynthArgs {
    std::string unitary, polymer, output;
    size_t units = 0;
};

void cmd_synth(const SynthArgs &a) {
    Poly poly;
    if (!a.polymer.empty()) {
        poly = load_polymer(a.polymer);
    } else {
        pqca_polymer *p = nullptr;
        check(pqca_polymer_abc(a.units, 0, &p));
        poly.reset(p);
    }
    char *program = nullptr;
    double residual = 0;
    pqca_sequence *s = nullptr;
    check(pqca_synthesize(poly.get(), slurp(a.unitary).c_str(), &program, &residual, a.output.empty() ? nullptr : &s));
    Seq seq(s);
    std::cout << take(program);
    std::printf("residual=%.3e\n", residual);
    if (seq) {
        char *text = nullptr;
        check(pqca_sequence_serialize(seq.get(), &text));
        spit(a.output, take(text));
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"pqca: pulse compiler and simulator for ABC heteropolymer cellular automata"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(pqca_version()));

    CompileArgs ca;
    auto *compile = app.add_subcommand("compile", "Compile a Fredkin circuit (or a load string) to pulses");
    compile->add_option("--circuit", ca.circuit, "circuit file")->check(CLI::ExistingFile);
    compile->add_option("--layout", ca.layout, "section layout file (default: shepherd, one section)")
        ->check(CLI::ExistingFile);
    compile->add_option("--polymer", ca.polymer, "polymer file (default: ABC sized for the layout)")
        ->check(CLI::ExistingFile);
    compile->add_option("--load", ca.load, "compile this load string instead of a circuit");
    compile->add_option("-o,--output", ca.output, "sequence output (default stdout)");
    compile->add_option("--polymer-out", ca.polymer_out, "write the polymer used");
    compile->add_option("--layout-out", ca.layout_out, "write the layout used");
    compile->add_option("--method", ca.method, "default layout: 1 shepherd, 2 sparse interval")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    compile->add_option("--sections", ca.sections, "sections in the default layout")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    RunArgs ra;
    auto *run = app.add_subcommand("run", "Classical simulation of a pulse sequence");
    run->add_option("--polymer", ra.polymer, "polymer file")->required()->check(CLI::ExistingFile);
    run->add_option("--sequence", ra.sequence, "sequence file")->check(CLI::ExistingFile);
    auto *init = run->add_option("--init", ra.init, "initial configuration digits (default all zero)");
    run->add_option("--load", ra.load, "prepend the load program for this string");
    run->add_option("--layout", ra.layout, "layout file, to place --data and read sections back")
        ->check(CLI::ExistingFile);
    run->add_option("--data", ra.data, "section values (bit w = wire w)")->delimiter(',')->excludes(init);
    run->add_flag("--reverse", ra.reverse, "apply the sequence reversed");

    QrunArgs qa;
    auto *qrun = app.add_subcommand("qrun", "Statevector simulation of a pulse sequence");
    qrun->add_option("--polymer", qa.polymer, "polymer file")->required()->check(CLI::ExistingFile);
    qrun->add_option("--sequence", qa.sequence, "sequence file")->check(CLI::ExistingFile);
    qrun->add_option("--init", qa.init, "initial basis state digits");
    auto *freq = qrun->add_option("--freq", qa.freq, "frequency table for phase tracking")->check(CLI::ExistingFile);
    qrun->add_flag("--phases", qa.phases, "track phases with a generated frequency table")->excludes(freq);
    qrun->add_option("--measure", qa.measure, "units to measure, in order")->delimiter(',');
    qrun->add_option("--seed", qa.seed, "seed for measurement and generated tables")->capture_default_str();

    EcArgs ea;
    pqca_ec_options_default(&ea.o);
    auto *ec = app.add_subcommand("ec-sim", "Monte Carlo of block voting with scrambling");
    ec->add_option("--epsilon", ea.o.epsilon, "error rate per copy per cycle")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    ec->add_option("--theta", ea.o.theta, "error rate per copy per vote")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    ec->add_option("--copies", ea.o.copies, "copies per block")->check(CLI::PositiveNumber)->capture_default_str();
    ec->add_option("--votes", ea.o.votes, "votes per round")->check(CLI::NonNegativeNumber)->capture_default_str();
    ec->add_option("--rounds", ea.o.rounds, "rounds")->check(CLI::PositiveNumber)->capture_default_str();
    ec->add_option("--trials", ea.o.trials, "independent trials")->check(CLI::PositiveNumber)->capture_default_str();
    ec->add_option("--seed", ea.o.seed, "random seed")->capture_default_str();
    ec->add_option("--bits", ea.bits, "bits in the computer, for redundancy sizing")->capture_default_str();
    ec->add_option("--cycles", ea.cycles, "cycles per computation")->capture_default_str();
    ec->add_option("--budget", ea.budget, "tolerated expected bit failures")->capture_default_str();

    std::string params;
    auto *analyze = app.add_subcommand("analyze", "Operating window from physical parameters");
    analyze->add_option("params", params, "key=value parameter file")->required()->check(CLI::ExistingFile);

    SynthArgs sa;
    auto *synth = app.add_subcommand("synth", "Synthesize a unitary into pulses");
    synth->add_option("--unitary", sa.unitary, "unitary file")->required()->check(CLI::ExistingFile);
    auto *sp = synth->add_option("--polymer", sa.polymer, "polymer file")->check(CLI::ExistingFile);
    synth->add_option("--units", sa.units, "use an ABC polymer of this many units")->excludes(sp);
    synth->add_option("-o,--output", sa.output, "write the pulse sequence here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*compile) {
            cmd_compile(ca);
        } else if (*run) {
            cmd_run(ra);
        } else if (*qrun) {
            cmd_qrun(qa);
        } else if (*ec) {
            cmd_ecsim(ea);
        } else if (*analyze) {
            cmd_analyze(params);
        } else if (*synth) {
            if (sa.polymer.empty() && sa.units == 0) {
                throw Failure{1, "synth needs --polymer or --units"};
            }
            cmd_synth(sa);
        }
    } catch (const Failure &f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    }
    return 0;
}
