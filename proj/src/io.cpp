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

#include "pqca/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pqca/error.hpp"

namespace pqca {

namespace detail {

std::vector<std::string> split_ws(const std::string &line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

std::string strip_comment(const std::string &line) {
    auto k = line.find('#');
    return k == std::string::npos ? line : line.substr(0, k);
}

void parse_fail(size_t line, const std::string &what) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

double parse_double(const std::string &s, size_t line) {
    double v = 0;
    auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size() || !std::isfinite(v)) {
        parse_fail(line, "bad number '" + s + "'");
    }
    return v;
}

long parse_long(const std::string &s, size_t line) {
    long v = 0;
    auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size()) {
        parse_fail(line, "bad integer '" + s + "'");
    }
    return v;
}

}  // namespace detail

using namespace detail;

std::string format_double(double v) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, r.ptr);
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

template <typename F>
void for_lines(const std::string &text, F &&f) {
    std::istringstream in(text);
    std::string line;
    size_t no = 0;
    while (std::getline(in, line)) {
        no++;
        f(line, no);
    }
}

// Splits "key=value"; returns false when there is no '='.
bool kv(const std::string &tok, std::string &k, std::string &v) {
    auto e = tok.find('=');
    if (e == std::string::npos) {
        return false;
    }
    k = tok.substr(0, e);
    v = tok.substr(e + 1);
    return true;
}

std::pair<int, int> parse_transition(const std::string &v, size_t line) {
    auto c = v.find(':');
    if (c == std::string::npos) {
        parse_fail(line, "transition must look like a:b");
    }
    return {(int)parse_long(v.substr(0, c), line), (int)parse_long(v.substr(c + 1), line)};
}

}  // namespace

Polymer parse_polymer(const std::string &text) {
    std::string pattern;
    long length = -1;
    std::map<char, Species> decl;
    size_t header_line = 0;
    for_lines(text, [&](const std::string &raw, size_t no) {
        auto toks = split_ws(strip_comment(raw));
        if (toks.empty()) {
            return;
        }
        if (toks[0] == "species") {
            if (toks.size() < 2 || toks[1].size() != 1) {
                parse_fail(no, "species line needs a one-letter id");
            }
            Species s{toks[1][0], 2, std::nullopt};
            for (size_t i = 2; i < toks.size(); i++) {
                std::string k, v;
                if (!kv(toks[i], k, v)) {
                    parse_fail(no, "expected key=value, got '" + toks[i] + "'");
                }
                if (k == "states") {
                    s.num_states = (int)parse_long(v, no);
                } else if (k == "decay") {
                    auto arrow = v.find("->");
                    if (arrow == std::string::npos) {
                        parse_fail(no, "decay must look like 2->0");
                    }
                    s.fast_decay = FastDecay{(int)parse_long(v.substr(0, arrow), no),
                                             (int)parse_long(v.substr(arrow + 2), no)};
                } else {
                    parse_fail(no, "unknown species key '" + k + "'");
                }
            }
            decl[s.id] = s;
            return;
        }
        for (const auto &t : toks) {
            std::string k, v;
            if (!kv(t, k, v)) {
                parse_fail(no, "expected key=value, got '" + t + "'");
            }
            if (k == "pattern") {
                pattern = v;
            } else if (k == "length") {
                length = parse_long(v, no);
            } else {
                parse_fail(no, "unknown polymer key '" + k + "'");
            }
        }
        header_line = no;
    });
    if (pattern.empty() || length < 0) {
        parse_fail(header_line, "polymer needs pattern= and length=");
    }
    std::vector<Species> species;
    for (char c : pattern) {
        auto it = decl.find(c);
        species.push_back(it == decl.end() ? Species{c, 2, std::nullopt} : it->second);
    }
    for (auto &[id, s] : decl) {
        if (pattern.find(id) == std::string::npos) {
            throw Error(ErrorCode::UnknownSpecies, std::string("declared species '") + id + "' not in pattern");
        }
    }
    return Polymer(species, (size_t)length);
}

std::string serialize_polymer(const Polymer &p) {
    std::string out = "pattern=";
    for (const auto &s : p.pattern()) {
        out += s.id;
    }
    out += " length=" + std::to_string(p.length()) + "\n";
    for (const auto &s : p.pattern()) {
        out += std::string("species ") + s.id + " states=" + std::to_string(s.num_states);
        if (s.fast_decay) {
            out += " decay=" + std::to_string(s.fast_decay->pump_state) + "->" +
                   std::to_string(s.fast_decay->ground_state);
        }
        out += "\n";
    }
    return out;
}

PulseSequence parse_sequence(const std::string &text) {
    PulseSequence seq;
    for_lines(text, [&](const std::string &raw, size_t no) {
        if (raw.rfind("# meta:", 0) == 0) {
            std::string m = raw.substr(7);
            if (!m.empty() && m[0] == ' ') {
                m.erase(0, 1);
            }
            seq.metadata += (seq.metadata.empty() ? "" : "\n") + m;
            return;
        }
        auto toks = split_ws(strip_comment(raw));
        if (toks.empty()) {
            return;
        }
        const std::string &op = toks[0];
        if (op == "CYCLE") {
            if (toks.size() != 1) {
                parse_fail(no, "CYCLE takes no arguments");
            }
            if (!seq.cycle_marks.empty() && seq.cycle_marks.back() == seq.pulses.size()) {
                parse_fail(no, "repeated CYCLE mark");
            }
            seq.cycle_marks.push_back(seq.pulses.size());
            return;
        }
        Pulse p;
        size_t first = 2;
        if (op == "WAIT") {
            p = Pulse::idle(0);
            first = 1;
        } else if (op == "PI" || op == "ROT" || op == "PUMP") {
            if (toks.size() < 2 || toks[1].size() != 1) {
                parse_fail(no, op + " needs a one-letter species");
            }
            p.species = toks[1][0];
            if (op == "PUMP") {
                p.kind = PulseKind::DecayPump;
                p.a = 1;
                p.b = 2;
            }
        } else {
            parse_fail(no, "unknown pulse kind '" + op + "'");
        }
        bool has_lr = false, has_end = false, has_n = false, has_area = false;
        int lr_seen = 0;
        for (size_t i = first; i < toks.size(); i++) {
            std::string k, v;
            if (!kv(toks[i], k, v)) {
                parse_fail(no, "expected key=value, got '" + toks[i] + "'");
            }
            if (op == "WAIT" && k != "dur") {
                parse_fail(no, "WAIT only takes dur=");
            }
            if (k == "L") {
                p.left = (int)parse_long(v, no);
                has_lr = true;
                lr_seen |= 1;
            } else if (k == "R") {
                p.right = (int)parse_long(v, no);
                has_lr = true;
                lr_seen |= 2;
            } else if (k == "END") {
                if (v != "left" && v != "right") {
                    parse_fail(no, "END must be left or right");
                }
                p.end = true;
                p.side = v == "left" ? Side::Left : Side::Right;
                has_end = true;
            } else if (k == "N") {
                p.neighbor = (int)parse_long(v, no);
                has_n = true;
            } else if (k == "T") {
                auto [a, b] = parse_transition(v, no);
                p.a = a;
                p.b = b;
            } else if (k == "area") {
                p.area = parse_double(v, no);
                has_area = true;
            } else if (k == "phase") {
                p.phase = parse_double(v, no);
            } else if (k == "dur") {
                p.duration = parse_double(v, no);
            } else {
                parse_fail(no, "unknown pulse key '" + k + "'");
            }
        }
        if (op != "WAIT") {
            if (has_lr && has_end) {
                parse_fail(no, "pulse cannot have both L/R and END");
            }
            if (has_end != has_n) {
                parse_fail(no, "END and N go together");
            }
            if (!has_end && lr_seen != 3) {
                parse_fail(no, "interior pulse needs L= and R=");
            }
            if (op == "ROT" && !has_area) {
                parse_fail(no, "ROT needs area=");
            }
            if (op != "ROT" && has_area) {
                parse_fail(no, "area= only allowed on ROT");
            }
            if (p.a > p.b && p.kind == PulseKind::Coherent) {
                std::swap(p.a, p.b);
            }
        }
        seq.pulses.push_back(p);
    });
    return seq;
}

std::string serialize_pulse(const Pulse &p) {
    if (p.kind == PulseKind::Idle) {
        return "WAIT dur=" + format_double(p.duration);
    }
    std::string out;
    bool rot = p.kind == PulseKind::Coherent && p.area != kPi;
    if (p.kind == PulseKind::DecayPump) {
        out = "PUMP ";
    } else {
        out = rot ? "ROT " : "PI ";
    }
    out += p.species;
    if (p.end) {
        out += std::string(" END=") + (p.side == Side::Left ? "left" : "right") + " N=" + std::to_string(p.neighbor);
    } else {
        out += " L=" + std::to_string(p.left) + " R=" + std::to_string(p.right);
    }
    out += " T=" + std::to_string(p.a) + ":" + std::to_string(p.b);
    if (rot) {
        out += " area=" + format_double(p.area);
    }
    if (p.phase != 0) {
        out += " phase=" + format_double(p.phase);
    }
    if (p.duration != 0) {
        out += " dur=" + format_double(p.duration);
    }
    return out;
}

std::string serialize_sequence(const PulseSequence &seq) {
    std::string out;
    if (!seq.metadata.empty()) {
        std::istringstream in(seq.metadata);
        std::string line;
        while (std::getline(in, line)) {
            out += "# meta: " + line + "\n";
        }
    }
    size_t m = 0;
    for (size_t i = 0; i <= seq.pulses.size(); i++) {
        while (m < seq.cycle_marks.size() && seq.cycle_marks[m] == i) {
            out += "CYCLE\n";
            m++;
        }
        if (i < seq.pulses.size()) {
            out += serialize_pulse(seq.pulses[i]) + "\n";
        }
    }
    return out;
}

FrequencyTable parse_frequency_table(const std::string &text) {
    FrequencyTable t;
    for_lines(text, [&](const std::string &raw, size_t no) {
        auto toks = split_ws(strip_comment(raw));
        if (toks.empty()) {
            return;
        }
        if (toks.size() < 3 || toks[1].size() != 1) {
            parse_fail(no, "frequency line needs kind, species and value");
        }
        char s = toks[1][0];
        double value = parse_double(toks.back(), no);
        int l = -1, r = -1, n = -1;
        Side side = Side::Left;
        bool has_side = false;
        Transition tr{0, 1};
        for (size_t i = 2; i + 1 < toks.size(); i++) {
            std::string k, v;
            if (!kv(toks[i], k, v)) {
                parse_fail(no, "expected key=value, got '" + toks[i] + "'");
            }
            if (k == "L") {
                l = (int)parse_long(v, no);
            } else if (k == "R") {
                r = (int)parse_long(v, no);
            } else if (k == "N") {
                n = (int)parse_long(v, no);
            } else if (k == "END") {
                side = v == "right" ? Side::Right : Side::Left;
                has_side = v == "left" || v == "right";
                if (!has_side) {
                    parse_fail(no, "END must be left or right");
                }
            } else if (k == "T") {
                auto [a, b] = parse_transition(v, no);
                tr = a < b ? Transition{a, b} : Transition{b, a};
            } else {
                parse_fail(no, "unknown key '" + k + "'");
            }
        }
        if (toks[0] == "base") {
            t.set_base(s, tr, value);
        } else if (toks[0] == "shift") {
            if (l < 0 || r < 0) {
                parse_fail(no, "shift needs L= and R=");
            }
            t.set_shift(s, l, r, tr, value);
        } else if (toks[0] == "end") {
            if (!has_side || n < 0) {
                parse_fail(no, "end needs END= and N=");
            }
            t.set_end_shift(s, side, n, tr, value);
        } else {
            parse_fail(no, "unknown frequency kind '" + toks[0] + "'");
        }
    });
    return t;
}

std::string serialize_frequency_table(const FrequencyTable &t) {
    std::string out;
    auto tr = [](Transition x) { return " T=" + std::to_string(x.a) + ":" + std::to_string(x.b); };
    for (const auto &[k, v] : t.base_map()) {
        out += std::string("base ") + k.first + tr(k.second) + " " + format_double(v) + "\n";
    }
    for (const auto &[k, v] : t.shift_map()) {
        out += std::string("shift ") + std::get<0>(k) + " L=" + std::to_string(std::get<1>(k)) +
               " R=" + std::to_string(std::get<2>(k)) + tr(std::get<3>(k)) + " " + format_double(v) + "\n";
    }
    for (const auto &[k, v] : t.end_map()) {
        out += std::string("end ") + std::get<0>(k) + " END=" + (std::get<1>(k) == Side::Left ? "left" : "right") +
               " N=" + std::to_string(std::get<2>(k)) + tr(std::get<3>(k)) + " " + format_double(v) + "\n";
    }
    return out;
}

std::map<std::string, std::string> parse_key_values(const std::string &text) {
    std::map<std::string, std::string> out;
    for_lines(text, [&](const std::string &raw, size_t no) {
        for (const auto &t : split_ws(strip_comment(raw))) {
            std::string k, v;
            if (!kv(t, k, v) || k.empty()) {
                parse_fail(no, "expected key=value, got '" + t + "'");
            }
            if (out.count(k)) {
                parse_fail(no, "duplicate key '" + k + "'");
            }
            out[k] = v;
        }
    });
    return out;
}

}  // namespace pqca
