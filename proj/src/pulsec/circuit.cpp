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

// Circuits, section layouts and the gate router.
//
// Every gate is lowered as G + F + reverse(G). G is a data-independent
// permutation of positions: stream shifts plus Fredkins whose control is a
// known constant 1 (a shepherd). F is the one Fredkin whose control is data.
// Because G moves positions the same way whatever the data is, reverse(G)
// puts everything back after F has changed the operand values.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "pqca/error.hpp"
#include "pqca/io.hpp"
#include "pqca/pulsec.hpp"
#include "tracker.hpp"

namespace pqca::pulsec {

using detail::floor_div;
using detail::mod3;
using detail::slot_of_species;
using detail::slot_offset;
using detail::Token;
using detail::Tracker;
using detail::Verdict;

// ---------------------------------------------------------------------------
// Circuits.

void CircuitDesign::validate() const {
    if (num_wires < 1 || num_wires > 64) {
        throw Error(ErrorCode::InvalidArgument, "wire count must be in 1..64");
    }
    for (size_t i = 0; i < gates.size(); i++) {
        const Gate &g = gates[i];
        for (int w : {g.control, g.t1, g.t2}) {
            if (w < 0 || w >= num_wires) {
                throw Error(ErrorCode::InvalidArgument,
                            "gate " + std::to_string(i) + " uses wire " + std::to_string(w) + " out of range");
            }
        }
        if (g.control == g.t1 || g.control == g.t2 || g.t1 == g.t2) {
            throw Error(ErrorCode::InvalidArgument, "gate " + std::to_string(i) + " repeats a wire");
        }
    }
}

uint64_t CircuitDesign::evaluate(uint64_t x) const {
    for (const Gate &g : gates) {
        if ((x >> g.control) & 1) {
            uint64_t a = (x >> g.t1) & 1, b = (x >> g.t2) & 1;
            if (a != b) {
                x ^= (1ull << g.t1) | (1ull << g.t2);
            }
        }
    }
    return x;
}

namespace {

int wire_ref(const CircuitDesign &c, const std::string &tok, size_t line) {
    for (size_t i = 0; i < c.wire_names.size(); i++) {
        if (c.wire_names[i] == tok) {
            return (int)i;
        }
    }
    long v = pqca::detail::parse_long(tok, line);
    if (v < 0 || v >= c.num_wires) {
        pqca::detail::parse_fail(line, "wire '" + tok + "' out of range");
    }
    return (int)v;
}

}  // namespace

// Macros, each a single Fredkin with the stated constant wires:
//   and a b z   (z=0)        fredkin a b z   z := a AND b
//   or  a b k   (k=1)        fredkin a b k   b := a OR b
//   not a x y   (x=0, y=1)   fredkin a x y   y := NOT a, x := a
//   copy a x y  (x=0, y=1)   fredkin a x y   x := a, y := NOT a
CircuitDesign parse_circuit(const std::string &text) {
    CircuitDesign c;
    bool have_wires = false;
    std::istringstream in(text);
    std::string raw;
    size_t line = 0;
    while (std::getline(in, raw)) {
        line++;
        auto tok = pqca::detail::split_ws(pqca::detail::strip_comment(raw));
        if (tok.empty()) {
            continue;
        }
        const std::string &op = tok[0];
        if (op == "wires") {
            if (have_wires || tok.size() != 2) {
                pqca::detail::parse_fail(line, "expected a single 'wires N' header");
            }
            long n = pqca::detail::parse_long(tok[1], line);
            if (n < 1 || n > 64) {
                pqca::detail::parse_fail(line, "wire count must be in 1..64");
            }
            c.num_wires = (int)n;
            for (int i = 0; i < c.num_wires; i++) {
                c.wire_names.push_back("w" + std::to_string(i));
            }
            have_wires = true;
            continue;
        }
        if (!have_wires) {
            pqca::detail::parse_fail(line, "'wires N' must come first");
        }
        if (op == "names") {
            if ((int)tok.size() != c.num_wires + 1) {
                pqca::detail::parse_fail(line, "names needs exactly one name per wire");
            }
            c.wire_names.assign(tok.begin() + 1, tok.end());
            continue;
        }
        if (op == "fredkin" || op == "and" || op == "or" || op == "not" || op == "copy") {
            if (tok.size() != 4) {
                pqca::detail::parse_fail(line, op + " needs three wires");
            }
            Gate g{wire_ref(c, tok[1], line), wire_ref(c, tok[2], line), wire_ref(c, tok[3], line)};
            if (g.control == g.t1 || g.control == g.t2 || g.t1 == g.t2) {
                pqca::detail::parse_fail(line, "gate repeats a wire");
            }
            c.gates.push_back(g);
            continue;
        }
        pqca::detail::parse_fail(line, "unknown statement '" + op + "'");
    }
    if (!have_wires) {
        throw Error(ErrorCode::Parse, "circuit has no 'wires N' header");
    }
    return c;
}

std::string serialize_circuit(const CircuitDesign &c) {
    std::ostringstream out;
    out << "wires " << c.num_wires << "\n";
    bool named = false;
    for (int i = 0; i < (int)c.wire_names.size(); i++) {
        named = named || c.wire_names[i] != "w" + std::to_string(i);
    }
    if (named) {
        out << "names";
        for (const auto &n : c.wire_names) {
            out << " " << n;
        }
        out << "\n";
    }
    for (const Gate &g : c.gates) {
        out << "fredkin " << g.control << " " << g.t1 << " " << g.t2 << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Layouts.

BitLocation SectionLayout::locate(int section, int wire) const {
    if (section < 0 || section >= num_sections || wire < 0 || wire >= num_wires) {
        throw Error(ErrorCode::LayoutMismatch,
                    "no wire " + std::to_string(wire) + " in section " + std::to_string(section));
    }
    BitLocation b = placement[wire];
    b.triple += origin + section * stride;
    return b;
}

long SectionLayout::required_triples() const {
    return origin + num_sections * stride + 1;
}

SectionLayout make_shepherd_layout(int n, int sections, long origin) {
    if (n < 1 || sections < 1) {
        throw Error(ErrorCode::InvalidArgument, "layout needs at least one wire and one section");
    }
    SectionLayout l;
    l.method = Method::Shepherd;
    l.num_wires = n;
    l.num_sections = sections;
    // Data on the first N A's, the shepherd pair right after them.
    for (int w = 0; w < n; w++) {
        l.placement.push_back({w, 0});
    }
    l.shepherds = {{n, 1}, {n, 2}};
    l.section_length = std::max(2L * n, (long)n + 1);
    l.stride = 2 * l.section_length;
    l.origin = origin < 0 ? l.section_length : origin;
    return l;
}

SectionLayout make_sparse_layout(int n, int sections, long origin) {
    if (n < 1 || sections < 1) {
        throw Error(ErrorCode::InvalidArgument, "layout needs at least one wire and one section");
    }
    SectionLayout l;
    l.method = Method::SparseInterval;
    l.num_wires = n;
    l.num_sections = sections;
    int m = (n + 2) / 3;
    l.interval = m;
    long maxpos = 0;
    for (int i = 0; i < n; i++) {
        BitLocation b;
        if (i < m) {
            b = {(long)i * m, 0};
        } else if (i < 2 * m) {
            b = {(long)(i - m) * (m + 1), 1};
        } else {
            b = {(long)(i - 2 * m) * (m + 2), 2};
        }
        maxpos = std::max(maxpos, b.triple);
        l.placement.push_back(b);
    }
    // The shepherd pair sits more than twice the data span away, so while a
    // shepherd is lined up with one data bit no other data bit of its stream
    // can land in a window holding data.
    long s = 2 * maxpos + 2;
    l.shepherds = {{s, 1}, {s, 2}};
    l.section_length = s + 1;
    l.stride = 2 * l.section_length;
    l.origin = origin < 0 ? l.section_length : origin;
    return l;
}

SectionLayout parse_layout(const std::string &text) {
    auto kv = parse_key_values(text);
    for (const auto &[k, v] : kv) {
        if (k != "method" && k != "N" && k != "sections" && k != "origin") {
            throw Error(ErrorCode::Parse, "unknown layout key '" + k + "'");
        }
    }
    if (!kv.count("method") || !kv.count("N")) {
        throw Error(ErrorCode::Parse, "layout needs method= and N=");
    }
    long n = pqca::detail::parse_long(kv["N"], 1);
    long s = kv.count("sections") ? pqca::detail::parse_long(kv["sections"], 1) : 1;
    long o = kv.count("origin") ? pqca::detail::parse_long(kv["origin"], 1) : -1;
    if (n < 1 || n > 64 || s < 1) {
        throw Error(ErrorCode::Parse, "layout N must be in 1..64 and sections >= 1");
    }
    if (kv["method"] == "shepherd") {
        return make_shepherd_layout((int)n, (int)s, o);
    }
    if (kv["method"] == "sparse") {
        return make_sparse_layout((int)n, (int)s, o);
    }
    throw Error(ErrorCode::Parse, "unknown layout method '" + kv["method"] + "'");
}

std::string serialize_layout(const SectionLayout &l) {
    std::ostringstream out;
    out << "method=" << (l.method == Method::Shepherd ? "shepherd" : "sparse") << " N=" << l.num_wires
        << " sections=" << l.num_sections << " origin=" << l.origin << "\n";
    return out.str();
}

namespace {

void require_room(const Polymer &p, const SectionLayout &l) {
    require_abc(p);
    if ((long)p.length() < 3 * l.required_triples()) {
        throw Error(ErrorCode::SectionOverflow, "layout needs " + std::to_string(l.required_triples()) +
                                                    " triples, polymer has " + std::to_string(p.length() / 3));
    }
}

size_t unit_index(const BitLocation &b) {
    return (size_t)(3 * b.triple + b.species);
}

}  // namespace

Configuration place_sections(const Polymer &p, const SectionLayout &l, const std::vector<uint64_t> &data) {
    require_room(p, l);
    if ((int)data.size() != l.num_sections) {
        throw Error(ErrorCode::LayoutMismatch, "expected one data word per section");
    }
    Configuration c = zero_config(p);
    for (int q = 0; q < l.num_sections; q++) {
        for (int w = 0; w < l.num_wires; w++) {
            c[unit_index(l.locate(q, w))] = (data[q] >> w) & 1;
        }
        for (auto s : l.shepherds) {
            s.triple += l.origin + q * l.stride;
            c[unit_index(s)] = 1;
        }
    }
    return c;
}

uint64_t read_section(const Configuration &c, const SectionLayout &l, int section) {
    uint64_t v = 0;
    for (int w = 0; w < l.num_wires; w++) {
        size_t u = unit_index(l.locate(section, w));
        if (u >= c.size()) {
            throw Error(ErrorCode::LayoutMismatch, "configuration too short for layout");
        }
        v |= (uint64_t)(c[u] & 1) << w;
    }
    return v;
}

// ---------------------------------------------------------------------------
// Router.

namespace {

constexpr int kCandidates = 8;

int shepherd_role(int stream) {
    return -1 - stream;
}

Tracker make_tracker(const Polymer &p, const SectionLayout &l) {
    Tracker t(p, 0, (long)p.length() - 4);
    for (int q = 0; q < l.num_sections; q++) {
        long base = l.origin + q * l.stride;
        for (int w = 0; w < l.num_wires; w++) {
            const auto &b = l.placement[w];
            t.add(Token{b.species, base + b.triple, false, q, w});
        }
        for (const auto &s : l.shepherds) {
            t.add(Token{s.species, base + s.triple, true, q, shepherd_role(s.species)});
        }
    }
    return t;
}

// Token of group 0 with the given role.
const Token &find(const Tracker &t, int role, int group = 0) {
    for (const auto &k : t.tokens()) {
        if (k.role == role && k.group == group) {
            return k;
        }
    }
    throw Error(ErrorCode::InvariantViolation, "router lost track of a token");
}

bool has_shepherd(const Tracker &t, int stream) {
    for (const auto &k : t.tokens()) {
        if (k.one && k.role == shepherd_role(stream)) {
            return true;
        }
    }
    return false;
}

// Species-fixed offsets putting token x of stream sx and token z of stream sz
// into window (w, T), for the candidate T values nearest the current frame.
struct Placed {
    int w;
    std::array<long, 3> d;
    bool operator==(const Placed &o) const {
        return w == o.w && d == o.d;
    }
};

std::vector<Placed> pair_candidates(const Tracker &t, int sx, long hx, int sz, long hz) {
    auto cur = t.offsets();
    int sy = 3 - sx - sz;
    struct Cand {
        long cost;
        Placed at;
    };
    std::vector<Cand> all;
    for (int w = 0; w < 3; w++) {
        long ox = slot_offset(w, slot_of_species(w, sx));
        long oz = slot_offset(w, slot_of_species(w, sz));
        // Offsets are linear in T, so scan T around the value that leaves
        // stream x where it is.
        long t0 = hx + cur[sx] - ox;
        long span = std::labs(hz + cur[sz] - oz - t0) + 8;
        for (long T = t0 - span; T <= t0 + span; T++) {
            std::array<long, 3> d{};
            d[sx] = T + ox - hx;
            d[sz] = T + oz - hz;
            d[sy] = -d[sx] - d[sz];
            long cost = 0;
            for (int s = 0; s < 3; s++) {
                cost += std::labs(d[s] - cur[s]);
            }
            all.push_back({cost, {w, d}});
        }
    }
    std::stable_sort(all.begin(), all.end(), [](const Cand &a, const Cand &b) { return a.cost < b.cost; });
    std::vector<Placed> out;
    for (const auto &c : all) {
        if (std::find(out.begin(), out.end(), c.at) == out.end()) {
            out.push_back(c.at);
        }
        if ((int)out.size() == kCandidates) {
            break;
        }
    }
    return out;
}

// Window (w, T) and offsets that put the three homes into one window.
struct Triple {
    int w;
    std::array<long, 3> d;
};

Triple align_three(const std::array<long, 3> &home) {
    long sum = home[0] + home[1] + home[2];
    int w = (int)mod3(sum);
    long T = floor_div(sum - w, 3);
    Triple r{w, {}};
    for (int s = 0; s < 3; s++) {
        r.d[s] = T + slot_offset(w, slot_of_species(w, s)) - home[s];
    }
    return r;
}

// Stream hop: token `role` moves from stream `from` to `to`; the shepherd on
// the third stream controls the window.
struct Hop {
    int role;
    int from;
    int to;
};

detail::Intent hop_intent(int role, int shepherd_stream) {
    return [=](const Token &c, const Token *a, const Token *b) {
        if (!c.one || c.role != shepherd_role(shepherd_stream) || (a && b)) {
            return Verdict::Reject;
        }
        const Token *x = a ? a : b;
        if (x->one || x->role != role || x->group != c.group) {
            return Verdict::Reject;
        }
        return Verdict::Swap;
    };
}

// Moves token `role` (in every group) to stream h.to; all candidates in
// order. Calls `next` on success; returns true when it succeeds.
template <class Next>
bool try_hop(const Tracker &t, const PulseSequence &g, const Hop &h, Next &&next) {
    int z = 3 - h.from - h.to;
    const Token &x = find(t, h.role);
    if (x.stream != h.from) {
        throw Error(ErrorCode::InvariantViolation, "hop source mismatch");
    }
    const Token &s = find(t, shepherd_role(z));
    for (const auto &c : pair_candidates(t, h.from, x.home, z, s.home)) {
        Tracker u = t;
        PulseSequence seq = g;
        if (!u.shift_to(c.d, &seq)) {
            continue;
        }
        if (!u.fredkin(c.w, slot_of_species(c.w, z), hop_intent(h.role, z), &seq)) {
            continue;
        }
        bool moved = true;
        for (const auto &k : u.tokens()) {
            moved = moved && (k.role != h.role || k.stream == h.to);
        }
        if (moved && next(u, seq)) {
            return true;
        }
    }
    return false;
}

struct GateRoute {
    PulseSequence gather;
    PulseSequence fredkin;
};

class Router {
   public:
    Router(const Polymer &p, const SectionLayout &l) : l_(l), t_(make_tracker(p, l)) {
    }

    GateRoute route(const Gate &g) {
        const int roles[3] = {g.control, g.t1, g.t2};
        std::vector<std::pair<int, std::array<int, 3>>> plans;
        std::array<int, 3> assign{0, 1, 2};
        do {
            int cost = 0;
            for (int i = 0; i < 3; i++) {
                int from = find(t_, roles[i]).stream;
                cost += from == assign[i] ? 0 : (from + assign[i] == 3 ? 2 : 1);
            }
            plans.push_back({cost, assign});
        } while (std::next_permutation(assign.begin(), assign.end()));
        std::stable_sort(plans.begin(), plans.end(), [](auto &a, auto &b) { return a.first < b.first; });

        for (const auto &[cost, as] : plans) {
            std::vector<std::vector<Hop>> chains;
            bool ok = true;
            for (int i = 0; i < 3; i++) {
                int from = find(t_, roles[i]).stream;
                std::vector<Hop> chain;
                if (from != as[i]) {
                    if (from + as[i] == 3) {
                        chain = {{roles[i], from, 0}, {roles[i], 0, as[i]}};  // B <-> C goes through A
                    } else {
                        chain = {{roles[i], from, as[i]}};
                    }
                    int z = 3 - chain.front().from - chain.front().to;
                    int z2 = 3 - chain.back().from - chain.back().to;
                    ok = ok && has_shepherd(t_, z) && has_shepherd(t_, z2);
                }
                if (!chain.empty()) {
                    chains.push_back(chain);
                }
            }
            if (!ok) {
                continue;
            }
            std::sort(chains.begin(), chains.end(),
                      [](const auto &a, const auto &b) { return a.front().role < b.front().role; });
            do {
                std::vector<Hop> order;
                for (const auto &c : chains) {
                    order.insert(order.end(), c.begin(), c.end());
                }
                GateRoute out;
                if (search(t_, PulseSequence{}, order, 0, g, out)) {
                    return out;
                }
            } while (std::next_permutation(chains.begin(), chains.end(), [](const auto &a, const auto &b) {
                return a.front().role < b.front().role;
            }));
        }
        throw Error(ErrorCode::SectionOverflow, "no collision-free route for fredkin " + std::to_string(g.control) +
                                                    " " + std::to_string(g.t1) + " " + std::to_string(g.t2));
    }

    const Tracker &tracker() const {
        return t_;
    }
    Tracker &tracker() {
        return t_;
    }

   private:
    bool search(const Tracker &t, const PulseSequence &g, const std::vector<Hop> &hops, size_t i, const Gate &gate,
                GateRoute &out) {
        if (i < hops.size()) {
            return try_hop(t, g, hops[i], [&](const Tracker &u, const PulseSequence &seq) {
                return search(u, seq, hops, i + 1, gate, out);
            });
        }
        std::array<long, 3> home{};
        const int roles[3] = {gate.control, gate.t1, gate.t2};
        for (int r : roles) {
            const Token &k = find(t, r);
            home[k.stream] = k.home;
        }
        Triple a = align_three(home);
        Tracker u = t;
        PulseSequence seq = g;
        if (!u.shift_to(a.d, &seq)) {
            return false;
        }
        int cstream = find(u, gate.control).stream;
        int fired = 0;
        auto intent = [&](const Token &c, const Token *x, const Token *y) {
            if (c.one || c.role != gate.control || !x || !y || x->one || y->one || x->group != c.group ||
                y->group != c.group) {
                return Verdict::Reject;
            }
            bool match = (x->role == gate.t1 && y->role == gate.t2) || (x->role == gate.t2 && y->role == gate.t1);
            if (!match) {
                return Verdict::Reject;
            }
            fired++;
            return Verdict::Keep;
        };
        PulseSequence f;
        if (!u.fredkin(a.w, slot_of_species(a.w, cstream), intent, &f) || fired != l_.num_sections) {
            return false;
        }
        out.gather = std::move(seq);
        out.fredkin = std::move(f);
        return true;
    }

    const SectionLayout &l_;
    Tracker t_;
};

PulseSequence compile_with_router(const Polymer &p, const CircuitDesign &c, const SectionLayout &l) {
    c.validate();
    if (c.num_wires != l.num_wires) {
        throw Error(ErrorCode::LayoutMismatch, "circuit has " + std::to_string(c.num_wires) +
                                                   " wires, layout has " + std::to_string(l.num_wires));
    }
    require_room(p, l);
    Router r(p, l);
    PulseSequence out;
    for (const Gate &g : c.gates) {
        GateRoute route = r.route(g);
        out += route.gather;
        out += route.fredkin;
        out += route.gather.reversed();
        out.mark_cycle();
    }
    return out;
}

}  // namespace

PulseSequence compile_circuit_method1(const Polymer &p, const CircuitDesign &c, const SectionLayout &l) {
    if (l.method != Method::Shepherd) {
        throw Error(ErrorCode::LayoutMismatch, "method 1 needs a shepherd layout");
    }
    return compile_with_router(p, c, l);
}

PulseSequence compile_circuit_method2(const Polymer &p, const CircuitDesign &c, const SectionLayout &l) {
    if (l.method != Method::SparseInterval) {
        throw Error(ErrorCode::LayoutMismatch, "method 2 needs a sparse layout");
    }
    return compile_with_router(p, c, l);
}

PulseSequence compile_circuit(const Polymer &p, const CircuitDesign &c, const SectionLayout &l) {
    return l.method == Method::Shepherd ? compile_circuit_method1(p, c, l) : compile_circuit_method2(p, c, l);
}

// Each selected wire is stashed from A into B by the C shepherd, carried one
// stride along, and dropped into the A slot of the same wire one section over
// by that same shepherd. The last section's bit lands in the free region
// past the final section (or before section 0 for a left transfer).
PulseSequence compile_section_transfer(const Polymer &p, const std::vector<int> &wires, Direction dir,
                                       const SectionLayout &l) {
    if (l.method != Method::Shepherd) {
        throw Error(ErrorCode::LayoutMismatch, "section transfer needs a shepherd layout");
    }
    require_room(p, l);
    std::vector<int> seen;
    for (int w : wires) {
        if (w < 0 || w >= l.num_wires || std::count(seen.begin(), seen.end(), w)) {
            throw Error(ErrorCode::LayoutMismatch, "bad or repeated transfer wire " + std::to_string(w));
        }
        seen.push_back(w);
    }
    long step = dir == Direction::Right ? l.stride : -l.stride;
    if (dir == Direction::Left && l.origin < l.stride) {
        throw Error(ErrorCode::LayoutMismatch, "left transfer needs origin >= stride (a free region before section 0)");
    }
    if (dir == Direction::Right && 3 * (l.origin + l.num_sections * l.stride + l.section_length + 1) > (long)p.length()) {
        throw Error(ErrorCode::SectionOverflow, "right transfer needs a free region after the last section");
    }
    Router r(p, l);
    PulseSequence out;
    for (int w : wires) {
        const Tracker &t = r.tracker();
        Hop stash{w, 0, 1};
        bool done = try_hop(t, out, stash, [&](const Tracker &u0, const PulseSequence &s0) {
            Tracker u = u0;
            PulseSequence seq = s0;
            std::array<long, 3> home{};
            home[1] = find(u, w).home;
            home[2] = find(u, shepherd_role(2)).home;
            home[0] = l.origin + l.placement[w].triple + step;
            Triple a = align_three(home);
            if (!u.shift_to(a.d, &seq)) {
                return false;
            }
            auto land = [&](const Token &c, const Token *x, const Token *y) {
                if (!c.one || c.role != shepherd_role(2) || (x && y)) {
                    return Verdict::Reject;
                }
                const Token *k = x ? x : y;
                return !k->one && k->role == w && k->group == c.group && k->stream == 1 ? Verdict::Swap
                                                                                          : Verdict::Reject;
            };
            if (!u.fredkin(a.w, slot_of_species(a.w, 2), land, &seq)) {
                return false;
            }
            for (const auto &k : u.tokens()) {
                if (!k.one && k.role == w && k.stream != 0) {
                    return false;
                }
            }
            if (!u.shift_to({0, 0, 0}, &seq)) {
                return false;
            }
            for (size_t i = 0; i < u.tokens().size(); i++) {
                const Token &k = u.tokens()[i];
                if (!k.one && k.role == w) {
                    u.set_group((int)i, k.group + (dir == Direction::Right ? 1 : -1));
                }
            }
            r.tracker() = u;
            out = seq;
            return true;
        });
        if (!done) {
            throw Error(ErrorCode::SectionOverflow, "no collision-free transfer for wire " + std::to_string(w));
        }
    }
    return out;
}

}  // namespace pqca::pulsec
