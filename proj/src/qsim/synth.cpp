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

// Unitary synthesis by two-level decomposition.
//
// U^dagger is reduced to a diagonal by Givens rotations of the pulse form
// R(theta, phi); the diagonal is undone with pairs of R(pi, .) rotations.
// The only non-permutation pulse is the end rotation on unit 0 conditioned
// on unit 1 being 0, so every two-level step on labels (j, i) is lowered to
//
//     P, rotation of (|0...0>, |10...0>), P^-1
//
// where P is a product of classical pi pulses that carries label j to
// |0...0>, label i to |10...0>, and every other label to a state with unit 1
// excited (which the end rotation does not touch). P comes from a breadth
// first search over where the labels currently sit.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <unordered_map>

#include "pqca/error.hpp"
#include "pqca/io.hpp"
#include "pqca/qsim.hpp"

namespace pqca::qsim {

Matrix Matrix::identity(size_t k) {
    Matrix m{k, std::vector<cplx>(k * k, cplx(0))};
    for (size_t i = 0; i < k; i++) {
        m(i, i) = 1;
    }
    return m;
}

size_t PrimitiveProgram::rotation_count() const {
    size_t n = 0;
    for (const auto &s : steps) {
        n += s.kind == ProgramStep::Rotation;
    }
    return n;
}

PulseSequence PrimitiveProgram::pulses() const {
    PulseSequence out;
    for (const auto &s : steps) {
        if (s.kind == ProgramStep::Rotation) {
            out.push(s.pulse);
        } else {
            out += s.perm.pulses;
        }
    }
    return out;
}

Matrix haar_random_unitary(size_t k, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXcd z(k, k);
    for (size_t r = 0; r < k; r++) {
        for (size_t c = 0; c < k; c++) {
            z(r, c) = cplx(g(rng), g(rng)) / std::sqrt(2.0);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd rr = qr.matrixQR().triangularView<Eigen::Upper>();
    Matrix out{k, std::vector<cplx>(k * k)};
    for (size_t c = 0; c < k; c++) {
        cplx d = rr(c, c);
        cplx ph = std::abs(d) > 0 ? d / std::abs(d) : cplx(1);
        for (size_t r = 0; r < k; r++) {
            out(r, c) = q(r, c) * ph;
        }
    }
    return out;
}

namespace {

Eigen::MatrixXcd to_eigen(const Matrix &m) {
    Eigen::MatrixXcd e(m.k, m.k);
    for (size_t r = 0; r < m.k; r++) {
        for (size_t c = 0; c < m.k; c++) {
            e(r, c) = m(r, c);
        }
    }
    return e;
}

struct Generator {
    Pulse pulse;
    std::vector<size_t> map;
};

class PermutationSearch {
   public:
    PermutationSearch(const Polymer &p, const QuantumState &ref) : ref_(ref) {
        for (const Pulse &x : addressing_classes(p)) {
            Generator g{x, std::vector<size_t>(ref.dimension())};
            for (size_t i = 0; i < ref.dimension(); i++) {
                g.map[i] = ref.index_of(apply_pulse_classical(p, ref.config_of(i), x));
            }
            gens_.push_back(std::move(g));
        }
        bits_ = 1;
        while ((size_t{1} << bits_) < ref.dimension()) {
            bits_++;
        }
    }

    // Product of pi pulses meeting the goal for labels (j, i). Two stages:
    // bring the pair into place, then move the other labels onto unit-1
    // excited states with pulses that leave u and v alone. Falls back to a
    // joint search if the second stage gets stuck.
    PermutationStep find(const std::vector<size_t> &labels, size_t j, size_t i, size_t u, size_t v) {
        auto key0 = std::make_tuple(labels, j, i);
        auto hit = cache_.find(key0);
        if (hit != cache_.end()) {
            return hit->second;
        }
        size_t k = labels.size();
        size_t st1 = ref_.stride(1);
        auto parked = [&](size_t x) { return (x / st1) % 2 == 1; };
        std::vector<int> all(gens_.size());
        std::vector<int> fixing;
        for (size_t g = 0; g < gens_.size(); g++) {
            all[g] = (int)g;
            if (gens_[g].map[u] == u && gens_[g].map[v] == v) {
                fixing.push_back((int)g);
            }
        }

        std::vector<int> path;
        std::vector<size_t> pair{labels[j], labels[i]};
        bool ok = bfs(pair, all, [&](const std::vector<size_t> &pos) { return pos[0] == u && pos[1] == v; },
                      path);
        std::vector<size_t> others;
        for (size_t m = 0; m < k; m++) {
            if (m != j && m != i) {
                others.push_back(run(path, labels[m]));
            }
        }
        std::vector<int> rest;
        ok = ok && bfs(others, fixing,
                       [&](const std::vector<size_t> &pos) {
                           return std::all_of(pos.begin(), pos.end(), parked);
                       },
                       rest);
        if (ok) {
            path.insert(path.end(), rest.begin(), rest.end());
        } else {
            path.clear();
            ok = bfs(labels, all,
                     [&](const std::vector<size_t> &pos) {
                         for (size_t m = 0; m < k; m++) {
                             bool want = m == j ? pos[m] == u : m == i ? pos[m] == v : parked(pos[m]);
                             if (!want) {
                                 return false;
                             }
                         }
                         return true;
                     },
                     path);
        }
        if (!ok) {
            throw Error(ErrorCode::InvalidArgument, "no pi-pulse permutation brings the label pair into place");
        }
        PermutationStep step;
        step.map.resize(ref_.dimension());
        step.phase.assign(ref_.dimension(), cplx(1));
        for (size_t x = 0; x < step.map.size(); x++) {
            step.map[x] = x;
        }
        for (int gi : path) {
            const Generator &g = gens_[gi];
            step.pulses.push(g.pulse);
            for (size_t x = 0; x < step.map.size(); x++) {
                size_t y = step.map[x];
                if (g.map[y] != y) {
                    step.phase[x] *= cplx(0, -1);
                }
                step.map[x] = g.map[y];
            }
        }
        cache_[key0] = step;
        return step;
    }

   private:
    size_t run(const std::vector<int> &path, size_t x) const {
        for (int g : path) {
            x = gens_[g].map[x];
        }
        return x;
    }

    // Breadth-first search over the positions of a tuple of basis states.
    template <typename Goal>
    bool bfs(const std::vector<size_t> &start, const std::vector<int> &gens, Goal goal, std::vector<int> &path) {
        size_t k = start.size();
        path.clear();
        if (goal(start)) {
            return true;
        }
        uint64_t mask = (uint64_t{1} << bits_) - 1;
        auto pack = [&](const std::vector<size_t> &pos) {
            uint64_t key = 0;
            for (size_t m = 0; m < k; m++) {
                key |= (uint64_t)pos[m] << (bits_ * m);
            }
            return key;
        };
        std::unordered_map<uint64_t, std::pair<uint64_t, int>> parent;
        std::deque<uint64_t> q;
        uint64_t s0 = pack(start);
        parent[s0] = {s0, -1};
        q.push_back(s0);
        std::vector<size_t> pos(k), nxt(k);
        while (!q.empty()) {
            uint64_t cur = q.front();
            q.pop_front();
            for (size_t m = 0; m < k; m++) {
                pos[m] = (size_t)((cur >> (bits_ * m)) & mask);
            }
            for (int g : gens) {
                for (size_t m = 0; m < k; m++) {
                    nxt[m] = gens_[g].map[pos[m]];
                }
                uint64_t key = pack(nxt);
                if (!parent.emplace(key, std::make_pair(cur, g)).second) {
                    continue;
                }
                if (goal(nxt)) {
                    for (uint64_t at = key; parent[at].second >= 0; at = parent[at].first) {
                        path.push_back(parent[at].second);
                    }
                    std::reverse(path.begin(), path.end());
                    return true;
                }
                q.push_back(key);
            }
        }
        return false;
    }

    const QuantumState &ref_;
    std::vector<Generator> gens_;
    size_t bits_;
    std::map<std::tuple<std::vector<size_t>, size_t, size_t>, PermutationStep> cache_;
};

// Reversed pulses with phase pi: R(pi, pi) R(pi, 0) is the identity on
// each pair, where R(pi, 0) twice would be -1.
PermutationStep inverse(const PermutationStep &s) {
    PermutationStep r;
    r.map.resize(s.map.size());
    r.phase.resize(s.map.size());
    for (size_t x = 0; x < s.map.size(); x++) {
        r.map[s.map[x]] = x;
        r.phase[s.map[x]] = std::conj(s.phase[x]);
    }
    r.pulses = s.pulses.reversed();
    for (Pulse &x : r.pulses.pulses) {
        x.phase = kPi;
    }
    return r;
}

// Rotation acting on rows (j, i) of a matrix, in place.
void rotate_rows(Eigen::MatrixXcd &V, size_t j, size_t i, double theta, double phi) {
    const cplx I(0, 1);
    double c = std::cos(theta / 2), s = std::sin(theta / 2);
    cplx up = -I * std::exp(-I * phi) * s, low = -I * std::exp(I * phi) * s;
    for (Eigen::Index col = 0; col < V.cols(); col++) {
        cplx x = V(j, col), y = V(i, col);
        V(j, col) = c * x + up * y;
        V(i, col) = low * x + c * y;
    }
}

struct Emitter {
    PrimitiveProgram prog;
    PermutationSearch search;
    size_t u, v;
    char species;
    // Key of the last P^-1 emitted, so P^-1 P pairs cancel.
    std::optional<std::pair<size_t, size_t>> open;

    void rotation(size_t j, size_t i, double theta, double phi) {
        std::pair<size_t, size_t> key{j, i};
        PermutationStep P = search.find(prog.labels, j, i, u, v);
        if (open && *open == key) {
            prog.steps.pop_back();
        } else {
            ProgramStep s;
            s.kind = ProgramStep::Permutation;
            s.perm = P;
            prog.steps.push_back(s);
        }
        // Labels j and i arrive at u and v with phases c_j and c_i; shifting
        // the pulse phase by arg(c_i) - arg(c_j) makes the conjugated
        // rotation exactly R(theta, phi) on (j, i).
        phi += std::arg(P.phase[prog.labels[i]]) - std::arg(P.phase[prog.labels[j]]);
        ProgramStep r;
        r.kind = ProgramStep::Rotation;
        r.rot = {u, v, theta, phi};
        r.pulse = Pulse::pi_end(species, Side::Left, 0);
        r.pulse.area = theta;
        r.pulse.phase = phi;
        prog.steps.push_back(r);
        ProgramStep back;
        back.kind = ProgramStep::Permutation;
        back.perm = inverse(P);
        prog.steps.push_back(back);
        open = key;
    }
};

}  // namespace

PrimitiveProgram synthesize_unitary(const Matrix &U, const std::vector<size_t> &labels, const Polymer &p) {
    size_t k = U.k;
    if (U.a.size() != k * k || labels.size() != k || k < 1) {
        throw Error(ErrorCode::DimensionMismatch, "unitary is not k x k over the k labels");
    }
    if (p.length() < 3 || p.species_at(1).num_states < 2) {
        throw Error(ErrorCode::InvalidArgument, "synthesis needs a polymer of at least three units");
    }
    QuantumState ref(p);
    size_t D = ref.dimension();
    if (D > 4096) {
        throw Error(ErrorCode::DimensionCap, "synthesis is limited to polymers of dimension 4096");
    }
    std::vector<bool> seen(D, false);
    for (size_t x : labels) {
        if (x >= D || seen[x]) {
            throw Error(ErrorCode::DimensionMismatch, "labels must be distinct basis states of the polymer");
        }
        seen[x] = true;
    }
    size_t bits = 1;
    while ((size_t{1} << bits) < D) {
        bits++;
    }
    if (bits * k > 64 || k > D / 2 + 2) {
        throw Error(ErrorCode::DimensionMismatch, "too many labels for this polymer");
    }
    Eigen::MatrixXcd E = to_eigen(U);
    double err = (E.adjoint() * E - Eigen::MatrixXcd::Identity(k, k)).norm();
    if (!(err <= 1e-10)) {
        throw Error(ErrorCode::NotUnitary, "|U^dagger U - I| = " + format_double(err));
    }

    Emitter em{{labels, D, {}}, PermutationSearch(p, ref), 0, ref.stride(0), p.species_at(0).id, std::nullopt};

    // Givens elimination on U^dagger.
    Eigen::MatrixXcd V = E.adjoint();
    for (size_t col = 0; col + 1 < k; col++) {
        for (size_t i = col + 1; i < k; i++) {
            cplx x = V(col, col), y = V(i, col);
            if (std::abs(y) < 1e-15) {
                continue;
            }
            double theta, phi;
            if (std::abs(x) < 1e-15) {
                theta = kPi;
                phi = 0;
            } else {
                cplx w = cplx(0, -1) * y / x;
                theta = 2 * std::atan(std::abs(w));
                phi = std::arg(w);
            }
            rotate_rows(V, col, i, theta, phi);
            em.rotation(col, i, theta, phi);
        }
    }

    // V is now diagonal; undo it with balanced phase pairs on (0, l).
    std::vector<double> gamma(k);
    double mean = 0;
    for (size_t l = 0; l < k; l++) {
        gamma[l] = -std::arg(V(l, l));
        mean += gamma[l] / (double)k;
    }
    for (size_t l = 1; l < k; l++) {
        double beta = -(gamma[l] - mean);
        double r = std::remainder(beta, 2 * kPi);
        if (std::abs(r) < 1e-14) {
            continue;
        }
        // R(pi, delta) then R(pi, 0) gives diag(-e^{i delta}, -e^{-i delta}).
        em.rotation(0, l, kPi, beta - kPi);
        em.rotation(0, l, kPi, 0);
    }
    return em.prog;
}

namespace {

void apply_rotation_vec(std::vector<cplx> &psi, const TwoLevelRotation &r) {
    const cplx I(0, 1);
    double c = std::cos(r.theta / 2), s = std::sin(r.theta / 2);
    cplx x = psi[r.u], y = psi[r.v];
    psi[r.u] = c * x - I * std::exp(-I * r.phi) * s * y;
    psi[r.v] = -I * std::exp(I * r.phi) * s * x + c * y;
}

}  // namespace

Matrix compose_program(const PrimitiveProgram &prog) {
    size_t k = prog.labels.size();
    Matrix M{k, std::vector<cplx>(k * k)};
    for (size_t c = 0; c < k; c++) {
        std::vector<cplx> psi(prog.dimension, cplx(0));
        psi[prog.labels[c]] = 1;
        for (const auto &s : prog.steps) {
            if (s.kind == ProgramStep::Rotation) {
                apply_rotation_vec(psi, s.rot);
            } else {
                std::vector<cplx> nxt(psi.size(), cplx(0));
                for (size_t x = 0; x < psi.size(); x++) {
                    nxt[s.perm.map[x]] = psi[x] * s.perm.phase[x];
                }
                psi.swap(nxt);
            }
        }
        for (size_t r = 0; r < k; r++) {
            M(r, c) = psi[prog.labels[r]];
        }
    }
    return M;
}

Matrix compose_pulses(const PrimitiveProgram &prog, const Polymer &p) {
    size_t k = prog.labels.size();
    Matrix M{k, std::vector<cplx>(k * k)};
    PulseSequence seq = prog.pulses();
    for (size_t c = 0; c < k; c++) {
        QuantumState s(p);
        s[0] = 0;
        s[prog.labels[c]] = 1;
        apply_sequence_quantum(s, seq);
        for (size_t r = 0; r < k; r++) {
            M(r, c) = s[prog.labels[r]];
        }
    }
    return M;
}

PhaseDistance distance_up_to_phase(const Matrix &M, const Matrix &U) {
    if (M.k != U.k) {
        throw Error(ErrorCode::DimensionMismatch, "matrices have different sizes");
    }
    Eigen::MatrixXcd m = to_eigen(M), u = to_eigen(U);
    cplx tr = (u.adjoint() * m).trace();
    double alpha = std::abs(tr) > 0 ? std::arg(tr) : 0.0;
    double d = (m - std::exp(cplx(0, alpha)) * u).norm();
    return {d, alpha};
}

UnitaryFile parse_unitary(const std::string &text) {
    using namespace pqca::detail;
    UnitaryFile f;
    std::vector<double> nums;
    bool header = false;
    size_t no = 0, pos = 0;
    while (pos <= text.size()) {
        size_t e = text.find('\n', pos);
        if (e == std::string::npos) {
            e = text.size();
        }
        std::string raw = text.substr(pos, e - pos);
        pos = e + 1;
        no++;
        auto toks = split_ws(strip_comment(raw));
        if (toks.empty()) {
            continue;
        }
        if (!header) {
            if (toks[0] != "dim" || toks.size() < 2) {
                parse_fail(no, "expected 'dim k labels=...'");
            }
            long k = parse_long(toks[1], no);
            if (k < 1 || k > 64) {
                parse_fail(no, "dim out of range");
            }
            f.U.k = (size_t)k;
            for (size_t t = 2; t < toks.size(); t++) {
                if (toks[t].rfind("labels=", 0) != 0) {
                    parse_fail(no, "unknown key '" + toks[t] + "'");
                }
                std::string rest = toks[t].substr(7);
                size_t q = 0;
                while (q <= rest.size()) {
                    size_t c = rest.find(',', q);
                    if (c == std::string::npos) {
                        c = rest.size();
                    }
                    f.labels.push_back(rest.substr(q, c - q));
                    q = c + 1;
                }
            }
            if (f.labels.size() != f.U.k) {
                parse_fail(no, "need exactly k labels");
            }
            header = true;
            continue;
        }
        for (const auto &t : toks) {
            nums.push_back(parse_double(t, no));
        }
    }
    if (!header) {
        parse_fail(no, "missing header");
    }
    size_t k = f.U.k;
    if (nums.size() != 2 * k * k) {
        throw Error(ErrorCode::Parse, "expected " + std::to_string(2 * k * k) + " numbers, got " +
                                          std::to_string(nums.size()));
    }
    f.U.a.resize(k * k);
    for (size_t i = 0; i < k * k; i++) {
        f.U.a[i] = cplx(nums[2 * i], nums[2 * i + 1]);
    }
    return f;
}

std::string serialize_unitary(const UnitaryFile &f) {
    std::string out = "dim " + std::to_string(f.U.k) + " labels=";
    for (size_t i = 0; i < f.labels.size(); i++) {
        out += (i ? "," : "") + f.labels[i];
    }
    out += "\n";
    for (size_t r = 0; r < f.U.k; r++) {
        for (size_t c = 0; c < f.U.k; c++) {
            out += (c ? "  " : "") + format_double(f.U(r, c).real()) + " " + format_double(f.U(r, c).imag());
        }
        out += "\n";
    }
    return out;
}

std::string format_program(const PrimitiveProgram &prog, const Polymer &p) {
    QuantumState ref(p);
    std::string out = "# labels";
    for (size_t x : prog.labels) {
        out += " " + config_to_string(ref.config_of(x));
    }
    out += "\n# rotations " + std::to_string(prog.rotation_count()) + "\n";
    for (const auto &s : prog.steps) {
        if (s.kind == ProgramStep::Rotation) {
            out += "# rotation on |" + config_to_string(ref.config_of(s.rot.u)) + ">,|" +
                   config_to_string(ref.config_of(s.rot.v)) + ">\n";
            out += serialize_pulse(s.pulse) + "\n";
        } else {
            out += "# permutation, " + std::to_string(s.perm.pulses.size()) + " pi pulses\n";
            for (const Pulse &x : s.perm.pulses.pulses) {
                out += serialize_pulse(x) + "\n";
            }
        }
    }
    return out;
}

}  // namespace pqca::qsim
