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


#include "pqca/physics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "pqca/error.hpp"
#include "pqca/io.hpp"

namespace pqca::physics {

namespace {

constexpr double kPi = 3.14159265358979323846;

double clamp01(double x) {
    return std::clamp(x, 0.0, 1.0);
}

void require(bool ok, const std::string &what) {
    if (!ok) {
        throw Error(ErrorCode::InvalidArgument, what);
    }
}

}  // namespace

void validate(const PhysicalParams &p) {
    require(p.omega > 0, "omega must be positive");
    require(p.delta_omega_on > 0, "delta_omega_on must be positive");
    require(p.delta_omega_off >= 0, "delta_omega_off must not be negative");
    require(p.Delta_omega > 0, "Delta_omega must be positive");
    require(p.M >= 2, "M must be at least 2");
    require(p.T >= 0 && p.mu >= 0, "T and mu must not be negative");
    require(p.target_error > 0 && p.target_error <= 1, "target_error must lie in (0, 1]");
    require(p.pulses_per_computation > 0, "pulses_per_computation must be positive");
}

double prob_off_resonant(double omega, double omega_prime, double T) {
    require(T > 0, "pulse length must be positive");
    double x = (omega - omega_prime) * T;
    return clamp01(1 / (x * x + 1));
}

double prob_square_wave(double T, double delta_omega_on) {
    require(T > 0 && delta_omega_on > 0, "pulse length and shift must be positive");
    double x = 1 / (T * delta_omega_on);
    return clamp01(x * x);
}

double prob_off_diagonal(double delta_omega_off, double omega) {
    require(omega > 0 && delta_omega_off >= 0, "frequencies must be positive");
    double x = delta_omega_off / omega;
    return clamp01(x * x);
}

double exciton_bandwidth(double delta_omega_off, double Delta_omega, int M) {
    require(M >= 2, "M must be at least 2");
    require(Delta_omega > 0 && delta_omega_off >= 0, "frequencies must be positive");
    // Written as a product of ratios so 10^12^M does not overflow early.
    return delta_omega_off * std::pow(delta_omega_off / Delta_omega, M - 1);
}

double exciton_lifetime(double delta_omega_off, double Delta_omega, int M) {
    double b = exciton_bandwidth(delta_omega_off, Delta_omega, M);
    return b > 0 ? 1 / b : std::numeric_limits<double>::infinity();
}

double spontaneous_rate(double omega, double mu) {
    require(omega > 0 && mu >= 0, "omega must be positive and mu non-negative");
    double c3 = kSpeedOfLight * kSpeedOfLight * kSpeedOfLight;
    return omega * omega * omega * mu * mu / (3 * kPi * kEpsilon0 * kHbar * c3);
}

double dipole_for_lifetime(double omega, double lifetime) {
    require(omega > 0 && lifetime > 0, "omega and lifetime must be positive");
    double c3 = kSpeedOfLight * kSpeedOfLight * kSpeedOfLight;
    return std::sqrt(3 * kPi * kEpsilon0 * kHbar * c3 / (omega * omega * omega * lifetime));
}

double pulse_area_error(double delta) {
    double s = std::sin(delta);
    return clamp01(s * s);
}

OperatingWindow operating_window(const PhysicalParams &p) {
    validate(p);
    OperatingWindow w;
    // (1 / (T dw_on))^2 = target  =>  T = 1 / (dw_on sqrt(target)).
    w.T_min = 1 / (p.delta_omega_on * std::sqrt(p.target_error));
    w.exciton_bandwidth = exciton_bandwidth(p.delta_omega_off, p.Delta_omega, p.M);
    w.exciton_lifetime = exciton_lifetime(p.delta_omega_off, p.Delta_omega, p.M);
    // 1 / (bandwidth * pulses) rounds better than lifetime / pulses.
    w.T_max = w.exciton_bandwidth > 0 ? 1 / (w.exciton_bandwidth * p.pulses_per_computation)
                                      : std::numeric_limits<double>::infinity();
    // The boundary case T_min == T_max counts as feasible despite rounding.
    w.feasible = w.T_min <= w.T_max * (1 + 1e-12);

    w.T_eval = p.T > 0 ? p.T : w.T_min;
    w.err_square_wave = prob_square_wave(w.T_eval, p.delta_omega_on);
    w.err_off_diagonal = prob_off_diagonal(p.delta_omega_off, p.omega);
    w.err_off_resonant = prob_off_resonant(p.omega, p.omega + p.Delta_omega, w.T_eval);
    w.err_pulse_area = pulse_area_error(p.delta);
    w.err_spontaneous = clamp01(spontaneous_rate(p.omega, p.mu) * w.T_eval);
    w.err_total = clamp01(w.err_square_wave + w.err_off_diagonal + w.err_off_resonant + w.err_pulse_area +
                          w.err_spontaneous);
    return w;
}

PhysicalParams parse_params(const std::string &text) {
    auto kv = parse_key_values(text);
    auto take = [&](const char *key, bool required, double fallback) {
        auto it = kv.find(key);
        if (it == kv.end()) {
            if (required) {
                throw Error(ErrorCode::MissingEntry, std::string("missing key '") + key + "'");
            }
            return fallback;
        }
        double v = detail::parse_double(it->second, 0);
        kv.erase(it);
        return v;
    };
    PhysicalParams p;
    p.omega = take("omega", true, 0);
    p.delta_omega_on = take("delta_omega_on", true, 0);
    p.delta_omega_off = take("delta_omega_off", true, 0);
    p.Delta_omega = take("Delta_omega", true, 0);
    double m = take("M", true, 0);
    if (m != std::floor(m)) {
        throw Error(ErrorCode::Parse, "M must be an integer");
    }
    p.M = (int)m;
    p.T = take("T", false, 0);
    p.mu = take("mu", false, 0);
    p.delta = take("delta", false, 0);
    p.target_error = take("target_error", false, p.target_error);
    p.pulses_per_computation = take("pulses_per_computation", false, p.pulses_per_computation);
    if (!kv.empty()) {
        throw Error(ErrorCode::Parse, "unknown key '" + kv.begin()->first + "'");
    }
    validate(p);
    return p;
}

std::string format_window(const PhysicalParams &p, const OperatingWindow &w) {
    std::vector<std::pair<std::string, std::string>> rows = {
        {"T_min", format_double(w.T_min)},
        {"T_max", format_double(w.T_max)},
        {"exciton_bandwidth", format_double(w.exciton_bandwidth)},
        {"exciton_lifetime", format_double(w.exciton_lifetime)},
        {"pulses_per_computation", format_double(p.pulses_per_computation)},
        {"target_error", format_double(p.target_error)},
        {"T_eval", format_double(w.T_eval)},
        {"err_square_wave", format_double(w.err_square_wave)},
        {"err_off_diagonal", format_double(w.err_off_diagonal)},
        {"err_off_resonant", format_double(w.err_off_resonant)},
        {"err_pulse_area", format_double(w.err_pulse_area)},
        {"err_spontaneous", format_double(w.err_spontaneous)},
        {"err_total", format_double(w.err_total)},
        {"feasible", w.feasible ? "true" : "false"},
    };
    std::ostringstream out;
    char buf[128];
    for (const auto &[k, v] : rows) {
        std::snprintf(buf, sizeof buf, "%-24s %s\n", k.c_str(), v.c_str());
        out << buf;
    }
    out << "\n";
    for (const auto &[k, v] : rows) {
        out << k << "=" << v << "\n";
    }
    return out.str();
}

}  // namespace pqca::physics
