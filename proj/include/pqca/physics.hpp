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


// Analytic error rates and the pulse-length window. All frequencies are
// angular (rad/s), times in seconds, dipoles in C*m. The bandwidth and
// lifetime are order-of-magnitude estimates: the proportionality constant
// is taken as 1.

#ifndef PQCA_PHYSICS_HPP
#define PQCA_PHYSICS_HPP

#include <string>

namespace pqca::physics {

// CODATA 2018, exact where SI fixes them.
inline constexpr double kHbar = 1.054571817e-34;     // J s
inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kEpsilon0 = 8.8541878128e-12;  // F/m

struct PhysicalParams {
    double omega = 0;            // transition frequency
    double delta_omega_on = 0;   // diagonal neighbor shift
    double delta_omega_off = 0;  // off-diagonal coupling, may be 0
    double Delta_omega = 0;      // spacing between species
    int M = 0;                   // number of species
    double T = 0;                // pulse length, 0 if unset
    double mu = 0;               // transition dipole, 0 if unset
    double delta = 0;            // pulse-area error
    double target_error = 1e-6;
    double pulses_per_computation = 1000;
};

// Throws InvalidArgument on non-positive frequencies, M < 2 or a target
// outside (0, 1].
void validate(const PhysicalParams &p);

// Probability that a pulse of length T at omega drives a line at omega_prime.
double prob_off_resonant(double omega, double omega_prime, double T);
// Error from the square envelope hitting the neighbor-shifted lines.
double prob_square_wave(double T, double delta_omega_on);
double prob_off_diagonal(double delta_omega_off, double omega);
double exciton_bandwidth(double delta_omega_off, double Delta_omega, int M);
// Infinite when there is no off-diagonal coupling.
double exciton_lifetime(double delta_omega_off, double Delta_omega, int M);
// omega^3 mu^2 / (3 pi eps0 hbar c^3).
double spontaneous_rate(double omega, double mu);
// The dipole giving a spontaneous lifetime of `lifetime` seconds.
double dipole_for_lifetime(double omega, double lifetime);
double pulse_area_error(double delta);

struct OperatingWindow {
    double T_min = 0;  // shortest pulse meeting target_error against square-wave leakage
    double T_max = 0;  // exciton lifetime / pulses_per_computation
    double exciton_bandwidth = 0;
    double exciton_lifetime = 0;
    bool feasible = false;
    // Per-pulse error sources evaluated at T_min (or at T when given).
    double T_eval = 0;
    double err_square_wave = 0;
    double err_off_diagonal = 0;
    double err_off_resonant = 0;  // nearest other species, Delta_omega away
    double err_pulse_area = 0;
    double err_spontaneous = 0;
    double err_total = 0;
};

OperatingWindow operating_window(const PhysicalParams &p);

// Required keys: omega delta_omega_on delta_omega_off Delta_omega M.
// Optional: T mu delta target_error pulses_per_computation. A missing key
// throws MissingEntry naming it.
PhysicalParams parse_params(const std::string &text);
// Aligned table followed by key=value lines.
std::string format_window(const PhysicalParams &p, const OperatingWindow &w);

}  // namespace pqca::physics

#endif
