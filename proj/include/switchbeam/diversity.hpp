// SPDX-License-Identifier: Apache-2.0
//
// switchbeam - switched-beam mm-wave MIMO antenna modelling library
// Copyright (C) 2026 The switchbeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "switchbeam/pattern.hpp"
#include "switchbeam/sparams.hpp"

#include <cstddef>
#include <limits>
#include <vector>

namespace switchbeam
{

// Angular power density of incident waves for one polarisation.
struct angular_density
{
    enum class kind
    {
        isotropic,
        gaussian_elevation
    };

    kind type = kind::isotropic;
    double mean_deg = 0.0;   // elevation above the x-y plane, i.e. 90 - theta
    double sigma_deg = 20.0;

    static angular_density isotropic() { return {}; }
    static angular_density gaussian_elevation(double mean_deg, double sigma_deg) { return {kind::gaussian_elevation, mean_deg, sigma_deg}; }

    // Density sampled on a full-sphere grid, normalised so that sum(w * p) == 1 with
    // the trapezoid weights of sphere_weights().
    std::vector<double> sample(const angle_grid &grid) const;
};

// Incident field statistics. xpr_linear = vertical (theta) to horizontal (phi) power,
// +infinity selects a purely theta-polarised environment.
struct propagation_environment
{
    double xpr_linear = 1.0;
    angular_density theta_density;
    angular_density phi_density;

    static propagation_environment isotropic(double xpr = 1.0) { return {xpr, {}, {}}; }

    void validate() const;

    // theta / phi weights XPR/(1+XPR) and 1/(1+XPR), finite for XPR -> infinity
    double theta_weight() const;
    double phi_weight() const;
};

struct ecc_result
{
    double rho_e;    // in [0, 1]
    double rho_e_db; // 10 log10(rho_e), floored at -100 dB

    static ecc_result from_linear(double rho);
};

// Envelope correlation from scattering parameters at f_ghz (ports 1-based):
//   rho = |S_ii* S_ij + S_ji* S_jj|^2 / ((1 - |S_ii|^2 - |S_ji|^2)(1 - |S_jj|^2 - |S_ij|^2))
// Throws argument_error for i == j, lossy_port_error if a denominator factor is <= 0.
ecc_result ecc_from_sparams(const sweep_smatrix &s, std::size_t i, std::size_t j, double f_ghz);

// Envelope correlation from two complex far fields on the same full-sphere grid.
ecc_result ecc_from_patterns(const far_field_pattern &p1, const far_field_pattern &p2, const propagation_environment &env);

// Two-branch selection-combining diversity gain, 10 sqrt(1 - rho^2) dB.
double diversity_gain_db(const ecc_result &ecc);

// Diversity gain plus 10 log10(efficiency); efficiency in (0, 1].
double effective_diversity_gain_db(const ecc_result &ecc, double efficiency);

// Mean effective gain integrated over the environment in dB, floored at -100 dB.
double mean_effective_gain_db(const far_field_pattern &p, const propagation_environment &env);

} // namespace switchbeam
