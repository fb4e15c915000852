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

#include "switchbeam/diversity.hpp"
#include "switchbeam/errors.hpp"

#include <algorithm>
#include <cmath>

namespace switchbeam
{

namespace
{

constexpr double db_floor = -100.0;

double floored_db(double lin)
{
    if (!(lin > 0.0))
        return db_floor;
    return std::max(db_floor, 10.0 * std::log10(lin));
}

} // namespace

std::vector<double> angular_density::sample(const angle_grid &grid) const
{
    const auto w = sphere_weights(grid);
    std::vector<double> p(grid.size(), 1.0);
    if (type == kind::gaussian_elevation)
    {
        if (!(sigma_deg > 0.0) || !std::isfinite(mean_deg))
            throw parameter_error("gaussian elevation density needs a finite mean and sigma > 0");
        for (std::size_t i = 0; i < grid.n_theta(); ++i)
        {
            const double el = 90.0 - grid.theta()[i];
            const double x = (el - mean_deg) / sigma_deg;
            const double v = std::exp(-0.5 * x * x);
            for (std::size_t j = 0; j < grid.n_phi(); ++j)
                p[grid.index(i, j)] = v;
        }
    }
    double total = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k)
        total += w[k] * p[k];
    if (!(total > 0.0))
        throw parameter_error("angular density vanishes on the grid");
    for (auto &v : p)
        v /= total;
    return p;
}

void propagation_environment::validate() const
{
    if (!(xpr_linear > 0.0))
        throw parameter_error("xpr_linear must be positive");
}

double propagation_environment::theta_weight() const
{
    return std::isinf(xpr_linear) ? 1.0 : xpr_linear / (1.0 + xpr_linear);
}

double propagation_environment::phi_weight() const
{
    return std::isinf(xpr_linear) ? 0.0 : 1.0 / (1.0 + xpr_linear);
}

ecc_result ecc_result::from_linear(double rho)
{
    rho = std::clamp(rho, 0.0, 1.0);
    return {rho, floored_db(rho)};
}

ecc_result ecc_from_sparams(const sweep_smatrix &s, std::size_t i, std::size_t j, double f_ghz)
{
    if (i == j)
        throw argument_error("envelope correlation needs two distinct ports");
    const auto m = s.interpolate(f_ghz);
    // interpolate() already range-checked f; ports checked here
    if (i < 1 || j < 1 || i > s.n_ports() || j > s.n_ports())
        throw argument_error("port outside network");
    const cdouble sii = m[s.flat(i, i)], sij = m[s.flat(i, j)];
    const cdouble sji = m[s.flat(j, i)], sjj = m[s.flat(j, j)];

    const double num = std::norm(std::conj(sii) * sij + std::conj(sji) * sjj);
    const double di = 1.0 - std::norm(sii) - std::norm(sji);
    const double dj = 1.0 - std::norm(sjj) - std::norm(sij);
    if (!(di > 0.0) || !(dj > 0.0))
        throw lossy_port_error("S-parameter correlation undefined: a port radiates no power");
    return ecc_result::from_linear(num / (di * dj));
}

ecc_result ecc_from_patterns(const far_field_pattern &p1, const far_field_pattern &p2, const propagation_environment &env)
{
    env.validate();
    if (!(p1.grid() == p2.grid()))
        throw grid_error("patterns are sampled on different grids");
    const auto f1 = p1.field();
    const auto f2 = p2.field();
    const auto &grid = p1.grid();
    const auto w = sphere_weights(grid);
    const auto pt = env.theta_density.sample(grid);
    const auto pp = env.phi_density.sample(grid);
    const double at = env.theta_weight(), ap = env.phi_weight();

    cdouble cross{0.0, 0.0};
    double n1 = 0.0, n2 = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k)
    {
        const double wt = w[k] * at * pt[k], wp = w[k] * ap * pp[k];
        cross += wt * f1[k].e_theta * std::conj(f2[k].e_theta) + wp * f1[k].e_phi * std::conj(f2[k].e_phi);
        n1 += wt * std::norm(f1[k].e_theta) + wp * std::norm(f1[k].e_phi);
        n2 += wt * std::norm(f2[k].e_theta) + wp * std::norm(f2[k].e_phi);
    }
    if (!(n1 > 0.0) || !(n2 > 0.0))
        return ecc_result::from_linear(0.0);
    return ecc_result::from_linear(std::norm(cross) / (n1 * n2));
}

double diversity_gain_db(const ecc_result &ecc)
{
    const double r = std::clamp(ecc.rho_e, 0.0, 1.0);
    return 10.0 * std::sqrt(1.0 - r * r);
}

double effective_diversity_gain_db(const ecc_result &ecc, double efficiency)
{
    if (!(efficiency > 0.0) || efficiency > 1.0)
        throw argument_error("efficiency must lie in (0, 1]");
    return diversity_gain_db(ecc) + 10.0 * std::log10(efficiency);
}

double mean_effective_gain_db(const far_field_pattern &p, const propagation_environment &env)
{
    env.validate();
    const auto gt = p.gain_theta_linear();
    const auto gp = p.gain_phi_linear();
    const auto &grid = p.grid();
    const auto w = sphere_weights(grid);
    const auto pt = env.theta_density.sample(grid);
    const auto pp = env.phi_density.sample(grid);
    const double at = env.theta_weight(), ap = env.phi_weight();

    double acc = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k)
        acc += w[k] * (at * gt[k] * pt[k] + ap * gp[k] * pp[k]);
    return floored_db(acc);
}

} // namespace switchbeam
