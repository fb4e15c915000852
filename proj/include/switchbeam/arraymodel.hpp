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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace switchbeam
{

// ------------------------------------------------------------------ wall law

// One row of the 28 GHz wall-height table. The source labels the gain column both
// "directivity" and "antenna gain"; it is stored as realized gain.
struct wall_law_point
{
    double wall_height_mm;
    double gain_dbi;
    double beam_deg;
};

// The 11 tabulated knots, wall height ascending.
std::span<const wall_law_point> wall_law_table();

struct wall_law_result
{
    double beam_deg;
    double gain_dbi;
};

// Piecewise-linear in wall height, exact at the knots. Beam saturates at 30 degrees from
// 32 mm and gain at 12.5 dBi beyond 54 mm. Throws parameter_error for negative heights.
wall_law_result wall_law(double wall_height_mm);

// ------------------------------------------------------------------ catalog

enum class element_role
{
    steered,
    boresight
};

struct element_spec
{
    int id = 0;
    element_role role = element_role::boresight;
    double wall_height_mm = 0.0;
    double steer_deg = 0.0;     // measured H-plane beam direction, signed
    double gain_28_dbi = 0.0;   // measured gain at 28 GHz
    double peak_gain_dbi = 0.0; // measured peak gain at 28.5 GHz
    double hpbw_h_deg = 0.0;
    double hpbw_e_deg = 0.0;
    std::optional<double> gain_sim_28_dbi; // simulated gain at 28 GHz, informational
    std::optional<double> sll_db;          // default -10 dB
    std::optional<double> f2b_db;          // default 6.5 dB

    void validate() const;
};

inline constexpr double default_element_sll_db = -10.0;
inline constexpr double default_element_f2b_db = 6.5;

// Gain build-up of the bare radiator at 28 GHz (slot alone, then corrugations, then cavity).
struct single_element_gain_breakdown
{
    double slot_only_dbi = 5.0;
    double corrugation_gain_db = 3.5;
    double cavity_gain_db = 1.2;
    double total_dbi = 9.6;
};

class array_catalog
{
public:
    // Throws parameter_error on duplicate ids, a missing boresight element or an invalid element.
    explicit array_catalog(std::vector<element_spec> elements, double boresight_separation_mm = 10.0);

    const std::vector<element_spec> &elements() const noexcept { return elements_; }
    const element_spec &element(int id) const; // throws argument_error
    bool contains(int id) const;
    double boresight_separation_mm() const noexcept { return separation_mm_; }
    single_element_gain_breakdown gain_breakdown() const { return {}; }

private:
    std::vector<element_spec> elements_;
    double separation_mm_;
};

// The 12-element 4x3 array with measured 28 GHz values. Elements 1-6 carry side walls,
// 7-12 radiate at boresight.
array_catalog default_catalog();

// JSON array of element objects keyed by the element_spec field names.
std::string catalog_to_json(const array_catalog &cat);
array_catalog catalog_from_json(std::string_view text);

beam_params element_beam_params(const element_spec &e);

// Parametric pattern of one element: peak gain_28_dbi at (steer_deg, H-plane).
far_field_pattern element_pattern(const element_spec &e, const angle_grid &grid, double freq_ghz = 28.0);

// Pre-computed element patterns for repeated H-plane gain queries.
class array_patterns
{
public:
    explicit array_patterns(const array_catalog &cat, const angle_grid &grid = angle_grid::h_plane(0.5));

    const array_catalog &catalog() const noexcept { return catalog_; }
    std::span<const far_field_pattern> patterns() const noexcept { return patterns_; }

    // H-plane gain of element id at a signed angle
    double gain(int id, double signed_theta_deg) const;

    // Best element at a signed H-plane angle; ties go to the lowest id.
    std::pair<int, double> best(double signed_theta_deg) const;

private:
    array_catalog catalog_;
    std::vector<far_field_pattern> patterns_;
};

struct coverage_point
{
    double theta_deg;
    int element_id;
    double gain_dbi;
};

// Pointwise best element over [theta_min, theta_max] in the H-plane.
std::vector<coverage_point> coverage_envelope(const array_patterns &bank, double theta_min_deg, double theta_max_deg, double step_deg);
std::vector<coverage_point> coverage_envelope(const array_catalog &cat, double theta_min_deg, double theta_max_deg, double step_deg);

// ------------------------------------------------------------------ resonance

// Effective-length factor that maps the 6.5 mm slot onto the simulated 27.9 GHz resonance.
inline constexpr double default_slot_k_eff = 1.209;

// Half-wave slot resonance f = k_eff * c / (2 SL), in GHz.
double slot_resonance_ghz(double slot_length_mm, double k_eff = default_slot_k_eff);

} // namespace switchbeam
