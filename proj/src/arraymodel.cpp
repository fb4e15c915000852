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

#include "switchbeam/arraymodel.hpp"
#include "switchbeam/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <set>

namespace switchbeam
{

namespace
{

constexpr std::array<wall_law_point, 11> wall_table{{
    {0.0, 9.6, 0.0},
    {3.0, 8.5, 7.0},
    {4.5, 8.7, 10.0},
    {6.0, 9.1, 15.0},
    {11.0, 10.0, 20.0},
    {16.0, 10.5, 25.0},
    {21.5, 11.4, 27.0},
    {25.0, 11.7, 29.0},
    {32.0, 12.1, 30.0},
    {43.0, 12.4, 30.0},
    {54.0, 12.5, 30.0},
}};

constexpr double speed_of_light = 299792458.0;

const char *role_name(element_role r) { return r == element_role::steered ? "steered" : "boresight"; }

} // namespace

std::span<const wall_law_point> wall_law_table() { return wall_table; }

wall_law_result wall_law(double wh)
{
    if (!std::isfinite(wh) || wh < 0.0)
        throw parameter_error("wall height must be non-negative");
    if (wh >= wall_table.back().wall_height_mm)
        return {wall_table.back().beam_deg, wall_table.back().gain_dbi};

    auto it = std::upper_bound(wall_table.begin(), wall_table.end(), wh,
                               [](double v, const wall_law_point &p) { return v < p.wall_height_mm; });
    const auto &hi = *it;
    const auto &lo = *(it - 1);
    if (lo.wall_height_mm == wh)
        return {lo.beam_deg, lo.gain_dbi};
    const double w = (wh - lo.wall_height_mm) / (hi.wall_height_mm - lo.wall_height_mm);
    return {lo.beam_deg + w * (hi.beam_deg - lo.beam_deg), lo.gain_dbi + w * (hi.gain_dbi - lo.gain_dbi)};
}

// ------------------------------------------------------------------ catalog

void element_spec::validate() const
{
    auto bad = [this](const std::string &m) { throw parameter_error("element " + std::to_string(id) + ": " + m); };
    if (id < 1)
        bad("id must be positive");
    for (double v : {wall_height_mm, steer_deg, gain_28_dbi, peak_gain_dbi, hpbw_h_deg, hpbw_e_deg})
        if (!std::isfinite(v))
            bad("non-finite field");
    if (wall_height_mm < 0.0)
        bad("wall height must be non-negative");
    if (role == element_role::steered)
    {
        if (!(wall_height_mm > 0.0))
            bad("steered element needs a wall");
        if (std::abs(steer_deg) > 35.0)
            bad("steer angle beyond 35 degrees");
    }
    else if (steer_deg != 0.0)
        bad("boresight element must have zero steer");
}

array_catalog::array_catalog(std::vector<element_spec> elements, double boresight_separation_mm)
    : elements_(std::move(elements)), separation_mm_(boresight_separation_mm)
{
    if (elements_.empty())
        throw argument_error("catalog has no elements");
    std::set<int> ids;
    bool boresight = false;
    for (const auto &e : elements_)
    {
        e.validate();
        if (!ids.insert(e.id).second)
            throw parameter_error("duplicate element id " + std::to_string(e.id));
        boresight = boresight || e.role == element_role::boresight;
    }
    if (!boresight)
        throw parameter_error("catalog needs at least one boresight element");
}

const element_spec &array_catalog::element(int id) const
{
    for (const auto &e : elements_)
        if (e.id == id)
            return e;
    throw argument_error("no element with id " + std::to_string(id));
}

bool array_catalog::contains(int id) const
{
    return std::any_of(elements_.begin(), elements_.end(), [id](const element_spec &e) { return e.id == id; });
}

array_catalog default_catalog()
{
    // wall heights follow the design targets (~30, ~20, ~10 degrees) through the wall law
    auto steered = [](int id, double wh, double steer, double sim, double g28, double peak, double h, double e) {
        element_spec s;
        s.id = id;
        s.role = element_role::steered;
        s.wall_height_mm = wh;
        s.steer_deg = steer;
        s.gain_sim_28_dbi = sim;
        s.gain_28_dbi = g28;
        s.peak_gain_dbi = peak;
        s.hpbw_h_deg = h;
        s.hpbw_e_deg = e;
        return s;
    };
    auto boresight = [](int id, double sim, double g28, double peak, double h, double e) {
        element_spec s;
        s.id = id;
        s.role = element_role::boresight;
        s.gain_sim_28_dbi = sim;
        s.gain_28_dbi = g28;
        s.peak_gain_dbi = peak;
        s.hpbw_h_deg = h;
        s.hpbw_e_deg = e;
        return s;
    };

    return array_catalog({
        steered(1, 32.0, +28.0, 11.75, 11.1, 11.5, 33.0, 36.5),
        steered(2, 32.0, -32.0, 11.7, 10.7, 10.8, 34.0, 38.0),
        steered(3, 11.0, +25.0, 10.4, 10.6, 10.7, 49.6, 35.9),
        steered(4, 11.0, -17.0, 10.3, 9.3, 9.6, 52.3, 41.0),
        steered(5, 4.5, +13.0, 9.0, 9.4, 9.5, 54.5, 42.5),
        steered(6, 4.5, -11.0, 9.5, 9.5, 9.7, 44.4, 45.6),
        boresight(7, 10.7, 10.1, 10.8, 41.0, 29.0),
        boresight(8, 10.4, 10.2, 10.5, 47.8, 28.4),
        boresight(9, 10.2, 10.3, 10.5, 51.9, 27.8),
        boresight(10, 11.0, 10.7, 10.8, 39.5, 21.0),
        boresight(11, 10.1, 10.4, 10.3, 46.7, 28.3),
        boresight(12, 10.5, 10.2, 10.5, 48.3, 25.5),
    });
}

std::string catalog_to_json(const array_catalog &cat)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto &e : cat.elements())
    {
        nlohmann::ordered_json o;
        o["id"] = e.id;
        o["role"] = role_name(e.role);
        o["wall_height_mm"] = e.wall_height_mm;
        o["steer_deg"] = e.steer_deg;
        o["gain_28_dbi"] = e.gain_28_dbi;
        o["peak_gain_dbi"] = e.peak_gain_dbi;
        o["hpbw_h_deg"] = e.hpbw_h_deg;
        o["hpbw_e_deg"] = e.hpbw_e_deg;
        if (e.gain_sim_28_dbi)
            o["gain_sim_28_dbi"] = *e.gain_sim_28_dbi;
        if (e.sll_db)
            o["sll_db"] = *e.sll_db;
        if (e.f2b_db)
            o["f2b_db"] = *e.f2b_db;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

array_catalog catalog_from_json(std::string_view text)
{
    nlohmann::json doc;
    try
    {
        doc = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error &e)
    {
        throw parse_error(0, std::string("catalog JSON: ") + e.what());
    }
    if (!doc.is_array())
        throw parse_error(0, "catalog JSON must be an array of element objects");

    std::vector<element_spec> out;
    for (std::size_t n = 0; n < doc.size(); ++n)
    {
        const auto &o = doc[n];
        const std::string where = "catalog element #" + std::to_string(n);
        if (!o.is_object())
            throw parse_error(0, where + " is not an object");
        auto num = [&](const char *key) -> double {
            if (!o.contains(key) || !o[key].is_number())
                throw parse_error(0, where + ": missing numeric field '" + key + "'");
            return o[key].get<double>();
        };
        auto opt = [&](const char *key) -> std::optional<double> {
            if (!o.contains(key))
                return std::nullopt;
            return num(key);
        };

        element_spec e;
        if (!o.contains("id") || !o["id"].is_number_integer())
            throw parse_error(0, where + ": missing integer field 'id'");
        e.id = o["id"].get<int>();
        if (!o.contains("role") || !o["role"].is_string())
            throw parse_error(0, where + ": missing field 'role'");
        const auto role = o["role"].get<std::string>();
        if (role == "steered")
            e.role = element_role::steered;
        else if (role == "boresight")
            e.role = element_role::boresight;
        else
            throw parse_error(0, where + ": unknown role '" + role + "'");
        e.wall_height_mm = num("wall_height_mm");
        e.steer_deg = num("steer_deg");
        e.gain_28_dbi = num("gain_28_dbi");
        e.peak_gain_dbi = num("peak_gain_dbi");
        e.hpbw_h_deg = num("hpbw_h_deg");
        e.hpbw_e_deg = num("hpbw_e_deg");
        e.gain_sim_28_dbi = opt("gain_sim_28_dbi");
        e.sll_db = opt("sll_db");
        e.f2b_db = opt("f2b_db");
        out.push_back(e);
    }
    return array_catalog(std::move(out));
}

beam_params element_beam_params(const element_spec &e)
{
    beam_params bp;
    bp.peak_gain_dbi = e.gain_28_dbi;
    bp.steer_theta_deg = e.steer_deg;
    bp.hpbw_e_deg = e.hpbw_e_deg;
    bp.hpbw_h_deg = e.hpbw_h_deg;
    bp.sll_db = e.sll_db.value_or(default_element_sll_db);
    bp.f2b_db = e.f2b_db.value_or(default_element_f2b_db);
    return bp;
}

far_field_pattern element_pattern(const element_spec &e, const angle_grid &grid, double freq_ghz)
{
    e.validate();
    return synthesize_beam(element_beam_params(e), grid, freq_ghz);
}

// ------------------------------------------------------------------ patterns

array_patterns::array_patterns(const array_catalog &cat, const angle_grid &grid) : catalog_(cat)
{
    patterns_.reserve(cat.elements().size());
    for (const auto &e : cat.elements())
        patterns_.push_back(element_pattern(e, grid));
}

double array_patterns::gain(int id, double signed_theta_deg) const
{
    const auto &els = catalog_.elements();
    for (std::size_t k = 0; k < els.size(); ++k)
        if (els[k].id == id)
            return gain_at_h_plane(patterns_[k], signed_theta_deg);
    throw argument_error("no element with id " + std::to_string(id));
}

std::pair<int, double> array_patterns::best(double signed_theta_deg) const
{
    const auto &els = catalog_.elements();
    int best_id = 0;
    double best_gain = 0.0;
    for (std::size_t k = 0; k < els.size(); ++k)
    {
        const double g = gain_at_h_plane(patterns_[k], signed_theta_deg);
        if (best_id == 0 || g > best_gain || (g == best_gain && els[k].id < best_id))
        {
            best_id = els[k].id;
            best_gain = g;
        }
    }
    return {best_id, best_gain};
}

std::vector<coverage_point> coverage_envelope(const array_patterns &bank, double theta_min_deg, double theta_max_deg, double step_deg)
{
    if (!(step_deg > 0.0) || !std::isfinite(step_deg))
        throw argument_error("coverage step must be positive");
    if (!(theta_max_deg >= theta_min_deg))
        throw argument_error("coverage range is empty");
    std::vector<coverage_point> out;
    const auto n = static_cast<std::size_t>(std::floor((theta_max_deg - theta_min_deg) / step_deg + 1e-9));
    out.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
    {
        const double th = theta_min_deg + static_cast<double>(k) * step_deg;
        const auto [id, g] = bank.best(th);
        out.push_back({th, id, g});
    }
    return out;
}

std::vector<coverage_point> coverage_envelope(const array_catalog &cat, double theta_min_deg, double theta_max_deg, double step_deg)
{
    return coverage_envelope(array_patterns(cat), theta_min_deg, theta_max_deg, step_deg);
}

double slot_resonance_ghz(double slot_length_mm, double k_eff)
{
    if (!(slot_length_mm > 0.0) || !(k_eff > 0.0) || !std::isfinite(slot_length_mm) || !std::isfinite(k_eff))
        throw argument_error("slot length and k_eff must be positive");
    return k_eff * speed_of_light / (2.0 * slot_length_mm * 1e-3) / 1e9;
}

} // namespace switchbeam
