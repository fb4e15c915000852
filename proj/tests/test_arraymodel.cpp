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

#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"
#include "switchbeam/arraymodel.hpp"
#include "switchbeam/errors.hpp"

#include <array>
#include <cmath>

using namespace switchbeam;
using Catch::Approx;

namespace
{

struct golden
{
    int id;
    double steer, gain28, peak, hpbw_h, hpbw_e;
};

// Measured element table, independent copy
constexpr std::array<golden, 12> table{{{1, 28, 11.1, 11.5, 33, 36.5},
                                        {2, -32, 10.7, 10.8, 34, 38},
                                        {3, 25, 10.6, 10.7, 49.6, 35.9},
                                        {4, -17, 9.3, 9.6, 52.3, 41},
                                        {5, 13, 9.4, 9.5, 54.5, 42.5},
                                        {6, -11, 9.5, 9.7, 44.4, 45.6},
                                        {7, 0, 10.1, 10.8, 41, 29},
                                        {8, 0, 10.2, 10.5, 47.8, 28.4},
                                        {9, 0, 10.3, 10.5, 51.9, 27.8},
                                        {10, 0, 10.7, 10.8, 39.5, 21},
                                        {11, 0, 10.4, 10.3, 46.7, 28.3},
                                        {12, 0, 10.2, 10.5, 48.3, 25.5}}};

} // namespace

TEST_CASE("wall_law - Knots, clamps and interpolation")
{
    const std::array<std::array<double, 3>, 11> knots{{{0, 9.6, 0},
                                                       {3, 8.5, 7},
                                                       {4.5, 8.7, 10},
                                                       {6, 9.1, 15},
                                                       {11, 10.0, 20},
                                                       {16, 10.5, 25},
                                                       {21.5, 11.4, 27},
                                                       {25, 11.7, 29},
                                                       {32, 12.1, 30},
                                                       {43, 12.4, 30},
                                                       {54, 12.5, 30}}};
    REQUIRE(wall_law_table().size() == knots.size());
    for (const auto &k : knots)
    {
        const auto r = wall_law(k[0]);
        CHECK(r.gain_dbi == k[1]);
        CHECK(r.beam_deg == k[2]);
    }
    CHECK(wall_law(100.0).beam_deg == 30.0);
    CHECK(wall_law(100.0).gain_dbi == 12.5);
    CHECK(wall_law(8.5).beam_deg == Approx(17.5).margin(1e-12));
    CHECK(wall_law(8.5).gain_dbi == Approx(9.55).margin(1e-12));
    CHECK(wall_law(3.0).gain_dbi < wall_law(0.0).gain_dbi);
    CHECK_THROWS_AS(wall_law(-0.1), parameter_error);

    double prev_beam = -1.0, prev_gain = 0.0;
    for (int k = 0; k <= 1000; ++k)
    {
        const double h = 0.1 * k;
        const auto r = wall_law(h);
        CHECK(r.beam_deg >= prev_beam);
        if (h > 4.5)
            CHECK(r.gain_dbi >= prev_gain);
        if (h >= 32.0)
            CHECK(r.beam_deg == 30.0);
        prev_beam = r.beam_deg;
        prev_gain = r.gain_dbi;
    }
}

TEST_CASE("default_catalog - Golden values")
{
    const auto cat = default_catalog();
    REQUIRE(cat.elements().size() == 12);
    for (const auto &g : table)
    {
        const auto &e = cat.element(g.id);
        CHECK(e.steer_deg == g.steer);
        CHECK(e.gain_28_dbi == g.gain28);
        CHECK(e.peak_gain_dbi == g.peak);
        CHECK(e.hpbw_h_deg == g.hpbw_h);
        CHECK(e.hpbw_e_deg == g.hpbw_e);
        CHECK((e.role == element_role::steered) == (g.id <= 6));
        CHECK((e.wall_height_mm > 0.0) == (g.id <= 6));
    }
    CHECK(cat.boresight_separation_mm() == 10.0);
    const auto b = cat.gain_breakdown();
    // the contributions are quoted as approximate figures
    CHECK(b.slot_only_dbi + b.corrugation_gain_db + b.cavity_gain_db == Approx(b.total_dbi).margin(0.15));
    CHECK_THROWS_AS(cat.element(13), argument_error);
}

TEST_CASE("array_catalog - Validation")
{
    element_spec bore{7, element_role::boresight, 0.0, 0.0, 10.0, 10.5, 40.0, 30.0};
    element_spec steer{1, element_role::steered, 11.0, 20.0, 10.0, 10.5, 40.0, 30.0};
    CHECK_THROWS_AS(array_catalog({}), argument_error);
    CHECK_THROWS_AS(array_catalog({steer}), parameter_error);
    CHECK_THROWS_AS(array_catalog({bore, bore}), parameter_error);

    auto bad = steer;
    bad.wall_height_mm = 0.0;
    CHECK_THROWS_AS(array_catalog({bore, bad}), parameter_error);
    bad = steer;
    bad.steer_deg = 40.0;
    CHECK_THROWS_AS(array_catalog({bore, bad}), parameter_error);
    bad = bore;
    bad.id = 3;
    bad.steer_deg = 5.0;
    CHECK_THROWS_AS(array_catalog({bore, bad}), parameter_error);
    CHECK_NOTHROW(array_catalog({bore, steer}));
}

TEST_CASE("catalog json - Round trip and rejection")
{
    const auto cat = default_catalog();
    const auto back = catalog_from_json(catalog_to_json(cat));
    REQUIRE(back.elements().size() == cat.elements().size());
    for (std::size_t k = 0; k < cat.elements().size(); ++k)
    {
        const auto &a = cat.elements()[k], &b = back.elements()[k];
        CHECK(a.id == b.id);
        CHECK(a.role == b.role);
        CHECK(a.steer_deg == b.steer_deg);
        CHECK(a.gain_28_dbi == b.gain_28_dbi);
        CHECK(a.hpbw_e_deg == b.hpbw_e_deg);
        CHECK(a.wall_height_mm == b.wall_height_mm);
        CHECK(a.gain_sim_28_dbi == b.gain_sim_28_dbi);
    }
    CHECK_THROWS_AS(catalog_from_json("{}"), parse_error);
    CHECK_THROWS_AS(catalog_from_json("[{\"id\":1}]"), parse_error);
    CHECK_THROWS_AS(catalog_from_json("not json"), parse_error);
}

TEST_CASE("element_pattern - Peaks and degenerate element")
{
    const auto cat = default_catalog();
    const auto grid = angle_grid::uniform();
    const auto p1 = element_pattern(cat.element(1), grid);
    const auto pk1 = extract_peak(p1);
    CHECK(pk1.gain_dbi == Approx(11.1).margin(1e-9));
    CHECK(pk1.steer_deg == Approx(28.0).margin(0.5));
    const auto pk7 = extract_peak(element_pattern(cat.element(7), grid));
    CHECK(pk7.gain_dbi == Approx(10.1).margin(1e-12));
    CHECK(pk7.theta_deg == 0.0);

    auto e = cat.element(7);
    e.hpbw_h_deg = 0.0;
    CHECK_THROWS_AS(element_pattern(e, grid), resolution_error);

    e = cat.element(7);
    e.sll_db = -15.0;
    e.f2b_db = 12.0;
    const auto bp = element_beam_params(e);
    CHECK(bp.sll_db == -15.0);
    CHECK(bp.f2b_db == 12.0);
    CHECK(element_beam_params(cat.element(3)).sll_db == default_element_sll_db);
    CHECK(element_beam_params(cat.element(3)).f2b_db == default_element_f2b_db);
}

TEST_CASE("coverage_envelope - Matches the brute-force oracle")
{
    const auto cat = default_catalog();
    const auto env = coverage_envelope(cat, -30.0, 30.0, 0.5);
    REQUIRE(env.size() == 121);

    double worst = 1e9, worst_th = 0.0;
    for (const auto &c : env)
    {
        double best = -1e9;
        int best_id = 0;
        for (const auto &g : table)
        {
            const double v = oracle::h_plane_dbi({g.gain28, g.steer, g.hpbw_e, g.hpbw_h, -10.0, 6.5}, c.theta_deg);
            if (v > best)
            {
                best = v;
                best_id = g.id;
            }
        }
        CHECK(c.gain_dbi == Approx(best).margin(1e-9));
        CHECK(c.element_id == best_id);
        if (c.gain_dbi < worst)
        {
            worst = c.gain_dbi;
            worst_th = c.theta_deg;
        }
    }
    CHECK(worst > 8.0);
    CHECK(worst == Approx(oracle::coverage_min_dbi).margin(1e-9));
    CHECK(worst_th == oracle::coverage_min_theta_deg);

    const array_patterns bank(cat);
    CHECK(bank.best(28.0).first == 1);
    CHECK(bank.best(0.0).first == 10);
    CHECK(bank.best(0.0).second == Approx(10.7).margin(1e-12));
    for (const auto &c : env)
        for (const auto &e : cat.elements())
            CHECK(c.gain_dbi >= bank.gain(e.id, c.theta_deg));

    CHECK_THROWS_AS(coverage_envelope(cat, -30.0, 30.0, 0.0), argument_error);
}

TEST_CASE("slot_resonance_ghz - Half-wave estimate")
{
    CHECK(slot_resonance_ghz(5.357, 1.0) == Approx(28.0).margin(0.05));
    CHECK(slot_resonance_ghz(5.357, 1.0) == Approx(27.981375583348886).epsilon(1e-12));
    CHECK(slot_resonance_ghz(6.5, 1.0) == Approx(23.06).margin(0.005));
    CHECK(slot_resonance_ghz(6.5) == Approx(27.9).margin(0.05));
    CHECK(slot_resonance_ghz(13.0, 1.2) == Approx(slot_resonance_ghz(6.5, 1.2) / 2).epsilon(1e-15));
    CHECK_THROWS_AS(slot_resonance_ghz(0.0), argument_error);
    CHECK_THROWS_AS(slot_resonance_ghz(6.5, -1.0), argument_error);
}
