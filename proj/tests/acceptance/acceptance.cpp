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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include "support/oracles.hpp"
#include "switchbeam/arraymodel.hpp"
#include "switchbeam/cli.hpp"
#include "switchbeam/diversity.hpp"
#include "switchbeam/errors.hpp"
#include "switchbeam/linksim.hpp"
#include "switchbeam/pattern.hpp"
#include "switchbeam/sparams.hpp"

#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace switchbeam;

namespace
{

// Collects failed checks of one criterion.
struct checker
{
    std::vector<std::string> failures;

    void expect(bool ok, const std::string &what)
    {
        if (!ok && failures.size() < 8)
            failures.push_back(what);
        else if (!ok)
            failures.back() = "... more failures";
    }
    void near(double got, double want, double tol, const std::string &what)
    {
        std::ostringstream o;
        o.precision(17);
        o << what << ": got " << got << ", want " << want << " +- " << tol;
        expect(std::abs(got - want) <= tol, o.str());
    }
};

std::string run_cli(const std::vector<std::string> &args, int &code)
{
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str();
}

// ------------------------------------------------------------------ 1
void wall_table(checker &c)
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
    const auto table = wall_law_table();
    c.expect(table.size() == knots.size(), "embedded table size");
    for (std::size_t k = 0; k < knots.size() && k < table.size(); ++k)
    {
        std::ostringstream h;
        h << knots[k][0];
        int code = -1;
        const auto out = run_cli({"wall", "lookup", "--height", h.str()}, code);
        c.expect(code == 0, "wall lookup exit code at " + h.str());
        if (code != 0)
            continue;
        const auto j = nlohmann::json::parse(out);
        const double g = j["gain_dbi"].get<double>(), b = j["beam_deg"].get<double>();
        c.expect(g == table[k].gain_dbi && b == table[k].beam_deg, "bitwise knot vs embedded table at " + h.str());
        c.expect(g == knots[k][1] && b == knots[k][2], "knot value at " + h.str());
    }
    double prev = -1.0;
    for (int k = 0; k <= 540; ++k)
    {
        const double h = 0.1 * k;
        const double b = wall_law(h).beam_deg;
        c.expect(b >= prev, "beam monotone at " + std::to_string(h));
        if (h >= 32.0)
            c.expect(b == 30.0, "beam clamp at " + std::to_string(h));
        prev = b;
    }
    c.expect(wall_law(80.0).beam_deg == 30.0, "beam clamp beyond the table");
}

// ------------------------------------------------------------------ 2
void catalog_golden(checker &c)
{
    struct row
    {
        int id;
        double steer, g28, peak, hh, he;
    };
    const std::array<row, 12> rows{{{1, 28, 11.1, 11.5, 33, 36.5},
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
    const auto cat = default_catalog();
    c.expect(cat.elements().size() == 12, "twelve elements");
    for (const auto &r : rows)
    {
        const auto &e = cat.element(r.id);
        const std::string id = "element " + std::to_string(r.id);
        c.expect(e.steer_deg == r.steer, id + " steer");
        c.expect(e.gain_28_dbi == r.g28, id + " gain at 28 GHz");
        c.expect(e.peak_gain_dbi == r.peak, id + " peak gain");
        c.expect(e.hpbw_h_deg == r.hh, id + " HPBW H");
        c.expect(e.hpbw_e_deg == r.he, id + " HPBW E");
    }
}

// ------------------------------------------------------------------ 3
void coverage(checker &c)
{
    const auto env = coverage_envelope(default_catalog(), -30.0, 30.0, 0.5);
    c.expect(env.size() == 121, "121 samples");
    double worst = 1e9;
    for (const auto &p : env)
        worst = std::min(worst, p.gain_dbi);
    c.expect(worst >= 8.0, "envelope never below 8 dBi (worst " + std::to_string(worst) + ")");
    c.near(worst, oracle::coverage_min_dbi, 0.05, "worst-point gain vs frozen oracle");
}

// ------------------------------------------------------------------ 4
void capacity(checker &c)
{
    oracle::rng r(2024);
    for (int n = 0; n < 200; ++n)
    {
        const double b = std::pow(10.0, r.uniform(3, 11)), snr = std::pow(10.0, r.uniform(-3, 5));
        const int m = r.integer(1, 16), k = r.integer(1, 16);
        const double v = capacity_bps(b, m, k, snr), ref = oracle::capacity(b, m, k, snr);
        c.expect(std::abs(v - ref) <= 1e-12 * std::abs(ref), "evaluator agreement, tuple " + std::to_string(n));
        c.expect(v == capacity_bps(b, k, m, snr), "M<->K symmetry, tuple " + std::to_string(n));
        c.expect(capacity_bps(b * 1.01, m, k, snr) >= v, "monotone in B");
        c.expect(capacity_bps(b, m, k, snr * 1.01) >= v, "monotone in SNR");
        c.expect(capacity_bps(b, m + 1, k + 1, snr) >= v, "monotone in min(M,K)");
    }
}

// ------------------------------------------------------------------ 5
void diversity_anchors(checker &c)
{
    const auto s = parse_touchstone("# GHz S RI R 50\n28 0.1 0 0.01 0 0.01 0 0.1 0\n", 2);
    c.near(ecc_from_sparams(s, 1, 2, 28.0).rho_e, 4.082e-6, 1e-9, "ECC hand case");
    c.expect(diversity_gain_db(ecc_result::from_linear(0.0)) == 10.0, "DG(0) = 10 dB exactly");

    const auto raw = synthesize_beam(beam_params{}, angle_grid::uniform(), 28.0);
    const auto lossless = offset_gain(raw, -10.0 * std::log10(integrate_sphere(raw)));
    const auto env = propagation_environment::isotropic(1.0);
    c.near(mean_effective_gain_db(lossless, env), -3.01, 0.05, "MEG lossless");
    c.near(mean_effective_gain_db(offset_gain(lossless, 10.0 * std::log10(0.977)), env), -3.11, 0.05, "MEG at 97.7 %");
}

// ------------------------------------------------------------------ 6
std::string s1p(double f0, double df, int n, const std::function<double(double)> &db, const char *fmt)
{
    std::ostringstream o;
    o.precision(17);
    o << "# GHz S " << fmt << " R 50\n";
    for (int k = 0; k < n; ++k)
    {
        const double f = f0 + df * k, d = db(f), ang = 10.0 * k - 40.0;
        const auto z = std::polar(std::pow(10.0, d / 20.0), ang * oracle::d2r);
        o << f << ' ';
        if (std::string(fmt) == "DB")
            o << d << ' ' << ang << '\n';
        else if (std::string(fmt) == "MA")
            o << std::abs(z) << ' ' << ang << '\n';
        else
            o << z.real() << ' ' << z.imag() << '\n';
    }
    return o.str();
}

void sparams_suite(checker &c)
{
    auto band_db = [](double f) {
        if (f <= 27.0)
            return -10.0 + 10.0 * (26.1 - f);
        if (f >= 30.0)
            return -10.0 + 9.0 * (f - 31.0);
        return -19.0 - 2.0 * std::sin((f - 27.0) / 3.0 * oracle::pi);
    };
    const auto s = parse_touchstone(s1p(25.0, 0.2, 36, band_db, "DB"), 1);
    const auto b = bandwidth_below(s, 1);
    c.expect(b.has_value(), "band found");
    if (b)
    {
        c.near(b->f_lo_ghz, 26.1, 1e-9, "lower edge");
        c.near(b->f_hi_ghz, 31.0, 1e-9, "upper edge");
    }

    const auto para = parse_touchstone(s1p(27.03, 0.1, 20, [](double f) { return -20.0 + 50.0 * (f - 28.0) * (f - 28.0); }, "DB"), 1);
    c.near(resonance_freq(para, 1).freq_ghz, 28.0, 1e-9, "parabolic refinement");

    const auto ma = parse_touchstone(s1p(26.0, 0.25, 21, band_db, "MA"), 1);
    const auto db = parse_touchstone(s1p(26.0, 0.25, 21, band_db, "DB"), 1);
    const auto ri = parse_touchstone(s1p(26.0, 0.25, 21, band_db, "RI"), 1);
    for (std::size_t k = 0; k < ri.n_freq(); ++k)
    {
        c.expect(std::abs(ma.at(k, 1, 1) - ri.at(k, 1, 1)) <= 1e-9, "MA vs RI at point " + std::to_string(k));
        c.expect(std::abs(db.at(k, 1, 1) - ri.at(k, 1, 1)) <= 1e-9, "DB vs RI at point " + std::to_string(k));
    }
}

// ------------------------------------------------------------------ 7
void round_trip_one(checker &c, const beam_params &bp, const angle_grid &grid, const std::string &tag)
{
    const auto p = synthesize_beam(bp, grid, 28.0);
    const auto pk = extract_peak(p);
    c.near(pk.gain_dbi, bp.peak_gain_dbi, 0.1, tag + " peak gain");
    c.near(pk.steer_deg, bp.steer_theta_deg, grid.min_theta_step(), tag + " steer");
    c.near(extract_hpbw(p, plane::e), bp.hpbw_e_deg, 0.5, tag + " HPBW E");
    c.near(extract_hpbw(p, plane::h), bp.hpbw_h_deg, 0.5, tag + " HPBW H");
}

void pattern_round_trips(checker &c)
{
    const auto grid = angle_grid::uniform();
    for (const auto &e : default_catalog().elements())
        round_trip_one(c, element_beam_params(e), grid, "element " + std::to_string(e.id));

    oracle::rng r(77);
    for (int n = 0; n < 100; ++n)
    {
        beam_params bp;
        bp.peak_gain_dbi = r.uniform(-5, 25);
        bp.steer_theta_deg = r.uniform(-35, 35);
        bp.hpbw_e_deg = r.uniform(15, 90);
        bp.hpbw_h_deg = r.uniform(15, 90);
        bp.sll_db = r.uniform(-25, -5);
        bp.f2b_db = r.uniform(3, 30);
        round_trip_one(c, bp, grid, "random beam " + std::to_string(n));
    }

    const far_field_pattern iso(grid, 28.0, std::vector<double>(grid.size(), 0.0));
    c.near(integrate_sphere(iso), 1.0, 1e-3, "isotropic integral");
}

// ------------------------------------------------------------------ 8
void switching(checker &c)
{
    const array_patterns bank(default_catalog());
    std::vector<trajectory_sample> sweep;
    for (int k = 0; k < 120; ++k)
        sweep.push_back({0.05 * k, -30.0 + 60.0 * k / 119.0});

    auto run_h = [&](double h) {
        switch_config cfg;
        cfg.hysteresis_db = h;
        return simulate(bank, link_budget{}, sweep, cfg);
    };
    const auto base = run_h(0.0);
    const auto &cat = bank.catalog();
    for (std::size_t k = 1; k < base.size(); ++k)
        c.expect(cat.element(base[k].element_id).steer_deg >= cat.element(base[k - 1].element_id).steer_deg,
                 "monotone element sequence at sample " + std::to_string(k));
    c.expect(base.front().element_id == 2 && base.back().element_id == 1, "sweep starts on -32 deg and ends on +28 deg element");

    std::size_t prev = count_switches(base);
    for (double h : {0.5, 1.0, 2.0, 3.0})
    {
        const std::size_t n = count_switches(run_h(h));
        c.expect(n <= prev, "switch count non-increasing at h = " + std::to_string(h));
        prev = n;
    }

    oracle::rng r(50);
    for (int n = 0; n < 50; ++n)
    {
        std::vector<element_spec> els;
        const int count = r.integer(2, 12);
        for (int id = 1; id <= count; ++id)
        {
            const bool bore = id == 1 || r.uniform(0, 1) < 0.4;
            els.push_back({id, bore ? element_role::boresight : element_role::steered, bore ? 0.0 : r.uniform(3, 54),
                           bore ? 0.0 : r.uniform(-35, 35), r.uniform(7, 13), 0.0, r.uniform(20, 60), r.uniform(20, 60)});
            els.back().peak_gain_dbi = els.back().gain_28_dbi;
        }
        const double offset = r.uniform(-6, 6);
        auto shifted = els;
        for (auto &e : shifted)
            e.gain_28_dbi += offset;
        const array_patterns a{array_catalog(els)}, b{array_catalog(shifted)};
        for (double th = -60.0; th <= 60.0; th += 1.0)
            c.expect(a.best(th).first == b.best(th).first, "argmax invariance, catalog " + std::to_string(n));
    }
}

// ------------------------------------------------------------------ 9
void ecc_patterns(checker &c)
{
    const auto grid = angle_grid::uniform();
    const auto p = with_field(synthesize_beam(beam_params{}, grid, 28.0));
    const auto q = shift_phase_center(p, {0.0, 0.010, 0.0});
    const auto env = propagation_environment::isotropic();
    const double live = oracle::twin_ecc({9.6, 0.0, 36.7, 56.0, -9.2, 6.5}, 0.010, 28.0, 0.25);
    c.near(live, oracle::twin_beam_ecc, 1e-9 * oracle::twin_beam_ecc, "oracle reproduces frozen value");
    c.near(ecc_from_patterns(p, q, env).rho_e, oracle::twin_beam_ecc, 1e-3, "twin-beam ECC vs fine-grid oracle");
    c.near(ecc_from_patterns(p, p, env).rho_e, 1.0, 1e-6, "self-correlation");

    const far_field_pattern th(grid, 28.0, std::vector<double>(grid.size(), 0.0), std::nullopt, polarization::theta);
    const far_field_pattern ph(grid, 28.0, std::vector<double>(grid.size(), 0.0), std::nullopt, polarization::phi);
    c.near(ecc_from_patterns(with_field(th), with_field(ph), env).rho_e, 0.0, 1e-6, "orthogonal polarisations");
}

} // namespace

int main()
{
    struct criterion
    {
        const char *name;
        void (*fn)(checker &);
    };
    const criterion all[] = {{"wall-height table reproduction", wall_table},
                             {"catalog golden values", catalog_golden},
                             {"coverage envelope over +-30 deg", coverage},
                             {"capacity evaluator and properties", capacity},
                             {"diversity anchors", diversity_anchors},
                             {"S-parameter fixture suite", sparams_suite},
                             {"pattern synthesis round trips", pattern_round_trips},
                             {"switching behaviour", switching},
                             {"pattern-route ECC oracle", ecc_patterns}};

    int failed = 0, index = 0;
    for (const auto &cr : all)
    {
        ++index;
        checker c;
        try
        {
            cr.fn(c);
        }
        catch (const std::exception &e)
        {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = c.failures.empty();
        std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", index, cr.name);
        for (const auto &f : c.failures)
            std::printf("       %s\n", f.c_str());
        failed += ok ? 0 : 1;
    }
    std::printf("%d of %d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
