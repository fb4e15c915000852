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

#include "switchbeam/cli.hpp"
#include "switchbeam/arraymodel.hpp"
#include "switchbeam/diversity.hpp"
#include "switchbeam/errors.hpp"
#include "switchbeam/linksim.hpp"
#include "switchbeam/pattern.hpp"
#include "switchbeam/sparams.hpp"
#include "text_util.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <regex>
#include <sstream>

namespace switchbeam::cli
{

namespace
{

using ojson = nlohmann::ordered_json;

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Port count from a .sNp extension
std::size_t ports_from_extension(const std::string &path)
{
    static const std::regex ext(R"(\.[sS]([0-9]+)[pP]$)");
    std::smatch m;
    if (std::regex_search(path, m, ext))
        return static_cast<std::size_t>(std::stoul(m[1].str()));
    throw error("cannot infer the port count from '" + path + "', pass --n-ports");
}

ojson opt_number(const std::optional<double> &v) { return v ? ojson(*v) : ojson(nullptr); }

std::pair<std::size_t, std::size_t> port_pair(const std::vector<std::size_t> &v)
{
    if (v.size() != 2)
        throw argument_error("--ports expects two port numbers, e.g. 1,2");
    return {v[0], v[1]};
}

struct env_options
{
    double xpr = 1.0;
    bool theta_only = false;
    std::optional<double> mean_deg;
    double sigma_deg = 20.0;

    void add_to(CLI::App *app)
    {
        app->add_option("--xpr", xpr, "cross-polarisation ratio, linear")->check(CLI::PositiveNumber);
        app->add_flag("--theta-only", theta_only, "purely theta-polarised environment (XPR -> infinity)");
        app->add_option("--elevation-mean", mean_deg, "Gaussian elevation density mean [deg]; isotropic if omitted");
        app->add_option("--elevation-sigma", sigma_deg, "Gaussian elevation density spread [deg]")->check(CLI::PositiveNumber);
    }

    propagation_environment build() const
    {
        propagation_environment env;
        env.xpr_linear = theta_only ? std::numeric_limits<double>::infinity() : xpr;
        if (mean_deg)
            env.theta_density = env.phi_density = angular_density::gaussian_elevation(*mean_deg, sigma_deg);
        return env;
    }
};

array_catalog load_catalog(const std::string &path)
{
    return path.empty() ? default_catalog() : catalog_from_json(read_file(path));
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Switched-beam mm-wave MIMO antenna modelling", "switchbeam"};
    app.require_subcommand(1);

    std::vector<std::pair<CLI::App *, std::function<void(std::ostream &)>>> commands;
    auto leaf = [&](CLI::App *parent, const std::string &name, const std::string &desc) {
        auto *sub = parent->add_subcommand(name, desc);
        return sub;
    };
    auto emit_json = [](std::ostream &o, const ojson &j) { o << j.dump() << '\n'; };

    // ------------------------------------------------------------ pattern
    auto *pattern_cmd = app.add_subcommand("pattern", "far-field pattern synthesis and statistics");
    pattern_cmd->require_subcommand(1);

    beam_params synth_bp;
    double synth_freq = 28.0, synth_theta_step = 0.5, synth_phi_step = 1.0;
    bool synth_field = false;
    auto *synth = leaf(pattern_cmd, "synth", "synthesise a parametric beam, CSV on stdout");
    synth->add_option("--gain", synth_bp.peak_gain_dbi, "peak gain [dBi]")->capture_default_str();
    synth->add_option("--steer", synth_bp.steer_theta_deg, "H-plane steer angle [deg]")->capture_default_str();
    synth->add_option("--hpbw-e", synth_bp.hpbw_e_deg, "E-plane HPBW [deg]")->capture_default_str();
    synth->add_option("--hpbw-h", synth_bp.hpbw_h_deg, "H-plane HPBW [deg]")->capture_default_str();
    synth->add_option("--sll", synth_bp.sll_db, "side-lobe level [dB, negative]")->capture_default_str();
    synth->add_option("--f2b", synth_bp.f2b_db, "front-to-back ratio [dB]")->capture_default_str();
    synth->add_option("--freq", synth_freq, "frequency [GHz]")->capture_default_str();
    synth->add_option("--theta-step", synth_theta_step, "theta grid step [deg]")->capture_default_str();
    synth->add_option("--phi-step", synth_phi_step, "phi grid step [deg]")->capture_default_str();
    synth->add_flag("--field", synth_field, "include complex field columns");
    commands.emplace_back(synth, [&](std::ostream &o) {
        auto p = synthesize_beam(synth_bp, angle_grid::uniform(synth_theta_step, synth_phi_step), synth_freq);
        if (synth_field)
            p = with_field(p);
        o << save_pattern_csv(p);
    });

    std::string stats_file;
    auto *stats = leaf(pattern_cmd, "stats", "peak, HPBW, SLL, F/B and implied efficiency of a pattern CSV");
    stats->add_option("--pattern", stats_file, "pattern CSV")->required();
    commands.emplace_back(stats, [&](std::ostream &o) {
        const auto p = load_pattern_csv(read_file(stats_file));
        const auto pk = extract_peak(p);
        auto guarded = [](auto &&fn) -> ojson {
            try
            {
                return fn();
            }
            catch (const beam_too_wide_error &)
            {
                return nullptr;
            }
            catch (const coverage_error &)
            {
                return nullptr;
            }
            catch (const range_error &)
            {
                return nullptr;
            }
        };
        ojson j;
        j["freq_ghz"] = p.freq_ghz();
        j["peak_gain_dbi"] = pk.gain_dbi;
        j["peak_theta_deg"] = pk.theta_deg;
        j["peak_phi_deg"] = pk.phi_deg;
        j["steer_deg"] = pk.steer_deg;
        j["hpbw_e_deg"] = guarded([&] { return ojson(extract_hpbw(p, plane::e)); });
        j["hpbw_h_deg"] = guarded([&] { return ojson(extract_hpbw(p, plane::h)); });
        j["sll_e_db"] = guarded([&] { return opt_number(extract_sll(p, plane::e)); });
        j["sll_h_db"] = guarded([&] { return opt_number(extract_sll(p, plane::h)); });
        j["f2b_db"] = guarded([&] { return ojson(extract_f2b(p)); });
        j["implied_efficiency"] = guarded([&] { return ojson(integrate_sphere(p)); });
        emit_json(o, j);
    });

    // ------------------------------------------------------------ sparams
    auto *sparams_cmd = app.add_subcommand("sparams", "Touchstone S-parameter analysis");
    sparams_cmd->require_subcommand(1);

    std::string ts_file;
    std::size_t ts_nports = 0;
    auto load_sweep = [&]() { return parse_touchstone(read_file(ts_file), ts_nports ? ts_nports : ports_from_extension(ts_file)); };
    auto add_ts = [&](CLI::App *sub) {
        sub->add_option("--touchstone", ts_file, "Touchstone v1 file (.sNp)")->required();
        sub->add_option("--n-ports", ts_nports, "port count (default: from the file extension)");
    };

    auto *sp_parse = leaf(sparams_cmd, "parse", "normalise a Touchstone file to '# GHz S RI R <z0>'");
    add_ts(sp_parse);
    commands.emplace_back(sp_parse, [&](std::ostream &o) { o << write_touchstone(load_sweep()); });

    std::size_t bw_port = 1;
    double bw_threshold = -10.0;
    auto *sp_bw = leaf(sparams_cmd, "bandwidth", "band where |S_pp| stays below the threshold, plus resonance");
    add_ts(sp_bw);
    sp_bw->add_option("--port", bw_port, "port number")->capture_default_str();
    sp_bw->add_option("--threshold", bw_threshold, "threshold [dB]")->capture_default_str();
    commands.emplace_back(sp_bw, [&](std::ostream &o) {
        const auto s = load_sweep();
        const auto b = bandwidth_below(s, bw_port, bw_threshold);
        const auto r = resonance_freq(s, bw_port);
        ojson j;
        j["port"] = bw_port;
        j["threshold_db"] = bw_threshold;
        j["f_lo_ghz"] = b ? ojson(b->f_lo_ghz) : ojson(nullptr);
        j["f_hi_ghz"] = b ? ojson(b->f_hi_ghz) : ojson(nullptr);
        j["bandwidth_ghz"] = b ? ojson(b->width_ghz()) : ojson(nullptr);
        j["resonance_ghz"] = r.freq_ghz;
        j["resonance_db"] = r.s_db;
        j["resonance_at_edge"] = r.at_edge;
        emit_json(o, j);
    });

    std::vector<std::size_t> iso_ports;
    double iso_freq = 28.0;
    auto *sp_iso = leaf(sparams_cmd, "isolation", "20 log10 |S_ij| at one frequency");
    add_ts(sp_iso);
    sp_iso->add_option("--ports", iso_ports, "port pair i,j")->required()->delimiter(',');
    sp_iso->add_option("--freq", iso_freq, "frequency [GHz]")->capture_default_str();
    commands.emplace_back(sp_iso, [&](std::ostream &o) {
        const auto [i, j] = port_pair(iso_ports);
        emit_json(o, ojson{{"isolation_db", isolation_db(load_sweep(), i, j, iso_freq)}});
    });

    // ---------------------------------------------------------- diversity
    auto *div_cmd = app.add_subcommand("diversity", "envelope correlation, diversity gain, MEG");
    div_cmd->require_subcommand(1);

    std::vector<std::size_t> eccs_ports;
    double eccs_freq = 28.0;
    auto *ecc_s = leaf(div_cmd, "ecc-s", "envelope correlation from S-parameters");
    add_ts(ecc_s);
    ecc_s->add_option("--ports", eccs_ports, "port pair i,j")->required()->delimiter(',');
    ecc_s->add_option("--freq", eccs_freq, "frequency [GHz]")->capture_default_str();
    auto emit_ecc = [&](std::ostream &o, const ecc_result &r) { emit_json(o, ojson{{"rho_e", r.rho_e}, {"rho_e_db", r.rho_e_db}}); };
    commands.emplace_back(ecc_s, [&](std::ostream &o) {
        const auto [i, j] = port_pair(eccs_ports);
        emit_ecc(o, ecc_from_sparams(load_sweep(), i, j, eccs_freq));
    });

    std::string eccp_a, eccp_b;
    env_options eccp_env;
    auto *ecc_p = leaf(div_cmd, "ecc-p", "envelope correlation from two complex far-field patterns");
    ecc_p->add_option("--pattern1", eccp_a, "first pattern CSV with field columns")->required();
    ecc_p->add_option("--pattern2", eccp_b, "second pattern CSV with field columns")->required();
    eccp_env.add_to(ecc_p);
    commands.emplace_back(ecc_p, [&](std::ostream &o) {
        emit_ecc(o, ecc_from_patterns(load_pattern_csv(read_file(eccp_a)), load_pattern_csv(read_file(eccp_b)), eccp_env.build()));
    });

    double edg_rho = 0.0, edg_eff = 1.0;
    auto *edg = leaf(div_cmd, "edg", "diversity gain and effective diversity gain");
    edg->add_option("--rho-e", edg_rho, "envelope correlation, linear")->required()->check(CLI::Range(0.0, 1.0));
    edg->add_option("--efficiency", edg_eff, "radiation efficiency, linear")->capture_default_str();
    commands.emplace_back(edg, [&](std::ostream &o) {
        const auto r = ecc_result::from_linear(edg_rho);
        ojson j;
        j["diversity_gain_db"] = diversity_gain_db(r);
        j["edg_db"] = effective_diversity_gain_db(r, edg_eff);
        emit_json(o, j);
    });

    std::string meg_file;
    env_options meg_env;
    auto *meg = leaf(div_cmd, "meg", "mean effective gain of a pattern");
    meg->add_option("--pattern", meg_file, "pattern CSV (field columns or polarization tag)")->required();
    meg_env.add_to(meg);
    commands.emplace_back(meg, [&](std::ostream &o) {
        emit_json(o, ojson{{"meg_db", mean_effective_gain_db(load_pattern_csv(read_file(meg_file)), meg_env.build())}});
    });

    // --------------------------------------------------------------- wall
    auto *wall_cmd = app.add_subcommand("wall", "wall-height steering law");
    wall_cmd->require_subcommand(1);
    double wall_h = 0.0;
    auto *lookup = leaf(wall_cmd, "lookup", "beam direction and gain for a wall height");
    lookup->add_option("--height", wall_h, "wall height [mm]")->required();
    commands.emplace_back(lookup, [&](std::ostream &o) {
        const auto r = wall_law(wall_h);
        emit_json(o, ojson{{"beam_deg", r.beam_deg}, {"gain_dbi", r.gain_dbi}});
    });

    // -------------------------------------------------------------- array
    auto *array_cmd = app.add_subcommand("array", "element catalog and coverage");
    array_cmd->require_subcommand(1);

    std::string cat_file;
    auto *cat = leaf(array_cmd, "catalog", "print the element catalog as JSON");
    cat->add_option("--catalog", cat_file, "catalog JSON to validate and re-emit (default: built-in)");
    commands.emplace_back(cat, [&](std::ostream &o) { o << catalog_to_json(load_catalog(cat_file)); });

    std::string cov_cat;
    double cov_from = -30.0, cov_to = 30.0, cov_step = 0.5;
    auto *cov = leaf(array_cmd, "coverage", "best element and gain across the H-plane, CSV");
    cov->add_option("--catalog", cov_cat, "catalog JSON (default: built-in)");
    cov->add_option("--from", cov_from, "start angle [deg]")->capture_default_str();
    cov->add_option("--to", cov_to, "end angle [deg]")->capture_default_str();
    cov->add_option("--step", cov_step, "step [deg]")->capture_default_str();
    commands.emplace_back(cov, [&](std::ostream &o) {
        const auto env = coverage_envelope(load_catalog(cov_cat), cov_from, cov_to, cov_step);
        o << "theta_deg,element_id,gain_dbi\n";
        for (const auto &c : env)
            o << detail::format_double(c.theta_deg) << ',' << c.element_id << ',' << detail::format_double(c.gain_dbi) << '\n';
    });

    double slot_len = 6.5, slot_k = default_slot_k_eff;
    auto *slot = leaf(array_cmd, "slot-resonance", "half-wave slot resonance estimate");
    slot->add_option("--slot-length", slot_len, "slot length [mm]")->capture_default_str();
    slot->add_option("--k-eff", slot_k, "effective-length factor")->capture_default_str();
    commands.emplace_back(slot, [&](std::ostream &o) { emit_json(o, ojson{{"resonance_ghz", slot_resonance_ghz(slot_len, slot_k)}}); });

    // --------------------------------------------------------------- link
    auto *link_cmd = app.add_subcommand("link", "link budget, capacity and switching simulation");
    link_cmd->require_subcommand(1);

    double cap_b = 0.0, cap_snr_db = 0.0;
    int cap_m = 1, cap_k = 1;
    auto *capacity = leaf(link_cmd, "capacity", "C = B min(M, K) log2(1 + SNR)");
    capacity->add_option("--bandwidth", cap_b, "bandwidth [Hz]")->required();
    capacity->add_option("--m", cap_m, "transmit antennas")->capture_default_str();
    capacity->add_option("--k", cap_k, "receive antennas")->capture_default_str();
    capacity->add_option("--snr-db", cap_snr_db, "SNR [dB]")->required();
    commands.emplace_back(capacity, [&](std::ostream &o) {
        emit_json(o, ojson{{"capacity_bps", capacity_bps(cap_b, cap_m, cap_k, std::pow(10.0, cap_snr_db / 10.0))}});
    });

    double fspl_f = 28.0, fspl_d = 100.0;
    auto *fspl = leaf(link_cmd, "fspl", "free-space path loss");
    fspl->add_option("--freq", fspl_f, "frequency [GHz]")->capture_default_str();
    fspl->add_option("--distance", fspl_d, "distance [m]")->capture_default_str();
    commands.emplace_back(fspl, [&](std::ostream &o) { emit_json(o, ojson{{"fspl_db", fspl_db(fspl_f, fspl_d)}}); });

    std::string snr_budget;
    double snr_gain = 0.0;
    auto *snr = leaf(link_cmd, "snr", "SNR of a link budget for a given transmit gain");
    snr->add_option("--budget", snr_budget, "link budget JSON")->required();
    snr->add_option("--tx-gain", snr_gain, "transmit antenna gain [dBi]")->required();
    commands.emplace_back(snr, [&](std::ostream &o) {
        const auto b = budget_from_json(read_file(snr_budget));
        ojson j;
        j["fspl_db"] = fspl_db(b.freq_ghz, b.distance_m);
        j["noise_floor_dbm"] = noise_floor_dbm(b.temperature_k, b.bandwidth_hz, b.noise_figure_db);
        j["snr_db"] = snr_db(b, snr_gain);
        emit_json(o, j);
    });

    std::string sim_traj, sim_budget, sim_switch, sim_cat;
    auto *sim = leaf(link_cmd, "simulate", "element switching along a user trajectory, CSV");
    sim->add_option("--trajectory", sim_traj, "trajectory CSV (t_s,theta_deg)")->required();
    sim->add_option("--budget", sim_budget, "link budget JSON")->required();
    sim->add_option("--switch", sim_switch, "switch config JSON (default: 1 dB hysteresis, no dwell, 1x1)");
    sim->add_option("--catalog", sim_cat, "catalog JSON (default: built-in)");
    commands.emplace_back(sim, [&](std::ostream &o) {
        const auto traj = load_trajectory_csv(read_file(sim_traj));
        const auto budget = budget_from_json(read_file(sim_budget));
        const auto cfg = sim_switch.empty() ? switch_config{} : switch_config_from_json(read_file(sim_switch));
        o << save_records_csv(simulate(array_patterns(load_catalog(sim_cat)), budget, traj, cfg));
    });

    // ------------------------------------------------------------- dispatch
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (const CLI::ParseError &e)
    {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
        {
            app.exit(e, out, err);
            return exit_ok;
        }
        std::ostringstream sink;
        app.exit(e, sink, err);
        return exit_usage_error;
    }

    for (auto &[sub, fn] : commands)
    {
        if (!sub->parsed())
            continue;
        std::ostringstream payload;
        try
        {
            fn(payload);
        }
        catch (const std::exception &e)
        {
            err << "error: " << e.what() << '\n';
            return exit_domain_error;
        }
        out << payload.str();
        return exit_ok;
    }
    err << app.help();
    return exit_usage_error;
}

} // namespace switchbeam::cli
