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

#include "switchbeam/linksim.hpp"
#include "switchbeam/errors.hpp"
#include "text_util.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace switchbeam
{

namespace
{

constexpr double speed_of_light = 299792458.0;

nlohmann::json parse_object(std::string_view text, const char *what)
{
    nlohmann::json doc;
    try
    {
        doc = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error &e)
    {
        throw parse_error(0, std::string(what) + " JSON: " + e.what());
    }
    if (!doc.is_object())
        throw parse_error(0, std::string(what) + " JSON must be an object");
    return doc;
}

// Copies numeric members into the referenced fields; unknown keys are rejected.
void read_fields(const nlohmann::json &doc, const char *what, const std::map<std::string, double *> &fields)
{
    for (const auto &[key, value] : doc.items())
    {
        auto it = fields.find(key);
        if (it == fields.end())
            throw parse_error(0, std::string(what) + ": unknown field '" + key + "'");
        if (!value.is_number())
            throw parse_error(0, std::string(what) + ": field '" + key + "' must be numeric");
        *it->second = value.get<double>();
    }
}

int as_count(double v, const char *name)
{
    if (!std::isfinite(v) || v != std::floor(v) || std::abs(v) > 1e9)
        throw parse_error(0, std::string("switch config: '") + name + "' must be an integer");
    return static_cast<int>(v);
}

} // namespace

void link_budget::validate() const
{
    for (double v : {freq_ghz, distance_m, tx_power_dbm, bandwidth_hz, noise_figure_db, temperature_k, misc_loss_db, rx_gain_dbi})
        if (!std::isfinite(v))
            throw parameter_error("link budget fields must be finite");
    if (!(freq_ghz > 0.0) || !(distance_m > 0.0) || !(bandwidth_hz > 0.0) || !(temperature_k > 0.0))
        throw parameter_error("frequency, distance, bandwidth and temperature must be positive");
}

double fspl_db(double freq_ghz, double distance_m)
{
    if (!(freq_ghz > 0.0) || !(distance_m > 0.0) || !std::isfinite(freq_ghz) || !std::isfinite(distance_m))
        throw argument_error("frequency and distance must be positive");
    return 20.0 * std::log10(4.0 * std::numbers::pi * distance_m * freq_ghz * 1e9 / speed_of_light);
}

double noise_floor_dbm(double temperature_k, double bandwidth_hz, double noise_figure_db)
{
    if (!(temperature_k > 0.0) || !(bandwidth_hz > 0.0))
        throw argument_error("temperature and bandwidth must be positive");
    return 10.0 * std::log10(boltzmann * temperature_k * bandwidth_hz * 1000.0) + noise_figure_db;
}

double snr_db(const link_budget &b, double tx_gain_dbi)
{
    b.validate();
    return b.tx_power_dbm + tx_gain_dbi + b.rx_gain_dbi - fspl_db(b.freq_ghz, b.distance_m) - b.misc_loss_db -
           noise_floor_dbm(b.temperature_k, b.bandwidth_hz, b.noise_figure_db);
}

double capacity_bps(double bandwidth_hz, int m_tx, int k_rx, double snr_linear)
{
    if (!(bandwidth_hz > 0.0) || m_tx < 1 || k_rx < 1 || !(snr_linear >= 0.0))
        throw argument_error("capacity needs B > 0, M, K >= 1 and SNR >= 0");
    return bandwidth_hz * static_cast<double>(std::min(m_tx, k_rx)) * std::log2(1.0 + snr_linear);
}

// ------------------------------------------------------- switch controller

void switch_config::validate() const
{
    if (!(hysteresis_db >= 0.0) || !std::isfinite(hysteresis_db))
        throw parameter_error("hysteresis_db must be >= 0");
    if (min_dwell_steps < 0)
        throw parameter_error("min_dwell_steps must be >= 0");
    if (m_tx < 1 || k_rx < 1)
        throw parameter_error("m_tx and k_rx must be >= 1");
}

switch_state switch_state::from_config(const switch_config &cfg, std::optional<int> initial)
{
    cfg.validate();
    return {initial, cfg.hysteresis_db, cfg.min_dwell_steps, 0};
}

selection select_element(const array_patterns &bank, const switch_state &state, double user_theta_deg)
{
    if (!(state.hysteresis_db >= 0.0) || state.min_dwell_steps < 0 || state.steps_since_switch < 0)
        throw argument_error("switch state counters must be non-negative");
    const auto [cand, cand_gain] = bank.best(user_theta_deg);

    switch_state next = state;
    if (!state.current_element_id)
    {
        next.current_element_id = cand;
        next.steps_since_switch = 0;
        return {next, cand, false};
    }

    const int cur = *state.current_element_id;
    if (!bank.catalog().contains(cur))
        throw argument_error("current element " + std::to_string(cur) + " not in catalog");
    const double cur_gain = bank.gain(cur, user_theta_deg);

    if (cand != cur && cand_gain - cur_gain >= state.hysteresis_db && state.steps_since_switch >= state.min_dwell_steps)
    {
        next.current_element_id = cand;
        next.steps_since_switch = 0;
        return {next, cand, true};
    }
    next.steps_since_switch = state.steps_since_switch + 1;
    return {next, cur, false};
}

selection select_element(const array_catalog &cat, const switch_state &state, double user_theta_deg)
{
    return select_element(array_patterns(cat), state, user_theta_deg);
}

// ------------------------------------------------------------- simulation

std::vector<sim_record> simulate(const array_patterns &bank, const link_budget &budget, const std::vector<trajectory_sample> &trajectory,
                                 const switch_config &cfg)
{
    budget.validate();
    cfg.validate();
    if (trajectory.empty())
        throw argument_error("trajectory is empty");
    for (std::size_t k = 0; k < trajectory.size(); ++k)
    {
        if (!std::isfinite(trajectory[k].t_s) || !std::isfinite(trajectory[k].theta_deg))
            throw argument_error("trajectory values must be finite");
        if (k > 0 && !(trajectory[k].t_s > trajectory[k - 1].t_s))
            throw argument_error("trajectory time must be strictly increasing");
    }

    std::vector<sim_record> out;
    out.reserve(trajectory.size());
    switch_state state = switch_state::from_config(cfg);
    for (const auto &s : trajectory)
    {
        const double th = std::clamp(s.theta_deg, -max_user_theta_deg, max_user_theta_deg);
        const bool clamped = th != s.theta_deg;
        const auto sel = select_element(bank, state, th);
        state = sel.state;
        const double g = bank.gain(sel.element_id, th);
        const double snr = snr_db(budget, g);
        const double cap = capacity_bps(budget.bandwidth_hz, cfg.m_tx, cfg.k_rx, std::pow(10.0, snr / 10.0));
        out.push_back({s.t_s, th, sel.element_id, g, snr, cap, clamped});
    }
    return out;
}

std::size_t count_switches(const std::vector<sim_record> &records)
{
    std::size_t n = 0;
    for (std::size_t k = 1; k < records.size(); ++k)
        if (records[k].element_id != records[k - 1].element_id)
            ++n;
    return n;
}

// ---------------------------------------------------------------- file I/O

std::vector<trajectory_sample> load_trajectory_csv(std::string_view text)
{
    const auto rows = detail::lines(text);
    std::vector<trajectory_sample> out;
    bool header = false;
    for (std::size_t r = 0; r < rows.size(); ++r)
    {
        const std::size_t line_no = r + 1;
        const auto line = detail::trim(rows[r]);
        if (line.empty() || line.front() == '#')
            continue;
        if (!header)
        {
            if (line != "t_s,theta_deg")
                throw parse_error(line_no, "expected header 't_s,theta_deg'");
            header = true;
            continue;
        }
        const auto cells = detail::split(line, ',');
        if (cells.size() != 2)
            throw parse_error(line_no, "expected 2 columns");
        auto t = detail::parse_double(cells[0]);
        auto th = detail::parse_double(cells[1]);
        if (!t || !th || !std::isfinite(*t) || !std::isfinite(*th))
            throw parse_error(line_no, "malformed number");
        if (!out.empty() && !(*t > out.back().t_s))
            throw parse_error(line_no, "time not strictly increasing");
        out.push_back({*t, *th});
    }
    if (!header)
        throw parse_error(rows.size(), "missing header");
    if (out.empty())
        throw parse_error(rows.size(), "trajectory has no samples");
    return out;
}

std::string save_records_csv(const std::vector<sim_record> &records)
{
    std::string out = "t_s,theta_deg,element_id,tx_gain_dbi,snr_db,capacity_bps,clamped\n";
    for (const auto &r : records)
    {
        out += detail::format_double(r.t_s) + ',' + detail::format_double(r.theta_deg) + ',' + std::to_string(r.element_id) + ',' +
               detail::format_double(r.tx_gain_dbi) + ',' + detail::format_double(r.snr_db) + ',' + detail::format_double(r.capacity_bps) +
               ',' + (r.clamped ? "1" : "0") + '\n';
    }
    return out;
}

link_budget budget_from_json(std::string_view text)
{
    const auto doc = parse_object(text, "link budget");
    link_budget b;
    read_fields(doc, "link budget",
                {{"freq_ghz", &b.freq_ghz},
                 {"distance_m", &b.distance_m},
                 {"tx_power_dbm", &b.tx_power_dbm},
                 {"bandwidth_hz", &b.bandwidth_hz},
                 {"noise_figure_db", &b.noise_figure_db},
                 {"temperature_k", &b.temperature_k},
                 {"misc_loss_db", &b.misc_loss_db},
                 {"rx_gain_dbi", &b.rx_gain_dbi}});
    b.validate();
    return b;
}

std::string budget_to_json(const link_budget &b)
{
    nlohmann::ordered_json o;
    o["freq_ghz"] = b.freq_ghz;
    o["distance_m"] = b.distance_m;
    o["tx_power_dbm"] = b.tx_power_dbm;
    o["bandwidth_hz"] = b.bandwidth_hz;
    o["noise_figure_db"] = b.noise_figure_db;
    o["temperature_k"] = b.temperature_k;
    o["misc_loss_db"] = b.misc_loss_db;
    o["rx_gain_dbi"] = b.rx_gain_dbi;
    return o.dump();
}

switch_config switch_config_from_json(std::string_view text)
{
    const auto doc = parse_object(text, "switch config");
    switch_config c;
    double dwell = c.min_dwell_steps, m = c.m_tx, k = c.k_rx;
    read_fields(doc, "switch config", {{"hysteresis_db", &c.hysteresis_db}, {"min_dwell_steps", &dwell}, {"m_tx", &m}, {"k_rx", &k}});
    c.min_dwell_steps = as_count(dwell, "min_dwell_steps");
    c.m_tx = as_count(m, "m_tx");
    c.k_rx = as_count(k, "k_rx");
    c.validate();
    return c;
}

std::string switch_config_to_json(const switch_config &c)
{
    nlohmann::ordered_json o;
    o["hysteresis_db"] = c.hysteresis_db;
    o["min_dwell_steps"] = c.min_dwell_steps;
    o["m_tx"] = c.m_tx;
    o["k_rx"] = c.k_rx;
    return o.dump();
}

} // namespace switchbeam
