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

#include "switchbeam/arraymodel.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace switchbeam
{

inline constexpr double boltzmann = 1.380649e-23;

struct link_budget
{
    double freq_ghz = 28.0;
    double distance_m = 100.0;
    double tx_power_dbm = 30.0;
    double bandwidth_hz = 850e6;
    double noise_figure_db = 7.0;
    double temperature_k = 290.0;
    double misc_loss_db = 0.0; // atmospheric, rain, body loss, ...
    double rx_gain_dbi = 0.0;

    void validate() const;
};

// 20 log10(4 pi d f / c)
double fspl_db(double freq_ghz, double distance_m);

// 10 log10(k T B * 1000) + NF, in dBm
double noise_floor_dbm(double temperature_k, double bandwidth_hz, double noise_figure_db);

double snr_db(const link_budget &b, double tx_gain_dbi);

// C = B min(M, K) log2(1 + SNR), bit/s
double capacity_bps(double bandwidth_hz, int m_tx, int k_rx, double snr_linear);

// ------------------------------------------------------- switch controller

struct switch_config
{
    double hysteresis_db = 1.0;
    int min_dwell_steps = 0;
    int m_tx = 1;
    int k_rx = 1;

    void validate() const;
};

// Mutable state of one controller. Callers own the value and serialise updates.
struct switch_state
{
    std::optional<int> current_element_id; // empty before the first decision
    double hysteresis_db = 1.0;
    int min_dwell_steps = 0;
    int steps_since_switch = 0;

    static switch_state from_config(const switch_config &cfg, std::optional<int> initial = std::nullopt);
};

struct selection
{
    switch_state state;
    int element_id;
    bool switched; // true only for a change away from an existing element
};

// One controller step. The candidate is the argmax element at the user angle (lowest id on
// ties). A switch happens when the candidate differs from the current element, beats it by
// at least hysteresis_db and steps_since_switch >= min_dwell_steps. An empty state adopts
// the candidate directly.
selection select_element(const array_patterns &bank, const switch_state &state, double user_theta_deg);
selection select_element(const array_catalog &cat, const switch_state &state, double user_theta_deg);

// ------------------------------------------------------------- simulation

struct trajectory_sample
{
    double t_s;
    double theta_deg;
};

struct sim_record
{
    double t_s;
    double theta_deg; // angle actually evaluated (after clamping)
    int element_id;
    double tx_gain_dbi;
    double snr_db;
    double capacity_bps;
    bool clamped;
};

// User angles are limited to the array's front half-space, [-90, 90] degrees.
inline constexpr double max_user_theta_deg = 90.0;

std::vector<sim_record> simulate(const array_patterns &bank, const link_budget &budget, const std::vector<trajectory_sample> &trajectory,
                                 const switch_config &cfg);

std::size_t count_switches(const std::vector<sim_record> &records);

// File formats: trajectory CSV "t_s,theta_deg", record CSV
// "t_s,theta_deg,element_id,tx_gain_dbi,snr_db,capacity_bps,clamped", JSON objects keyed by
// the struct field names.
std::vector<trajectory_sample> load_trajectory_csv(std::string_view text);
std::string save_records_csv(const std::vector<sim_record> &records);
link_budget budget_from_json(std::string_view text);
std::string budget_to_json(const link_budget &b);
switch_config switch_config_from_json(std::string_view text);
std::string switch_config_to_json(const switch_config &c);

} // namespace switchbeam
