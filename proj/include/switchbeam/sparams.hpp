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

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace switchbeam
{

using cdouble = std::complex<double>;

// Frequency-swept scattering matrix, linear complex values.
// Ports are numbered 1..n_ports everywhere in the public API.
class sweep_smatrix
{
public:
    // s holds one row-major n x n block per frequency point.
    sweep_smatrix(std::vector<double> freq_ghz, std::size_t n_ports, std::vector<cdouble> s, double z0_ohm = 50.0);

    std::size_t n_ports() const noexcept { return n_; }
    std::size_t n_freq() const noexcept { return freq_.size(); }
    const std::vector<double> &freq_ghz() const noexcept { return freq_; }
    double z0_ohm() const noexcept { return z0_; }

    // S_ij at sweep index k
    cdouble at(std::size_t k, std::size_t i, std::size_t j) const;

    // Full matrix at an arbitrary frequency, linear interpolation of the complex entries.
    // Throws range_error outside the sweep.
    std::vector<cdouble> interpolate(double f_ghz) const;

    // Same, single entry.
    cdouble interpolate(double f_ghz, std::size_t i, std::size_t j) const;

    // |S_pp| in dB at every sweep point.
    std::vector<double> reflection_db(std::size_t port) const;

    std::size_t flat(std::size_t i, std::size_t j) const { return (i - 1) * n_ + (j - 1); }

private:
    void check_port(std::size_t p) const;

    std::vector<double> freq_;
    std::size_t n_;
    std::vector<cdouble> s_;
    double z0_;
};

// Touchstone v1. Option line "# <Hz|kHz|MHz|GHz> S <MA|DB|RI> R <z0>", '!' comments,
// 2-port data in S11 S21 S12 S22 order, larger networks row-major with at most four
// complex values per line. Throws parse_error with the offending line number.
sweep_smatrix parse_touchstone(std::string_view text, std::size_t n_ports);

// Canonical "# GHz S RI R <z0>" form that parse_touchstone reads back losslessly.
std::string write_touchstone(const sweep_smatrix &s);

// 20 log10 |S_ij| at f_ghz.
double isolation_db(const sweep_smatrix &s, std::size_t i, std::size_t j, double f_ghz);

struct band
{
    double f_lo_ghz;
    double f_hi_ghz;
    double width_ghz() const { return f_hi_ghz - f_lo_ghz; }
};

// Widest contiguous range with |S_pp| <= threshold_db; edges interpolated linearly in dB.
// nullopt when the reflection never reaches the threshold.
std::optional<band> bandwidth_below(const sweep_smatrix &s, std::size_t port, double threshold_db = -10.0);

struct resonance
{
    double freq_ghz;
    double s_db;
    bool at_edge; // minimum sits on the first or last sweep point, no refinement applied
};

// Global minimum of |S_pp| with a three-point parabolic refinement in dB.
resonance resonance_freq(const sweep_smatrix &s, std::size_t port);

} // namespace switchbeam
