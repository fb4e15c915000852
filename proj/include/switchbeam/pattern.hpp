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

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace switchbeam
{

// Coordinate convention used throughout the library:
//   boresight = theta 0 (+z)
//   E-plane   = x-z plane (phi = 0 / 180)
//   H-plane   = y-z plane (phi = 90 / 270)
// A signed H-plane angle s maps to (theta = |s|, phi = 90) for s >= 0 and to
// (theta = |s|, phi = 270) for s < 0.

// Spherical sampling grid, angles in degrees.
class angle_grid
{
public:
    // Throws parameter_error unless both axes are strictly increasing, have at least
    // two samples, theta lies in [0, 180] and phi in [0, 360).
    angle_grid(std::vector<double> theta_deg, std::vector<double> phi_deg);

    // Full sphere: theta 0..180 inclusive, phi 0..360 exclusive.
    static angle_grid uniform(double theta_step_deg = 0.5, double phi_step_deg = 1.0);

    // Only the H-plane half cuts phi = 90 and phi = 270; enough for H-plane evaluation.
    static angle_grid h_plane(double theta_step_deg = 0.5);

    std::span<const double> theta() const noexcept { return theta_; }
    std::span<const double> phi() const noexcept { return phi_; }
    std::size_t n_theta() const noexcept { return theta_.size(); }
    std::size_t n_phi() const noexcept { return phi_.size(); }
    std::size_t size() const noexcept { return theta_.size() * phi_.size(); }
    std::size_t index(std::size_t i_theta, std::size_t i_phi) const noexcept { return i_theta * phi_.size() + i_phi; }

    double min_theta_step() const;

    // True if theta covers [0, 180] and phi_periodic().
    bool full_sphere() const;

    // Phi axis closes the period (three or more samples, wrap gap no wider than the widest
    // step); interpolation may wrap across 360.
    bool phi_periodic() const;

    bool operator==(const angle_grid &) const = default;

private:
    std::vector<double> theta_;
    std::vector<double> phi_;
};

enum class polarization
{
    unspecified,
    theta,
    phi
};

struct field_sample
{
    std::complex<double> e_theta;
    std::complex<double> e_phi;
};

// Realized gain sampled on an angle_grid at one frequency, row-major with theta outer.
// Optionally carries the complex far field; when present |E_theta|^2 + |E_phi|^2 is
// proportional to linear gain with one positive constant over the grid.
class far_field_pattern
{
public:
    far_field_pattern(angle_grid grid, double freq_ghz, std::vector<double> gain_dbi,
                      std::optional<std::vector<field_sample>> field = std::nullopt,
                      polarization pol = polarization::unspecified);

    const angle_grid &grid() const noexcept { return grid_; }
    double freq_ghz() const noexcept { return freq_ghz_; }
    std::span<const double> gain_dbi() const noexcept { return gain_dbi_; }
    double gain_dbi(std::size_t i_theta, std::size_t i_phi) const noexcept { return gain_dbi_[grid_.index(i_theta, i_phi)]; }

    bool has_field() const noexcept { return field_.has_value(); }
    std::span<const field_sample> field() const; // throws data_error when absent

    // Polarisation tag for single-polarised patterns without a field.
    polarization pol() const noexcept { return pol_; }

    // Linear realized gain split into theta and phi parts. Uses the field when present,
    // otherwise the polarisation tag. Throws data_error if neither is available.
    std::vector<double> gain_theta_linear() const;
    std::vector<double> gain_phi_linear() const;

private:
    angle_grid grid_;
    double freq_ghz_;
    std::vector<double> gain_dbi_;
    std::optional<std::vector<field_sample>> field_;
    polarization pol_;
};

// Parametric beam descriptor. Steer is a signed tilt inside the H-plane (positive towards +y).
struct beam_params
{
    double peak_gain_dbi = 9.6;
    double steer_theta_deg = 0.0;
    double hpbw_e_deg = 36.7;
    double hpbw_h_deg = 56.0;
    double sll_db = -9.2;
    double f2b_db = 6.5;

    // Throws parameter_error on a domain violation. A zero or sub-sample HPBW is left to
    // the resolution check in synthesize_beam.
    void validate() const;
};

// Closed-form beam model evaluated at an arbitrary direction, in dBi.
//
// In the beam frame (H-plane rotation that moves the steer direction to +z) with off-axis
// angle psi and azimuth alpha measured from the E-plane:
//   main = G0 * 2^-( (2 psi cos(alpha)/HPBW_E)^2 + (2 psi sin(alpha)/HPBW_H)^2 )
//   ring = G0 * 10^(SLL/10)  * 2^-( 2 (psi - psi_s)/(HPBW(alpha)/2) )^2,  psi_s = min(1.5 HPBW(alpha), 75)
//   back = G0 * 10^(-F2B/10) * 2^-( 2 (180 - psi)/HPBW(alpha) )^2
//   gain = max(main, ring, back, G0 * 1e-10)
// with HPBW(alpha) = (cos^2(alpha)/HPBW_E^2 + sin^2(alpha)/HPBW_H^2)^-1/2.
// Main lobe, side-lobe maximum and back-lobe maximum therefore sit exactly at peak,
// peak + SLL and peak - F2B.
double beam_gain_dbi(const beam_params &params, double theta_deg, double phi_deg);

// Samples beam_gain_dbi on the grid. The result is tagged theta-polarised and carries no
// field. Throws parameter_error for invalid params, resolution_error when fewer than three
// theta samples fall inside either HPBW.
far_field_pattern synthesize_beam(const beam_params &params, const angle_grid &grid, double freq_ghz);

// Attaches a zero-phase real field derived from the gain and polarisation tag.
far_field_pattern with_field(const far_field_pattern &p);

// Moves the phase centre by offset_m (x, y, z in metres): field *= exp(j k r_hat . d).
far_field_pattern shift_phase_center(const far_field_pattern &p, const std::array<double, 3> &offset_m);

// Adds offset_db to every sample (field scaled accordingly).
far_field_pattern offset_gain(const far_field_pattern &p, double offset_db);

// Bilinear interpolation in linear power. Exact at nodes. Throws range_error outside the hull.
double gain_at(const far_field_pattern &p, double theta_deg, double phi_deg);

// Gain on the H-plane at a signed angle.
double gain_at_h_plane(const far_field_pattern &p, double signed_theta_deg);

// Trapezoid weights sin(theta) dtheta dphi (steradian) per grid node; sum is ~4 pi.
// Throws coverage_error if the grid is not a full sphere.
std::vector<double> sphere_weights(const angle_grid &grid);

// (1/4pi) * integral of linear gain over the sphere: radiation efficiency times mismatch
// factor for a realized-gain pattern.
double integrate_sphere(const far_field_pattern &p);

struct beam_peak
{
    double gain_dbi;
    double theta_deg;
    double phi_deg;
    double steer_deg; // signed angle of the peak inside the y-z plane
};

// Global maximum over the grid; ties resolve to the first node in row-major order.
beam_peak extract_peak(const far_field_pattern &p);

enum class plane
{
    e,
    h
};

// Great-circle cut through the peak direction. The E cut contains the x axis, the
// H cut is perpendicular to it. Offsets are degrees from the peak in [-180, 180).
struct plane_cut
{
    std::vector<double> offset_deg;
    std::vector<double> gain_dbi;
    std::size_t peak_index;
};

plane_cut principal_cut(const far_field_pattern &p, plane which);

double extract_hpbw(const far_field_pattern &p, plane which);

// Highest local maximum in the forward half of the cut (within 90 degrees of the peak)
// outside the main lobe, relative to the peak. nullopt means "no side lobe".
std::optional<double> extract_sll(const far_field_pattern &p, plane which);

// Peak minus the largest gain in the hemisphere behind the beam axis.
double extract_f2b(const far_field_pattern &p);

// CSV form: header theta_deg,phi_deg,gain_dbi[,etheta_re,etheta_im,ephi_re,ephi_im]
// with "# freq_ghz=<value>" and optionally "# polarization=theta|phi" comments.
far_field_pattern load_pattern_csv(std::string_view text);
std::string save_pattern_csv(const far_field_pattern &p);

} // namespace switchbeam
