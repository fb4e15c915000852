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

#include "switchbeam/pattern.hpp"
#include "switchbeam/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace switchbeam
{

namespace
{

constexpr double pi = std::numbers::pi;
constexpr double deg2rad = pi / 180.0;
constexpr double rad2deg = 180.0 / pi;
constexpr double half_power_db = 3.0102999566398121; // 10 log10(2)
constexpr double floor_linear = 1e-10;               // relative to peak, -100 dB
constexpr double snap_tol = 1e-9;                    // degrees

using vec3 = std::array<double, 3>;

vec3 direction(double theta_deg, double phi_deg)
{
    const double t = theta_deg * deg2rad, p = phi_deg * deg2rad;
    return {std::sin(t) * std::cos(p), std::sin(t) * std::sin(p), std::cos(t)};
}

double dot(const vec3 &a, const vec3 &b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

vec3 cross(const vec3 &a, const vec3 &b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

vec3 normalized(const vec3 &a)
{
    const double n = std::sqrt(dot(a, a));
    return {a[0] / n, a[1] / n, a[2] / n};
}

// theta in [0, 180], phi in [0, 360)
std::pair<double, double> angles_of(const vec3 &u)
{
    const double z = std::clamp(u[2], -1.0, 1.0);
    const double theta = std::acos(z) * rad2deg;
    double phi = std::atan2(u[1], u[0]) * rad2deg;
    if (phi < 0.0)
        phi += 360.0;
    if (phi >= 360.0)
        phi -= 360.0;
    return {theta, phi};
}

double to_db(double lin) { return 10.0 * std::log10(lin); }
double to_lin(double db) { return std::pow(10.0, db / 10.0); }

void check_axis(const std::vector<double> &axis, const char *name, double lo, double hi, bool hi_inclusive)
{
    if (axis.size() < 2)
        throw parameter_error(std::string(name) + " axis needs at least two samples");
    for (std::size_t i = 0; i < axis.size(); ++i)
    {
        const double v = axis[i];
        if (!std::isfinite(v) || v < lo || (hi_inclusive ? v > hi : v >= hi))
            throw parameter_error(std::string(name) + " sample out of range: " + std::to_string(v));
        if (i > 0 && !(v > axis[i - 1]))
            throw parameter_error(std::string(name) + " axis must be strictly increasing");
    }
}

// Interval lookup on a sorted axis. Returns (i0, i1, w1) with value = (1-w1)*a[i0] + w1*a[i1].
struct bracket
{
    std::size_t i0, i1;
    double w1;
};

bracket locate(std::span<const double> axis, double v)
{
    auto it = std::upper_bound(axis.begin(), axis.end(), v);
    if (it == axis.begin())
        return {0, 0, 0.0};
    std::size_t i0 = static_cast<std::size_t>(it - axis.begin()) - 1;
    if (axis[i0] == v || i0 + 1 == axis.size())
        return {i0, i0, 0.0};
    const double w = (v - axis[i0]) / (axis[i0 + 1] - axis[i0]);
    return {i0, i0 + 1, w};
}

std::size_t wrap_index(std::size_t base, long offset, std::size_t n)
{
    const long len = static_cast<long>(n);
    long k = (static_cast<long>(base) + offset) % len;
    if (k < 0)
        k += len;
    return static_cast<std::size_t>(k);
}

} // namespace

// ---------------------------------------------------------------- angle_grid

angle_grid::angle_grid(std::vector<double> theta_deg, std::vector<double> phi_deg)
    : theta_(std::move(theta_deg)), phi_(std::move(phi_deg))
{
    check_axis(theta_, "theta", 0.0, 180.0, true);
    check_axis(phi_, "phi", 0.0, 360.0, false);
}

angle_grid angle_grid::uniform(double theta_step_deg, double phi_step_deg)
{
    if (!(theta_step_deg > 0.0) || !(phi_step_deg > 0.0))
        throw parameter_error("grid steps must be positive");
    const auto nt = static_cast<std::size_t>(std::llround(180.0 / theta_step_deg));
    const auto np = static_cast<std::size_t>(std::llround(360.0 / phi_step_deg));
    if (std::abs(nt * theta_step_deg - 180.0) > 1e-9 || std::abs(np * phi_step_deg - 360.0) > 1e-9)
        throw parameter_error("grid steps must divide 180 (theta) and 360 (phi)");
    std::vector<double> th(nt + 1), ph(np);
    for (std::size_t i = 0; i <= nt; ++i)
        th[i] = 180.0 * static_cast<double>(i) / static_cast<double>(nt);
    for (std::size_t j = 0; j < np; ++j)
        ph[j] = 360.0 * static_cast<double>(j) / static_cast<double>(np);
    return angle_grid(std::move(th), std::move(ph));
}

angle_grid angle_grid::h_plane(double theta_step_deg)
{
    auto full = uniform(theta_step_deg, 90.0);
    return angle_grid(std::vector<double>(full.theta().begin(), full.theta().end()), {90.0, 270.0});
}

double angle_grid::min_theta_step() const
{
    double s = 180.0;
    for (std::size_t i = 1; i < theta_.size(); ++i)
        s = std::min(s, theta_[i] - theta_[i - 1]);
    return s;
}

bool angle_grid::phi_periodic() const
{
    if (phi_.size() < 3)
        return false;
    double widest = 0.0;
    for (std::size_t j = 1; j < phi_.size(); ++j)
        widest = std::max(widest, phi_[j] - phi_[j - 1]);
    const double wrap = phi_.front() + 360.0 - phi_.back();
    return wrap <= widest + 1e-9;
}

bool angle_grid::full_sphere() const
{
    return std::abs(theta_.front()) < snap_tol && std::abs(theta_.back() - 180.0) < snap_tol && phi_periodic();
}

// --------------------------------------------------------- far_field_pattern

far_field_pattern::far_field_pattern(angle_grid grid, double freq_ghz, std::vector<double> gain_dbi,
                                     std::optional<std::vector<field_sample>> field, polarization pol)
    : grid_(std::move(grid)), freq_ghz_(freq_ghz), gain_dbi_(std::move(gain_dbi)), field_(std::move(field)), pol_(pol)
{
    if (!(freq_ghz_ > 0.0) || !std::isfinite(freq_ghz_))
        throw parameter_error("frequency must be positive");
    if (gain_dbi_.size() != grid_.size())
        throw parameter_error("gain sample count does not match grid");
    for (double g : gain_dbi_)
        if (!std::isfinite(g))
            throw parameter_error("gain must be finite at every sample");

    if (field_)
    {
        if (field_->size() != grid_.size())
            throw parameter_error("field sample count does not match grid");
        // |E|^2 / g must be one positive constant
        double ref = -1.0;
        for (std::size_t k = 0; k < gain_dbi_.size(); ++k)
        {
            const auto &f = (*field_)[k];
            const double p = std::norm(f.e_theta) + std::norm(f.e_phi);
            if (!std::isfinite(p))
                throw parameter_error("field must be finite");
            const double ratio = p / to_lin(gain_dbi_[k]);
            if (ref < 0.0)
                ref = ratio;
            if (!(ratio > 0.0) || std::abs(ratio - ref) > 1e-6 * ref)
                throw parameter_error("field power is not proportional to gain at sample " + std::to_string(k));
        }
    }
}

std::span<const field_sample> far_field_pattern::field() const
{
    if (!field_)
        throw data_error("pattern carries no complex field");
    return *field_;
}

std::vector<double> far_field_pattern::gain_theta_linear() const
{
    std::vector<double> out(gain_dbi_.size());
    if (field_)
    {
        for (std::size_t k = 0; k < out.size(); ++k)
        {
            const auto &f = (*field_)[k];
            const double p = std::norm(f.e_theta) + std::norm(f.e_phi);
            out[k] = p > 0.0 ? to_lin(gain_dbi_[k]) * std::norm(f.e_theta) / p : 0.0;
        }
        return out;
    }
    if (pol_ == polarization::unspecified)
        throw data_error("pattern has neither a field nor a polarisation tag");
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = pol_ == polarization::theta ? to_lin(gain_dbi_[k]) : 0.0;
    return out;
}

std::vector<double> far_field_pattern::gain_phi_linear() const
{
    std::vector<double> out(gain_dbi_.size());
    if (field_)
    {
        for (std::size_t k = 0; k < out.size(); ++k)
        {
            const auto &f = (*field_)[k];
            const double p = std::norm(f.e_theta) + std::norm(f.e_phi);
            out[k] = p > 0.0 ? to_lin(gain_dbi_[k]) * std::norm(f.e_phi) / p : 0.0;
        }
        return out;
    }
    if (pol_ == polarization::unspecified)
        throw data_error("pattern has neither a field nor a polarisation tag");
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = pol_ == polarization::phi ? to_lin(gain_dbi_[k]) : 0.0;
    return out;
}

// ---------------------------------------------------------------- synthesis

void beam_params::validate() const
{
    auto bad = [](const std::string &m) { throw parameter_error(m); };
    if (!std::isfinite(peak_gain_dbi) || peak_gain_dbi < -10.0 || peak_gain_dbi > 30.0)
        bad("peak_gain_dbi must lie in [-10, 30]");
    if (!std::isfinite(steer_theta_deg) || std::abs(steer_theta_deg) > 90.0)
        bad("steer_theta_deg must lie in [-90, 90]");
    for (double h : {hpbw_e_deg, hpbw_h_deg})
        if (!std::isfinite(h) || h < 0.0 || h >= 180.0)
            bad("hpbw must lie in (0, 180)");
    if (!std::isfinite(sll_db) || !(sll_db < 0.0))
        bad("sll_db must be negative");
    if (!std::isfinite(f2b_db) || !(f2b_db > 0.0))
        bad("f2b_db must be positive");
}

double beam_gain_dbi(const beam_params &bp, double theta_deg, double phi_deg)
{
    const vec3 u = direction(theta_deg, phi_deg);
    const double s = bp.steer_theta_deg * deg2rad;
    const double cs = std::cos(s), ss = std::sin(s);

    // rotate the steer direction (0, sin s, cos s) onto +z
    const double bx = u[0];
    const double by = u[1] * cs - u[2] * ss;
    const double bz = u[1] * ss + u[2] * cs;

    const double psi = std::acos(std::clamp(bz, -1.0, 1.0)) * rad2deg;
    const double rho = std::hypot(bx, by);
    const double ca = rho > 1e-15 ? bx / rho : 1.0;
    const double sa = rho > 1e-15 ? by / rho : 0.0;

    const double he = bp.hpbw_e_deg, hh = bp.hpbw_h_deg;
    const double hpbw_alpha = 1.0 / std::sqrt(ca * ca / (he * he) + sa * sa / (hh * hh));

    const double xe = 2.0 * psi * ca / he, xh = 2.0 * psi * sa / hh;
    const double main = std::exp2(-(xe * xe + xh * xh));

    const double ring_center = std::min(1.5 * hpbw_alpha, 75.0);
    const double xr = 2.0 * (psi - ring_center) / (0.5 * hpbw_alpha);
    const double ring = to_lin(bp.sll_db) * std::exp2(-xr * xr);

    const double xb = 2.0 * (180.0 - psi) / hpbw_alpha;
    const double back = to_lin(-bp.f2b_db) * std::exp2(-xb * xb);

    const double rel = std::max({main, ring, back, floor_linear});
    return bp.peak_gain_dbi + to_db(rel);
}

far_field_pattern synthesize_beam(const beam_params &params, const angle_grid &grid, double freq_ghz)
{
    params.validate();

    double widest = 0.0;
    for (std::size_t i = 1; i < grid.n_theta(); ++i)
        widest = std::max(widest, grid.theta()[i] - grid.theta()[i - 1]);
    const double narrowest = std::min(params.hpbw_e_deg, params.hpbw_h_deg);
    if (std::floor(narrowest / widest + 1e-12) < 3.0)
        throw resolution_error("grid too coarse: fewer than 3 samples inside the HPBW");

    std::vector<double> gain(grid.size());
    for (std::size_t i = 0; i < grid.n_theta(); ++i)
        for (std::size_t j = 0; j < grid.n_phi(); ++j)
            gain[grid.index(i, j)] = beam_gain_dbi(params, grid.theta()[i], grid.phi()[j]);

    return far_field_pattern(grid, freq_ghz, std::move(gain), std::nullopt, polarization::theta);
}

far_field_pattern with_field(const far_field_pattern &p)
{
    if (p.has_field())
        return p;
    if (p.pol() == polarization::unspecified)
        throw data_error("cannot derive a field without a polarisation tag");
    std::vector<field_sample> f(p.grid().size());
    const auto g = p.gain_dbi();
    for (std::size_t k = 0; k < f.size(); ++k)
    {
        const double amp = std::sqrt(to_lin(g[k]));
        f[k] = p.pol() == polarization::theta ? field_sample{{amp, 0.0}, {0.0, 0.0}} : field_sample{{0.0, 0.0}, {amp, 0.0}};
    }
    return far_field_pattern(p.grid(), p.freq_ghz(), std::vector<double>(g.begin(), g.end()), std::move(f), p.pol());
}

far_field_pattern shift_phase_center(const far_field_pattern &p, const std::array<double, 3> &offset_m)
{
    const auto src = p.field();
    const double k = 2.0 * pi * p.freq_ghz() * 1e9 / 299792458.0;
    const auto &grid = p.grid();
    std::vector<field_sample> f(src.begin(), src.end());
    for (std::size_t i = 0; i < grid.n_theta(); ++i)
        for (std::size_t j = 0; j < grid.n_phi(); ++j)
        {
            const vec3 u = direction(grid.theta()[i], grid.phi()[j]);
            const std::complex<double> ph = std::polar(1.0, k * dot(u, offset_m));
            auto &s = f[grid.index(i, j)];
            s.e_theta *= ph;
            s.e_phi *= ph;
        }
    const auto g = p.gain_dbi();
    return far_field_pattern(grid, p.freq_ghz(), std::vector<double>(g.begin(), g.end()), std::move(f), p.pol());
}

far_field_pattern offset_gain(const far_field_pattern &p, double offset_db)
{
    const auto g = p.gain_dbi();
    std::vector<double> out(g.begin(), g.end());
    for (auto &v : out)
        v += offset_db;
    std::optional<std::vector<field_sample>> f;
    if (p.has_field())
    {
        const double a = std::sqrt(to_lin(offset_db));
        auto src = p.field();
        f.emplace(src.begin(), src.end());
        for (auto &s : *f)
        {
            s.e_theta *= a;
            s.e_phi *= a;
        }
    }
    return far_field_pattern(p.grid(), p.freq_ghz(), std::move(out), std::move(f), p.pol());
}

// ------------------------------------------------------------ interpolation

double gain_at(const far_field_pattern &p, double theta_deg, double phi_deg)
{
    const auto &grid = p.grid();
    const auto th = grid.theta();
    const auto ph = grid.phi();

    if (!std::isfinite(theta_deg) || !std::isfinite(phi_deg))
        throw range_error("angle must be finite");
    if (theta_deg < th.front() - snap_tol || theta_deg > th.back() + snap_tol)
        throw range_error("theta " + std::to_string(theta_deg) + " outside grid hull");
    theta_deg = std::clamp(theta_deg, th.front(), th.back());

    phi_deg = std::fmod(phi_deg, 360.0);
    if (phi_deg < 0.0)
        phi_deg += 360.0;

    // at a pole every azimuth is the same direction
    const bool pole = theta_deg < snap_tol || theta_deg > 180.0 - snap_tol;

    const bracket bt = locate(th, theta_deg);

    std::size_t j0 = 0, j1 = 0;
    double wp = 0.0;
    const bool periodic = grid.phi_periodic();
    if (std::abs(phi_deg - 360.0) < snap_tol)
        phi_deg = 0.0;
    if (phi_deg >= ph.front() - snap_tol && phi_deg <= ph.back() + snap_tol)
    {
        const bracket bp = locate(ph, std::clamp(phi_deg, ph.front(), ph.back()));
        j0 = bp.i0;
        j1 = bp.i1;
        wp = bp.w1;
    }
    else if (periodic)
    {
        // wrap interval between last sample and first + 360
        const double lo = ph.back(), hi = ph.front() + 360.0;
        const double v = phi_deg < ph.front() ? phi_deg + 360.0 : phi_deg;
        j0 = ph.size() - 1;
        j1 = 0;
        wp = (v - lo) / (hi - lo);
    }
    else if (pole)
    {
        j0 = j1 = 0;
    }
    else
    {
        throw range_error("phi " + std::to_string(phi_deg) + " outside grid hull");
    }

    const double w[4] = {(1.0 - bt.w1) * (1.0 - wp), (1.0 - bt.w1) * wp, bt.w1 * (1.0 - wp), bt.w1 * wp};
    const std::size_t idx[4] = {grid.index(bt.i0, j0), grid.index(bt.i0, j1), grid.index(bt.i1, j0), grid.index(bt.i1, j1)};

    const auto g = p.gain_dbi();
    double acc = 0.0;
    int nonzero = 0;
    std::size_t last = 0;
    for (int k = 0; k < 4; ++k)
        if (w[k] > 0.0)
        {
            acc += w[k] * to_lin(g[idx[k]]);
            ++nonzero;
            last = idx[k];
        }
    if (nonzero == 1)
        return g[last];
    return to_db(acc);
}

double gain_at_h_plane(const far_field_pattern &p, double signed_theta_deg)
{
    return gain_at(p, std::abs(signed_theta_deg), signed_theta_deg >= 0.0 ? 90.0 : 270.0);
}

// --------------------------------------------------------------- quadrature

std::vector<double> sphere_weights(const angle_grid &grid)
{
    if (!grid.full_sphere())
        throw coverage_error("pattern does not cover the full sphere");
    const auto th = grid.theta();
    const auto ph = grid.phi();
    const std::size_t nt = th.size(), np = ph.size();

    std::vector<double> wt(nt), wp(np);
    for (std::size_t i = 0; i < nt; ++i)
    {
        const double lo = i > 0 ? th[i - 1] : th[i];
        const double hi = i + 1 < nt ? th[i + 1] : th[i];
        wt[i] = std::sin(th[i] * deg2rad) * 0.5 * (hi - lo) * deg2rad;
    }
    for (std::size_t j = 0; j < np; ++j)
    {
        const double lo = j > 0 ? ph[j - 1] : ph[np - 1] - 360.0;
        const double hi = j + 1 < np ? ph[j + 1] : ph[0] + 360.0;
        wp[j] = 0.5 * (hi - lo) * deg2rad;
    }

    std::vector<double> w(grid.size());
    for (std::size_t i = 0; i < nt; ++i)
        for (std::size_t j = 0; j < np; ++j)
            w[grid.index(i, j)] = wt[i] * wp[j];
    return w;
}

double integrate_sphere(const far_field_pattern &p)
{
    const auto w = sphere_weights(p.grid());
    const auto g = p.gain_dbi();
    double acc = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k)
        acc += w[k] * to_lin(g[k]);
    return acc / (4.0 * pi);
}

// --------------------------------------------------------------- extraction

beam_peak extract_peak(const far_field_pattern &p)
{
    const auto g = p.gain_dbi();
    const auto k = static_cast<std::size_t>(std::max_element(g.begin(), g.end()) - g.begin());
    const auto &grid = p.grid();
    const std::size_t i = k / grid.n_phi(), j = k % grid.n_phi();
    const double theta = grid.theta()[i], phi = grid.phi()[j];
    const vec3 b = direction(theta, phi);
    double steer = std::atan2(b[1], b[2]) * rad2deg;
    if (std::abs(b[1]) < 1e-12 && b[2] > 0.0)
        steer = 0.0;
    return {g[k], theta, phi, steer};
}

plane_cut principal_cut(const far_field_pattern &p, plane which)
{
    const beam_peak pk = extract_peak(p);
    const vec3 b = direction(pk.theta_deg, pk.phi_deg);

    // E direction: x axis made orthogonal to the beam axis
    vec3 e1{1.0 - b[0] * b[0], -b[0] * b[1], -b[0] * b[2]};
    if (dot(e1, e1) < 1e-12)
        e1 = {-b[1] * b[0], 1.0 - b[1] * b[1], -b[1] * b[2]};
    e1 = normalized(e1);
    const vec3 v = which == plane::e ? e1 : normalized(cross(b, e1));

    const double step_guess = p.grid().min_theta_step();
    auto n = static_cast<std::size_t>(std::ceil(360.0 / step_guess - 1e-9));
    if (n % 2)
        ++n;
    const double step = 360.0 / static_cast<double>(n);

    plane_cut cut;
    cut.offset_deg.resize(n);
    cut.gain_dbi.resize(n);
    cut.peak_index = n / 2;
    for (std::size_t k = 0; k < n; ++k)
    {
        const double t = (static_cast<double>(k) - static_cast<double>(n / 2)) * step;
        cut.offset_deg[k] = t;
        if (k == cut.peak_index)
        {
            cut.gain_dbi[k] = pk.gain_dbi;
            continue;
        }
        const double ct = std::cos(t * deg2rad), st = std::sin(t * deg2rad);
        const vec3 u{ct * b[0] + st * v[0], ct * b[1] + st * v[1], ct * b[2] + st * v[2]};
        const auto [th, ph] = angles_of(u);
        cut.gain_dbi[k] = gain_at(p, th, ph);
    }
    return cut;
}

double extract_hpbw(const far_field_pattern &p, plane which)
{
    const plane_cut cut = principal_cut(p, which);
    const std::size_t n = cut.gain_dbi.size();
    const double step = 360.0 / static_cast<double>(n);
    const double target = cut.gain_dbi[cut.peak_index] - half_power_db;

    // walk outward from the peak in direction dir (+1 / -1) to the first half-power crossing
    auto crossing = [&](int dir) -> double {
        for (std::size_t m = 1; m <= n / 2; ++m)
        {
            const std::size_t k_prev = wrap_index(cut.peak_index, dir * static_cast<long>(m - 1), n);
            const std::size_t k = wrap_index(cut.peak_index, dir * static_cast<long>(m), n);
            const double g0 = cut.gain_dbi[k_prev], g1 = cut.gain_dbi[k];
            if (g1 <= target)
            {
                const double frac = (g0 - target) / (g0 - g1);
                return (static_cast<double>(m - 1) + frac) * step;
            }
        }
        throw beam_too_wide_error("no half-power crossing on one side of the main lobe");
    };

    return crossing(+1) + crossing(-1);
}

std::optional<double> extract_sll(const far_field_pattern &p, plane which)
{
    const plane_cut cut = principal_cut(p, which);
    const auto &g = cut.gain_dbi;
    const std::size_t n = g.size();
    const std::size_t pk = cut.peak_index;
    auto at = [&](long m) { return g[wrap_index(pk, m, n)]; };

    // main lobe extends to the first local minimum on each side
    long right = 0, left = 0;
    const long half = static_cast<long>(n / 2);
    while (right < half && at(right + 1) <= at(right))
        ++right;
    while (left > -half && at(left - 1) <= at(left))
        --left;

    std::optional<double> best;
    for (long m = -half + 1; m < half; ++m)
    {
        if (m >= left && m <= right)
            continue;
        if (std::abs(cut.offset_deg[static_cast<std::size_t>(static_cast<long>(pk) + m)]) >= 90.0)
            continue;
        const double v = at(m);
        if (v > at(m - 1) && v >= at(m + 1))
            if (!best || v > *best)
                best = v;
    }
    if (!best)
        return std::nullopt;
    return *best - g[pk];
}

double extract_f2b(const far_field_pattern &p)
{
    const beam_peak pk = extract_peak(p);
    const vec3 b = direction(pk.theta_deg, pk.phi_deg);
    const auto &grid = p.grid();
    std::optional<double> back;
    for (std::size_t i = 0; i < grid.n_theta(); ++i)
        for (std::size_t j = 0; j < grid.n_phi(); ++j)
        {
            if (dot(direction(grid.theta()[i], grid.phi()[j]), b) >= -1e-12)
                continue;
            const double v = p.gain_dbi(i, j);
            if (!back || v > *back)
                back = v;
        }
    if (!back)
        throw coverage_error("pattern has no samples behind the beam axis");
    return pk.gain_dbi - *back;
}

} // namespace switchbeam
