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

#include "switchbeam/errors.hpp"
#include "switchbeam/pattern.hpp"
#include "text_util.hpp"

#include <cmath>

namespace switchbeam
{

namespace
{

constexpr std::string_view header_gain = "theta_deg,phi_deg,gain_dbi";
constexpr std::string_view header_field = "theta_deg,phi_deg,gain_dbi,etheta_re,etheta_im,ephi_re,ephi_im";

void parse_comment(std::string_view body, std::size_t line_no, std::optional<double> &freq, polarization &pol)
{
    body = detail::trim(body);
    const auto eq = body.find('=');
    if (eq == std::string_view::npos)
        return;
    const auto key = detail::trim(body.substr(0, eq));
    const auto value = detail::trim(body.substr(eq + 1));
    if (key == "freq_ghz")
    {
        auto v = detail::parse_double(value);
        if (!v || !(*v > 0.0))
            throw parse_error(line_no, "invalid freq_ghz value");
        freq = *v;
    }
    else if (key == "polarization")
    {
        if (value == "theta")
            pol = polarization::theta;
        else if (value == "phi")
            pol = polarization::phi;
        else
            throw parse_error(line_no, "unknown polarization '" + std::string(value) + "'");
    }
}

} // namespace

far_field_pattern load_pattern_csv(std::string_view text)
{
    const auto rows = detail::lines(text);

    std::optional<double> freq;
    polarization pol = polarization::unspecified;
    std::size_t n_cols = 0;

    std::vector<double> theta, phi, gain;
    std::vector<field_sample> field;
    std::size_t phi_pos = 0; // position inside the current theta block
    std::size_t last_line = 0;

    for (std::size_t r = 0; r < rows.size(); ++r)
    {
        const std::size_t line_no = r + 1;
        auto line = detail::trim(rows[r]);
        if (r == 0 && line.starts_with("\xEF\xBB\xBF"))
            line.remove_prefix(3);
        if (line.empty())
            continue;
        if (line.front() == '#')
        {
            parse_comment(line.substr(1), line_no, freq, pol);
            continue;
        }
        last_line = line_no;

        if (n_cols == 0)
        {
            if (line == header_gain)
                n_cols = 3;
            else if (line == header_field)
                n_cols = 7;
            else
                throw parse_error(line_no, "unexpected header '" + std::string(line) + "'");
            continue;
        }

        const auto cells = detail::split(line, ',');
        if (cells.size() != n_cols)
            throw parse_error(line_no, "row has " + std::to_string(cells.size()) + " columns, expected " + std::to_string(n_cols));
        double v[7];
        for (std::size_t c = 0; c < n_cols; ++c)
        {
            auto d = detail::parse_double(cells[c]);
            if (!d || !std::isfinite(*d))
                throw parse_error(line_no, "malformed number '" + std::string(detail::trim(cells[c])) + "'");
            v[c] = *d;
        }
        const double th = v[0], ph = v[1];
        if (th < 0.0 || th > 180.0)
            throw parse_error(line_no, "theta " + detail::format_double(th) + " outside [0, 180]");
        if (ph < 0.0 || ph >= 360.0)
            throw parse_error(line_no, "phi " + detail::format_double(ph) + " outside [0, 360)");

        if (theta.empty() || th != theta.back())
        {
            if (!theta.empty())
            {
                if (th < theta.back())
                    throw parse_error(line_no, "theta not increasing");
                if (phi_pos != phi.size())
                    throw parse_error(line_no, "incomplete phi block for theta " + detail::format_double(theta.back()));
            }
            theta.push_back(th);
            phi_pos = 0;
        }

        if (theta.size() == 1)
        {
            if (!phi.empty() && ph == phi.back())
                throw parse_error(line_no, "duplicate angle pair");
            if (!phi.empty() && ph < phi.back())
                throw parse_error(line_no, "phi not increasing");
            phi.push_back(ph);
        }
        else
        {
            if (phi_pos > 0 && ph == phi[phi_pos - 1])
                throw parse_error(line_no, "duplicate angle pair");
            if (phi_pos >= phi.size() || ph != phi[phi_pos])
                throw parse_error(line_no, "phi samples differ from the first theta block");
        }
        ++phi_pos;

        gain.push_back(v[2]);
        if (n_cols == 7)
            field.push_back({{v[3], v[4]}, {v[5], v[6]}});
    }

    if (n_cols == 0)
        throw parse_error(rows.size(), "missing header");
    if (!freq)
        throw parse_error(rows.size(), "missing '# freq_ghz=' declaration");
    if (theta.empty())
        throw parse_error(rows.size(), "no data rows");
    if (phi_pos != phi.size())
        throw parse_error(last_line, "incomplete phi block for theta " + detail::format_double(theta.back()));

    try
    {
        angle_grid grid(std::move(theta), std::move(phi));
        std::optional<std::vector<field_sample>> f;
        if (n_cols == 7)
            f = std::move(field);
        return far_field_pattern(std::move(grid), *freq, std::move(gain), std::move(f), pol);
    }
    catch (const parameter_error &e)
    {
        throw parse_error(last_line, e.what());
    }
}

std::string save_pattern_csv(const far_field_pattern &p)
{
    std::string out;
    out += "# freq_ghz=" + detail::format_double(p.freq_ghz()) + "\n";
    if (p.pol() == polarization::theta)
        out += "# polarization=theta\n";
    else if (p.pol() == polarization::phi)
        out += "# polarization=phi\n";
    out += p.has_field() ? header_field : header_gain;
    out += '\n';

    const auto &grid = p.grid();
    const auto g = p.gain_dbi();
    for (std::size_t i = 0; i < grid.n_theta(); ++i)
        for (std::size_t j = 0; j < grid.n_phi(); ++j)
        {
            const std::size_t k = grid.index(i, j);
            out += detail::format_double(grid.theta()[i]);
            out += ',';
            out += detail::format_double(grid.phi()[j]);
            out += ',';
            out += detail::format_double(g[k]);
            if (p.has_field())
            {
                const auto &f = p.field()[k];
                for (double c : {f.e_theta.real(), f.e_theta.imag(), f.e_phi.real(), f.e_phi.imag()})
                {
                    out += ',';
                    out += detail::format_double(c);
                }
            }
            out += '\n';
        }
    return out;
}

} // namespace switchbeam
