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

#include "switchbeam/sparams.hpp"
#include "switchbeam/errors.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

namespace switchbeam
{

namespace
{

enum class data_format
{
    ma,
    db,
    ri
};

std::string upper(std::string_view s)
{
    std::string out(s);
    for (auto &c : out)
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

cdouble to_complex(double a, double b, data_format fmt)
{
    constexpr double d2r = std::numbers::pi / 180.0;
    switch (fmt)
    {
    case data_format::ri:
        return {a, b};
    case data_format::ma:
        return std::polar(a, b * d2r);
    case data_format::db:
        return std::polar(std::pow(10.0, a / 20.0), b * d2r);
    }
    return {};
}

// Where entry m of a frequency block lands in the row-major matrix.
std::pair<std::size_t, std::size_t> block_position(std::size_t m, std::size_t n)
{
    if (n == 2)
    {
        static constexpr std::pair<std::size_t, std::size_t> order[4] = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
        return order[m];
    }
    return {m / n + 1, m % n + 1};
}

} // namespace

sweep_smatrix::sweep_smatrix(std::vector<double> freq_ghz, std::size_t n_ports, std::vector<cdouble> s, double z0_ohm)
    : freq_(std::move(freq_ghz)), n_(n_ports), s_(std::move(s)), z0_(z0_ohm)
{
    if (n_ < 1)
        throw parameter_error("n_ports must be at least 1");
    if (!(z0_ > 0.0))
        throw parameter_error("reference impedance must be positive");
    if (freq_.empty())
        throw parameter_error("sweep has no frequency points");
    if (s_.size() != freq_.size() * n_ * n_)
        throw parameter_error("matrix data does not match sweep size");
    for (std::size_t k = 0; k < freq_.size(); ++k)
    {
        if (!std::isfinite(freq_[k]) || (k > 0 && !(freq_[k] > freq_[k - 1])))
            throw parameter_error("frequencies must be finite and strictly increasing");
    }
    for (const auto &v : s_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw parameter_error("matrix entries must be finite");
}

void sweep_smatrix::check_port(std::size_t p) const
{
    if (p < 1 || p > n_)
        throw argument_error("port " + std::to_string(p) + " outside 1.." + std::to_string(n_));
}

cdouble sweep_smatrix::at(std::size_t k, std::size_t i, std::size_t j) const
{
    check_port(i);
    check_port(j);
    return s_.at(k * n_ * n_ + flat(i, j));
}

std::vector<cdouble> sweep_smatrix::interpolate(double f_ghz) const
{
    const double tol = 1e-12 * std::max(1.0, std::abs(freq_.back()));
    if (!std::isfinite(f_ghz) || f_ghz < freq_.front() - tol || f_ghz > freq_.back() + tol)
        throw range_error("frequency " + detail::format_double(f_ghz) + " GHz outside sweep");
    const std::size_t nn = n_ * n_;
    auto block = [&](std::size_t k) { return s_.begin() + static_cast<std::ptrdiff_t>(k * nn); };

    auto it = std::upper_bound(freq_.begin(), freq_.end(), f_ghz);
    std::size_t k1 = static_cast<std::size_t>(it - freq_.begin());
    if (k1 == 0)
        return {block(0), block(1)};
    std::size_t k0 = k1 - 1;
    if (k1 == freq_.size() || freq_[k0] == f_ghz)
        return {block(k0), block(k0 + 1)};

    const double w = (f_ghz - freq_[k0]) / (freq_[k1] - freq_[k0]);
    std::vector<cdouble> out(nn);
    for (std::size_t m = 0; m < nn; ++m)
        out[m] = (1.0 - w) * s_[k0 * nn + m] + w * s_[k1 * nn + m];
    return out;
}

cdouble sweep_smatrix::interpolate(double f_ghz, std::size_t i, std::size_t j) const
{
    check_port(i);
    check_port(j);
    return interpolate(f_ghz)[flat(i, j)];
}

std::vector<double> sweep_smatrix::reflection_db(std::size_t port) const
{
    check_port(port);
    std::vector<double> out(freq_.size());
    for (std::size_t k = 0; k < freq_.size(); ++k)
        out[k] = 20.0 * std::log10(std::abs(s_[k * n_ * n_ + flat(port, port)]));
    return out;
}

// ---------------------------------------------------------------- touchstone

sweep_smatrix parse_touchstone(std::string_view text, std::size_t n_ports)
{
    if (n_ports < 1)
        throw argument_error("n_ports must be at least 1");

    double unit = 1.0; // to GHz
    data_format fmt = data_format::ma;
    double z0 = 50.0;
    bool seen_option = false;

    const std::size_t entries = n_ports * n_ports;
    const std::size_t per_row_lines = n_ports <= 2 ? 1 : (n_ports + 3) / 4;

    std::vector<double> freq;
    std::vector<cdouble> data;
    std::size_t entry = 0;     // complex entries consumed in the current block
    std::size_t line_in_block = 0;

    const auto rows = detail::lines(text);
    for (std::size_t r = 0; r < rows.size(); ++r)
    {
        const std::size_t line_no = r + 1;
        std::string_view line = rows[r];
        if (auto bang = line.find('!'); bang != std::string_view::npos)
            line = line.substr(0, bang);
        line = detail::trim(line);
        if (line.empty())
            continue;

        if (line.front() == '[')
            throw parse_error(line_no, "Touchstone v2 keyword '" + std::string(line) + "' not supported");

        if (line.front() == '#')
        {
            if (seen_option)
                continue; // later option lines are ignored
            seen_option = true;
            const auto tok = detail::split_ws(line.substr(1));
            for (std::size_t t = 0; t < tok.size(); ++t)
            {
                const std::string u = upper(tok[t]);
                if (u == "HZ")
                    unit = 1e-9;
                else if (u == "KHZ")
                    unit = 1e-6;
                else if (u == "MHZ")
                    unit = 1e-3;
                else if (u == "GHZ")
                    unit = 1.0;
                else if (u == "S")
                    ;
                else if (u == "MA")
                    fmt = data_format::ma;
                else if (u == "DB")
                    fmt = data_format::db;
                else if (u == "RI")
                    fmt = data_format::ri;
                else if (u == "R")
                {
                    if (t + 1 >= tok.size())
                        throw parse_error(line_no, "option R needs a value");
                    auto v = detail::parse_double(tok[++t]);
                    if (!v || !(*v > 0.0))
                        throw parse_error(line_no, "invalid reference impedance");
                    z0 = *v;
                }
                else
                    throw parse_error(line_no, "unknown option token '" + std::string(tok[t]) + "'");
            }
            continue;
        }

        const auto tok = detail::split_ws(line);
        std::vector<double> v;
        v.reserve(tok.size());
        for (auto t : tok)
        {
            auto d = detail::parse_double(t);
            if (!d)
                throw parse_error(line_no, "malformed number '" + std::string(t) + "'");
            v.push_back(*d);
        }

        // expected layout of this line
        const bool first = line_in_block == 0;
        std::size_t complex_on_line;
        if (n_ports <= 2)
            complex_on_line = entries;
        else
        {
            const std::size_t col_chunk = line_in_block % per_row_lines;
            complex_on_line = std::min<std::size_t>(4, n_ports - 4 * col_chunk);
        }
        const std::size_t expected = 2 * complex_on_line + (first ? 1 : 0);
        if (v.size() != expected)
            throw parse_error(line_no, "expected " + std::to_string(expected) + " values, found " + std::to_string(v.size()));

        std::size_t off = 0;
        if (first)
        {
            const double f = v[0] * unit;
            if (!freq.empty() && !(f > freq.back()))
                throw parse_error(line_no, "frequency not strictly increasing");
            freq.push_back(f);
            data.resize(data.size() + entries);
            off = 1;
        }
        const std::size_t base = (freq.size() - 1) * entries;
        for (std::size_t c = 0; c < complex_on_line; ++c, ++entry)
        {
            const auto [i, j] = block_position(entry, n_ports);
            data[base + (i - 1) * n_ports + (j - 1)] = to_complex(v[off + 2 * c], v[off + 2 * c + 1], fmt);
        }
        ++line_in_block;
        if (entry == entries)
        {
            entry = 0;
            line_in_block = 0;
        }
    }

    if (entry != 0)
        throw parse_error(rows.size(), "truncated final frequency block");
    if (freq.empty())
        throw parse_error(rows.size(), "no data");

    try
    {
        return sweep_smatrix(std::move(freq), n_ports, std::move(data), z0);
    }
    catch (const parameter_error &e)
    {
        throw parse_error(rows.size(), e.what());
    }
}

std::string write_touchstone(const sweep_smatrix &s)
{
    const std::size_t n = s.n_ports();
    std::string out = "# GHz S RI R " + detail::format_double(s.z0_ohm()) + "\n";
    for (std::size_t k = 0; k < s.n_freq(); ++k)
    {
        out += detail::format_double(s.freq_ghz()[k]);
        auto put = [&](std::size_t i, std::size_t j) {
            const cdouble v = s.at(k, i, j);
            out += ' ';
            out += detail::format_double(v.real());
            out += ' ';
            out += detail::format_double(v.imag());
        };
        if (n <= 2)
        {
            for (std::size_t m = 0; m < n * n; ++m)
            {
                const auto [i, j] = block_position(m, n);
                put(i, j);
            }
            out += '\n';
            continue;
        }
        for (std::size_t i = 1; i <= n; ++i)
        {
            for (std::size_t j = 1; j <= n; ++j)
            {
                put(i, j);
                if (j % 4 == 0 || j == n)
                    out += '\n';
            }
        }
    }
    return out;
}

// ------------------------------------------------------------------ analysis

double isolation_db(const sweep_smatrix &s, std::size_t i, std::size_t j, double f_ghz)
{
    if (i == j)
        throw argument_error("isolation needs two distinct ports");
    return 20.0 * std::log10(std::abs(s.interpolate(f_ghz, i, j)));
}

std::optional<band> bandwidth_below(const sweep_smatrix &s, std::size_t port, double threshold_db)
{
    const auto db = s.reflection_db(port);
    const auto &f = s.freq_ghz();
    const std::size_t n = db.size();

    auto cross = [&](std::size_t a, std::size_t b) {
        return f[a] + (threshold_db - db[a]) / (db[b] - db[a]) * (f[b] - f[a]);
    };

    std::optional<band> best;
    std::size_t k = 0;
    while (k < n)
    {
        if (!(db[k] <= threshold_db))
        {
            ++k;
            continue;
        }
        std::size_t e = k;
        while (e + 1 < n && db[e + 1] <= threshold_db)
            ++e;
        const double lo = k == 0 ? f[0] : cross(k - 1, k);
        const double hi = e + 1 == n ? f[n - 1] : cross(e, e + 1);
        if (!best || hi - lo > best->width_ghz())
            best = band{lo, hi};
        k = e + 1;
    }
    return best;
}

resonance resonance_freq(const sweep_smatrix &s, std::size_t port)
{
    const auto db = s.reflection_db(port);
    const auto &f = s.freq_ghz();
    const auto k = static_cast<std::size_t>(std::min_element(db.begin(), db.end()) - db.begin());
    if (k == 0 || k + 1 == db.size())
        return {f[k], db[k], true};

    const double x0 = f[k - 1], x1 = f[k], x2 = f[k + 1];
    const double y0 = db[k - 1], y1 = db[k], y2 = db[k + 1];
    const double num = (x1 - x0) * (x1 - x0) * (y1 - y2) - (x1 - x2) * (x1 - x2) * (y1 - y0);
    const double den = (x1 - x0) * (y1 - y2) - (x1 - x2) * (y1 - y0);
    if (den == 0.0)
        return {x1, y1, false};
    const double xv = x1 - 0.5 * num / den;

    // Lagrange form of the same parabola at the vertex
    const double l0 = (xv - x1) * (xv - x2) / ((x0 - x1) * (x0 - x2));
    const double l1 = (xv - x0) * (xv - x2) / ((x1 - x0) * (x1 - x2));
    const double l2 = (xv - x0) * (xv - x1) / ((x2 - x0) * (x2 - x1));
    return {xv, l0 * y0 + l1 * y1 + l2 * y2, false};
}

} // namespace switchbeam
