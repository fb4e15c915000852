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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace switchbeam
{

// Every domain failure raised by the library derives from `error`, so callers
// (the CLI in particular) can separate domain errors from programming errors.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Value outside its documented domain (beam parameters, negative heights, ...)
class parameter_error : public error
{
public:
    using error::error;
};

// Invalid argument combination, e.g. i == j for a coupling query
class argument_error : public error
{
public:
    using error::error;
};

// Query outside the sampled hull of a grid or sweep
class range_error : public error
{
public:
    using error::error;
};

// Grid too coarse to resolve the requested beam
class resolution_error : public error
{
public:
    using error::error;
};

// Operation needs a full-sphere pattern
class coverage_error : public error
{
public:
    using error::error;
};

// Two patterns that must share a grid do not
class grid_error : public error
{
public:
    using error::error;
};

// Required data (complex field, polarisation split) is missing
class data_error : public error
{
public:
    using error::error;
};

// No -3 dB crossing on one side of the main lobe
class beam_too_wide_error : public error
{
public:
    using error::error;
};

// S-parameter ECC denominator is not positive
class lossy_port_error : public error
{
public:
    using error::error;
};

class parse_error : public error
{
public:
    parse_error(std::size_t line, const std::string &what)
        : error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace switchbeam
