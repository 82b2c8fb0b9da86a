// Copyright 2026 The duplexchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "duplex/sweep.hpp"

namespace duplex::io {

/// Shortest general-format rendering with `digits` significant digits.
/// Locale independent ('.' decimal separator).
std::string format_number(double value, int digits);

inline constexpr int kCoordDigits = 12;
inline constexpr int kFidelityDigits = 6;

/// Accepts plain radians ("1.25"), a multiple of pi ("0.6pi", "pi", "-2pi"),
/// or a fraction of one ("2pi/3").
double parse_angle(const std::string& text);

// CSV tables. Every line ends in '\n'.
void write_fidelity_header(std::ostream& out);
void write_fidelity_row(std::ostream& out, const FidelityResult& row);
void write_theta_csv(std::ostream& out, const std::vector<ThetaRow>& rows);
void write_phase_csv(std::ostream& out, const std::vector<PhaseRow>& rows);
void write_length_csv(std::ostream& out, const std::vector<LengthRow>& rows);

/// Sweep description plus where to put the results.
struct ExperimentConfig {
    SweepSpec sweep;
    std::string csv_path;
    std::string svg_path;

    bool operator==(const ExperimentConfig&) const = default;
};

/// JSON document; see docs/config.md for the schema. Missing keys keep their
/// defaults, unknown keys are rejected.
std::string serialize_config(const ExperimentConfig& cfg);
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

}  // namespace duplex::io
