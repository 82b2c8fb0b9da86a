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

#include "duplex/io.hpp"
#include "duplex/sweep.hpp"

namespace duplex {

/// Published figure panels. fig2*: F_max over (theta1, theta2);
/// fig3*: F_max over delta_phi; fig4*: F_max over chain length.
enum class Figure { fig2a, fig2b, fig2c, fig3a, fig3b, fig3c, fig4a, fig4b };

Figure figure_from_string(const std::string& text);
std::string to_string(Figure fig);

/// Default sweep for a panel: N = 10 for figs 2-3, h = 0.0 / 0.1 / 1.0 for
/// panels a / b / c (fig4: a = 0.0, b = 1.0), phases zero, Bob's end.
/// Fig. 3 holds theta1 = theta2 = pi/2; Fig. 4 fixes Alice at
/// (|0> + sqrt(3)|1>) / 2, i.e. theta1 = 2pi/3.
SweepSpec figure_spec(Figure fig);

/// Runs the sweep, writing the CSV table to `csv` and, when `svg` is not
/// null, the rendered heatmap or line plot.
void run_experiment(const SweepSpec& spec, std::ostream& csv, std::ostream* svg, const std::string& title);

/// File variant; an empty `svg_path` skips the graphics. Throws
/// std::runtime_error on I/O failure.
void run_experiment(const SweepSpec& spec, const std::string& csv_path, const std::string& svg_path,
                    const std::string& title);

}  // namespace duplex
