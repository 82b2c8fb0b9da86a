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

namespace duplex::plot {

/// Heatmap of F_max over (theta1, theta2). The color scale is pinned to [0, 1]
/// so different panels compare directly.
void write_theta_heatmap(std::ostream& out, const std::vector<ThetaRow>& rows, int theta1_count,
                         int theta2_count, const std::string& title);

struct Series {
    std::string label;
    std::vector<double> y;
};

/// Line plot of one or more series over a shared x axis.
void write_line_plot(std::ostream& out, const std::vector<double>& x, const std::vector<Series>& series,
                     const std::string& x_label, const std::string& y_label, const std::string& title);

/// Piecewise-linear map of [0, 1] onto a perceptual blue-green-yellow ramp,
/// returned as "#rrggbb". Values outside [0, 1] are clamped.
std::string color_for(double value);

}  // namespace duplex::plot
