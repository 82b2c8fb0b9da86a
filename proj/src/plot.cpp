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

#include "duplex/plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "duplex/io.hpp"

namespace duplex::plot {

namespace {

using io::format_number;

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 110.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

std::string num(double v) { return format_number(v, 6); }

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

void header(std::ostream& out, const std::string& title) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\"" << num(kHeight)
        << "\" viewBox=\"0 0 " << num(kWidth) << ' ' << num(kHeight) << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << num(kWidth / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << escape(title)
        << "</text>\n";
}

void axis_labels(std::ostream& out, const std::string& x_label, const std::string& y_label) {
    const double plot_h = kHeight - kTop - kBottom;
    out << "<text x=\"" << num(kLeft + (kWidth - kLeft - kRight) / 2) << "\" y=\"" << num(kHeight - 15)
        << "\" text-anchor=\"middle\">" << escape(x_label) << "</text>\n";
    out << "<text x=\"18\" y=\"" << num(kTop + plot_h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << num(kTop + plot_h / 2) << ")\">" << escape(y_label) << "</text>\n";
}

void tick(std::ostream& out, double x, double y, bool horizontal_axis, double value) {
    if (horizontal_axis) {
        out << "<line x1=\"" << num(x) << "\" y1=\"" << num(y) << "\" x2=\"" << num(x) << "\" y2=\"" << num(y + 5)
            << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << num(x) << "\" y=\"" << num(y + 18) << "\" text-anchor=\"middle\">" << num(value)
            << "</text>\n";
    } else {
        out << "<line x1=\"" << num(x - 5) << "\" y1=\"" << num(y) << "\" x2=\"" << num(x) << "\" y2=\"" << num(y)
            << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << num(x - 8) << "\" y=\"" << num(y + 4) << "\" text-anchor=\"end\">" << num(value)
            << "</text>\n";
    }
}

}  // namespace

std::string color_for(double value) {
    static constexpr std::array<std::array<double, 3>, 5> stops{{
        {68, 1, 84},
        {59, 82, 139},
        {33, 145, 140},
        {94, 201, 98},
        {253, 231, 37},
    }};
    const double v = std::clamp(std::isfinite(value) ? value : 0.0, 0.0, 1.0) * (stops.size() - 1);
    const auto lo = static_cast<std::size_t>(std::min(std::floor(v), static_cast<double>(stops.size() - 2)));
    const double frac = v - static_cast<double>(lo);
    char buf[8];
    int rgb[3];
    for (int c = 0; c < 3; ++c) rgb[c] = static_cast<int>(std::lround(stops[lo][c] + frac * (stops[lo + 1][c] - stops[lo][c])));
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
    return buf;
}

void write_theta_heatmap(std::ostream& out, const std::vector<ThetaRow>& rows, int theta1_count,
                         int theta2_count, const std::string& title) {
    header(out, title);
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const double cell_w = plot_w / theta1_count;
    const double cell_h = plot_h / theta2_count;

    // x = theta1, y = theta2 (increasing upwards); rows are row-major in (theta1, theta2).
    for (int i = 0; i < theta1_count; ++i) {
        for (int j = 0; j < theta2_count; ++j) {
            const ThetaRow& r = rows[static_cast<std::size_t>(i) * theta2_count + j];
            out << "<rect x=\"" << num(kLeft + i * cell_w) << "\" y=\"" << num(kTop + plot_h - (j + 1) * cell_h)
                << "\" width=\"" << num(cell_w) << "\" height=\"" << num(cell_h) << "\" fill=\"" << color_for(r.f_max)
                << "\"/>\n";
        }
    }
    out << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(plot_w) << "\" height=\""
        << num(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        tick(out, kLeft + plot_w * k / 4.0, kTop + plot_h, true, k / 4.0);
        tick(out, kLeft, kTop + plot_h - plot_h * k / 4.0, false, k / 4.0);
    }
    axis_labels(out, "theta1 / pi", "theta2 / pi");

    // Color bar, fixed to [0, 1].
    const double bar_x = kWidth - kRight + 25;
    constexpr int kBarSteps = 50;
    for (int k = 0; k < kBarSteps; ++k) {
        const double v = (k + 0.5) / kBarSteps;
        out << "<rect x=\"" << num(bar_x) << "\" y=\"" << num(kTop + plot_h * (1.0 - (k + 1.0) / kBarSteps))
            << "\" width=\"20\" height=\"" << num(plot_h / kBarSteps + 0.5) << "\" fill=\"" << color_for(v) << "\"/>\n";
    }
    for (int k = 0; k <= 4; ++k) {
        out << "<text x=\"" << num(bar_x + 26) << "\" y=\"" << num(kTop + plot_h * (1.0 - k / 4.0) + 4) << "\">"
            << num(k / 4.0) << "</text>\n";
    }
    out << "<text x=\"" << num(bar_x + 10) << "\" y=\"" << num(kTop - 8) << "\" text-anchor=\"middle\">F_max</text>\n";
    out << "</svg>\n";
}

void write_line_plot(std::ostream& out, const std::vector<double>& x, const std::vector<Series>& series,
                     const std::string& x_label, const std::string& y_label, const std::string& title) {
    static constexpr std::array<const char*, 4> kColors{"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
    header(out, title);
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const double x_lo = x.empty() ? 0.0 : *std::min_element(x.begin(), x.end());
    double x_hi = x.empty() ? 1.0 : *std::max_element(x.begin(), x.end());
    if (x_hi <= x_lo) x_hi = x_lo + 1.0;
    // Fidelities share the fixed [0, 1] range.
    auto px = [&](double v) { return kLeft + plot_w * (v - x_lo) / (x_hi - x_lo); };
    auto py = [&](double v) { return kTop + plot_h * (1.0 - std::clamp(v, 0.0, 1.0)); };

    out << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(plot_w) << "\" height=\""
        << num(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        tick(out, px(x_lo + (x_hi - x_lo) * k / 4.0), kTop + plot_h, true, x_lo + (x_hi - x_lo) * k / 4.0);
        tick(out, kLeft, py(k / 4.0), false, k / 4.0);
    }
    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kColors[s % kColors.size()];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t k = 0; k < x.size() && k < series[s].y.size(); ++k) {
            out << (k ? " " : "") << num(px(x[k])) << ',' << num(py(series[s].y[k]));
        }
        out << "\"/>\n";
        const double ly = kTop + 15 + 18.0 * static_cast<double>(s);
        out << "<line x1=\"" << num(kWidth - kRight + 8) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(kWidth - kRight + 28)
            << "\" y2=\"" << num(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << num(kWidth - kRight + 32) << "\" y=\"" << num(ly + 4) << "\">" << escape(series[s].label)
            << "</text>\n";
    }
    axis_labels(out, x_label, y_label);
    out << "</svg>\n";
}

}  // namespace duplex::plot
