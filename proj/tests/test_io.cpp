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

#include "duplex/io.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "duplex/reproduce.hpp"
#include "test_util.hpp"

using namespace duplex;
using duplex::testing::kPi;
using duplex::testing::uniform;

TEST(ParseAngle, forms) {
    EXPECT_EQ(io::parse_angle("1.25"), 1.25);
    EXPECT_EQ(io::parse_angle("pi"), kPi);
    EXPECT_EQ(io::parse_angle("-pi"), -kPi);
    EXPECT_EQ(io::parse_angle("-2pi"), -2.0 * kPi);
    EXPECT_NEAR(io::parse_angle("0.6pi"), 0.6 * kPi, 1e-15);
    EXPECT_NEAR(io::parse_angle("2pi/3"), 2.0 * kPi / 3.0, 1e-15);
    EXPECT_NEAR(io::parse_angle("+0.5pi"), kPi / 2.0, 1e-15);
    for (const char* bad : {"", "abc", "pi/0", "1.0x", "2pi/"}) EXPECT_THROW(io::parse_angle(bad), DomainError) << bad;
}

TEST(FormatNumber, round_trip_and_locale_free) {
    EXPECT_EQ(io::format_number(0.5, 6), "0.5");
    EXPECT_EQ(io::format_number(1.0, 6), "1");
    EXPECT_EQ(io::format_number(0.123456789, 6), "0.123457");
    auto& rng = duplex::testing::shared_rng();
    for (int k = 0; k < 100; ++k) {
        const double x = uniform(rng, -100.0, 100.0);
        EXPECT_NEAR(std::stod(io::format_number(x, io::kCoordDigits)), x, 1e-10 * std::max(1.0, std::abs(x)));
    }
}

TEST(Csv, headers_and_rows) {
    std::ostringstream theta;
    io::write_theta_csv(theta, {{0.0, kPi, 0.5, 12.0}});
    EXPECT_EQ(theta.str(), "theta1,theta2,f_max,tau\n0,3.14159265359,0.5,12\n");

    std::ostringstream phase;
    io::write_phase_csv(phase, {{-1.0, 0.25, 10.5}});
    EXPECT_EQ(phase.str(), "delta_phi,f_max,tau\n-1,0.25,10.5\n");

    std::ostringstream length;
    io::write_length_csv(length, {{5, 0.9, 0.8, 11.0, 12.0, 1.0, 2.0}});
    EXPECT_EQ(length.str(),
              "n,f_max_with_bob,f_max_without_bob,tau_with,tau_without,theta2_best,phi2_best\n"
              "5,0.9,0.8,11,12,1,2\n");

    std::ostringstream fid;
    io::write_fidelity_header(fid);
    io::write_fidelity_row(fid, FidelityResult{1.0, 0.5, 0.0});
    EXPECT_EQ(fid.str(), "t,f_bob,f_alice\n0,1,0.5\n");
}

TEST(Config, defaults_round_trip) {
    const io::ExperimentConfig cfg;
    EXPECT_EQ(io::parse_config(io::serialize_config(cfg)), cfg);
    EXPECT_EQ(io::parse_config("{}"), cfg);
}

TEST(Config, random_round_trip) {
    auto& rng = duplex::testing::shared_rng();
    for (int k = 0; k < 30; ++k) {
        io::ExperimentConfig cfg;
        SweepSpec& s = cfg.sweep;
        s.experiment = static_cast<Experiment>(k % 4);
        s.chain = duplex::testing::random_chain(rng, 20);
        s.chain.field_sign = k % 2 ? FieldSign::eq1_literal : FieldSign::eq3_normative;
        s.fixed = PointParams{uniform(rng, 0, kPi), uniform(rng, 0, 6), uniform(rng, 0, kPi), uniform(rng, 0, 6)};
        s.end = k % 3 ? End::bob : End::alice;
        s.window = TimeWindow{uniform(rng, 0, 5), uniform(rng, 10, 60), uniform(rng, 0.01, 0.1), 1e-5};
        s.theta1_axis = GridAxis{0.0, uniform(rng, 1, 3), 1 + k};
        s.delta_phi_axis = GridAxis{-uniform(rng, 1, 7), uniform(rng, 1, 7), 2 + k};
        s.length_first = 2 + k % 5;
        s.length_last = 10 + k;
        s.refine_passes = k % 3;
        s.workers = k % 5;
        cfg.csv_path = "out/run" + std::to_string(k) + ".csv";
        cfg.svg_path = k % 2 ? "" : "plot.svg";
        EXPECT_EQ(io::parse_config(io::serialize_config(cfg)), cfg) << "case " << k;
    }
}

TEST(Config, partial_documents_and_errors) {
    const io::ExperimentConfig cfg = io::parse_config(R"({"chain": {"n_sites": 12, "field": 0.1}, "end": "alice"})");
    EXPECT_EQ(cfg.sweep.chain.n_sites, 12);
    EXPECT_EQ(cfg.sweep.chain.field, 0.1);
    EXPECT_EQ(cfg.sweep.chain.coupling, 1.0);
    EXPECT_EQ(cfg.sweep.end, End::alice);

    EXPECT_THROW(io::parse_config(R"({"chian": {}})"), DomainError);
    EXPECT_THROW(io::parse_config(R"({"chain": {"sites": 3}})"), DomainError);
    EXPECT_THROW(io::parse_config(R"({"chain": {"n_sites": "ten"}})"), DomainError);
    EXPECT_THROW(io::parse_config("{"), DomainError);
    EXPECT_THROW(io::parse_config(R"({"experiment": "spin"})"), DomainError);
    EXPECT_THROW(io::load_config("/nonexistent/config.json"), DomainError);
}

TEST(Figures, names_and_presets) {
    for (const char* name : {"fig2a", "fig2b", "fig2c", "fig3a", "fig3b", "fig3c", "fig4a", "fig4b"}) {
        EXPECT_EQ(to_string(figure_from_string(name)), name);
        EXPECT_NO_THROW(figure_spec(figure_from_string(name)).validate());
    }
    EXPECT_THROW(figure_from_string("fig5"), DomainError);
    EXPECT_EQ(figure_spec(Figure::fig2c).chain.field, 1.0);
    EXPECT_EQ(figure_spec(Figure::fig4a).experiment, Experiment::length_scan);
}

TEST(RunExperiment, single_point_table) {
    SweepSpec spec;
    spec.chain.n_sites = 5;
    std::ostringstream csv;
    run_experiment(spec, csv, nullptr, "");
    EXPECT_EQ(csv.str(), "f_max,tau\n1,10\n");
}

TEST(RunExperiment, svg_output) {
    SweepSpec spec;
    spec.experiment = Experiment::phase_scan;
    spec.chain.n_sites = 4;
    spec.fixed.theta1 = spec.fixed.theta2 = kPi / 2.0;
    spec.delta_phi_axis = GridAxis{-kPi, kPi, 5};
    std::ostringstream csv, svg;
    run_experiment(spec, csv, &svg, "scan");
    EXPECT_NE(svg.str().find("<svg"), std::string::npos);
    EXPECT_NE(svg.str().find("</svg>"), std::string::npos);
    const std::string table = csv.str();
    EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 6);
}
