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

#include "duplex/sweep.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "duplex/parallel.hpp"
#include "test_util.hpp"

using namespace duplex;
using duplex::testing::kPi;

namespace {

const QubitState kDown = make_qubit(0.0, 0.0);

}  // namespace

TEST(TimeWindow, coarse_grid) {
    const TimeWindow w;
    EXPECT_EQ(w.coarse_count(), 801);
    EXPECT_DOUBLE_EQ(w.coarse_time(0), 10.0);
    EXPECT_DOUBLE_EQ(w.coarse_time(800), 50.0);
    const TimeWindow ragged{0.0, 1.0, 0.3, 1e-4};
    EXPECT_EQ(ragged.coarse_count(), 5);
    EXPECT_DOUBLE_EQ(ragged.coarse_time(4), 1.0);
    EXPECT_THROW((TimeWindow{5.0, 1.0, 0.1, 1e-4}.validate()), DomainError);
    EXPECT_THROW((TimeWindow{0.0, 1.0, 0.0, 1e-4}.validate()), DomainError);
}

TEST(GridAxis, values) {
    const GridAxis a{0.0, 1.0, 5};
    EXPECT_DOUBLE_EQ(a.value(4), 1.0);
    EXPECT_DOUBLE_EQ(a.value(2), 0.5);
    EXPECT_EQ(a.values().size(), 5u);
    EXPECT_EQ((GridAxis{0.3, 9.0, 1}.values()), std::vector<double>{0.3});
    EXPECT_THROW((GridAxis{0.0, 1.0, 0}.validate("x")), DomainError);
}

TEST(GoldenSection, finds_parabola_peak) {
    const ArgMax m = golden_section_maximize([](double x) { return -(x - 0.3) * (x - 0.3); }, -1.0, 2.0, 1e-8);
    EXPECT_NEAR(m.x, 0.3, 1e-7);
    EXPECT_GT(m.evaluations, 10);
}

TEST(FmaxSearch, both_senders_down_is_perfect_at_window_start) {
    const SearchResult r = fmax_search(ChainConfig{10, 1.0, 0.0}, kDown, kDown, TimeWindow{}, End::bob);
    EXPECT_NEAR(r.f_max, 1.0, 1e-12);
    EXPECT_DOUBLE_EQ(r.tau, 10.0);
}

TEST(FmaxSearch, reference_peaks_without_field) {
    const ChainConfig cfg{10, 1.0, 0.0};
    const QubitState alice = make_qubit(0.6 * kPi, 0.0);
    const SearchResult alone = fmax_search(cfg, alice, kDown, TimeWindow{}, End::bob);
    EXPECT_NEAR(alone.f_max, 0.67, 0.02);
    EXPECT_NEAR(alone.tau, 29.2, 0.1);
    const SearchResult duplex = fmax_search(cfg, alice, alice, TimeWindow{}, End::bob);
    EXPECT_NEAR(duplex.f_max, 0.91, 0.02);

    const QubitState a3 = make_qubit(2.0 * kPi / 3.0, 0.0);
    EXPECT_NEAR(fmax_search(cfg, a3, a3, TimeWindow{}, End::bob).tau, 23.1, 0.1);
}

TEST(FmaxSearch, refinement_never_loses_to_grid) {
    auto& rng = duplex::testing::shared_rng();
    for (int k = 0; k < 20; ++k) {
        const ChainConfig cfg = duplex::testing::random_chain(rng, 12);
        const QubitState s1 = duplex::testing::random_qubit(rng);
        const QubitState s2 = duplex::testing::random_qubit(rng);
        const SearchResult r = fmax_search(cfg, s1, s2, TimeWindow{}, End::bob);
        EXPECT_GE(r.f_max, r.coarse_best);
        EXPECT_GE(r.tau, 10.0);
        EXPECT_LE(r.tau, 50.0);
        EXPECT_LE(std::abs(r.tau - r.coarse_tau), 0.05 + 1e-12);
        const PropagatorTable table(cfg);
        EXPECT_NEAR(fidelity_at(table, s1, s2, r.tau, End::bob), r.f_max, 1e-12);
    }
}

TEST(FmaxSearch, finer_grid_agrees) {
    const ChainConfig cfg{10, 1.0, 0.1};
    const QubitState s1 = make_qubit(0.6 * kPi, 0.0);
    const QubitState s2 = make_qubit(0.4 * kPi, 1.0);
    const SearchResult coarse = fmax_search(cfg, s1, s2, TimeWindow{}, End::bob);
    const SearchResult fine = fmax_search(cfg, s1, s2, TimeWindow{10.0, 50.0, 0.025, 1e-4}, End::bob);
    EXPECT_NEAR(coarse.f_max, fine.f_max, 1e-3);
}

TEST(FmaxSearch, alice_end_mirrors_bob_end) {
    const ChainConfig cfg{8, 1.0, 0.3};
    const QubitState s1 = make_qubit(1.3, 0.4);
    const QubitState s2 = make_qubit(2.1, 1.7);
    const SearchResult bob = fmax_search(cfg, s1, s2, TimeWindow{}, End::bob);
    const SearchResult alice = fmax_search(cfg, s2, s1, TimeWindow{}, End::alice);
    EXPECT_NEAR(bob.f_max, alice.f_max, 1e-12);
    EXPECT_NEAR(bob.tau, alice.tau, 1e-9);
}

TEST(ParallelMap, slot_order_and_errors) {
    const auto squares = parallel_map(100, 4, [](std::size_t k) { return static_cast<int>(k * k); });
    for (std::size_t k = 0; k < squares.size(); ++k) EXPECT_EQ(squares[k], static_cast<int>(k * k));
    EXPECT_THROW(parallel_map(10, 3,
                              [](std::size_t k) {
                                  if (k == 7) throw DomainError("boom");
                                  return 0;
                              }),
                 DomainError);
    EXPECT_GE(resolve_workers(0), 1);
}

TEST(SweepTheta, small_grid_matches_single_points_and_is_worker_independent) {
    SweepSpec spec;
    spec.experiment = Experiment::theta_grid;
    spec.chain = ChainConfig{6, 1.0, 0.1};
    spec.theta1_axis = GridAxis{0.0, kPi, 4};
    spec.theta2_axis = GridAxis{0.0, kPi, 3};
    const std::vector<ThetaRow> serial = sweep_theta(spec);
    spec.workers = 4;
    const std::vector<ThetaRow> threaded = sweep_theta(spec);
    ASSERT_EQ(serial.size(), 12u);
    for (std::size_t k = 0; k < serial.size(); ++k) {
        EXPECT_EQ(serial[k].f_max, threaded[k].f_max);
        EXPECT_EQ(serial[k].tau, threaded[k].tau);
    }
    const ThetaRow& cell = serial[2 * 3 + 1];
    EXPECT_DOUBLE_EQ(cell.theta1, 2.0 * kPi / 3.0);
    EXPECT_DOUBLE_EQ(cell.theta2, kPi / 2.0);
    const SearchResult direct =
        fmax_search(spec.chain, make_qubit(cell.theta1, 0.0), make_qubit(cell.theta2, 0.0), spec.window, End::bob);
    EXPECT_EQ(cell.f_max, direct.f_max);
    EXPECT_NEAR(serial[0].f_max, 1.0, 1e-12);
}

TEST(SweepPhase, bob_absent_is_phase_independent) {
    SweepSpec spec;
    spec.experiment = Experiment::phase_scan;
    spec.fixed.theta1 = 0.6 * kPi;
    spec.fixed.theta2 = 0.0;
    spec.delta_phi_axis = GridAxis{-2.0 * kPi, 2.0 * kPi, 17};
    const std::vector<PhaseRow> rows = sweep_phase(spec);
    for (const PhaseRow& r : rows) EXPECT_NEAR(r.f_max, rows.front().f_max, 1e-10);
}

TEST(SweepPhase, periodic_in_two_pi) {
    SweepSpec spec;
    spec.fixed.theta1 = 0.4 * kPi;
    spec.fixed.theta2 = 0.7 * kPi;
    spec.delta_phi_axis = GridAxis{-2.0 * kPi, 2.0 * kPi, 9};
    const std::vector<PhaseRow> rows = sweep_phase(spec);
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(rows[k].f_max, rows[k + 4].f_max, 1e-10);
}

TEST(SweepLength, with_bob_never_below_without) {
    SweepSpec spec;
    spec.experiment = Experiment::length_scan;
    spec.fixed.theta1 = 2.0 * kPi / 3.0;
    spec.length_first = 3;
    spec.length_last = 8;
    spec.inner_theta2 = GridAxis{0.0, kPi, 5};
    spec.inner_phi2 = GridAxis{0.0, 2.0 * kPi, 5};
    const std::vector<LengthRow> rows = sweep_length(spec);
    ASSERT_EQ(rows.size(), 6u);
    for (const LengthRow& r : rows) {
        EXPECT_GE(r.f_with_bob, r.f_without_bob - 1e-12) << "N=" << r.n_sites;
        EXPECT_GE(r.best_theta2, 0.0);
        EXPECT_LE(r.best_theta2, kPi);
        EXPECT_GE(r.best_phi2, 0.0);
        EXPECT_LT(r.best_phi2, 2.0 * kPi);
    }
    spec.workers = 3;
    const std::vector<LengthRow> threaded = sweep_length(spec);
    for (std::size_t k = 0; k < rows.size(); ++k) EXPECT_EQ(rows[k].f_with_bob, threaded[k].f_with_bob);
}

TEST(OptimizeBob, matches_length_row) {
    SweepSpec spec;
    spec.fixed.theta1 = 2.0 * kPi / 3.0;
    spec.length_first = spec.length_last = 6;
    spec.inner_theta2 = GridAxis{0.0, kPi, 5};
    spec.inner_phi2 = GridAxis{0.0, 2.0 * kPi, 5};
    ChainConfig cfg = spec.chain;
    cfg.n_sites = 6;
    const SearchResult r = optimize_bob(cfg, spec);
    const LengthRow row = sweep_length(spec).front();
    EXPECT_EQ(r.f_max, row.f_with_bob);
    EXPECT_EQ(r.params.theta2, row.best_theta2);
}

TEST(SweepSpec, validation) {
    SweepSpec spec;
    spec.length_first = 1;
    EXPECT_THROW(spec.validate(), DomainError);
    spec = SweepSpec{};
    spec.workers = -1;
    EXPECT_THROW(spec.validate(), DomainError);
    EXPECT_EQ(experiment_from_string(to_string(Experiment::length_scan)), Experiment::length_scan);
}
