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

#include "duplex/chain_model.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "test_util.hpp"

using namespace duplex;
using duplex::testing::kPi;

TEST(QubitState, poles_and_equator) {
    const QubitState north = make_qubit(0.0, 0.0);
    EXPECT_EQ(north.alpha(), cplx(1.0, 0.0));
    EXPECT_EQ(north.beta(), cplx(0.0, 0.0));

    const QubitState south = make_qubit(kPi, 0.0);
    EXPECT_NEAR(std::abs(south.alpha()), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(south.beta() - cplx(1.0, 0.0)), 0.0, 1e-15);

    const QubitState eq = make_qubit(kPi / 2, kPi / 2);
    EXPECT_NEAR(std::abs(eq.alpha() - cplx(1.0 / std::sqrt(2.0), 0.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(eq.beta() - cplx(0.0, 1.0 / std::sqrt(2.0))), 0.0, 1e-15);
}

TEST(QubitState, theta_out_of_range_is_rejected) {
    EXPECT_THROW(make_qubit(-0.1, 0.0), DomainError);
    EXPECT_THROW(make_qubit(kPi + 1e-9, 0.0), DomainError);
    EXPECT_THROW(make_qubit(std::numeric_limits<double>::quiet_NaN(), 0.0), DomainError);
    EXPECT_THROW(make_qubit(1.0, std::numeric_limits<double>::infinity()), DomainError);
}

TEST(QubitState, normalized_and_phase_periodic) {
    auto& rng = duplex::testing::shared_rng();
    for (int k = 0; k < 200; ++k) {
        const double theta = duplex::testing::uniform(rng, 0.0, kPi);
        const double phi = duplex::testing::uniform(rng, -20.0, 20.0);
        const QubitState a = make_qubit(theta, phi);
        const QubitState b = make_qubit(theta, phi + 2.0 * kPi);
        EXPECT_NEAR(std::norm(a.alpha()) + std::norm(a.beta()), 1.0, 1e-12);
        EXPECT_NEAR(std::abs(a.alpha() - b.alpha()), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(a.beta() - b.beta()), 0.0, 1e-12);
        EXPECT_GE(a.phi(), 0.0);
        EXPECT_LT(a.phi(), 2.0 * kPi);
    }
}

TEST(ChainConfig, validation) {
    EXPECT_NO_THROW(validate_config(ChainConfig{10, 1.0, 0.0}));
    EXPECT_THROW(validate_config(ChainConfig{1, 1.0, 0.0}), DomainError);
    EXPECT_THROW(validate_config(ChainConfig{10, 0.0, 0.0}), DomainError);
    EXPECT_THROW(validate_config(ChainConfig{10, 1.0, std::nan("")}), DomainError);
    EXPECT_THROW(validate_config(ChainConfig{10, std::numeric_limits<double>::infinity(), 0.0}), DomainError);

    const ChainConfig cfg{7, 0.8, 0.3, FieldSign::eq1_literal};
    EXPECT_EQ(validate_config(cfg), cfg);
}

TEST(ChainConfig, field_sign_names) {
    EXPECT_EQ(field_sign_from_string("eq3"), FieldSign::eq3_normative);
    EXPECT_EQ(field_sign_from_string("eq1_literal"), FieldSign::eq1_literal);
    EXPECT_EQ(to_string(FieldSign::eq1_literal), "eq1");
    EXPECT_THROW(field_sign_from_string("up"), DomainError);
}
