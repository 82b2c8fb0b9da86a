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

#include <cmath>
#include <numbers>

namespace duplex {

std::string to_string(FieldSign sign) {
    return sign == FieldSign::eq3_normative ? "eq3" : "eq1";
}

FieldSign field_sign_from_string(const std::string& text) {
    if (text == "eq3" || text == "eq3_normative") return FieldSign::eq3_normative;
    if (text == "eq1" || text == "eq1_literal") return FieldSign::eq1_literal;
    throw DomainError("unknown field sign convention '" + text + "' (expected eq3 or eq1)");
}

const ChainConfig& validate_config(const ChainConfig& cfg) {
    if (cfg.n_sites < 2) {
        throw DomainError("chain needs at least 2 sites, got " + std::to_string(cfg.n_sites));
    }
    if (!std::isfinite(cfg.coupling) || cfg.coupling == 0.0) {
        throw DomainError("coupling must be finite and nonzero");
    }
    if (!std::isfinite(cfg.field)) {
        throw DomainError("field must be finite");
    }
    return cfg;
}

cplx QubitState::overlap(const QubitState& other) const {
    return std::conj(alpha_) * other.alpha_ + std::conj(beta_) * other.beta_;
}

QubitState make_qubit(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi)) {
        throw DomainError("qubit angles must be finite");
    }
    if (theta < 0.0 || theta > std::numbers::pi) {
        throw DomainError("theta must lie in [0, pi]");
    }
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double reduced = std::fmod(phi, two_pi);
    if (reduced < 0.0) reduced += two_pi;

    QubitState s;
    s.theta_ = theta;
    s.phi_ = reduced;
    s.alpha_ = cplx(std::cos(theta / 2.0), 0.0);
    s.beta_ = std::sin(theta / 2.0) * std::polar(1.0, reduced);
    return s;
}

}  // namespace duplex
