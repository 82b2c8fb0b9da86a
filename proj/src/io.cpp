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

#include <charconv>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <numbers>
#include <ostream>
#include <sstream>
#include <system_error>

#include "json.hpp"

namespace duplex::io {

using nlohmann::json;

std::string format_number(double value, int digits) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, digits);
    if (res.ec != std::errc()) throw DomainError("cannot format number");
    return std::string(buf, res.ptr);
}

namespace {

double parse_real(const std::string& text, const std::string& original) {
    if (text.empty()) throw DomainError("empty number in '" + original + "'");
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (*first == '+') ++first;
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last) throw DomainError("cannot parse '" + original + "' as a number");
    return value;
}

}  // namespace

double parse_angle(const std::string& text) {
    // "<x>pi/<d>"
    const auto slash = text.find("pi/");
    if (slash != std::string::npos) {
        const double denom = parse_real(text.substr(slash + 3), text);
        if (denom == 0.0) throw DomainError("zero denominator in '" + text + "'");
        return parse_angle(text.substr(0, slash + 2)) / denom;
    }
    if (text.size() >= 2 && text.compare(text.size() - 2, 2, "pi") == 0) {
        const std::string coeff = text.substr(0, text.size() - 2);
        double factor = 1.0;
        if (coeff == "-") {
            factor = -1.0;
        } else if (!coeff.empty() && coeff != "+") {
            factor = parse_real(coeff, text);
        }
        return factor * std::numbers::pi;
    }
    return parse_real(text, text);
}

void write_fidelity_header(std::ostream& out) { out << "t,f_bob,f_alice\n"; }

void write_fidelity_row(std::ostream& out, const FidelityResult& row) {
    out << format_number(row.time, kCoordDigits) << ',' << format_number(row.f_bob, kCoordDigits) << ','
        << format_number(row.f_alice, kCoordDigits) << '\n';
}

void write_theta_csv(std::ostream& out, const std::vector<ThetaRow>& rows) {
    out << "theta1,theta2,f_max,tau\n";
    for (const ThetaRow& r : rows) {
        out << format_number(r.theta1, kCoordDigits) << ',' << format_number(r.theta2, kCoordDigits) << ','
            << format_number(r.f_max, kFidelityDigits) << ',' << format_number(r.tau, kCoordDigits) << '\n';
    }
}

void write_phase_csv(std::ostream& out, const std::vector<PhaseRow>& rows) {
    out << "delta_phi,f_max,tau\n";
    for (const PhaseRow& r : rows) {
        out << format_number(r.delta_phi, kCoordDigits) << ',' << format_number(r.f_max, kFidelityDigits) << ','
            << format_number(r.tau, kCoordDigits) << '\n';
    }
}

void write_length_csv(std::ostream& out, const std::vector<LengthRow>& rows) {
    out << "n,f_max_with_bob,f_max_without_bob,tau_with,tau_without,theta2_best,phi2_best\n";
    for (const LengthRow& r : rows) {
        out << r.n_sites << ',' << format_number(r.f_with_bob, kFidelityDigits) << ','
            << format_number(r.f_without_bob, kFidelityDigits) << ',' << format_number(r.tau_with, kCoordDigits)
            << ',' << format_number(r.tau_without, kCoordDigits) << ','
            << format_number(r.best_theta2, kCoordDigits) << ',' << format_number(r.best_phi2, kCoordDigits)
            << '\n';
    }
}

// ---------------------------------------------------------------------------
// Config documents

namespace {

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!obj.is_object()) throw DomainError(where + " must be an object");
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) known = known || item.key() == key;
        if (!known) throw DomainError("unknown key '" + item.key() + "' in " + where);
    }
}

template <typename T>
void read(const json& obj, const char* key, T& target) {
    if (obj.contains(key)) target = obj.at(key).get<T>();
}

json axis_to_json(const GridAxis& a) { return json{{"start", a.start}, {"stop", a.stop}, {"count", a.count}}; }

void axis_from_json(const json& j, GridAxis& a, const std::string& where) {
    reject_unknown(j, {"start", "stop", "count"}, where);
    read(j, "start", a.start);
    read(j, "stop", a.stop);
    read(j, "count", a.count);
}

}  // namespace

std::string serialize_config(const ExperimentConfig& cfg) {
    const SweepSpec& s = cfg.sweep;
    json doc;
    doc["experiment"] = to_string(s.experiment);
    doc["chain"] = {{"n_sites", s.chain.n_sites},
                    {"coupling", s.chain.coupling},
                    {"field", s.chain.field},
                    {"field_sign", to_string(s.chain.field_sign)}};
    doc["states"] = {{"theta1", s.fixed.theta1}, {"phi1", s.fixed.phi1}, {"theta2", s.fixed.theta2}, {"phi2", s.fixed.phi2}};
    doc["end"] = to_string(s.end);
    doc["window"] = {{"t_min", s.window.t_min},
                     {"t_max", s.window.t_max},
                     {"coarse_step", s.window.coarse_step},
                     {"refine_tol", s.window.refine_tol}};
    doc["grids"] = {{"theta1", axis_to_json(s.theta1_axis)},
                    {"theta2", axis_to_json(s.theta2_axis)},
                    {"delta_phi", axis_to_json(s.delta_phi_axis)},
                    {"inner_theta2", axis_to_json(s.inner_theta2)},
                    {"inner_phi2", axis_to_json(s.inner_phi2)}};
    doc["length"] = {{"first", s.length_first}, {"last", s.length_last}};
    doc["refine_passes"] = s.refine_passes;
    doc["workers"] = s.workers;
    doc["output"] = {{"csv", cfg.csv_path}, {"svg", cfg.svg_path}};
    return doc.dump(2) + "\n";
}

ExperimentConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("config is not valid JSON: ") + e.what());
    }

    ExperimentConfig cfg;
    SweepSpec& s = cfg.sweep;
    try {
        reject_unknown(doc, {"experiment", "chain", "states", "end", "window", "grids", "length", "refine_passes",
                             "workers", "output"},
                       "config");
        if (doc.contains("experiment")) s.experiment = experiment_from_string(doc.at("experiment").get<std::string>());
        if (doc.contains("chain")) {
            const json& c = doc.at("chain");
            reject_unknown(c, {"n_sites", "coupling", "field", "field_sign"}, "chain");
            read(c, "n_sites", s.chain.n_sites);
            read(c, "coupling", s.chain.coupling);
            read(c, "field", s.chain.field);
            if (c.contains("field_sign")) s.chain.field_sign = field_sign_from_string(c.at("field_sign").get<std::string>());
        }
        if (doc.contains("states")) {
            const json& st = doc.at("states");
            reject_unknown(st, {"theta1", "phi1", "theta2", "phi2"}, "states");
            read(st, "theta1", s.fixed.theta1);
            read(st, "phi1", s.fixed.phi1);
            read(st, "theta2", s.fixed.theta2);
            read(st, "phi2", s.fixed.phi2);
        }
        if (doc.contains("end")) s.end = end_from_string(doc.at("end").get<std::string>());
        if (doc.contains("window")) {
            const json& w = doc.at("window");
            reject_unknown(w, {"t_min", "t_max", "coarse_step", "refine_tol"}, "window");
            read(w, "t_min", s.window.t_min);
            read(w, "t_max", s.window.t_max);
            read(w, "coarse_step", s.window.coarse_step);
            read(w, "refine_tol", s.window.refine_tol);
        }
        if (doc.contains("grids")) {
            const json& g = doc.at("grids");
            reject_unknown(g, {"theta1", "theta2", "delta_phi", "inner_theta2", "inner_phi2"}, "grids");
            if (g.contains("theta1")) axis_from_json(g.at("theta1"), s.theta1_axis, "grids.theta1");
            if (g.contains("theta2")) axis_from_json(g.at("theta2"), s.theta2_axis, "grids.theta2");
            if (g.contains("delta_phi")) axis_from_json(g.at("delta_phi"), s.delta_phi_axis, "grids.delta_phi");
            if (g.contains("inner_theta2")) axis_from_json(g.at("inner_theta2"), s.inner_theta2, "grids.inner_theta2");
            if (g.contains("inner_phi2")) axis_from_json(g.at("inner_phi2"), s.inner_phi2, "grids.inner_phi2");
        }
        if (doc.contains("length")) {
            const json& l = doc.at("length");
            reject_unknown(l, {"first", "last"}, "length");
            read(l, "first", s.length_first);
            read(l, "last", s.length_last);
        }
        read(doc, "refine_passes", s.refine_passes);
        read(doc, "workers", s.workers);
        if (doc.contains("output")) {
            const json& o = doc.at("output");
            reject_unknown(o, {"csv", "svg"}, "output");
            read(o, "csv", cfg.csv_path);
            read(o, "svg", cfg.svg_path);
        }
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad config value: ") + e.what());
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open config file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

}  // namespace duplex::io
