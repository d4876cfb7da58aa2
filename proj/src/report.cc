// Copyright 2026 The steanesim Authors
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

#include "steanesim/report.h"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace steanesim {

namespace {

constexpr const char* kColumns[] = {"protocol", "q",        "env",          "p",         "mode",      "trials_or_weight",
                                    "seed",     "f_phys",   "f_log",        "f_phys_psm", "f_log_psm", "se_or_bound",
                                    "anc_qubits", "time_steps", "sm_rounds", "D_log",     "D_log_psm"};

long trials_or_weight(const ExperimentConfig& c) {
    return c.mode == RunMode::kMonteCarlo ? c.trials : c.max_weight;
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
    if (name == "csv") return OutputFormat::kCsv;
    if (name == "json") return OutputFormat::kJson;
    throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected csv or json)");
}

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc()) throw std::runtime_error("number formatting failed");
    return std::string(buf, end);
}

std::string csv_header() {
    std::string out;
    for (const char* c : kColumns) {
        if (!out.empty()) out += ',';
        out += c;
    }
    return out;
}

std::string csv_row(const SweepRow& row) {
    const ExperimentResult& r = row.result;
    const ExperimentConfig& c = r.config;
    std::vector<std::string> fields{c.protocol.name(),
                                    std::to_string(c.q),
                                    c.env,
                                    format_number(c.p),
                                    run_mode_name(c.mode),
                                    std::to_string(trials_or_weight(c)),
                                    std::to_string(c.seed)};
    if (row.error.empty()) {
        for (double v : {r.f_phys, r.f_log, r.f_phys_psm, r.f_log_psm, r.uncertainty(), r.resources.ancilla_qubits,
                         r.resources.time_steps, r.resources.sm_rounds}) {
            fields.push_back(format_number(v));
        }
    } else {
        fields.resize(fields.size() + 8);
    }
    fields.push_back(row.d_log ? format_number(*row.d_log) : "");
    fields.push_back(row.d_log_psm ? format_number(*row.d_log_psm) : "");
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += fields[i];
    }
    return out;
}

std::string json_row(const SweepRow& row) {
    const ExperimentResult& r = row.result;
    const ExperimentConfig& c = r.config;
    nlohmann::ordered_json j;
    j["protocol"] = c.protocol.name();
    j["q"] = c.q;
    j["env"] = c.env;
    j["p"] = c.p;
    j["mode"] = run_mode_name(c.mode);
    j["trials_or_weight"] = trials_or_weight(c);
    j["seed"] = c.seed;
    if (row.error.empty()) {
        j["f_phys"] = r.f_phys;
        j["f_log"] = r.f_log;
        j["f_phys_psm"] = r.f_phys_psm;
        j["f_log_psm"] = r.f_log_psm;
        j["se_or_bound"] = r.uncertainty();
        j["anc_qubits"] = r.resources.ancilla_qubits;
        j["time_steps"] = r.resources.time_steps;
        j["sm_rounds"] = r.resources.sm_rounds;
    } else {
        for (const char* k : {"f_phys", "f_log", "f_phys_psm", "f_log_psm", "se_or_bound", "anc_qubits", "time_steps",
                              "sm_rounds"}) {
            j[k] = nullptr;
        }
    }
    j["D_log"] = row.d_log ? nlohmann::ordered_json(*row.d_log) : nlohmann::ordered_json(nullptr);
    j["D_log_psm"] = row.d_log_psm ? nlohmann::ordered_json(*row.d_log_psm) : nlohmann::ordered_json(nullptr);
    if (!row.error.empty()) j["error"] = row.error;
    return j.dump();
}

void write_rows(std::ostream& out, const std::vector<SweepRow>& rows, OutputFormat format) {
    if (format == OutputFormat::kCsv) out << csv_header() << '\n';
    for (const SweepRow& row : rows) {
        out << (format == OutputFormat::kCsv ? csv_row(row) : json_row(row)) << '\n';
    }
}

}  // namespace steanesim
