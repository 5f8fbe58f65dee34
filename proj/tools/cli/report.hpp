// Copyright 2026 The acsqc Authors
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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "config.hpp"

namespace acsqc::cli {

/// Rows of numbers for scans. Integral columns print without a fraction.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    std::vector<bool> integral;  // per column

    bool operator==(const Table &) const = default;
};

struct RunReport {
    nlohmann::ordered_json config;
    nlohmann::ordered_json versions;
    nlohmann::ordered_json results;
    std::optional<double> wall_seconds;
    Table table;  // only filled by scans

    bool operator==(const RunReport &) const = default;
};

enum class ReportFormat { kJson, kCsv };

RunReport make_report(const ExperimentConfig &config);

/// JSON with stable key order and doubles at 17 significant digits.
std::string to_json_text(const RunReport &report);
std::string to_csv_text(const Table &table);

void write_report(const RunReport &report, std::ostream &out, ReportFormat format);
void write_report(const RunReport &report, const std::filesystem::path &path, ReportFormat format);

RunReport parse_json_report(const std::string &text);
Table parse_csv_table(const std::string &text);

/// Writes a double as JSON/CSV text: 17 significant digits, always with a fraction or exponent.
std::string format_double(double value);

}  // namespace acsqc::cli
