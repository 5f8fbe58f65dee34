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

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "acsqc/dragging_plan.hpp"

namespace acsqc::cli {

enum class Mode { kSymbolic, kEvolve, kGapScan, kCompile, kVerify };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
    Mode mode = Mode::kEvolve;
    std::size_t n = 4;
    std::string plan = "chain";
    std::vector<double> thetas;
    ScheduleShape schedule = ScheduleShape::kLinear;
    double t_step = 50.0;
    double delta = 1.0;
    std::string out;
    std::uint64_t seed = 1;
    std::string circuit;  // path to a circuit file
    std::string oracle;   // optional circuit file used as the verification oracle
    std::size_t profiles = 0;
    std::size_t samples = 40;
    std::size_t max_physical = 0;
    bool compare_schedules = false;
    bool timing = false;

    bool operator==(const ExperimentConfig &) const = default;
};

/// Validates mode-specific requirements; throws ConfigError naming the offending field.
void validate(const ExperimentConfig &config);

/// Reads fields from a JSON object. `mode` is required; everything else falls back to the defaults above.
ExperimentConfig config_from_json(const nlohmann::ordered_json &j);
nlohmann::ordered_json to_json(const ExperimentConfig &config);

/// Parses and validates a JSON config file. Parse errors carry line and column.
ExperimentConfig load_config(const std::filesystem::path &path);

}  // namespace acsqc::cli
