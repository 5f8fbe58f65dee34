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

#include "config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace acsqc::cli {

namespace {

constexpr Mode kModes[] = {Mode::kSymbolic, Mode::kEvolve, Mode::kGapScan, Mode::kCompile, Mode::kVerify};

template <typename T>
void read_field(const nlohmann::ordered_json &j, const char *key, T &into) {
    if (!j.contains(key)) {
        return;
    }
    try {
        into = j.at(key).get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(fmt::format("field '{}': {}", key, e.what()));
    }
}

void require(bool ok, const char *field, std::string_view what) {
    if (!ok) {
        throw ConfigError(fmt::format("field '{}': {}", field, what));
    }
}

std::pair<std::size_t, std::size_t> line_and_column(const std::string &text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t k = 0; k < std::min(byte, text.size()); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

std::string_view to_string(Mode mode) {
    switch (mode) {
        case Mode::kSymbolic:
            return "symbolic";
        case Mode::kEvolve:
            return "evolve";
        case Mode::kGapScan:
            return "gap-scan";
        case Mode::kCompile:
            return "compile";
        case Mode::kVerify:
            return "verify";
    }
    return "?";
}

Mode parse_mode(std::string_view text) {
    for (Mode m : kModes) {
        if (text == to_string(m)) {
            return m;
        }
    }
    throw ConfigError(fmt::format("field 'mode': unknown mode '{}'", text));
}

void validate(const ExperimentConfig &c) {
    const bool circuit_mode = c.mode == Mode::kCompile || c.mode == Mode::kVerify;
    if (circuit_mode) {
        require(!c.circuit.empty(), "circuit", "required for compile and verify");
    } else {
        require(c.n >= 2 && c.n <= 20, "n", "must be in [2, 20]");
        require(c.thetas.empty() || c.thetas.size() == c.n, "thetas", "needs one angle per site");
    }
    for (double t : c.thetas) {
        require(std::isfinite(t), "thetas", "must be finite");
    }
    require(c.oracle.empty() || c.mode == Mode::kVerify, "oracle", "only used by verify");
    require(std::isfinite(c.t_step) && c.t_step > 0, "t_step", "must be finite and positive");
    require(std::isfinite(c.delta) && c.delta > 0, "delta", "must be finite and positive");
    require(c.samples >= 2, "samples", "must be at least 2");
    require(c.profiles == 0 || c.n >= 3, "profiles", "frame checks need n >= 3");
}

ExperimentConfig config_from_json(const nlohmann::ordered_json &j) {
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    if (!j.contains("mode")) {
        throw ConfigError("field 'mode': missing");
    }
    static const char *const kKnown[] = {"mode", "n", "plan", "thetas", "schedule", "t_step", "delta", "out", "seed",
        "circuit", "oracle", "profiles", "samples", "max_physical", "compare_schedules", "timing"};
    for (const auto &item : j.items()) {
        if (std::find(std::begin(kKnown), std::end(kKnown), item.key()) == std::end(kKnown)) {
            throw ConfigError(fmt::format("field '{}': unknown", item.key()));
        }
    }
    ExperimentConfig c;
    std::string text;
    read_field(j, "mode", text);
    c.mode = parse_mode(text);
    read_field(j, "n", c.n);
    read_field(j, "plan", c.plan);
    read_field(j, "thetas", c.thetas);
    if (j.contains("schedule")) {
        read_field(j, "schedule", text);
        try {
            c.schedule = parse_schedule_shape(text);
        } catch (const std::invalid_argument &e) {
            throw ConfigError(fmt::format("field 'schedule': {}", e.what()));
        }
    }
    read_field(j, "t_step", c.t_step);
    read_field(j, "delta", c.delta);
    read_field(j, "out", c.out);
    read_field(j, "seed", c.seed);
    read_field(j, "circuit", c.circuit);
    read_field(j, "oracle", c.oracle);
    read_field(j, "profiles", c.profiles);
    read_field(j, "samples", c.samples);
    read_field(j, "max_physical", c.max_physical);
    read_field(j, "compare_schedules", c.compare_schedules);
    read_field(j, "timing", c.timing);
    return c;
}

nlohmann::ordered_json to_json(const ExperimentConfig &c) {
    nlohmann::ordered_json j;
    j["mode"] = to_string(c.mode);
    j["n"] = c.n;
    j["plan"] = c.plan;
    j["thetas"] = c.thetas;
    j["schedule"] = to_string(c.schedule);
    j["t_step"] = c.t_step;
    j["delta"] = c.delta;
    j["out"] = c.out;
    j["seed"] = c.seed;
    j["circuit"] = c.circuit;
    j["oracle"] = c.oracle;
    j["profiles"] = c.profiles;
    j["samples"] = c.samples;
    j["max_physical"] = c.max_physical;
    j["compare_schedules"] = c.compare_schedules;
    j["timing"] = c.timing;
    return j;
}

ExperimentConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(fmt::format("{}: cannot open", path.string()));
    }
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        const auto [line, col] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ConfigError(fmt::format("{}:{}:{}: malformed JSON", path.string(), line, col));
    }
    try {
        auto c = config_from_json(j);
        validate(c);
        return c;
    } catch (const ConfigError &e) {
        throw ConfigError(fmt::format("{}: {}", path.string(), e.what()));
    }
}

}  // namespace acsqc::cli
