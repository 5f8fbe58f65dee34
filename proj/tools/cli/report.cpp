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

#include "report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <Eigen/Core>
#include <fmt/format.h>

#ifndef ACSQC_VERSION
#define ACSQC_VERSION "0.0.0"
#endif

namespace acsqc::cli {

namespace {

using Json = nlohmann::ordered_json;

bool is_scalar(const Json &j) { return !j.is_object() && !j.is_array(); }

void write_json(std::string &out, const Json &j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto &item : j.items()) {
                if (!first) {
                    out += ",\n";
                }
                first = false;
                out += inner + Json(item.key()).dump() + ": ";
                write_json(out, item.value(), indent + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case Json::value_t::array: {
            const bool flat = std::all_of(j.begin(), j.end(), is_scalar);
            out += "[";
            for (std::size_t k = 0; k < j.size(); ++k) {
                out += k == 0 ? "" : ",";
                if (!flat) {
                    out += "\n" + inner;
                } else if (k > 0) {
                    out += " ";
                }
                write_json(out, j[k], indent + 1);
            }
            out += (!flat && !j.empty()) ? "\n" + pad + "]" : "]";
            return;
        }
        case Json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump();
    }
}

std::vector<std::string> split(const std::string &line, char sep) {
    std::vector<std::string> cells;
    std::stringstream in(line);
    std::string cell;
    while (std::getline(in, cell, sep)) {
        cells.push_back(cell);
    }
    return cells;
}

}  // namespace

std::string format_double(double value) {
    if (!std::isfinite(value)) {
        throw std::domain_error("reports cannot hold non-finite numbers");
    }
    std::string s = fmt::format("{:.17g}", value);
    if (s.find_first_of(".e") == std::string::npos) {
        s += ".0";
    }
    return s;
}

RunReport make_report(const ExperimentConfig &config) {
    RunReport r;
    r.config = to_json(config);
    r.versions["acsqc"] = ACSQC_VERSION;
    r.versions["eigen"] = fmt::format("{}.{}.{}", EIGEN_WORLD_VERSION, EIGEN_MAJOR_VERSION, EIGEN_MINOR_VERSION);
    r.results = Json::object();
    return r;
}

std::string to_json_text(const RunReport &report) {
    Json j;
    j["config"] = report.config;
    j["versions"] = report.versions;
    j["results"] = report.results;
    if (report.wall_seconds) {
        j["timing"] = Json{{"wall_seconds", *report.wall_seconds}};
    }
    std::string out;
    write_json(out, j, 0);
    out += "\n";
    return out;
}

std::string to_csv_text(const Table &table) {
    std::string out;
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        out += (c ? "," : "") + table.header[c];
    }
    out += "\n";
    for (const auto &row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += c ? "," : "";
            out += table.integral[c] ? fmt::format("{}", static_cast<long long>(row[c])) : format_double(row[c]);
        }
        out += "\n";
    }
    return out;
}

void write_report(const RunReport &report, std::ostream &out, ReportFormat format) {
    out << (format == ReportFormat::kJson ? to_json_text(report) : to_csv_text(report.table));
    if (!out) {
        throw std::runtime_error("failed to write report");
    }
}

void write_report(const RunReport &report, const std::filesystem::path &path, ReportFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error(fmt::format("{}: cannot open for writing", path.string()));
    }
    write_report(report, out, format);
}

RunReport parse_json_report(const std::string &text) {
    const Json j = Json::parse(text);
    RunReport r;
    r.config = j.at("config");
    r.versions = j.at("versions");
    r.results = j.at("results");
    if (j.contains("timing")) {
        r.wall_seconds = j.at("timing").at("wall_seconds").get<double>();
    }
    return r;
}

Table parse_csv_table(const std::string &text) {
    std::stringstream in(text);
    std::string line;
    Table t;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("empty CSV");
    }
    t.header = split(line, ',');
    t.integral.assign(t.header.size(), true);
    while (std::getline(in, line)) {
        const auto cells = split(line, ',');
        if (cells.size() != t.header.size()) {
            throw std::invalid_argument(fmt::format("CSV row {} has {} cells", t.rows.size() + 2, cells.size()));
        }
        std::vector<double> row;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            double v = 0;
            const auto [end, ec] = std::from_chars(cells[c].data(), cells[c].data() + cells[c].size(), v);
            if (ec != std::errc() || end != cells[c].data() + cells[c].size()) {
                throw std::invalid_argument(fmt::format("CSV row {}: bad number '{}'", t.rows.size() + 2, cells[c]));
            }
            row.push_back(v);
            if (cells[c].find_first_of(".e") != std::string::npos) {
                t.integral[c] = false;
            }
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace acsqc::cli
