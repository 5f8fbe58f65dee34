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

#include "config.hpp"
#include "report.hpp"

namespace acsqc::cli {

/// Runs one validated experiment. Engine errors propagate unchanged.
RunReport execute(const ExperimentConfig &config);

/// Reads a whole text file; throws std::runtime_error naming the path.
std::string read_text_file(const std::string &path);

}  // namespace acsqc::cli
