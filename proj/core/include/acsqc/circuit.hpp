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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace acsqc {

enum class GateKind { kH, kHRot, kCzh };

/// One gate of the restricted set. hrot(theta) is H U(theta) with U(theta) = exp(-i theta Z / 2);
/// czh is (H x H) CZ.
struct Gate {
    GateKind kind = GateKind::kH;
    double theta = 0.0;
    std::size_t q0 = 0;
    std::size_t q1 = 0;  // czh only

    bool operator==(const Gate &) const = default;
};

struct CircuitIR {
    std::size_t qubits = 0;
    /// Wires that start in |+> (prepx) instead of carrying an input.
    std::vector<bool> prepared;
    std::vector<Gate> gates;

    std::size_t input_count() const;
    std::string str() const;
};

/// Parses the text format, one instruction per line, '#' starting a comment:
///
///     qubits 2          (optional; otherwise one more than the largest index used)
///     prepx q0          (before any gate on q0)
///     h q0
///     hrot 0.785398 q1
///     czh q0 q1
///
/// Throws CircuitParseError carrying the 1-based line number.
CircuitIR parse_circuit(std::string_view text);

/// Dense 2^m x 2^m unitary of the gate list, qubit 0 as the most significant bit. Preparation
/// flags are ignored. Throws std::invalid_argument for more than `max_qubits` qubits.
Eigen::MatrixXcd circuit_unitary(const CircuitIR &ir, std::size_t max_qubits = 3);

/// 2x2 matrices used by the oracle.
Eigen::Matrix2cd hadamard_matrix();
Eigen::Matrix2cd hrot_matrix(double theta);
Eigen::Matrix4cd czh_matrix();

}  // namespace acsqc
