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

#include "acsqc/circuit.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "acsqc/errors.hpp"

namespace acsqc {
namespace {

constexpr std::size_t kMaxQubits = 64;

std::vector<std::string> split_words(std::string_view line) {
    std::vector<std::string> words;
    std::istringstream in{std::string(line)};
    std::string w;
    while (in >> w) {
        words.push_back(w);
    }
    return words;
}

std::size_t parse_qubit(const std::string &token, std::size_t line) {
    if (token.size() < 2 || token[0] != 'q') {
        throw CircuitParseError(line, fmt::format("expected a qubit like q0, got '{}'", token));
    }
    char *end = nullptr;
    const unsigned long v = std::strtoul(token.c_str() + 1, &end, 10);
    if (*end != '\0' || !std::isdigit(static_cast<unsigned char>(token[1])) || v >= kMaxQubits) {
        throw CircuitParseError(line, fmt::format("bad qubit index '{}'", token));
    }
    return static_cast<std::size_t>(v);
}

double parse_angle(const std::string &token, std::size_t line) {
    char *end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (token.empty() || *end != '\0' || !std::isfinite(v)) {
        throw CircuitParseError(line, fmt::format("bad angle '{}'", token));
    }
    return v;
}

Eigen::MatrixXcd embed(const Eigen::MatrixXcd &local, std::size_t first, std::size_t width, std::size_t m) {
    const Eigen::Index left = Eigen::Index{1} << first;
    const Eigen::Index right = Eigen::Index{1} << (m - first - width);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(left * local.rows() * right, left * local.cols() * right);
    for (Eigen::Index a = 0; a < left; ++a) {
        for (Eigen::Index r = 0; r < local.rows(); ++r) {
            for (Eigen::Index c = 0; c < local.cols(); ++c) {
                for (Eigen::Index b = 0; b < right; ++b) {
                    out((a * local.rows() + r) * right + b, (a * local.cols() + c) * right + b) = local(r, c);
                }
            }
        }
    }
    return out;
}

// Two-qubit gate on arbitrary wires: permutes basis indices so (q0, q1) act as (msb, next).
Eigen::MatrixXcd two_qubit(const Eigen::Matrix4cd &local, std::size_t q0, std::size_t q1, std::size_t m) {
    const Eigen::Index dim = Eigen::Index{1} << m;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    const Eigen::Index b0 = Eigen::Index{1} << (m - 1 - q0);
    const Eigen::Index b1 = Eigen::Index{1} << (m - 1 - q1);
    for (Eigen::Index col = 0; col < dim; ++col) {
        const Eigen::Index in_local = ((col & b0) ? 2 : 0) | ((col & b1) ? 1 : 0);
        const Eigen::Index rest = col & ~(b0 | b1);
        for (Eigen::Index out_local = 0; out_local < 4; ++out_local) {
            const Eigen::Index row = rest | ((out_local & 2) ? b0 : 0) | ((out_local & 1) ? b1 : 0);
            out(row, col) += local(out_local, in_local);
        }
    }
    return out;
}

}  // namespace

std::size_t CircuitIR::input_count() const {
    std::size_t n = 0;
    for (bool p : prepared) {
        n += p ? 0 : 1;
    }
    return n;
}

std::string CircuitIR::str() const {
    std::string out = fmt::format("qubits {}\n", qubits);
    for (std::size_t q = 0; q < qubits; ++q) {
        if (prepared[q]) {
            out += fmt::format("prepx q{}\n", q);
        }
    }
    for (const auto &g : gates) {
        switch (g.kind) {
            case GateKind::kH:
                out += fmt::format("h q{}\n", g.q0);
                break;
            case GateKind::kHRot:
                out += fmt::format("hrot {:.17g} q{}\n", g.theta, g.q0);
                break;
            case GateKind::kCzh:
                out += fmt::format("czh q{} q{}\n", g.q0, g.q1);
                break;
        }
    }
    return out;
}

CircuitIR parse_circuit(std::string_view text) {
    CircuitIR ir;
    std::optional<std::size_t> declared;
    std::optional<std::size_t> declared_line;
    std::vector<std::size_t> prepared;
    std::vector<bool> touched(kMaxQubits, false);
    std::size_t highest = 0;
    bool any_qubit = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto words = split_words(line);
        if (words.empty()) {
            continue;
        }
        const std::string &op = words[0];
        auto need = [&](std::size_t count) {
            if (words.size() != count) {
                throw CircuitParseError(
                    line_no, fmt::format("'{}' takes {} operand(s), got {}", op, count - 1, words.size() - 1));
            }
        };
        auto use = [&](std::size_t q) {
            highest = std::max(highest, q);
            any_qubit = true;
        };
        if (op == "qubits") {
            need(2);
            if (declared || !ir.gates.empty() || !prepared.empty()) {
                throw CircuitParseError(line_no, "'qubits' must come first and only once");
            }
            char *end = nullptr;
            const unsigned long v = std::strtoul(words[1].c_str(), &end, 10);
            if (*end != '\0' || v == 0 || v > kMaxQubits) {
                throw CircuitParseError(line_no, fmt::format("bad qubit count '{}'", words[1]));
            }
            declared = v;
            declared_line = line_no;
        } else if (op == "prepx") {
            need(2);
            const std::size_t q = parse_qubit(words[1], line_no);
            if (touched[q]) {
                throw CircuitParseError(line_no, fmt::format("prepx q{} must precede every other use of q{}", q, q));
            }
            touched[q] = true;
            prepared.push_back(q);
            use(q);
        } else if (op == "h") {
            need(2);
            Gate g{GateKind::kH, 0.0, parse_qubit(words[1], line_no), 0};
            touched[g.q0] = true;
            use(g.q0);
            ir.gates.push_back(g);
        } else if (op == "hrot") {
            need(3);
            Gate g{GateKind::kHRot, parse_angle(words[1], line_no), parse_qubit(words[2], line_no), 0};
            touched[g.q0] = true;
            use(g.q0);
            ir.gates.push_back(g);
        } else if (op == "czh") {
            need(3);
            Gate g{GateKind::kCzh, 0.0, parse_qubit(words[1], line_no), parse_qubit(words[2], line_no)};
            if (g.q0 == g.q1) {
                throw CircuitParseError(line_no, "czh needs two distinct qubits");
            }
            touched[g.q0] = touched[g.q1] = true;
            use(g.q0);
            use(g.q1);
            ir.gates.push_back(g);
        } else {
            throw CircuitParseError(line_no, fmt::format("unknown instruction '{}'", op));
        }
        if (declared && any_qubit && highest >= *declared) {
            throw CircuitParseError(
                line_no, fmt::format("qubit q{} is out of range for {} declared qubits", highest, *declared));
        }
    }
    if (!declared && !any_qubit) {
        throw CircuitParseError(declared_line.value_or(line_no), "circuit uses no qubits");
    }
    ir.qubits = declared ? *declared : highest + 1;
    ir.prepared.assign(ir.qubits, false);
    for (std::size_t q : prepared) {
        ir.prepared[q] = true;
    }
    return ir;
}

Eigen::Matrix2cd hadamard_matrix() {
    Eigen::Matrix2cd h;
    h << 1, 1, 1, -1;
    return h / std::sqrt(2.0);
}

Eigen::Matrix2cd hrot_matrix(double theta) {
    Eigen::Matrix2cd u = Eigen::Matrix2cd::Zero();
    u(0, 0) = std::polar(1.0, -theta / 2);
    u(1, 1) = std::polar(1.0, theta / 2);
    return hadamard_matrix() * u;
}

Eigen::Matrix4cd czh_matrix() {
    Eigen::Matrix4cd cz = Eigen::Matrix4cd::Identity();
    cz(3, 3) = -1;
    const Eigen::Matrix2cd h = hadamard_matrix();
    Eigen::Matrix4cd hh;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            hh.block(2 * r, 2 * c, 2, 2) = h(r, c) * h;
        }
    }
    return hh * cz;
}

Eigen::MatrixXcd circuit_unitary(const CircuitIR &ir, std::size_t max_qubits) {
    const std::size_t m = ir.qubits;
    if (m == 0 || m > max_qubits) {
        throw std::invalid_argument(fmt::format("oracle supports 1..{} qubits, circuit has {}", max_qubits, m));
    }
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(Eigen::Index{1} << m, Eigen::Index{1} << m);
    for (const auto &g : ir.gates) {
        switch (g.kind) {
            case GateKind::kH:
                u = embed(hadamard_matrix(), g.q0, 1, m) * u;
                break;
            case GateKind::kHRot:
                u = embed(hrot_matrix(g.theta), g.q0, 1, m) * u;
                break;
            case GateKind::kCzh:
                u = two_qubit(czh_matrix(), g.q0, g.q1, m) * u;
                break;
        }
    }
    return u;
}

}  // namespace acsqc
