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

#include "acsqc/symbolic_replay.hpp"

#include <algorithm>
#include <complex>
#include <optional>
#include <stdexcept>

#include <fmt/format.h>

#include "acsqc/errors.hpp"

namespace acsqc {

PauliString term_generator(const HamiltonianTerm &term) {
    const auto &terms = term.op.terms();
    if (terms.size() != 1) {
        throw FrameError(fmt::format("term {} is not a single Pauli word", term.label));
    }
    const Complex c = terms.front().coefficient * term.op.terms().front().word.phase();
    if (std::abs(c.imag()) > 1e-12 || std::abs(std::abs(c.real()) - 1.0) > 1e-12) {
        throw FrameError(fmt::format("term {} has a non-unit or complex coefficient", term.label));
    }
    const PauliString &w = terms.front().word;
    PauliString g(w.n_qubits(), w.x_mask(), w.z_mask(), 0);
    const bool negative = (c.real() < 0) != (term.weight > 0);
    return negative ? g.negated() : g;
}

StabilizerFrame initial_frame(const DraggingPlan &plan, std::vector<LogicalPair> logicals) {
    std::vector<PauliString> gens;
    for (std::size_t t = 0; t < plan.initial_term_count(); ++t) {
        gens.push_back(term_generator(plan.terms()[t]));
    }
    return frame_new(std::move(gens), std::move(logicals));
}

ReplayResult replay_symbolic(const DraggingPlan &plan, const StabilizerFrame &start) {
    if (start.generators().size() != plan.initial_term_count()) {
        throw FrameError("frame generators do not match the plan's initial terms");
    }
    for (std::size_t t = 0; t < plan.initial_term_count(); ++t) {
        if (!(start.generators()[t] == term_generator(plan.terms()[t]))) {
            throw FrameError(fmt::format("frame generator {} does not match term {}", t, plan.terms()[t].label));
        }
    }
    std::vector<std::size_t> slot_term(plan.initial_term_count());
    for (std::size_t t = 0; t < slot_term.size(); ++t) {
        slot_term[t] = t;
    }
    ReplayResult result;
    StabilizerFrame frame = start;
    for (std::size_t k = 0; k < plan.step_count(); ++k) {
        const auto &step = plan.steps()[k];
        std::vector<std::size_t> consumed;
        for (std::size_t on : step.turn_on) {
            const PauliString field = term_generator(plan.terms()[on]);
            std::optional<std::size_t> pick;
            for (std::size_t slot = 0; slot < slot_term.size(); ++slot) {
                const bool switching_off =
                    std::find(step.turn_off.begin(), step.turn_off.end(), slot_term[slot]) != step.turn_off.end();
                if (switching_off && !commutes(field, frame.generators()[slot])) {
                    pick = slot;
                }
            }
            if (!pick) {
                throw FrameError(fmt::format(
                    "step {}: field {} anticommutes with none of the terms being switched off", k, field.sparse_str()));
            }
            frame = dragging_update(frame, *pick, field);
            slot_term[*pick] = on;
            consumed.push_back(*pick);
        }
        result.frames.push_back(frame);
        result.consumed.push_back(std::move(consumed));
    }
    return result;
}

std::string LogicalWord::str() const {
    static const char *kPhase[] = {"+", "+i", "-", "-i"};
    std::string out = kPhase[phase_exponent & 3];
    bool any = false;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] || z[j]) {
            out += fmt::format("{}{}{}{}", any ? " " : "", x[j] ? "X" : "", z[j] ? "Z" : "", j + 1);
            any = true;
        }
    }
    return any ? out : out + "I";
}

Eigen::MatrixXcd LogicalWord::matrix() const {
    Eigen::Matrix2cd xm, zm;
    xm << 0, 1, 1, 0;
    zm << 1, 0, 0, -1;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (std::size_t j = 0; j < x.size(); ++j) {
        Eigen::Matrix2cd local = Eigen::Matrix2cd::Identity();
        if (x[j]) {
            local = local * xm;
        }
        if (z[j]) {
            local = local * zm;
        }
        Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index r = 0; r < out.rows(); ++r) {
            for (Eigen::Index c = 0; c < out.cols(); ++c) {
                next.block(2 * r, 2 * c, 2, 2) = out(r, c) * local;
            }
        }
        out = std::move(next);
    }
    static const Complex kIPow[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kIPow[phase_exponent & 3] * out;
}

LogicalWord to_logical_word(const StabilizerFrame &frame, const PauliString &op) {
    LogicalWord w;
    PauliString product = PauliString::identity(frame.n_qubits());
    for (const auto &[lx, lz] : frame.logicals()) {
        const bool has_x = !commutes(op, lz);
        const bool has_z = !commutes(op, lx);
        w.x.push_back(has_x);
        w.z.push_back(has_z);
        if (has_x) {
            product = product * lx;
        }
        if (has_z) {
            product = product * lz;
        }
    }
    const PauliString a = canonicalize_logical(frame, op);
    const PauliString b = canonicalize_logical(frame, product);
    if (!a.same_word(b)) {
        throw FrameError(fmt::format("{} is not a logical Pauli of the frame", op.sparse_str()));
    }
    w.phase_exponent = ((a.phase_exponent() - b.phase_exponent()) % 4 + 4) % 4;
    return w;
}

double logical_action_residual(
    const Eigen::MatrixXcd &m, const StabilizerFrame &dragged, std::span<const LogicalPair> out_logicals) {
    const StabilizerFrame reference =
        frame_new(dragged.generators(), std::vector<LogicalPair>(out_logicals.begin(), out_logicals.end()));
    const std::size_t k_in = dragged.logicals().size();
    if (m.cols() != (Eigen::Index{1} << k_in) || m.rows() != (Eigen::Index{1} << out_logicals.size())) {
        throw std::invalid_argument("matrix shape does not match the logical counts");
    }
    double worst = 0.0;
    for (std::size_t j = 0; j < k_in; ++j) {
        for (bool is_x : {true, false}) {
            LogicalWord p;
            p.x.assign(k_in, false);
            p.z.assign(k_in, false);
            (is_x ? p.x : p.z)[j] = true;
            const PauliString &image = is_x ? dragged.logicals()[j].x_op : dragged.logicals()[j].z_op;
            const Eigen::MatrixXcd q = to_logical_word(reference, image).matrix();
            worst = std::max(worst, (m * p.matrix() - q * m).norm());
        }
    }
    return worst;
}

}  // namespace acsqc
