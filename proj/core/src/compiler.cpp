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

#include "acsqc/compiler.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include <fmt/format.h>

#include "acsqc/gap_scan.hpp"
#include "acsqc/logical_unitary.hpp"
#include "acsqc/spectrum.hpp"
#include "acsqc/symbolic_replay.hpp"

namespace acsqc {
namespace {

struct WireSite {
    double theta = 0.0;
    SiteRole role = SiteRole::kGate;
};

// A field switch-on in program order: one site, or both halves of a czh.
struct Event {
    std::size_t wire0 = 0;
    std::size_t index0 = 0;
    std::optional<std::pair<std::size_t, std::size_t>> link;  // (wire1, index1) for czh
};

}  // namespace

std::string_view to_string(SiteRole role) {
    switch (role) {
        case SiteRole::kForcedH:
            return "forced-h";
        case SiteRole::kPadH:
            return "pad-h";
        case SiteRole::kGate:
            return "gate";
        case SiteRole::kLink:
            return "link";
        case SiteRole::kOutput:
            return "output";
    }
    return "?";
}

std::vector<std::size_t> ClusterLayout::turn_on_order() const {
    std::vector<std::size_t> out;
    for (const auto &g : step_groups) {
        out.insert(out.end(), g.begin(), g.end());
    }
    return out;
}

std::vector<std::size_t> ClusterLayout::neighbours(std::size_t site) const {
    std::vector<std::size_t> out;
    for (const auto &[a, b] : edges) {
        if (a == site) {
            out.push_back(b);
        } else if (b == site) {
            out.push_back(a);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string ClusterLayout::serialize() const {
    std::string out = fmt::format("layout qubits={} physical={}\n", logical_qubits, sites.size());
    for (std::size_t w = 0; w < logical_qubits; ++w) {
        out += fmt::format("wire {} prepared={} parity={} input={} output={}\n", w, prepared[w] ? 1 : 0,
            hadamard_parity[w], input_site[w], output_site[w]);
    }
    for (std::size_t v = 0; v < sites.size(); ++v) {
        out += fmt::format("site {} wire={} column={} theta={:.17g} role={}\n", v, sites[v].wire, sites[v].column,
            sites[v].theta, to_string(sites[v].role));
    }
    for (const auto &[a, b] : edges) {
        out += fmt::format("edge {} {}\n", a, b);
    }
    for (const auto &g : step_groups) {
        out += "step";
        for (std::size_t v : g) {
            out += fmt::format(" {}", v);
        }
        out += "\n";
    }
    return out;
}

ClusterLayout compile_layout(const CircuitIR &ir, const CompileOptions &options) {
    const std::size_t m = ir.qubits;
    if (m == 0 || ir.prepared.size() != m) {
        throw std::invalid_argument("circuit has no qubits or an inconsistent preparation list");
    }
    std::vector<std::vector<WireSite>> wires(m);
    std::vector<bool> started(m, false);
    std::vector<int> parity(m, 0);
    std::vector<Event> events;
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>>> links;

    auto push = [&](std::size_t w, double theta, SiteRole role) {
        wires[w].push_back({theta, role});
        return wires[w].size() - 1;
    };
    // Opens a wire. Returns true when the first gate (a plain h) should sit on the input site.
    auto start = [&](std::size_t w, bool first_is_h) {
        started[w] = true;
        if (first_is_h) {
            return;
        }
        events.push_back({w, push(w, 0.0, SiteRole::kForcedH), std::nullopt});
        if (ir.prepared[w] || options.pad_inputs) {
            events.push_back({w, push(w, 0.0, SiteRole::kPadH), std::nullopt});
        } else {
            parity[w] = 1;
        }
    };

    std::vector<std::size_t> gate_count(m, 0);
    for (const auto &g : ir.gates) {
        if (g.q0 >= m || (g.kind == GateKind::kCzh && (g.q1 >= m || g.q1 == g.q0))) {
            throw std::invalid_argument("gate refers to an invalid qubit");
        }
        ++gate_count[g.q0];
        if (g.kind == GateKind::kCzh) {
            ++gate_count[g.q1];
        }
    }
    // A prepared wire needs two fielded sites before its input stabilizer is switched off.
    auto h_on_input = [&](std::size_t w) { return !ir.prepared[w] || gate_count[w] >= 2; };

    for (const auto &g : ir.gates) {
        if (g.kind == GateKind::kCzh) {
            for (std::size_t w : {g.q0, g.q1}) {
                if (!started[w]) {
                    start(w, false);
                }
            }
            const std::size_t a = push(g.q0, 0.0, SiteRole::kLink);
            const std::size_t b = push(g.q1, 0.0, SiteRole::kLink);
            events.push_back({g.q0, a, std::pair{g.q1, b}});
            links.push_back({{g.q0, a}, {g.q1, b}});
            continue;
        }
        if (!started[g.q0]) {
            start(g.q0, g.kind == GateKind::kH && h_on_input(g.q0));
        }
        const double theta = g.kind == GateKind::kHRot ? g.theta : 0.0;
        events.push_back({g.q0, push(g.q0, theta, SiteRole::kGate), std::nullopt});
    }
    for (std::size_t w = 0; w < m; ++w) {
        if (ir.prepared[w] && !started[w]) {
            start(w, false);
        }
        push(w, 0.0, SiteRole::kOutput);
    }

    ClusterLayout layout;
    layout.logical_qubits = m;
    layout.prepared = ir.prepared;
    layout.hadamard_parity = parity;
    std::vector<std::size_t> offset(m, 0);
    for (std::size_t w = 0; w < m; ++w) {
        offset[w] = layout.sites.size();
        for (std::size_t c = 0; c < wires[w].size(); ++c) {
            layout.sites.push_back({w, c, wires[w][c].theta, wires[w][c].role});
            if (c > 0) {
                layout.edges.emplace_back(offset[w] + c - 1, offset[w] + c);
            }
        }
        layout.input_site.push_back(offset[w]);
        layout.output_site.push_back(offset[w] + wires[w].size() - 1);
    }
    const std::size_t budget = options.max_physical == 0 ? dense_cap() : options.max_physical;
    if (layout.sites.size() > budget) {
        throw std::length_error(
            fmt::format("layout needs {} physical qubits, budget is {}", layout.sites.size(), budget));
    }
    for (const auto &[a, b] : links) {
        const std::size_t x = offset[a.first] + a.second;
        const std::size_t y = offset[b.first] + b.second;
        layout.edges.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(layout.edges.begin(), layout.edges.end());

    // Fields are emitted one event late per wire, so a czh can switch on together with the
    // site just before it on each wire (the simultaneous four-field step).
    std::vector<std::optional<std::size_t>> pending(m);
    auto flush = [&](std::size_t w) {
        if (pending[w]) {
            layout.step_groups.push_back({*pending[w]});
            pending[w].reset();
        }
    };
    for (const auto &e : events) {
        const std::size_t site0 = offset[e.wire0] + e.index0;
        if (!e.link) {
            flush(e.wire0);
            pending[e.wire0] = site0;
            continue;
        }
        const auto [wire1, index1] = *e.link;
        std::vector<std::size_t> group;
        for (std::size_t w : {e.wire0, wire1}) {
            if (pending[w]) {
                group.push_back(*pending[w]);
                pending[w].reset();
            }
        }
        group.push_back(site0);
        group.push_back(offset[wire1] + index1);
        layout.step_groups.push_back(std::move(group));
    }
    for (std::size_t w = 0; w < m; ++w) {
        flush(w);
    }
    return layout;
}

EmittedPlan emit_plan(const ClusterLayout &layout, const EmitOptions &options) {
    const std::size_t n = layout.n_qubits();
    const std::size_t m = layout.logical_qubits;
    if (n == 0 || layout.prepared.size() != m || layout.input_site.size() != m || layout.output_site.size() != m) {
        throw std::invalid_argument("inconsistent layout");
    }
    std::vector<bool> skip(n, false);
    std::vector<bool> is_output(n, false);
    for (std::size_t w = 0; w < m; ++w) {
        if (layout.input_site[w] >= n || layout.output_site[w] >= n) {
            throw std::invalid_argument("layout wire ends out of range");
        }
        skip[layout.input_site[w]] = !layout.prepared[w];
        is_output[layout.output_site[w]] = true;
        if (layout.sites[layout.input_site[w]].theta != 0.0) {
            throw std::invalid_argument("input sites must carry theta = 0");
        }
    }
    for (const auto &group : layout.step_groups) {
        for (std::size_t v : group) {
            if (v >= n || is_output[v]) {
                throw std::invalid_argument(fmt::format("site {} cannot receive a field", v));
            }
        }
    }

    auto build = [&](bool with_angles) {
        HamiltonianSpec h(n, options.delta);
        for (std::size_t v = 0; v < n; ++v) {
            if (skip[v]) {
                continue;
            }
            PauliString k = PauliString::single(n, v, 'X');
            for (std::size_t u : layout.neighbours(v)) {
                k = k * PauliString::single(n, u, 'Z');
            }
            const double theta = layout.sites[v].theta;
            const bool twist = with_angles && options.picture == FieldPicture::kTwisted && theta != 0.0;
            h.add_term(fmt::format("K{}", v + 1), -options.delta, twist ? z_rotate_conjugate(k, v, theta) : PauliSum(k));
        }
        std::vector<std::vector<HamiltonianTerm>> groups;
        for (const auto &group : layout.step_groups) {
            std::vector<HamiltonianTerm> fields;
            for (std::size_t v : group) {
                const double theta =
                    with_angles && options.picture == FieldPicture::kRotatedFields ? layout.sites[v].theta : 0.0;
                fields.push_back(field_term(n, v, options.delta, theta));
            }
            groups.push_back(std::move(fields));
        }
        return make_field_plan(h, groups, options.schedule);
    };

    EmittedPlan out{build(true), build(false), {}, {}};

    std::vector<LogicalPair> in_logicals;
    std::vector<LogicalPair> out_logicals;
    for (std::size_t w = 0; w < m; ++w) {
        const std::size_t v = layout.input_site[w];
        if (!layout.prepared[w]) {
            PauliString x = PauliString::single(n, v, 'X');
            for (std::size_t u : layout.neighbours(v)) {
                x = x * PauliString::single(n, u, 'Z');
            }
            in_logicals.push_back({x, PauliString::single(n, v, 'Z')});
        }
        const std::size_t o = layout.output_site[w];
        out_logicals.push_back({PauliString::single(n, o, 'X'), PauliString::single(n, o, 'Z')});
    }
    out.in_frame = initial_frame(out.skeleton, std::move(in_logicals));
    std::vector<PauliString> final_gens;
    const HamiltonianSpec final_h = out.skeleton.final_hamiltonian();
    for (const auto &t : final_h.terms()) {
        final_gens.push_back(term_generator(t));
    }
    out.out_frame = frame_new(std::move(final_gens), std::move(out_logicals));
    return out;
}

Eigen::MatrixXcd predicted_unitary(const CircuitIR &ir) { return circuit_unitary(ir, 3); }

Eigen::MatrixXcd expected_isometry(const CircuitIR &ir, const ClusterLayout &layout) {
    const std::size_t m = ir.qubits;
    if (layout.logical_qubits != m) {
        throw std::invalid_argument("layout and circuit disagree on the qubit count");
    }
    const Eigen::MatrixXcd u = predicted_unitary(ir);
    const Eigen::Matrix2cd h = hadamard_matrix();
    std::vector<std::size_t> inputs;
    for (std::size_t w = 0; w < m; ++w) {
        if (!ir.prepared[w]) {
            inputs.push_back(w);
        }
    }
    const Eigen::Index dim = Eigen::Index{1} << m;
    Eigen::MatrixXcd columns(dim, Eigen::Index{1} << inputs.size());
    for (Eigen::Index label = 0; label < columns.cols(); ++label) {
        // Product state: |+> on prepared wires, H^parity |bit> on input wires.
        Eigen::VectorXcd state = Eigen::VectorXcd::Ones(1);
        std::size_t next_input = 0;
        for (std::size_t w = 0; w < m; ++w) {
            Eigen::Vector2cd local;
            if (ir.prepared[w]) {
                local = Eigen::Vector2cd::Constant(1.0 / std::sqrt(2.0));
            } else {
                const auto bit = (label >> (inputs.size() - 1 - next_input++)) & 1;
                local = Eigen::Vector2cd::Unit(bit);
                if (layout.hadamard_parity[w] != 0) {
                    local = h * local;
                }
            }
            Eigen::VectorXcd next(state.size() * 2);
            for (Eigen::Index k = 0; k < state.size(); ++k) {
                next.segment(2 * k, 2) = state[k] * local;
            }
            state = std::move(next);
        }
        columns.col(label) = u * state;
    }
    return columns;
}

VerificationReport verify_plan(
    const EmittedPlan &emitted, const Eigen::MatrixXcd &oracle, double t_step, const VerifyOptions &options) {
    Schedule schedule = emitted.plan.schedule();
    schedule.t_step = t_step;
    const DraggingPlan plan = emitted.plan.with_schedule(schedule);
    const InducedUnitary induced = induced_logical_unitary(plan, emitted.in_frame, emitted.out_frame, options.evolve);
    VerificationReport report;
    report.t_step = t_step;
    report.induced = induced.matrix;
    report.leakage = induced.leakage;
    report.fidelity = process_fidelity(induced.matrix, oracle);
    if (options.gap_samples > 0) {
        GapScanOptions scan;
        scan.samples_per_step = options.gap_samples;
        scan.refine = false;
        for (const auto &s : gap_scan(plan, scan).steps) {
            report.min_gaps.push_back(s.min_gap);
        }
    }
    return report;
}

}  // namespace acsqc
