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

#include "acsqc/stabilizer_frame.hpp"

#include <bit>
#include <stdexcept>
#include <tuple>

#include <fmt/format.h>

#include "acsqc/errors.hpp"

namespace acsqc {
namespace {

constexpr std::size_t kMaxEnumeratedGenerators = 24;

struct SymplecticRow {
    std::uint64_t x;
    std::uint64_t z;
};

bool better_representative(const PauliString &candidate, const PauliString &best) {
    auto key = [](const PauliString &p) { return std::make_tuple(p.weight(), p.x_mask(), p.z_mask()); };
    return key(candidate) < key(best);
}

}  // namespace

std::size_t symplectic_rank(std::span<const PauliString> ops) {
    std::vector<SymplecticRow> rows;
    rows.reserve(ops.size());
    for (const auto &p : ops) {
        rows.push_back({p.x_mask(), p.z_mask()});
    }
    std::size_t rank = 0;
    for (int half = 0; half < 2; ++half) {
        for (int bit = 0; bit < 64; ++bit) {
            std::uint64_t mask = std::uint64_t{1} << bit;
            auto has = [&](const SymplecticRow &r) { return ((half == 0 ? r.x : r.z) & mask) != 0; };
            std::size_t pivot = rank;
            while (pivot < rows.size() && !has(rows[pivot])) {
                ++pivot;
            }
            if (pivot == rows.size()) {
                continue;
            }
            std::swap(rows[rank], rows[pivot]);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r != rank && has(rows[r])) {
                    rows[r].x ^= rows[rank].x;
                    rows[r].z ^= rows[rank].z;
                }
            }
            ++rank;
        }
    }
    return rank;
}

StabilizerFrame frame_new(std::vector<PauliString> generators, std::vector<LogicalPair> logicals) {
    std::size_t n = 0;
    if (!generators.empty()) {
        n = generators.front().n_qubits();
    } else if (!logicals.empty()) {
        n = logicals.front().x_op.n_qubits();
    } else {
        throw FrameError("frame needs at least one generator or logical pair");
    }

    std::vector<PauliString> all_ops;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const auto &g = generators[i];
        if (g.n_qubits() != n) {
            throw FrameError(fmt::format("generator {} has {} qubits, expected {}", i, g.n_qubits(), n));
        }
        if (!g.is_hermitian()) {
            throw FrameError(fmt::format("generator {} ({}) is not Hermitian", i, g.sparse_str()));
        }
        if (g.is_identity_word()) {
            throw FrameError(fmt::format("generator {} is proportional to identity", i));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (!commutes(g, generators[j])) {
                throw FrameError(fmt::format(
                    "generators {} ({}) and {} ({}) anticommute", j, generators[j].sparse_str(), i, g.sparse_str()));
            }
        }
        all_ops.push_back(g);
    }

    for (std::size_t a = 0; a < logicals.size(); ++a) {
        const auto &[xa, za] = logicals[a];
        for (const PauliString *op : {&xa, &za}) {
            if (op->n_qubits() != n) {
                throw FrameError(fmt::format("logical pair {} has wrong qubit count", a));
            }
            if (!op->is_hermitian()) {
                throw FrameError(fmt::format("logical pair {} has a non-Hermitian operator", a));
            }
            for (std::size_t i = 0; i < generators.size(); ++i) {
                if (!commutes(*op, generators[i])) {
                    throw FrameError(fmt::format(
                        "logical {} of pair {} anticommutes with generator {} ({})", op->sparse_str(), a, i,
                        generators[i].sparse_str()));
                }
            }
        }
        if (commutes(xa, za)) {
            throw FrameError(fmt::format("logical pair {} ({}, {}) does not anticommute", a, xa.sparse_str(), za.sparse_str()));
        }
        for (std::size_t b = 0; b < a; ++b) {
            const auto &[xb, zb] = logicals[b];
            if (!commutes(xa, xb) || !commutes(xa, zb) || !commutes(za, xb) || !commutes(za, zb)) {
                throw FrameError(fmt::format("logical pairs {} and {} do not commute", b, a));
            }
        }
        all_ops.push_back(xa);
        all_ops.push_back(za);
    }

    if (all_ops.size() > 2 * n) {
        throw FrameError("too many generators and logicals for the qubit count");
    }
    if (symplectic_rank(all_ops) != all_ops.size()) {
        throw FrameError("generators and logical operators are not independent");
    }

    StabilizerFrame frame;
    frame.n_qubits_ = n;
    frame.generators_ = std::move(generators);
    frame.logicals_ = std::move(logicals);
    return frame;
}

std::string StabilizerFrame::str() const {
    std::string out = "generators:";
    for (const auto &g : generators_) {
        out += fmt::format("\n  {}", g.sparse_str());
    }
    out += "\nlogicals:";
    for (std::size_t k = 0; k < logicals_.size(); ++k) {
        out += fmt::format("\n  X{} = {}, Z{} = {}", k, logicals_[k].x_op.sparse_str(), k, logicals_[k].z_op.sparse_str());
    }
    return out;
}

StabilizerFrame dragging_update(const StabilizerFrame &frame, std::size_t consumed, const PauliString &field) {
    if (consumed >= frame.generators().size()) {
        throw FrameError(fmt::format("consumed generator index {} out of range", consumed));
    }
    if (field.n_qubits() != frame.n_qubits()) {
        throw FrameError("field has the wrong qubit count");
    }
    if (!field.is_hermitian()) {
        throw FrameError("field is not Hermitian");
    }
    const PauliString &g = frame.generators()[consumed];
    if (commutes(field, g)) {
        throw FrameError(fmt::format(
            "field {} commutes with consumed generator {}; no dragging possible", field.sparse_str(), g.sparse_str()));
    }

    auto repair = [&](const PauliString &op) { return commutes(op, field) ? op : op * g; };

    std::vector<PauliString> generators;
    generators.reserve(frame.generators().size());
    for (std::size_t i = 0; i < frame.generators().size(); ++i) {
        generators.push_back(i == consumed ? field : repair(frame.generators()[i]));
    }
    std::vector<LogicalPair> logicals;
    logicals.reserve(frame.logicals().size());
    for (const auto &pair : frame.logicals()) {
        logicals.push_back({repair(pair.x_op), repair(pair.z_op)});
    }
    try {
        return frame_new(std::move(generators), std::move(logicals));
    } catch (const FrameError &e) {
        throw FrameError(fmt::format("dragging with field {} cannot be repaired: {}", field.sparse_str(), e.what()));
    }
}

PauliString canonicalize_logical(const StabilizerFrame &frame, const PauliString &op) {
    const auto &gens = frame.generators();
    if (op.n_qubits() != frame.n_qubits()) {
        throw FrameError("operator has the wrong qubit count");
    }
    for (const auto &g : gens) {
        if (!commutes(op, g)) {
            throw FrameError(fmt::format("{} anticommutes with generator {}", op.sparse_str(), g.sparse_str()));
        }
    }
    if (gens.size() > kMaxEnumeratedGenerators) {
        throw std::length_error("canonicalize_logical enumerates at most 2^24 group elements");
    }
    // Gray-code walk over the whole stabilizer group.
    PauliString current = op;
    PauliString best = op;
    const std::uint64_t count = std::uint64_t{1} << gens.size();
    for (std::uint64_t k = 1; k < count; ++k) {
        current = current * gens[static_cast<std::size_t>(std::countr_zero(k))];
        if (better_representative(current, best)) {
            best = current;
        }
    }
    return best;
}

}  // namespace acsqc
