#include "dqsim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dqsim {

Circuit::Circuit(int n) : n_qubits(n) {
    if (n < 0) throw DomainError("negative qubit count");
}

Circuit& Circuit::add(GateKind kind, std::vector<int> wires, double phi) {
    gates.push_back(GateInstance{kind, std::move(wires), phi});
    return *this;
}

Circuit& Circuit::h_layer() {
    for (int w = 0; w < n_qubits; ++w) h(w);
    return *this;
}

namespace {
std::vector<int> all_wires(int n) {
    std::vector<int> wires(static_cast<std::size_t>(n));
    std::iota(wires.begin(), wires.end(), 0);
    return wires;
}
}  // namespace

Circuit& Circuit::mcz_all() { return add(GateKind::MultiControlledZ, all_wires(n_qubits)); }

Circuit& Circuit::mcps_all(double phi) {
    return add(GateKind::MultiControlledPhaseShift, all_wires(n_qubits), phi);
}

Circuit& Circuit::barrier_all() { return add(GateKind::Barrier, all_wires(n_qubits)); }

Circuit& Circuit::measure_all() { return add(GateKind::Measure, all_wires(n_qubits)); }

Circuit& Circuit::append(const Circuit& other, int wire_offset) {
    for (const auto& g : other.gates) {
        GateInstance shifted = g;
        for (int& w : shifted.wires) w += wire_offset;
        gates.push_back(std::move(shifted));
    }
    return *this;
}

void validate_gate(const GateInstance& g, int n_qubits) {
    if (!std::isfinite(g.phi)) throw DomainError("phase must be finite");
    if (g.wires.empty()) throw DomainError("invalid wire set");
    if (is_single_qubit(g.kind) && g.wires.size() != 1) throw DomainError("arity mismatch");
    std::vector<int> sorted = g.wires;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= n_qubits) throw DomainError("invalid wire set");
        if (i > 0 && sorted[i] == sorted[i - 1]) throw DomainError("invalid wire set");
    }
}

void validate(const Circuit& c) {
    if (c.n_qubits < 0) throw DomainError("negative qubit count");
    for (const auto& g : c.gates) validate_gate(g, c.n_qubits);
}

int gate_count(const Circuit& c) {
    int n = 0;
    for (const auto& g : c.gates) {
        if (g.kind != GateKind::Barrier && g.kind != GateKind::Measure) ++n;
    }
    return n;
}

int depth(const Circuit& c) {
    validate(c);
    std::vector<int> front(static_cast<std::size_t>(c.n_qubits), 0);
    int deepest = 0;
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::Measure) continue;
        if (g.kind == GateKind::Barrier) {
            int level = 0;
            for (int w : g.wires) level = std::max(level, front[static_cast<std::size_t>(w)]);
            for (int w : g.wires) front[static_cast<std::size_t>(w)] = level;
            continue;
        }
        int level = 0;
        for (int w : g.wires) level = std::max(level, front[static_cast<std::size_t>(w)]);
        ++level;
        for (int w : g.wires) front[static_cast<std::size_t>(w)] = level;
        deepest = std::max(deepest, level);
    }
    return deepest;
}

Circuit optimize_x_cancellation(const Circuit& c) {
    validate(c);
    Circuit out(c.n_qubits);
    for (const auto& g : c.gates) {
        if (g.kind != GateKind::Barrier) out.gates.push_back(g);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        // pending[w]: index of an X on wire w with nothing later touching w
        std::vector<int> pending(static_cast<std::size_t>(c.n_qubits), -1);
        std::vector<bool> keep(out.gates.size(), true);
        for (std::size_t i = 0; i < out.gates.size(); ++i) {
            const auto& g = out.gates[i];
            if (g.kind == GateKind::X) {
                auto& slot = pending[static_cast<std::size_t>(g.wires[0])];
                if (slot >= 0) {
                    keep[static_cast<std::size_t>(slot)] = false;
                    keep[i] = false;
                    slot = -1;
                    changed = true;
                } else {
                    slot = static_cast<int>(i);
                }
            } else {
                for (int w : g.wires) pending[static_cast<std::size_t>(w)] = -1;
            }
        }
        if (changed) {
            std::vector<GateInstance> kept;
            kept.reserve(out.gates.size());
            for (std::size_t i = 0; i < out.gates.size(); ++i) {
                if (keep[i]) kept.push_back(std::move(out.gates[i]));
            }
            out.gates = std::move(kept);
        }
    }
    return out;
}

MatrixXc<double> unitary_of(const Circuit& c) {
    validate(c);
    if (c.n_qubits > detail::kMaxDenseQubits) throw LimitError("dimension limit exceeded");
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::Measure) throw DomainError("circuit contains measurement");
    }
    const Eigen::Index dim = Eigen::Index{1} << c.n_qubits;
    MatrixXc<double> u = MatrixXc<double>::Identity(dim, dim);
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::Barrier) continue;
        apply_left<double>(u, c.n_qubits, g.kind, g.wires, g.phi);
    }
    return u;
}

Circuit without_measurements(const Circuit& c) {
    Circuit out(c.n_qubits);
    for (const auto& g : c.gates) {
        if (g.kind != GateKind::Measure) out.gates.push_back(g);
    }
    return out;
}

Circuit combined(const std::vector<Circuit>& parts, const std::vector<int>& offsets,
                 int n_total) {
    if (parts.size() != offsets.size()) throw DomainError("offsets do not match parts");
    Circuit out(n_total);
    std::vector<bool> used(static_cast<std::size_t>(n_total), false);
    bool any_measured = false;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (offsets[k] < 0 || offsets[k] + parts[k].n_qubits > n_total)
            throw DomainError("invalid wire set");
        for (int w = offsets[k]; w < offsets[k] + parts[k].n_qubits; ++w) {
            if (used[static_cast<std::size_t>(w)]) throw DomainError("parts overlap");
            used[static_cast<std::size_t>(w)] = true;
        }
        any_measured |= std::any_of(parts[k].gates.begin(), parts[k].gates.end(),
                                    [](const GateInstance& g) { return g.kind == GateKind::Measure; });
        out.append(without_measurements(parts[k]), offsets[k]);
    }
    if (any_measured) out.measure_all();
    validate(out);
    return out;
}

}  // namespace dqsim
