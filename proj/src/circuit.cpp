#include "cyclo/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cyclo {

std::string_view gate_name(GateKind kind) {
    switch (kind) {
    case GateKind::HPrime: return "HP";
    case GateKind::TPow: return "T";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "SDG";
    case GateKind::X: return "X";
    case GateKind::CX: return "CX";
    case GateKind::CCX: return "CCX";
    case GateKind::H: return "H";
    }
    return "?";
}

bool is_primitive(GateKind kind) {
    return kind == GateKind::HPrime || kind == GateKind::TPow || kind == GateKind::CX;
}

int arity(GateKind kind) {
    switch (kind) {
    case GateKind::CX: return 2;
    case GateKind::CCX: return 3;
    default: return 1;
    }
}

void Circuit::validate() const {
    if (level < 1) {
        throw std::invalid_argument("circuit level must be positive");
    }
    if (num_qubits < 0 || num_qubits > 30) {
        throw std::invalid_argument("circuit width out of range");
    }
    if (num_inputs < 0 || num_inputs > num_qubits) {
        throw std::invalid_argument("num_inputs must lie in [0, num_qubits]");
    }
    for (const Gate &g : gates) {
        const auto w = g.wires();
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] < 0 || w[i] >= num_qubits) {
                throw std::invalid_argument("gate " + std::string(gate_name(g.kind)) + " uses wire " +
                                            std::to_string(w[i]) + " outside a " + std::to_string(num_qubits) +
                                            "-qubit circuit");
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (w[i] == w[j]) {
                    throw std::invalid_argument("gate " + std::string(gate_name(g.kind)) + " repeats wire " +
                                                std::to_string(w[i]));
                }
            }
        }
    }
}

namespace {

std::int64_t s_power(int level) { return std::int64_t{1} << (level - 2); }

RingMatrix two_by_two(int level, RingElement a, RingElement b, RingElement c, RingElement d) {
    return RingMatrix::from_entries(level, 2, 2, {std::move(a), std::move(b), std::move(c), std::move(d)});
}

RingMatrix permutation_swap_last(int level, std::size_t dim) {
    RingMatrix m = RingMatrix::identity(level, dim);
    m(dim - 2, dim - 2) = RingElement::zero(level);
    m(dim - 1, dim - 1) = RingElement::zero(level);
    m(dim - 2, dim - 1) = RingElement::one(level);
    m(dim - 1, dim - 2) = RingElement::one(level);
    return m;
}

std::size_t wire_mask(int q, int num_qubits) { return std::size_t{1} << (num_qubits - 1 - q); }

void require_eval_level(int level) {
    if (level < 2) {
        throw std::invalid_argument("circuit evaluation requires level >= 2");
    }
}

}  // namespace

RingMatrix gate_matrix(const Gate &g, int level) {
    require_eval_level(level);
    const RingElement zero = RingElement::zero(level);
    const RingElement one = RingElement::one(level);
    switch (g.kind) {
    case GateKind::HPrime: {
        RingElement w = one + RingElement::root_of_unity(level, s_power(level));  // 1 + i
        w.halve_inplace();
        return two_by_two(level, w, w, w, -w);
    }
    case GateKind::TPow: return two_by_two(level, one, zero, zero, RingElement::root_of_unity(level, g.power));
    case GateKind::S: return two_by_two(level, one, zero, zero, RingElement::root_of_unity(level, s_power(level)));
    case GateKind::Sdg: return two_by_two(level, one, zero, zero, RingElement::root_of_unity(level, -s_power(level)));
    case GateKind::X: return two_by_two(level, zero, one, one, zero);
    case GateKind::H: {
        const RingElement s = RingElement::inv_sqrt2(level);
        return two_by_two(level, s, s, s, -s);
    }
    case GateKind::CX: return permutation_swap_last(level, 4);
    case GateKind::CCX: return permutation_swap_last(level, 8);
    }
    throw std::logic_error("unknown gate kind");
}

void apply_gate(std::vector<RingElement> &state, const Gate &g, int num_qubits, int level) {
    const std::size_t dim = state.size();
    const std::size_t target = wire_mask(g.wires().back(), num_qubits);
    std::size_t control = 0;
    for (int w : g.wires().first(g.wires().size() - 1)) {
        control |= wire_mask(w, num_qubits);
    }

    switch (g.kind) {
    case GateKind::X:
    case GateKind::CX:
    case GateKind::CCX:
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & target) == 0 && (i & control) == control) {
                std::swap(state[i], state[i | target]);
            }
        }
        return;
    case GateKind::TPow:
    case GateKind::S:
    case GateKind::Sdg: {
        const std::int64_t p = g.kind == GateKind::TPow ? g.power
                               : g.kind == GateKind::S  ? s_power(level)
                                                        : -s_power(level);
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & target) != 0) {
                state[i].times_root_inplace(p);
            }
        }
        return;
    }
    case GateKind::HPrime: {
        // (a, b) -> ((1+i)(a+b)/2, (1+i)(a-b)/2)
        const std::int64_t ipow = s_power(level);
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & target) != 0) {
                continue;
            }
            RingElement &a = state[i];
            RingElement &b = state[i | target];
            if (a.is_zero() && b.is_zero()) {
                continue;
            }
            RingElement sum = a + b;
            RingElement diff = std::move(a) - b;
            a = sum + sum.times_root(ipow);
            a.halve_inplace();
            b = diff + diff.times_root(ipow);
            b.halve_inplace();
        }
        return;
    }
    case GateKind::H: {
        const RingElement r2 = RingElement::sqrt2(level);
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & target) != 0) {
                continue;
            }
            RingElement &a = state[i];
            RingElement &b = state[i | target];
            if (a.is_zero() && b.is_zero()) {
                continue;
            }
            RingElement sum = a + b;
            RingElement diff = std::move(a) - b;
            a = sum * r2;
            a.halve_inplace();
            b = diff * r2;
            b.halve_inplace();
        }
        return;
    }
    }
}

RingMatrix eval_columns(const Circuit &c, std::span<const std::size_t> columns, bool parallel) {
    c.validate();
    require_eval_level(c.level);
    const std::size_t dim = c.dim();
    RingMatrix out(c.level, dim, columns.size());
    const auto ncols = static_cast<std::ptrdiff_t>(columns.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t j = 0; j < ncols; ++j) {
        std::vector<RingElement> state(dim, RingElement::zero(c.level));
        state.at(columns[static_cast<std::size_t>(j)]) = RingElement::one(c.level);
        for (const Gate &g : c.gates) {
            apply_gate(state, g, c.num_qubits, c.level);
        }
        for (std::size_t r = 0; r < dim; ++r) {
            out(r, static_cast<std::size_t>(j)) = std::move(state[r]);
        }
    }
    return out;
}

RingMatrix eval(const Circuit &c) {
    std::vector<std::size_t> columns(c.dim());
    for (std::size_t i = 0; i < columns.size(); ++i) {
        columns[i] = i;
    }
    return eval_columns(c, columns, true);
}

RingMatrix eval_restricted(const Circuit &c, bool parallel) {
    const std::size_t stride = std::size_t{1} << c.num_ancillas();
    std::vector<std::size_t> columns(std::size_t{1} << c.num_inputs);
    for (std::size_t i = 0; i < columns.size(); ++i) {
        columns[i] = i * stride;
    }
    return eval_columns(c, columns, parallel);
}

namespace {

/// Embeds a gate's local matrix into the full 2^n space.
RingMatrix embed_gate(const Gate &g, int num_qubits, int level) {
    const RingMatrix local = gate_matrix(g, level);
    const auto wires = g.wires();
    std::size_t gate_bits = 0;
    for (int w : wires) {
        gate_bits |= wire_mask(w, num_qubits);
    }
    auto local_index = [&](std::size_t x) {
        std::size_t idx = 0;
        for (int w : wires) {
            idx = (idx << 1) | ((x & wire_mask(w, num_qubits)) != 0 ? 1 : 0);
        }
        return idx;
    };
    const std::size_t dim = std::size_t{1} << num_qubits;
    RingMatrix full(level, dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t col = 0; col < dim; ++col) {
            if ((r & ~gate_bits) == (col & ~gate_bits)) {
                full(r, col) = local(local_index(r), local_index(col));
            }
        }
    }
    return full;
}

}  // namespace

RingMatrix eval_serial(const Circuit &c) {
    c.validate();
    require_eval_level(c.level);
    RingMatrix acc = RingMatrix::identity(c.level, c.dim());
    for (const Gate &g : c.gates) {
        acc = matmul_serial(embed_gate(g, c.num_qubits, c.level), acc);
    }
    return acc;
}

GateList expand_gate(const Gate &g, int level) {
    if (level < 3) {
        throw std::invalid_argument("macro expansion requires level >= 3");
    }
    const std::int64_t t = std::int64_t{1} << (level - 3);
    const int q = g.qubits[0];
    switch (g.kind) {
    case GateKind::HPrime:
    case GateKind::TPow:
    case GateKind::CX: return {g};
    case GateKind::S: return {Gate::tpow(2 * t, q)};
    case GateKind::Sdg: return {Gate::tpow(-2 * t, q)};
    case GateKind::X: {
        // X = H' Z H'^-1 with H'^-1 = H'^7
        GateList out(7, Gate::hprime(q));
        out.push_back(Gate::tpow(4 * t, q));
        out.push_back(Gate::hprime(q));
        return out;
    }
    case GateKind::H: {
        // H = X (T^-1)^{2^{k-3}} X (T^-1)^{2^{k-3}} H'
        const GateList x = expand_gate(Gate::x(q), level);
        GateList out{Gate::hprime(q), Gate::tpow(-t, q)};
        out.insert(out.end(), x.begin(), x.end());
        out.push_back(Gate::tpow(-t, q));
        out.insert(out.end(), x.begin(), x.end());
        return out;
    }
    case GateKind::CCX: {
        const int a = g.qubits[0], b = g.qubits[1], c = g.qubits[2];
        const GateList network{Gate::h(c),        Gate::cx(b, c),    Gate::tpow(-t, c), Gate::cx(a, c),
                               Gate::tpow(t, c),  Gate::cx(b, c),    Gate::tpow(-t, c), Gate::cx(a, c),
                               Gate::tpow(t, b),  Gate::tpow(t, c),  Gate::h(c),        Gate::cx(a, b),
                               Gate::tpow(t, a),  Gate::tpow(-t, b), Gate::cx(a, b)};
        GateList out;
        for (const Gate &n : network) {
            const GateList e = expand_gate(n, level);
            out.insert(out.end(), e.begin(), e.end());
        }
        return out;
    }
    }
    throw std::logic_error("unknown gate kind");
}

Circuit expand_macros(const Circuit &c) {
    Circuit out{c.level, c.num_qubits, c.num_inputs, {}};
    out.gates.reserve(c.gates.size());
    for (const Gate &g : c.gates) {
        const GateList e = expand_gate(g, c.level);
        out.gates.insert(out.gates.end(), e.begin(), e.end());
    }
    return out;
}

Circuit lift_circuit(const Circuit &c, int new_level) {
    if (new_level < c.level) {
        throw std::invalid_argument("cannot lift a circuit to a lower level");
    }
    Circuit out = c;
    out.level = new_level;
    const std::int64_t factor = std::int64_t{1} << (new_level - c.level);
    for (Gate &g : out.gates) {
        if (g.kind == GateKind::TPow) {
            g.power *= factor;
        }
    }
    return out;
}

GateList invert(const GateList &gates) {
    GateList out;
    out.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        const Gate &g = *it;
        switch (g.kind) {
        case GateKind::HPrime:
            // H'^8 = I
            out.insert(out.end(), 7, g);
            break;
        case GateKind::TPow: out.push_back(Gate::tpow(-g.power, g.qubits[0])); break;
        case GateKind::S: out.push_back(Gate::sdg(g.qubits[0])); break;
        case GateKind::Sdg: out.push_back(Gate::s(g.qubits[0])); break;
        default: out.push_back(g); break;
        }
    }
    return out;
}

Circuit invert(const Circuit &c) {
    Circuit out{c.level, c.num_qubits, c.num_inputs, invert(c.gates)};
    return out;
}

std::map<std::string, std::size_t> gate_counts(const GateList &gates) {
    std::map<std::string, std::size_t> counts;
    for (const Gate &g : gates) {
        ++counts[std::string(gate_name(g.kind))];
    }
    return counts;
}

Circuit make_circuit(int level, int num_qubits, GateList gates) {
    return Circuit{level, num_qubits, num_qubits, std::move(gates)};
}

}  // namespace cyclo
