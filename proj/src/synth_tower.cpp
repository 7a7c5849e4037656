#include "cyclo/synth_tower.hpp"

#include <string>

#include "cyclo/embedding.hpp"
#include "cyclo/errors.hpp"

namespace cyclo {

namespace {

Circuit synthesize_level(const RingMatrix &u, int m, ReductionStats &stats) {
    if (u.level() == 3) {
        return base_synthesize(u, m, &stats);
    }
    const RingMatrix embedded = phi_unchecked(u);
    Circuit inner = synthesize_level(embedded, m + 1, stats);
    Circuit wrapped = wrap_with_catalyst(lift_circuit(inner, u.level()), m);
    wrapped.num_inputs = m;
    return wrapped;
}

}  // namespace

Circuit wrap_with_catalyst(const Circuit &c, int catalyst_wire) {
    if (catalyst_wire < 0 || catalyst_wire >= c.num_qubits) {
        throw std::invalid_argument("catalyst wire " + std::to_string(catalyst_wire) + " out of range");
    }
    Circuit out = c;
    out.gates.clear();
    out.gates.reserve(c.gates.size() + 4);
    out.gates.push_back(Gate::h(catalyst_wire));
    out.gates.push_back(Gate::tpow(1, catalyst_wire));
    out.gates.insert(out.gates.end(), c.gates.begin(), c.gates.end());
    out.gates.push_back(Gate::tpow(-1, catalyst_wire));
    out.gates.push_back(Gate::h(catalyst_wire));
    return out;
}

Diagnostics validate_input(const RingMatrix &u, int level, int m) {
    Diagnostics d;
    d.level_ok = u.level() == level && level >= 3;
    if (level < 3) {
        d.messages.push_back("degree must be at least 8 (level >= 3), got level " + std::to_string(level));
    } else if (!d.level_ok) {
        d.messages.push_back("entries are at level " + std::to_string(u.level()) + ", expected " +
                             std::to_string(level));
    }
    d.dimension_ok = m >= 1 && m <= 20 && u.is_square() && u.rows() == (std::size_t{1} << m);
    if (!d.dimension_ok) {
        d.messages.push_back("matrix is " + std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                             ", expected 2^" + std::to_string(m) + " square");
    }
    d.unitary = u.is_square() && is_unitary(u);
    if (!d.unitary) {
        d.messages.push_back("matrix is not unitary");
    }
    return d;
}

SynthesisResult synthesize(const RingMatrix &u, int m) {
    const Diagnostics d = validate_input(u, u.level(), m);
    if (!d.ok()) {
        throw InvalidInput(d.messages.front());
    }
    SynthesisResult r;
    r.circuit = synthesize_level(u, m, r.reduction);
    r.num_inputs = m;
    r.catalyst_wires = u.level() - 3;
    r.base_ancillas = r.circuit.num_qubits - m - r.catalyst_wires;
    r.gate_counts = gate_counts(expand_macros(r.circuit).gates);
    return r;
}

bool verify_circuit(const Circuit &c, const RingMatrix &u, bool parallel) {
    if (c.level != u.level() || !u.is_square() || u.rows() != (std::size_t{1} << c.num_inputs)) {
        return false;
    }
    const RingMatrix restricted = eval_restricted(c, parallel);
    const RingMatrix expected = tensor(u, RingMatrix::column(RingVector::basis(u.level(), std::size_t{1} << c.num_ancillas(), 0)));
    return restricted == expected;
}

}  // namespace cyclo
