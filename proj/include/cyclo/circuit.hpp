#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cyclo/linalg.hpp"

namespace cyclo {

/// Gate kinds over G_{2^k}. HPrime, TPow and CX are primitive; the rest are
/// macros that expand to primitives for k >= 3.
enum class GateKind : std::uint8_t { HPrime, TPow, S, Sdg, X, CX, CCX, H };

std::string_view gate_name(GateKind kind);
bool is_primitive(GateKind kind);
int arity(GateKind kind);

struct Gate {
    GateKind kind;
    /// Exponent of zeta_{2^k}; meaningful for TPow only.
    std::int64_t power = 0;
    /// Controls first, target last.
    std::array<int, 3> qubits{0, 0, 0};

    static Gate hprime(int q) { return {GateKind::HPrime, 0, {q, 0, 0}}; }
    static Gate tpow(std::int64_t p, int q) { return {GateKind::TPow, p, {q, 0, 0}}; }
    static Gate s(int q) { return {GateKind::S, 0, {q, 0, 0}}; }
    static Gate sdg(int q) { return {GateKind::Sdg, 0, {q, 0, 0}}; }
    static Gate x(int q) { return {GateKind::X, 0, {q, 0, 0}}; }
    static Gate h(int q) { return {GateKind::H, 0, {q, 0, 0}}; }
    static Gate cx(int c, int t) { return {GateKind::CX, 0, {c, t, 0}}; }
    static Gate ccx(int a, int b, int t) { return {GateKind::CCX, 0, {a, b, t}}; }

    std::span<const int> wires() const { return {qubits.data(), static_cast<std::size_t>(arity(kind))}; }
    friend bool operator==(const Gate &, const Gate &) = default;
};

using GateList = std::vector<Gate>;

/**
 * A circuit over G_{2^k}. The leading num_inputs wires carry the input state;
 * the trailing wires are ancillas, initialized and returned in |0>.
 * Qubit 0 is the most significant bit of a basis index.
 */
struct Circuit {
    int level = 3;
    int num_qubits = 0;
    int num_inputs = 0;
    GateList gates;

    int num_ancillas() const { return num_qubits - num_inputs; }
    std::size_t dim() const { return std::size_t{1} << num_qubits; }
    /// Throws std::invalid_argument on out-of-range or repeated wires.
    void validate() const;
    friend bool operator==(const Circuit &, const Circuit &) = default;
};

/// Exact 2^a x 2^a matrix of a gate on its own wires (a = arity), at `level`.
RingMatrix gate_matrix(const Gate &g, int level);

/// Applies one gate to a state vector of length 2^num_qubits in place.
void apply_gate(std::vector<RingElement> &state, const Gate &g, int num_qubits, int level);

/// Full unitary; columns are simulated independently across OpenMP threads.
RingMatrix eval(const Circuit &c);
/// Reference evaluator: multiplies dense embedded gate matrices one by one.
/// Cost grows as 8^num_qubits per gate; intended for tests.
RingMatrix eval_serial(const Circuit &c);
/// Images of the given basis columns only (2^q x columns.size()).
RingMatrix eval_columns(const Circuit &c, std::span<const std::size_t> columns, bool parallel = true);
/// eval restricted to columns whose ancilla bits are all zero.
RingMatrix eval_restricted(const Circuit &c, bool parallel = true);

/// Rewrites every macro into HPrime / TPow / CX. Requires level >= 3.
Circuit expand_macros(const Circuit &c);
GateList expand_gate(const Gate &g, int level);

/// Reinterprets the circuit at a higher level: TPow(p) -> TPow(p * 2^(new-old)).
Circuit lift_circuit(const Circuit &c, int new_level);

/// Reverse order, each gate replaced by its exact inverse word.
Circuit invert(const Circuit &c);
GateList invert(const GateList &gates);

std::map<std::string, std::size_t> gate_counts(const GateList &gates);

/// Convenience: circuit with the given gates on num_qubits wires, all inputs.
Circuit make_circuit(int level, int num_qubits, GateList gates);

}  // namespace cyclo
