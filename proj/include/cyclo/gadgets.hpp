#pragma once

#include <cstddef>
#include <span>

#include "cyclo/circuit.hpp"

namespace cyclo {

/// A control wire and the value it must hold for the controlled gate to fire.
struct Control {
    int qubit;
    bool polarity = true;
};

/**
 * Multi-controlled X. Flips `target` exactly when every control matches its
 * polarity. Wires in `scratch` are borrowed in an arbitrary state and restored
 * on every basis vector. Three or more controls need at least one scratch
 * wire; with c - 2 scratch wires the linear Toffoli ladder is used, otherwise
 * the controls are split in half around one borrowed wire.
 */
GateList mcx(std::span<const Control> controls, int target, std::span<const int> scratch = {});

/// Singly-controlled Hadamard as an exact word over {S, SDG, H, T, CX}.
GateList controlled_h(int control, int target, int level);

/// T^p X T^p X = omega^p I with omega = zeta_8 (p counted in eighth turns).
GateList global_phase(int p, int wire, int level);

/**
 * Flips a target known to be |0> when all (positive) controls are set, using
 * no wires beyond the controls and the target. For three or more controls the
 * word realizes a multi-controlled Ry(pi); on the |0> target block this is
 * exactly the multi-controlled X.
 */
GateList flip_clean_target(std::span<const int> controls, int target, int level);

/// Where a two-level gadget may place its gates: system wires 0..num_system-1
/// plus one clean ancilla at index `ancilla`.
struct GadgetLayout {
    int num_system;
    int ancilla;
    int level;
};

struct Gadget {
    GateList gates;
    bool uses_ancilla = false;
};

/// diag(1, .., omega^p at basis index `pattern`, .., 1) on the system wires.
Gadget one_level_phase(std::size_t pattern, int p, const GadgetLayout &layout);

enum class TwoLevelKind { X, H, T };

/// The 2x2 operator `kind` (X, H, or diag(1, omega^p)) on span{e_i, e_j} in
/// that basis order, identity elsewhere.
Gadget two_level(TwoLevelKind kind, std::size_t i, std::size_t j, int p, const GadgetLayout &layout);

}  // namespace cyclo
