#pragma once

#include <map>
#include <string>
#include <vector>

#include "cyclo/circuit.hpp"
#include "cyclo/synth_base.hpp"

namespace cyclo {

struct SynthesisResult {
    /// Level-k circuit; wires: m inputs, k-3 catalysts, then the base ancilla if used.
    Circuit circuit;
    int num_inputs = 0;
    int catalyst_wires = 0;
    int base_ancillas = 0;
    std::map<std::string, std::size_t> gate_counts;
    ReductionStats reduction;
};

/**
 * Exact synthesis of a 2^m x 2^m unitary at level k >= 3. Each level above 3
 * is embedded one level down with a catalyst wire, so the circuit uses at most
 * k - 2 wires besides the inputs. Throws InvalidInput when validate_input fails.
 */
SynthesisResult synthesize(const RingMatrix &u, int m);

/// H then T_{2^k} on `catalyst_wire` before `c`, their inverses after. Takes
/// the catalyst from |0> to its eigenstate and back.
Circuit wrap_with_catalyst(const Circuit &c, int catalyst_wire);

struct Diagnostics {
    bool level_ok = false;
    bool dimension_ok = false;
    bool unitary = false;
    std::vector<std::string> messages;

    bool ok() const { return level_ok && dimension_ok && unitary; }
};

Diagnostics validate_input(const RingMatrix &u, int level, int m);

/// Master check: eval(c) on the ancilla-zero block equals u tensor e_0.
bool verify_circuit(const Circuit &c, const RingMatrix &u, bool parallel = true);

}  // namespace cyclo
