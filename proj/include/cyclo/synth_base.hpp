#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cyclo/circuit.hpp"
#include "cyclo/linalg.hpp"

namespace cyclo {

/// Operators produced by column reduction at level 3, with omega = zeta_8.
///   X:     swap e_i and e_j
///   H:     (e_i, e_j) -> Hadamard in that order
///   T:     e_j -> omega^p e_j   (the pair (i, j) only records which H it precedes)
///   Omega: e_i -> omega^p e_i
struct TwoLevelOp {
    enum class Kind : std::uint8_t { X, H, T, Omega };
    Kind kind;
    std::size_t i = 0;
    std::size_t j = 0;
    int power = 0;

    TwoLevelOp inverse() const;
    friend bool operator==(const TwoLevelOp &, const TwoLevelOp &) = default;
};

std::string to_string(const TwoLevelOp &op);

/// Dense dim x dim matrix of the operator at level 3.
RingMatrix op_matrix(const TwoLevelOp &op, std::size_t dim);
/// m <- op * m, touching only the affected rows.
void apply_op(RingMatrix &m, const TwoLevelOp &op);

/// Coefficients of a level-3 integer mod 2; bit j holds c_j.
struct Residue {
    std::uint8_t bits = 0;

    int weight() const;
    /// Written c3 c2 c1 c0, most significant coefficient first.
    std::string str() const;
    friend bool operator==(const Residue &, const Residue &) = default;
};

/// Residue of sqrt(2)^t x. Throws std::invalid_argument if sde(x) > t.
Residue residue(const RingElement &x, int t);

struct ReductionStats {
    std::size_t columns = 0;
    std::size_t passes = 0;
    std::size_t pair_reductions = 0;
    /// Odd-class pairs that could only be moved to the even class at the same sde.
    std::size_t conversions = 0;
    std::size_t ops = 0;
    /// Passes whose column max sde failed to drop. Always zero unless an
    /// internal check is disabled; reduction throws ReductionStuck first.
    std::size_t non_monotone_passes = 0;
    int max_initial_sde = 0;

    ReductionStats &operator+=(const ReductionStats &other);
};

/**
 * Reduces column `col` of `m` to e_col by left-multiplying two-level operators,
 * which are appended to `ops` and applied to `m` as they are chosen.
 * Columns before `col` must already be standard basis vectors.
 * Throws ReductionStuck if no progress is possible (the input was not unitary).
 */
void reduce_column(RingMatrix &m, std::size_t col, std::vector<TwoLevelOp> &ops, ReductionStats *stats = nullptr);

/// Ops whose ordered left product maps u to the identity.
std::vector<TwoLevelOp> two_level_decomposition(const RingMatrix &u, ReductionStats *stats = nullptr);

/// Gate word for one operator on `num_system` wires plus an ancilla at index num_system.
GateList compile_op(const TwoLevelOp &op, int num_system, bool &uses_ancilla);

/**
 * Exact synthesis over G_8. The circuit has m input wires plus one clean
 * ancilla when some gadget needs it. Throws InvalidInput on a wrong level,
 * a dimension other than 2^m, or a non-unitary matrix.
 */
Circuit base_synthesize(const RingMatrix &u, int m, ReductionStats *stats = nullptr);

}  // namespace cyclo
