#pragma once

#include "cyclo/linalg.hpp"

namespace cyclo {

/// The catalyst |lambda_k> = (1, zeta_{2^k}) / sqrt(2), exact at level k >= 3.
struct Catalyst {
    int level;
    RingVector state;
};

/// Lambda_k = [[0, 1], [zeta_{2^{k-1}}, 0]] at level k-1. Its action on the
/// catalyst is multiplication by zeta_{2^k}. Requires k >= 2.
RingMatrix lambda_matrix(int level);

/// Builds |lambda_k> and checks norm and eigen-relation before returning.
Catalyst catalyst_state(int level);

/// One step down the ring tower: A + B zeta_{2^k} -> A (x) I + B (x) Lambda_k.
/// The result lives at level k-1 with twice the dimension; the catalyst is
/// the trailing tensor factor. Throws InvalidInput for non-unitary input.
RingMatrix phi(const RingMatrix &u);

/// phi without the unitarity precondition check.
RingMatrix phi_unchecked(const RingMatrix &u);

}  // namespace cyclo
