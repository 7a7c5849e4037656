#include "cyclo/embedding.hpp"

#include <string>

#include "cyclo/errors.hpp"

namespace cyclo {

RingMatrix lambda_matrix(int level) {
    if (level < 2) {
        throw std::invalid_argument("lambda_matrix requires level >= 2");
    }
    const int lower = level - 1;
    RingMatrix m(lower, 2, 2);
    m(0, 1) = RingElement::one(lower);
    m(1, 0) = RingElement::root_of_unity(lower, 1);
    return m;
}

Catalyst catalyst_state(int level) {
    if (level < 3) {
        throw std::invalid_argument("the catalyst needs 1/sqrt(2), available from level 3; got " +
                                    std::to_string(level));
    }
    const RingElement s = RingElement::inv_sqrt2(level);
    RingVector state{level, {s, s.times_root(1)}};

    if (inner(state, state) != RingElement::one(level)) {
        throw std::logic_error("catalyst is not normalized");
    }
    const RingVector image = apply(lift_matrix(lambda_matrix(level), level), state);
    for (std::size_t i = 0; i < 2; ++i) {
        if (image[i] != state[i].times_root(1)) {
            throw std::logic_error("catalyst is not an eigenvector of Lambda_k");
        }
    }
    return Catalyst{level, std::move(state)};
}

RingMatrix phi_unchecked(const RingMatrix &u) {
    if (u.level() < 2) {
        throw std::invalid_argument("phi requires level >= 2");
    }
    auto [a, b] = matrix_decompose(u);
    const int lower = u.level() - 1;
    return tensor(a, RingMatrix::identity(lower, 2)) + tensor(b, lambda_matrix(u.level()));
}

RingMatrix phi(const RingMatrix &u) {
    if (!is_unitary(u)) {
        throw InvalidInput("phi: input matrix is not unitary");
    }
    return phi_unchecked(u);
}

}  // namespace cyclo
