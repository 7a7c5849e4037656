#include "cyclo/random.hpp"

#include <limits>
#include <stdexcept>

namespace cyclo {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("Rng::below(0)");
    }
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x = engine_();
    while (x >= limit) {
        x = engine_();
    }
    return x % n;
}

Circuit random_word(int level, int num_qubits, std::size_t length, Rng &rng) {
    if (level < 3) {
        throw std::invalid_argument("random words need degree >= 8");
    }
    if (num_qubits < 1 || num_qubits > 20) {
        throw std::invalid_argument("random words need 1..20 qubits");
    }
    Circuit c;
    c.level = level;
    c.num_qubits = num_qubits;
    c.num_inputs = num_qubits;
    const std::uint64_t kinds = num_qubits >= 2 ? 3 : 2;
    const std::int64_t order = std::int64_t{1} << level;
    for (std::size_t s = 0; s < length; ++s) {
        switch (rng.below(kinds)) {
        case 0: c.gates.push_back(Gate::hprime(static_cast<int>(rng.below(num_qubits)))); break;
        case 1: {
            const std::int64_t p = rng.between(1, order - 1);
            c.gates.push_back(Gate::tpow(p, static_cast<int>(rng.below(num_qubits))));
            break;
        }
        default: {
            const int a = static_cast<int>(rng.below(num_qubits));
            int b = static_cast<int>(rng.below(num_qubits - 1));
            if (b >= a) {
                ++b;
            }
            c.gates.push_back(Gate::cx(a, b));
            break;
        }
        }
    }
    return c;
}

Circuit random_word(int level, int num_qubits, std::size_t length, std::uint64_t seed) {
    Rng rng(seed);
    return random_word(level, num_qubits, length, rng);
}

}  // namespace cyclo
