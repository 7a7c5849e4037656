#pragma once

#include <cstdint>
#include <random>

#include "cyclo/circuit.hpp"

namespace cyclo {

/// mt19937_64 with a bounded draw that gives the same sequence on every
/// standard library (std::uniform_int_distribution does not).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n);
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }
    std::uint64_t next() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

/**
 * Length-L word of primitive gates on m wires at level k >= 3. Each step picks
 * a kind uniformly among HP, T (and CX when m >= 2), then its parameters:
 * the wire, the power p in 1..2^k - 1, or an ordered pair of distinct wires.
 */
Circuit random_word(int level, int num_qubits, std::size_t length, Rng &rng);
Circuit random_word(int level, int num_qubits, std::size_t length, std::uint64_t seed);

}  // namespace cyclo
