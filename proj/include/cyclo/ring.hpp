#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclo {

using Integer = boost::multiprecision::cpp_int;

/// Number of power-basis coefficients at level k, i.e. 2^(k-1).
std::size_t basis_size(int level);

/**
 * An element of D[zeta_{2^k}] = Z[1/2, zeta_{2^k}].
 *
 * Stored as (sum_j c_j zeta^j) / 2^l over the power basis zeta^0 .. zeta^{N-1},
 * N = 2^(k-1), with zeta^N = -1. The representation is always normalized:
 * l == 0 or some c_j is odd. Equality is therefore syntactic.
 */
class RingElement {
  public:
    /// The zero element at level 1.
    RingElement();

    /// Normalizes; throws std::invalid_argument if coeffs.size() != 2^(k-1).
    static RingElement make(int level, std::vector<Integer> coeffs, int den_exp = 0);
    static RingElement zero(int level);
    static RingElement one(int level);
    static RingElement from_int(int level, const Integer &value);
    /// zeta_{2^k}^p, p reduced mod 2^k and sign-folded into the basis.
    static RingElement root_of_unity(int level, std::int64_t p);
    /// sqrt(2) = zeta_8 - zeta_8^3 lifted to level k (k >= 3).
    static RingElement sqrt2(int level);
    /// 1/sqrt(2) = (zeta_8 - zeta_8^3)/2 lifted to level k (k >= 3).
    static RingElement inv_sqrt2(int level);

    int level() const { return level_; }
    int den_exp() const { return den_exp_; }
    const std::vector<Integer> &coeffs() const { return coeffs_; }
    bool is_zero() const;
    /// True when den_exp == 0, i.e. the element lies in Z[zeta_{2^k}].
    bool is_integral() const { return den_exp_ == 0; }

    RingElement operator-() const;
    RingElement &operator+=(const RingElement &other);
    RingElement &operator-=(const RingElement &other);
    RingElement &operator*=(const RingElement &other);

    friend RingElement operator+(RingElement x, const RingElement &y) { return x += y; }
    friend RingElement operator-(RingElement x, const RingElement &y) { return x -= y; }
    friend RingElement operator*(const RingElement &x, const RingElement &y);
    friend bool operator==(const RingElement &x, const RingElement &y) = default;

    /// Complex conjugate: zeta^j -> zeta^{-j}.
    RingElement conj() const;
    /// Same complex number viewed at level >= level().
    RingElement lift(int new_level) const;
    /// Multiplies by zeta^p (coefficient rotation, no arithmetic).
    RingElement times_root(std::int64_t p) const;
    void times_root_inplace(std::int64_t p);
    /// Multiplies by 2^s for any integer s.
    RingElement scaled_pow2(int s) const;
    /// Divides by 2.
    void halve_inplace();

  private:
    void normalize();
    void require_same_level(const RingElement &other) const;

    int level_ = 1;
    int den_exp_ = 0;
    std::vector<Integer> coeffs_;
};

std::ostream &operator<<(std::ostream &os, const RingElement &x);

/// Splits x = a + b * zeta_{2^k} with a, b at level k-1 (even/odd coefficients).
std::pair<RingElement, RingElement> decompose(const RingElement &x);
/// Inverse of decompose: lift(a) + lift(b) * zeta_{2^k}.
RingElement recompose(const RingElement &a, const RingElement &b);

/// Level-3 integers: (c0,c1,c2,c3) is divisible by sqrt(2) iff c0 = c2 and c1 = c3 mod 2.
bool divisible_by_sqrt2(const RingElement &x);
/// Exact quotient x / sqrt(2) for a level-3 integer divisible by sqrt(2).
RingElement divide_by_sqrt2(const RingElement &x);
/// Least t >= 0 with sqrt(2)^t * x in Z[zeta_8]; defined only at level 3.
int sde_sqrt2(const RingElement &x);
/// sqrt(2)^t * x at level 3.
RingElement times_sqrt2_pow(const RingElement &x, int t);

}  // namespace cyclo
