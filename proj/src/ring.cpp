#include "cyclo/ring.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cyclo {

namespace {

bool is_odd(const Integer &c) { return boost::multiprecision::integer_modulus(c, 2) != 0; }

void check_level(int level) {
    if (level < 1 || level > 24) {
        throw std::invalid_argument("ring level must be in [1, 24], got " + std::to_string(level));
    }
}

}  // namespace

std::size_t basis_size(int level) {
    check_level(level);
    return std::size_t{1} << (level - 1);
}

RingElement::RingElement() : coeffs_(1) {}

RingElement RingElement::make(int level, std::vector<Integer> coeffs, int den_exp) {
    if (coeffs.size() != basis_size(level)) {
        throw std::invalid_argument("coefficient vector at level " + std::to_string(level) + " must have length " +
                                    std::to_string(basis_size(level)) + ", got " + std::to_string(coeffs.size()));
    }
    if (den_exp < 0) {
        throw std::invalid_argument("denominator exponent must be nonnegative");
    }
    RingElement x;
    x.level_ = level;
    x.den_exp_ = den_exp;
    x.coeffs_ = std::move(coeffs);
    x.normalize();
    return x;
}

RingElement RingElement::zero(int level) {
    RingElement x;
    x.level_ = level;
    x.coeffs_.assign(basis_size(level), Integer{0});
    return x;
}

RingElement RingElement::one(int level) { return from_int(level, 1); }

RingElement RingElement::from_int(int level, const Integer &value) {
    RingElement x = zero(level);
    x.coeffs_[0] = value;
    return x;
}

RingElement RingElement::root_of_unity(int level, std::int64_t p) {
    RingElement x = one(level);
    x.times_root_inplace(p);
    return x;
}

RingElement RingElement::sqrt2(int level) {
    if (level < 3) {
        throw std::invalid_argument("sqrt(2) lies in the ring only from level 3");
    }
    return (root_of_unity(3, 1) - root_of_unity(3, 3)).lift(level);
}

RingElement RingElement::inv_sqrt2(int level) {
    RingElement x = sqrt2(level);
    x.halve_inplace();
    return x;
}

bool RingElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer &c) { return c.is_zero(); });
}

void RingElement::normalize() {
    if (den_exp_ == 0) {
        return;
    }
    // Largest power of two dividing every coefficient, capped by den_exp.
    unsigned shift = static_cast<unsigned>(den_exp_);
    bool all_zero = true;
    for (const Integer &c : coeffs_) {
        if (c.is_zero()) {
            continue;
        }
        all_zero = false;
        if (is_odd(c)) {
            return;
        }
        shift = std::min(shift, static_cast<unsigned>(boost::multiprecision::lsb(boost::multiprecision::abs(c))));
        if (shift == 0) {
            return;
        }
    }
    if (all_zero) {
        den_exp_ = 0;
        return;
    }
    for (Integer &c : coeffs_) {
        c >>= shift;  // exact: every coefficient is divisible by 2^shift
    }
    den_exp_ -= static_cast<int>(shift);
}

void RingElement::require_same_level(const RingElement &other) const {
    if (level_ != other.level_) {
        throw std::invalid_argument("ring level mismatch: " + std::to_string(level_) + " vs " +
                                    std::to_string(other.level_));
    }
}

RingElement RingElement::operator-() const {
    RingElement x = *this;
    for (Integer &c : x.coeffs_) {
        c = -c;
    }
    return x;
}

RingElement &RingElement::operator+=(const RingElement &other) {
    require_same_level(other);
    const std::size_t n = coeffs_.size();
    if (den_exp_ == other.den_exp_) {
        for (std::size_t j = 0; j < n; ++j) {
            coeffs_[j] += other.coeffs_[j];
        }
    } else if (den_exp_ > other.den_exp_) {
        const unsigned s = static_cast<unsigned>(den_exp_ - other.den_exp_);
        for (std::size_t j = 0; j < n; ++j) {
            coeffs_[j] += other.coeffs_[j] << s;
        }
    } else {
        const unsigned s = static_cast<unsigned>(other.den_exp_ - den_exp_);
        for (std::size_t j = 0; j < n; ++j) {
            coeffs_[j] <<= s;
            coeffs_[j] += other.coeffs_[j];
        }
        den_exp_ = other.den_exp_;
    }
    normalize();
    return *this;
}

RingElement &RingElement::operator-=(const RingElement &other) {
    require_same_level(other);
    const std::size_t n = coeffs_.size();
    if (den_exp_ == other.den_exp_) {
        for (std::size_t j = 0; j < n; ++j) {
            coeffs_[j] -= other.coeffs_[j];
        }
    } else if (den_exp_ > other.den_exp_) {
        const unsigned s = static_cast<unsigned>(den_exp_ - other.den_exp_);
        for (std::size_t j = 0; j < n; ++j) {
            coeffs_[j] -= other.coeffs_[j] << s;
        }
    } else {
        const unsigned s = static_cast<unsigned>(other.den_exp_ - den_exp_);
        for (std::size_t j = 0; j < n; ++j) {
            coeffs_[j] <<= s;
            coeffs_[j] -= other.coeffs_[j];
        }
        den_exp_ = other.den_exp_;
    }
    normalize();
    return *this;
}

RingElement operator*(const RingElement &x, const RingElement &y) {
    x.require_same_level(y);
    const std::size_t n = x.coeffs_.size();
    RingElement z = RingElement::zero(x.level_);
    for (std::size_t a = 0; a < n; ++a) {
        if (x.coeffs_[a].is_zero()) {
            continue;
        }
        for (std::size_t b = 0; b < n; ++b) {
            if (y.coeffs_[b].is_zero()) {
                continue;
            }
            const std::size_t j = a + b;
            // zeta^N = -1
            if (j < n) {
                z.coeffs_[j] += x.coeffs_[a] * y.coeffs_[b];
            } else {
                z.coeffs_[j - n] -= x.coeffs_[a] * y.coeffs_[b];
            }
        }
    }
    z.den_exp_ = x.den_exp_ + y.den_exp_;
    z.normalize();
    return z;
}

RingElement &RingElement::operator*=(const RingElement &other) { return *this = *this * other; }

RingElement RingElement::conj() const {
    RingElement x = *this;
    const std::size_t n = coeffs_.size();
    for (std::size_t j = 1; j < n; ++j) {
        x.coeffs_[n - j] = -coeffs_[j];
    }
    return x;
}

RingElement RingElement::lift(int new_level) const {
    if (new_level < level_) {
        throw std::invalid_argument("cannot lift from level " + std::to_string(level_) + " down to " +
                                    std::to_string(new_level));
    }
    if (new_level == level_) {
        return *this;
    }
    RingElement x = zero(new_level);
    const std::size_t step = std::size_t{1} << (new_level - level_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        x.coeffs_[j * step] = coeffs_[j];
    }
    x.den_exp_ = den_exp_;
    return x;
}

RingElement RingElement::times_root(std::int64_t p) const {
    RingElement x = *this;
    x.times_root_inplace(p);
    return x;
}

void RingElement::times_root_inplace(std::int64_t p) {
    const auto n = static_cast<std::int64_t>(coeffs_.size());
    std::int64_t r = p % (2 * n);
    if (r < 0) {
        r += 2 * n;
    }
    if (r == 0) {
        return;
    }
    const bool negate_all = r >= n;
    if (negate_all) {
        r -= n;
    }
    if (r > 0) {
        // zeta^r * zeta^j = zeta^{j+r}; indices that wrap pick up a sign.
        std::rotate(coeffs_.begin(), coeffs_.end() - r, coeffs_.end());
        for (std::int64_t j = 0; j < r; ++j) {
            coeffs_[j] = -coeffs_[j];
        }
    }
    if (negate_all) {
        for (Integer &c : coeffs_) {
            c = -c;
        }
    }
}

RingElement RingElement::scaled_pow2(int s) const {
    RingElement x = *this;
    if (s <= 0) {
        x.den_exp_ -= s;
        x.normalize();
        return x;
    }
    const int absorbed = std::min(s, x.den_exp_);
    x.den_exp_ -= absorbed;
    const unsigned rest = static_cast<unsigned>(s - absorbed);
    if (rest > 0) {
        for (Integer &c : x.coeffs_) {
            c <<= rest;
        }
    }
    return x;
}

void RingElement::halve_inplace() {
    ++den_exp_;
    normalize();
}

std::ostream &operator<<(std::ostream &os, const RingElement &x) {
    os << "(";
    bool first = true;
    for (std::size_t j = 0; j < x.coeffs().size(); ++j) {
        const Integer &c = x.coeffs()[j];
        if (c.is_zero()) {
            continue;
        }
        if (!first) {
            os << (c < 0 ? " - " : " + ");
        } else if (c < 0) {
            os << "-";
        }
        first = false;
        const Integer mag = boost::multiprecision::abs(c);
        if (j == 0) {
            os << mag;
        } else {
            if (mag != 1) {
                os << mag << "*";
            }
            os << "z" << (1 << x.level()) << (j == 1 ? std::string() : "^" + std::to_string(j));
        }
    }
    if (first) {
        os << "0";
    }
    os << ")";
    if (x.den_exp() > 0) {
        os << "/2^" << x.den_exp();
    }
    return os;
}

std::pair<RingElement, RingElement> decompose(const RingElement &x) {
    if (x.level() < 2) {
        throw std::invalid_argument("decompose requires level >= 2");
    }
    const std::size_t half = x.coeffs().size() / 2;
    std::vector<Integer> even(half), odd(half);
    for (std::size_t i = 0; i < half; ++i) {
        even[i] = x.coeffs()[2 * i];
        odd[i] = x.coeffs()[2 * i + 1];
    }
    return {RingElement::make(x.level() - 1, std::move(even), x.den_exp()),
            RingElement::make(x.level() - 1, std::move(odd), x.den_exp())};
}

RingElement recompose(const RingElement &a, const RingElement &b) {
    if (a.level() != b.level()) {
        throw std::invalid_argument("recompose: level mismatch");
    }
    const int level = a.level() + 1;
    return a.lift(level) + b.lift(level).times_root(1);
}

bool divisible_by_sqrt2(const RingElement &x) {
    if (x.level() != 3 || !x.is_integral()) {
        throw std::invalid_argument("divisible_by_sqrt2 expects an integer at level 3");
    }
    const auto &c = x.coeffs();
    return is_odd(c[0]) == is_odd(c[2]) && is_odd(c[1]) == is_odd(c[3]);
}

RingElement divide_by_sqrt2(const RingElement &x) {
    if (!divisible_by_sqrt2(x)) {
        throw std::invalid_argument("element is not divisible by sqrt(2)");
    }
    // x / sqrt2 = x * sqrt2 / 2
    RingElement y = x * RingElement::sqrt2(3);
    y.halve_inplace();
    return y;
}

int sde_sqrt2(const RingElement &x) {
    if (x.level() != 3) {
        throw std::invalid_argument("sde is defined at level 3 only");
    }
    if (x.den_exp() == 0) {
        return 0;
    }
    // Normalized with den_exp > 0: the numerator is not divisible by 2 = sqrt2^2.
    const RingElement numerator = RingElement::make(3, x.coeffs(), 0);
    return 2 * x.den_exp() - (divisible_by_sqrt2(numerator) ? 1 : 0);
}

RingElement times_sqrt2_pow(const RingElement &x, int t) {
    if (t < 0) {
        throw std::invalid_argument("times_sqrt2_pow: negative exponent");
    }
    RingElement y = x.scaled_pow2(t / 2);
    if (t % 2 != 0) {
        y = y * RingElement::sqrt2(x.level());
    }
    return y;
}

}  // namespace cyclo
