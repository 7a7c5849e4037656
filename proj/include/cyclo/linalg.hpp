#pragma once

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

#include "cyclo/ring.hpp"

namespace cyclo {

/// Dense column vector over D[zeta_{2^k}].
struct RingVector {
    int level = 1;
    std::vector<RingElement> entries;

    static RingVector zero(int level, std::size_t size);
    /// Standard basis vector e_index.
    static RingVector basis(int level, std::size_t size, std::size_t index);

    std::size_t size() const { return entries.size(); }
    RingElement &operator[](std::size_t i) { return entries[i]; }
    const RingElement &operator[](std::size_t i) const { return entries[i]; }
    friend bool operator==(const RingVector &, const RingVector &) = default;
};

/// Dense row-major matrix over D[zeta_{2^k}].
class RingMatrix {
  public:
    RingMatrix() = default;
    RingMatrix(int level, std::size_t rows, std::size_t cols);

    static RingMatrix zero(int level, std::size_t rows, std::size_t cols);
    static RingMatrix identity(int level, std::size_t dim);
    /// Builds from row-major entries; all entries must be at `level`.
    static RingMatrix from_entries(int level, std::size_t rows, std::size_t cols, std::vector<RingElement> entries);
    static RingMatrix diagonal(const std::vector<RingElement> &diag);
    static RingMatrix column(const RingVector &v);

    int level() const { return level_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    RingElement &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const RingElement &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    const std::vector<RingElement> &entries() const { return entries_; }

    RingVector col(std::size_t c) const;
    void set_col(std::size_t c, const RingVector &v);

    friend bool operator==(const RingMatrix &, const RingMatrix &) = default;

  private:
    int level_ = 1;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<RingElement> entries_;
};

std::ostream &operator<<(std::ostream &os, const RingMatrix &m);

RingMatrix operator+(const RingMatrix &a, const RingMatrix &b);
RingMatrix operator-(const RingMatrix &a, const RingMatrix &b);
RingMatrix operator*(const RingElement &s, const RingMatrix &m);

/// Exact product, rows distributed across OpenMP threads.
RingMatrix matmul(const RingMatrix &a, const RingMatrix &b);
/// Single-threaded reference for matmul; results are identical.
RingMatrix matmul_serial(const RingMatrix &a, const RingMatrix &b);
RingVector apply(const RingMatrix &m, const RingVector &v);

RingMatrix dagger(const RingMatrix &m);
/// Kronecker product; row index (i, j) -> i * b.rows() + j.
RingMatrix tensor(const RingMatrix &a, const RingMatrix &b);
RingVector tensor(const RingVector &a, const RingVector &b);
/// <a|b> = sum conj(a_i) b_i.
RingElement inner(const RingVector &a, const RingVector &b);

bool is_identity(const RingMatrix &m);
/// dagger(M) M == I and M dagger(M) == I, exactly.
bool is_unitary(const RingMatrix &m);

/// Entrywise decompose: M = lift(A) + lift(B) * zeta_{2^k}.
std::pair<RingMatrix, RingMatrix> matrix_decompose(const RingMatrix &m);
RingMatrix matrix_recompose(const RingMatrix &a, const RingMatrix &b);
RingMatrix lift_matrix(const RingMatrix &m, int new_level);
RingVector lift_vector(const RingVector &v, int new_level);

/// Keeps the columns whose trailing `low_bits` index bits are all zero.
RingMatrix block_column_restrict(const RingMatrix &m, int low_bits);

}  // namespace cyclo
