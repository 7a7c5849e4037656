#include "cyclo/linalg.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace cyclo {

namespace {

void require_same_level(int a, int b) {
    if (a != b) {
        throw std::invalid_argument("matrix level mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

void require_same_shape(const RingMatrix &a, const RingMatrix &b) {
    require_same_level(a.level(), b.level());
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix shape mismatch");
    }
}

void require_product_shape(const RingMatrix &a, const RingMatrix &b) {
    require_same_level(a.level(), b.level());
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matmul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                                    std::to_string(b.rows()) + ")");
    }
}

RingElement dot_row_col(const RingMatrix &a, const RingMatrix &b, std::size_t r, std::size_t c) {
    RingElement acc = RingElement::zero(a.level());
    for (std::size_t t = 0; t < a.cols(); ++t) {
        const RingElement &x = a(r, t);
        const RingElement &y = b(t, c);
        if (x.is_zero() || y.is_zero()) {
            continue;
        }
        acc += x * y;
    }
    return acc;
}

}  // namespace

RingVector RingVector::zero(int level, std::size_t size) {
    return RingVector{level, std::vector<RingElement>(size, RingElement::zero(level))};
}

RingVector RingVector::basis(int level, std::size_t size, std::size_t index) {
    RingVector v = zero(level, size);
    v.entries.at(index) = RingElement::one(level);
    return v;
}

RingMatrix::RingMatrix(int level, std::size_t rows, std::size_t cols)
    : level_(level), rows_(rows), cols_(cols), entries_(rows * cols, RingElement::zero(level)) {}

RingMatrix RingMatrix::zero(int level, std::size_t rows, std::size_t cols) { return RingMatrix(level, rows, cols); }

RingMatrix RingMatrix::identity(int level, std::size_t dim) {
    RingMatrix m(level, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = RingElement::one(level);
    }
    return m;
}

RingMatrix RingMatrix::from_entries(int level, std::size_t rows, std::size_t cols, std::vector<RingElement> entries) {
    if (entries.size() != rows * cols) {
        throw std::invalid_argument("from_entries: expected " + std::to_string(rows * cols) + " entries");
    }
    for (const RingElement &e : entries) {
        require_same_level(level, e.level());
    }
    RingMatrix m;
    m.level_ = level;
    m.rows_ = rows;
    m.cols_ = cols;
    m.entries_ = std::move(entries);
    return m;
}

RingMatrix RingMatrix::diagonal(const std::vector<RingElement> &diag) {
    if (diag.empty()) {
        throw std::invalid_argument("diagonal: empty");
    }
    RingMatrix m(diag.front().level(), diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        require_same_level(m.level(), diag[i].level());
        m(i, i) = diag[i];
    }
    return m;
}

RingMatrix RingMatrix::column(const RingVector &v) { return from_entries(v.level, v.size(), 1, v.entries); }

RingVector RingMatrix::col(std::size_t c) const {
    RingVector v{level_, {}};
    v.entries.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v.entries.push_back((*this)(r, c));
    }
    return v;
}

void RingMatrix::set_col(std::size_t c, const RingVector &v) {
    require_same_level(level_, v.level);
    if (v.size() != rows_) {
        throw std::invalid_argument("set_col: size mismatch");
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        (*this)(r, c) = v[r];
    }
}

std::ostream &operator<<(std::ostream &os, const RingMatrix &m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << "[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            os << (c ? ", " : "") << m(r, c);
        }
        os << "]\n";
    }
    return os;
}

RingMatrix operator+(const RingMatrix &a, const RingMatrix &b) {
    require_same_shape(a, b);
    RingMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(r, c) += b(r, c);
        }
    }
    return out;
}

RingMatrix operator-(const RingMatrix &a, const RingMatrix &b) {
    require_same_shape(a, b);
    RingMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(r, c) -= b(r, c);
        }
    }
    return out;
}

RingMatrix operator*(const RingElement &s, const RingMatrix &m) {
    require_same_level(s.level(), m.level());
    RingMatrix out = m;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out(r, c) = s * m(r, c);
        }
    }
    return out;
}

RingMatrix matmul(const RingMatrix &a, const RingMatrix &b) {
    require_product_shape(a, b);
    RingMatrix out(a.level(), a.rows(), b.cols());
    const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            out(static_cast<std::size_t>(r), c) = dot_row_col(a, b, static_cast<std::size_t>(r), c);
        }
    }
    return out;
}

RingMatrix matmul_serial(const RingMatrix &a, const RingMatrix &b) {
    require_product_shape(a, b);
    RingMatrix out(a.level(), a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            out(r, c) = dot_row_col(a, b, r, c);
        }
    }
    return out;
}

RingVector apply(const RingMatrix &m, const RingVector &v) {
    return matmul(m, RingMatrix::column(v)).col(0);
}

RingMatrix dagger(const RingMatrix &m) {
    RingMatrix out(m.level(), m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out(c, r) = m(r, c).conj();
        }
    }
    return out;
}

RingMatrix tensor(const RingMatrix &a, const RingMatrix &b) {
    require_same_level(a.level(), b.level());
    RingMatrix out(a.level(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const RingElement &x = a(ar, ac);
            if (x.is_zero()) {
                continue;
            }
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
                }
            }
        }
    }
    return out;
}

RingVector tensor(const RingVector &a, const RingVector &b) {
    return tensor(RingMatrix::column(a), RingMatrix::column(b)).col(0);
}

RingElement inner(const RingVector &a, const RingVector &b) {
    require_same_level(a.level, b.level);
    if (a.size() != b.size()) {
        throw std::invalid_argument("inner: size mismatch");
    }
    RingElement acc = RingElement::zero(a.level);
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i].conj() * b[i];
    }
    return acc;
}

bool is_identity(const RingMatrix &m) {
    if (!m.is_square()) {
        return false;
    }
    const RingElement zero = RingElement::zero(m.level());
    const RingElement one = RingElement::one(m.level());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m(r, c) != (r == c ? one : zero)) {
                return false;
            }
        }
    }
    return true;
}

bool is_unitary(const RingMatrix &m) {
    if (!m.is_square() || m.rows() == 0) {
        return false;
    }
    const RingMatrix d = dagger(m);
    return is_identity(matmul(d, m)) && is_identity(matmul(m, d));
}

std::pair<RingMatrix, RingMatrix> matrix_decompose(const RingMatrix &m) {
    if (m.level() < 2) {
        throw std::invalid_argument("matrix_decompose requires level >= 2");
    }
    RingMatrix a(m.level() - 1, m.rows(), m.cols());
    RingMatrix b(m.level() - 1, m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            auto [x, y] = decompose(m(r, c));
            a(r, c) = std::move(x);
            b(r, c) = std::move(y);
        }
    }
    return {std::move(a), std::move(b)};
}

RingMatrix matrix_recompose(const RingMatrix &a, const RingMatrix &b) {
    require_same_shape(a, b);
    RingMatrix out(a.level() + 1, a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(r, c) = recompose(a(r, c), b(r, c));
        }
    }
    return out;
}

RingMatrix lift_matrix(const RingMatrix &m, int new_level) {
    if (new_level == m.level()) {
        return m;
    }
    RingMatrix out(new_level, m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out(r, c) = m(r, c).lift(new_level);
        }
    }
    return out;
}

RingVector lift_vector(const RingVector &v, int new_level) {
    RingVector out{new_level, {}};
    out.entries.reserve(v.size());
    for (const RingElement &e : v.entries) {
        out.entries.push_back(e.lift(new_level));
    }
    return out;
}

RingMatrix block_column_restrict(const RingMatrix &m, int low_bits) {
    if (low_bits < 0) {
        throw std::invalid_argument("block_column_restrict: negative bit count");
    }
    const std::size_t stride = std::size_t{1} << low_bits;
    if (m.cols() % stride != 0) {
        throw std::invalid_argument("block_column_restrict: column count not divisible by 2^" +
                                    std::to_string(low_bits));
    }
    RingMatrix out(m.level(), m.rows(), m.cols() / stride);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < out.cols(); ++c) {
            out(r, c) = m(r, c * stride);
        }
    }
    return out;
}

}  // namespace cyclo
