#include "cyclo/synth_base.hpp"

#include <algorithm>
#include <bit>
#include <tuple>
#include <optional>
#include <sstream>
#include <utility>

#include "cyclo/errors.hpp"
#include "cyclo/gadgets.hpp"

namespace cyclo {

namespace {

constexpr int kBaseLevel = 3;

int mod8(int p) { return ((p % 8) + 8) % 8; }

bool odd(const Integer &c) { return boost::multiprecision::integer_modulus(c, 2) != 0; }

const RingElement &inv_sqrt2() {
    static const RingElement s = RingElement::inv_sqrt2(kBaseLevel);
    return s;
}

struct PairImage {
    RingElement upper;
    RingElement lower;
};

// (x + w^p y, x - w^p y) / sqrt(2): T^p on the lower row, then H.
PairImage pair_image(const RingElement &x, const RingElement &y, int p) {
    const RingElement yp = y.times_root(p);
    return {(x + yp) * inv_sqrt2(), (x - yp) * inv_sqrt2()};
}

// Stays at sde t only in the even class (two adjacent residue bits).
bool acceptable_at(const RingElement &v, int t) {
    const int s = sde_sqrt2(v);
    return s < t || (s == t && residue(v, t).weight() == 2);
}

class ColumnReducer {
  public:
    ColumnReducer(RingMatrix &m, std::size_t col, std::vector<TwoLevelOp> &ops, ReductionStats &stats)
        : m_(m), col_(col), ops_(ops), stats_(stats) {}

    void run() {
        const std::size_t dim = m_.rows();
        for (std::size_t r = 0; r < col_; ++r) {
            if (!m_(r, col_).is_zero()) {
                throw ReductionStuck("column " + std::to_string(col_) + " has support on an eliminated row");
            }
        }
        int t = max_sde();
        stats_.max_initial_sde = std::max(stats_.max_initial_sde, t);
        while (t > 0) {
            ++stats_.passes;
            pair_odd_rows(t);
            pair_even_rows(t);
            const int next = max_sde();
            if (next >= t) {
                ++stats_.non_monotone_passes;
                throw ReductionStuck("column " + std::to_string(col_) + ": sde did not drop below " +
                                     std::to_string(t));
            }
            t = next;
        }
        finish(dim);
    }

  private:
    int max_sde() const {
        int t = 0;
        for (std::size_t r = col_; r < m_.rows(); ++r) {
            t = std::max(t, sde_sqrt2(m_(r, col_)));
        }
        return t;
    }

    std::vector<std::size_t> rows_at(int t, int weight_parity) const {
        std::vector<std::size_t> rows;
        for (std::size_t r = col_; r < m_.rows(); ++r) {
            const RingElement &v = m_(r, col_);
            if (sde_sqrt2(v) == t && residue(v, t).weight() % 2 == weight_parity) {
                rows.push_back(r);
            }
        }
        return rows;
    }

    void push(const TwoLevelOp &op) {
        apply_op(m_, op);
        ops_.push_back(op);
        ++stats_.ops;
    }

    void apply_pair(std::size_t i, std::size_t j, int p) {
        if (p != 0) {
            push({TwoLevelOp::Kind::T, i, j, p});
        }
        push({TwoLevelOp::Kind::H, i, j, 0});
    }

    struct Choice {
        std::pair<int, long> cost;
        bool conversion;
        std::size_t i;
        std::size_t j;
        int p;
        auto key() const { return std::tie(cost, conversion, i, j, p); }
    };

    // Cost of the op over the unreduced columns: the largest sde it leaves in
    // rows i, j, then the total sde it adds to them.
    std::pair<int, long> row_cost(std::size_t i, std::size_t j, int p) const {
        int worst = 0;
        long growth = 0;
        for (std::size_t c = col_; c < m_.cols(); ++c) {
            const PairImage img = pair_image(m_(i, c), m_(j, c), p);
            const int su = sde_sqrt2(img.upper), sl = sde_sqrt2(img.lower);
            worst = std::max({worst, su, sl});
            growth += su + sl - sde_sqrt2(m_(i, c)) - sde_sqrt2(m_(j, c));
        }
        return {worst, growth};
    }

    // Pairs up `rows` greedily: each step takes the admissible (i, j, p) whose
    // rows end with the smallest sde across the remaining columns. Strict
    // reductions of the current column are always admissible; class
    // conversions only when allowed.
    void match(std::vector<std::size_t> rows, int t, bool allow_conversion) {
        while (!rows.empty()) {
            std::optional<Choice> best;
            for (std::size_t a = 0; a < rows.size(); ++a) {
                for (std::size_t b = a + 1; b < rows.size(); ++b) {
                    const std::size_t i = rows[a], j = rows[b];
                    for (int p = 0; p < 8; ++p) {
                        const PairImage img = pair_image(m_(i, col_), m_(j, col_), p);
                        const bool strict = sde_sqrt2(img.upper) < t && sde_sqrt2(img.lower) < t;
                        if (!strict && !(allow_conversion && acceptable_at(img.upper, t) && acceptable_at(img.lower, t))) {
                            continue;
                        }
                        const Choice c{row_cost(i, j, p), !strict, i, j, p};
                        if (!best || c.key() < best->key()) {
                            best = c;
                        }
                    }
                }
            }
            if (!best) {
                throw ReductionStuck("no admissible pair among " + std::to_string(rows.size()) + " rows of column " +
                                     std::to_string(col_) + " at sde " + std::to_string(t));
            }
            apply_pair(best->i, best->j, best->p);
            ++(best->conversion ? stats_.conversions : stats_.pair_reductions);
            std::erase_if(rows, [&](std::size_t r) { return r == best->i || r == best->j; });
        }
    }

    // Rows whose residue has odd weight. Same-class pairs reduce outright; a
    // mixed pair is moved into the even class at the same sde.
    void pair_odd_rows(int t) {
        const std::vector<std::size_t> rows = rows_at(t, 1);
        if (rows.size() % 2 != 0) {
            throw ReductionStuck("odd number of odd-parity rows in column " + std::to_string(col_));
        }
        match(rows, t, true);
    }

    void pair_even_rows(int t) {
        if (!rows_at(t, 1).empty()) {
            throw ReductionStuck("odd-parity rows survived pairing in column " + std::to_string(col_));
        }
        const std::vector<std::size_t> rows = rows_at(t, 0);
        if (rows.size() % 2 != 0) {
            throw ReductionStuck("odd number of even-class rows in column " + std::to_string(col_));
        }
        match(rows, t, false);
    }

    void finish(std::size_t dim) {
        std::optional<std::size_t> row;
        for (std::size_t r = col_; r < dim; ++r) {
            if (!m_(r, col_).is_zero()) {
                if (row) {
                    throw ReductionStuck("column " + std::to_string(col_) + " has several integral entries");
                }
                row = r;
            }
        }
        if (!row) {
            throw ReductionStuck("column " + std::to_string(col_) + " is zero");
        }
        const RingElement v = m_(*row, col_);
        int q = -1;
        for (int p = 0; p < 8; ++p) {
            if (v == RingElement::root_of_unity(kBaseLevel, p)) {
                q = p;
                break;
            }
        }
        if (q < 0) {
            throw ReductionStuck("column " + std::to_string(col_) + " ends in a non-root-of-unity entry");
        }
        if (*row != col_) {
            push({TwoLevelOp::Kind::X, col_, *row, 0});
        }
        if (q != 0) {
            push({TwoLevelOp::Kind::Omega, col_, col_, mod8(-q)});
        }
    }

    RingMatrix &m_;
    std::size_t col_;
    std::vector<TwoLevelOp> &ops_;
    ReductionStats &stats_;
};

void require_base_level(const RingMatrix &m) {
    if (m.level() != kBaseLevel) {
        throw InvalidInput("base synthesis works at level 3, got " + std::to_string(m.level()));
    }
}

}  // namespace

TwoLevelOp TwoLevelOp::inverse() const {
    TwoLevelOp inv = *this;
    if (kind == Kind::T || kind == Kind::Omega) {
        inv.power = mod8(-power);
    }
    return inv;
}

std::string to_string(const TwoLevelOp &op) {
    std::ostringstream os;
    switch (op.kind) {
    case TwoLevelOp::Kind::X: os << "X[" << op.i << "," << op.j << "]"; break;
    case TwoLevelOp::Kind::H: os << "H[" << op.i << "," << op.j << "]"; break;
    case TwoLevelOp::Kind::T: os << "T^" << op.power << "[" << op.i << "," << op.j << "]"; break;
    case TwoLevelOp::Kind::Omega: os << "w^" << op.power << "[" << op.i << "]"; break;
    }
    return os.str();
}

void apply_op(RingMatrix &m, const TwoLevelOp &op) {
    const std::size_t cols = m.cols();
    switch (op.kind) {
    case TwoLevelOp::Kind::X:
        for (std::size_t c = 0; c < cols; ++c) {
            std::swap(m(op.i, c), m(op.j, c));
        }
        break;
    case TwoLevelOp::Kind::T:
        for (std::size_t c = 0; c < cols; ++c) {
            m(op.j, c).times_root_inplace(op.power);
        }
        break;
    case TwoLevelOp::Kind::Omega:
        for (std::size_t c = 0; c < cols; ++c) {
            m(op.i, c).times_root_inplace(op.power);
        }
        break;
    case TwoLevelOp::Kind::H:
        for (std::size_t c = 0; c < cols; ++c) {
            RingElement &a = m(op.i, c);
            RingElement &b = m(op.j, c);
            if (a.is_zero() && b.is_zero()) {
                continue;
            }
            RingElement sum = (a + b) * inv_sqrt2();
            b = (a - b) * inv_sqrt2();
            a = std::move(sum);
        }
        break;
    }
}

RingMatrix op_matrix(const TwoLevelOp &op, std::size_t dim) {
    RingMatrix m = RingMatrix::identity(kBaseLevel, dim);
    apply_op(m, op);
    return m;
}

int Residue::weight() const { return std::popcount(static_cast<unsigned>(bits)); }

std::string Residue::str() const {
    std::string s;
    for (int b = 3; b >= 0; --b) {
        s.push_back(((bits >> b) & 1U) ? '1' : '0');
    }
    return s;
}

Residue residue(const RingElement &x, int t) {
    if (x.level() != kBaseLevel) {
        throw std::invalid_argument("residue is defined at level 3");
    }
    if (sde_sqrt2(x) > t) {
        throw std::invalid_argument("residue: sde exceeds " + std::to_string(t));
    }
    const RingElement y = times_sqrt2_pow(x, t);
    Residue r;
    for (std::size_t j = 0; j < 4; ++j) {
        if (odd(y.coeffs()[j])) {
            r.bits |= static_cast<std::uint8_t>(1U << j);
        }
    }
    return r;
}

ReductionStats &ReductionStats::operator+=(const ReductionStats &other) {
    columns += other.columns;
    passes += other.passes;
    pair_reductions += other.pair_reductions;
    conversions += other.conversions;
    ops += other.ops;
    non_monotone_passes += other.non_monotone_passes;
    max_initial_sde = std::max(max_initial_sde, other.max_initial_sde);
    return *this;
}

void reduce_column(RingMatrix &m, std::size_t col, std::vector<TwoLevelOp> &ops, ReductionStats *stats) {
    require_base_level(m);
    if (!m.is_square() || col >= m.cols()) {
        throw std::invalid_argument("reduce_column: column out of range");
    }
    ReductionStats local;
    ColumnReducer(m, col, ops, stats ? *stats : local).run();
    if (stats) {
        ++stats->columns;
    }
}

std::vector<TwoLevelOp> two_level_decomposition(const RingMatrix &u, ReductionStats *stats) {
    require_base_level(u);
    RingMatrix work = u;
    std::vector<TwoLevelOp> ops;
    for (std::size_t c = 0; c < work.cols(); ++c) {
        reduce_column(work, c, ops, stats);
    }
    if (!is_identity(work)) {
        throw ReductionStuck("reduced matrix is not the identity");
    }
    return ops;
}

GateList compile_op(const TwoLevelOp &op, int num_system, bool &uses_ancilla) {
    const GadgetLayout layout{num_system, num_system, kBaseLevel};
    Gadget g;
    switch (op.kind) {
    case TwoLevelOp::Kind::X: g = two_level(TwoLevelKind::X, op.i, op.j, 0, layout); break;
    case TwoLevelOp::Kind::H: g = two_level(TwoLevelKind::H, op.i, op.j, 0, layout); break;
    case TwoLevelOp::Kind::T: g = one_level_phase(op.j, op.power, layout); break;
    case TwoLevelOp::Kind::Omega: g = one_level_phase(op.i, op.power, layout); break;
    }
    uses_ancilla = uses_ancilla || g.uses_ancilla;
    return std::move(g.gates);
}

Circuit base_synthesize(const RingMatrix &u, int m, ReductionStats *stats) {
    require_base_level(u);
    if (m < 1 || m > 20 || !u.is_square() || u.rows() != (std::size_t{1} << m)) {
        throw InvalidInput("base synthesis expects a 2^m x 2^m matrix with m >= 1");
    }
    if (!is_unitary(u)) {
        throw InvalidInput("matrix is not unitary");
    }
    const std::vector<TwoLevelOp> ops = two_level_decomposition(u, stats);

    Circuit c;
    c.level = kBaseLevel;
    c.num_inputs = m;
    bool uses_ancilla = false;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        GateList word = compile_op(it->inverse(), m, uses_ancilla);
        c.gates.insert(c.gates.end(), word.begin(), word.end());
    }
    c.num_qubits = m + (uses_ancilla ? 1 : 0);
    return c;
}

}  // namespace cyclo
