#include "cyclo/gadgets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclo {

namespace {

std::int64_t t_unit(int level) {
    if (level < 3) {
        throw std::invalid_argument("gadgets need the T gate (level >= 3)");
    }
    return std::int64_t{1} << (level - 3);
}

void append(GateList &out, const GateList &more) { out.insert(out.end(), more.begin(), more.end()); }

// Barenco-style ladder; needs controls.size() - 2 borrowed wires.
GateList toffoli_ladder(const std::vector<int> &x, int target, std::span<const int> borrowed) {
    const std::size_t c = x.size();
    GateList once;
    once.push_back(Gate::ccx(x[c - 1], borrowed[c - 3], target));
    for (std::size_t i = c - 2; i >= 2; --i) {
        once.push_back(Gate::ccx(x[i], borrowed[i - 2], borrowed[i - 1]));
    }
    once.push_back(Gate::ccx(x[0], x[1], borrowed[0]));
    for (std::size_t i = 2; i <= c - 2; ++i) {
        once.push_back(Gate::ccx(x[i], borrowed[i - 2], borrowed[i - 1]));
    }
    GateList out = once;
    append(out, once);
    return out;
}

GateList mcx_positive(const std::vector<int> &controls, int target, std::span<const int> scratch) {
    const std::size_t c = controls.size();
    switch (c) {
    case 0: return {Gate::x(target)};
    case 1: return {Gate::cx(controls[0], target)};
    case 2: return {Gate::ccx(controls[0], controls[1], target)};
    default: break;
    }
    if (scratch.size() >= c - 2) {
        return toffoli_ladder(controls, target, scratch);
    }
    if (scratch.empty()) {
        throw std::invalid_argument("mcx: " + std::to_string(c) + " controls need at least one borrowed wire");
    }
    // target ^= f1 & f2 with b borrowed: b ^= f1; t ^= f2 b; b ^= f1; t ^= f2 b.
    const int b = scratch[0];
    const std::size_t half = (c + 1) / 2;
    std::vector<int> first(controls.begin(), controls.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<int> second(controls.begin() + static_cast<std::ptrdiff_t>(half), controls.end());

    std::vector<int> pool_a = second;
    pool_a.push_back(target);
    pool_a.insert(pool_a.end(), scratch.begin() + 1, scratch.end());
    const GateList compute = mcx_positive(first, b, pool_a);

    std::vector<int> second_plus = second;
    second_plus.push_back(b);
    std::vector<int> pool_b = first;
    pool_b.insert(pool_b.end(), scratch.begin() + 1, scratch.end());
    const GateList apply = mcx_positive(second_plus, target, pool_b);

    GateList out = compute;
    append(out, apply);
    append(out, compute);
    append(out, apply);
    return out;
}

GateList controlled_z(int control, int target) {
    return {Gate::h(target), Gate::cx(control, target), Gate::h(target)};
}

std::int64_t reduce_mod8(std::int64_t p) { return ((p % 8) + 8) % 8; }

void check_layout(const GadgetLayout &layout) {
    if (layout.num_system < 1) {
        throw std::invalid_argument("gadget layout needs at least one system wire");
    }
    if (layout.ancilla >= 0 && layout.ancilla < layout.num_system) {
        throw std::invalid_argument("ancilla wire overlaps the system wires");
    }
}

int wire_of_bit(int bit, int num_system) { return num_system - 1 - bit; }

bool bit_of(std::size_t index, int wire, int num_system) {
    return ((index >> (num_system - 1 - wire)) & 1U) != 0;
}

}  // namespace

GateList mcx(std::span<const Control> controls, int target, std::span<const int> scratch) {
    std::set<int> seen{target};
    std::vector<int> plain;
    for (const Control &c : controls) {
        if (!seen.insert(c.qubit).second) {
            throw std::invalid_argument("mcx: control wires must be distinct from each other and the target");
        }
        plain.push_back(c.qubit);
    }
    for (int s : scratch) {
        if (!seen.insert(s).second) {
            throw std::invalid_argument("mcx: scratch wires must be distinct from controls and target");
        }
    }
    GateList flips;
    for (const Control &c : controls) {
        if (!c.polarity) {
            flips.push_back(Gate::x(c.qubit));
        }
    }
    GateList out = flips;
    append(out, mcx_positive(plain, target, scratch));
    append(out, flips);
    return out;
}

GateList controlled_h(int control, int target, int level) {
    const std::int64_t t = t_unit(level);
    // S H T . CX . T^-1 H S^-1 on the target: identity when control is 0, H when 1.
    return {Gate::sdg(target),      Gate::h(target),   Gate::tpow(-t, target), Gate::cx(control, target),
            Gate::tpow(t, target), Gate::h(target), Gate::s(target)};
}

GateList global_phase(int p, int wire, int level) {
    const std::int64_t power = reduce_mod8(p) * t_unit(level);
    return {Gate::tpow(power, wire), Gate::x(wire), Gate::tpow(power, wire), Gate::x(wire)};
}

GateList flip_clean_target(std::span<const int> controls, int target, int level) {
    const std::vector<int> cs(controls.begin(), controls.end());
    if (cs.size() <= 2) {
        return mcx_positive(cs, target, {});
    }
    // Ry(pi) = A X B X with A = Ry(pi/2) = H Z, B = Ry(-pi/2) = Z H, AB = I.
    // The last control gates A and B; the others drive the two X's, borrowing it.
    const int g = cs.back();
    const std::vector<int> rest(cs.begin(), cs.end() - 1);
    const int borrowed[] = {g};
    const GateList x_rest = mcx_positive(rest, target, borrowed);
    const GateList ch = controlled_h(g, target, level);
    const GateList cz = controlled_z(g, target);

    GateList out = x_rest;
    append(out, ch);  // B = Z H: H first
    append(out, cz);
    append(out, x_rest);
    append(out, cz);  // A = H Z: Z first
    append(out, ch);
    return out;
}

Gadget one_level_phase(std::size_t pattern, int p, const GadgetLayout &layout) {
    check_layout(layout);
    const int n = layout.num_system;
    if (pattern >= (std::size_t{1} << n)) {
        throw std::invalid_argument("one_level_phase: pattern " + std::to_string(pattern) + " out of range");
    }
    const std::int64_t power = reduce_mod8(p) * t_unit(layout.level);
    if (power == 0) {
        return {};
    }
    if (n == 1) {
        if (pattern == 1) {
            return {{Gate::tpow(power, 0)}, false};
        }
        return {{Gate::x(0), Gate::tpow(power, 0), Gate::x(0)}, false};
    }
    if (layout.ancilla < 0) {
        throw std::invalid_argument("one_level_phase on several qubits needs a clean ancilla");
    }
    GateList flips;
    std::vector<int> controls;
    for (int w = 0; w < n; ++w) {
        controls.push_back(w);
        if (!bit_of(pattern, w, n)) {
            flips.push_back(Gate::x(w));
        }
    }
    const GateList mark = flip_clean_target(controls, layout.ancilla, layout.level);
    Gadget out{flips, true};
    append(out.gates, mark);
    out.gates.push_back(Gate::tpow(power, layout.ancilla));
    append(out.gates, invert(mark));
    append(out.gates, flips);
    return out;
}

Gadget two_level(TwoLevelKind kind, std::size_t i, std::size_t j, int p, const GadgetLayout &layout) {
    check_layout(layout);
    const int n = layout.num_system;
    const std::size_t dim = std::size_t{1} << n;
    if (i == j) {
        throw std::invalid_argument("two_level: indices must differ");
    }
    if (i >= dim || j >= dim) {
        throw std::invalid_argument("two_level: index out of range");
    }
    if (kind == TwoLevelKind::T) {
        return one_level_phase(j, p, layout);
    }

    // Pivot on the most significant differing bit; CX from the pivot moves j
    // next to i (differing in the pivot only) while fixing i.
    const std::size_t diff = i ^ j;
    int pivot_bit = 0;
    for (int b = n - 1; b >= 0; --b) {
        if ((diff >> b) & 1U) {
            pivot_bit = b;
            break;
        }
    }
    const int pivot = wire_of_bit(pivot_bit, n);
    const bool j_pivot = bit_of(j, pivot, n);

    GateList gray;
    for (int b = 0; b < n; ++b) {
        if (b != pivot_bit && ((diff >> b) & 1U)) {
            gray.push_back(Gate::cx(pivot, wire_of_bit(b, n)));
        }
    }
    if (!gray.empty() && !j_pivot) {
        gray.insert(gray.begin(), Gate::x(pivot));
        gray.push_back(Gate::x(pivot));
    }

    std::vector<Control> controls;
    for (int w = 0; w < n; ++w) {
        if (w != pivot) {
            controls.push_back({w, bit_of(i, w, n)});
        }
    }

    Gadget out;
    out.gates = gray;
    if (kind == TwoLevelKind::X) {
        if (controls.size() >= 3) {
            const int borrowed[] = {layout.ancilla};
            append(out.gates, mcx(controls, pivot, borrowed));
            out.uses_ancilla = true;
        } else {
            append(out.gates, mcx(controls, pivot));
        }
    } else {
        // H in the (e_i, e_j) order; when i has the pivot bit set this is X H X.
        GateList core;
        if (controls.empty()) {
            core = {Gate::h(pivot)};
        } else if (controls.size() == 1) {
            const Control c = controls.front();
            if (!c.polarity) {
                core.push_back(Gate::x(c.qubit));
            }
            append(core, controlled_h(c.qubit, pivot, layout.level));
            if (!c.polarity) {
                core.push_back(Gate::x(c.qubit));
            }
        } else {
            if (layout.ancilla < 0) {
                throw std::invalid_argument("multi-controlled H needs a clean ancilla");
            }
            const int borrowed[] = {pivot};
            const GateList mark = mcx(controls, layout.ancilla, borrowed);
            core = mark;
            append(core, controlled_h(layout.ancilla, pivot, layout.level));
            append(core, mark);
            out.uses_ancilla = true;
        }
        if (bit_of(i, pivot, n)) {
            out.gates.push_back(Gate::x(pivot));
            append(out.gates, core);
            out.gates.push_back(Gate::x(pivot));
        } else {
            append(out.gates, core);
        }
    }
    std::reverse(gray.begin(), gray.end());
    append(out.gates, gray);
    return out;
}

}  // namespace cyclo
