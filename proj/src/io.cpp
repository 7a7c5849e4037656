#include "cyclo/io.hpp"

#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "cyclo/errors.hpp"

namespace cyclo {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

bool is_decimal(const std::string &s) {
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (start == s.size()) {
        return false;
    }
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            return false;
        }
    }
    return true;
}

Integer parse_integer(const json &v, const char *what) {
    if (v.is_number_integer()) {
        return v.is_number_unsigned() ? Integer(v.get<std::uint64_t>()) : Integer(v.get<std::int64_t>());
    }
    if (!v.is_string() || !is_decimal(v.get<std::string>())) {
        throw ParseError(std::string(what) + " must be a decimal integer string");
    }
    return Integer(v.get<std::string>());
}

int get_int(const json &j, const char *key, int lo, int hi) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
        throw ParseError(std::string("missing or non-integer field \"") + key + "\"");
    }
    const auto v = j.at(key).get<std::int64_t>();
    if (v < lo || v > hi) {
        throw ParseError(std::string("field \"") + key + "\" out of range: " + std::to_string(v));
    }
    return static_cast<int>(v);
}

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << text;
}

std::int64_t parse_i64(const std::string &tok, int line) {
    std::int64_t v = 0;
    const char *end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError("line " + std::to_string(line) + ": bad integer '" + tok + "'");
    }
    return v;
}

int parse_wire(const std::string &tok, int line) {
    const std::int64_t v = parse_i64(tok, line);
    if (v < 0 || v > 1 << 20) {
        throw ParseError("line " + std::to_string(line) + ": bad qubit index '" + tok + "'");
    }
    return static_cast<int>(v);
}

}  // namespace

ordered_json element_to_json(const RingElement &x) {
    ordered_json j;
    j["k"] = x.level();
    j["l"] = x.den_exp();
    ordered_json c = ordered_json::array();
    for (const Integer &v : x.coeffs()) {
        c.push_back(v.str());
    }
    j["c"] = std::move(c);
    return j;
}

RingElement element_from_json(const json &j) {
    const int level = get_int(j, "k", 1, 24);
    int den_exp = get_int(j, "l", 0, 1 << 20);
    const json &c = j.at("c");
    if (!c.is_array() || c.size() != basis_size(level)) {
        throw ParseError("\"c\" must hold " + std::to_string(basis_size(level)) + " coefficients at level " +
                         std::to_string(level));
    }
    std::vector<Integer> coeffs;
    coeffs.reserve(c.size());
    for (const json &v : c) {
        coeffs.push_back(parse_integer(v, "coefficient"));
    }
    if (j.contains("den")) {
        const Integer den = parse_integer(j.at("den"), "\"den\"");
        if (den <= 0) {
            throw ParseError("\"den\" must be positive");
        }
        const std::size_t shift = boost::multiprecision::lsb(den);
        if (den != (Integer(1) << shift)) {
            throw InvalidInput("entry has denominator " + den.str() + ", which is not a power of two");
        }
        den_exp += static_cast<int>(shift);
    }
    return RingElement::make(level, std::move(coeffs), den_exp);
}

ordered_json matrix_to_json(const RingMatrix &m) {
    ordered_json j;
    j["k"] = m.level();
    j["dim"] = m.rows();
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(element_to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

RingMatrix matrix_from_json(const json &j) {
    const int level = get_int(j, "k", 1, 24);
    const int dim = get_int(j, "dim", 1, 1 << 20);
    if (!j.contains("entries") || !j.at("entries").is_array()) {
        throw ParseError("missing \"entries\" array");
    }
    if (!std::has_single_bit(static_cast<unsigned>(dim))) {
        throw InvalidInput("dimension " + std::to_string(dim) + " is not a power of two");
    }
    const json &rows = j.at("entries");
    if (rows.size() != static_cast<std::size_t>(dim)) {
        throw InvalidInput("matrix has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(dim));
    }
    std::vector<RingElement> entries;
    entries.reserve(static_cast<std::size_t>(dim) * dim);
    for (const json &row : rows) {
        if (!row.is_array()) {
            throw ParseError("matrix rows must be arrays");
        }
        if (row.size() != static_cast<std::size_t>(dim)) {
            throw InvalidInput("matrix is not square: a row has " + std::to_string(row.size()) + " entries");
        }
        for (const json &e : row) {
            RingElement x = element_from_json(e);
            if (x.level() != level) {
                throw InvalidInput("mixed levels: entry at level " + std::to_string(x.level()) + " in a level " +
                                   std::to_string(level) + " matrix");
            }
            entries.push_back(std::move(x));
        }
    }
    return RingMatrix::from_entries(level, dim, dim, std::move(entries));
}

std::string write_unitary(const RingMatrix &m) {
    if (!m.is_square()) {
        throw std::invalid_argument("unitary files hold square matrices");
    }
    return matrix_to_json(m).dump() + "\n";
}

RingMatrix read_unitary(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    try {
        return matrix_from_json(j);
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed unitary: ") + e.what());
    }
}

RingMatrix read_unitary_file(const std::string &path) { return read_unitary(slurp(path)); }

void write_unitary_file(const std::string &path, const RingMatrix &m) { spit(path, write_unitary(m)); }

std::string write_circuit(const Circuit &c, bool keep_macros) {
    const Circuit out = keep_macros ? c : expand_macros(c);
    std::ostringstream os;
    os << "CYCLO 1\n";
    os << "degree " << (std::uint64_t{1} << out.level) << "\n";
    os << "qubits " << out.num_qubits << "\n";
    os << "inputs " << out.num_inputs << "\n";
    for (const Gate &g : out.gates) {
        os << gate_name(g.kind);
        if (g.kind == GateKind::TPow) {
            os << ' ' << g.power;
        }
        for (int w : g.wires()) {
            os << ' ' << w;
        }
        os << '\n';
    }
    return os.str();
}

Circuit read_circuit(const std::string &text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    std::vector<std::pair<int, std::vector<std::string>>> lines;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream ls(raw);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) {
            toks.push_back(t);
        }
        if (!toks.empty()) {
            lines.emplace_back(line_no, std::move(toks));
        }
    }

    auto header = [&](std::size_t idx, const char *key) -> std::int64_t {
        if (idx >= lines.size() || lines[idx].second.size() != 2 || lines[idx].second[0] != key) {
            const int at = idx < lines.size() ? lines[idx].first : line_no;
            throw ParseError("line " + std::to_string(at) + ": expected '" + key + " <value>'");
        }
        return parse_i64(lines[idx].second[1], lines[idx].first);
    };
    if (header(0, "CYCLO") != 1) {
        throw ParseError("unsupported circuit format version");
    }
    const std::int64_t degree = header(1, "degree");
    if (degree < 2 || degree > (std::int64_t{1} << 24) || !std::has_single_bit(static_cast<std::uint64_t>(degree))) {
        throw ParseError("degree must be a power of two >= 2, got " + std::to_string(degree));
    }
    const std::int64_t qubits = header(2, "qubits");
    const std::int64_t inputs = header(3, "inputs");
    if (qubits < 1 || qubits > 30 || inputs < 0 || inputs > qubits) {
        throw ParseError("bad qubit or input count");
    }

    Circuit c;
    c.level = std::countr_zero(static_cast<std::uint64_t>(degree));
    c.num_qubits = static_cast<int>(qubits);
    c.num_inputs = static_cast<int>(inputs);
    for (std::size_t idx = 4; idx < lines.size(); ++idx) {
        const auto &[at, toks] = lines[idx];
        const std::string &name = toks[0];
        GateKind kind{};
        bool found = false;
        for (GateKind k : {GateKind::HPrime, GateKind::TPow, GateKind::S, GateKind::Sdg, GateKind::X, GateKind::CX,
                           GateKind::CCX, GateKind::H}) {
            if (gate_name(k) == name) {
                kind = k;
                found = true;
            }
        }
        if (!found) {
            throw ParseError("line " + std::to_string(at) + ": unknown gate '" + name + "'");
        }
        const std::size_t extra = kind == GateKind::TPow ? 1 : 0;
        const std::size_t n = static_cast<std::size_t>(arity(kind));
        if (toks.size() != 1 + extra + n) {
            throw ParseError("line " + std::to_string(at) + ": wrong operand count for " + name);
        }
        Gate g{kind, 0, {0, 0, 0}};
        if (extra) {
            g.power = parse_i64(toks[1], at);
        }
        for (std::size_t w = 0; w < n; ++w) {
            g.qubits[w] = parse_wire(toks[1 + extra + w], at);
        }
        c.gates.push_back(g);
    }
    try {
        c.validate();
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
    return c;
}

Circuit read_circuit_file(const std::string &path) { return read_circuit(slurp(path)); }

void write_circuit_file(const std::string &path, const Circuit &c, bool keep_macros) {
    spit(path, write_circuit(c, keep_macros));
}

}  // namespace cyclo
