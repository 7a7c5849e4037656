#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cyclo/circuit.hpp"
#include "cyclo/linalg.hpp"

namespace cyclo {

/// {"k": k, "l": l, "c": ["<decimal>", ...]}, normalized.
nlohmann::ordered_json element_to_json(const RingElement &x);
/**
 * Accepts coefficients as decimal strings or JSON integers and normalizes.
 * An optional "den" field (decimal string, default "1") divides the element;
 * anything other than a power of two is rejected with InvalidInput because
 * the value is outside D[zeta]. Structural problems raise ParseError.
 */
RingElement element_from_json(const nlohmann::json &j);

/// {"k": k, "dim": d, "entries": [[...], ...]} for a square matrix.
nlohmann::ordered_json matrix_to_json(const RingMatrix &m);
/// ParseError on malformed documents; InvalidInput on a non-square shape, a
/// dimension that is not a power of two, or entries at a level other than "k".
RingMatrix matrix_from_json(const nlohmann::json &j);

std::string write_unitary(const RingMatrix &m);
RingMatrix read_unitary(const std::string &text);
RingMatrix read_unitary_file(const std::string &path);
void write_unitary_file(const std::string &path, const RingMatrix &m);

/// Line-based circuit text. Macros are expanded unless keep_macros is set.
std::string write_circuit(const Circuit &c, bool keep_macros = false);
Circuit read_circuit(const std::string &text);
Circuit read_circuit_file(const std::string &path);
void write_circuit_file(const std::string &path, const Circuit &c, bool keep_macros = false);

}  // namespace cyclo
