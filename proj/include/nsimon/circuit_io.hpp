#pragma once

#include <string>

#include "nsimon/circuit.hpp"

namespace nsimon {

/// JSON form: {"width": w, "gates": [{"gate": "H"|"X"|"CNOT", "target": t,
/// "control": c}, ...], "measured": [...]}; "control" only on CNOT.
std::string circuit_to_json(const Circuit& c);
/// Throws ParseError on malformed input and the usual validation errors on
/// out-of-range indices.
Circuit parse_circuit_json(const std::string& text);

}  // namespace nsimon
