#pragma once

#include <string>

#include "qamp/statevector.hpp"

namespace qamp {

// State documents are JSON objects with "num_qubits" and exactly one of
//   "amplitudes": 2^n decimals (renormalized on load), or
//   "angles":     n decimals in [0, pi/2] building the tensor-product state.
// Writers emit decimals with 17 significant digits so values round-trip
// exactly.

QuantumState parse_state_text(const std::string& text);
QuantumState load_state_file(const std::string& path);

std::string state_to_text(const QuantumState& state);
void save_state_file(const QuantumState& state, const std::string& path);

// Fixed-width scientific form with 17 significant digits, shared by the
// state writer and the report formats.
std::string format_decimal(double value);

} // namespace qamp
