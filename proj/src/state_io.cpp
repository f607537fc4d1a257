#include "qamp/state_io.hpp"

#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "qamp/error.hpp"

namespace qamp {

namespace {

std::vector<double> decimal_array(const nlohmann::json& doc, const char* field) {
    const auto& node = doc.at(field);
    if (!node.is_array()) throw ParseError(std::string(field) + " must be an array");
    std::vector<double> values;
    values.reserve(node.size());
    for (const auto& item : node) {
        if (!item.is_number()) throw ParseError(std::string(field) + " entries must be numbers");
        values.push_back(item.get<double>());
    }
    return values;
}

} // namespace

std::string format_decimal(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.16e", value);
    return buf;
}

QuantumState parse_state_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("state document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("state document must be a JSON object");
    if (!doc.contains("num_qubits") || !doc["num_qubits"].is_number_integer()) {
        throw ParseError("state document needs an integer num_qubits field");
    }
    const long long n = doc["num_qubits"].get<long long>();
    if (n < 1 || n > 30) throw ParseError("num_qubits must lie in [1, 30]");

    const bool has_amps = doc.contains("amplitudes");
    const bool has_angles = doc.contains("angles");
    if (has_amps == has_angles) {
        throw ParseError("state document needs exactly one of amplitudes / angles");
    }

    if (has_amps) {
        auto amps = decimal_array(doc, "amplitudes");
        if (amps.size() != (std::size_t{1} << n)) {
            throw ParseError("amplitudes length must equal 2^num_qubits");
        }
        try {
            return QuantumState::from_amplitudes(std::move(amps));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }

    auto angles = decimal_array(doc, "angles");
    if (angles.size() != static_cast<std::size_t>(n)) {
        throw ParseError("angles length must equal num_qubits");
    }
    for (double a : angles) {
        if (!(a >= 0.0 && a <= std::numbers::pi / 2)) {
            throw ParseError("factor angles must lie in [0, pi/2]");
        }
    }
    return product_state(angles);
}

QuantumState load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open state file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_state_text(buffer.str());
}

std::string state_to_text(const QuantumState& state) {
    std::string out = "{\"num_qubits\": " + std::to_string(state.num_qubits()) +
                      ", \"amplitudes\": [";
    for (std::size_t i = 0; i < state.dim(); ++i) {
        if (i > 0) out += ", ";
        out += format_decimal(state.amplitude(i));
    }
    out += "]}\n";
    return out;
}

void save_state_file(const QuantumState& state, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write state file: " + path);
    out << state_to_text(state);
    if (!out) throw IoError("write failed: " + path);
}

} // namespace qamp
