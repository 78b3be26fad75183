#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "dqsim/boolfn.hpp"
#include "dqsim/circuit.hpp"

namespace dqsim {

// Text form: one "qubits N" header line, then one gate per line as
// "KIND [phi=<value>] w0 w1 ...".  Blank lines and "#" comments are allowed.
std::string serialize(const Circuit& c);
Circuit deserialize(std::string_view text);
Circuit load_circuit(const std::string& path);
void save_circuit(const Circuit& c, const std::string& path);

// Truth-table text: "arity N" then a 2^N-character 0/1 row (MSB-first input
// order), or the shorthands "target <bits>" / "hidden <bits>".
TruthTable parse_truth_table(std::string_view text);
std::string format_truth_table(const TruthTable& f);
TruthTable load_truth_table(const std::string& path);

}  // namespace dqsim
