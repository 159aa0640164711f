#pragma once

// Line-oriented circuit dump:
//
//   qsm-gates 1
//   qubits <Q>
//   register <name> <offset> <size>
//   table <id> <cells> <v0> <v1> ...
//   <KIND> [c=q,q] [t=q,..] [s=q,..] [b=q,..] [p=<param>] [tab=<id>] [pred] ph=<phase>
//
// Tables are listed once, numbered in order of first use.

#include <iosfwd>
#include <string>

#include "qsm/qcore/circuit.hpp"

namespace qsm {

void write_gate_list(std::ostream& out, const Circuit& circuit);
std::string to_gate_list(const Circuit& circuit);

}  // namespace qsm
