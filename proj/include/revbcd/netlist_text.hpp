#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "revbcd/bit_word.hpp"
#include "revbcd/errors.hpp"
#include "revbcd/gate.hpp"
#include "revbcd/netlist.hpp"

namespace revbcd {

// Text netlist, one statement per line, `#` starts a comment:
//
//   INPUT name+
//   CONST name = 0|1
//   GATE gatename in1 .. inK -> out1 .. outK
//   OUTPUT name+
//   GARBAGE name+
//
// Names match [A-Za-z_][A-Za-z0-9_]*. Every wire must be declared (INPUT,
// CONST or a GATE output) before it is used, which rules out feedback.

struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;
};

struct Token {
  std::string text;
  SourceLocation where;
};

struct Statement {
  enum class Kind { input, constant, gate, output, garbage };

  Kind kind;
  SourceLocation where;
  std::string source;  // the statement as written, comment stripped

  std::vector<Token> names;  // INPUT / OUTPUT / GARBAGE names, or the CONST name
  Bit value = Bit::zero;     // CONST
  Token gate;                // GATE
  std::vector<Token> inputs;
  std::vector<Token> outputs;
};

struct NetlistDocument {
  std::vector<Statement> statements;
};

// Stops at the first error. Throws ParseError of kind syntax,
// use_before_declaration, unknown_gate or duplicate_name.
NetlistDocument parse_netlist(std::string_view text,
                              const GateCatalog& catalog = builtin_catalog());

struct Diagnostic {
  SourceLocation where;
  std::string statement;
  std::string message;
};

// Structural problems found while building the circuit (fan-out, arity,
// dangling wires), each tied to the statement responsible.
class ElaborationError : public Error {
 public:
  explicit ElaborationError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

// Throws ElaborationError.
Circuit elaborate(const NetlistDocument& doc, const GateCatalog& catalog = builtin_catalog());

// Serializes a circuit in the text format above. Primary outputs take their
// label as wire name. Throws std::invalid_argument when that is impossible
// (a primary input routed to an output under a different label).
std::string emit_netlist(const Circuit& circuit);

}  // namespace revbcd
