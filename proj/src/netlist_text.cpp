#include "revbcd/netlist_text.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace revbcd {

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_valid_name(std::string_view s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front())) != 0) {
    return false;
  }
  for (char c : s) {
    if (!is_name_char(c)) {
      return false;
    }
  }
  return true;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])) != 0) {
    ++b;
  }
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])) != 0) {
    --e;
  }
  return std::string(s.substr(b, e - b));
}

std::vector<Token> lex_line(std::string_view line, std::size_t line_no) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    SourceLocation where{line_no, i + 1};
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      tokens.push_back(Token{"->", where});
      i += 2;
    } else if (c == '=') {
      tokens.push_back(Token{"=", where});
      ++i;
    } else if (is_name_char(c)) {
      std::size_t j = i;
      while (j < line.size() && is_name_char(line[j])) {
        ++j;
      }
      tokens.push_back(Token{std::string(line.substr(i, j - i)), where});
      i = j;
    } else {
      throw ParseError(ParseError::Kind::syntax, line_no, i + 1,
                       "unexpected character '" + std::string(1, c) + "'");
    }
  }
  return tokens;
}

class DocumentParser {
 public:
  explicit DocumentParser(const GateCatalog& catalog) : catalog_(catalog) {}

  NetlistDocument parse(std::string_view text) {
    NetlistDocument doc;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
      ++line_no;
      std::string_view line = raw;
      if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      std::vector<Token> tokens = lex_line(line, line_no);
      if (tokens.empty()) {
        continue;
      }
      doc.statements.push_back(parse_statement(tokens, trim(line)));
    }
    return doc;
  }

 private:
  [[noreturn]] static void fail(ParseError::Kind kind, const Token& at, const std::string& msg) {
    throw ParseError(kind, at.where.line, at.where.column, msg);
  }

  static void expect_name(const Token& t) {
    if (!is_valid_name(t.text)) {
      fail(ParseError::Kind::syntax, t, "expected a wire name, got '" + t.text + "'");
    }
  }

  void declare(const Token& t) {
    expect_name(t);
    auto [it, inserted] = declared_.emplace(t.text, t.where);
    if (!inserted) {
      fail(ParseError::Kind::duplicate_name, t,
           "wire '" + t.text + "' is already declared at line " +
               std::to_string(it->second.line));
    }
  }

  void use(const Token& t) const {
    expect_name(t);
    if (declared_.find(t.text) == declared_.end()) {
      fail(ParseError::Kind::use_before_declaration, t,
           "wire '" + t.text + "' is used before it is declared");
    }
  }

  Statement parse_statement(const std::vector<Token>& tokens, std::string source) {
    const Token& head = tokens.front();
    Statement st{};
    st.where = head.where;
    st.source = std::move(source);
    auto rest = std::vector<Token>(tokens.begin() + 1, tokens.end());

    if (head.text == "INPUT" || head.text == "OUTPUT" || head.text == "GARBAGE") {
      st.kind = head.text == "INPUT"    ? Statement::Kind::input
                : head.text == "OUTPUT" ? Statement::Kind::output
                                        : Statement::Kind::garbage;
      if (rest.empty()) {
        fail(ParseError::Kind::syntax, head, head.text + " needs at least one wire name");
      }
      for (const Token& t : rest) {
        if (st.kind == Statement::Kind::input) {
          declare(t);
        } else {
          use(t);
        }
      }
      st.names = std::move(rest);
      return st;
    }

    if (head.text == "CONST") {
      st.kind = Statement::Kind::constant;
      if (rest.size() != 3 || rest[1].text != "=" ||
          (rest[2].text != "0" && rest[2].text != "1")) {
        const Token& at = rest.empty() ? head : rest.back();
        fail(ParseError::Kind::syntax, at, "expected 'CONST name = 0|1'");
      }
      declare(rest[0]);
      st.names = {rest[0]};
      st.value = to_bit(rest[2].text == "1");
      return st;
    }

    if (head.text == "GATE") {
      st.kind = Statement::Kind::gate;
      if (rest.empty()) {
        fail(ParseError::Kind::syntax, head, "expected 'GATE gatename inputs -> outputs'");
      }
      st.gate = rest[0];
      if (!is_valid_name(st.gate.text)) {
        fail(ParseError::Kind::syntax, st.gate, "expected a gate name, got '" + st.gate.text + "'");
      }
      if (catalog_.find(st.gate.text) == nullptr) {
        fail(ParseError::Kind::unknown_gate, st.gate, "unknown gate '" + st.gate.text + "'");
      }
      std::size_t i = 1;
      for (; i < rest.size() && rest[i].text != "->"; ++i) {
        if (rest[i].text == "=") {
          fail(ParseError::Kind::syntax, rest[i], "unexpected '='");
        }
        st.inputs.push_back(rest[i]);
      }
      if (i == rest.size()) {
        fail(ParseError::Kind::syntax, tokens.back(), "expected '->' followed by gate outputs");
      }
      if (st.inputs.empty()) {
        fail(ParseError::Kind::syntax, rest[i], "gate has no inputs before '->'");
      }
      for (++i; i < rest.size(); ++i) {
        if (rest[i].text == "->" || rest[i].text == "=") {
          fail(ParseError::Kind::syntax, rest[i], "unexpected '" + rest[i].text + "'");
        }
        st.outputs.push_back(rest[i]);
      }
      if (st.outputs.empty()) {
        fail(ParseError::Kind::syntax, tokens.back(), "gate has no outputs after '->'");
      }
      for (const Token& t : st.inputs) {
        use(t);
      }
      for (const Token& t : st.outputs) {
        declare(t);
      }
      return st;
    }

    fail(ParseError::Kind::syntax, head,
         "unknown statement '" + head.text + "' (expected INPUT, CONST, GATE, OUTPUT or GARBAGE)");
  }

  const GateCatalog& catalog_;
  std::map<std::string, SourceLocation, std::less<>> declared_;
};

std::string format_diagnostics(const std::vector<Diagnostic>& diagnostics) {
  std::string text;
  for (const Diagnostic& d : diagnostics) {
    if (!text.empty()) {
      text += '\n';
    }
    text += "line " + std::to_string(d.where.line) + ", column " +
            std::to_string(d.where.column) + ": " + d.message + " [in: " + d.statement + "]";
  }
  return text;
}

}  // namespace

NetlistDocument parse_netlist(std::string_view text, const GateCatalog& catalog) {
  return DocumentParser(catalog).parse(text);
}

ElaborationError::ElaborationError(std::vector<Diagnostic> diagnostics)
    : Error(format_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {}

Circuit elaborate(const NetlistDocument& doc, const GateCatalog& catalog) {
  struct WireInfo {
    WireRef ref;
    const Statement* declared_by;
    const Statement* consumed_by = nullptr;
  };
  std::map<std::string, WireInfo, std::less<>> wires;
  std::map<std::uint32_t, std::string> name_of;

  std::vector<std::string> labels;
  for (const Statement& st : doc.statements) {
    if (st.kind == Statement::Kind::input) {
      for (const Token& t : st.names) {
        labels.push_back(t.text);
      }
    }
  }
  if (labels.empty()) {
    throw ElaborationError({Diagnostic{{1, 1}, "", "netlist declares no INPUT wires"}});
  }
  CircuitBuilder builder(labels);

  auto error_at = [](const Token& t, const Statement& st, const std::string& msg) {
    return ElaborationError({Diagnostic{t.where, st.source, msg}});
  };
  auto lookup = [&](const Token& t, const Statement& st) -> WireInfo& {
    auto it = wires.find(t.text);
    if (it == wires.end()) {
      throw error_at(t, st, "wire '" + t.text + "' is not declared");
    }
    return it->second;
  };
  auto consume = [&](const Token& t, const Statement& st) -> WireInfo& {
    WireInfo& w = lookup(t, st);
    if (w.consumed_by != nullptr) {
      throw error_at(t, st,
                     "fan-out violation: wire '" + t.text + "' is already consumed at line " +
                         std::to_string(w.consumed_by->where.line));
    }
    w.consumed_by = &st;
    return w;
  };
  auto define = [&](const Token& t, const Statement& st, WireRef ref) {
    wires.emplace(t.text, WireInfo{ref, &st});
    name_of[ref.id] = t.text;
    builder.name_wire(ref, t.text);
  };

  std::size_t next_input = 0;
  for (const Statement& st : doc.statements) {
    switch (st.kind) {
      case Statement::Kind::input:
        for (const Token& t : st.names) {
          define(t, st, builder.input(next_input++));
        }
        break;
      case Statement::Kind::constant:
        define(st.names.front(), st, builder.add_constant(st.value));
        break;
      case Statement::Kind::gate: {
        const GateDef* gate = catalog.find(st.gate.text);
        if (gate == nullptr) {
          throw error_at(st.gate, st, "unknown gate '" + st.gate.text + "'");
        }
        if (st.inputs.size() != gate->arity() || st.outputs.size() != gate->arity()) {
          throw error_at(st.gate, st,
                         "arity mismatch: " + gate->name() + " has " +
                             std::to_string(gate->arity()) + " inputs and outputs, statement has " +
                             std::to_string(st.inputs.size()) + " -> " +
                             std::to_string(st.outputs.size()));
        }
        std::vector<WireRef> ins;
        for (const Token& t : st.inputs) {
          ins.push_back(consume(t, st).ref);
        }
        auto outs = builder.add_gate(*gate, ins);
        for (std::size_t i = 0; i < outs.size(); ++i) {
          define(st.outputs[i], st, outs[i]);
        }
        break;
      }
      case Statement::Kind::output:
        for (const Token& t : st.names) {
          builder.mark_output(consume(t, st).ref, t.text);
        }
        break;
      case Statement::Kind::garbage:
        for (const Token& t : st.names) {
          builder.mark_garbage(consume(t, st).ref);
        }
        break;
    }
  }

  std::vector<Violation> violations = builder.violations();
  if (!violations.empty()) {
    std::vector<Diagnostic> diagnostics;
    const Statement* last = doc.statements.empty() ? nullptr : &doc.statements.back();
    for (const Violation& v : violations) {
      if (v.kind == Violation::Kind::dangling_wire && v.wire) {
        const std::string& name = name_of.at(v.wire->id);
        const WireInfo& info = wires.at(name);
        SourceLocation where = info.declared_by->where;
        for (const auto* list : {&info.declared_by->names, &info.declared_by->outputs}) {
          for (const Token& t : *list) {
            if (t.text == name) {
              where = t.where;
            }
          }
        }
        diagnostics.push_back(Diagnostic{
            where, info.declared_by->source,
            "dangling wire '" + name + "' is never consumed; mark it OUTPUT or GARBAGE"});
      } else {
        diagnostics.push_back(Diagnostic{last ? last->where : SourceLocation{},
                                         last ? last->source : "", v.message});
      }
    }
    throw ElaborationError(std::move(diagnostics));
  }
  return builder.seal();
}

std::string emit_netlist(const Circuit& circuit) {
  const std::size_t n = circuit.wire_count();
  std::vector<std::string> names(n);
  std::set<std::string> taken;

  auto reserve = [&](WireRef w, const std::string& name) {
    if (!is_valid_name(name)) {
      throw std::invalid_argument("'" + name + "' is not a valid netlist wire name");
    }
    if (!names[w.id].empty() && names[w.id] != name) {
      throw std::invalid_argument("wire named '" + names[w.id] +
                                  "' cannot also carry output label '" + name + "'");
    }
    if (names[w.id].empty() && !taken.insert(name).second) {
      throw std::invalid_argument("wire name '" + name + "' would be used twice");
    }
    names[w.id] = name;
  };
  for (std::size_t i = 0; i < circuit.input_count(); ++i) {
    reserve(circuit.input_wire(i), circuit.input_labels()[i]);
  }
  for (const OutputPort& p : circuit.outputs()) {
    reserve(p.wire, p.label);
  }
  for (std::uint32_t id = 0; id < n; ++id) {
    if (!names[id].empty()) {
      continue;
    }
    std::string base = circuit.wire_name(WireRef{id});
    if (!is_valid_name(base)) {
      base = "w" + std::to_string(id);
    }
    std::string candidate = base;
    for (int k = 1; taken.count(candidate) != 0; ++k) {
      candidate = base + "_" + std::to_string(k);
    }
    taken.insert(candidate);
    names[id] = candidate;
  }

  std::ostringstream out;
  out << "INPUT";
  for (std::size_t i = 0; i < circuit.input_count(); ++i) {
    out << ' ' << names[circuit.input_wire(i).id];
  }
  out << '\n';
  for (std::size_t i = 0; i < circuit.constants().size(); ++i) {
    out << "CONST " << names[circuit.constant_wire(i).id] << " = "
        << to_char(circuit.constants()[i]) << '\n';
  }
  for (const GateInstance& inst : circuit.instances()) {
    out << "GATE " << inst.gate.name();
    for (WireRef w : inst.inputs) {
      out << ' ' << names[w.id];
    }
    out << " ->";
    for (WireRef w : inst.outputs) {
      out << ' ' << names[w.id];
    }
    out << '\n';
  }
  if (!circuit.outputs().empty()) {
    out << "OUTPUT";
    for (const OutputPort& p : circuit.outputs()) {
      out << ' ' << names[p.wire.id];
    }
    out << '\n';
  }
  if (!circuit.garbage().empty()) {
    out << "GARBAGE";
    for (WireRef w : circuit.garbage()) {
      out << ' ' << names[w.id];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace revbcd
