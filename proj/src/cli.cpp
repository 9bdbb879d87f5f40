#include "revbcd/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "revbcd/cost_table.hpp"
#include "revbcd/designs.hpp"
#include "revbcd/metrics.hpp"
#include "revbcd/netlist_text.hpp"
#include "revbcd/simulate.hpp"
#include "revbcd/verify.hpp"

namespace revbcd::cli {

namespace {

// Thrown by command handlers to leave with a specific exit code after the
// message has been printed.
struct Exit {
  int code;
};

std::string read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot read '" << path << "'\n";
    throw Exit{kUsage};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Circuit load_circuit(const std::string& path, std::ostream& err) {
  const std::string text = read_file(path, err);
  NetlistDocument doc;
  try {
    doc = parse_netlist(text);
  } catch (const ParseError& e) {
    err << path << ':' << e.line() << ':' << e.column() << ": error: " << e.what() << '\n';
    throw Exit{kParseError};
  }
  try {
    return elaborate(doc);
  } catch (const ElaborationError& e) {
    for (const Diagnostic& d : e.diagnostics()) {
      err << path << ':' << d.where.line << ':' << d.where.column << ": error: " << d.message
          << '\n';
      if (!d.statement.empty()) {
        err << "    " << d.statement << '\n';
      }
    }
    throw Exit{kFailed};
  }
}

CostTable load_costs(const std::string& path, std::ostream& err) {
  if (path.empty()) {
    return default_cost_table();
  }
  const std::string text = read_file(path, err);
  try {
    return CostTable::parse(text);
  } catch (const ParseError& e) {
    err << path << ':' << e.line() << ':' << e.column() << ": error: " << e.what() << '\n';
    throw Exit{kParseError};
  }
}

void print_labelled(std::ostream& out, const std::vector<std::string>& labels, const BitWord& w) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out << (i == 0 ? "" : " ") << labels[i] << '=' << to_char(w[i]);
  }
  out << '\n';
}

int cmd_gates(std::ostream& out) {
  for (const GateDef& g : builtin_catalog()) {
    out << std::left << std::setw(4) << g.name() << ' ' << g.arity() << 'x' << g.arity()
        << "  cost " << std::setw(3) << g.cost() << ' ';
    for (std::size_t i = 0; i < g.functions().size(); ++i) {
      out << (i == 0 ? " " : "; ") << static_cast<char>('P' + i) << " = " << g.functions()[i];
    }
    out << '\n';
  }
  return kSuccess;
}

int cmd_check(const std::string& file, std::ostream& out, std::ostream& err) {
  Circuit c = load_circuit(file, err);
  out << file << ": ok (" << c.input_count() << " inputs, " << c.constants().size()
      << " constants, " << c.instances().size() << " gates, " << c.outputs().size()
      << " outputs, " << c.garbage().size() << " garbage)\n";
  return kSuccess;
}

int cmd_sim(const std::string& file, const std::string& bits, std::ostream& out,
            std::ostream& err) {
  Circuit c = load_circuit(file, err);
  BitWord in;
  try {
    in = BitWord::from_string(bits);
  } catch (const std::invalid_argument& e) {
    err << "error: --in: " << e.what() << '\n';
    return kUsage;
  }
  if (in.width() != c.input_count()) {
    err << "error: --in has " << in.width() << " bits, circuit has " << c.input_count()
        << " inputs (";
    for (std::size_t i = 0; i < c.input_labels().size(); ++i) {
      err << (i == 0 ? "" : " ") << c.input_labels()[i];
    }
    err << ")\n";
    return kUsage;
  }
  SimResult r = simulate(c, in);
  out << "outputs: " << r.outputs.to_string() << '\n';
  print_labelled(out, c.output_labels(), r.outputs);
  out << "garbage: " << r.garbage.to_string() << '\n';
  return kSuccess;
}

int cmd_truth(const std::string& file, std::ostream& out, std::ostream& err) {
  Circuit c = load_circuit(file, err);
  Mapping m = [&] {
    try {
      return circuit_mapping(c);
    } catch (const TooWide& e) {
      err << "error: " << e.what() << '\n';
      throw Exit{kFailed};
    }
  }();
  out << "# inputs:";
  for (const auto& l : c.input_labels()) {
    out << ' ' << l;
  }
  out << " | outputs:";
  for (const auto& l : c.output_labels()) {
    out << ' ' << l;
  }
  out << " | garbage: " << c.garbage().size() << '\n';
  for (std::size_t row = 0; row < m.size(); ++row) {
    out << m.input(row).to_string() << " | " << m.outputs(row).to_string() << " | "
        << m.garbage(row).to_string() << '\n';
  }
  return kSuccess;
}

int cmd_metrics(const std::string& file, const std::string& costs_file,
                const std::string& format, std::ostream& out, std::ostream& err) {
  Circuit c = load_circuit(file, err);
  CostTable costs = load_costs(costs_file, err);
  MetricsReport r;
  try {
    r = analyze(c, costs);
  } catch (const UnknownGateCost& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
  out << (format == "kv" ? to_key_value(r) : to_text(r));
  return kSuccess;
}

int cmd_bcd_build(unsigned digits, const std::string& output, std::ostream& out,
                  std::ostream& err) {
  Circuit c = build_bcd_adder_n(digits);
  std::string text = "# " + std::to_string(digits) + "-digit reversible BCD adder\n" +
                     emit_netlist(c);
  if (output.empty() || output == "-") {
    out << text;
    return kSuccess;
  }
  std::ofstream file(output);
  if (!file || !(file << text)) {
    err << "error: cannot write '" << output << "'\n";
    return kUsage;
  }
  out << "wrote " << output << '\n';
  return kSuccess;
}

int cmd_bcd_verify(unsigned digits, unsigned workers, std::ostream& out) {
  Circuit c = build_bcd_adder_n(digits);
  VerifyReport r = verify_bcd_adder(c, digits, workers);
  out << (r.cases - r.failures) << '/' << r.cases << " cases pass\n";
  if (!r.passed()) {
    out << r.failures << " failures\n";
    for (const std::string& s : r.failure_samples) {
      out << "  " << s << '\n';
    }
    return kFailed;
  }
  return kSuccess;
}

void print_row(std::ostream& out, const ReferenceRow& r) {
  auto cell = [&out](std::uint64_t v, int width) { out << std::right << std::setw(width) << v; };
  out << std::left << std::setw(32) << r.design_label << '|';
  cell(r.adder1_gates, 6);
  cell(r.adder1_garbage, 6);
  out << " |";
  cell(r.correction_gates, 6);
  cell(r.correction_garbage, 6);
  out << " |";
  cell(r.adder2_gates, 6);
  cell(r.adder2_garbage, 6);
  out << " |";
  cell(r.total_gates, 6);
  cell(r.total_garbage, 6);
  cell(r.total_constants, 7);
  out << " |";
  cell(r.total_delay, 6);
  if (!r.note.empty()) {
    out << "   (" << r.note << ')';
  }
  out << '\n';
}

int cmd_bcd_table(const std::string& costs_file, std::ostream& out, std::ostream& err) {
  CostTable costs = load_costs(costs_file, err);
  Circuit c = build_bcd_adder_digit();
  MetricsReport total;
  std::vector<StageReport> stages;
  try {
    total = analyze(c, costs);
    stages = analyze_stages(c, costs, c.instance_tags());
  } catch (const UnknownGateCost& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
  auto stage = [&](std::string_view name) -> const MetricsReport& {
    for (const StageReport& s : stages) {
      if (s.stage == name) {
        return s.metrics;
      }
    }
    throw std::logic_error("missing stage " + std::string(name));
  };
  const MetricsReport& a1 = stage(kStageAdder1);
  const MetricsReport& corr = stage(kStageCorrection);
  const MetricsReport& a2 = stage(kStageAdder2);
  const ReferenceRow recomputed{"Recomputed (built-in design)",
                                a1.gate_count,
                                a1.garbage_count,
                                corr.gate_count,
                                corr.garbage_count,
                                a2.gate_count,
                                a2.garbage_count,
                                total.gate_count,
                                total.garbage_count,
                                total.constant_count,
                                total.delay_levels,
                                ""};

  out << std::left << std::setw(32) << "" << '|' << std::setw(13) << "   adder-1" << '|'
      << std::setw(13) << "  correction" << '|' << std::setw(13) << "   adder-2" << '|'
      << std::setw(20) << "   complete circuit" << '|' << " delay\n";
  out << std::left << std::setw(32) << "design" << '|'
      << " gates garb. | gates garb. | gates garb. | gates garb. consts |\n";
  for (const ReferenceRow& r : reference_table()) {
    print_row(out, r);
  }
  print_row(out, recomputed);
  out << "quantum cost of the built-in design: " << total.quantum_cost
      << (costs_file.empty() ? " (default cost table; NG/HNG/SCL costs are placeholders)" : "")
      << '\n';

  const ReferenceRow& p = proposed_reference_row();
  std::vector<std::string> mismatches;
  auto compare = [&](const char* field, std::uint64_t printed, std::uint64_t computed) {
    if (printed != computed) {
      mismatches.push_back(std::string(field) + " printed " + std::to_string(printed) +
                           ", recomputed " + std::to_string(computed));
    }
  };
  compare("adder-1 gates", p.adder1_gates, recomputed.adder1_gates);
  compare("adder-1 garbage", p.adder1_garbage, recomputed.adder1_garbage);
  compare("correction gates", p.correction_gates, recomputed.correction_gates);
  compare("correction garbage", p.correction_garbage, recomputed.correction_garbage);
  compare("adder-2 gates", p.adder2_gates, recomputed.adder2_gates);
  compare("adder-2 garbage", p.adder2_garbage, recomputed.adder2_garbage);
  compare("total gates", p.total_gates, recomputed.total_gates);
  compare("total garbage", p.total_garbage, recomputed.total_garbage);
  compare("total constants", p.total_constants, recomputed.total_constants);
  compare("delay", p.total_delay, recomputed.total_delay);
  if (mismatches.empty()) {
    out << p.design_label << ": " << p.total_gates << '/' << p.total_garbage << '/'
        << p.total_constants << '/' << p.total_delay << " matches recomputation\n";
    return kSuccess;
  }
  out << p.design_label << ": MISMATCH\n";
  for (const std::string& m : mismatches) {
    out << "  " << m << '\n';
  }
  return kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reversible logic circuits and the reversible BCD adder", "revbcd"};
  app.require_subcommand(1);

  std::string file;
  std::string bits;
  std::string costs_file;
  std::string format = "text";
  std::string output;
  unsigned digits = 1;
  unsigned workers = 0;

  auto* gates = app.add_subcommand("gates", "List the built-in gate catalog");
  auto* check = app.add_subcommand("check", "Parse and validate a netlist");
  check->add_option("file", file, "Netlist file")->required()->check(CLI::ExistingFile);
  auto* sim = app.add_subcommand("sim", "Simulate a netlist on one input word");
  sim->add_option("file", file, "Netlist file")->required()->check(CLI::ExistingFile);
  sim->add_option("--in", bits, "Input bits, MSB first, in INPUT declaration order")
      ->required();
  auto* truth = app.add_subcommand("truth", "Print the exhaustive input/output mapping");
  truth->add_option("file", file, "Netlist file")->required()->check(CLI::ExistingFile);
  auto* metrics = app.add_subcommand("metrics", "Gate count, garbage, constants, cost, delay");
  metrics->add_option("file", file, "Netlist file")->required()->check(CLI::ExistingFile);
  metrics->add_option("--costs", costs_file, "Quantum cost table")->check(CLI::ExistingFile);
  metrics->add_option("--format", format, "text or kv")
      ->check(CLI::IsMember({"text", "kv"}));

  auto* bcd = app.add_subcommand("bcd", "Built-in reversible BCD adder");
  bcd->require_subcommand(1);
  auto* build = bcd->add_subcommand("build", "Emit the adder as a netlist");
  build->add_option("--digits", digits, "Number of BCD digits")
      ->check(CLI::Range(1U, kMaxBcdDigits));
  build->add_option("-o,--output", output, "Output file (default: stdout)");
  auto* verify = bcd->add_subcommand("verify", "Exhaustive check against decimal addition");
  verify->add_option("--digits", digits, "Number of BCD digits")
      ->check(CLI::Range(1U, kMaxBcdDigits));
  verify->add_option("--jobs", workers, "Worker threads (0 = all cores)");
  auto* table = bcd->add_subcommand("table", "Published comparison table plus recomputation");
  table->add_option("--costs", costs_file, "Quantum cost table")->check(CLI::ExistingFile);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    // Help for a subcommand is reported through the same exception type.
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return kSuccess;
    }
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (*gates) {
      return cmd_gates(out);
    }
    if (*check) {
      return cmd_check(file, out, err);
    }
    if (*sim) {
      return cmd_sim(file, bits, out, err);
    }
    if (*truth) {
      return cmd_truth(file, out, err);
    }
    if (*metrics) {
      return cmd_metrics(file, costs_file, format, out, err);
    }
    if (*build) {
      return cmd_bcd_build(digits, output, out, err);
    }
    if (*verify) {
      return cmd_bcd_verify(digits, workers, out);
    }
    if (*table) {
      return cmd_bcd_table(costs_file, out, err);
    }
  } catch (const Exit& e) {
    return e.code;
  }
  err << "error: no command given\n";
  return kUsage;
}

}  // namespace revbcd::cli
