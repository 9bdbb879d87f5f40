#include "revbcd/metrics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace revbcd {

namespace {

struct StageIndex {
  std::vector<std::string> names;      // first-appearance order
  std::vector<std::size_t> of_instance;
};

StageIndex index_stages(const Circuit& circuit, std::span<const std::string> tags) {
  if (tags.size() != circuit.instances().size()) {
    throw std::invalid_argument("stage tags cover " + std::to_string(tags.size()) +
                                " instances, circuit has " +
                                std::to_string(circuit.instances().size()));
  }
  StageIndex idx;
  std::map<std::string, std::size_t, std::less<>> lookup;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (tags[i].empty()) {
      throw std::invalid_argument("instance #" + std::to_string(i) + " has no stage tag");
    }
    auto [it, inserted] = lookup.emplace(tags[i], idx.names.size());
    if (inserted) {
      idx.names.push_back(tags[i]);
    }
    idx.of_instance.push_back(it->second);
  }
  return idx;
}

// Longest chain of same-stage instances, per stage.
std::vector<std::uint64_t> stage_chain_lengths(const Circuit& circuit, const StageIndex& idx) {
  const auto& insts = circuit.instances();
  std::vector<std::uint64_t> local(insts.size(), 0);
  std::vector<std::uint64_t> longest(idx.names.size(), 0);
  for (std::size_t i = 0; i < insts.size(); ++i) {
    std::uint64_t best = 0;
    for (WireRef w : insts[i].inputs) {
      const WireSource& src = circuit.source(w);
      if (src.kind == SourceKind::gate_output &&
          idx.of_instance[src.index] == idx.of_instance[i]) {
        best = std::max(best, local[src.index]);
      }
    }
    local[i] = best + 1;
    longest[idx.of_instance[i]] = std::max(longest[idx.of_instance[i]], local[i]);
  }
  return longest;
}

}  // namespace

std::vector<std::uint64_t> wire_levels(const Circuit& circuit) {
  std::vector<std::uint64_t> level(circuit.wire_count(), 0);
  for (const GateInstance& inst : circuit.instances()) {
    std::uint64_t in = 0;
    for (WireRef w : inst.inputs) {
      in = std::max(in, level[w.id]);
    }
    for (WireRef w : inst.outputs) {
      level[w.id] = in + 1;
    }
  }
  return level;
}

std::uint64_t delay(const Circuit& circuit) {
  const auto level = wire_levels(circuit);
  std::uint64_t worst = 0;
  for (const OutputPort& p : circuit.outputs()) {
    worst = std::max(worst, level[p.wire.id]);
  }
  for (WireRef w : circuit.garbage()) {
    worst = std::max(worst, level[w.id]);
  }
  return worst;
}

MetricsReport analyze(const Circuit& circuit, const CostTable& costs) {
  MetricsReport r;
  r.gate_count = circuit.instances().size();
  r.garbage_count = circuit.garbage().size();
  r.constant_count = circuit.constants().size();
  for (const GateInstance& inst : circuit.instances()) {
    r.quantum_cost += costs.cost_of(inst.gate.name());
  }
  r.delay_levels = delay(circuit);
  return r;
}

std::vector<StageDelay> delay_decomposition(const Circuit& circuit,
                                            std::span<const std::string> stage_tags) {
  const StageIndex idx = index_stages(circuit, stage_tags);
  const std::size_t n = idx.names.size();

  // Stage dependency graph, then Kahn's algorithm (ties by first appearance).
  std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
  const auto& insts = circuit.instances();
  for (std::size_t i = 0; i < insts.size(); ++i) {
    for (WireRef w : insts[i].inputs) {
      const WireSource& src = circuit.source(w);
      if (src.kind == SourceKind::gate_output) {
        std::size_t from = idx.of_instance[src.index];
        std::size_t to = idx.of_instance[i];
        if (from != to) {
          edge[from][to] = true;
        }
      }
    }
  }
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      indegree[b] += edge[a][b] ? 1 : 0;
    }
  }
  std::vector<std::size_t> order;
  std::vector<bool> done(n, false);
  while (order.size() < n) {
    std::size_t next = n;
    for (std::size_t s = 0; s < n; ++s) {
      if (!done[s] && indegree[s] == 0) {
        next = s;
        break;
      }
    }
    if (next == n) {
      throw StagesNotLinear("stage dependencies form a cycle");
    }
    done[next] = true;
    order.push_back(next);
    for (std::size_t b = 0; b < n; ++b) {
      if (edge[next][b]) {
        --indegree[b];
      }
    }
  }

  const auto chain = stage_chain_lengths(circuit, idx);
  std::vector<StageDelay> result;
  for (std::size_t s : order) {
    result.push_back(StageDelay{idx.names[s], chain[s]});
  }
  const std::uint64_t total = std::accumulate(chain.begin(), chain.end(), std::uint64_t{0});
  const std::uint64_t critical = delay(circuit);
  if (total != critical) {
    throw StagesNotLinear("stage contributions sum to " + std::to_string(total) +
                          " but the critical path is " + std::to_string(critical) +
                          " levels; stages are not a linear pipeline");
  }
  return result;
}

std::vector<StageReport> analyze_stages(const Circuit& circuit, const CostTable& costs,
                                        std::span<const std::string> stage_tags) {
  const StageIndex idx = index_stages(circuit, stage_tags);
  std::vector<StageReport> reports;
  for (const std::string& name : idx.names) {
    reports.push_back(StageReport{name, {}});
  }
  const auto chain = stage_chain_lengths(circuit, idx);
  for (std::size_t s = 0; s < reports.size(); ++s) {
    reports[s].metrics.delay_levels = chain[s];
  }
  const auto& insts = circuit.instances();
  for (std::size_t i = 0; i < insts.size(); ++i) {
    MetricsReport& m = reports[idx.of_instance[i]].metrics;
    ++m.gate_count;
    m.quantum_cost += costs.cost_of(insts[i].gate.name());
    for (WireRef w : insts[i].inputs) {
      if (circuit.source(w).kind == SourceKind::constant) {
        ++m.constant_count;
      }
    }
  }
  for (WireRef w : circuit.garbage()) {
    const WireSource& src = circuit.source(w);
    if (src.kind == SourceKind::gate_output) {
      ++reports[idx.of_instance[src.index]].metrics.garbage_count;
    }
  }
  return reports;
}

std::string to_text(const MetricsReport& r) {
  std::ostringstream out;
  out << "gates:           " << r.gate_count << '\n'
      << "garbage outputs: " << r.garbage_count << '\n'
      << "constant inputs: " << r.constant_count << '\n'
      << "quantum cost:    " << r.quantum_cost << '\n'
      << "delay (levels):  " << r.delay_levels << '\n';
  return out.str();
}

std::string to_key_value(const MetricsReport& r) {
  std::ostringstream out;
  out << "gate_count=" << r.gate_count << '\n'
      << "garbage_count=" << r.garbage_count << '\n'
      << "constant_count=" << r.constant_count << '\n'
      << "quantum_cost=" << r.quantum_cost << '\n'
      << "delay_levels=" << r.delay_levels << '\n';
  return out.str();
}

}  // namespace revbcd
