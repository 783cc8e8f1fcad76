#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tg::dfg {

enum class NodeKind {
  Signal,
  Constant,
  Operation,
  Branch,
  BranchCond,
  Concat,
  PartSelect,
  Input,
  Output,
};

constexpr int kNodeKindCount = 9;

const char* node_kind_name(NodeKind k);
NodeKind node_kind_from_name(const std::string& name);

struct DfgNode {
  int id = 0;
  NodeKind kind = NodeKind::Signal;
  std::string label;
};

// Directed data-flow graph, edges pointing from consumers toward producers
// (output roots toward input leaves).
struct CircuitGraph {
  std::string design_name;
  int label = -1;  // -1 unknown, 0 clean, 1 trojan
  std::vector<DfgNode> nodes;
  std::vector<std::pair<int, int>> edges;
  double build_seconds = 0.0;

  size_t node_count() const { return nodes.size(); }
  size_t edge_count() const { return edges.size(); }

  // Canonical serialization: key-sorted JSON, two-space indent, LF newlines.
  std::string to_json() const;
  static CircuitGraph from_json(const std::string& text);

  std::vector<int> in_degrees() const;
  std::vector<int> out_degrees() const;

  // Count of weakly-connected components (brute-force flood fill).
  int component_count() const;
};

struct GraphStats {
  size_t nodes = 0;
  size_t edges = 0;
  double extraction_seconds = 0.0;
};

GraphStats graph_stats(const CircuitGraph& g);

}  // namespace tg::dfg
