// dot.cpp
//
// Graphviz emitters. Output is fully deterministic: nodes ascend, edges are
// sorted, labels are comma-joined in sorted order.

#include "permutiple/dot.hpp"

#include <sstream>

namespace permutiple {

namespace {

std::string join_labels(const std::vector<InputPair>& inputs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (i) out << ",";
    out << "(" << inputs[i].first << "," << inputs[i].second << ")";
  }
  return out.str();
}

void emit_labeled_edges(std::ostringstream& out,
                        const std::map<std::pair<int, int>, std::vector<InputPair>>& labels) {
  for (const auto& [key, inputs] : labels)
    out << "  " << key.first << " -> " << key.second << " [label=\"" << join_labels(inputs)
        << "\"];\n";
}

}  // namespace

std::string to_dot(const MotherGraph& m, const std::set<std::pair<int, int>>& highlight) {
  std::ostringstream out;
  out << "digraph mother {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  for (int d = 0; d < m.params.b; ++d) out << "  " << d << ";\n";
  for (auto [d1, d2] : m.edges()) {
    out << "  " << d1 << " -> " << d2;
    if (highlight.count({d1, d2})) out << " [color=red]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const HoeySloaneGraph& machine) {
  std::ostringstream out;
  out << "digraph machine {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  out << "  0 [shape=doublecircle];\n";  // initial and accepting
  for (int c = 1; c < machine.states(); ++c) out << "  " << c << ";\n";
  emit_labeled_edges(out, machine.labels);
  out << "}\n";
  return out.str();
}

std::string to_dot(const CycleImage& image, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  if (!image.empty()) {
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    for (int c : image.states()) {
      out << "  " << c;
      if (c == 0) out << " [shape=doublecircle]";
      out << ";\n";
    }
    emit_labeled_edges(out, image.labels);
  }
  out << "}\n";
  return out.str();
}

}  // namespace permutiple
