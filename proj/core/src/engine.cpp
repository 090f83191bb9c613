#include "matroidfix/engine.hpp"

namespace mfx {

Matroid graph_matroid(const Graph& g, MatroidKind kind) {
  return kind == MatroidKind::Cycle ? cycle_matroid(g) : bicircular_matroid(g);
}

GraphAnalysis analyze_graph(const Graph& g, MatroidKind kind, EngineMode mode,
                            std::size_t cap) {
  GraphAnalysis out;
  const int m = g.edge_count();

  bool run_generic = false;
  bool run_edge = false;
  switch (mode) {
    case EngineMode::Auto:
      run_generic = m <= kGenericEdgeLimit;
      run_edge = !run_generic;
      break;
    case EngineMode::Generic:
      run_generic = true;
      break;
    case EngineMode::EdgeAction:
      run_edge = true;
      break;
    case EngineMode::Both:
      run_generic = true;
      run_edge = true;
      break;
  }

  std::optional<PermGroup> generic_group;
  std::optional<PermGroup> edge_group;
  if (run_generic) {
    generic_group = automorphism_group(graph_matroid(g, kind), cap);
    out.generic_aut_order = generic_group->order();
  }
  if (run_edge) {
    edge_group = edge_action(g, graph_automorphisms(g, cap)).group;
    out.edge_action_order = edge_group->order();
  }

  std::vector<std::string> labels;
  labels.reserve(m);
  for (int i = 0; i < m; ++i) labels.push_back(g.edge_label(i));
  if (generic_group) {
    out.report = analyze(*generic_group, labels);
    out.generic_fix = out.report.fix;
  }
  if (edge_group) {
    FixReport er = analyze(*edge_group, labels);
    out.edge_action_fix = er.fix;
    if (!generic_group) out.report = std::move(er);
  }
  if (generic_group && edge_group) {
    out.engine = "both";
    out.routes_agree = generic_group->elements() == edge_group->elements();
  } else {
    out.engine = generic_group ? "generic" : "edge-action";
  }
  return out;
}

}  // namespace mfx
