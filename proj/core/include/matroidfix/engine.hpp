#pragma once

#include <optional>
#include <string>

#include "matroidfix/graph.hpp"
#include "matroidfix/symmetry.hpp"

namespace mfx {

enum class MatroidKind { Cycle, Bicircular };

enum class EngineMode {
  Auto,        // generic matroid engine when |E| <= 14, edge action above
  Generic,     // force the matroid automorphism search
  EdgeAction,  // force the induced action of Aut(G) on edges
  Both,        // run both and record whether they agree
};

inline constexpr int kGenericEdgeLimit = 14;

struct GraphAnalysis {
  FixReport report;     // from the generic route when it ran, else edge action
  std::string engine;   // "generic" | "edge-action" | "both"
  std::optional<std::uint64_t> generic_aut_order;
  std::optional<std::uint64_t> edge_action_order;
  std::optional<int> generic_fix;
  std::optional<int> edge_action_fix;
  bool routes_agree = true;  // groups equal as permutation sets (Both only)
};

// Fixing-number analysis of M(G) or B(G). The edge-action route computes
// the base size of the induced Aut(G) action on edges; it equals the matroid
// fixing number exactly when that action is the full matroid automorphism
// group (the 3-connectivity / min-degree hypotheses of the structure
// theorems).
GraphAnalysis analyze_graph(const Graph& g, MatroidKind kind,
                            EngineMode mode = EngineMode::Auto,
                            std::size_t cap = kDefaultGroupCap);

Matroid graph_matroid(const Graph& g, MatroidKind kind);

}  // namespace mfx
