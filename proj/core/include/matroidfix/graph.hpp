#pragma once

#include <string>
#include <vector>

#include "matroidfix/matroid.hpp"
#include "matroidfix/perm.hpp"

namespace mfx {

struct EdgeSpec {
  std::string u, v;
  std::string label;  // empty: defaults to "u-v"
};

// Finite simple undirected graph with labeled vertices and labeled edges.
// Vertices are capped at 20; edge counts beyond 22 are allowed for the
// graph itself but rejected when building matroids on the edge set.
class Graph {
 public:
  static Graph create(std::vector<std::string> vertices, std::vector<EdgeSpec> edges);

  int vertex_count() const { return static_cast<int>(vertex_labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
  int vertex_id(const std::string& label) const;

  // edges indexed in sorted-label order (matching the edge ground set)
  std::pair<int, int> edge_endpoints(int edge_id) const;
  const std::string& edge_label(int edge_id) const;
  int edge_between(int u, int v) const;  // -1 if absent
  GroundSet edge_ground() const;

  bool adjacent(int u, int v) const;
  int degree(int v) const;
  bool is_connected() const;
  int component_count() const;

 private:
  struct Edge {
    int u, v;
    std::string label;
  };
  std::vector<std::string> vertex_labels_;  // insertion order
  std::vector<Edge> edges_;                 // sorted by label
  std::vector<std::uint32_t> adj_;          // neighbor masks per vertex
};

Matroid cycle_matroid(const Graph& g);
Matroid bicircular_matroid(const Graph& g);

PermGroup graph_automorphisms(const Graph& g, std::size_t cap = kDefaultGroupCap);

struct EdgeAction {
  PermGroup group;    // acting on edge ids
  bool injective;     // vertex group -> edge group was one-to-one
};
EdgeAction edge_action(const Graph& g, const PermGroup& vertex_group);

bool is_k_connected(const Graph& g, int k);

struct GraphFix {
  int fix;
  std::vector<std::string> witness;  // vertex labels
};
GraphFix graph_fixing_number(const Graph& g);

int min_degree(const Graph& g);
bool is_cycle_graph(const Graph& g);

// Minimal edge cuts (bonds) computed directly on the graph; edge ids match
// edge_ground(). Exhaustive over vertex bipartitions, so small graphs only.
std::vector<Mask> minimal_edge_cuts(const Graph& g);

// Cocircuits of B(G) from the definition: minimal edge sets whose removal
// leaves exactly one tree component. Exhaustive over edge subsets.
std::vector<Mask> bicircular_cocircuits_direct(const Graph& g);

}  // namespace mfx
