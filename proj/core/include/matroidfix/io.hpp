#pragma once

#include <string>
#include <vector>

#include "matroidfix/builders.hpp"
#include "matroidfix/engine.hpp"
#include "matroidfix/theorems.hpp"

namespace mfx {

enum class Format { Json, Text };

// A validated input description. `echo` is the normalized JSON text (stable
// key order); parsing the echo reproduces an identical spec.
struct InputSpec {
  std::string echo;
  CatalogEntry entry;
  MatroidKind kind = MatroidKind::Cycle;  // interpretation for graph entries

  bool is_graph() const;
  const Graph& graph() const;       // fails unless is_graph()
  Matroid matroid() const;          // resolves graphs via `kind`
};

// Accepts the JSON input schema: {"type": "uniform" | "bases" | "circuits" |
// "binary" | "transversal" | "graph" | "named" | "derived", ...}.
InputSpec parse_input(const std::string& text);

struct Report {
  std::string input_echo;
  FixReport fix;
  std::string engine;
  double timing_ms = 0.0;
  bool include_timing = true;
  bool include_chain = true;
};

std::string emit_report(const Report& r, Format format);

std::string emit_theorems(const std::vector<TheoremReport>& reports, Format format,
                          bool include_timing = true);

}  // namespace mfx
