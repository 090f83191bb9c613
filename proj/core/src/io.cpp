#include "matroidfix/io.hpp"

#include <sstream>

#include "json.hpp"

namespace mfx {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& field, const std::string& reason) {
  fail(Errc::SchemaError, "field '" + field + "': " + reason);
}

const Json& require(const Json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) schema_error(key, "missing");
  return j.at(key);
}

int require_int(const Json& j, const std::string& key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) schema_error(key, "expected an integer");
  return v.get<int>();
}

std::string require_string(const Json& j, const std::string& key) {
  const Json& v = require(j, key);
  if (!v.is_string()) schema_error(key, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> string_array(const Json& v, const std::string& key) {
  if (!v.is_array()) schema_error(key, "expected an array of strings");
  std::vector<std::string> out;
  for (const Json& e : v) {
    if (!e.is_string()) schema_error(key, "expected an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

struct Parsed {
  Json echo;
  CatalogEntry entry;
  MatroidKind kind = MatroidKind::Cycle;
};

Parsed parse_json(const Json& j);

Matroid parsed_matroid(const Parsed& p) {
  if (const Graph* g = std::get_if<Graph>(&p.entry)) {
    return graph_matroid(*g, p.kind);
  }
  return std::get<Matroid>(p.entry);
}

Json set_labels(const GroundSet& ground, Mask m) {
  Json out = Json::array();
  for (const std::string& l : ground.labels_of(m)) out.push_back(l);
  return out;
}

MatroidKind parse_interpretation(const Json& j) {
  if (!j.contains("interpretation")) return MatroidKind::Cycle;
  const std::string s = require_string(j, "interpretation");
  if (s == "cycle") return MatroidKind::Cycle;
  if (s == "bicircular") return MatroidKind::Bicircular;
  schema_error("interpretation", "expected \"cycle\" or \"bicircular\"");
}

Parsed parse_uniform(const Json& j) {
  const int r = require_int(j, "r");
  const int n = require_int(j, "n");
  if (n > kMaxGroundSize) fail(Errc::LimitError, "uniform: n > 22");
  if (n < 1) schema_error("n", "expected n >= 1");
  if (r < 0 || r > n) schema_error("r", "expected 0 <= r <= n");
  Parsed p{Json{{"type", "uniform"}, {"r", r}, {"n", n}}, uniform(r, n)};
  return p;
}

Parsed parse_set_system(const Json& j, bool as_circuits) {
  const auto labels = string_array(require(j, "labels"), "labels");
  if (static_cast<int>(labels.size()) > kMaxGroundSize) {
    fail(Errc::LimitError, "more than 22 elements");
  }
  GroundSet ground(labels);
  const Json& sets = require(j, "sets");
  if (!sets.is_array()) schema_error("sets", "expected an array");
  std::vector<Mask> masks;
  for (const Json& s : sets) {
    masks.push_back(ground.mask_of(string_array(s, "sets")));
  }
  Matroid m = as_circuits
                  ? Matroid::from_circuits(ground, SetFamily::of(ground.size(), masks))
                  : Matroid::from_bases(ground, std::move(masks));
  // echo in canonical form: sorted labels, the normalized family
  Json echo{{"type", as_circuits ? "circuits" : "bases"}};
  echo["labels"] = m.ground().labels();
  Json out_sets = Json::array();
  if (as_circuits) {
    for (Mask c : m.circuits().sets) out_sets.push_back(set_labels(m.ground(), c));
  } else {
    for (Mask b : m.bases()) out_sets.push_back(set_labels(m.ground(), b));
  }
  echo["sets"] = std::move(out_sets);
  return Parsed{std::move(echo), std::move(m)};
}

Parsed parse_binary(const Json& j) {
  const Json& matrix = require(j, "matrix");
  if (!matrix.is_array() || matrix.empty()) {
    schema_error("matrix", "expected a non-empty array of rows");
  }
  BinaryMatrix mat;
  mat.rows = static_cast<int>(matrix.size());
  if (mat.rows > kMaxGroundSize) fail(Errc::LimitError, "more than 22 rows");
  std::size_t width = 0;
  std::vector<std::vector<int>> rows;
  for (const Json& row : matrix) {
    if (!row.is_array()) schema_error("matrix", "expected rows as arrays");
    std::vector<int> r;
    for (const Json& e : row) {
      if (!e.is_number_integer() || (e.get<int>() != 0 && e.get<int>() != 1)) {
        schema_error("matrix", "entries must be 0 or 1");
      }
      r.push_back(e.get<int>());
    }
    if (rows.empty()) {
      width = r.size();
    } else if (r.size() != width) {
      schema_error("matrix", "ragged rows");
    }
    rows.push_back(std::move(r));
  }
  if (width == 0) schema_error("matrix", "expected at least one column");
  if (width > static_cast<std::size_t>(kMaxGroundSize)) {
    fail(Errc::LimitError, "more than 22 columns");
  }
  mat.cols = static_cast<int>(width);
  mat.columns.assign(mat.cols, 0);
  for (int i = 0; i < mat.rows; ++i) {
    for (int c = 0; c < mat.cols; ++c) {
      if (rows[i][c]) mat.columns[c] |= bit(i);
    }
  }
  Json echo{{"type", "binary"}, {"matrix", rows}};
  return Parsed{std::move(echo), from_binary(mat)};
}

Parsed parse_transversal(const Json& j) {
  TransversalPresentation pres;
  pres.x_labels = string_array(require(j, "X"), "X");
  pres.y_labels = string_array(require(j, "Y"), "Y");
  if (static_cast<int>(pres.x_labels.size()) > kMaxGroundSize) {
    fail(Errc::LimitError, "more than 22 elements");
  }
  pres.adjacency.assign(pres.x_labels.size(), 0);
  const Json& rel = require(j, "R");
  if (!rel.is_object()) schema_error("R", "expected an object");
  auto x_index = [&](const std::string& x) -> std::size_t {
    for (std::size_t i = 0; i < pres.x_labels.size(); ++i) {
      if (pres.x_labels[i] == x) return i;
    }
    schema_error("R", "unknown X element '" + x + "'");
  };
  auto y_index = [&](const std::string& y) -> int {
    for (std::size_t i = 0; i < pres.y_labels.size(); ++i) {
      if (pres.y_labels[i] == y) return static_cast<int>(i);
    }
    schema_error("R", "unknown Y element '" + y + "'");
  };
  for (const auto& [x, ys] : rel.items()) {
    Mask adj = 0;
    for (const std::string& y : string_array(ys, "R")) adj |= bit(y_index(y));
    pres.adjacency[x_index(x)] |= adj;
  }
  // echo: X sorted, R keys in sorted order with y lists in Y order
  std::vector<std::size_t> order(pres.x_labels.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pres.x_labels[a] < pres.x_labels[b];
  });
  Json echo{{"type", "transversal"}};
  Json xs = Json::array();
  for (std::size_t i : order) xs.push_back(pres.x_labels[i]);
  echo["X"] = std::move(xs);
  echo["Y"] = pres.y_labels;
  Json r_echo = Json::object();
  for (std::size_t i : order) {
    Json ys = Json::array();
    for (std::size_t y = 0; y < pres.y_labels.size(); ++y) {
      if (has(pres.adjacency[i], static_cast<int>(y))) {
        ys.push_back(pres.y_labels[y]);
      }
    }
    r_echo[pres.x_labels[i]] = std::move(ys);
  }
  echo["R"] = std::move(r_echo);
  return Parsed{std::move(echo), transversal(pres).matroid};
}

Parsed parse_graph(const Json& j) {
  const auto vertices = string_array(require(j, "vertices"), "vertices");
  const Json& edges = require(j, "edges");
  if (!edges.is_array()) schema_error("edges", "expected an array");
  std::vector<EdgeSpec> specs;
  for (const Json& e : edges) {
    const auto parts = string_array(e, "edges");
    if (parts.size() != 2 && parts.size() != 3) {
      schema_error("edges", "expected [u, v] or [u, v, label]");
    }
    specs.push_back({parts[0], parts[1], parts.size() == 3 ? parts[2] : ""});
  }
  Parsed p;
  p.kind = parse_interpretation(j);
  Graph g = Graph::create(vertices, std::move(specs));
  Json echo{{"type", "graph"}, {"vertices", vertices}};
  Json edge_echo = Json::array();
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto [u, v] = g.edge_endpoints(i);
    edge_echo.push_back(Json::array(
        {g.vertex_labels()[u], g.vertex_labels()[v], g.edge_label(i)}));
  }
  echo["edges"] = std::move(edge_echo);
  echo["interpretation"] =
      p.kind == MatroidKind::Cycle ? "cycle" : "bicircular";
  p.echo = std::move(echo);
  p.entry = std::move(g);
  return p;
}

Parsed parse_named(const Json& j) {
  const std::string name = require_string(j, "name");
  Parsed p;
  try {
    p.entry = named(name);
  } catch (const Error& e) {
    if (e.code() == Errc::UnknownName) schema_error("name", e.what());
    throw;
  }
  p.kind = parse_interpretation(j);
  Json echo{{"type", "named"}, {"name", name}};
  if (std::holds_alternative<Graph>(p.entry)) {
    echo["interpretation"] = p.kind == MatroidKind::Cycle ? "cycle" : "bicircular";
  }
  p.echo = std::move(echo);
  return p;
}

Parsed parse_derived(const Json& j) {
  const std::string op = require_string(j, "op");
  Json echo{{"type", "derived"}, {"op", op}};
  if (op == "direct_sum") {
    const Json& args = require(j, "args");
    if (!args.is_array() || args.size() != 2) {
      schema_error("args", "direct_sum expects exactly two inputs");
    }
    Parsed a = parse_json(args[0]);
    Parsed b = parse_json(args[1]);
    echo["args"] = Json::array({a.echo, b.echo});
    return Parsed{std::move(echo), direct_sum(parsed_matroid(a), parsed_matroid(b))};
  }
  Parsed inner = parse_json(require(j, "arg"));
  const Matroid m = parsed_matroid(inner);
  echo["arg"] = inner.echo;
  if (op == "dual") {
    return Parsed{std::move(echo), m.dual()};
  }
  if (op == "delete" || op == "contract") {
    const std::string element = require_string(j, "element");
    echo["element"] = element;
    return Parsed{std::move(echo),
                  op == "delete" ? m.deleted(element) : m.contracted(element)};
  }
  if (op == "free_extension") {
    std::string label;
    if (j.contains("label")) {
      label = require_string(j, "label");
      echo["label"] = label;
    }
    return Parsed{std::move(echo), free_extension(m, std::move(label))};
  }
  schema_error("op", "unknown derived operation '" + op + "'");
}

Parsed parse_json(const Json& j) {
  if (!j.is_object()) schema_error("type", "input must be a JSON object");
  const std::string type = require_string(j, "type");
  if (type == "uniform") return parse_uniform(j);
  if (type == "bases") return parse_set_system(j, /*as_circuits=*/false);
  if (type == "circuits") return parse_set_system(j, /*as_circuits=*/true);
  if (type == "binary") return parse_binary(j);
  if (type == "transversal") return parse_transversal(j);
  if (type == "graph") return parse_graph(j);
  if (type == "named") return parse_named(j);
  if (type == "derived") return parse_derived(j);
  schema_error("type", "unknown input type '" + type + "'");
}

Json bounds_json(const BoundsReport& b) {
  return Json{{"n_falling_k", b.n_falling_k},
              {"s_pow_k", b.s_pow_k},
              {"two_pow_k", b.two_pow_k},
              {"all_hold", b.all_hold}};
}

Json nested_labels(const std::vector<std::vector<std::string>>& groups) {
  Json out = Json::array();
  for (const auto& g : groups) out.push_back(g);
  return out;
}

std::string brace_list(const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ", ";
    out += labels[i];
  }
  return out + "}";
}

}  // namespace

bool InputSpec::is_graph() const { return std::holds_alternative<Graph>(entry); }

const Graph& InputSpec::graph() const {
  if (!is_graph()) fail(Errc::BadParams, "input is not a graph");
  return std::get<Graph>(entry);
}

Matroid InputSpec::matroid() const {
  if (is_graph()) return graph_matroid(graph(), kind);
  return std::get<Matroid>(entry);
}

InputSpec parse_input(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(Errc::SyntaxError, e.what());
  }
  Parsed p = parse_json(j);
  return InputSpec{p.echo.dump(), std::move(p.entry), p.kind};
}

std::string emit_report(const Report& r, Format format) {
  if (format == Format::Json) {
    Json out;
    out["input"] = r.input_echo.empty() ? Json() : Json::parse(r.input_echo);
    out["fix"] = r.fix.fix;
    out["witness"] = r.fix.witness;
    out["aut_order"] = r.fix.aut_order;
    out["orbits"] = nested_labels(r.fix.orbits);
    out["clones"] = nested_labels(r.fix.clone_classes);
    out["bounds"] = bounds_json(r.fix.bounds);
    if (r.include_chain) out["chain"] = r.fix.chain;
    out["engine"] = r.engine;
    if (r.include_timing) out["timing_ms"] = r.timing_ms;
    return out.dump(2) + "\n";
  }

  std::ostringstream os;
  if (r.fix.fix == 0) {
    os << "fix = 0 (empty witness)\n";
  } else {
    os << "fix = " << r.fix.fix << "\n";
    os << "witness = " << brace_list(r.fix.witness) << "\n";
  }
  os << "|Aut| = " << r.fix.aut_order << "\n";
  os << "orbit sizes =";
  for (const auto& o : r.fix.orbits) os << " " << o.size();
  os << "\n";
  os << "clone classes =";
  for (const auto& c : r.fix.clone_classes) os << " " << brace_list(c);
  os << "\n";
  const BoundsReport& b = r.fix.bounds;
  os << "|Aut| <= (n)_k: " << b.aut_order << " <= " << b.n_falling_k << "\n";
  os << "|Aut| <= s^k: " << b.aut_order << " <= " << b.s_pow_k << "\n";
  os << "2^k <= |Aut|: " << b.two_pow_k << " <= " << b.aut_order << "\n";
  if (r.include_chain) {
    os << "chain =";
    for (std::uint64_t v : r.fix.chain) os << " " << v;
    os << "\n";
  }
  os << "engine = " << r.engine << "\n";
  if (r.include_timing) os << "time = " << r.timing_ms << " ms\n";
  return os.str();
}

std::string emit_theorems(const std::vector<TheoremReport>& reports, Format format,
                          bool include_timing) {
  if (format == Format::Json) {
    Json out = Json::array();
    for (const TheoremReport& t : reports) {
      Json item{{"id", t.id}, {"status", to_string(t.status)}};
      Json hyps = Json::array();
      for (const auto& [name, holds] : t.hypotheses) {
        hyps.push_back(Json{{"name", name}, {"holds", holds}});
      }
      item["hypotheses"] = std::move(hyps);
      item["detail"] = t.detail;
      if (include_timing) item["elapsed_ms"] = t.elapsed_ms;
      out.push_back(std::move(item));
    }
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const TheoremReport& t : reports) {
    os << to_string(t.status) << " " << t.id;
    if (!t.hypotheses_hold()) {
      os << " (hypothesis";
      for (const auto& [name, holds] : t.hypotheses) {
        if (!holds) os << " '" << name << "'";
      }
      os << " failed)";
    }
    if (!t.detail.empty()) os << ": " << t.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace mfx
