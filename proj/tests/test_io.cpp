#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "matroidfix/io.hpp"
#include "matroidfix/symmetry.hpp"

using namespace mfx;

namespace {

Errc parse_errc(const std::string& text) {
  try {
    parse_input(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse error");
  return Errc::BadParams;
}

}  // namespace

TEST_CASE("uniform input") {
  InputSpec s = parse_input(R"({"type": "uniform", "r": 2, "n": 4})");
  CHECK_FALSE(s.is_graph());
  CHECK(s.matroid().rank() == 2);
  CHECK(s.matroid().size() == 4);
}

TEST_CASE("bases input normalizes to canonical order") {
  InputSpec s = parse_input(
      R"({"type": "bases", "labels": ["b", "a", "c"],
          "sets": [["b", "c"], ["a", "b"], ["a", "c"]]})");
  CHECK(s.matroid().rank() == 2);
  CHECK(s.matroid().bases().size() == 3);
  // echo parses back to an identical spec
  InputSpec again = parse_input(s.echo);
  CHECK(again.echo == s.echo);
  CHECK(again.matroid() == s.matroid());
}

TEST_CASE("circuits input") {
  InputSpec s = parse_input(
      R"({"type": "circuits", "labels": ["a", "b", "c", "d"],
          "sets": [["a", "b", "c"], ["a", "b", "d"], ["a", "c", "d"],
                   ["b", "c", "d"]]})");
  CHECK(s.matroid() == parse_input(R"({"type": "uniform", "r": 2, "n": 4})").matroid());
}

TEST_CASE("binary input builds the column matroid") {
  InputSpec s = parse_input(
      R"({"type": "binary",
          "matrix": [[1, 0, 0, 1, 1, 0, 1],
                     [0, 1, 0, 1, 0, 1, 1],
                     [0, 0, 1, 0, 1, 1, 1]]})");
  CHECK(s.matroid().size() == 7);
  CHECK(s.matroid().rank() == 3);
  CHECK(s.matroid().bases().size() == 28);
}

TEST_CASE("transversal input") {
  InputSpec s = parse_input(
      R"({"type": "transversal", "X": ["a", "b", "c"], "Y": ["1", "2"],
          "R": {"a": ["1", "2"], "b": ["1", "2"], "c": ["1", "2"]}})");
  CHECK(s.matroid().rank() == 2);
  CHECK(s.matroid().bases().size() == 3);
  InputSpec again = parse_input(s.echo);
  CHECK(again.echo == s.echo);
}

TEST_CASE("graph input with interpretation") {
  const std::string text =
      R"({"type": "graph", "vertices": ["u", "v", "w"],
          "edges": [["u", "v"], ["v", "w"], ["w", "u"]],
          "interpretation": "bicircular"})";
  InputSpec s = parse_input(text);
  CHECK(s.is_graph());
  CHECK(s.kind == MatroidKind::Bicircular);
  CHECK(s.matroid().rank() == 3);  // B(C3): whole edge set independent
  InputSpec again = parse_input(s.echo);
  CHECK(again.echo == s.echo);
  CHECK(again.kind == MatroidKind::Bicircular);
}

TEST_CASE("named input") {
  InputSpec s = parse_input(R"({"type": "named", "name": "fano"})");
  CHECK(s.matroid().bases().size() == 28);
  InputSpec g = parse_input(
      R"({"type": "named", "name": "theta", "interpretation": "bicircular"})");
  CHECK(g.is_graph());
  CHECK(g.kind == MatroidKind::Bicircular);
  CHECK(parse_input(g.echo).echo == g.echo);
}

TEST_CASE("derived inputs") {
  InputSpec d = parse_input(
      R"({"type": "derived", "op": "dual",
          "arg": {"type": "uniform", "r": 1, "n": 4}})");
  CHECK(d.matroid() == parse_input(R"({"type": "uniform", "r": 3, "n": 4})").matroid());

  InputSpec del = parse_input(
      R"({"type": "derived", "op": "delete", "element": "a",
          "arg": {"type": "uniform", "r": 2, "n": 4}})");
  CHECK(del.matroid().size() == 3);

  InputSpec con = parse_input(
      R"({"type": "derived", "op": "contract", "element": "a",
          "arg": {"type": "uniform", "r": 2, "n": 4}})");
  CHECK(con.matroid().rank() == 1);

  InputSpec ext = parse_input(
      R"({"type": "derived", "op": "free_extension", "label": "q",
          "arg": {"type": "uniform", "r": 2, "n": 4}})");
  CHECK(ext.matroid().size() == 5);
  CHECK(ext.matroid().ground().contains("q"));

  InputSpec sum = parse_input(
      R"({"type": "derived", "op": "direct_sum",
          "args": [{"type": "uniform", "r": 1, "n": 2},
                   {"type": "bases", "labels": ["x", "y"],
                    "sets": [["x"], ["y"]]}]})");
  CHECK(sum.matroid().size() == 4);
  CHECK(sum.matroid().rank() == 2);
  CHECK(parse_input(sum.echo).echo == sum.echo);
}

TEST_CASE("error codes by failure class") {
  CHECK(parse_errc("not json") == Errc::SyntaxError);
  CHECK(parse_errc("[1, 2]") == Errc::SchemaError);
  CHECK(parse_errc(R"({"type": "mystery"})") == Errc::SchemaError);
  CHECK(parse_errc(R"({"type": "uniform", "r": 5, "n": 3})") == Errc::SchemaError);
  CHECK(parse_errc(R"({"type": "uniform", "r": 2, "n": 23})") == Errc::LimitError);
  CHECK(parse_errc(R"({"type": "uniform", "r": 2})") == Errc::SchemaError);
  CHECK(parse_errc(R"({"type": "named", "name": "nonesuch"})") == Errc::SchemaError);
  CHECK(parse_errc(R"({"type": "binary", "matrix": [[2]]})") == Errc::SchemaError);
  CHECK(parse_errc(R"({"type": "binary", "matrix": [[1, 0], [1]]})") ==
        Errc::SchemaError);
  CHECK(parse_errc(
            R"({"type": "graph", "vertices": ["a"], "edges": [["a", "a"]]})") ==
        Errc::BadParams);
  // invalid basis family propagates the matroid error
  CHECK(parse_errc(
            R"({"type": "bases", "labels": ["a", "b", "c", "d"],
                "sets": [["a", "b"], ["c", "d"]]})") == Errc::ExchangeViolation);
  CHECK(parse_errc(
            R"({"type": "derived", "op": "warp",
                "arg": {"type": "uniform", "r": 1, "n": 2}})") ==
        Errc::SchemaError);
}

TEST_CASE("json report has a stable shape") {
  Report r;
  InputSpec s = parse_input(R"({"type": "named", "name": "fano"})");
  r.input_echo = s.echo;
  r.fix = analyze(s.matroid());
  r.engine = "generic";
  r.timing_ms = 1.25;
  const std::string out = emit_report(r, Format::Json);
  CHECK(out.find("\"fix\": 3") != std::string::npos);
  CHECK(out.find("\"aut_order\": 168") != std::string::npos);
  CHECK(out.find("\"n_falling_k\": 210") != std::string::npos);
  CHECK(out.find("\"s_pow_k\": 343") != std::string::npos);
  CHECK(out.find("\"two_pow_k\": 8") != std::string::npos);
  CHECK(out.find("\"all_hold\": true") != std::string::npos);
  CHECK(out.find("\"engine\": \"generic\"") != std::string::npos);
  // deterministic modulo timing
  r.include_timing = false;
  CHECK(emit_report(r, Format::Json) == emit_report(r, Format::Json));
  CHECK(emit_report(r, Format::Json).find("timing_ms") == std::string::npos);
}

TEST_CASE("text report") {
  Report r;
  r.fix = analyze(parse_input(R"({"type": "named", "name": "fano"})").matroid());
  r.engine = "generic";
  r.include_timing = false;
  const std::string out = emit_report(r, Format::Text);
  CHECK(out.find("fix = 3") == 0);
  CHECK(out.find("|Aut| = 168") != std::string::npos);
  CHECK(out.find("chain = 168 24 4 1") != std::string::npos);
  CHECK(out.find("engine = generic") != std::string::npos);
  CHECK(out.find("time") == std::string::npos);
}

TEST_CASE("text report for a rigid matroid") {
  // a free extension of U_{1,1} plus loops is overkill; use a matroid with
  // trivial symmetry: the fano with one element deleted has none... keep it
  // simple and analyze a trivial group directly
  Report r;
  r.fix = analyze(PermGroup::trivial(2), {"a", "b"});
  r.engine = "generic";
  r.include_timing = false;
  const std::string out = emit_report(r, Format::Text);
  CHECK(out.find("fix = 0 (empty witness)") == 0);
  CHECK(out.find("witness =") == std::string::npos);
}

TEST_CASE("theorem emission") {
  TheoremReport pass{"demo", {{"connected", true}}, CheckStatus::Pass, "ok", 0.5};
  TheoremReport skip{"other", {{"connected", false}}, CheckStatus::Skip, "", 0.1};
  const std::string text = emit_theorems({pass, skip}, Format::Text);
  CHECK(text.find("PASS demo: ok") != std::string::npos);
  CHECK(text.find("SKIP other (hypothesis 'connected' failed)") != std::string::npos);
  const std::string json = emit_theorems({pass, skip}, Format::Json, false);
  CHECK(json.find("\"status\": \"PASS\"") != std::string::npos);
  CHECK(json.find("elapsed_ms") == std::string::npos);
}
