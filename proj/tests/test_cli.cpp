#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "heckelab/cli.hpp"
#include "heckelab/document.hpp"

using namespace heckelab;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("heckelab");
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string write_doc(const std::string& name, const std::string& text) {
  std::ofstream f(name, std::ios::binary);
  REQUIRE(f.good());
  f << text;
  return name;
}

std::string slurp(const std::string& name) {
  std::ifstream f(name, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// [[t, x], [0, 1/t]] with the jet order left to the default rule.
const char* kUnbalanced = R"({
  "version": "1",
  "kind": "blowup_bundle",
  "payload": {
    "rank": 2,
    "matrix": [
      [[{"t": 1, "re": "1"}], [{"t": 0, "x": 1, "re": "1"}]],
      [[], [{"t": -1, "re": "1"}]]
    ]
  }
})";

const char* kProfile = R"({
  "version": "1",
  "kind": "hn_profile",
  "payload": {
    "blocks": [
      {"rank": 2, "slope": "3/2"},
      {"rank": 1, "slope": "0"}
    ]
  }
})";

}  // namespace

TEST_CASE("split reports the splitting of a line transition") {
  std::string in = write_doc("cli_split_id.json", R"({
    "version": "1",
    "kind": "p1_transition",
    "payload": {
      "rank": 2,
      "matrix": [
        [[{"t": 0, "re": "1"}], []],
        [[], [{"t": 0, "re": "1"}]]
      ]
    }
  })");
  CliRun r = run({"split", "--input", in});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  Json report = Json::parse(r.out);
  CHECK(report["splitting"] == Json::parse("[0, 0]"));
  CHECK(report["phi"] == "0");
  CHECK(report["hn_blocks"].size() == 1);
  CHECK(report["verified"] == false);

  CliRun v = run({"split", "--input", in, "--verify"});
  CHECK(v.code == 0);
  CHECK(Json::parse(v.out)["verified"] == true);
}

TEST_CASE("split restricts a blow-up bundle to the exceptional line") {
  std::string in = write_doc("cli_split_blowup.json", kUnbalanced);
  CliRun r = run({"split", "--input", in, "--verify"});
  CHECK(r.code == 0);
  Json report = Json::parse(r.out);
  CHECK(report["splitting"] == Json::parse("[1, -1]"));
  CHECK(report["phi"] == "2");
  CHECK(report["verified"] == true);
}

TEST_CASE("split rejects a profile document") {
  std::string in = write_doc("cli_split_prof.json", kProfile);
  CliRun r = run({"split", "--input", in});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "split expects"));
}

TEST_CASE("degenerate transitions exit with the bundle error code") {
  std::string in = write_doc("cli_split_degenerate.json", R"({
    "version": "1",
    "kind": "blowup_bundle",
    "payload": {
      "rank": 2,
      "jet_order": 2,
      "matrix": [
        [[{"t": 0, "re": "1"}], [{"t": 0, "re": "1"}]],
        [[{"t": 1, "re": "1"}], [{"t": 1, "re": "1"}]]
      ]
    }
  })");
  CliRun r = run({"split", "--input", in});
  CHECK(r.code == 3);
  CHECK(contains(r.err, "error:"));
}

TEST_CASE("schema diagnostics name the offending path") {
  std::string bad_version = write_doc("cli_bad_version.json",
                                      R"({"version": "2", "kind": "hn_profile",
                                          "payload": {"blocks": []}})");
  CliRun r1 = run({"profile", "phi", "--input", bad_version});
  CHECK(r1.code == 2);
  CHECK(contains(r1.err, "$.version"));

  std::string bad_field = write_doc("cli_bad_field.json", R"({
    "version": "1",
    "kind": "p1_transition",
    "payload": {
      "rank": 1,
      "matrix": [[[{"t": 0, "re": "1", "q": 3}]]]
    }
  })");
  CliRun r2 = run({"split", "--input", bad_field});
  CHECK(r2.code == 2);
  CHECK(contains(r2.err, "$.payload.matrix[0][0][0]"));
  CHECK(contains(r2.err, "unknown field \"q\""));

  std::string deep_x = write_doc("cli_deep_x.json", R"({
    "version": "1",
    "kind": "blowup_bundle",
    "payload": {
      "rank": 1,
      "jet_order": 1,
      "matrix": [[[{"t": 0, "re": "1"}, {"t": 0, "x": 2, "re": "1"}]]]
    }
  })");
  CliRun r3 = run({"split", "--input", deep_x});
  CHECK(r3.code == 2);
  CHECK(contains(r3.err, "exceeds the jet order"));

  std::string x_on_line = write_doc("cli_x_on_line.json", R"({
    "version": "1",
    "kind": "p1_transition",
    "payload": {
      "rank": 1,
      "matrix": [[[{"t": 0, "x": 1, "re": "1"}]]]
    }
  })");
  CliRun r4 = run({"split", "--input", x_on_line});
  CHECK(r4.code == 2);
  CHECK(contains(r4.err, "x-free"));
}

TEST_CASE("optimize walks the worked example with the default jet order") {
  std::string in = write_doc("cli_opt.json", kUnbalanced);
  CliRun r = run({"optimize", "--input", in});
  CHECK(r.code == 0);
  Json report = Json::parse(r.out);
  CHECK(report["final_splitting"] == Json::parse("[1, 1]"));
  CHECK(report["phi_trace"] == Json::parse("[2, 1, 0]"));
  CHECK(report["steps"] == 2);
  CHECK(report["reached_optimal"] == true);
  CHECK(!report.contains("error"));
  // Default precision is ceil(phi_0) + 2 = 4, so 3 remains after step one.
  CHECK(report["trace"][0]["top_blocks"] == 1);
  CHECK(report["trace"][0]["sub_rank"] == 1);
  CHECK(report["trace"][0]["jet_remaining"] == 3);
  CHECK(report["trace"][1]["phi_after"] == 0);
}

TEST_CASE("optimize reports jet exhaustion with exit code 4") {
  std::string in = write_doc("cli_opt_shallow.json", kUnbalanced);
  CliRun r = run({"optimize", "--input", in, "--jet-order", "1"});
  CHECK(r.code == 4);
  Json report = Json::parse(r.out);
  CHECK(report["reached_optimal"] == false);
  CHECK(report["error"] == "insufficient jet order");
  CHECK(report["steps"] == 1);
  CHECK(report["phi_trace"] == Json::parse("[2, 1]"));
}

TEST_CASE("optimize emits the trace as a DOT graph on request") {
  std::string in = write_doc("cli_opt_dot.json", kUnbalanced);
  CliRun r = run({"optimize", "--input", in, "--emit-dot", "cli_trace.dot"});
  CHECK(r.code == 0);
  std::string dot = slurp("cli_trace.dot");
  CHECK(contains(dot, "digraph hecke_trace"));
  CHECK(contains(dot, "s0 [label=\"(1, -1)\"]"));
  CHECK(contains(dot, "s0 -> s1 [label=\"Hecke k=1\"]"));
  CHECK(contains(dot, "s2"));
}

TEST_CASE("optimize validates its options") {
  std::string in = write_doc("cli_opt_bad.json", kUnbalanced);
  CHECK(run({"optimize", "--input", in, "--schedule", "junk"}).code == 2);
  CHECK(run({"optimize", "--input", in, "--jet-order", "-3"}).code == 2);
  CHECK(run({"optimize", "--input", in, "--schedule", "best"}).code == 0);
}

TEST_CASE("profile operations compute the worked values") {
  std::string in = write_doc("cli_prof.json", kProfile);

  Json phi_rep = Json::parse(run({"profile", "phi", "--input", in}).out);
  CHECK(phi_rep["phi"] == "3/2");

  CliRun hecke = run({"profile", "hecke", "--input", in, "--k", "1"});
  CHECK(hecke.code == 0);
  Json hecke_rep = Json::parse(hecke.out);
  CHECK(hecke_rep["result"] ==
        Json::parse(R"([{"rank": 2, "slope": "3/2"}, {"rank": 1, "slope": "1"}])"));
  CHECK(hecke_rep["phi"] == "1/2");

  Json bound_rep =
      Json::parse(run({"profile", "bound", "--input", in, "--k", "1"}).out);
  CHECK(bound_rep["bound"] == "1/2");

  std::string steep = write_doc("cli_prof_steep.json", R"({
    "version": "1",
    "kind": "hn_profile",
    "payload": {
      "blocks": [
        {"rank": 1, "slope": "2"},
        {"rank": 2, "slope": "3/2"}
      ]
    }
  })");
  Json partial = Json::parse(run({"profile", "partial-hn", "--input", steep}).out);
  CHECK(partial["indices"] == Json::parse("[0, 2]"));
  CHECK(partial["twists"] == Json::parse("[0]"));

  std::string wide = write_doc("cli_prof_wide.json", R"({
    "version": "1",
    "kind": "hn_profile",
    "payload": {
      "blocks": [
        {"rank": 1, "slope": "3"},
        {"rank": 1, "slope": "2"}
      ]
    }
  })");
  Json gr = Json::parse(run({"profile", "gr-tilde", "--input", wide}).out);
  CHECK(gr["result"] == Json::parse(R"([{"rank": 2, "slope": "3"}])"));
  CHECK(gr["phi"] == "0");

  std::string off = write_doc("cli_prof_off.json", R"({
    "version": "1",
    "kind": "hn_profile",
    "payload": {
      "blocks": [
        {"rank": 2, "slope": "3/2"},
        {"rank": 1, "slope": "1"}
      ]
    }
  })");
  Json norm = Json::parse(run({"profile", "normalize", "--input", off}).out);
  CHECK(norm["result"] ==
        Json::parse(R"([{"rank": 2, "slope": "1/2"}, {"rank": 1, "slope": "0"}])"));

  std::string twin = write_doc("cli_prof_twin.json", R"({
    "version": "1",
    "kind": "hn_profile",
    "payload": {
      "blocks": [
        {"rank": 2, "slope": "5/2"},
        {"rank": 1, "slope": "2"}
      ]
    }
  })");
  CliRun eq = run({"profile", "equivalent", "--input", off, "--input2", twin});
  CHECK(eq.code == 0);
  CHECK(Json::parse(eq.out)["equivalent"] == true);

  CliRun neq = run({"profile", "equivalent", "--input", in, "--input2", twin});
  CHECK(Json::parse(neq.out)["equivalent"] == false);
}

TEST_CASE("profile operations validate their arguments") {
  std::string in = write_doc("cli_prof_args.json", kProfile);
  CHECK(run({"profile", "hecke", "--input", in}).code == 2);
  CHECK(run({"profile", "equivalent", "--input", in}).code == 2);
  CHECK(run({"profile", "frobnicate", "--input", in}).code == 2);
  CHECK(run({"profile"}).code == 2);
}

TEST_CASE("verify runs a seeded suite and reports the tally") {
  CliRun r = run({"verify", "discreteness", "--count", "50", "--seed", "9"});
  CHECK(r.code == 0);
  Json report = Json::parse(r.out);
  CHECK(report["suite"] == "discreteness");
  CHECK(report["seed"] == 9);
  CHECK(report["requested"] == 50);
  CHECK(report["checked"] == 50);
  CHECK(report["failures"].empty());
  CHECK(report["passed"] == true);

  CHECK(run({"verify", "nonsense"}).code == 2);
}

TEST_CASE("reports can be routed to a file") {
  std::string in = write_doc("cli_routed.json", kProfile);
  CliRun r =
      run({"profile", "phi", "--input", in, "--output", "cli_routed_out.json"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(Json::parse(slurp("cli_routed_out.json"))["phi"] == "3/2");
}

TEST_CASE("help is not an error") {
  CliRun r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "split"));
  CHECK(contains(r.out, "optimize"));
  CHECK(run({}).code == 2);
}

TEST_CASE("serialization round-trips every document kind byte-exactly") {
  for (const char* text :
       {kUnbalanced, kProfile,
        R"({"version": "1", "kind": "p1_transition", "payload": {"rank": 2,
            "matrix": [
              [[{"t": 1, "re": "1"}], [{"t": 0, "re": "1/2", "im": "-2"}]],
              [[], [{"t": -1, "re": "1"}]]
            ]}})"}) {
    Document first = parse_document(text);
    std::string canon = serialize_document(first);
    Document second = parse_document(canon);
    CHECK(serialize_document(second) == canon);
    CHECK(first.kind == second.kind);
    if (first.transition) CHECK(*first.transition == *second.transition);
    if (first.bundle) CHECK(*first.bundle == *second.bundle);
    if (first.profile) CHECK(*first.profile == *second.profile);
  }
}

TEST_CASE("runs are deterministic byte for byte") {
  std::string in = write_doc("cli_det.json", kUnbalanced);
  CliRun a = run({"optimize", "--input", in, "--schedule", "best"});
  CliRun b = run({"optimize", "--input", in, "--schedule", "best"});
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
  CliRun v1 = run({"verify", "involution", "--count", "5", "--seed", "3"});
  CliRun v2 = run({"verify", "involution", "--count", "5", "--seed", "3"});
  CHECK(v1.out == v2.out);
}
