#include "heckelab/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "heckelab/document.hpp"
#include "heckelab/errors.hpp"
#include "heckelab/verify.hpp"

namespace heckelab {

namespace {

std::string read_input(const std::string& input_path) {
  if (input_path.empty()) {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream file(input_path, std::ios::binary);
  if (!file) throw SchemaError("cannot open input file: " + input_path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void write_output(const std::string& output_path, std::ostream& out,
                  const std::string& text) {
  if (output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output_path, std::ios::binary);
  if (!file) throw SchemaError("cannot open output file: " + output_path);
  file << text;
}

Document load_document(const std::string& input_path) {
  return parse_document(read_input(input_path));
}

[[noreturn]] void wrong_kind(const char* command, const char* expected) {
  throw SchemaError(std::string(command) + " expects a " + expected +
                    " document");
}

// Number of leading exponent groups covered by the first sub_rank vectors of
// a splitting; recovers the block count k behind a recorded step.
int top_blocks_of_step(const SplittingType& state, int sub_rank) {
  int covered = 0;
  int groups = 0;
  for (const SplittingBlock& b : hn_blocks(state)) {
    covered += b.rank;
    ++groups;
    if (covered >= sub_rank) break;
  }
  return groups;
}

std::string splitting_label(const SplittingType& s) {
  std::string label = "(";
  for (size_t i = 0; i < s.exponents().size(); ++i) {
    if (i) label += ", ";
    label += std::to_string(s.exponents()[i]);
  }
  return label + ")";
}

std::string trace_to_dot(const HeckeTrace& trace) {
  std::ostringstream dot;
  dot << "digraph hecke_trace {\n";
  dot << "  rankdir=LR;\n";
  for (size_t i = 0; i < trace.states.size(); ++i) {
    dot << "  s" << i << " [label=\"" << splitting_label(trace.states[i])
        << "\"];\n";
  }
  for (size_t i = 0; i < trace.steps.size(); ++i) {
    int k = top_blocks_of_step(trace.states[i], trace.steps[i].sub_rank);
    dot << "  s" << i << " -> s" << i + 1 << " [label=\"Hecke k=" << k
        << "\"];\n";
  }
  dot << "}\n";
  return dot.str();
}

int cmd_split(const std::string& input_path, const std::string& output_path,
              bool verify, std::ostream& out) {
  Document doc = load_document(input_path);
  if (doc.kind == DocumentKind::hn_profile) {
    wrong_kind("split", "p1_transition or blowup_bundle");
  }
  P1Transition t = doc.kind == DocumentKind::p1_transition
                       ? *doc.transition
                       : doc.bundle->restrict_to_D();
  SplittingType splitting = birkhoff(t).diagonal;
  bool verified = false;
  if (verify) {
    verified = splitting_from_h0(t) == splitting;
  }
  Json report = Json::object();
  report["splitting"] = splitting_to_json(splitting);
  report["phi"] = rational_to_json(Rational(splitting.phi()));
  Json blocks = Json::array();
  for (const SplittingBlock& b : hn_blocks(splitting)) {
    Json block = Json::object();
    block["rank"] = b.rank;
    block["slope"] = rational_to_json(Rational(b.slope));
    blocks.push_back(std::move(block));
  }
  report["hn_blocks"] = std::move(blocks);
  report["verified"] = verified;
  write_output(output_path, out, dump_report(report));
  return verify && !verified ? 5 : 0;
}

int cmd_optimize(const std::string& input_path, const std::string& output_path,
                 const std::string& dot_path, int jet_override,
                 const std::string& schedule_name, std::ostream& out) {
  Document doc = load_document(input_path);
  if (doc.kind != DocumentKind::blowup_bundle) {
    wrong_kind("optimize", "blowup_bundle");
  }
  BlowupBundle bundle = *doc.bundle;
  if (jet_override >= 0) {
    bundle = BlowupBundle(bundle.transition().with_jet_order(jet_override));
  }
  Schedule schedule = Schedule::top_block;
  if (schedule_name == "best") {
    schedule = Schedule::best_bound;
  } else if (schedule_name != "top") {
    throw SchemaError("unknown schedule \"" + schedule_name + "\"");
  }
  OptimizeResult res = optimize(bundle, schedule);

  Json report = Json::object();
  report["final_splitting"] = splitting_to_json(res.trace.states.back());
  Json phi_trace = Json::array();
  Json states = Json::array();
  for (const SplittingType& s : res.trace.states) {
    phi_trace.push_back(s.phi());
    states.push_back(splitting_to_json(s));
  }
  report["phi_trace"] = std::move(phi_trace);
  report["splitting_trace"] = std::move(states);
  report["steps"] = res.trace.steps.size();
  Json steps = Json::array();
  for (size_t i = 0; i < res.trace.steps.size(); ++i) {
    const HeckeStep& s = res.trace.steps[i];
    Json step = Json::object();
    step["top_blocks"] = top_blocks_of_step(res.trace.states[i], s.sub_rank);
    step["sub_rank"] = s.sub_rank;
    step["phi_before"] = s.phi_before;
    step["phi_after"] = s.phi_after;
    step["jet_remaining"] = s.jet_remaining;
    steps.push_back(std::move(step));
  }
  report["trace"] = std::move(steps);
  report["reached_optimal"] = res.reached_optimal;
  if (!res.reached_optimal) report["error"] = "insufficient jet order";
  write_output(output_path, out, dump_report(report));
  if (!dot_path.empty()) {
    std::ofstream dot(dot_path, std::ios::binary);
    if (!dot) throw SchemaError("cannot open output file: " + dot_path);
    dot << trace_to_dot(res.trace);
  }
  return res.reached_optimal ? 0 : 4;
}

HNProfile profile_of(const Document& doc, const char* command) {
  if (doc.kind != DocumentKind::hn_profile) wrong_kind(command, "hn_profile");
  return *doc.profile;
}

int cmd_profile(const std::string& operation, const std::string& input_path,
                const std::string& input2_path, int k,
                const std::string& output_path, std::ostream& out) {
  HNProfile profile = profile_of(load_document(input_path), "profile");
  Json report = Json::object();
  report["operation"] = operation;
  report["input"] = profile_blocks_to_json(profile);

  if (operation == "phi") {
    report["phi"] = rational_to_json(phi(profile));
  } else if (operation == "hecke" || operation == "bound") {
    if (k < 1) throw SchemaError("--k is required and must be positive");
    report["k"] = k;
    if (operation == "hecke") {
      HNProfile result = hecke_profile(profile, k);
      report["result"] = profile_blocks_to_json(result);
      report["phi"] = rational_to_json(phi(result));
    } else {
      report["bound"] = rational_to_json(hecke_bound(profile, k));
    }
  } else if (operation == "partial-hn") {
    PartialHN p = partial_hn(profile);
    report["indices"] = p.indices;
    report["twists"] = p.twists;
  } else if (operation == "gr-tilde") {
    HNProfile result = gr_tilde(profile);
    report["result"] = profile_blocks_to_json(result);
    report["phi"] = rational_to_json(phi(result));
  } else if (operation == "normalize") {
    report["result"] = profile_blocks_to_json(normalize_twist(profile));
  } else if (operation == "equivalent") {
    if (input2_path.empty()) {
      throw SchemaError("equivalent needs --input2 with the second profile");
    }
    HNProfile other = profile_of(load_document(input2_path), "profile");
    report["input2"] = profile_blocks_to_json(other);
    report["equivalent"] = equivalent(profile, other);
  } else {
    throw SchemaError("unknown profile operation \"" + operation + "\"");
  }
  write_output(output_path, out, dump_report(report));
  return 0;
}

int cmd_verify(const std::string& suite, int count, std::uint64_t seed,
               const std::string& output_path, std::ostream& out) {
  if (count < 0) throw SchemaError("--count must be nonnegative");
  SuiteResult res;
  if (suite == "involution") {
    res = run_involution_suite(count, seed);
  } else if (suite == "descent") {
    res = run_descent_suite(count, seed);
  } else if (suite == "oracle") {
    res = run_oracle_suite(count, seed);
  } else if (suite == "discreteness") {
    res = run_discreteness_suite(count, seed);
  } else {
    throw SchemaError("unknown suite \"" + suite + "\"");
  }
  Json report = Json::object();
  report["suite"] = res.suite;
  report["seed"] = res.seed;
  report["requested"] = res.requested;
  report["checked"] = res.checked;
  Json failures = Json::array();
  for (const VerifyFailure& f : res.failures) {
    Json item = Json::object();
    item["index"] = f.index;
    item["detail"] = f.detail;
    failures.push_back(std::move(item));
  }
  report["failures"] = std::move(failures);
  report["passed"] = res.passed();
  write_output(output_path, out, dump_report(report));
  return res.passed() ? 0 : 5;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact Hecke-transform workbench for bundles near an "
               "exceptional line"};
  app.require_subcommand(1);

  std::string input_path, input2_path, output_path, dot_path;
  std::string profile_op, suite, schedule = "top";
  bool split_verify = false;
  int k = 0;
  int jet_override = -1;
  int count = 100;
  std::uint64_t seed = 1;

  CLI::App* split = app.add_subcommand(
      "split", "Splitting type of a transition on the exceptional line");
  split->add_option("--input", input_path, "Input document (default stdin)");
  split->add_option("--output", output_path, "Report file (default stdout)");
  split->add_flag("--verify", split_verify,
                  "Cross-check against the section-count oracle");

  CLI::App* optimize = app.add_subcommand(
      "optimize", "Hecke transforms until the restriction is optimal");
  optimize->add_option("--input", input_path, "Input document (default stdin)");
  optimize->add_option("--output", output_path, "Report file (default stdout)");
  optimize->add_option("--jet-order", jet_override,
                       "Override the working jet order")
      ->check(CLI::Range(0, 1000000));
  optimize->add_option("--schedule", schedule,
                       "Block schedule: top (default) or best");
  optimize->add_option("--emit-dot", dot_path, "Write the trace as a DOT graph");

  CLI::App* profile =
      app.add_subcommand("profile", "Slope-profile operations");
  profile
      ->add_option("operation", profile_op,
                   "phi | hecke | bound | partial-hn | gr-tilde | normalize | "
                   "equivalent")
      ->required();
  profile->add_option("--input", input_path, "Input document (default stdin)");
  profile->add_option("--input2", input2_path,
                      "Second profile (for equivalent)");
  profile->add_option("--output", output_path, "Report file (default stdout)");
  profile->add_option("--k", k, "Number of top blocks to transform along");

  CLI::App* verify =
      app.add_subcommand("verify", "Seeded randomized property suites");
  verify
      ->add_option("suite", suite,
                   "involution | descent | oracle | discreteness")
      ->required();
  verify->add_option("--count", count, "Number of random cases")
      ->check(CLI::Range(0, 1000000000));
  verify->add_option("--seed", seed, "Generator seed");
  verify->add_option("--output", output_path, "Report file (default stdout)");

  try {
    app.parse(argc, argv);
    if (split->parsed()) {
      return cmd_split(input_path, output_path, split_verify, out);
    }
    if (optimize->parsed()) {
      return cmd_optimize(input_path, output_path, dot_path, jet_override,
                          schedule, out);
    }
    if (profile->parsed()) {
      return cmd_profile(profile_op, input_path, input2_path, k, output_path,
                         out);
    }
    return cmd_verify(suite, count, seed, output_path, out);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << app.version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidBundleError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const PrecisionError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace heckelab
