#include "heckelab/document.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "heckelab/errors.hpp"

namespace heckelab {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw SchemaError(path + ": " + what);
}

void check_fields(const Json& v, const std::string& path,
                  std::initializer_list<const char*> allowed) {
  if (!v.is_object()) fail(path, "expected an object");
  for (const auto& item : v.items()) {
    if (std::none_of(allowed.begin(), allowed.end(),
                     [&](const char* a) { return item.key() == a; })) {
      fail(path, "unknown field \"" + item.key() + "\"");
    }
  }
}

const Json& require_field(const Json& v, const std::string& path,
                          const char* name) {
  auto it = v.find(name);
  if (it == v.end()) fail(path, std::string("missing field \"") + name + "\"");
  return *it;
}

long get_integer(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<long>();
}

std::string get_string(const Json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

Rational get_rational(const Json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a rational as a string");
  try {
    return rational_from_string(v.get<std::string>());
  } catch (const SchemaError& e) {
    fail(path, e.what());
  }
}

struct RawTerm {
  long t_exp = 0;
  int x_exp = 0;
  Scalar coeff;
  std::string path;
};

std::vector<RawTerm> parse_poly(const Json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of terms");
  std::vector<RawTerm> terms;
  for (size_t k = 0; k < v.size(); ++k) {
    std::string tp = path + "[" + std::to_string(k) + "]";
    const Json& term = v[k];
    check_fields(term, tp, {"t", "x", "re", "im"});
    RawTerm raw;
    raw.path = tp;
    raw.t_exp = get_integer(require_field(term, tp, "t"), tp + ".t");
    if (term.contains("x")) {
      long x = get_integer(term["x"], tp + ".x");
      if (x < 0) fail(tp + ".x", "x exponent must be nonnegative");
      if (x > 1000000) fail(tp + ".x", "x exponent out of supported range");
      raw.x_exp = static_cast<int>(x);
    }
    Rational re = get_rational(require_field(term, tp, "re"), tp + ".re");
    Rational im =
        term.contains("im") ? get_rational(term["im"], tp + ".im") : Rational(0);
    raw.coeff = Scalar(re, im);
    terms.push_back(std::move(raw));
  }
  return terms;
}

// Row-major rank x rank grid of polynomials, still as raw term lists so the
// jet order can be settled before any matrix is built.
std::vector<std::vector<RawTerm>> parse_matrix(const Json& v,
                                               const std::string& path,
                                               int rank) {
  if (!v.is_array() || static_cast<int>(v.size()) != rank) {
    fail(path, "expected " + std::to_string(rank) + " rows");
  }
  std::vector<std::vector<RawTerm>> grid;
  for (int i = 0; i < rank; ++i) {
    std::string rp = path + "[" + std::to_string(i) + "]";
    const Json& row = v[i];
    if (!row.is_array() || static_cast<int>(row.size()) != rank) {
      fail(rp, "expected " + std::to_string(rank) + " entries");
    }
    for (int j = 0; j < rank; ++j) {
      grid.push_back(parse_poly(row[j], rp + "[" + std::to_string(j) + "]"));
    }
  }
  return grid;
}

int parse_rank(const Json& payload, const std::string& path) {
  long rank = get_integer(require_field(payload, path, "rank"), path + ".rank");
  if (rank < 1 || rank > 12) fail(path + ".rank", "rank out of supported range");
  return static_cast<int>(rank);
}

JetLaurentMatrix build_matrix(const std::vector<std::vector<RawTerm>>& grid,
                              int rank, int jet_order) {
  JetLaurentMatrix m(rank, jet_order);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      for (const RawTerm& raw : grid[static_cast<size_t>(i) * rank + j]) {
        if (raw.x_exp > jet_order) {
          fail(raw.path + ".x", "x exponent exceeds the jet order");
        }
        m.at(i, j).add_term(raw.t_exp, raw.x_exp, raw.coeff);
      }
    }
  }
  return m;
}

Document parse_p1(const Json& payload, const std::string& path) {
  check_fields(payload, path, {"rank", "matrix"});
  int rank = parse_rank(payload, path);
  auto grid =
      parse_matrix(require_field(payload, path, "matrix"), path + ".matrix", rank);
  for (const auto& poly : grid) {
    for (const RawTerm& raw : poly) {
      if (raw.x_exp != 0) {
        fail(raw.path + ".x", "terms on the exceptional line are x-free");
      }
    }
  }
  Document doc;
  doc.kind = DocumentKind::p1_transition;
  doc.transition = P1Transition(build_matrix(grid, rank, 0));
  return doc;
}

Document parse_blowup(const Json& payload, const std::string& path) {
  check_fields(payload, path, {"rank", "jet_order", "matrix"});
  int rank = parse_rank(payload, path);
  auto grid =
      parse_matrix(require_field(payload, path, "matrix"), path + ".matrix", rank);
  int jet;
  if (payload.contains("jet_order")) {
    long n = get_integer(payload["jet_order"], path + ".jet_order");
    if (n < 0 || n > 1000000) {
      fail(path + ".jet_order", "jet order out of supported range");
    }
    jet = static_cast<int>(n);
  } else {
    // Default precision: enough for a full optimizer run on the restriction,
    // and never discarding jets present in the input.
    int deepest = 0;
    JetLaurentMatrix base(rank, 0);
    for (size_t cell = 0; cell < grid.size(); ++cell) {
      for (const RawTerm& raw : grid[cell]) {
        deepest = std::max(deepest, raw.x_exp);
        if (raw.x_exp == 0) {
          base.at(static_cast<int>(cell) / rank, static_cast<int>(cell) % rank)
              .add_term(raw.t_exp, 0, raw.coeff);
        }
      }
    }
    long phi0 = birkhoff(P1Transition(base)).diagonal.phi();
    jet = std::max(static_cast<int>(phi0) + 2, deepest);
  }
  Document doc;
  doc.kind = DocumentKind::blowup_bundle;
  doc.bundle = BlowupBundle(build_matrix(grid, rank, jet));
  return doc;
}

Document parse_profile(const Json& payload, const std::string& path) {
  check_fields(payload, path, {"blocks", "base_dimension"});
  const Json& blocks_json = require_field(payload, path, "blocks");
  if (!blocks_json.is_array()) fail(path + ".blocks", "expected an array");
  std::vector<HNBlock> blocks;
  for (size_t i = 0; i < blocks_json.size(); ++i) {
    std::string bp = path + ".blocks[" + std::to_string(i) + "]";
    const Json& b = blocks_json[i];
    check_fields(b, bp, {"rank", "slope", "label", "labels"});
    HNBlock block;
    long rank = get_integer(require_field(b, bp, "rank"), bp + ".rank");
    if (rank < 1 || rank > 1000000) fail(bp + ".rank", "rank out of supported range");
    block.rank = static_cast<int>(rank);
    block.slope = get_rational(require_field(b, bp, "slope"), bp + ".slope");
    if (b.contains("label") && b.contains("labels")) {
      fail(bp, "give either \"label\" or \"labels\", not both");
    }
    if (b.contains("label")) {
      block.labels.push_back(get_string(b["label"], bp + ".label"));
    } else if (b.contains("labels")) {
      const Json& ls = b["labels"];
      if (!ls.is_array()) fail(bp + ".labels", "expected an array of strings");
      for (size_t k = 0; k < ls.size(); ++k) {
        block.labels.push_back(
            get_string(ls[k], bp + ".labels[" + std::to_string(k) + "]"));
      }
    }
    blocks.push_back(std::move(block));
  }
  int base_dim = 2;
  if (payload.contains("base_dimension")) {
    long n = get_integer(payload["base_dimension"], path + ".base_dimension");
    if (n < 2 || n > 1000000) {
      fail(path + ".base_dimension", "base dimension out of supported range");
    }
    base_dim = static_cast<int>(n);
  }
  Document doc;
  doc.kind = DocumentKind::hn_profile;
  doc.profile = HNProfile(std::move(blocks), base_dim);
  return doc;
}

}  // namespace

Document parse_document(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  check_fields(root, "$", {"version", "kind", "payload"});
  std::string version =
      get_string(require_field(root, "$", "version"), "$.version");
  if (version != "1") fail("$.version", "unsupported format version");
  std::string kind = get_string(require_field(root, "$", "kind"), "$.kind");
  const Json& payload = require_field(root, "$", "payload");
  if (!payload.is_object()) fail("$.payload", "expected an object");
  if (kind == "p1_transition") return parse_p1(payload, "$.payload");
  if (kind == "blowup_bundle") return parse_blowup(payload, "$.payload");
  if (kind == "hn_profile") return parse_profile(payload, "$.payload");
  fail("$.kind", "unknown document kind \"" + kind + "\"");
}

Json rational_to_json(const Rational& value) {
  return Json(rational_to_string(value));
}

Json poly_to_json(const JetLaurentPoly& poly) {
  Json out = Json::array();
  for (const auto& [mono, c] : poly.terms()) {
    Json term = Json::object();
    term["t"] = mono.t_exp;
    term["x"] = mono.x_exp;
    term["re"] = rational_to_string(c.re);
    term["im"] = rational_to_string(c.im);
    out.push_back(std::move(term));
  }
  return out;
}

Json matrix_to_json(const JetLaurentMatrix& matrix) {
  Json out = Json::array();
  for (int i = 0; i < matrix.rank(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < matrix.rank(); ++j) {
      row.push_back(poly_to_json(matrix.at(i, j)));
    }
    out.push_back(std::move(row));
  }
  return out;
}

Json splitting_to_json(const SplittingType& splitting) {
  Json out = Json::array();
  for (long a : splitting.exponents()) out.push_back(a);
  return out;
}

Json profile_blocks_to_json(const HNProfile& profile) {
  Json out = Json::array();
  for (const HNBlock& b : profile.blocks()) {
    Json block = Json::object();
    block["rank"] = b.rank;
    block["slope"] = rational_to_string(b.slope);
    if (!b.labels.empty()) block["labels"] = b.labels;
    out.push_back(std::move(block));
  }
  return out;
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

std::string serialize_document(const Document& document) {
  Json root = Json::object();
  root["version"] = "1";
  Json payload = Json::object();
  switch (document.kind) {
    case DocumentKind::p1_transition:
      root["kind"] = "p1_transition";
      payload["rank"] = document.transition->rank();
      payload["matrix"] = matrix_to_json(document.transition->matrix());
      break;
    case DocumentKind::blowup_bundle:
      root["kind"] = "blowup_bundle";
      payload["rank"] = document.bundle->rank();
      payload["jet_order"] = document.bundle->jet_order();
      payload["matrix"] = matrix_to_json(document.bundle->transition());
      break;
    case DocumentKind::hn_profile:
      root["kind"] = "hn_profile";
      payload["base_dimension"] = document.profile->base_dimension();
      payload["blocks"] = profile_blocks_to_json(*document.profile);
      break;
  }
  root["payload"] = std::move(payload);
  return dump_report(root);
}

}  // namespace heckelab
