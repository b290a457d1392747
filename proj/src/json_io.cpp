// SPDX-License-Identifier: Apache-2.0
#include "treeshift/json_io.hpp"

#include <sstream>

namespace treeshift {

namespace {

[[noreturn]] void schema_error(const std::string& what) { raise(ErrorCode::ParseError, what); }

const json& require_field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) schema_error(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int require_int(const json& j, const char* name) {
  const json& v = require_field(j, name);
  if (!v.is_number_integer()) schema_error(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

json parse_json_text(const std::string& text, const std::string& source_name) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports a byte offset; translate it to line/column context.
    std::size_t line = 1, col = 1;
    const std::size_t stop = e.byte == 0 ? 0 : std::min(text.size(), e.byte - 1);
    for (std::size_t t = 0; t < stop; ++t) {
      if (text[t] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream os;
    os << source_name << ": parse error at line " << line << ", column " << col << ": " << e.what();
    raise(ErrorCode::ParseError, os.str());
  }
}

json system_to_json(const TransitionSystem& sys) {
  json j;
  if (!sys.name.empty()) j["name"] = sys.name;
  j["k"] = sys.k;
  j["d"] = sys.d;
  json mats = json::array();
  for (const auto& m : sys.matrices) mats.push_back(m.to_rows());
  j["matrices"] = mats;
  return j;
}

TransitionSystem system_from_json(const json& j) {
  const int k = require_int(j, "k");
  const int d = require_int(j, "d");
  const json& mats = require_field(j, "matrices");
  if (!mats.is_array()) schema_error("field \"matrices\" must be an array");
  std::vector<std::vector<std::vector<int>>> raw;
  for (const json& m : mats) {
    if (!m.is_array()) schema_error("each matrix must be an array of rows");
    std::vector<std::vector<int>> rows;
    for (const json& r : m) {
      if (!r.is_array()) schema_error("each matrix row must be an array");
      std::vector<int> row;
      for (const json& v : r) {
        if (!v.is_number_integer()) schema_error("matrix entries must be integers");
        row.push_back(v.get<int>());
      }
      rows.push_back(std::move(row));
    }
    raw.push_back(std::move(rows));
  }
  std::string name;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) schema_error("field \"name\" must be a string");
    name = j.at("name").get<std::string>();
  }
  ValidatedSystem v = validate_system(raw, name);
  if (v.system.k != k) schema_error("stated k does not match the number of matrices");
  if (v.system.d != d) schema_error("stated d does not match the matrix dimension");
  return std::move(v.system);
}

json block_to_json(const Block& b) {
  return json{{"k", b.k}, {"d", b.d}, {"height", b.height}, {"labels", b.labels}};
}

Block block_from_json(const json& j) {
  const int k = require_int(j, "k");
  const int d = require_int(j, "d");
  const int height = require_int(j, "height");
  const json& labels = require_field(j, "labels");
  if (!labels.is_array()) schema_error("field \"labels\" must be an array");
  std::vector<int> v;
  for (const json& x : labels) {
    if (!x.is_number_integer()) schema_error("labels must be integers");
    v.push_back(x.get<int>());
  }
  return make_block(k, d, height, std::move(v));
}

json forbidden_to_json(const ForbiddenSet& f) {
  json blocks = json::array();
  for (const Block& b : f.blocks) blocks.push_back(b.labels);
  return json{{"k", f.k}, {"d", f.d}, {"s", f.s}, {"blocks", blocks}};
}

ForbiddenSet forbidden_from_json(const json& j) {
  ForbiddenSet f;
  f.k = require_int(j, "k");
  f.d = require_int(j, "d");
  f.s = require_int(j, "s");
  const json& blocks = require_field(j, "blocks");
  if (!blocks.is_array()) schema_error("field \"blocks\" must be an array");
  for (const json& b : blocks) {
    if (!b.is_array()) schema_error("each forbidden block must be a label array");
    std::vector<int> labels;
    for (const json& x : b) {
      if (!x.is_number_integer()) schema_error("labels must be integers");
      labels.push_back(x.get<int>());
    }
    f.blocks.push_back(make_block(f.k, f.d, f.s, std::move(labels)));
  }
  return f;
}

json certificate_to_json(const PrefixSet& p, const CpsTarget& target) {
  json j;
  if (target.all)
    j["target"] = "all";
  else
    j["target"] = json::array({target.i, target.j});
  json words = json::array();
  for (const Word& w : p.words) words.push_back(w);
  j["words"] = words;
  return j;
}

json validation_to_json(const ValidationReport& r) {
  json zr = json::array();
  for (const auto& [m, i] : r.zero_rows) zr.push_back(json::array({m, i}));
  json zc = json::array();
  for (const auto& [m, j] : r.zero_cols) zc.push_back(json::array({m, j}));
  return json{{"admissible", r.admissible},
              {"zero_rows", zr},
              {"zero_cols", zc},
              {"messages", r.messages}};
}

json bounds_to_json(const BoundsReport& b) {
  return json{{"ps_upper_norm", b.ps_upper_norm},
              {"ps_upper_trivial", b.ps_upper_trivial},
              {"ps_upper", b.ps_upper},
              {"bc_upper", b.bc_upper},
              {"zero_by_row_sums", b.zero_by_row_sums}};
}

json estimate_to_json(const EntropyEstimate& e) {
  return json{{"value", e.value},
              {"n_used", e.n_used},
              {"last_delta", e.last_delta},
              {"converged", e.converged},
              {"method", e.method}};
}

}  // namespace treeshift
