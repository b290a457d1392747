// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Everything goes through the C API in
// treeshift/treeshift.h; this translation unit only parses arguments, loads
// files and renders the returned JSON documents as json, csv or markdown.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "treeshift/treeshift.h"

namespace {

using nlohmann::json;

struct CliError {
  int code;
  std::string message;
};

void check(ts_status status, const std::string& context) {
  if (status != TS_OK) throw CliError{static_cast<int>(status), context + ": " + ts_last_error()};
}

struct SystemHandle {
  ts_system* ptr = nullptr;
  SystemHandle() = default;
  explicit SystemHandle(ts_system* p) : ptr(p) {}
  SystemHandle(SystemHandle&& other) noexcept : ptr(other.ptr) { other.ptr = nullptr; }
  SystemHandle& operator=(SystemHandle&& other) noexcept {
    std::swap(ptr, other.ptr);
    return *this;
  }
  SystemHandle(const SystemHandle&) = delete;
  SystemHandle& operator=(const SystemHandle&) = delete;
  ~SystemHandle() { ts_system_free(ptr); }
};

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { ts_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{TS_ERROR_INVALID_ARGUMENT, "cannot open file: " + path};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Options {
  std::string format = "json";
  int n_max = 40;
  double tol = 1e-10;
  int exact_limit = 12;
  std::uint64_t oracle_budget = std::uint64_t{1} << 25;
  bool certificates = false;
};

std::vector<SystemHandle> load_systems(bool catalog, const std::vector<std::string>& files) {
  std::vector<SystemHandle> out;
  if (catalog) {
    for (int i = 1; i <= ts_catalog_size(); ++i) {
      ts_system* sys = nullptr;
      check(ts_catalog_system(i, &sys), "catalog");
      out.emplace_back(sys);
    }
  }
  for (const std::string& path : files) {
    ts_system* sys = nullptr;
    check(ts_system_from_json(read_file(path).c_str(), &sys), path);
    out.emplace_back(sys);
  }
  if (out.empty())
    throw CliError{TS_ERROR_INVALID_ARGUMENT, "no input systems; pass a file or --catalog"};
  return out;
}

// ---- rendering ------------------------------------------------------------

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

void flatten(const json& j, const std::string& prefix, std::map<std::string, std::string>& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object())
      flatten(*it, key, out);
    else if (!it->is_array())
      out[key] = scalar_text(*it);
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::vector<std::string> collect_columns(const json& rows) {
  std::set<std::string> keys;
  for (const json& row : rows) {
    std::map<std::string, std::string> flat;
    flatten(row, "", flat);
    for (const auto& [k, v] : flat) keys.insert(k);
  }
  return {keys.begin(), keys.end()};
}

std::string render_rows_csv(const json& rows) {
  const auto columns = collect_columns(rows);
  std::ostringstream os;
  for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << csv_escape(columns[c]);
  os << '\n';
  for (const json& row : rows) {
    std::map<std::string, std::string> flat;
    flatten(row, "", flat);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      os << (c ? "," : "");
      auto it = flat.find(columns[c]);
      if (it != flat.end()) os << csv_escape(it->second);
    }
    os << '\n';
  }
  return os.str();
}

std::string render_rows_md(const json& rows) {
  const auto columns = collect_columns(rows);
  std::ostringstream os;
  os << '|';
  for (const auto& c : columns) os << ' ' << c << " |";
  os << "\n|";
  for (std::size_t c = 0; c < columns.size(); ++c) os << " --- |";
  os << '\n';
  for (const json& row : rows) {
    std::map<std::string, std::string> flat;
    flatten(row, "", flat);
    os << '|';
    for (const auto& c : columns) {
      auto it = flat.find(c);
      os << ' ' << (it != flat.end() ? it->second : "") << " |";
    }
    os << '\n';
  }
  return os.str();
}

std::string render_scalars_csv(const json& doc) {
  std::map<std::string, std::string> flat;
  flatten(doc, "", flat);
  std::ostringstream os;
  os << "field,value\n";
  for (const auto& [k, v] : flat) os << csv_escape(k) << ',' << csv_escape(v) << '\n';
  return os.str();
}

std::string render_scalars_md(const json& doc) {
  std::map<std::string, std::string> flat;
  flatten(doc, "", flat);
  std::ostringstream os;
  os << "| field | value |\n| --- | --- |\n";
  for (const auto& [k, v] : flat) os << "| " << k << " | " << v << " |\n";
  return os.str();
}

void print_systems_doc(const json& rows, const Options& opt) {
  if (opt.format == "json") {
    std::cout << json{{"systems", rows}}.dump(2) << '\n';
  } else if (opt.format == "csv") {
    std::cout << render_rows_csv(rows);
  } else {
    std::cout << render_rows_md(rows);
  }
}

void print_plain_doc(const json& doc, const Options& opt) {
  if (opt.format == "json")
    std::cout << doc.dump(2) << '\n';
  else if (opt.format == "csv")
    std::cout << render_scalars_csv(doc);
  else
    std::cout << render_scalars_md(doc);
}

void print_table_doc(const json& doc, const Options& opt) {
  if (opt.format == "json") {
    std::cout << doc.dump(2) << '\n';
  } else if (opt.format == "csv") {
    std::cout << render_rows_csv(doc.at("classification")) << '\n'
              << render_rows_csv(doc.at("entropy"));
  } else {
    std::cout << "## Classification\n\n"
              << render_rows_md(doc.at("classification")) << "\n## Entropy\n\n"
              << render_rows_md(doc.at("entropy"));
  }
}

json parse_row(const OwnedString& s) { return json::parse(s.str()); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Markov tree-shift analysis: complexity, entropy, topology, recoding"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "md"}))
      ->capture_default_str();
  app.add_option("--n-max", opt.n_max, "Iteration cap for entropy estimates")->capture_default_str();
  app.add_option("--tol", opt.tol, "Convergence tolerance for entropy estimates")
      ->capture_default_str();
  app.add_option("--exact-limit", opt.exact_limit, "Largest n for exact complexity")
      ->capture_default_str();
  app.add_option("--oracle-budget", opt.oracle_budget, "Candidate labeling budget for enumerations")
      ->capture_default_str();

  bool catalog = false;
  std::vector<std::string> files;
  int n = 0;
  bool exact_mode = false, log_mode = false;
  std::string forbidden_file;

  CLI::App* classify = app.add_subcommand("classify", "Irreducibility, mixing and chaos verdicts");
  classify->add_flag("--catalog", catalog, "Run on the 28 binary catalog systems");
  classify->add_option("files", files, "System JSON files");
  classify->add_flag("--certificates", opt.certificates, "Include CPS certificates");

  CLI::App* entropy = app.add_subcommand("entropy", "Entropy estimates and bounds");
  entropy->add_flag("--catalog", catalog, "Run on the 28 binary catalog systems");
  entropy->add_option("files", files, "System JSON files");

  CLI::App* complexity = app.add_subcommand("complexity", "Block counts p(n)");
  complexity->add_flag("--catalog", catalog, "Run on the 28 binary catalog systems");
  complexity->add_option("files", files, "System JSON files");
  complexity->add_option("--n", n, "Block height")->required();
  CLI::Option* exact_flag = complexity->add_flag("--exact", exact_mode, "Exact integer count");
  complexity->add_flag("--log", log_mode, "Log-domain count")->excludes(exact_flag);

  CLI::App* oracle = app.add_subcommand("oracle", "Cross-check p(n) against brute-force enumeration");
  oracle->add_flag("--catalog", catalog, "Run on the 28 binary catalog systems");
  oracle->add_option("files", files, "System JSON files");
  oracle->add_option("--n", n, "Block height")->required();

  CLI::App* recode = app.add_subcommand("recode", "Higher-block Markov presentation of a forbidden set");
  recode->add_option("file", forbidden_file, "Forbidden-set JSON file")->required();

  CLI::App* table = app.add_subcommand("table", "Catalog classification grid and entropy reference table");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) {
      json rows = json::array();
      for (const SystemHandle& sys : load_systems(catalog, files)) {
        OwnedString row;
        check(ts_classify_json(sys.ptr, opt.certificates ? 1 : 0, &row.ptr), "classify");
        rows.push_back(parse_row(row));
      }
      print_systems_doc(rows, opt);
    } else if (entropy->parsed()) {
      json rows = json::array();
      for (const SystemHandle& sys : load_systems(catalog, files)) {
        OwnedString row;
        check(ts_entropy_json(sys.ptr, opt.n_max, opt.tol, &row.ptr), "entropy");
        rows.push_back(parse_row(row));
      }
      print_systems_doc(rows, opt);
    } else if (complexity->parsed()) {
      const bool use_exact = !log_mode;  // exact unless --log is given
      json rows = json::array();
      for (const SystemHandle& sys : load_systems(catalog, files)) {
        json row;
        OwnedString name;
        check(ts_system_to_json(sys.ptr, &name.ptr), "complexity");
        row["name"] = parse_row(name).value("name", "");
        row["n"] = n;
        if (use_exact) {
          OwnedString p;
          check(ts_complexity_exact(sys.ptr, n, opt.exact_limit, &p.ptr), "complexity");
          row["mode"] = "exact";
          row["p"] = p.str();
        } else {
          double log_p = 0.0;
          check(ts_complexity_log(sys.ptr, n, &log_p), "complexity");
          row["mode"] = "log";
          row["log_p"] = log_p;
        }
        rows.push_back(row);
      }
      print_systems_doc(rows, opt);
    } else if (oracle->parsed()) {
      json rows = json::array();
      for (const SystemHandle& sys : load_systems(catalog, files)) {
        json row;
        OwnedString name;
        check(ts_system_to_json(sys.ptr, &name.ptr), "oracle");
        row["name"] = parse_row(name).value("name", "");
        row["n"] = n;
        OwnedString p;
        check(ts_complexity_exact(sys.ptr, n, opt.exact_limit, &p.ptr), "oracle");
        std::uint64_t counted = 0;
        check(ts_oracle_count(sys.ptr, n, opt.oracle_budget, &counted), "oracle");
        row["exact"] = p.str();
        row["oracle"] = counted;
        row["match"] = p.str() == std::to_string(counted);
        rows.push_back(row);
      }
      print_systems_doc(rows, opt);
    } else if (recode->parsed()) {
      OwnedString doc;
      check(ts_recode_json(read_file(forbidden_file).c_str(), 3, opt.oracle_budget, opt.exact_limit,
                           &doc.ptr),
            forbidden_file);
      print_plain_doc(parse_row(doc), opt);
    } else if (table->parsed()) {
      OwnedString doc;
      check(ts_table_json(opt.n_max, opt.tol, &doc.ptr), "table");
      print_table_doc(parse_row(doc), opt);
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code == 0 ? 1 : e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
