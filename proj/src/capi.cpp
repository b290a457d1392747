// SPDX-License-Identifier: Apache-2.0
#include "treeshift/treeshift.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "treeshift/catalog.hpp"
#include "treeshift/complexity.hpp"
#include "treeshift/documents.hpp"
#include "treeshift/json_io.hpp"

struct ts_system {
  treeshift::TransitionSystem sys;
};

namespace {

thread_local std::string g_last_error;

ts_status to_status(treeshift::ErrorCode code) {
  switch (code) {
    case treeshift::ErrorCode::InvalidArgument: return TS_ERROR_INVALID_ARGUMENT;
    case treeshift::ErrorCode::ParseError: return TS_ERROR_PARSE;
    case treeshift::ErrorCode::LimitExceeded: return TS_ERROR_LIMIT_EXCEEDED;
    case treeshift::ErrorCode::BudgetExceeded: return TS_ERROR_BUDGET_EXCEEDED;
    case treeshift::ErrorCode::DegenerateSystem: return TS_ERROR_DEGENERATE_SYSTEM;
    case treeshift::ErrorCode::EmptyShift: return TS_ERROR_EMPTY_SHIFT;
    case treeshift::ErrorCode::Internal: return TS_ERROR_INTERNAL;
  }
  return TS_ERROR_INTERNAL;
}

ts_status fail(ts_status s, const std::string& message) {
  g_last_error = message;
  return s;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ts_status emit(const std::string& text, char** out) {
  *out = dup_string(text);
  if (!*out) return fail(TS_ERROR_INTERNAL, "allocation failure");
  return TS_OK;
}

// Runs a callable, translating exceptions into status codes.
template <typename Fn>
ts_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const treeshift::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(TS_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(TS_ERROR_INTERNAL, "unknown error");
  }
}

constexpr int kDefaultNMax = treeshift::kDefaultEntropyMaxSteps;
constexpr double kDefaultTol = treeshift::kDefaultEntropyTol;

int effective_n_max(int n_max) { return n_max > 0 ? n_max : kDefaultNMax; }
double effective_tol(double tol) { return tol > 0.0 ? tol : kDefaultTol; }
std::uint64_t effective_budget(std::uint64_t b) { return b > 0 ? b : treeshift::kDefaultOracleBudget; }
int effective_limit(int limit) { return limit > 0 ? limit : treeshift::kDefaultExactLimit; }

}  // namespace

extern "C" {

const char* ts_version(void) { return "0.1.0"; }

const char* ts_last_error(void) { return g_last_error.c_str(); }

void ts_string_free(char* s) { std::free(s); }

ts_status ts_system_from_json(const char* json_text, ts_system** out) {
  if (!json_text || !out) return fail(TS_ERROR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto parsed = treeshift::parse_json_text(json_text, "system");
    auto sys = treeshift::system_from_json(parsed);
    *out = new ts_system{std::move(sys)};
    return TS_OK;
  });
}

ts_status ts_system_to_json(const ts_system* sys, char** out) {
  if (!sys || !out) return fail(TS_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { return emit(treeshift::system_to_json(sys->sys).dump(), out); });
}

void ts_system_free(ts_system* sys) { delete sys; }

int ts_system_k(const ts_system* sys) { return sys ? sys->sys.k : 0; }
int ts_system_d(const ts_system* sys) { return sys ? sys->sys.d : 0; }

int ts_catalog_size(void) { return static_cast<int>(treeshift::canonical_binary_catalog().size()); }

ts_status ts_catalog_system(int index, ts_system** out) {
  if (!out) return fail(TS_ERROR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new ts_system{treeshift::catalog_system(index)};
    return TS_OK;
  });
}

ts_status ts_validate_json(const ts_system* sys, char** out) {
  if (!sys || !out) return fail(TS_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    return emit(treeshift::validation_to_json(treeshift::validate(sys->sys)).dump(), out);
  });
}

ts_status ts_classify_json(const ts_system* sys, int with_certificates, char** out) {
  if (!sys || !out) return fail(TS_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    return emit(treeshift::classify_row(sys->sys, with_certificates != 0).dump(), out);
  });
}

ts_status ts_entropy_json(const ts_system* sys, int n_max, double tol, char** out) {
  if (!sys || !out) return fail(TS_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    return emit(
        treeshift::entropy_row(sys->sys, effective_n_max(n_max), effective_tol(tol)).dump(), out);
  });
}

ts_status ts_complexity_exact(const ts_system* sys, int n, int exact_limit, char** out) {
  if (!sys || !out) return fail(TS_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    return emit(
        treeshift::bigint_to_string(treeshift::complexity_exact(sys->sys, n, effective_limit(exact_limit))),
        out);
  });
}

ts_status ts_complexity_log(const ts_system* sys, int n, double* out) {
  if (!sys || !out) return fail(TS_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = treeshift::complexity_log(sys->sys, n);
    return TS_OK;
  });
}

ts_status ts_oracle_count(const ts_system* sys, int n, uint64_t budget, uint64_t* out) {
  if (!sys || !out) return fail(TS_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = treeshift::oracle_count_blocks(sys->sys, n, effective_budget(budget));
    return TS_OK;
  });
}

ts_status ts_recode_json(const char* forbidden_json, int n_check, uint64_t budget, int exact_limit,
                         char** out) {
  if (!forbidden_json || !out) return fail(TS_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto parsed = treeshift::parse_json_text(forbidden_json, "forbidden-set");
    auto f = treeshift::forbidden_from_json(parsed);
    return emit(treeshift::recode_document(f, n_check > 0 ? n_check : 3, effective_budget(budget),
                                           effective_limit(exact_limit))
                    .dump(),
                out);
  });
}

ts_status ts_table_json(int n_max, double tol, char** out) {
  if (!out) return fail(TS_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    return emit(treeshift::table_document(effective_n_max(n_max), effective_tol(tol)).dump(), out);
  });
}

}  // extern "C"
