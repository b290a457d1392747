// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "treeshift/json_io.hpp"

namespace treeshift {

// Structured result rows behind the CLI subcommands. All fields are
// deterministic for fixed inputs and flags so outputs can be frozen in golden
// files.

json classify_row(const TransitionSystem& sys, bool with_certificates);

json entropy_row(const TransitionSystem& sys, int n_max, double tol);

json recode_document(const ForbiddenSet& f, int n_check, std::uint64_t budget, int exact_limit);

// The 28-row classification grid plus the entropy reference table (computed
// value against the reference value or interval, with a pass flag per row).
json table_document(int n_max, double tol);

}  // namespace treeshift
