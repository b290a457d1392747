// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>

namespace treeshift {

using BigInt = mpz_class;

// Natural log of a positive big integer, accurate to double precision
// regardless of magnitude.
double log_bigint(const BigInt& v);

std::string bigint_to_string(const BigInt& v);

}  // namespace treeshift
