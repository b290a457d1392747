// SPDX-License-Identifier: Apache-2.0
#include "treeshift/bigint.hpp"

#include <cmath>

#include "treeshift/error.hpp"

namespace treeshift {

double log_bigint(const BigInt& v) {
  if (v <= 0) raise(ErrorCode::InvalidArgument, "log of a non-positive integer");
  signed long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

std::string bigint_to_string(const BigInt& v) { return v.get_str(); }

}  // namespace treeshift
