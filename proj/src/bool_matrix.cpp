// SPDX-License-Identifier: Apache-2.0
#include "treeshift/bool_matrix.hpp"

#include <algorithm>

namespace treeshift {

BoolMatrix BoolMatrix::identity(int d) {
  BoolMatrix m(d);
  for (int i = 0; i < d; ++i) m.set(i, i, true);
  return m;
}

BoolMatrix BoolMatrix::pattern_of(const Matrix01& src) {
  BoolMatrix m(src.dim);
  for (std::size_t t = 0; t < src.a.size(); ++t) m.bits[t] = src.a[t] ? 1 : 0;
  return m;
}

bool BoolMatrix::all_true() const {
  return std::all_of(bits.begin(), bits.end(), [](std::uint8_t b) { return b != 0; });
}

BoolMatrix boolean_product(const BoolMatrix& p, const BoolMatrix& q) {
  if (p.dim != q.dim) raise(ErrorCode::InvalidArgument, "dimension mismatch");
  const int d = p.dim;
  BoolMatrix out(d);
  for (int i = 0; i < d; ++i) {
    for (int l = 0; l < d; ++l) {
      if (!p.get(i, l)) continue;
      for (int j = 0; j < d; ++j)
        if (q.get(l, j)) out.set(i, j, true);
    }
  }
  return out;
}

std::size_t BoolMatrixHash::operator()(const BoolMatrix& m) const {
  // FNV-1a over the bit bytes.
  std::size_t h = 1469598103934665603ull;
  for (std::uint8_t b : m.bits) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h ^ static_cast<std::size_t>(m.dim);
}

}  // namespace treeshift
