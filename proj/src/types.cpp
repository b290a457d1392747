// SPDX-License-Identifier: Apache-2.0
#include "treeshift/types.hpp"

#include <algorithm>
#include <sstream>

namespace treeshift {

Matrix01::Matrix01(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<int>> v;
  for (const auto& r : rows) v.emplace_back(r);
  *this = from_rows(v);
}

Matrix01 Matrix01::from_rows(const std::vector<std::vector<int>>& rows) {
  const int d = static_cast<int>(rows.size());
  Matrix01 m(d);
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(rows[i].size()) != d)
      raise(ErrorCode::InvalidArgument, "matrix is not square");
    for (int j = 0; j < d; ++j) {
      const int v = rows[i][j];
      if (v != 0 && v != 1) raise(ErrorCode::InvalidArgument, "matrix entry outside {0,1}");
      m.set(i, j, static_cast<std::uint8_t>(v));
    }
  }
  return m;
}

std::vector<std::vector<int>> Matrix01::to_rows() const {
  std::vector<std::vector<int>> rows(dim, std::vector<int>(dim, 0));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) rows[i][j] = (*this)(i, j);
  return rows;
}

int Matrix01::row_sum(int i) const {
  int s = 0;
  for (int j = 0; j < dim; ++j) s += (*this)(i, j);
  return s;
}

int Matrix01::col_sum(int j) const {
  int s = 0;
  for (int i = 0; i < dim; ++i) s += (*this)(i, j);
  return s;
}

int Matrix01::max_row_sum() const {
  int best = 0;
  for (int i = 0; i < dim; ++i) best = std::max(best, row_sum(i));
  return best;
}

bool Matrix01::dominates(const Matrix01& other) const {
  if (dim != other.dim) raise(ErrorCode::InvalidArgument, "dimension mismatch");
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t] < other.a[t]) return false;
  return true;
}

TransitionSystem make_system(std::string name, std::vector<Matrix01> mats) {
  TransitionSystem sys;
  sys.name = std::move(name);
  sys.k = static_cast<int>(mats.size());
  sys.d = mats.empty() ? 0 : mats.front().dim;
  sys.matrices = std::move(mats);
  return sys;
}

ValidationReport validate(const TransitionSystem& sys) {
  ValidationReport report;
  for (int m = 0; m < sys.k; ++m) {
    for (int i = 0; i < sys.d; ++i) {
      if (sys.matrices[m].row_sum(i) == 0) {
        report.zero_rows.emplace_back(m, i);
        std::ostringstream os;
        os << "matrix " << m << " row " << i << " is all zero";
        report.messages.push_back(os.str());
      }
    }
    for (int j = 0; j < sys.d; ++j) {
      if (sys.matrices[m].col_sum(j) == 0) {
        report.zero_cols.emplace_back(m, j);
        std::ostringstream os;
        os << "matrix " << m << " column " << j << " is all zero";
        report.messages.push_back(os.str());
      }
    }
  }
  report.admissible = report.zero_rows.empty() && report.zero_cols.empty();
  return report;
}

ValidatedSystem validate_system(const std::vector<std::vector<std::vector<int>>>& raw,
                                const std::string& name) {
  if (raw.empty()) raise(ErrorCode::InvalidArgument, "system needs at least one matrix");
  const int d = static_cast<int>(raw.front().size());
  if (d < 2) raise(ErrorCode::InvalidArgument, "alphabet size d must be at least 2");
  std::vector<Matrix01> mats;
  mats.reserve(raw.size());
  for (std::size_t m = 0; m < raw.size(); ++m) {
    if (static_cast<int>(raw[m].size()) != d)
      raise(ErrorCode::InvalidArgument, "mismatched dimensions across matrices");
    mats.push_back(Matrix01::from_rows(raw[m]));
  }
  ValidatedSystem out;
  out.system = make_system(name, std::move(mats));
  out.report = validate(out.system);
  return out;
}

std::int64_t level_offset(int k, int level) {
  if (k < 1 || level < 0) raise(ErrorCode::InvalidArgument, "bad level arguments");
  if (k == 1) return level;
  std::int64_t total = 0;
  std::int64_t width = 1;
  for (int l = 0; l < level; ++l) {
    total += width;
    if (width > (std::int64_t{1} << 56) / k)
      raise(ErrorCode::BudgetExceeded, "block has too many nodes to index");
    width *= k;
  }
  return total;
}

std::int64_t node_count(int k, int height) { return level_offset(k, height + 1); }

std::int64_t node_index(int k, const Word& w) {
  std::int64_t pos = 0;
  for (int dir : w) {
    if (dir < 0 || dir >= k) raise(ErrorCode::InvalidArgument, "word direction out of range");
    pos = pos * k + dir;
  }
  return level_offset(k, static_cast<int>(w.size())) + pos;
}

Block make_block(int k, int d, int height, std::vector<int> labels) {
  if (k < 1 || d < 1 || height < 0) raise(ErrorCode::InvalidArgument, "bad block shape");
  const std::int64_t n = node_count(k, height);
  if (static_cast<std::int64_t>(labels.size()) != n)
    raise(ErrorCode::InvalidArgument, "label array length does not match the height formula");
  for (int v : labels)
    if (v < 0 || v >= d) raise(ErrorCode::InvalidArgument, "block label out of range");
  Block b;
  b.k = k;
  b.d = d;
  b.height = height;
  b.labels = std::move(labels);
  return b;
}

Block uniform_block(int k, int d, int height, int label) {
  return make_block(k, d, height, std::vector<int>(static_cast<std::size_t>(node_count(k, height)), label));
}

int block_node_label(const Block& b, const Word& w) {
  if (static_cast<int>(w.size()) > b.height)
    raise(ErrorCode::InvalidArgument, "word is longer than the block height");
  return b.labels[static_cast<std::size_t>(node_index(b.k, w))];
}

void set_block_node_label(Block& b, const Word& w, int label) {
  if (static_cast<int>(w.size()) > b.height)
    raise(ErrorCode::InvalidArgument, "word is longer than the block height");
  if (label < 0 || label >= b.d) raise(ErrorCode::InvalidArgument, "block label out of range");
  b.labels[static_cast<std::size_t>(node_index(b.k, w))] = label;
}

Block sub_block(const Block& b, const Word& root, int h) {
  if (h < 0 || static_cast<int>(root.size()) + h > b.height)
    raise(ErrorCode::InvalidArgument, "sub-block does not fit inside the block");
  Block out;
  out.k = b.k;
  out.d = b.d;
  out.height = h;
  out.labels.reserve(static_cast<std::size_t>(node_count(b.k, h)));
  // Walk levels of the source: at depth l the sub-block's nodes are the k^l
  // descendants of `root`, contiguous in the source layout.
  std::int64_t first = node_index(b.k, root);
  std::int64_t width = 1;
  for (int l = 0; l <= h; ++l) {
    for (std::int64_t t = 0; t < width; ++t)
      out.labels.push_back(b.labels[static_cast<std::size_t>(first + t)]);
    // First child of the leftmost node on the next level.
    const std::int64_t level = static_cast<std::int64_t>(root.size()) + l;
    const std::int64_t q = first - level_offset(b.k, static_cast<int>(level));
    first = level_offset(b.k, static_cast<int>(level) + 1) + q * b.k;
    width *= b.k;
  }
  return out;
}

}  // namespace treeshift
