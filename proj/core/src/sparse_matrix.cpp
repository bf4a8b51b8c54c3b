#include "braidlex/sparse_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "braidlex/errors.hpp"

namespace braidlex {

SparseBooleanMatrix::SparseBooleanMatrix(std::size_t dim, std::vector<Entry> entries)
    : dim_(dim), entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.row >= dim_ || e.col >= dim_) {
      throw IndexError("entry (" + std::to_string(e.row) + "," +
                       std::to_string(e.col) + ") outside " +
                       std::to_string(dim_) + "x" + std::to_string(dim_));
    }
  }
  std::sort(entries_.begin(), entries_.end());
  entries_.erase(std::unique(entries_.begin(), entries_.end()), entries_.end());
}

SparseBooleanMatrix SparseBooleanMatrix::from_dense(
    const std::vector<std::vector<int>>& rows) {
  std::vector<Entry> entries;
  for (std::size_t p = 0; p < rows.size(); ++p) {
    if (rows[p].size() != rows.size()) throw IndexError("dense matrix is not square");
    for (std::size_t q = 0; q < rows[p].size(); ++q) {
      if (rows[p][q] != 0) entries.push_back({p, q});
    }
  }
  return SparseBooleanMatrix(rows.size(), std::move(entries));
}

bool SparseBooleanMatrix::contains(std::size_t row, std::size_t col) const {
  return std::binary_search(entries_.begin(), entries_.end(), Entry{row, col});
}

std::vector<std::size_t> SparseBooleanMatrix::row_sums() const {
  std::vector<std::size_t> out(dim_, 0);
  for (const auto& e : entries_) ++out[e.row];
  return out;
}

std::vector<std::size_t> SparseBooleanMatrix::col_sums() const {
  std::vector<std::size_t> out(dim_, 0);
  for (const auto& e : entries_) ++out[e.col];
  return out;
}

std::span<const SparseBooleanMatrix::Entry> SparseBooleanMatrix::row(
    std::size_t row) const {
  auto lo = std::lower_bound(entries_.begin(), entries_.end(), Entry{row, 0});
  auto hi = std::lower_bound(lo, entries_.end(), Entry{row + 1, 0});
  return {lo, hi};
}

SparseBooleanMatrix SparseBooleanMatrix::reordered(
    std::span<const std::size_t> order) const {
  if (order.size() != dim_) throw IndexError("permutation has the wrong length");
  std::vector<std::size_t> position(dim_, dim_);
  for (std::size_t p = 0; p < order.size(); ++p) {
    if (order[p] >= dim_ || position[order[p]] != dim_) {
      throw IndexError("order is not a permutation");
    }
    position[order[p]] = p;
  }
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back({position[e.row], position[e.col]});
  return SparseBooleanMatrix(dim_, std::move(out));
}

std::vector<std::vector<int>> SparseBooleanMatrix::to_dense() const {
  std::vector<std::vector<int>> out(dim_, std::vector<int>(dim_, 0));
  for (const auto& e : entries_) out[e.row][e.col] = 1;
  return out;
}

std::optional<MatrixMismatch> first_mismatch(const SparseBooleanMatrix& lhs,
                                             const SparseBooleanMatrix& rhs) {
  if (lhs.dim() != rhs.dim()) {
    return MatrixMismatch{std::min(lhs.dim(), rhs.dim()), 0, lhs.dim() > rhs.dim()};
  }
  auto a = lhs.entries();
  auto b = rhs.entries();
  std::size_t x = 0;
  std::size_t y = 0;
  while (x < a.size() || y < b.size()) {
    if (y == b.size() || (x < a.size() && a[x] < b[y])) {
      return MatrixMismatch{a[x].row, a[x].col, true};
    }
    if (x == a.size() || b[y] < a[x]) {
      return MatrixMismatch{b[y].row, b[y].col, false};
    }
    ++x;
    ++y;
  }
  return std::nullopt;
}

void CoordinateBuilder::set_one_based(std::int64_t row, std::int64_t col) {
  const auto dim = static_cast<std::int64_t>(dim_);
  if (row < 1 || col < 1 || row > dim || col > dim) {
    throw IndexError("write R[" + std::to_string(row) + "," + std::to_string(col) +
                     "] outside " + std::to_string(dim_) + "x" +
                     std::to_string(dim_));
  }
  entries_.push_back({static_cast<std::size_t>(row - 1),
                      static_cast<std::size_t>(col - 1)});
}

void CoordinateBuilder::set(std::size_t row, std::size_t col) {
  set_one_based(static_cast<std::int64_t>(row) + 1, static_cast<std::int64_t>(col) + 1);
}

SparseBooleanMatrix CoordinateBuilder::build() && {
  return SparseBooleanMatrix(dim_, std::move(entries_));
}

void write_matrix_market(std::ostream& out, const SparseBooleanMatrix& m) {
  out << "%%MatrixMarket matrix coordinate integer general\n";
  out << m.dim() << ' ' << m.dim() << ' ' << m.nnz() << '\n';
  for (const auto& e : m.entries()) out << e.row + 1 << ' ' << e.col + 1 << " 1\n";
}

void write_csv(std::ostream& out, const SparseBooleanMatrix& m) {
  for (std::size_t p = 0; p < m.dim(); ++p) {
    auto row = m.row(p);
    auto it = row.begin();
    for (std::size_t q = 0; q < m.dim(); ++q) {
      if (q > 0) out << ',';
      const bool one = it != row.end() && it->col == q;
      if (one) ++it;
      out << (one ? '1' : '0');
    }
    out << '\n';
  }
}

}  // namespace braidlex
