#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace braidlex {

// 0/1 square matrix in coordinate form. Entries are kept sorted by
// (row, col) with no duplicates; indices are zero-based.
class SparseBooleanMatrix {
 public:
  struct Entry {
    std::size_t row = 0;
    std::size_t col = 0;
    friend auto operator<=>(const Entry&, const Entry&) = default;
  };

  SparseBooleanMatrix() = default;
  explicit SparseBooleanMatrix(std::size_t dim) : dim_(dim) {}
  // Sorts and deduplicates; throws IndexError on out-of-range positions.
  SparseBooleanMatrix(std::size_t dim, std::vector<Entry> entries);
  static SparseBooleanMatrix from_dense(
      const std::vector<std::vector<int>>& rows);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  std::span<const Entry> entries() const noexcept { return entries_; }
  bool contains(std::size_t row, std::size_t col) const;

  std::vector<std::size_t> row_sums() const;
  std::vector<std::size_t> col_sums() const;

  // Column indices of row `row`, ascending.
  std::span<const Entry> row(std::size_t row) const;

  // Result(p, q) = this(order[p], order[q]). `order` must be a permutation.
  SparseBooleanMatrix reordered(std::span<const std::size_t> order) const;

  std::vector<std::vector<int>> to_dense() const;

  friend bool operator==(const SparseBooleanMatrix&,
                         const SparseBooleanMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

// First differing coordinate between two matrices of equal dimension.
struct MatrixMismatch {
  std::size_t row = 0;
  std::size_t col = 0;
  bool only_in_left = false;  // otherwise only in right
};

std::optional<MatrixMismatch> first_mismatch(const SparseBooleanMatrix& lhs,
                                             const SparseBooleanMatrix& rhs);

// Collects coordinates with bounds checking, then freezes into a matrix.
class CoordinateBuilder {
 public:
  explicit CoordinateBuilder(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  // One-based insert, as the recursive generator addresses the matrix.
  void set_one_based(std::int64_t row, std::int64_t col);
  void set(std::size_t row, std::size_t col);
  SparseBooleanMatrix build() &&;

 private:
  std::size_t dim_;
  std::vector<SparseBooleanMatrix::Entry> entries_;
};

void write_matrix_market(std::ostream& out, const SparseBooleanMatrix& m);
void write_csv(std::ostream& out, const SparseBooleanMatrix& m);

}  // namespace braidlex
