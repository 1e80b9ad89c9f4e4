#pragma once

#include "raag/bigint.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <vector>

namespace raag {

struct Triplet {
  std::size_t row;
  std::size_t col;
  BigInt value;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

/// Sparse integer matrix with exact entries. Zero entries are never stored.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  BigInt at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const BigInt& v);
  void add(std::size_t r, std::size_t c, const BigInt& v);

  /// Row-major list of nonzero entries.
  std::vector<Triplet> triplets() const;
  const std::map<std::size_t, BigInt>& row(std::size_t r) const { return data_[r]; }

  bool is_zero() const { return nonzeros() == 0; }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::map<std::size_t, BigInt>> data_;
};

/// Rank over Q, computed exactly: sparse elimination on unit pivots, then
/// fraction-free (Bareiss) elimination of whatever is left.
std::size_t rank(const IntegerMatrix& a);

/// Nonzero invariant factors d1 | d2 | ... of the Smith normal form,
/// all positive. Their count is the rank.
std::vector<BigInt> smith_invariants(const IntegerMatrix& a);

/// Dense fraction-free elimination rank.
std::size_t bareiss_rank(std::vector<std::vector<BigInt>> dense);

/// Dense Smith normal form diagonal (nonzero entries only).
std::vector<BigInt> dense_smith_invariants(std::vector<std::vector<BigInt>> dense);

std::vector<std::vector<BigInt>> to_dense(const IntegerMatrix& a);

/// Plain-text sparse format: header `rows cols nnz`, then one `row col value`
/// line per nonzero entry (0-based indices, row-major order).
void write_triplets(std::ostream& out, const IntegerMatrix& a);
/// Throws ValidationError on malformed input.
IntegerMatrix read_triplets(std::istream& in);

}  // namespace raag
