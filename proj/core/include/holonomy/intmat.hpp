#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace holo {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

// Dense matrix over Z with arbitrary-precision entries, row-major.
class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const IntVec& d);
  // Rows are initializer-style: {{1,2},{3,4}}.
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<Int>& data() const { return data_; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntVec operator*(const IntVec& v) const;
  IntMatrix operator+(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  IntMatrix operator*(const Int& scalar) const;
  bool operator==(const IntMatrix& other) const = default;

  bool is_zero() const;
  bool is_identity() const;
  Int det() const;  // fraction-free Gaussian elimination; square only

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  // row i += c * row j  /  col i += c * col j
  void add_row(std::size_t i, std::size_t j, const Int& c);
  void add_col(std::size_t i, std::size_t j, const Int& c);
  void negate_row(std::size_t i);
  void negate_col(std::size_t i);

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;

private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

// D = U * A * V with U, V unimodular, D diagonal, d1 | d2 | ... | dr, di >= 0.
struct SmithDecomposition {
  IntMatrix U, D, V;
  std::size_t rank() const;
  IntVec invariant_factors() const;  // the nonzero diagonal entries
};

// H = U * A, U unimodular, H in row Hermite form.
struct HermiteDecomposition {
  IntMatrix H, U;
  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& A);
HermiteDecomposition hermite_normal_form(const IntMatrix& A);

// Rows form a saturated basis of {x : A x = 0}.
IntMatrix kernel_basis(const IntMatrix& A);

// x with A x = b over Z, or nullopt when b is outside the image lattice.
std::optional<IntVec> solve_integer(const IntMatrix& A, const IntVec& b);

std::size_t rank(const IntMatrix& A);

// Inverse of a unimodular matrix; throws Error(internal) otherwise.
IntMatrix unimodular_inverse(const IntMatrix& U);

}  // namespace holo
