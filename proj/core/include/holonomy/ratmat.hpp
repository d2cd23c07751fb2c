#pragma once

#include <cstddef>
#include <vector>

#include "holonomy/intmat.hpp"

namespace holo {

using RatVec = std::vector<Rat>;

// Dense matrix over Q. mpq_class keeps entries in canonical reduced form.
class RatMatrix {
public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_int(const IntMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  RatMatrix operator*(const RatMatrix& other) const;
  RatVec operator*(const RatVec& v) const;
  RatMatrix operator+(const RatMatrix& other) const;
  RatMatrix operator-(const RatMatrix& other) const;
  bool operator==(const RatMatrix& other) const = default;

  bool is_identity() const;
  RatMatrix inverse() const;  // throws Error(validation) when singular

  // Least common denominator of all entries (positive).
  Int common_denominator() const;
  // this * lcd as an integer matrix.
  IntMatrix scaled_to_int(const Int& lcd) const;
  // Exact integer matrix; throws when any entry is non-integral.
  IntMatrix to_int() const;

private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rat& c, const RatVec& v);
Int common_denominator(const RatVec& v);

std::size_t rank(const RatMatrix& A);

// Solve A x = b over Q; nullopt when inconsistent.
std::optional<RatVec> solve_rational(const RatMatrix& A, const RatVec& b);

}  // namespace holo
