#include "holonomy/intmat.hpp"

#include <algorithm>
#include <utility>

#include "holonomy/error.hpp"

namespace holo {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Int> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  check(data_.size() == rows_ * cols_, ErrorKind::validation,
        "entry count does not match matrix shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const IntVec& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  if (rows.empty()) return IntMatrix();
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check(rows[i].size() == m.cols(), ErrorKind::validation, "ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  check(cols_ == other.rows_, ErrorKind::validation, "dimension mismatch");
  IntMatrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        r.at(i, j) += a * other.at(k, j);
    }
  return r;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
  check(cols_ == v.size(), ErrorKind::validation, "dimension mismatch");
  IntVec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
  check(rows_ == other.rows_ && cols_ == other.cols_, ErrorKind::validation,
        "dimension mismatch");
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = data_[i] + other.data_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
  check(rows_ == other.rows_ && cols_ == other.cols_, ErrorKind::validation,
        "dimension mismatch");
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = data_[i] - other.data_[i];
  return r;
}

IntMatrix IntMatrix::operator*(const Int& scalar) const {
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * scalar;
  return r;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Int& x) { return x == 0; });
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

// Bareiss: all intermediate divisions are exact.
Int IntMatrix::det() const {
  check(rows_ == cols_, ErrorKind::validation, "det of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(),
                     prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const Int& c) {
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const Int& c) {
  for (std::size_t k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(std::size_t i) {
  for (std::size_t k = 0; k < rows_; ++k) at(k, i) = -at(k, i);
}

IntVec IntMatrix::row(std::size_t i) const {
  IntVec r(cols_);
  for (std::size_t k = 0; k < cols_; ++k) r[k] = at(i, k);
  return r;
}

IntVec IntMatrix::col(std::size_t j) const {
  IntVec c(rows_);
  for (std::size_t k = 0; k < rows_; ++k) c[k] = at(k, j);
  return c;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  std::size_t n = std::min(D.rows(), D.cols());
  while (r < n && D.at(r, r) != 0) ++r;
  return r;
}

IntVec SmithDecomposition::invariant_factors() const {
  IntVec f;
  for (std::size_t i = 0; i < rank(); ++i) f.push_back(D.at(i, i));
  return f;
}

std::size_t HermiteDecomposition::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < H.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < H.cols(); ++j)
      if (H.at(i, j) != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) ++r;
  }
  return r;
}

namespace {

bool is_diagonal_matrix(const IntMatrix& D) {
  for (std::size_t i = 0; i < D.rows(); ++i)
    for (std::size_t j = 0; j < D.cols(); ++j)
      if (i != j && D.at(i, j) != 0) return false;
  return true;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& A) {
  SmithDecomposition s{IntMatrix::identity(A.rows()), A,
                       IntMatrix::identity(A.cols())};
  IntMatrix& D = s.D;

  // Alternating row/column Hermite reduction. Each pass reduces entries
  // above the pivots, which keeps coefficient growth under control where a
  // naive smallest-pivot sweep explodes.
  for (int round = 0; !is_diagonal_matrix(D); ++round) {
    check_internal(round < 1000, "Smith reduction failed to converge");
    HermiteDecomposition hr = hermite_normal_form(D);
    D = hr.H;
    s.U = hr.U * s.U;
    if (is_diagonal_matrix(D)) break;
    HermiteDecomposition hc = hermite_normal_form(D.transpose());
    D = hc.H.transpose();
    s.V = s.V * hc.U.transpose();
  }

  // pack the nonzero diagonal into the leading positions
  std::size_t n = std::min(D.rows(), D.cols());
  std::size_t r = 0;
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t k = t;
    while (k < n && D.at(k, k) == 0) ++k;
    if (k == n) break;
    if (k != t) {
      D.swap_rows(t, k);
      s.U.swap_rows(t, k);
      D.swap_cols(t, k);
      s.V.swap_cols(t, k);
    }
    if (D.at(t, t) < 0) {
      D.negate_row(t);
      s.U.negate_row(t);
    }
    ++r;
  }

  // gcd/lcm repair on adjacent pairs until d1 | d2 | ... | dr
  auto repair = [&](std::size_t i, std::size_t j) {
    Int a = D.at(i, i), b = D.at(j, j);
    D.add_col(i, j, 1);
    s.V.add_col(i, j, 1);
    Int g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    Int bg = b / g, ag = a / g;
    // unimodular [[x, y], [-b/g, a/g]] on rows i, j of D and U
    for (IntMatrix* m : {&D, &s.U}) {
      for (std::size_t k = 0; k < m->cols(); ++k) {
        Int p = m->at(i, k), q = m->at(j, k);
        m->at(i, k) = x * p + y * q;
        m->at(j, k) = -bg * p + ag * q;
      }
    }
    // now (i,i) = g, (i,j) = y*b, (j,i) = 0, (j,j) = lcm(a,b)
    Int q = D.at(i, j) / g;
    D.add_col(j, i, -q);
    s.V.add_col(j, i, -q);
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t t = 0; t + 1 < r; ++t)
      if (!mpz_divisible_p(D.at(t + 1, t + 1).get_mpz_t(),
                           D.at(t, t).get_mpz_t())) {
        repair(t, t + 1);
        changed = true;
      }
  }
  return s;
}

HermiteDecomposition hermite_normal_form(const IntMatrix& A) {
  HermiteDecomposition h{A, IntMatrix::identity(A.rows())};
  IntMatrix& H = h.H;
  std::size_t p = 0;  // next pivot row
  for (std::size_t c = 0; c < A.cols() && p < A.rows(); ++c) {
    // reduce rows >= p in column c to a single nonzero entry
    for (;;) {
      std::size_t best = H.rows();
      for (std::size_t i = p; i < H.rows(); ++i) {
        if (H.at(i, c) == 0) continue;
        if (best == H.rows() || abs(H.at(i, c)) < abs(H.at(best, c))) best = i;
      }
      if (best == H.rows()) break;  // column is zero from row p down
      H.swap_rows(p, best);
      h.U.swap_rows(p, best);
      bool cleared = true;
      for (std::size_t i = p + 1; i < H.rows(); ++i) {
        if (H.at(i, c) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), H.at(i, c).get_mpz_t(),
                   H.at(p, c).get_mpz_t());
        H.add_row(i, p, -q);
        h.U.add_row(i, p, -q);
        if (H.at(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (H.at(p, c) == 0) continue;
    if (H.at(p, c) < 0) {
      H.negate_row(p);
      h.U.negate_row(p);
    }
    // entries above the pivot reduced into [0, pivot)
    for (std::size_t i = 0; i < p; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), H.at(i, c).get_mpz_t(),
                 H.at(p, c).get_mpz_t());
      if (q != 0) {
        H.add_row(i, p, -q);
        h.U.add_row(i, p, -q);
      }
    }
    ++p;
  }
  return h;
}

IntMatrix kernel_basis(const IntMatrix& A) {
  SmithDecomposition s = smith_normal_form(A);
  std::size_t r = s.rank();
  // columns of V past the rank span the kernel; V unimodular => saturated
  IntMatrix K(A.cols() - r, A.cols());
  for (std::size_t k = r; k < A.cols(); ++k)
    for (std::size_t i = 0; i < A.cols(); ++i)
      K.at(k - r, i) = s.V.at(i, k);
  return K;
}

std::optional<IntVec> solve_integer(const IntMatrix& A, const IntVec& b) {
  check(b.size() == A.rows(), ErrorKind::validation, "dimension mismatch");
  SmithDecomposition s = smith_normal_form(A);
  std::size_t r = s.rank();
  IntVec y = s.U * b;
  IntVec z(A.cols());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < r) {
      if (!mpz_divisible_p(y[i].get_mpz_t(), s.D.at(i, i).get_mpz_t()))
        return std::nullopt;
      mpz_divexact(z[i].get_mpz_t(), y[i].get_mpz_t(), s.D.at(i, i).get_mpz_t());
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V * z;
}

std::size_t rank(const IntMatrix& A) { return smith_normal_form(A).rank(); }

IntMatrix unimodular_inverse(const IntMatrix& U) {
  check(U.rows() == U.cols(), ErrorKind::validation, "non-square matrix");
  HermiteDecomposition h = hermite_normal_form(U);
  check_internal(h.H.is_identity(), "matrix is not unimodular");
  return h.U;
}

}  // namespace holo
