#include "holonomy/ratmat.hpp"

#include "holonomy/error.hpp"

namespace holo {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j);
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  check(cols_ == other.rows_, ErrorKind::validation, "dimension mismatch");
  RatMatrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        r.at(i, j) += a * other.at(k, j);
    }
  return r;
}

RatVec RatMatrix::operator*(const RatVec& v) const {
  check(cols_ == v.size(), ErrorKind::validation, "dimension mismatch");
  RatVec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
  check(rows_ == other.rows_ && cols_ == other.cols_, ErrorKind::validation,
        "dimension mismatch");
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = data_[i] + other.data_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const {
  check(rows_ == other.rows_ && cols_ == other.cols_, ErrorKind::validation,
        "dimension mismatch");
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = data_[i] - other.data_[i];
  return r;
}

bool RatMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

RatMatrix RatMatrix::inverse() const {
  check(rows_ == cols_, ErrorKind::validation, "non-square matrix");
  std::size_t n = rows_;
  RatMatrix a = *this;
  RatMatrix inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a.at(p, c) == 0) ++p;
    check(p < n, ErrorKind::validation, "singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a.at(c, j), a.at(p, j));
      std::swap(inv.at(c, j), inv.at(p, j));
    }
    Rat piv = a.at(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(c, j) /= piv;
      inv.at(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a.at(i, c) == 0) continue;
      Rat f = a.at(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(c, j);
        inv.at(i, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

Int RatMatrix::common_denominator() const {
  Int l = 1;
  for (const Rat& x : data_) {
    Int d = x.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

IntMatrix RatMatrix::scaled_to_int(const Int& lcd) const {
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      Rat x = at(i, j) * Rat(lcd);
      check(x.get_den() == 1, ErrorKind::validation,
            "lcd does not clear denominators");
      r.at(i, j) = x.get_num();
    }
  return r;
}

IntMatrix RatMatrix::to_int() const {
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rat& x = at(i, j);
      check(x.get_den() == 1, ErrorKind::validation, "non-integer entry");
      r.at(i, j) = x.get_num();
    }
  return r;
}

RatVec operator+(const RatVec& a, const RatVec& b) {
  check(a.size() == b.size(), ErrorKind::validation, "dimension mismatch");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
  check(a.size() == b.size(), ErrorKind::validation, "dimension mismatch");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec operator*(const Rat& c, const RatVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Int common_denominator(const RatVec& v) {
  Int l = 1;
  for (const Rat& x : v) {
    Int d = x.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

std::size_t rank(const RatMatrix& A) {
  RatMatrix a = A;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a.at(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(p, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a.at(i, c) == 0) continue;
      Rat f = a.at(i, c) / a.at(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    ++r;
  }
  return r;
}

std::optional<RatVec> solve_rational(const RatMatrix& A, const RatVec& b) {
  check(b.size() == A.rows(), ErrorKind::validation, "dimension mismatch");
  std::size_t m = A.rows(), n = A.cols();
  RatMatrix a(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a.at(i, j) = A.at(i, j);
    a.at(i, n) = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a.at(p, c) == 0) ++p;
    if (p == m) continue;
    for (std::size_t j = 0; j <= n; ++j) std::swap(a.at(r, j), a.at(p, j));
    Rat piv = a.at(r, c);
    for (std::size_t j = 0; j <= n; ++j) a.at(r, j) /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rat f = a.at(i, c);
      for (std::size_t j = 0; j <= n; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (a.at(i, n) != 0) return std::nullopt;
  RatVec x(n);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = a.at(i, n);
  return x;
}

}  // namespace holo
