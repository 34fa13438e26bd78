#include "coulomb/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace coulomb {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& columns) {
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  RatMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("from_columns: ragged columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

RatVector RatMatrix::column(std::size_t j) const {
  RatVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

RatMatrix operator-(RatMatrix a) {
  for (auto& x : a.data_) x = -x;
  return a;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("matrix product: shape mismatch (" + std::to_string(a.rows_) + "x" +
                                std::to_string(a.cols_) + " times " + std::to_string(b.rows_) + "x" +
                                std::to_string(b.cols_) + ")");
  }
  RatMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

RatMatrix operator*(const Rational& c, RatMatrix a) {
  for (auto& x : a.data_) x *= c;
  return a;
}

RatVector operator*(const RatMatrix& a, const RatVector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  RatVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (v[j] != 0) out[i] += a(i, j) * v[j];
    }
  }
  return out;
}

RatMatrix RatMatrix::pow(unsigned k) const {
  if (!square()) throw std::invalid_argument("pow: matrix not square");
  RatMatrix out = identity(rows_);
  for (unsigned i = 0; i < k; ++i) out = out * (*this);
  return out;
}

RatMatrix RatMatrix::inverse() const {
  if (!square()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = rows_;
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

std::size_t RatMatrix::rank() const {
  RatMatrix m = *this;
  return row_reduce(m).size();
}

Rational RatMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Rational RatMatrix::determinant() const {
  if (!square()) throw std::invalid_argument("determinant: matrix not square");
  RatMatrix m = *this;
  Rational det = 1;
  const std::size_t n = rows_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      const Rational f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

std::vector<Rational> RatMatrix::char_poly() const {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  if (!square()) throw std::invalid_argument("char_poly: matrix not square");
  const std::size_t n = rows_;
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RatMatrix m = RatMatrix(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = (*this) * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    const RatMatrix am = (*this) * m;
    c[n - k] = -am.trace() / Rational(static_cast<long>(k));
  }
  return c;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

std::string RatMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

std::size_t rank_of_columns(const std::vector<RatVector>& vectors) {
  if (vectors.empty()) return 0;
  return RatMatrix::from_columns(vectors).rank();
}

bool solve_linear(const RatMatrix& a, const RatVector& b, RatVector& x, std::size_t* rank) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: shape mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return false;
  if (rank) *rank = pivots.size();
  x.assign(a.cols(), Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return true;
}

RatVector kernel_vector(const RatMatrix& a) {
  RatMatrix m = a;
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::size_t free = 0;
  while (free < a.cols() && is_pivot[free]) ++free;
  if (free == a.cols()) return {};
  RatVector v(a.cols());
  v[free] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
  // Clear denominators and common factors.
  Integer l = 1, g = 0;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  for (auto& x : v) {
    x *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g != 0 && g != 1) {
    for (auto& x : v) x /= Rational(g);
  }
  return v;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace coulomb
