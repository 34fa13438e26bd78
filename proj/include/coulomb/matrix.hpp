#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "coulomb/rational.hpp"

namespace coulomb {

using RatVector = std::vector<Rational>;

/// Dense exact rational matrix, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }
  /// Matrix with the given vectors as columns.
  static RatMatrix from_columns(const std::vector<RatVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVector column(std::size_t j) const;
  RatMatrix transposed() const;

  RatMatrix& operator+=(const RatMatrix& rhs);
  RatMatrix& operator-=(const RatMatrix& rhs);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator-(RatMatrix a);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& c, RatMatrix a);
  friend RatVector operator*(const RatMatrix& a, const RatVector& v);

  RatMatrix pow(unsigned k) const;
  /// Throws std::domain_error when singular.
  RatMatrix inverse() const;
  std::size_t rank() const;
  Rational trace() const;
  Rational determinant() const;
  /// det(t I - A) as coefficients c_0..c_n of t^0..t^n (monic).
  std::vector<Rational> char_poly() const;
  bool is_zero() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank of the matrix whose columns are the given vectors.
std::size_t rank_of_columns(const std::vector<RatVector>& vectors);

/// Solves a x = b exactly. Returns false when inconsistent; free variables
/// are set to zero. `rank` receives the rank of a.
bool solve_linear(const RatMatrix& a, const RatVector& b, RatVector& x, std::size_t* rank = nullptr);

/// A nonzero kernel vector of a (integer-scaled, primitive), or empty when the
/// kernel is trivial.
RatVector kernel_vector(const RatMatrix& a);

Rational dot(const RatVector& a, const RatVector& b);

}  // namespace coulomb
