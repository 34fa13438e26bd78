#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coulomb/rational.hpp"

namespace coulomb {

/// Truncated formal power series in q with exact rational coefficients and
/// exponents in (1/2)Z. Every coefficient with exponent <= order() is final;
/// nothing above order() is stored.
///
/// Exponents are held internally in half units, so q^{3/2} has key 3.
class HilbertSeries {
 public:
  /// The zero series, complete through `order`.
  explicit HilbertSeries(const Rational& order);

  static HilbertSeries one(const Rational& order);
  static HilbertSeries monomial(const Rational& exponent, const Rational& coefficient, const Rational& order);
  /// Expansion of numerator / denominator (integer-exponent polynomials given
  /// as coefficient lists, denominator[0] != 0).
  static HilbertSeries from_rational_function(const std::vector<Rational>& numerator,
                                              const std::vector<Rational>& denominator, const Rational& order);

  Rational order() const;
  Rational coefficient(const Rational& exponent) const;
  /// Nonzero terms in increasing exponent order.
  std::vector<std::pair<Rational, Rational>> terms() const;
  /// Coefficients of q^0 .. q^floor(order); only meaningful when exponents
  /// are integral.
  std::vector<Rational> dense() const;
  bool has_half_integral_exponents() const;
  bool has_nonnegative_integer_coefficients() const;

  /// Same terms, completeness lowered to min(order(), new_order).
  HilbertSeries truncated(const Rational& new_order) const;
  /// q^exponent * this, completeness bound shifted accordingly.
  HilbertSeries shifted(const Rational& exponent) const;

  HilbertSeries& operator+=(const HilbertSeries& rhs);
  friend HilbertSeries operator+(HilbertSeries a, const HilbertSeries& b) { return a += b; }
  friend HilbertSeries operator*(const HilbertSeries& a, const HilbertSeries& b);
  HilbertSeries scaled(const Rational& c) const;
  /// Multiplicative inverse; needs an integral-exponent series with nonzero
  /// constant term.
  HilbertSeries inverse() const;

  /// Exact equality of order and all coefficients.
  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b);

  /// "1 + q + 3q^2 + O(q^5)" style rendering.
  std::string to_string() const;

 private:
  static std::int64_t to_half_units(const Rational& exponent);
  void add_term(std::int64_t half_exp, const Rational& c);

  std::map<std::int64_t, Rational> coeffs_;
  std::int64_t order2_;
};

struct SeriesComparison {
  bool equal = false;
  Rational compared_through;  // min of the two orders
  std::optional<Rational> first_mismatch;
};

SeriesComparison compare_series(const HilbertSeries& a, const HilbertSeries& b);

}  // namespace coulomb
