#include "coulomb/series.hpp"

#include <algorithm>
#include <sstream>

#include "coulomb/error.hpp"

namespace coulomb {

namespace {

Rational half_units_to_rational(std::int64_t h) {
  Rational q(h, 2);
  q.canonicalize();
  return q;
}

std::int64_t floor_twice(const Rational& q) {
  Integer twice_num = q.get_num() * 2;
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), twice_num.get_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

std::string exponent_text(const Rational& e) {
  if (e == 1) return "q";
  std::string s = e.get_str();
  return is_integer(e) ? "q^" + s : "q^(" + s + ")";
}

}  // namespace

HilbertSeries::HilbertSeries(const Rational& order) : order2_(floor_twice(order)) {}

std::int64_t HilbertSeries::to_half_units(const Rational& exponent) {
  Rational twice = exponent * 2;
  if (!is_integer(twice)) {
    throw ValidationError("series exponent " + exponent.get_str() + " is not in (1/2)Z");
  }
  return twice.get_num().get_si();
}

void HilbertSeries::add_term(std::int64_t half_exp, const Rational& c) {
  if (half_exp > order2_ || c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(half_exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

HilbertSeries HilbertSeries::one(const Rational& order) { return monomial(0, 1, order); }

HilbertSeries HilbertSeries::monomial(const Rational& exponent, const Rational& coefficient, const Rational& order) {
  HilbertSeries s(order);
  s.add_term(to_half_units(exponent), coefficient);
  return s;
}

HilbertSeries HilbertSeries::from_rational_function(const std::vector<Rational>& numerator,
                                                    const std::vector<Rational>& denominator,
                                                    const Rational& order) {
  HilbertSeries num(order), den(order);
  for (std::size_t i = 0; i < numerator.size(); ++i) num.add_term(2 * static_cast<std::int64_t>(i), numerator[i]);
  for (std::size_t i = 0; i < denominator.size(); ++i) den.add_term(2 * static_cast<std::int64_t>(i), denominator[i]);
  return num * den.inverse();
}

Rational HilbertSeries::order() const { return half_units_to_rational(order2_); }

Rational HilbertSeries::coefficient(const Rational& exponent) const {
  const std::int64_t h = to_half_units(exponent);
  if (h > order2_) throw ValidationError("coefficient of q^" + exponent.get_str() + " is beyond the truncation order");
  auto it = coeffs_.find(h);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

std::vector<std::pair<Rational, Rational>> HilbertSeries::terms() const {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& [h, c] : coeffs_) out.emplace_back(half_units_to_rational(h), c);
  return out;
}

std::vector<Rational> HilbertSeries::dense() const {
  std::vector<Rational> out;
  for (std::int64_t h = 0; h <= order2_; h += 2) {
    auto it = coeffs_.find(h);
    out.push_back(it == coeffs_.end() ? Rational(0) : it->second);
  }
  return out;
}

bool HilbertSeries::has_half_integral_exponents() const {
  return std::any_of(coeffs_.begin(), coeffs_.end(), [](const auto& t) { return t.first % 2 != 0; });
}

bool HilbertSeries::has_nonnegative_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const auto& t) { return t.second > 0 && is_integer(t.second); });
}

HilbertSeries HilbertSeries::truncated(const Rational& new_order) const {
  HilbertSeries out(*this);
  out.order2_ = std::min(order2_, floor_twice(new_order));
  out.coeffs_.erase(out.coeffs_.upper_bound(out.order2_), out.coeffs_.end());
  return out;
}

HilbertSeries HilbertSeries::shifted(const Rational& exponent) const {
  const std::int64_t h = to_half_units(exponent);
  HilbertSeries out(half_units_to_rational(order2_ + h));
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e + h, c);
  return out;
}

HilbertSeries& HilbertSeries::operator+=(const HilbertSeries& rhs) {
  order2_ = std::min(order2_, rhs.order2_);
  coeffs_.erase(coeffs_.upper_bound(order2_), coeffs_.end());
  for (const auto& [h, c] : rhs.coeffs_) add_term(h, c);
  return *this;
}

HilbertSeries operator*(const HilbertSeries& a, const HilbertSeries& b) {
  // Valuation of the unknown tail is at least order + 1/2.
  auto valuation = [](const HilbertSeries& s) {
    return s.coeffs_.empty() ? s.order2_ + 1 : s.coeffs_.begin()->first;
  };
  const std::int64_t order2 = std::min(a.order2_ + valuation(b), b.order2_ + valuation(a));
  HilbertSeries out(half_units_to_rational(order2));
  for (const auto& [ha, ca] : a.coeffs_) {
    for (const auto& [hb, cb] : b.coeffs_) {
      if (ha + hb > order2) break;
      out.add_term(ha + hb, ca * cb);
    }
  }
  return out;
}

HilbertSeries HilbertSeries::scaled(const Rational& c) const {
  HilbertSeries out(half_units_to_rational(order2_));
  for (const auto& [h, x] : coeffs_) out.add_term(h, x * c);
  return out;
}

HilbertSeries HilbertSeries::inverse() const {
  if (has_half_integral_exponents()) throw ValidationError("inverse: half-integral exponents");
  auto it = coeffs_.find(0);
  if (it == coeffs_.end() || coeffs_.begin()->first < 0) {
    throw ValidationError("inverse: series needs a nonzero constant term and no negative exponents");
  }
  const std::int64_t top = order2_ / 2 - (order2_ < 0 && order2_ % 2 != 0 ? 1 : 0);
  const std::vector<Rational> a = dense();
  std::vector<Rational> inv(a.size());
  if (top >= 0) {
    const Rational a0_inv = 1 / a[0];
    inv[0] = a0_inv;
    for (std::size_t n = 1; n < a.size(); ++n) {
      Rational s = 0;
      for (std::size_t k = 1; k <= n; ++k) {
        if (a[k] != 0) s += a[k] * inv[n - k];
      }
      inv[n] = -s * a0_inv;
    }
  }
  HilbertSeries out(half_units_to_rational(order2_));
  for (std::size_t n = 0; n < inv.size(); ++n) out.add_term(2 * static_cast<std::int64_t>(n), inv[n]);
  return out;
}

bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
  return a.order2_ == b.order2_ && a.coeffs_ == b.coeffs_;
}

std::string HilbertSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [h, c] : coeffs_) {
    const Rational e = half_units_to_rational(h);
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (h == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << (is_integer(mag) ? "" : "*");
      os << exponent_text(e);
    }
    first = false;
  }
  if (!first) os << " + ";
  const std::int64_t next = has_half_integral_exponents() ? order2_ + 1 : (order2_ / 2 + 1) * 2;
  os << "O(" << exponent_text(half_units_to_rational(next)) << ")";
  return os.str();
}

SeriesComparison compare_series(const HilbertSeries& a, const HilbertSeries& b) {
  SeriesComparison out;
  out.compared_through = std::min(a.order(), b.order());
  const HilbertSeries ta = a.truncated(out.compared_through);
  const HilbertSeries tb = b.truncated(out.compared_through);
  auto ta_terms = ta.terms();
  auto tb_terms = tb.terms();
  std::size_t i = 0, j = 0;
  while (i < ta_terms.size() || j < tb_terms.size()) {
    if (j == tb_terms.size() || (i < ta_terms.size() && ta_terms[i].first < tb_terms[j].first)) {
      out.first_mismatch = ta_terms[i].first;
      return out;
    }
    if (i == ta_terms.size() || tb_terms[j].first < ta_terms[i].first) {
      out.first_mismatch = tb_terms[j].first;
      return out;
    }
    if (ta_terms[i].second != tb_terms[j].second) {
      out.first_mismatch = ta_terms[i].first;
      return out;
    }
    ++i;
    ++j;
  }
  out.equal = true;
  return out;
}

}  // namespace coulomb
