#include <stdexcept>

#include "coulomb/error.hpp"
#include "coulomb/kostant.hpp"

namespace coulomb::kostant {

namespace {

std::size_t two_n(const KostantSetting& s) { return 2 * static_cast<std::size_t>(s.n); }

}  // namespace

bool in_Y(const KostantSetting& s, const RatVector& v, const RatMatrix& a) {
  if (v.size() != s.m_prime.dim() || a.rows() != s.m.dim() || a.cols() != s.m_prime.dim()) {
    throw ValidationError("in_Y: expected v in M' and A: M' -> M");
  }
  const RatMatrix c = moment_so(s, a);
  if (!is_cyclic(c, v)) return false;
  const auto values = krylov_pairings(s.m_prime, c, v, static_cast<unsigned>(two_n(s)));
  for (std::size_t k = 0; k < two_n(s); ++k) {
    if (values[k] != 0) return false;
  }
  return values[two_n(s)] == 1;
}

bool in_X(const KostantSetting& s, const RatVector& u, const RatMatrix& x) {
  if (u.size() != s.m.dim()) throw ValidationError("in_X: u must lie in M");
  if (!in_sp(s.m, x)) throw PreconditionError("in_X: x is not in sp(M)");
  if (!is_cyclic(x, u)) return false;
  const auto values = krylov_pairings(s.m, x, u, static_cast<unsigned>(two_n(s) - 1));
  for (std::size_t k = 0; k + 1 < two_n(s); ++k) {
    if (values[k] != 0) return false;
  }
  return values[two_n(s) - 1] == 1;
}

XPoint xi(const KostantSetting& s, const YPoint& p) {
  if (!in_Y(s, p)) throw PreconditionError("xi: point is not in Y");
  return {p.a * p.v, moment_sp(s, p.a)};
}

std::vector<Rational> KostantCoords::char_poly() const {
  const std::size_t n = coefficients.size();
  std::vector<Rational> c(2 * n + 1);
  c[2 * n] = 1;
  for (std::size_t i = 0; i < n; ++i) c[2 * n - 2 - 2 * i] = coefficients[i];
  return c;
}

KostantCoords kostant_coords(const BilinearSpace& m, const RatMatrix& x) {
  if (!in_sp(m, x)) throw PreconditionError("kostant_coords: x is not in sp(M)");
  const auto c = x.char_poly();
  const std::size_t d = m.dim();
  for (std::size_t k = 1; k < d; k += 2) {
    if (c[k] != 0) throw std::logic_error("kostant_coords: odd characteristic coefficient of an sp element");
  }
  KostantCoords out;
  for (std::size_t k = d; k >= 2; k -= 2) out.coefficients.push_back(c[k - 2]);
  return out;
}

EtaResult eta(const KostantSetting& s, const XPoint& p) {
  if (!in_X(s, p)) throw PreconditionError("eta: point is not in X");
  const std::size_t n = static_cast<std::size_t>(s.n);
  std::vector<RatVector> powers{p.u};
  for (std::size_t k = 1; k < 2 * n; ++k) powers.push_back(p.x * powers.back());

  std::vector<RatVector> columns(powers.begin(), powers.begin() + static_cast<std::ptrdiff_t>(n + 1));
  for (std::size_t j = 1; j < n; ++j) {
    const std::size_t col = n + j;
    const std::size_t partner = n - 1 - j;
    const Rational lead = (partner % 2 == 0) ? 1 : -1;
    // Unknowns: coefficients of x^{col-2t} u, t = 1..j.
    RatMatrix system(col, j);
    RatVector rhs(col);
    for (std::size_t i = 0; i < col; ++i) {
      const auto& earlier = columns[i];
      rhs[i] = (i == partner ? Rational(1) : Rational(0)) - lead * s.m.pair(earlier, powers[col]);
      for (std::size_t t = 1; t <= j; ++t) system(i, t - 1) = s.m.pair(earlier, powers[col - 2 * t]);
    }
    RatVector coeff;
    std::size_t rank = 0;
    if (!solve_linear(system, rhs, coeff, &rank) || rank != j) {
      throw std::logic_error("eta: singular correction system for column " + std::to_string(col));
    }
    RatVector c = powers[col];
    for (auto& e : c) e *= lead;
    for (std::size_t t = 1; t <= j; ++t) {
      for (std::size_t r = 0; r < c.size(); ++r) c[r] += coeff[t - 1] * powers[col - 2 * t][r];
    }
    columns.push_back(std::move(c));
  }
  return {RatMatrix::from_columns(columns), kostant_coords(s.m, p.x)};
}

}  // namespace coulomb::kostant
