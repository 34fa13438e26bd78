#include <stdexcept>

#include "coulomb/error.hpp"
#include "coulomb/kostant.hpp"

namespace coulomb::kostant {

namespace {

void require_shape(const RatMatrix& a, std::size_t rows, std::size_t cols, const char* what) {
  if (a.rows() != rows || a.cols() != cols) {
    throw ValidationError(std::string(what) + ": expected a " + std::to_string(rows) + "x" + std::to_string(cols) +
                          " matrix, got " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

}  // namespace

BilinearSpace::BilinearSpace(RatMatrix form, FormKind kind) : form_(std::move(form)), kind_(kind) {
  if (!form_.square() || form_.rows() == 0) throw ValidationError("bilinear form must be a nonempty square matrix");
  const RatMatrix t = form_.transposed();
  if (kind_ == FormKind::Symplectic) {
    if (t != -form_) throw ValidationError("symplectic form is not antisymmetric");
    if (form_.rows() % 2 != 0) throw ValidationError("symplectic form on an odd-dimensional space");
  } else if (t != form_) {
    throw ValidationError("symmetric form is not symmetric");
  }
  try {
    inverse_ = form_.inverse();
  } catch (const std::domain_error&) {
    throw ValidationError("bilinear form is degenerate");
  }
}

BilinearSpace BilinearSpace::standard_symplectic(int n) {
  if (n < 1) throw ValidationError("standard_symplectic: n must be >= 1");
  const std::size_t d = 2 * static_cast<std::size_t>(n);
  RatMatrix j(d, d);
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    const int sign = (i + 1 == static_cast<std::size_t>(n) && n % 2 == 0) ? -1 : 1;
    j(i, d - 1 - i) = sign;
    j(d - 1 - i, i) = -sign;
  }
  return {std::move(j), FormKind::Symplectic};
}

BilinearSpace BilinearSpace::standard_symmetric(int n) {
  if (n < 0) throw ValidationError("standard_symmetric: n must be >= 0");
  const std::size_t d = 2 * static_cast<std::size_t>(n) + 1;
  RatMatrix s(d, d);
  for (std::size_t i = 0; i < d; ++i) s(i, d - 1 - i) = 1;
  s(static_cast<std::size_t>(n), static_cast<std::size_t>(n)) = n % 2 == 0 ? 1 : -1;
  return {std::move(s), FormKind::Symmetric};
}

Rational BilinearSpace::pair(const RatVector& a, const RatVector& b) const { return dot(a, form_ * b); }

KostantSetting KostantSetting::standard(int n) {
  return {n, BilinearSpace::standard_symplectic(n), BilinearSpace::standard_symmetric(n)};
}

RatMatrix adjoint(const RatMatrix& a, const BilinearSpace& source, const BilinearSpace& target) {
  require_shape(a, target.dim(), source.dim(), "adjoint");
  return source.form_inverse() * a.transposed() * target.form();
}

RatMatrix adjoint(const KostantSetting& s, const RatMatrix& a) { return adjoint(a, s.m_prime, s.m); }

RatMatrix moment_sp(const KostantSetting& s, const RatMatrix& a) { return a * adjoint(s, a); }

RatMatrix moment_so(const KostantSetting& s, const RatMatrix& a) { return adjoint(s, a) * a; }

bool in_sp(const BilinearSpace& m, const RatMatrix& x) {
  require_shape(x, m.dim(), m.dim(), "in_sp");
  return x.transposed() * m.form() == m.form().transposed() * x;
}

bool in_so(const BilinearSpace& m, const RatMatrix& c) {
  require_shape(c, m.dim(), m.dim(), "in_so");
  return c.transposed() * m.form() == -(m.form().transposed() * c);
}

bool preserves_form(const BilinearSpace& m, const RatMatrix& g) {
  require_shape(g, m.dim(), m.dim(), "preserves_form");
  return g.transposed() * m.form() * g == m.form();
}

bool is_cyclic(const RatMatrix& c, const RatVector& v) {
  if (!c.square() || c.rows() != v.size()) throw ValidationError("is_cyclic: shape mismatch");
  std::vector<RatVector> krylov{v};
  for (std::size_t k = 1; k < v.size(); ++k) krylov.push_back(c * krylov.back());
  return rank_of_columns(krylov) == v.size();
}

std::vector<Rational> krylov_pairings(const BilinearSpace& space, const RatMatrix& c, const RatVector& v,
                                      unsigned max_power) {
  std::vector<Rational> out;
  RatVector w = v;
  for (unsigned k = 0; k <= max_power; ++k) {
    out.push_back(space.pair(v, w));
    w = c * w;
  }
  return out;
}

std::pair<RatMatrix, RatMatrix> gl_moment(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw ValidationError("gl_moment: A must be n x n' and B n' x n");
  }
  return {a * b, b * a};
}

bool in_Z(const RatVector& v, const RatMatrix& a, const RatMatrix& b) {
  if (v.size() != b.rows()) throw ValidationError("in_Z: v must lie in the source of A");
  return is_cyclic(gl_moment(a, b).second, v);
}

RatMatrix companion(const std::vector<Rational>& c) {
  const std::size_t d = c.size();
  RatMatrix m(d, d);
  for (std::size_t i = 1; i < d; ++i) m(i, i - 1) = 1;
  for (std::size_t i = 0; i < d; ++i) m(i, d - 1) = -c[i];
  return m;
}

}  // namespace coulomb::kostant
