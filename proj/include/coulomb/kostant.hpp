#pragma once

// Orthosymplectic and mirabolic constructions on exact rational matrices.
//
// M has dimension 2n and a symplectic form <,>; M' has dimension 2n+1 and a
// symmetric form (,). Maps A go M' -> M, so that x = A A^t lies in sp(M) and
// C = A^t A lies in so(M').
//
//   Y = {(v, A) : v cyclic for C, (v, C^k v) = 0 for k < 2n, (v, C^{2n} v) = 1}
//   X = {(u, x) : u cyclic for x, <u, x^k u> = 0 for k < 2n-1, <u, x^{2n-1} u> = 1}
//   xi(v, A) = (A v, A A^t),   eta(u, x) = (symplectic frame g, coords of x)
//
// Standard forms are antidiagonal. On M the central pair carries the sign
// (-1)^{n-1}, which makes the Krylov vectors u, xu, ..., x^n u the first n+1
// columns of a symplectic frame. On M' the middle entry is (-1)^n, the sign
// for which Y has rational points.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "coulomb/matrix.hpp"

namespace coulomb::kostant {

enum class FormKind { Symplectic, Symmetric };

/// Finite-dimensional space with a fixed nondegenerate bilinear form.
class BilinearSpace {
 public:
  /// Throws ValidationError unless the form is (anti)symmetric, invertible
  /// and, for symplectic forms, of even size.
  BilinearSpace(RatMatrix form, FormKind kind);

  static BilinearSpace standard_symplectic(int n);  // dim 2n
  static BilinearSpace standard_symmetric(int n);   // dim 2n + 1

  std::size_t dim() const { return form_.rows(); }
  FormKind kind() const { return kind_; }
  const RatMatrix& form() const { return form_; }
  const RatMatrix& form_inverse() const { return inverse_; }

  Rational pair(const RatVector& a, const RatVector& b) const;

 private:
  RatMatrix form_;
  RatMatrix inverse_;
  FormKind kind_;
};

/// The pair (M, M') for a given n.
struct KostantSetting {
  int n = 1;
  BilinearSpace m;
  BilinearSpace m_prime;

  static KostantSetting standard(int n);
};

/// Adjoint of a: source -> target, i.e. the map a*: target -> source with
/// F_target(a s, t) = F_source(s, a* t). Equals F_source^{-1} a^T F_target.
RatMatrix adjoint(const RatMatrix& a, const BilinearSpace& source, const BilinearSpace& target);

/// A^t for A: M' -> M.
RatMatrix adjoint(const KostantSetting& s, const RatMatrix& a);

RatMatrix moment_sp(const KostantSetting& s, const RatMatrix& a);  // A A^t
RatMatrix moment_so(const KostantSetting& s, const RatMatrix& a);  // A^t A

/// <x m1, m2> = <x m2, m1>.
bool in_sp(const BilinearSpace& m, const RatMatrix& x);
/// (c m1, m2) = -(c m2, m1).
bool in_so(const BilinearSpace& m, const RatMatrix& c);
/// g^T F g = F.
bool preserves_form(const BilinearSpace& m, const RatMatrix& g);

/// v, Cv, ..., C^{dim-1} v span.
bool is_cyclic(const RatMatrix& c, const RatVector& v);

/// Values F(v, c^k v) for k = 0..max_power.
std::vector<Rational> krylov_pairings(const BilinearSpace& space, const RatMatrix& c, const RatVector& v,
                                      unsigned max_power);

struct YPoint {
  RatVector v;
  RatMatrix a;
};

struct XPoint {
  RatVector u;
  RatMatrix x;
};

bool in_Y(const KostantSetting& s, const RatVector& v, const RatMatrix& a);
inline bool in_Y(const KostantSetting& s, const YPoint& p) { return in_Y(s, p.v, p.a); }
/// Throws PreconditionError when x is not in sp(M).
bool in_X(const KostantSetting& s, const RatVector& u, const RatMatrix& x);
inline bool in_X(const KostantSetting& s, const XPoint& p) { return in_X(s, p.u, p.x); }

/// Throws PreconditionError unless in_Y.
XPoint xi(const KostantSetting& s, const YPoint& p);

/// Nontrivial characteristic polynomial coefficients of x in sp(M): the
/// coefficients of lambda^{2n-2}, lambda^{2n-4}, ..., lambda^0.
struct KostantCoords {
  std::vector<Rational> coefficients;

  /// Monic char poly, coefficients of lambda^0 .. lambda^{2n}.
  std::vector<Rational> char_poly() const;
  friend bool operator==(const KostantCoords&, const KostantCoords&) = default;
};

/// Throws PreconditionError when x is not in sp(M).
KostantCoords kostant_coords(const BilinearSpace& m, const RatMatrix& x);

struct EtaResult {
  RatMatrix g;
  KostantCoords sigma;
};

/// Symplectic frame from the Krylov vectors of (u, x). Columns 0..n are
/// x^k u; column n+j (j >= 1) is (-1)^{n-1-j} x^{n+j} u plus a combination of
/// x^{n+j-2}u, ..., x^{n-j}u fixed by <C_{n-1-j}, C_{n+j}> = 1 and
/// orthogonality to every other earlier column. Throws PreconditionError
/// unless in_X.
EtaResult eta(const KostantSetting& s, const XPoint& p);

std::pair<RatMatrix, RatMatrix> gl_moment(const RatMatrix& a, const RatMatrix& b);  // (AB, BA)
/// v cyclic for BA.
bool in_Z(const RatVector& v, const RatMatrix& a, const RatMatrix& b);

/// Companion matrix of the monic polynomial with lower coefficients `c`
/// (c_0..c_{d-1}); e_0 is cyclic for it.
RatMatrix companion(const std::vector<Rational>& c);

// Sampling. All helpers draw from the caller's engine; given the same seed
// they produce the same matrices on every platform.
using Engine = std::mt19937_64;

/// m -> m + c <w, m> w.
RatMatrix symplectic_transvection(const BilinearSpace& m, const RatVector& w, const Rational& c);
/// m -> m - 2 (w, m)/(w, w) w; needs (w, w) != 0.
RatMatrix orthogonal_reflection(const BilinearSpace& m, const RatVector& w);

RatMatrix random_integer_matrix(std::size_t rows, std::size_t cols, Engine& rng, int bound = 2);
RatMatrix random_sp_element(const BilinearSpace& m, Engine& rng, int transvections = 3);
RatMatrix random_so_element(const BilinearSpace& m, Engine& rng, int reflection_pairs = 1);

/// Stored seed point of Y for n in {1, 2}; throws ValidationError otherwise.
YPoint seed_y_point(int n);
YPoint random_y_point(const KostantSetting& s, Engine& rng);
YPoint random_y_point(int n, std::uint64_t seed);

/// (h v, g A h^{-1}).
YPoint transport(const YPoint& p, const RatMatrix& g, const RatMatrix& h);
/// (g u, g x g^{-1}).
XPoint transport(const XPoint& p, const RatMatrix& g);

}  // namespace coulomb::kostant
