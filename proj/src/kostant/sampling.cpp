#include "coulomb/error.hpp"
#include "coulomb/kostant.hpp"

namespace coulomb::kostant {

namespace {

// Portable draws: the std distributions are implementation-defined.
std::int64_t draw(Engine& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(rng() % span);
}

RatVector random_nonzero_vector(std::size_t dim, Engine& rng) {
  RatVector w(dim);
  bool nonzero = false;
  while (!nonzero) {
    for (auto& x : w) {
      x = Rational(static_cast<long>(draw(rng, -1, 1)));
      nonzero = nonzero || x != 0;
    }
  }
  return w;
}

RatMatrix integer_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  RatMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

}  // namespace

RatMatrix symplectic_transvection(const BilinearSpace& m, const RatVector& w, const Rational& c) {
  // I + c w (w^T F)
  const RatVector row = m.form().transposed() * w;
  RatMatrix t = RatMatrix::identity(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) t(i, j) += c * w[i] * row[j];
  }
  return t;
}

RatMatrix orthogonal_reflection(const BilinearSpace& m, const RatVector& w) {
  const Rational norm = m.pair(w, w);
  if (norm == 0) throw ValidationError("orthogonal_reflection: isotropic vector");
  const RatVector row = m.form().transposed() * w;
  RatMatrix r = RatMatrix::identity(m.dim());
  const Rational f = Rational(2) / norm;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) r(i, j) -= f * w[i] * row[j];
  }
  return r;
}

RatMatrix random_integer_matrix(std::size_t rows, std::size_t cols, Engine& rng, int bound) {
  RatMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = Rational(static_cast<long>(draw(rng, -bound, bound)));
  }
  return a;
}

RatMatrix random_sp_element(const BilinearSpace& m, Engine& rng, int transvections) {
  static const Rational kParameters[] = {Rational(1), Rational(-1), Rational(2), Rational(1, 2)};
  RatMatrix g = RatMatrix::identity(m.dim());
  for (int k = 0; k < transvections; ++k) {
    const RatVector w = random_nonzero_vector(m.dim(), rng);
    const Rational& c = kParameters[draw(rng, 0, 3)];
    g = symplectic_transvection(m, w, c) * g;
  }
  return g;
}

RatMatrix random_so_element(const BilinearSpace& m, Engine& rng, int reflection_pairs) {
  RatMatrix h = RatMatrix::identity(m.dim());
  for (int k = 0; k < 2 * reflection_pairs; ++k) {
    RatVector w = random_nonzero_vector(m.dim(), rng);
    while (m.pair(w, w) == 0) w = random_nonzero_vector(m.dim(), rng);
    h = orthogonal_reflection(m, w) * h;
  }
  return h;
}

YPoint seed_y_point(int n) {
  // Frozen from tests/oracles/find_seed_points.py.
  switch (n) {
    case 1:
      return {{1, 0, 0}, integer_matrix({{-1, 0, -1}, {0, -1, 0}})};
    case 2:
      return {{1, 0, 0, 0, 0},
              integer_matrix({{1, 1, 1, -1, 0}, {1, 1, 0, -1, 0}, {-1, -1, 1, 0, 0}, {-1, 0, 0, 0, 0}})};
    default:
      throw ValidationError("no stored Y seed point for n = " + std::to_string(n) +
                            " (supported: 1, 2); supply a seed point for larger n");
  }
}

YPoint random_y_point(const KostantSetting& s, Engine& rng) {
  const YPoint seed = seed_y_point(s.n);
  const RatMatrix g = random_sp_element(s.m, rng);
  const RatMatrix h = random_so_element(s.m_prime, rng);
  return transport(seed, g, h);
}

YPoint random_y_point(int n, std::uint64_t seed) {
  Engine rng(seed);
  return random_y_point(KostantSetting::standard(n), rng);
}

YPoint transport(const YPoint& p, const RatMatrix& g, const RatMatrix& h) {
  return {h * p.v, g * p.a * h.inverse()};
}

XPoint transport(const XPoint& p, const RatMatrix& g) { return {g * p.u, g * p.x * g.inverse()}; }

}  // namespace coulomb::kostant
