#include "coulomb/monopole.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "coulomb/anomaly.hpp"
#include "coulomb/error.hpp"
#include "coulomb/matrix.hpp"

namespace coulomb::monopole {

namespace {

// 4 * Delta as an integer.
class DeltaEvaluator {
 public:
  DeltaEvaluator(const lie::RootDatum& d, const lie::WeightRep& r) : roots_(d.roots()) {
    for (const auto& [chi, m] : r.entries()) weights_.emplace_back(chi, m);
  }

  std::int64_t four_delta(std::span<const std::int64_t> lambda) const {
    std::int64_t s = 0;
    for (const auto& alpha : roots_) s -= 2 * std::llabs(lie::pairing(alpha, lambda));
    for (const auto& [chi, m] : weights_) s += std::llabs(lie::pairing(chi, lambda)) * m;
    return s;
  }

 private:
  std::vector<lie::Weight> roots_;
  std::vector<std::pair<lie::Weight, std::int64_t>> weights_;
};

Rational quarter(std::int64_t four_delta) {
  Rational q(four_delta, 4);
  q.canonicalize();
  return q;
}

std::string describe(std::span<const std::int64_t> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

RatMatrix to_rational(const lie::IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(static_cast<long>(m(i, j)));
  }
  return out;
}

lie::Weight primitive_normal(lie::Weight v) {
  std::int64_t g = 0;
  for (auto c : v) g = std::gcd(g, std::llabs(c));
  if (g == 0) return v;
  for (auto& c : v) c /= g;
  auto first = std::find_if(v.begin(), v.end(), [](std::int64_t c) { return c != 0; });
  if (*first < 0) {
    for (auto& c : v) c = -c;
  }
  return v;
}

lie::Coweight to_integer_vector(const RatVector& v) {
  lie::Coweight out;
  for (const auto& x : v) out.push_back(x.get_num().get_si());
  return out;
}

double binomial_estimate(std::size_t n, std::size_t k) {
  double c = 1;
  for (std::size_t i = 0; i < k; ++i) c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return c;
}

constexpr double kMaxRaySubsets = 5e6;

}  // namespace

Rational delta(const lie::RootDatum& d, const lie::WeightRep& r, std::span<const std::int64_t> lambda) {
  lie::check_rank(d, r);
  if (lambda.size() != d.rank()) throw ValidationError("delta: coweight has the wrong length");
  return quarter(DeltaEvaluator(d, r).four_delta(lambda));
}

HilbertSeries molien_series(std::span<const lie::WeylElement> elements, std::int64_t order) {
  if (elements.empty()) throw ValidationError("molien_series: empty element list");
  const std::size_t n = elements.front().rows();
  std::set<lie::WeylElement> group(elements.begin(), elements.end());
  if (group.size() != elements.size()) throw ValidationError("molien_series: repeated elements");
  if (!group.contains(lie::IntMatrix::identity(n))) throw ValidationError("molien_series: identity missing");
  for (const auto& a : elements) {
    for (const auto& b : elements) {
      if (!group.contains(a * b)) throw ValidationError("molien_series: element set is not closed under products");
    }
  }
  HilbertSeries sum(order);
  for (const auto& w : elements) {
    // det(1 - q w) = sum_k c_k q^{n-k} where det(t - w) = sum_k c_k t^k.
    const auto c = to_rational(w).char_poly();
    std::vector<Rational> det(n + 1);
    for (std::size_t k = 0; k <= n; ++k) det[n - k] = c[k];
    sum += HilbertSeries::from_rational_function({Rational(1)}, det, order);
  }
  return sum.scaled(Rational(1, static_cast<long>(elements.size())));
}

std::vector<lie::WeylElement> stabilizer_weyl(const lie::RootDatum& d, std::span<const std::int64_t> lambda) {
  std::vector<lie::WeylElement> out;
  for (auto& w : lie::weyl_elements(d)) {
    const auto image = w.apply(lambda);
    if (std::equal(image.begin(), image.end(), lambda.begin(), lambda.end())) out.push_back(std::move(w));
  }
  return out;
}

std::int64_t certified_box_radius(const lie::RootDatum& d, const lie::WeightRep& r, std::int64_t order) {
  lie::check_rank(d, r);
  const std::size_t rank = d.rank();
  if (rank == 0 || order < 0) return 0;
  const DeltaEvaluator evaluator(d, r);

  std::set<lie::Weight> normals;
  for (const auto& a : d.simple_roots()) normals.insert(primitive_normal(a));
  for (const auto& [chi, m] : r.entries()) {
    if (std::any_of(chi.begin(), chi.end(), [](std::int64_t c) { return c != 0; })) {
      normals.insert(primitive_normal(chi));
    }
  }
  const std::vector<lie::Weight> h(normals.begin(), normals.end());
  auto rows_matrix = [&](const std::vector<std::size_t>& idx) {
    RatMatrix m(idx.size(), rank);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = 0; j < rank; ++j) m(i, j) = Rational(static_cast<long>(h[idx[i]][j]));
    }
    return m;
  };

  std::vector<std::size_t> all(h.size());
  std::iota(all.begin(), all.end(), 0);
  if (rows_matrix(all).rank() < rank) {
    // Every weight and root vanishes on a common line: Delta = 0 along it.
    RatMatrix m = h.empty() ? RatMatrix(1, rank) : rows_matrix(all);
    const auto dir = to_integer_vector(kernel_vector(m));
    throw ConvergenceError("not good: Delta vanishes identically along the direction " + describe(dir));
  }
  const std::size_t k = rank - 1;
  if (binomial_estimate(h.size(), k) > kMaxRaySubsets) {
    throw ConvergenceError("hyperplane arrangement too large to certify the enumeration box (" +
                           std::to_string(h.size()) + " hyperplanes in rank " + std::to_string(rank) + ")");
  }

  Rational worst = 0;  // max |s|_inf / Delta(s) over candidate rays
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    RatMatrix m = k == 0 ? RatMatrix(1, rank) : rows_matrix(idx);
    if (m.rank() == k) {
      const auto base = to_integer_vector(kernel_vector(m));
      for (int sign : {1, -1}) {
        lie::Coweight s = base;
        for (auto& c : s) c *= sign;
        if (!d.is_dominant(s)) continue;
        const std::int64_t fd = evaluator.four_delta(s);
        if (fd <= 0) {
          throw ConvergenceError("not good: Delta(" + describe(s) + ") = " + quarter(fd).get_str() +
                                 " <= 0 along a dominant direction");
        }
        std::int64_t norm = 0;
        for (auto c : s) norm = std::max<std::int64_t>(norm, c < 0 ? -c : c);
        Rational ratio(4 * norm, fd);
        ratio.canonicalize();
        worst = std::max(worst, ratio);
      }
    }
    // Next k-combination of h.size() indices.
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == h.size() - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  const Rational bound = worst * Rational(static_cast<long>(order));
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  return f.get_si();
}

MonopoleSeries monopole_hilbert_series(const lie::RootDatum& d, const lie::WeightRep& r, std::int64_t order,
                                       const MonopoleOptions& options) {
  if (auto check = lie::is_symplectic_weights(d, r); !check) {
    throw PreconditionError("monopole_hilbert_series needs a symplectic representation: " + check.diagnostic);
  }
  if (order < 0) throw ValidationError("order must be non-negative");
  MonopoleSeries out;
  out.anomaly_free = anomaly::anomaly_check(d, r).pass;
  if (!out.anomaly_free) out.warnings.push_back("anomalous; exponents in 1/2 Z");

  const std::int64_t radius = certified_box_radius(d, r, order);
  if (radius > options.shell_cap) {
    throw ConvergenceError("enumeration box radius " + std::to_string(radius) + " exceeds the shell cap " +
                           std::to_string(options.shell_cap) + " (raise COULOMB_KIT_SHELL_CAP)");
  }
  out.box_radius = radius;

  const auto weyl = lie::weyl_elements(d);
  const DeltaEvaluator evaluator(d, r);
  const std::size_t rank = d.rank();
  const std::int64_t side = 2 * radius + 1;
  std::int64_t total = 1;
  for (std::size_t i = 0; i < rank; ++i) total *= side;

  // (4 Delta, stabilizer element indices) -> number of coweights.
  using Key = std::pair<std::int64_t, std::vector<std::uint32_t>>;
  using Tally = std::map<Key, std::size_t>;
  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(total)));
  std::vector<Tally> tallies(workers);
  auto work = [&](unsigned t) {
    const std::int64_t begin = total * t / workers;
    const std::int64_t end = total * (t + 1) / workers;
    lie::Coweight lambda(rank);
    for (std::int64_t code = begin; code < end; ++code) {
      std::int64_t c = code;
      for (std::size_t i = 0; i < rank; ++i) {
        lambda[i] = c % side - radius;
        c /= side;
      }
      if (!d.is_dominant(lambda)) continue;
      const std::int64_t fd = evaluator.four_delta(lambda);
      if (fd > 4 * order) continue;
      std::vector<std::uint32_t> stab;
      for (std::uint32_t w = 0; w < weyl.size(); ++w) {
        if (weyl[w].apply(lambda) == lambda) stab.push_back(w);
      }
      ++tallies[t][{fd, std::move(stab)}];
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  Tally merged;
  for (auto& t : tallies) {
    for (auto& [key, n] : t) merged[key] += n;
  }

  std::map<std::vector<std::uint32_t>, HilbertSeries> molien_cache;
  HilbertSeries sum(order);
  for (const auto& [key, count] : merged) {
    const auto& [fd, stab] = key;
    auto it = molien_cache.find(stab);
    if (it == molien_cache.end()) {
      std::vector<lie::WeylElement> group;
      for (auto w : stab) group.push_back(weyl[w]);
      it = molien_cache.emplace(stab, molien_series(group, order)).first;
    }
    sum += it->second.shifted(quarter(fd)).scaled(Rational(static_cast<long>(count)));
    out.contributing_coweights += count;
  }
  out.series = sum.truncated(order);
  if (out.anomaly_free && out.series.has_half_integral_exponents()) {
    out.warnings.push_back("anomaly-free representation with half-integral Delta on some dominant coweight");
  }
  return out;
}

bool Sl2Presentation::is_homogeneous() const {
  if (branch == Branch::Zero) return 2 * degree_xi == degree_delta + 2 * degree_eta && 2 * degree_xi == degree_eta;
  return 2 * degree_xi == degree_delta + 2 * degree_eta && 2 * degree_xi == (n - 1) * degree_delta;
}

Sl2Presentation sl2_presentation_for(std::int64_t n) {
  if (n < 0) throw ValidationError("monopole number must be non-negative");
  Sl2Presentation p;
  p.n = n;
  p.degree_delta = 2;
  p.degree_eta = n - 2;
  p.degree_xi = n - 1;
  if (n == 0) {
    p.branch = Sl2Presentation::Branch::Zero;
    p.relation = "xi^2 = delta*eta^2 + eta";
  } else {
    p.branch = Sl2Presentation::Branch::Positive;
    const std::int64_t e = n - 1;
    const std::string power = e == 0 ? "1" : e == 1 ? "delta" : "delta^" + std::to_string(e);
    p.relation = "xi^2 = delta*eta^2 - " + power;
  }
  return p;
}

Sl2Presentation sl2_presentation(const lie::RootDatum& d, const lie::WeightRep& r) {
  lie::check_rank(d, r);
  if (d.rank() != 1 || d.simple_roots().size() != 1 || d.simple_roots().front() != lie::Weight{2}) {
    throw ValidationError("sl2_presentation needs the SL(2) root datum, got '" + d.name() + "'");
  }
  if (auto check = lie::is_symplectic_weights(d, r); !check) {
    throw PreconditionError("sl2_presentation needs a symplectic representation: " + check.diagnostic);
  }
  const Rational n = anomaly::sl2_monopole_number(d, r);
  if (!is_integer(n)) {
    throw PreconditionError("N = " + n.get_str() + " must be integral (anomaly cancellation)");
  }
  if (!anomaly::anomaly_check(d, r).pass) throw PreconditionError("anomaly check fails");
  return sl2_presentation_for(n.get_num().get_si());
}

HilbertSeries presentation_hilbert_series(const Sl2Presentation& p, std::int64_t order) {
  if (p.n <= 2) {
    throw ValidationError("N = " + std::to_string(p.n) +
                          ": grading not positive; Hilbert series undefined as a power series");
  }
  const auto n = static_cast<std::size_t>(p.n);
  std::vector<Rational> numerator(n, Rational(0));  // 1 + q^{N-1}
  numerator[0] = 1;
  numerator[n - 1] += 1;
  // (1 - q^2)(1 - q^{N-2})
  std::vector<Rational> denominator(n + 1, Rational(0));
  denominator[0] += 1;
  denominator[2] -= 1;
  denominator[n - 2] -= 1;
  denominator[n] += 1;
  return HilbertSeries::from_rational_function(numerator, denominator, order);
}

}  // namespace coulomb::monopole
