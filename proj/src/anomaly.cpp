#include "coulomb/anomaly.hpp"

#include <cstdlib>

#include "coulomb/error.hpp"

namespace coulomb::anomaly {

std::int64_t TraceForm::operator()(std::span<const std::int64_t> lambda, std::span<const std::int64_t> mu) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    for (std::size_t j = 0; j < gram.cols(); ++j) s += lambda[i] * gram(i, j) * mu[j];
  }
  return s;
}

TraceForm trace_form(const lie::RootDatum& d, const lie::WeightRep& r) {
  lie::check_rank(d, r);
  const std::size_t n = d.rank();
  lie::IntMatrix gram(n, n);
  for (const auto& [chi, m] : r.entries()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (chi[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) gram(i, j) += chi[i] * chi[j] * m;
    }
  }
  return {std::move(gram)};
}

AnomalyVerdict anomaly_check(const lie::RootDatum& d, const lie::WeightRep& r) {
  if (auto check = lie::is_symplectic_weights(d, r); !check) {
    throw PreconditionError("anomaly_check needs a symplectic representation (check is_symplectic_weights): " +
                            check.diagnostic);
  }
  const TraceForm b = trace_form(d, r);
  AnomalyVerdict v;
  v.half_integral = true;
  for (std::size_t i = 0; i < d.rank() && v.half_integral; ++i) {
    for (std::size_t j = 0; j < d.rank(); ++j) {
      if (b.gram(i, j) % 2 != 0) {
        v.half_integral = false;
        lie::Coweight ei(d.rank(), 0), ej(d.rank(), 0);
        ei[i] = 1;
        ej[j] = 1;
        v.witness = std::make_pair(ei, ej);
        break;
      }
    }
  }
  for (std::size_t k = 0; k < d.simple_coroots().size(); ++k) {
    const auto& coroot = d.simple_coroots()[k];
    const std::int64_t value = b(coroot, coroot);
    if (value % 4 != 0) v.coroot_failures.push_back({k, coroot, value});
  }
  v.pass = v.half_integral && v.coroot_failures.empty();
  return v;
}

Rational sl2_monopole_number(const lie::RootDatum& d, const lie::WeightRep& r) {
  lie::check_rank(d, r);
  if (d.rank() != 1 || d.simple_roots().size() != 1) {
    throw ValidationError("monopole number needs a rank-1 datum with one root, got '" + d.name() + "'");
  }
  const auto& coroot = d.simple_coroots().front();
  std::int64_t total = 0;
  for (const auto& [chi, m] : r.entries()) total += std::llabs(lie::pairing(chi, coroot)) * m;
  Rational n(total, 4);
  n.canonicalize();
  return n;
}

bool sl2_parity_criterion(const std::map<int, std::int64_t>& decomposition) {
  std::int64_t sum = 0;
  for (const auto& [k, m] : decomposition) {
    if (k % 4 == 1) sum += m;
  }
  return sum % 2 == 0;
}

}  // namespace coulomb::anomaly
