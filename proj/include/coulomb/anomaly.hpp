#pragma once

// Trace form of a symplectic representation and the anomaly-cancellation
// verdict.
//
// The trace form B(lambda, mu) = sum_chi <chi,lambda><chi,mu> m_chi is the
// pullback of the trace form of sp(M) to the coweight lattice. The anomaly
// cancels iff B/2 is an integral bilinear form that takes even values on all
// coroots. Integrality is read off the Gram matrix (its entries are the values
// on a lattice basis). For evenness on coroots it suffices to test simple
// coroots: every coroot is W-conjugate to a simple one, B is W-invariant, and
// B/2(sum c_i a_i, same) == sum c_i^2 B/2(a_i, a_i) mod 2 once B/2 is integral.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "coulomb/lie.hpp"
#include "coulomb/rational.hpp"

namespace coulomb::anomaly {

struct TraceForm {
  lie::IntMatrix gram;

  std::int64_t operator()(std::span<const std::int64_t> lambda, std::span<const std::int64_t> mu) const;
};

struct CorootFailure {
  std::size_t index = 0;  // simple coroot index
  lie::Coweight coroot;
  std::int64_t value = 0;  // B(a^vee, a^vee), not divisible by 4
};

struct AnomalyVerdict {
  bool pass = false;
  bool half_integral = false;
  std::vector<CorootFailure> coroot_failures;
  /// First basis pair (e_i, e_j) with B(e_i, e_j) odd.
  std::optional<std::pair<lie::Coweight, lie::Coweight>> witness;
};

TraceForm trace_form(const lie::RootDatum& d, const lie::WeightRep& r);

/// Throws PreconditionError when r fails is_symplectic_weights.
AnomalyVerdict anomaly_check(const lie::RootDatum& d, const lie::WeightRep& r);

/// N = sum_chi |<chi, alpha^vee>| m_chi / 4 on a rank-1 datum with one root.
Rational sl2_monopole_number(const lie::RootDatum& d, const lie::WeightRep& r);

/// sum_l dim M^{4l+1} is even.
bool sl2_parity_criterion(const std::map<int, std::int64_t>& decomposition);

}  // namespace coulomb::anomaly
