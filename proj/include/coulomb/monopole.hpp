#pragma once

// Monopole-formula Hilbert series of Coulomb branches.
//
//   H(q) = sum_{lambda dominant} q^{Delta(lambda)} P(q; lambda)
//   Delta(lambda) = -sum_{alpha > 0} |<alpha, lambda>| + 1/4 sum_chi |<chi, lambda>| m_chi
//
// with P(q; lambda) the Molien series of the stabilizer of lambda in W acting
// on X_* (x) Q. With this normalization the Cartan coordinate of SL(2) has
// degree 1, so the Casimir delta has degree 2 and the dressed monopole
// operators of SL(2) sit in degree m (N - 2).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coulomb/lie.hpp"
#include "coulomb/rational.hpp"
#include "coulomb/series.hpp"

namespace coulomb::monopole {

Rational delta(const lie::RootDatum& d, const lie::WeightRep& r, std::span<const std::int64_t> lambda);

/// (1/|G|) sum_{w in G} det(1 - q w)^{-1}, expanded through `order`.
/// Throws ValidationError when `elements` is not closed under products or
/// misses the identity.
HilbertSeries molien_series(std::span<const lie::WeylElement> elements, std::int64_t order);

/// {w in W : w lambda = lambda}.
std::vector<lie::WeylElement> stabilizer_weyl(const lie::RootDatum& d, std::span<const std::int64_t> lambda);

inline constexpr std::int64_t kDefaultShellCap = 64;

struct MonopoleOptions {
  /// Largest admissible enumeration box radius.
  std::int64_t shell_cap = kDefaultShellCap;
  /// Worker threads for the coweight enumeration; the result does not depend
  /// on this.
  unsigned threads = 1;
};

struct MonopoleSeries {
  HilbertSeries series{0};
  std::vector<std::string> warnings;
  std::int64_t box_radius = 0;
  std::size_t contributing_coweights = 0;
  bool anomaly_free = true;
};

/// Largest box radius that can hold a dominant coweight with
/// Delta <= order, certified from the rays of the hyperplane arrangement
/// {chi = 0} u {alpha_i = 0}: Delta is linear on each chamber of the
/// dominant cone, so its sublevel set is bounded by the extremal rays.
/// Throws ConvergenceError naming a dominant direction with Delta <= 0.
std::int64_t certified_box_radius(const lie::RootDatum& d, const lie::WeightRep& r, std::int64_t order);

/// Throws PreconditionError for non-symplectic input and ConvergenceError for
/// "not good" theories or a box radius beyond options.shell_cap. An anomalous
/// representation is processed with a warning; its series may carry
/// half-integral exponents.
MonopoleSeries monopole_hilbert_series(const lie::RootDatum& d, const lie::WeightRep& r, std::int64_t order,
                                       const MonopoleOptions& options = {});

/// Coulomb branch of SL(2) with matter M: generators delta, eta, xi and one
/// relation.
struct Sl2Presentation {
  enum class Branch { Zero, Positive };

  std::int64_t n = 0;
  Branch branch = Branch::Zero;
  std::int64_t degree_delta = 2;
  std::int64_t degree_eta = 0;
  std::int64_t degree_xi = 0;
  std::string relation;

  /// 2 deg xi = deg delta + 2 deg eta = (N - 1) deg delta (N > 0), resp.
  /// = deg eta (N = 0).
  bool is_homogeneous() const;
};

/// Throws ValidationError when the datum is not SL(2), PreconditionError when
/// the representation is not symplectic or N is not integral.
Sl2Presentation sl2_presentation(const lie::RootDatum& d, const lie::WeightRep& r);
Sl2Presentation sl2_presentation_for(std::int64_t n);

/// Graded count of delta^a eta^b xi^e (e in {0,1}):
/// (1 + q^{N-1}) / ((1 - q^2)(1 - q^{N-2})). Needs N >= 3.
HilbertSeries presentation_hilbert_series(const Sl2Presentation& p, std::int64_t order);

}  // namespace coulomb::monopole
