#include <algorithm>

#include "coulomb/error.hpp"
#include "coulomb/lie.hpp"

namespace coulomb::lie {

namespace {

Weight negated(const Weight& chi) {
  Weight out = chi;
  for (auto& c : out) c = -c;
  return out;
}

bool is_zero(const Weight& chi) {
  return std::all_of(chi.begin(), chi.end(), [](std::int64_t c) { return c == 0; });
}

bool first_nonzero_positive(const Weight& chi) {
  for (auto c : chi) {
    if (c != 0) return c > 0;
  }
  return false;
}

const Factor& factor_at(const RootDatum& d, std::size_t factor) {
  if (factor >= d.factors().size()) {
    throw ValidationError("factor index " + std::to_string(factor) + " out of range for '" + d.name() + "' (" +
                          std::to_string(d.factors().size()) + " factors)");
  }
  return d.factors()[factor];
}

// Weight of the datum supported on the coordinates of one factor.
Weight embed(const RootDatum& d, const Factor& f, const Weight& local) {
  Weight out(d.rank(), 0);
  std::copy(local.begin(), local.end(), out.begin() + static_cast<std::ptrdiff_t>(f.offset));
  return out;
}

}  // namespace

WeightRep::WeightRep(std::size_t rank, const std::vector<std::pair<Weight, std::int64_t>>& entries) : rank_(rank) {
  for (const auto& [chi, m] : entries) add(chi, m);
}

void WeightRep::add(const Weight& chi, std::int64_t multiplicity) {
  if (chi.size() != rank_) {
    throw ValidationError("weight of length " + std::to_string(chi.size()) + " in a rank-" + std::to_string(rank_) +
                          " representation");
  }
  if (multiplicity <= 0) throw ValidationError("multiplicities must be positive");
  entries_[chi] += multiplicity;
}

std::int64_t WeightRep::dimension() const {
  std::int64_t n = 0;
  for (const auto& [chi, m] : entries_) n += m;
  return n;
}

std::int64_t WeightRep::multiplicity(const Weight& chi) const {
  auto it = entries_.find(chi);
  return it == entries_.end() ? 0 : it->second;
}

WeightRep sl2_irrep(const RootDatum& d, int k, std::size_t factor) {
  if (k < 0) throw ValidationError("sl2_irrep: highest weight must be non-negative");
  const Factor& f = factor_at(d, factor);
  if (f.root_count != 1) {
    throw ValidationError("sl2_irrep: factor '" + f.name + "' does not have exactly one simple root");
  }
  const Weight& alpha = d.simple_roots()[f.first_root];
  WeightRep r(d.rank());
  for (int j = k; j >= -k; j -= 2) {
    Weight chi(d.rank(), 0);
    for (std::size_t i = 0; i < chi.size(); ++i) {
      const std::int64_t twice = static_cast<std::int64_t>(j) * alpha[i];
      if (twice % 2 != 0) {
        throw ValidationError("sl2_irrep: V^" + std::to_string(k) + " has non-integral weights on '" + f.name +
                              "' (the lattice does not contain alpha/2)");
      }
      chi[i] = twice / 2;
    }
    r.add(chi, 1);
  }
  return r;
}

WeightRep defining_rep(const RootDatum& d, std::size_t factor) {
  const Factor& f = factor_at(d, factor);
  if (!f.preset) throw ValidationError("defining_rep: factor '" + f.name + "' is not a preset");
  const std::size_t r = f.rank;
  WeightRep out(d.rank());
  auto eps = [&](std::size_t i, std::int64_t sign) {
    Weight w(r, 0);
    w[i] = sign;
    return embed(d, f, w);
  };
  switch (*f.preset) {
    case Preset::SL:
      for (std::size_t k = 0; k <= r; ++k) {
        Weight w(r, 0);
        if (k < r) w[k] += 1;
        if (k > 0) w[k - 1] -= 1;
        out.add(embed(d, f, w), 1);
      }
      break;
    case Preset::PGL:
      throw ValidationError("defining_rep: " + f.name + " has no tautological representation");
    case Preset::Sp:
      for (std::size_t i = 0; i < r; ++i) {
        out.add(eps(i, 1), 1);
        out.add(eps(i, -1), 1);
      }
      break;
    case Preset::SO:
      for (std::size_t i = 0; i < r; ++i) {
        out.add(eps(i, 1), 1);
        out.add(eps(i, -1), 1);
      }
      if (f.size % 2 == 1) out.add(Weight(d.rank(), 0), 1);
      break;
    case Preset::GL:
    case Preset::Torus:
      for (std::size_t i = 0; i < r; ++i) out.add(eps(i, 1), 1);
      break;
  }
  return out;
}

WeightRep dual(const WeightRep& r) {
  WeightRep out(r.rank());
  for (const auto& [chi, m] : r.entries()) out.add(negated(chi), m);
  return out;
}

WeightRep tensor(const WeightRep& a, const WeightRep& b) {
  if (a.rank() != b.rank()) throw ValidationError("tensor: rank mismatch");
  WeightRep out(a.rank());
  for (const auto& [x, m] : a.entries()) {
    for (const auto& [y, n] : b.entries()) {
      Weight s = x;
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += y[i];
      out.add(s, m * n);
    }
  }
  return out;
}

WeightRep direct_sum(const WeightRep& a, const WeightRep& b) {
  if (a.rank() != b.rank()) throw ValidationError("direct_sum: rank mismatch");
  WeightRep out = a;
  for (const auto& [chi, m] : b.entries()) out.add(chi, m);
  return out;
}

WeightRep cotangent(const WeightRep& n) { return direct_sum(n, dual(n)); }

bool is_weyl_invariant(const RootDatum& d, const WeightRep& r) {
  for (std::size_t i = 0; i < d.simple_roots().size(); ++i) {
    const auto& alpha = d.simple_roots()[i];
    const auto& coroot = d.simple_coroots()[i];
    for (const auto& [chi, m] : r.entries()) {
      Weight image = chi;
      const std::int64_t c = pairing(chi, coroot);
      for (std::size_t k = 0; k < image.size(); ++k) image[k] -= c * alpha[k];
      if (r.multiplicity(image) != m) return false;
    }
  }
  return true;
}

SymplecticCheck is_symplectic_weights(const RootDatum& d, const WeightRep& r) {
  check_rank(d, r);
  for (const auto& [chi, m] : r.entries()) {
    if (r.multiplicity(negated(chi)) != m) {
      return {false, "multiplicity of a weight differs from that of its negative"};
    }
  }
  if (r.dimension() % 2 != 0) return {false, "odd total dimension"};
  if (r.multiplicity(Weight(r.rank(), 0)) % 2 != 0) return {false, "zero weight has odd multiplicity"};
  if (!is_weyl_invariant(d, r)) return {false, "weight multiset is not Weyl-invariant"};
  if (d.rank() == 1 && d.simple_roots().size() == 1) {
    std::map<int, std::int64_t> decomposition;
    try {
      decomposition = sl2_isotypic_decomposition(d, r);
    } catch (const ValidationError& e) {
      return {false, e.what()};
    }
    for (const auto& [k, m] : decomposition) {
      if (k % 2 == 0 && m % 2 != 0) {
        return {false, "dim M^" + std::to_string(k) + " = " + std::to_string(m) + " is odd for even k"};
      }
    }
  }
  return {};
}

std::map<int, std::int64_t> sl2_isotypic_decomposition(const RootDatum& d, const WeightRep& r) {
  check_rank(d, r);
  if (d.rank() != 1 || d.simple_roots().size() != 1) {
    throw ValidationError("isotypic decomposition needs a rank-1 datum with one root, got '" + d.name() + "'");
  }
  const auto& coroot = d.simple_coroots().front();
  std::map<std::int64_t, std::int64_t> remaining;  // SL(2) weight -> multiplicity
  for (const auto& [chi, m] : r.entries()) remaining[pairing(chi, coroot)] += m;

  std::map<int, std::int64_t> out;
  while (!remaining.empty()) {
    auto top = std::prev(remaining.end());
    const std::int64_t k = top->first;
    const std::int64_t m = top->second;
    if (k < 0) throw ValidationError("weight multiset is not a sum of weight strings (unpaired weight " +
                                     std::to_string(k) + ")");
    for (std::int64_t j = k; j >= -k; j -= 2) {
      auto it = remaining.find(j);
      if (it == remaining.end() || it->second < m) {
        throw ValidationError("weight multiset is not a sum of weight strings (string of V^" + std::to_string(k) +
                              " breaks at weight " + std::to_string(j) + ")");
      }
      if ((it->second -= m) == 0) remaining.erase(it);
    }
    out[static_cast<int>(k)] += m;
  }
  return out;
}

WeightRep sl2_reconstruct(const RootDatum& d, const std::map<int, std::int64_t>& decomposition) {
  WeightRep out(d.rank());
  for (const auto& [k, m] : decomposition) {
    const WeightRep irrep = sl2_irrep(d, k);
    for (const auto& [chi, one] : irrep.entries()) out.add(chi, one * m);
  }
  return out;
}

std::optional<WeightRep> weight_level_cotangent_split(const WeightRep& r) {
  WeightRep half(r.rank());
  for (const auto& [chi, m] : r.entries()) {
    if (is_zero(chi)) {
      if (m % 2 != 0) return std::nullopt;
      half.add(chi, m / 2);
    } else if (first_nonzero_positive(chi)) {
      if (r.multiplicity(negated(chi)) != m) return std::nullopt;
      half.add(chi, m);
    } else if (r.multiplicity(negated(chi)) != m) {
      return std::nullopt;
    }
  }
  return half;
}

}  // namespace coulomb::lie
