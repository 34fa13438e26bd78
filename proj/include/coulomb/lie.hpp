#pragma once

// Root data, Weyl groups and weight-multiset representations.
//
// Conventions: the coweight lattice X_* is Z^r with a fixed basis. Coweights
// are column vectors, weights are covectors, and the pairing <chi, lambda> is
// the dot product of coordinate vectors. Weyl elements act on coweights by
// matrix multiplication; a weight chi is carried to chi . w.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coulomb::lie {

using Coweight = std::vector<std::int64_t>;
using Weight = std::vector<std::int64_t>;

std::int64_t pairing(std::span<const std::int64_t> weight, std::span<const std::int64_t> coweight);

/// Dense square or rectangular integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<std::int64_t>& data() const { return data_; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  Coweight apply(std::span<const std::int64_t> v) const;
  /// chi -> chi . M (row vector times matrix).
  Weight apply_right(std::span<const std::int64_t> chi) const;
  IntMatrix transposed() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

using WeylElement = IntMatrix;

enum class Preset { SL, PGL, Sp, SO, GL, Torus };

std::string preset_name(Preset p);
std::optional<Preset> parse_preset(std::string_view name);

/// Bookkeeping for one factor of a product datum: which coordinates it owns
/// and (for presets) which classical group it came from.
struct Factor {
  std::optional<Preset> preset;
  int size = 0;  // matrix size n of SL(n), Sp(n), SO(n), ...; rank for tori
  std::size_t offset = 0;
  std::size_t rank = 0;
  std::size_t first_root = 0;
  std::size_t root_count = 0;
  std::string name;
};

class RootDatum {
 public:
  /// Validates the Cartan conditions and finiteness; throws ValidationError
  /// naming the violated condition.
  static RootDatum from_simple(std::string name, std::size_t rank, std::vector<Weight> simple_roots,
                               std::vector<Coweight> simple_coroots);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return rank_; }
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<Coweight>& simple_coroots() const { return simple_coroots_; }
  /// All roots (both signs), sorted.
  const std::vector<Weight>& roots() const { return roots_; }
  const std::vector<Factor>& factors() const { return factors_; }

  /// a_ij = <alpha_i, alpha_j^vee>.
  IntMatrix cartan_matrix() const;
  /// s_i(lambda) = lambda - <alpha_i, lambda> alpha_i^vee.
  WeylElement simple_reflection(std::size_t i) const;
  std::vector<WeylElement> simple_reflections() const;

  bool is_dominant(std::span<const std::int64_t> lambda) const;

  friend RootDatum product(const RootDatum& a, const RootDatum& b);
  friend RootDatum make_root_datum(Preset preset, int size);

 private:
  RootDatum() = default;

  std::string name_;
  std::size_t rank_ = 0;
  std::vector<Weight> simple_roots_;
  std::vector<Coweight> simple_coroots_;
  std::vector<Weight> roots_;
  std::vector<Factor> factors_;
};

/// Classical presets. `size` is the matrix size (SL(2), Sp(4), SO(5), GL(3));
/// for Torus it is the rank.
///
/// SL(n) uses the simple coroots as basis of X_*; PGL(n) uses the fundamental
/// coweights (so alpha^vee = 2 lambda_0 for PGL(2)); Sp, SO, GL and tori use
/// the standard epsilon^vee basis.
RootDatum make_root_datum(Preset preset, int size);

/// Block direct sum: concatenated lattices and roots.
RootDatum product(const RootDatum& a, const RootDatum& b);

inline constexpr std::size_t kDefaultWeylCap = 1'000'000;

/// Closure of the simple reflections; throws ValidationError past `cap`.
std::vector<WeylElement> weyl_elements(const RootDatum& d, std::size_t cap = kDefaultWeylCap);

/// Dominant coweights in the coordinate box max|lambda_i| <= bound.
std::vector<Coweight> dominant_coweights(const RootDatum& d, std::int64_t bound);

/// Weight multiset in canonical merged form (sorted, distinct weights,
/// positive multiplicities).
class WeightRep {
 public:
  using Entries = std::map<Weight, std::int64_t>;

  explicit WeightRep(std::size_t rank) : rank_(rank) {}
  /// Merges duplicate weights; rejects wrong-length weights and
  /// non-positive multiplicities.
  WeightRep(std::size_t rank, const std::vector<std::pair<Weight, std::int64_t>>& entries);

  std::size_t rank() const { return rank_; }
  const Entries& entries() const { return entries_; }
  std::int64_t dimension() const;
  std::int64_t multiplicity(const Weight& chi) const;
  bool empty() const { return entries_.empty(); }

  void add(const Weight& chi, std::int64_t multiplicity);

  friend bool operator==(const WeightRep&, const WeightRep&) = default;

 private:
  std::size_t rank_;
  Entries entries_;
};

/// Irreducible SL(2)-module V^k on the A1 factor `factor` of `d`: weights
/// (j/2) alpha for j = k, k-2, ..., -k. Throws if those are not integral
/// covectors (e.g. odd k on PGL(2)).
WeightRep sl2_irrep(const RootDatum& d, int k, std::size_t factor = 0);
/// Tautological representation of a preset factor.
WeightRep defining_rep(const RootDatum& d, std::size_t factor = 0);
WeightRep dual(const WeightRep& r);
WeightRep tensor(const WeightRep& a, const WeightRep& b);
WeightRep direct_sum(const WeightRep& a, const WeightRep& b);
/// N (+) N^*.
WeightRep cotangent(const WeightRep& n);

/// True iff the multiset is fixed by every simple reflection.
bool is_weyl_invariant(const RootDatum& d, const WeightRep& r);

struct SymplecticCheck {
  bool ok = true;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

/// Weight-level symplecticity: m_chi = m_{-chi}, even total dimension, even
/// zero-weight multiplicity, Weyl invariance. On a rank-1 datum with one root
/// the exact SL(2) criterion (dim M^k even for k even) is applied as well.
SymplecticCheck is_symplectic_weights(const RootDatum& d, const WeightRep& r);

/// k -> dim M^k for a representation of a rank-1 datum with a single root,
/// peeled from the highest weight. Throws ValidationError when the multiset is
/// not a sum of weight strings.
std::map<int, std::int64_t> sl2_isotypic_decomposition(const RootDatum& d, const WeightRep& r);
/// Inverse of the decomposition: sum of sl2_irrep(k)^{dim M^k}.
WeightRep sl2_reconstruct(const RootDatum& d, const std::map<int, std::int64_t>& decomposition);

/// N with r = N (+) N^* as multisets: one weight from each +-pair (the one
/// whose first nonzero coordinate is positive) and half the zero weights.
std::optional<WeightRep> weight_level_cotangent_split(const WeightRep& r);

void check_rank(const RootDatum& d, const WeightRep& r);

}  // namespace coulomb::lie
