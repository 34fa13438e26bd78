#include <algorithm>
#include <deque>
#include <set>

#include "coulomb/error.hpp"
#include "coulomb/lie.hpp"
#include "coulomb/matrix.hpp"

namespace coulomb::lie {

namespace {

constexpr std::size_t kRootOrbitCap = 100'000;

Weight unit(std::size_t rank, std::size_t i, std::int64_t value = 1) {
  Weight v(rank, 0);
  v[i] = value;
  return v;
}

Weight reflect_weight(const Weight& chi, const Weight& root, const Coweight& coroot) {
  const std::int64_t c = pairing(chi, coroot);
  Weight out = chi;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= c * root[k];
  return out;
}


// Orbit of the simple roots under the simple reflections.
std::vector<Weight> root_orbit(const std::vector<Weight>& roots, const std::vector<Coweight>& coroots) {
  std::set<Weight> seen(roots.begin(), roots.end());
  std::deque<Weight> queue(roots.begin(), roots.end());
  while (!queue.empty()) {
    Weight chi = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < roots.size(); ++i) {
      Weight next = reflect_weight(chi, roots[i], coroots[i]);
      if (seen.insert(next).second) {
        if (seen.size() > kRootOrbitCap) {
          throw ValidationError("root orbit exceeds " + std::to_string(kRootOrbitCap) +
                                " elements: Cartan matrix is not of finite type");
        }
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::int64_t pairing(std::span<const std::int64_t> weight, std::span<const std::int64_t> coweight) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < weight.size(); ++i) s += weight[i] * coweight[i];
  return s;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

Coweight IntMatrix::apply(std::span<const std::int64_t> v) const {
  Coweight out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

Weight IntMatrix::apply_right(std::span<const std::int64_t> chi) const {
  Weight out(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[j] += chi[i] * (*this)(i, j);
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

std::string preset_name(Preset p) {
  switch (p) {
    case Preset::SL: return "SL";
    case Preset::PGL: return "PGL";
    case Preset::Sp: return "Sp";
    case Preset::SO: return "SO";
    case Preset::GL: return "GL";
    case Preset::Torus: return "Torus";
  }
  return "?";
}

std::optional<Preset> parse_preset(std::string_view name) {
  for (Preset p : {Preset::SL, Preset::PGL, Preset::Sp, Preset::SO, Preset::GL, Preset::Torus}) {
    if (preset_name(p) == name) return p;
  }
  return std::nullopt;
}

RootDatum RootDatum::from_simple(std::string name, std::size_t rank, std::vector<Weight> simple_roots,
                                 std::vector<Coweight> simple_coroots) {
  if (simple_roots.size() != simple_coroots.size()) {
    throw ValidationError("root datum '" + name + "': " + std::to_string(simple_roots.size()) +
                          " simple roots but " + std::to_string(simple_coroots.size()) + " simple coroots");
  }
  for (std::size_t i = 0; i < simple_roots.size(); ++i) {
    if (simple_roots[i].size() != rank || simple_coroots[i].size() != rank) {
      throw ValidationError("root datum '" + name + "': simple root/coroot " + std::to_string(i) +
                            " does not have length " + std::to_string(rank));
    }
  }
  const std::size_t l = simple_roots.size();
  auto independent = [&](const std::vector<std::vector<std::int64_t>>& vs) {
    std::vector<RatVector> cols;
    for (const auto& v : vs) cols.emplace_back(v.begin(), v.end());
    return rank_of_columns(cols) == vs.size();
  };
  if (!independent(simple_roots) || !independent(simple_coroots)) {
    throw ValidationError("root datum '" + name + "': simple roots and simple coroots must be linearly independent");
  }
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      const std::int64_t a = pairing(simple_roots[i], simple_coroots[j]);
      const std::int64_t b = pairing(simple_roots[j], simple_coroots[i]);
      const std::string at = "a_" + std::to_string(i) + std::to_string(j);
      if (i == j && a != 2) {
        throw ValidationError("root datum '" + name + "': Cartan condition " + at + " = 2 violated (got " +
                              std::to_string(a) + ")");
      }
      if (i != j && a > 0) {
        throw ValidationError("root datum '" + name + "': Cartan condition " + at + " <= 0 violated (got " +
                              std::to_string(a) + ")");
      }
      if (i != j && (a == 0) != (b == 0)) {
        throw ValidationError("root datum '" + name + "': Cartan condition " + at + " = 0 <=> a_" +
                              std::to_string(j) + std::to_string(i) + " = 0 violated");
      }
    }
  }
  RootDatum d;
  d.name_ = std::move(name);
  d.rank_ = rank;
  d.simple_roots_ = std::move(simple_roots);
  d.simple_coroots_ = std::move(simple_coroots);
  d.roots_ = root_orbit(d.simple_roots_, d.simple_coroots_);
  d.factors_.push_back(Factor{std::nullopt, static_cast<int>(rank), 0, rank, 0, l, d.name_});
  return d;
}

IntMatrix RootDatum::cartan_matrix() const {
  const std::size_t l = simple_roots_.size();
  IntMatrix a(l, l);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) a(i, j) = pairing(simple_roots_[i], simple_coroots_[j]);
  }
  return a;
}

WeylElement RootDatum::simple_reflection(std::size_t i) const {
  WeylElement s = IntMatrix::identity(rank_);
  for (std::size_t r = 0; r < rank_; ++r) {
    for (std::size_t c = 0; c < rank_; ++c) s(r, c) -= simple_coroots_[i][r] * simple_roots_[i][c];
  }
  return s;
}

std::vector<WeylElement> RootDatum::simple_reflections() const {
  std::vector<WeylElement> out;
  for (std::size_t i = 0; i < simple_roots_.size(); ++i) out.push_back(simple_reflection(i));
  return out;
}

bool RootDatum::is_dominant(std::span<const std::int64_t> lambda) const {
  return std::all_of(simple_roots_.begin(), simple_roots_.end(),
                     [&](const Weight& a) { return pairing(a, lambda) >= 0; });
}

RootDatum make_root_datum(Preset preset, int size) {
  if (size < 0) throw ValidationError("preset size must be non-negative");
  std::vector<Weight> roots;
  std::vector<Coweight> coroots;
  std::size_t rank = 0;
  const std::string label = preset_name(preset) + "(" + std::to_string(size) + ")";
  switch (preset) {
    case Preset::SL:
    case Preset::PGL: {
      if (size < 1) throw ValidationError(label + ": size must be >= 1");
      rank = static_cast<std::size_t>(size - 1);
      for (std::size_t i = 0; i < rank; ++i) {
        Weight cartan_row(rank, 0);
        cartan_row[i] = 2;
        if (i > 0) cartan_row[i - 1] = -1;
        if (i + 1 < rank) cartan_row[i + 1] = -1;
        if (preset == Preset::SL) {
          roots.push_back(cartan_row);
          coroots.push_back(unit(rank, i));
        } else {
          roots.push_back(unit(rank, i));
          coroots.push_back(cartan_row);  // A_{n-1} is symmetric
        }
      }
      break;
    }
    case Preset::Sp: {
      if (size < 2 || size % 2 != 0) throw ValidationError(label + ": size must be even and >= 2");
      rank = static_cast<std::size_t>(size / 2);
      for (std::size_t i = 0; i + 1 < rank; ++i) {
        Weight a(rank, 0);
        a[i] = 1;
        a[i + 1] = -1;
        roots.push_back(a);
        coroots.push_back(a);
      }
      roots.push_back(unit(rank, rank - 1, 2));
      coroots.push_back(unit(rank, rank - 1));
      break;
    }
    case Preset::SO: {
      if (size < 2) throw ValidationError(label + ": size must be >= 2");
      rank = static_cast<std::size_t>(size / 2);
      const bool odd = size % 2 == 1;
      if (!odd && rank == 1) break;  // SO(2) is a torus
      for (std::size_t i = 0; i + 1 < rank; ++i) {
        Weight a(rank, 0);
        a[i] = 1;
        a[i + 1] = -1;
        roots.push_back(a);
        coroots.push_back(a);
      }
      if (odd) {
        roots.push_back(unit(rank, rank - 1));
        coroots.push_back(unit(rank, rank - 1, 2));
      } else {
        Weight a(rank, 0);
        a[rank - 2] = 1;
        a[rank - 1] = 1;
        roots.push_back(a);
        coroots.push_back(a);
      }
      break;
    }
    case Preset::GL: {
      if (size < 1) throw ValidationError(label + ": size must be >= 1");
      rank = static_cast<std::size_t>(size);
      for (std::size_t i = 0; i + 1 < rank; ++i) {
        Weight a(rank, 0);
        a[i] = 1;
        a[i + 1] = -1;
        roots.push_back(a);
        coroots.push_back(a);
      }
      break;
    }
    case Preset::Torus:
      rank = static_cast<std::size_t>(size);
      break;
  }
  RootDatum d = RootDatum::from_simple(label, rank, std::move(roots), std::move(coroots));
  d.factors_.front().preset = preset;
  d.factors_.front().size = size;
  return d;
}

RootDatum product(const RootDatum& a, const RootDatum& b) {
  if (a.rank() == 0 && a.simple_roots().empty()) return b;
  if (b.rank() == 0 && b.simple_roots().empty()) return a;
  const std::size_t r = a.rank() + b.rank();
  auto pad = [r](const std::vector<std::int64_t>& v, std::size_t offset) {
    std::vector<std::int64_t> out(r, 0);
    std::copy(v.begin(), v.end(), out.begin() + static_cast<std::ptrdiff_t>(offset));
    return out;
  };
  RootDatum d;
  d.name_ = a.name() + " x " + b.name();
  d.rank_ = r;
  for (std::size_t i = 0; i < a.simple_roots().size(); ++i) {
    d.simple_roots_.push_back(pad(a.simple_roots()[i], 0));
    d.simple_coroots_.push_back(pad(a.simple_coroots()[i], 0));
  }
  for (std::size_t i = 0; i < b.simple_roots().size(); ++i) {
    d.simple_roots_.push_back(pad(b.simple_roots()[i], a.rank()));
    d.simple_coroots_.push_back(pad(b.simple_coroots()[i], a.rank()));
  }
  for (const auto& x : a.roots()) d.roots_.push_back(pad(x, 0));
  for (const auto& x : b.roots()) d.roots_.push_back(pad(x, a.rank()));
  std::sort(d.roots_.begin(), d.roots_.end());
  d.factors_ = a.factors();
  for (Factor f : b.factors()) {
    f.offset += a.rank();
    f.first_root += a.simple_roots().size();
    d.factors_.push_back(std::move(f));
  }
  return d;
}

std::vector<WeylElement> weyl_elements(const RootDatum& d, std::size_t cap) {
  const auto gens = d.simple_reflections();
  std::set<WeylElement> seen{IntMatrix::identity(d.rank())};
  std::vector<WeylElement> order{IntMatrix::identity(d.rank())};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& s : gens) {
      WeylElement next = order[head] * s;
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw ValidationError("Weyl group of '" + d.name() + "' exceeds the enumeration cap of " +
                                std::to_string(cap) + " elements");
        }
        order.push_back(std::move(next));
      }
    }
  }
  return order;
}

std::vector<Coweight> dominant_coweights(const RootDatum& d, std::int64_t bound) {
  std::vector<Coweight> out;
  if (bound < 0) return out;
  const std::size_t r = d.rank();
  Coweight lambda(r, -bound);
  if (r == 0) return {Coweight{}};
  while (true) {
    if (d.is_dominant(lambda)) out.push_back(lambda);
    std::size_t i = 0;
    while (i < r && lambda[i] == bound) lambda[i++] = -bound;
    if (i == r) break;
    ++lambda[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_rank(const RootDatum& d, const WeightRep& r) {
  if (d.rank() != r.rank()) {
    throw ValidationError("representation has rank " + std::to_string(r.rank()) + " but root datum '" + d.name() +
                          "' has rank " + std::to_string(d.rank()));
  }
}

}  // namespace coulomb::lie
