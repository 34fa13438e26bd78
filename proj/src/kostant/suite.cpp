#include <functional>
#include <thread>

#include "coulomb/kostant.hpp"
#include "coulomb/kostant_suite.hpp"

namespace coulomb::kostant {

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Property = std::function<Outcome(const KostantSetting&, Engine&)>;

Outcome expect(bool ok, std::string detail) { return {ok, ok ? std::string() : std::move(detail)}; }

std::vector<Rational> shift_by_lambda(const std::vector<Rational>& p) {
  std::vector<Rational> out{Rational(0)};
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

const std::vector<std::pair<std::string, Property>>& properties() {
  static const std::vector<std::pair<std::string, Property>> list = {
      {"adjoint_identity",
       [](const KostantSetting& s, Engine& rng) {
         const RatMatrix a = random_integer_matrix(s.m.dim(), s.m_prime.dim(), rng);
         const RatMatrix at = adjoint(s, a);
         for (std::size_t i = 0; i < s.m_prime.dim(); ++i) {
           for (std::size_t j = 0; j < s.m.dim(); ++j) {
             RatVector mp(s.m_prime.dim()), m(s.m.dim());
             mp[i] = 1;
             m[j] = 1;
             if (s.m.pair(a * mp, m) != s.m_prime.pair(mp, at * m)) {
               return Outcome{false, "A = " + a.to_string()};
             }
           }
         }
         return Outcome{};
       }},
      {"double_adjoint_is_minus",
       [](const KostantSetting& s, Engine& rng) {
         const RatMatrix a = random_integer_matrix(s.m.dim(), s.m_prime.dim(), rng);
         return expect(adjoint(adjoint(s, a), s.m, s.m_prime) == -a, "A = " + a.to_string());
       }},
      {"moment_sp_membership",
       [](const KostantSetting& s, Engine& rng) {
         const RatMatrix a = random_integer_matrix(s.m.dim(), s.m_prime.dim(), rng);
         return expect(in_sp(s.m, moment_sp(s, a)), "A = " + a.to_string());
       }},
      {"moment_so_membership",
       [](const KostantSetting& s, Engine& rng) {
         const RatMatrix a = random_integer_matrix(s.m.dim(), s.m_prime.dim(), rng);
         return expect(in_so(s.m_prime, moment_so(s, a)), "A = " + a.to_string());
       }},
      {"moment_equivariance",
       [](const KostantSetting& s, Engine& rng) {
         const RatMatrix a = random_integer_matrix(s.m.dim(), s.m_prime.dim(), rng);
         const RatMatrix g = random_sp_element(s.m, rng);
         const RatMatrix h = random_so_element(s.m_prime, rng);
         const RatMatrix moved = g * a * h.inverse();
         const bool sp_ok = moment_sp(s, moved) == g * moment_sp(s, a) * g.inverse();
         const bool so_ok = moment_so(s, moved) == h * moment_so(s, a) * h.inverse();
         return expect(sp_ok && so_ok, "A = " + a.to_string() + ", g = " + g.to_string() + ", h = " + h.to_string());
       }},
      {"spectral_transfer",
       [](const KostantSetting& s, Engine& rng) {
         const RatMatrix a = random_integer_matrix(s.m.dim(), s.m_prime.dim(), rng);
         return expect(moment_so(s, a).char_poly() == shift_by_lambda(moment_sp(s, a).char_poly()),
                       "A = " + a.to_string());
       }},
      {"sp_char_poly_even",
       [](const KostantSetting& s, Engine& rng) {
         const RatMatrix a = random_integer_matrix(s.m.dim(), s.m_prime.dim(), rng);
         const auto c = moment_sp(s, a).char_poly();
         for (std::size_t k = 1; k < c.size(); k += 2) {
           if (c[k] != 0) return Outcome{false, "A = " + a.to_string()};
         }
         return Outcome{};
       }},
      {"y_point_valid",
       [](const KostantSetting& s, Engine& rng) {
         const YPoint y = random_y_point(s, rng);
         // Odd pairings vanish for any v since C is in so(M').
         const auto values = krylov_pairings(s.m_prime, moment_so(s, y.a), y.v, 2 * s.n);
         bool odd_zero = true;
         for (std::size_t k = 1; k < values.size(); k += 2) odd_zero = odd_zero && values[k] == 0;
         return expect(odd_zero && in_Y(s, y), "v = " + RatMatrix::from_columns({y.v}).to_string() +
                                                   ", A = " + y.a.to_string());
       }},
      {"xi_lands_in_X",
       [](const KostantSetting& s, Engine& rng) {
         const YPoint y = random_y_point(s, rng);
         const XPoint x = xi(s, y);
         const auto values = krylov_pairings(s.m, x.x, x.u, 2 * s.n - 1);
         bool even_zero = true;
         for (std::size_t k = 0; k < values.size(); k += 2) even_zero = even_zero && values[k] == 0;
         return expect(even_zero && in_X(s, x), "A = " + y.a.to_string());
       }},
      {"eta_symplectic_frame",
       [](const KostantSetting& s, Engine& rng) {
         const XPoint x = xi(s, random_y_point(s, rng));
         const EtaResult e = eta(s, x);
         bool seeds_ok = true;
         RatVector w = x.u;
         for (int k = 0; k <= s.n; ++k) {
           seeds_ok = seeds_ok && e.g.column(static_cast<std::size_t>(k)) == w;
           w = x.x * w;
         }
         return expect(seeds_ok && preserves_form(s.m, e.g), "x = " + x.x.to_string() + ", g = " + e.g.to_string());
       }},
      {"eta_transport",
       [](const KostantSetting& s, Engine& rng) {
         const XPoint x = xi(s, random_y_point(s, rng));
         const RatMatrix g0 = random_sp_element(s.m, rng);
         const EtaResult base = eta(s, x);
         const EtaResult moved = eta(s, transport(x, g0));
         return expect(moved.g == g0 * base.g && moved.sigma == base.sigma, "g0 = " + g0.to_string());
       }},
      {"gl_moment_traces",
       [](const KostantSetting& s, Engine& rng) {
         const std::size_t d = static_cast<std::size_t>(s.n) + 1;
         const RatMatrix a = random_integer_matrix(d, d, rng);
         const RatMatrix b = random_integer_matrix(d, d, rng);
         const auto [ab, ba] = gl_moment(a, b);
         return expect(ab.trace() == ba.trace() && ab.char_poly() == ba.char_poly(),
                       "A = " + a.to_string() + ", B = " + b.to_string());
       }},
  };
  return list;
}

std::uint64_t sample_seed(std::uint64_t seed, std::size_t sample, std::size_t property) {
  // splitmix64 over (seed, sample, property)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (1 + sample) + 0xbf58476d1ce4e5b9ULL * (1 + property);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

bool SuiteReport::all_passed() const {
  for (const auto& p : properties) {
    if (p.failed != 0) return false;
  }
  return true;
}

SuiteReport run_kostant_suite(int n, std::size_t samples, std::uint64_t seed, unsigned threads) {
  const KostantSetting setting = KostantSetting::standard(n);
  (void)seed_y_point(n);  // rejects unsupported n before any work

  const auto& props = properties();
  // outcomes[sample][property]
  std::vector<std::vector<Outcome>> outcomes(samples, std::vector<Outcome>(props.size()));
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t p = 0; p < props.size(); ++p) {
        Engine rng(sample_seed(seed, i, p));
        try {
          outcomes[i][p] = props[p].second(setting, rng);
        } catch (const std::exception& e) {
          outcomes[i][p] = {false, std::string("exception: ") + e.what()};
        }
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(samples, 1))));
  if (workers == 1) {
    work(0, samples);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work, samples * t / workers, samples * (t + 1) / workers);
    for (auto& th : pool) th.join();
  }

  SuiteReport report{n, samples, seed, {}};
  for (std::size_t p = 0; p < props.size(); ++p) {
    PropertyTally tally{props[p].first, 0, 0, std::nullopt};
    for (std::size_t i = 0; i < samples; ++i) {
      if (outcomes[i][p].ok) {
        ++tally.passed;
      } else {
        ++tally.failed;
        if (!tally.first_counterexample) {
          tally.first_counterexample = "sample " + std::to_string(i) + ": " + outcomes[i][p].detail;
        }
      }
    }
    report.properties.push_back(std::move(tally));
  }
  return report;
}

}  // namespace coulomb::kostant
