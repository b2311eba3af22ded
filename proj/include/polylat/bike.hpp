// Copyright 2026 The polylat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "polylat/reduce.hpp"

namespace polylat {

inline std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 r = 1, b = base % mod;
  while (exp) {
    if (exp & 1) r = (r * b) % mod;
    b = (b * b) % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// 2 generates the full multiplicative group mod r (r prime): its order is
/// r - 1, checked through the prime factorization of r - 1.
inline bool two_is_primitive_root(std::uint64_t r) {
  for (std::uint64_t p : prime_factors(r - 1))
    if (pow_mod_u64(2, (r - 1) / p, r) == 1) return false;
  return true;
}

struct BikeParams {
  std::int64_t r;  // prime block length, 2 primitive mod r
  std::int64_t v;  // secret weight, odd
};

inline BikeParams check_params(std::int64_t r, std::int64_t v) {
  if (r < 3 || !is_prime_u64(static_cast<std::uint64_t>(r)))
    throw ParamError("r = " + std::to_string(r) + " is not an odd prime");
  if (!two_is_primitive_root(static_cast<std::uint64_t>(r)))
    throw ParamError("2 is not a primitive root mod " + std::to_string(r));
  if (v < 1 || v > r) throw ParamError("weight v must satisfy 1 <= v <= r");
  if (v % 2 == 0) throw ParamError("weight v must be odd");
  return BikeParams{r, v};
}

struct BikeKeyPair {
  BikeParams params;
  Poly h1, h2;  // secret sparse pair
  Poly h;       // public key h1 / h2 mod x^r - 1
};

/// Assemble a key pair from a given sparse pair (h2 must be invertible).
/// Used to force degenerate keys such as h2 = 1 in tests.
inline BikeKeyPair make_keypair(const BikeParams& params, Poly h1, Poly h2) {
  FieldSpec f(2);
  const Poly modulus = Poly::x_pow_minus_one(f, params.r);
  if (!(h1.degree() < Degree(params.r)) || !(h2.degree() < Degree(params.r)))
    throw ParamError("key components must have degree < r");
  auto h2_inv = Poly::inv_mod(h2, modulus);
  if (!h2_inv) throw ParamError("h2 is not invertible mod x^r - 1");
  Poly h = (h1 * *h2_inv) % modulus;
  return BikeKeyPair{params, std::move(h1), std::move(h2), std::move(h)};
}

/// Sample a key pair: h1, h2 of exact weight v, h2 invertible mod x^r - 1.
/// With degree_cap set, components are resampled until their degree is at
/// most the cap (used to plant recoverable keys).
inline BikeKeyPair keygen(const BikeParams& params, Rng& rng,
                          std::optional<std::int64_t> degree_cap = std::nullopt) {
  FieldSpec f(2);
  const Poly modulus = Poly::x_pow_minus_one(f, params.r);
  if (degree_cap && *degree_cap < params.v - 1)
    throw ParamError("degree cap below the minimum degree for weight v");
  constexpr int kResampleBudget = 2'000'000;

  auto draw_capped = [&](const char* which) {
    for (int tries = 0; tries < kResampleBudget; ++tries) {
      Poly p = Poly::sample_sparse(f, params.r, params.v, rng);
      if (!degree_cap || p.degree() <= Degree(*degree_cap)) return p;
    }
    throw ParamError(std::string("resample budget exhausted for ") + which);
  };

  Poly h1 = draw_capped("h1");
  for (int tries = 0; tries < kResampleBudget; ++tries) {
    Poly h2 = draw_capped("h2");
    auto h2_inv = Poly::inv_mod(h2, modulus);
    if (!h2_inv) continue;  // v odd makes this rare; resample anyway
    Poly h = (h1 * *h2_inv) % modulus;
    return BikeKeyPair{params, std::move(h1), std::move(h2), std::move(h)};
  }
  throw ParamError("resample budget exhausted for invertible h2");
}

/// Rank-2 lattice of the public key: rows (x^r - 1, 0) and (h, 1) span
/// {(f1, f2) : f1 = h f2 mod x^r - 1}. Its covolume is r.
inline PolyBasis bike_lattice(const Poly& h, std::int64_t r) {
  FieldSpec f = h.field();
  if (!f.binary()) throw ParamError("public-key lattice is defined over F_2");
  if (!(h.degree() < Degree(r))) throw ParamError("public key must have degree < r");
  PolyVec row0{Poly::x_pow_minus_one(f, r), Poly::zero(f)};
  PolyVec row1{h, Poly::one(f)};
  return PolyBasis({std::move(row0), std::move(row1)});
}

struct AttackConfig {
  std::int64_t degree_bound;  // B: coefficients mu_i range over F_2[x]_{<B}
  std::int64_t weight_max;    // acceptance weight bound per component

  AttackConfig(std::int64_t b, std::int64_t w_max) : degree_bound(b), weight_max(w_max) {
    if (b < 1) throw ParamError("degree bound B must be >= 1");
    if (b > 30) throw ParamError("degree bound B is impractically large");
    if (w_max < 1) throw ParamError("weight bound must be >= 1");
  }
};

struct AttackResult {
  struct Found {
    Poly h1p, h2p;  // recovered sparse pair
    Poly mu1, mu2;  // coordinates in the reduced basis
  };
  std::optional<Found> found;
  std::uint64_t pairs_tested = 0;
  Degree d1, d2;  // reduced row norms
};

namespace detail {

// coefficient string c0 c1 ... of a bit-packed mu, for the enumeration order
inline std::string coeff_string(std::uint64_t m) {
  std::string s;
  while (m) {
    s.push_back(static_cast<char>('0' + (m & 1)));
    m >>= 1;
  }
  return s;
}

/// Candidate pairs (mu1, mu2) with max(deg mu1, deg mu2) + 1 == grade,
/// ordered lexicographically on coefficient strings. The full enumeration
/// over (F_2[x]_{<B})^2 \ {(0,0)} walks grades 1..B in order.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> attack_pair_grade(int grade) {
  auto bits = [](std::uint64_t m) { return m == 0 ? 0 : 64 - std::countl_zero(m); };
  std::vector<std::pair<std::uint64_t, std::uint64_t>> layer;
  const std::uint64_t lim = std::uint64_t{1} << grade;
  for (std::uint64_t m1 = 0; m1 < lim; ++m1)
    for (std::uint64_t m2 = 0; m2 < lim; ++m2)
      if (std::max(bits(m1), bits(m2)) == grade) layer.emplace_back(m1, m2);
  std::stable_sort(layer.begin(), layer.end(), [](const auto& a, const auto& c) {
    auto ka = std::make_pair(coeff_string(a.first), coeff_string(a.second));
    auto kc = std::make_pair(coeff_string(c.first), coeff_string(c.second));
    return ka < kc;
  });
  return layer;
}

inline Poly poly_from_mask(FieldSpec f, std::uint64_t mask) {
  Poly p(f);
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) p.set_coeff(i, 1);
  return p;
}

}  // namespace detail

/// Weak-key search: reduce the public-key lattice, then scan low-degree
/// combinations mu1 * a + mu2 * b of the reduced rows for a pair whose two
/// components both have weight <= w_max (and h2' != 0). Returns the first hit
/// in the fixed enumeration order; a miss is a value, not an error.
///
/// The hot loop tests only weights; invertibility of h2' is checked after a
/// weight hit (it is rare for that to fail, but a returned pair must always
/// verify), and a failing candidate is skipped. The congruence itself needs
/// no check: every candidate lies in the lattice by construction.
///
/// Completeness: when the secret pair's coordinates in the reduced basis both
/// have degree < B, the pair itself is enumerated and verifies, so some
/// acceptable pair is returned no later than it.
inline AttackResult attack(const Poly& h, std::int64_t r, const AttackConfig& cfg) {
  const PolyBasis lattice = bike_lattice(h, r);
  const ReducedBasis reduced = reduce(lattice).reduced;
  const PolyVec& a = reduced.basis().row(0);
  const PolyVec& b = reduced.basis().row(1);

  AttackResult result;
  result.d1 = a.norm();
  result.d2 = b.norm();

  FieldSpec f = h.field();
  const Poly modulus = Poly::x_pow_minus_one(f, r);
  for (int grade = 1; grade <= cfg.degree_bound && !result.found; ++grade) {
    for (auto [m1, m2] : detail::attack_pair_grade(grade)) {
      ++result.pairs_tested;
      Poly mu1 = detail::poly_from_mask(f, m1);
      Poly mu2 = detail::poly_from_mask(f, m2);
      PolyVec cand = mu1 * a + mu2 * b;
      if (cand[1].is_zero()) continue;
      if (cand[0].weight() > static_cast<std::uint64_t>(cfg.weight_max) ||
          cand[1].weight() > static_cast<std::uint64_t>(cfg.weight_max))
        continue;
      if (!Poly::inv_mod(cand[1] % modulus, modulus)) continue;
      result.found = AttackResult::Found{cand[0], cand[1], std::move(mu1), std::move(mu2)};
      break;
    }
  }
  return result;
}

/// A pair is good when h1' = h h2' mod x^r - 1, h2' is invertible, and both
/// weights are within the bound. Any such pair breaks the key, not just the
/// one that was generated.
inline bool verify(const Poly& h, const Poly& h1p, const Poly& h2p, std::int64_t r,
                   std::int64_t w_max) {
  FieldSpec f = h.field();
  const Poly modulus = Poly::x_pow_minus_one(f, r);
  if (h1p.weight() > static_cast<std::uint64_t>(w_max)) return false;
  if (h2p.weight() > static_cast<std::uint64_t>(w_max)) return false;
  if (!Poly::inv_mod(h2p, modulus)) return false;
  return ((h1p - h * h2p) % modulus).is_zero();
}

struct TrialRecord {
  std::uint64_t trial = 0;
  bool success = false;
  std::uint64_t pairs_tested = 0;
  Degree d1, d2;
  Degree mu1_deg, mu2_deg;  // coordinates of the true key in the reduced basis
  bool mu_fits = false;     // both coordinate degrees < B
  double wall_ms = 0.0;     // informational; excluded from determinism
};

struct ExperimentReport {
  std::int64_t r = 0, v = 0;
  std::int64_t degree_bound = 0, weight_max = 0;
  std::optional<std::int64_t> degree_cap;
  std::uint64_t master_seed = 0;
  std::vector<TrialRecord> trials;
  double success_fraction = 0.0;  // unset when trials is empty
  double mu_fit_fraction = 0.0;
  double mean_pairs_tested = 0.0;
  double wall_ms_total = 0.0;
};

/// Monte Carlo harness: keygen + attack per trial, per-trial RNG streams
/// derived from (master_seed, trial index). Aggregates are order-independent,
/// so the report is identical regardless of thread count (timings aside).
inline ExperimentReport weak_key_experiment(const BikeParams& params, std::uint64_t trials,
                                            const AttackConfig& cfg,
                                            std::optional<std::int64_t> degree_cap,
                                            std::uint64_t master_seed, unsigned threads = 1) {
  ExperimentReport report;
  report.r = params.r;
  report.v = params.v;
  report.degree_bound = cfg.degree_bound;
  report.weight_max = cfg.weight_max;
  report.degree_cap = degree_cap;
  report.master_seed = master_seed;
  report.trials.resize(trials);

  auto run_trial = [&](std::uint64_t t) {
    const auto start = std::chrono::steady_clock::now();
    Rng rng = Rng::derive(master_seed, t);
    BikeKeyPair key = keygen(params, rng, degree_cap);
    AttackResult res = attack(key.h, params.r, cfg);

    TrialRecord rec;
    rec.trial = t;
    rec.success = res.found.has_value();
    rec.pairs_tested = res.pairs_tested;
    rec.d1 = res.d1;
    rec.d2 = res.d2;
    const ReducedBasis reduced = reduce(bike_lattice(key.h, params.r)).reduced;
    auto mu = contains(reduced.basis(), PolyVec{key.h1, key.h2});
    if (!mu) throw ContractViolationError("secret pair escaped its own lattice");
    rec.mu1_deg = (*mu)[0].degree();
    rec.mu2_deg = (*mu)[1].degree();
    rec.mu_fits = rec.mu1_deg < Degree(cfg.degree_bound) && rec.mu2_deg < Degree(cfg.degree_bound);
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.trials[t] = std::move(rec);
  };

  if (threads <= 1 || trials < 2) {
    for (std::uint64_t t = 0; t < trials; ++t) run_trial(t);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&] {
        try {
          for (std::uint64_t t; (t = next.fetch_add(1)) < trials;) run_trial(t);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  if (trials > 0) {
    std::uint64_t ok = 0, fits = 0;
    double pairs = 0, wall = 0;
    for (const TrialRecord& rec : report.trials) {
      ok += rec.success;
      fits += rec.mu_fits;
      pairs += static_cast<double>(rec.pairs_tested);
      wall += rec.wall_ms;
    }
    report.success_fraction = static_cast<double>(ok) / static_cast<double>(trials);
    report.mu_fit_fraction = static_cast<double>(fits) / static_cast<double>(trials);
    report.mean_pairs_tested = pairs / static_cast<double>(trials);
    report.wall_ms_total = wall;
  }
  return report;
}

}  // namespace polylat
