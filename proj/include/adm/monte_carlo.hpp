#pragma once

#include <cmath>
#include <cstdint>

#include "adm/analysis.hpp"
#include "adm/codec.hpp"

namespace adm {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Per-trial generator keyed on (master seed, trial index), so results do
// not depend on execution order.
struct TrialRng {
  std::uint64_t state;

  TrialRng(std::uint64_t seed, std::uint64_t trial)
      : state(splitmix64(seed ^ splitmix64(trial + 1))) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    return splitmix64(state);
  }
};

// floor(p * 2^64), the sampling threshold for a source 0-bit.
inline std::uint64_t sample_threshold(const Prob& p) {
  BigInt scaled = (numerator(p.value()) << 64) / denominator(p.value());
  return scaled.convert_to<std::uint64_t>();
}

}  // namespace detail

// Estimates divergence, length, and rate by sampling source words from
// P_S^n; each trial contributes log2 P_S^n(s) - log2 P_Z^C(encode(s)).
inline MatchReport monte_carlo_report(const MatcherConfig& cfg, std::uint64_t trials,
                                      std::uint64_t seed) {
  if (trials < 1) throw DomainError("Monte Carlo needs at least one trial");

  const std::uint64_t threshold = detail::sample_threshold(cfg.p_src);
  const double src_log0 = log2_rational(cfg.p_src.value());
  const double src_log1 = log2_rational(cfg.p_src.complement());
  const double code_log0 = log2_rational(cfg.p_code.value());
  const double code_log1 = log2_rational(cfg.p_code.complement());

  double sum_d = 0, sum_d2 = 0, sum_l = 0, sum_l2 = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    detail::TrialRng rng(seed, t);
    BitSequence s;
    std::uint64_t src_zeros = 0;
    for (std::uint64_t i = 0; i < cfg.n; ++i) {
      int bit = rng.next() < threshold ? 0 : 1;
      if (bit == 0) ++src_zeros;
      s.push_back(bit);
    }
    BitSequence c = encode(s, cfg);
    std::uint64_t code_zeros = 0;
    for (int bit : c) code_zeros += bit == 0 ? 1 : 0;

    double log_py = static_cast<double>(src_zeros) * src_log0 +
                    static_cast<double>(cfg.n - src_zeros) * src_log1;
    double log_pz = static_cast<double>(code_zeros) * code_log0 +
                    static_cast<double>(c.size() - code_zeros) * code_log1;
    double d = log_py - log_pz;
    double l = static_cast<double>(c.size());
    sum_d += d;
    sum_d2 += d * d;
    sum_l += l;
    sum_l2 += l * l;
  }

  const double nt = static_cast<double>(trials);
  MatchReport r;
  r.kl_bits = sum_d / nt;
  r.expected_length = sum_l / nt;
  if (trials > 1) {
    double var_d = (sum_d2 - nt * r.kl_bits * r.kl_bits) / (nt - 1);
    double var_l = (sum_l2 - nt * r.expected_length * r.expected_length) / (nt - 1);
    r.stderr_kl = std::sqrt(std::max(0.0, var_d) / nt);
    r.stderr_length = std::sqrt(std::max(0.0, var_l) / nt);
  }
  r.normalized_kl = r.expected_length > 0 ? r.kl_bits / r.expected_length : 0;
  r.rate = r.expected_length > 0
               ? static_cast<double>(cfg.n) * entropy(cfg.p_src) / r.expected_length
               : 0;
  r.kl_upper = kl_upper_bound(cfg.p_code);
  return r;
}

}  // namespace adm
