#pragma once

#include <cmath>
#include <cstdint>

#include "adm/codebook.hpp"

namespace adm {

// log2 of a positive rational, evaluated in 50-digit floats.
inline double log2_rational(const Rational& q) {
  using boost::multiprecision::log;
  if (q <= 0) throw DomainError("log2 of a non-positive rational");
  static const BigFloat log2_const = log(BigFloat(2));
  BigFloat num(numerator(q));
  BigFloat den(denominator(q));
  return static_cast<double>((log(num) - log(den)) / log2_const);
}

struct MatchReport {
  double kl_bits = 0;          // D(P_Y || P_Z^C)
  double expected_length = 0;  // E[l(Y)]
  double normalized_kl = 0;    // kl_bits / expected_length
  double rate = 0;             // n H(P_S) / expected_length
  double kl_upper = 0;         // -log2(p_code (1 - p_code))
  double stderr_kl = 0;        // Monte Carlo only, 0 for exact
  double stderr_length = 0;    // Monte Carlo only, 0 for exact
};

inline double entropy(const Prob& p) {
  double lp = log2_rational(p.value());
  double lq = log2_rational(p.complement());
  double pv = static_cast<double>(BigFloat(p.value()));
  return -pv * lp - (1 - pv) * lq;
}

inline double kl_upper_bound(const Prob& p_code) {
  return -log2_rational(p_code.value() * p_code.complement());
}

inline double normalized_kl_bound(const MatcherConfig& cfg) {
  if (cfg.n == 0) throw DomainError("normalized divergence bound needs n >= 1");
  return kl_upper_bound(cfg.p_code) / (static_cast<double>(cfg.n) * entropy(cfg.p_src));
}

// Weights stay exact rationals; only the final logs go through floats.
inline double informational_divergence(const Codebook& cb) {
  BigFloat sum = 0;
  static const BigFloat log2_const = log(BigFloat(2));
  for (const auto& e : cb.entries) {
    Rational ratio = e.p_y / e.p_z_c;
    sum += BigFloat(e.p_y) *
           (log(BigFloat(numerator(ratio))) - log(BigFloat(denominator(ratio)))) /
           log2_const;
  }
  return static_cast<double>(sum);
}

inline Rational expected_length_exact(const Codebook& cb) {
  Rational sum(0);
  for (const auto& e : cb.entries) sum += e.p_y * Rational(e.code.size());
  return sum;
}

inline double expected_length(const Codebook& cb) {
  return static_cast<double>(BigFloat(expected_length_exact(cb)));
}

// Total target-DMS mass reachable through the codebook; < 1 certifies that
// a decoder-as-encoder scheme would have unreachable outputs.
inline Rational codebook_coverage(const Codebook& cb) {
  Rational sum(0);
  for (const auto& e : cb.entries) sum += e.p_z_c;
  return sum;
}

inline MatchReport exact_report(const Codebook& cb) {
  MatchReport r;
  r.kl_bits = informational_divergence(cb);
  r.expected_length = expected_length(cb);
  r.normalized_kl = r.expected_length > 0 ? r.kl_bits / r.expected_length : 0;
  double h_src = entropy(cb.cfg.p_src);
  r.rate = r.expected_length > 0
               ? static_cast<double>(cb.cfg.n) * h_src / r.expected_length
               : 0;
  r.kl_upper = kl_upper_bound(cb.cfg.p_code);
  return r;
}

struct CompressionCheck {
  double expected_length = 0;
  double bound = 0;  // n H(P_S) + 2
  bool pass = false;
};

// p_code = 1/2: every codeword carries target mass 2^-l exactly, and the
// arithmetic-compression length bound applies.
inline CompressionCheck compression_check(const MatcherConfig& cfg,
                                          std::uint64_t cap = 16) {
  if (cfg.p_code.value() != Rational(1, 2)) {
    throw DomainError("compression check requires p_code = 1/2");
  }
  Codebook cb = enumerate_codebook(cfg, cap);
  for (const auto& e : cb.entries) {
    Rational two_pow_len = Rational(BigInt(1) << e.code.size());
    if (e.p_z_c * two_pow_len != 1) {
      throw InternalError("codeword mass is not 2^-l under the uniform target");
    }
  }
  CompressionCheck out;
  out.expected_length = expected_length(cb);
  out.bound = static_cast<double>(cfg.n) * entropy(cfg.p_src) + 2;
  out.pass = out.expected_length <= out.bound;
  return out;
}

}  // namespace adm
