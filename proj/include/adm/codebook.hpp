#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "adm/codec.hpp"

namespace adm {

struct CodebookEntry {
  BitSequence source;
  BitSequence code;
  Rational p_y;    // P_S^n(source), the matcher output probability
  Rational p_z_c;  // product of target-DMS bit probabilities over the codeword
};

struct Codebook {
  std::vector<CodebookEntry> entries;
  MatcherConfig cfg;
};

inline Rational word_probability(const BitSequence& word, const Rational& p_zero) {
  Rational prob(1);
  for (int bit : word) prob *= bit == 0 ? p_zero : Rational(1) - p_zero;
  return prob;
}

// Runs the encoder over all 2^n source words (exact backend).
inline Codebook enumerate_codebook(const MatcherConfig& cfg, std::uint64_t cap = 16) {
  if (cfg.backend.kind != BackendId::Kind::Exact) {
    throw DomainError("codebook enumeration requires the exact backend");
  }
  if (cfg.n > cap) throw DomainError("block length exceeds the enumeration cap");

  Codebook cb{{}, cfg};
  const auto ops = detail::exact_ops(cfg);
  const std::uint64_t count = std::uint64_t{1} << cfg.n;
  cb.entries.reserve(count);
  for (std::uint64_t word = 0; word < count; ++word) {
    BitSequence s;
    for (std::uint64_t i = 0; i < cfg.n; ++i) {
      s.push_back(static_cast<int>((word >> (cfg.n - 1 - i)) & 1));
    }
    BitSequence c = detail::encode_generic(s, ops);
    cb.entries.push_back(CodebookEntry{s, c, word_probability(s, cfg.p_src.value()),
                                       word_probability(c, cfg.p_code.value())});
  }
  return cb;
}

inline bool is_injective(const Codebook& cb) {
  std::vector<BitSequence> codes;
  codes.reserve(cb.entries.size());
  for (const auto& e : cb.entries) codes.push_back(e.code);
  std::sort(codes.begin(), codes.end());
  return std::adjacent_find(codes.begin(), codes.end()) == codes.end();
}

inline bool is_prefix_free(const Codebook& cb) {
  std::vector<BitSequence> codes;
  codes.reserve(cb.entries.size());
  for (const auto& e : cb.entries) codes.push_back(e.code);
  std::sort(codes.begin(), codes.end());
  for (std::size_t i = 0; i + 1 < codes.size(); ++i) {
    if (codes[i].is_prefix_of(codes[i + 1])) return false;
  }
  return true;
}

}  // namespace adm
