#pragma once

#include <cstdint>
#include <type_traits>
#include <utility>
#include <vector>

#include "adm/bitseq.hpp"
#include "adm/errors.hpp"
#include "adm/interval.hpp"
#include "adm/prob.hpp"

namespace adm {

struct BackendId {
  enum class Kind { Exact, Fixed };

  Kind kind = Kind::Exact;
  unsigned w_bits = 0;
  unsigned f_bits = 0;

  static BackendId exact() { return BackendId{Kind::Exact, 0, 0}; }

  static BackendId fixed(unsigned w = 96, unsigned f = 32) {
    if (f == 0 || f + 2 > w) throw DomainError("fixed backend requires F + 2 <= W");
    if (w - f > 64 || f > 63) throw DomainError("fixed backend widths out of range");
    return BackendId{Kind::Fixed, w, f};
  }

  bool operator==(const BackendId&) const = default;
};

struct MatcherConfig {
  Prob p_src;
  Prob p_code;
  std::uint64_t n = 0;
  BackendId backend = BackendId::exact();
};

struct DecodeResult {
  BitSequence source_word;
  std::uint64_t consumed_bits = 0;
};

// Finalization window captured on the exact backend: A_l and A_u are the
// adjacent ancestors whose inner children become the two final candidates.
struct FinalizationState {
  ExactInterval window_low;   // A_l
  ExactInterval window_high;  // A_u
  ExactInterval cand_low;     // upper child of A_l
  ExactInterval cand_high;    // lower child of A_u
  Rational p_ratio;           // width(A_l) / (width(A_l) + width(A_u))
};

namespace detail {

struct ExactOps {
  Rational p_src;
  Rational p_code;
  using Iv = ExactInterval;

  Iv full() const { return unit_interval(); }
  Iv read_src(const Iv& i, int bit) const { return read_bit(i, p_src, bit); }
  Iv read_code(const Iv& i, int bit) const { return read_bit(i, p_code, bit); }
  std::pair<Iv, Iv> refine_src(const Iv& i) const { return refine(i, p_src); }
  std::pair<Iv, Iv> refine_code(const Iv& i) const { return refine(i, p_code); }

  void adopt(const Iv& cand, Iv& i_code, Iv&, std::vector<ScaleRecord>*) const {
    i_code = cand;
  }
};

struct FixedOps {
  u128 one;
  QuantProb p_src;
  QuantProb p_code;
  using Iv = FixedInterval;

  Iv full() const { return Iv{0, one}; }
  Iv read_src(const Iv& i, int bit) const { return read_bit(i, p_src, bit); }
  Iv read_code(const Iv& i, int bit) const { return read_bit(i, p_code, bit); }
  std::pair<Iv, Iv> refine_src(const Iv& i) const { return refine(i, p_src); }
  std::pair<Iv, Iv> refine_code(const Iv& i) const { return refine(i, p_code); }

  void adopt(const Iv& cand, Iv& i_code, Iv& i_src,
             std::vector<ScaleRecord>* records) const {
    RenormResult r = renormalize(cand, i_src, one);
    i_code = r.code;
    i_src = r.src;
    if (records) records->push_back(r.record);
  }
};

inline ExactOps exact_ops(const MatcherConfig& cfg) {
  return ExactOps{cfg.p_src.value(), cfg.p_code.value()};
}

inline FixedOps fixed_ops(const MatcherConfig& cfg) {
  const auto& b = cfg.backend;
  if (b.kind != BackendId::Kind::Fixed) throw DomainError("fixed backend expected");
  return FixedOps{u128{1} << (b.w_bits - b.f_bits),
                  QuantProb{cfg.p_src.quantize(b.f_bits), b.f_bits},
                  QuantProb{cfg.p_code.quantize(b.f_bits), b.f_bits}};
}

// Encoder main loop plus the strict-descendant finalization. Both final
// candidates descend at least one refinement below the exit candidates;
// ties go to the lower-branch candidate.
template <class Ops>
BitSequence encode_generic(const BitSequence& s, const Ops& ops,
                           FinalizationState* fin = nullptr,
                           std::vector<ScaleRecord>* records = nullptr) {
  using Iv = typename Ops::Iv;
  BitSequence c;
  if (s.empty()) return c;

  Iv i_src = ops.full();
  Iv i_code = ops.full();
  auto cands = ops.refine_code(i_code);

  for (std::size_t i = 0; i < s.size(); ++i) {
    i_src = ops.read_src(i_src, s[i]);
    for (;;) {
      int bit;
      if (contains(cands.first, i_src)) bit = 0;
      else if (contains(cands.second, i_src)) bit = 1;
      else break;
      c.push_back(bit);
      ops.adopt(bit ? cands.second : cands.first, i_code, i_src, records);
      cands = ops.refine_code(i_code);
    }
  }

  // Upper branch: descend lower children until one fits inside I_src.
  std::vector<int> path_high{1};
  Iv a_u = cands.second;
  Iv cand_high;
  for (Iv x = cands.second;;) {
    auto ch = ops.refine_code(x);
    path_high.push_back(0);
    if (contains(i_src, ch.first)) {
      a_u = x;
      cand_high = ch.first;
      break;
    }
    x = ch.first;
  }

  // Lower branch: descend upper children, symmetrically.
  std::vector<int> path_low{0};
  Iv a_l = cands.first;
  Iv cand_low;
  for (Iv y = cands.first;;) {
    auto ch = ops.refine_code(y);
    path_low.push_back(1);
    if (contains(i_src, ch.second)) {
      a_l = y;
      cand_low = ch.second;
      break;
    }
    y = ch.second;
  }

  if (fin) {
    if constexpr (std::is_same_v<Iv, ExactInterval>) {
      Rational wl = a_l.width();
      Rational wu = a_u.width();
      *fin = FinalizationState{a_l, a_u, cand_low, cand_high, wl / (wl + wu)};
    } else {
      throw DomainError("finalization trace requires the exact backend");
    }
  }

  const auto& path = cand_high.width() > cand_low.width() ? path_high : path_low;
  for (int bit : path) c.push_back(bit);
  return c;
}

// Decoder with an explicit replay of the encoder's candidate adoptions, so
// the fixed backend renormalizes in lockstep with the encoder.
template <class Ops>
DecodeResult decode_generic(const BitSequence& c, std::uint64_t n, const Ops& ops,
                            std::vector<ScaleRecord>* records = nullptr) {
  using Iv = typename Ops::Iv;
  DecodeResult result;
  if (n == 0) return result;

  Iv i_src = ops.full();
  Iv enc_code = ops.full();
  auto enc_cands = ops.refine_code(enc_code);
  auto src_cands = ops.refine_src(i_src);

  std::vector<int> pending;  // read but not yet replayed codeword bits
  std::size_t pending_front = 0;
  Iv reader = enc_code;
  std::size_t next_read = 0;

  auto read_next = [&] {
    if (next_read >= c.size()) {
      throw TruncatedError("codeword exhausted before source word was recovered");
    }
    int bit = c[next_read++];
    ++result.consumed_bits;
    pending.push_back(bit);
    return bit;
  };

  for (;;) {
    int bit;
    if (contains(src_cands.first, reader)) bit = 0;
    else if (contains(src_cands.second, reader)) bit = 1;
    else {
      reader = ops.read_code(reader, read_next());
      continue;
    }

    result.source_word.push_back(bit);
    i_src = bit ? src_cands.second : src_cands.first;
    if (result.source_word.size() == n) break;

    // Replay the encoder: every candidate it would adopt at this point
    // consumes the matching codeword bit.
    for (;;) {
      int enc_bit;
      if (contains(enc_cands.first, i_src)) enc_bit = 0;
      else if (contains(enc_cands.second, i_src)) enc_bit = 1;
      else break;
      if (pending_front == pending.size()) read_next();
      if (pending[pending_front] != enc_bit) {
        throw InternalError("decoder lost sync with the encoder replay");
      }
      ++pending_front;
      ops.adopt(enc_bit ? enc_cands.second : enc_cands.first, enc_code, i_src, records);
      enc_cands = ops.refine_code(enc_code);
      reader = enc_code;
      for (std::size_t i = pending_front; i < pending.size(); ++i) {
        reader = ops.read_code(reader, pending[i]);
      }
    }
    src_cands = ops.refine_src(i_src);
  }
  return result;
}

}  // namespace detail

inline BitSequence encode(const BitSequence& s, const MatcherConfig& cfg) {
  if (s.size() != cfg.n) throw DomainError("input length does not match configured n");
  if (cfg.backend.kind == BackendId::Kind::Exact) {
    return detail::encode_generic(s, detail::exact_ops(cfg));
  }
  return detail::encode_generic(s, detail::fixed_ops(cfg));
}

inline DecodeResult decode(const BitSequence& c, const MatcherConfig& cfg) {
  if (cfg.backend.kind == BackendId::Kind::Exact) {
    return detail::decode_generic(c, cfg.n, detail::exact_ops(cfg));
  }
  return detail::decode_generic(c, cfg.n, detail::fixed_ops(cfg));
}

// Exact-backend encode that also reports the finalization window.
inline BitSequence encode_traced(const BitSequence& s, const MatcherConfig& cfg,
                                 FinalizationState& fin) {
  if (s.size() != cfg.n) throw DomainError("input length does not match configured n");
  if (cfg.backend.kind != BackendId::Kind::Exact) {
    throw DomainError("finalization trace requires the exact backend");
  }
  if (cfg.n == 0) throw DomainError("empty block has no finalization step");
  return detail::encode_generic(s, detail::exact_ops(cfg), &fin);
}

// Fixed-backend encode/decode that also report the renormalization records.
inline BitSequence encode_fixed_traced(const BitSequence& s, const MatcherConfig& cfg,
                                       std::vector<ScaleRecord>& records) {
  if (s.size() != cfg.n) throw DomainError("input length does not match configured n");
  return detail::encode_generic(s, detail::fixed_ops(cfg), nullptr, &records);
}

inline DecodeResult decode_fixed_traced(const BitSequence& c, const MatcherConfig& cfg,
                                        std::vector<ScaleRecord>& records) {
  return detail::decode_generic(c, cfg.n, detail::fixed_ops(cfg), &records);
}

}  // namespace adm
