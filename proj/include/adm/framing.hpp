#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <vector>

#include "adm/codec.hpp"

namespace adm {

// Frame layout (all integers little-endian):
//   "ADM1" | version u8 = 1 | backend u8 (0 exact, 1 fixed)
//   | p_src num u64, den u64 | p_code num u64, den u64
//   | n u64 | payload bit count u64 | payload bits, MSB-first, zero-padded
inline constexpr std::array<std::uint8_t, 4> kFrameMagic{'A', 'D', 'M', '1'};
inline constexpr std::uint8_t kFrameVersion = 1;
inline constexpr std::size_t kFrameHeaderBytes = 4 + 1 + 1 + 6 * 8;

namespace detail {

inline void put_u64_le(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

inline std::uint64_t get_u64_le(std::span<const std::uint8_t> in, std::size_t pos) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t{in[pos + i]} << (8 * i);
  return v;
}

inline std::uint64_t rational_part_u64(const BigInt& part) {
  if (part < 0 || part > BigInt(~std::uint64_t{0})) {
    throw FrameError("probability ratio does not fit the frame field");
  }
  return part.convert_to<std::uint64_t>();
}

}  // namespace detail

inline std::vector<std::uint8_t> frame_codeword(const BitSequence& codeword,
                                                const MatcherConfig& cfg) {
  std::vector<std::uint8_t> out(kFrameMagic.begin(), kFrameMagic.end());
  out.push_back(kFrameVersion);
  out.push_back(cfg.backend.kind == BackendId::Kind::Fixed ? 1 : 0);
  detail::put_u64_le(out, detail::rational_part_u64(numerator(cfg.p_src.value())));
  detail::put_u64_le(out, detail::rational_part_u64(denominator(cfg.p_src.value())));
  detail::put_u64_le(out, detail::rational_part_u64(numerator(cfg.p_code.value())));
  detail::put_u64_le(out, detail::rational_part_u64(denominator(cfg.p_code.value())));
  detail::put_u64_le(out, cfg.n);
  detail::put_u64_le(out, codeword.size());
  auto packed = pack_bits_msb(codeword);
  out.insert(out.end(), packed.begin(), packed.end());
  return out;
}

inline std::vector<std::uint8_t> encode_block_framed(const BitSequence& s,
                                                     const MatcherConfig& cfg) {
  return frame_codeword(encode(s, cfg), cfg);
}

struct FramedBlock {
  BitSequence source;
  BitSequence codeword;
  MatcherConfig cfg;
  std::size_t bytes_consumed;
};

inline FramedBlock decode_block_framed(std::span<const std::uint8_t> bytes,
                                       std::size_t offset = 0) {
  if (bytes.size() < offset || bytes.size() - offset < kFrameHeaderBytes) {
    throw FrameError("frame header truncated");
  }
  auto in = bytes.subspan(offset);
  if (!std::equal(kFrameMagic.begin(), kFrameMagic.end(), in.begin())) {
    throw FrameError("bad frame magic");
  }
  if (in[4] != kFrameVersion) throw FrameError("unsupported frame version");
  if (in[5] > 1) throw FrameError("unknown backend tag");
  BackendId backend = in[5] == 1 ? BackendId::fixed() : BackendId::exact();

  std::uint64_t ps_num = detail::get_u64_le(in, 6);
  std::uint64_t ps_den = detail::get_u64_le(in, 14);
  std::uint64_t pc_num = detail::get_u64_le(in, 22);
  std::uint64_t pc_den = detail::get_u64_le(in, 30);
  std::uint64_t n = detail::get_u64_le(in, 38);
  std::uint64_t payload_bits = detail::get_u64_le(in, 46);
  if (ps_den == 0 || pc_den == 0) throw FrameError("zero probability denominator");

  std::size_t payload_bytes = static_cast<std::size_t>((payload_bits + 7) / 8);
  if (in.size() - kFrameHeaderBytes < payload_bytes) {
    throw FrameError("frame payload truncated");
  }

  MatcherConfig cfg{Prob(Rational(ps_num, ps_den)), Prob(Rational(pc_num, pc_den)), n,
                    backend};
  std::vector<std::uint8_t> payload(in.begin() + kFrameHeaderBytes,
                                    in.begin() + kFrameHeaderBytes + payload_bytes);
  BitSequence codeword = unpack_bits_msb(payload, payload_bits);
  BitSequence source = decode(codeword, cfg).source_word;
  return FramedBlock{std::move(source), std::move(codeword), std::move(cfg),
                     kFrameHeaderBytes + payload_bytes};
}

}  // namespace adm
