#pragma once

#include <cstdint>
#include <utility>

#include "adm/errors.hpp"
#include "adm/prob.hpp"

namespace adm {

using u128 = unsigned __int128;

// Half-open subinterval [low, high) of the unit interval (exact backend)
// or of the register frame [0, one) (fixed backend).
template <class Scalar>
struct Interval {
  Scalar low;
  Scalar high;

  Scalar width() const { return high - low; }

  bool operator==(const Interval& other) const {
    return low == other.low && high == other.high;
  }
};

using ExactInterval = Interval<Rational>;
using FixedInterval = Interval<u128>;

template <class Scalar>
Interval<Scalar> make_interval(Scalar low, Scalar high) {
  if (!(low < high)) throw DomainError("interval width must be positive");
  return Interval<Scalar>{std::move(low), std::move(high)};
}

inline ExactInterval unit_interval() { return ExactInterval{Rational(0), Rational(1)}; }

// Half-open containment: inner lies inside outer.
template <class Scalar>
bool contains(const Interval<Scalar>& outer, const Interval<Scalar>& inner) {
  return inner.low >= outer.low && inner.high <= outer.high;
}

// ---- exact backend ------------------------------------------------------

inline ExactInterval read_bit(const ExactInterval& i, const Rational& p, int bit) {
  if (p <= 0 || p >= 1) throw DomainError("split probability outside (0,1)");
  if (!(i.low < i.high)) throw DomainError("invalid interval");
  Rational split = i.low + p * i.width();
  return bit == 0 ? ExactInterval{i.low, split} : ExactInterval{split, i.high};
}

inline std::pair<ExactInterval, ExactInterval> refine(const ExactInterval& i,
                                                      const Rational& p) {
  return {read_bit(i, p, 0), read_bit(i, p, 1)};
}

// ---- fixed backend ------------------------------------------------------

// F-bit quantized probability: value / 2^f_bits.
struct QuantProb {
  std::uint64_t value;
  unsigned f_bits;
};

inline FixedInterval read_bit(const FixedInterval& i, const QuantProb& p, int bit) {
  u128 w = i.width();
  u128 step = (w * p.value) >> p.f_bits;
  if (step == 0 || step >= w) {
    throw UnderflowError("fixed interval too narrow to split");
  }
  u128 split = i.low + step;
  return bit == 0 ? FixedInterval{i.low, split} : FixedInterval{split, i.high};
}

inline std::pair<FixedInterval, FixedInterval> refine(const FixedInterval& i,
                                                      const QuantProb& p) {
  u128 w = i.width();
  u128 step = (w * p.value) >> p.f_bits;
  if (step == 0 || step >= w) {
    throw UnderflowError("fixed interval too narrow to split");
  }
  u128 split = i.low + step;
  return {FixedInterval{i.low, split}, FixedInterval{split, i.high}};
}

// Affine map applied when a code-side candidate is adopted: the candidate
// becomes the full frame and the source interval follows the same map.
struct ScaleRecord {
  u128 offset;
  u128 width;

  bool identity(u128 one) const { return offset == 0 && width == one; }
};

struct RenormResult {
  FixedInterval code;
  FixedInterval src;
  ScaleRecord record;
};

inline RenormResult renormalize(const FixedInterval& i_code, const FixedInterval& i_src,
                                u128 one) {
  if (!contains(i_code, i_src)) {
    throw InternalError("renormalize: source interval escaped the code interval");
  }
  u128 w = i_code.width();
  if (i_code.low == 0 && w == one) {
    return RenormResult{i_code, i_src, ScaleRecord{0, w}};
  }
  auto map = [&](u128 x) { return (x - i_code.low) * one / w; };
  FixedInterval src{map(i_src.low), map(i_src.high)};
  if (!(src.low < src.high)) {
    throw UnderflowError("source interval collapsed during renormalization");
  }
  return RenormResult{FixedInterval{0, one}, src, ScaleRecord{i_code.low, w}};
}

}  // namespace adm
