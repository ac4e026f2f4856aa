#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <adm/codec.hpp>
#include <adm/interval.hpp>

#include <random>

using namespace adm;

namespace {

Rational rat(const char* text) {
  BigInt digits = 0, scale = 1;
  bool dot = false;
  for (const char* p = text; *p; ++p) {
    if (*p == '.') {
      dot = true;
      continue;
    }
    digits = digits * 10 + (*p - '0');
    if (dot) scale *= 10;
  }
  return Rational(digits, scale);
}

ExactInterval iv(const char* lo, const char* hi) {
  return ExactInterval{rat(lo), rat(hi)};
}

}  // namespace

TEST_CASE("read_bit splits at low + p*width") {
  ExactInterval unit = unit_interval();
  CHECK(read_bit(unit, rat("0.3"), 0) == iv("0", "0.3"));
  CHECK(read_bit(unit, rat("0.3"), 1) == iv("0.3", "1"));
  CHECK(read_bit(iv("0.3", "1"), rat("0.3"), 1) == iv("0.51", "1"));
}

TEST_CASE("refine yields adjacent candidates covering the input") {
  auto [lo, hi] = refine(unit_interval(), rat("0.3"));
  CHECK(lo == iv("0", "0.3"));
  CHECK(hi == iv("0.3", "1"));

  auto [lo2, hi2] = refine(iv("0.3", "1"), rat("0.3"));
  CHECK(lo2 == iv("0.3", "0.51"));
  CHECK(hi2 == iv("0.51", "1"));

  auto [lo3, hi3] = refine(iv("0", "0.5"), rat("0.5"));
  CHECK(lo3 == iv("0", "0.25"));
  CHECK(hi3 == iv("0.25", "0.5"));
}

TEST_CASE("contains uses half-open semantics") {
  CHECK(contains(iv("0", "0.3"), iv("0", "0.25")));
  CHECK_FALSE(contains(iv("0", "0.25"), iv("0", "0.3")));
  CHECK(contains(iv("0.3", "1"), iv("0.3", "1")));
}

TEST_CASE("degenerate probabilities and intervals are rejected") {
  CHECK_THROWS_AS(Prob(Rational(0)), DomainError);
  CHECK_THROWS_AS(Prob(Rational(1)), DomainError);
  CHECK_THROWS_AS(Prob(Rational(3, 2)), DomainError);
  CHECK_THROWS_AS(read_bit(unit_interval(), Rational(1), 0), DomainError);
  CHECK_THROWS_AS(make_interval(Rational(1, 2), Rational(1, 2)), DomainError);
}

TEST_CASE("random refinement chains keep nesting and exact partition") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Rational p(1 + rng() % 99, 100);
    ExactInterval current = unit_interval();
    for (int depth = 0; depth < 20; ++depth) {
      auto [lo, hi] = refine(current, p);
      CHECK(lo.high == hi.low);
      CHECK(lo.low == current.low);
      CHECK(hi.high == current.high);
      CHECK(lo.width() + hi.width() == current.width());
      ExactInterval next = rng() % 2 ? hi : lo;
      CHECK(contains(current, next));
      CHECK(next.low < next.high);
      current = next;
    }
  }
}

TEST_CASE("fixed read_bit matches the quantized split") {
  QuantProb p{Prob::from_decimal("0.5").quantize(32), 32};
  FixedInterval frame{0, u128{1} << 32};
  auto lo = read_bit(frame, p, 0);
  auto hi = read_bit(frame, p, 1);
  CHECK(lo.high == hi.low);
  CHECK((std::uint64_t)lo.high == (1ull << 31));
}

TEST_CASE("fixed backend underflows loudly, never silently") {
  QuantProb p{Prob::from_decimal("0.3").quantize(32), 32};
  FixedInterval narrow{0, 2};
  CHECK_THROWS_AS(read_bit(narrow, p, 0), UnderflowError);
}

TEST_CASE("renormalize is the identity on a full frame") {
  const u128 one = u128{1} << 32;
  FixedInterval code{0, one};
  FixedInterval src{5, 1000};
  auto r = renormalize(code, src, one);
  CHECK(r.code == code);
  CHECK(r.src == src);
  CHECK(r.record.identity(one));
}

TEST_CASE("renormalize maps the code candidate onto the frame, src follows") {
  const u128 one = u128{1} << 32;
  QuantProb p{Prob::from_decimal("0.3").quantize(32), 32};
  FixedInterval frame{0, one};
  auto cand = read_bit(frame, p, 0);  // lower p-fraction of the frame
  FixedInterval src{cand.low + cand.width() / 4, cand.low + cand.width() / 2};
  auto r = renormalize(cand, src, one);
  CHECK(r.code.low == 0);
  CHECK(r.code.high == one);
  CHECK_FALSE(r.record.identity(one));
  CHECK(r.record.offset == cand.low);
  CHECK(r.record.width == cand.width());
  // same affine map applied to src
  CHECK(r.src.low == (src.low - cand.low) * one / cand.width());
  CHECK(r.src.high == (src.high - cand.low) * one / cand.width());
  CHECK(r.src.low < r.src.high);
}

TEST_CASE("decoder replays the encoder's scale records exactly") {
  MatcherConfig cfg{Prob::from_decimal("0.5"), Prob::from_decimal("0.3"), 64,
                    BackendId::fixed()};
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    BitSequence s;
    for (int i = 0; i < 64; ++i) s.push_back(rng() & 1);
    std::vector<ScaleRecord> enc_records;
    BitSequence c = encode_fixed_traced(s, cfg, enc_records);

    // The decoder re-derives every adoption the encoder made; its affine
    // maps must be a prefix of the encoder's (the encoder may scale a few
    // more times after the last decoded bit).
    std::vector<ScaleRecord> dec_records;
    auto decoded = decode_fixed_traced(c, cfg, dec_records);
    REQUIRE(decoded.source_word == s);
    REQUIRE(dec_records.size() <= enc_records.size());
    for (std::size_t i = 0; i < dec_records.size(); ++i) {
      CHECK(dec_records[i].offset == enc_records[i].offset);
      CHECK(dec_records[i].width == enc_records[i].width);
    }
  }
}

TEST_CASE("quantization consistency: fixed equals exact on quantized probs") {
  const unsigned f = 32;
  for (const char* pc : {"0.1", "0.3", "0.5"}) {
    Prob p_src = Prob::from_decimal("0.5");
    Prob p_code = Prob::from_decimal(pc);
    Prob p_src_q{Rational(p_src.quantize(f), BigInt(1) << f)};
    Prob p_code_q{Rational(p_code.quantize(f), BigInt(1) << f)};
    for (unsigned n : {1u, 4u, 8u}) {
      MatcherConfig fixed_cfg{p_src, p_code, n, BackendId::fixed(64, f)};
      MatcherConfig exact_cfg{p_src_q, p_code_q, n, BackendId::exact()};
      for (std::uint64_t w = 0; w < (1ull << n); ++w) {
        BitSequence s;
        for (unsigned i = 0; i < n; ++i) s.push_back((w >> (n - 1 - i)) & 1);
        CHECK(encode(s, fixed_cfg) == encode(s, exact_cfg));
      }
    }
  }
}
