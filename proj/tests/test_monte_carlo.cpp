#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <adm/monte_carlo.hpp>

#include <cmath>

using namespace adm;
using doctest::Approx;

namespace {

MatcherConfig cfg(const char* p_src, const char* p_code, std::uint64_t n,
                  BackendId backend = BackendId::exact()) {
  return MatcherConfig{Prob::from_decimal(p_src), Prob::from_decimal(p_code), n, backend};
}

}  // namespace

TEST_CASE("same seed reproduces the report bit for bit") {
  auto c = cfg("0.5", "0.3", 100);
  auto a = monte_carlo_report(c, 200, 42);
  auto b = monte_carlo_report(c, 200, 42);
  CHECK(a.kl_bits == b.kl_bits);
  CHECK(a.expected_length == b.expected_length);
  CHECK(a.stderr_kl == b.stderr_kl);

  auto other = monte_carlo_report(c, 200, 43);
  CHECK(a.kl_bits != other.kl_bits);
}

TEST_CASE("estimate agrees with the exact report at small n") {
  auto c = cfg("0.5", "0.3", 2);
  auto cb = enumerate_codebook(c);
  double exact_kl = informational_divergence(cb);
  double exact_len = expected_length(cb);

  auto mc = monte_carlo_report(c, 20000, 7);
  CHECK(std::abs(mc.kl_bits - exact_kl) <= 4 * mc.stderr_kl);
  CHECK(std::abs(mc.expected_length - exact_len) <= 4 * mc.stderr_length);
  CHECK(mc.kl_upper == Approx(kl_upper_bound(c.p_code)));
}

TEST_CASE("per-symbol divergence vanishes as blocks grow") {
  auto c = cfg("0.5", "0.3", 10000, BackendId::fixed());
  auto r = monte_carlo_report(c, 300, 11);
  CHECK(r.kl_bits < kl_upper_bound(c.p_code));
  CHECK(r.normalized_kl < normalized_kl_bound(c) + 1e-6);
  CHECK(r.rate == Approx(entropy(c.p_code)).epsilon(0.01));
}

TEST_CASE("rate approaches target entropy monotonically over decades") {
  double h = entropy(Prob::from_decimal("0.3"));
  double prev_gap = 1e9;
  for (std::uint64_t n : {10ull, 100ull, 1000ull, 10000ull}) {
    auto r = monte_carlo_report(cfg("0.5", "0.3", n, BackendId::fixed()), 400, 5);
    double gap = std::abs(r.rate - h);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
}

// The two backends are different codes over long blocks (renormalization
// floors compound), but both match the target: per-symbol figures agree.
TEST_CASE("fixed backend matches the exact backend per symbol") {
  auto exact = monte_carlo_report(cfg("0.5", "0.3", 256), 200, 9);
  auto fixed = monte_carlo_report(cfg("0.5", "0.3", 256, BackendId::fixed()), 200, 9);
  CHECK(fixed.expected_length == Approx(exact.expected_length).epsilon(0.01));
  CHECK(fixed.rate == Approx(exact.rate).epsilon(0.01));
  CHECK(std::abs(fixed.normalized_kl - exact.normalized_kl) < 2e-3);
  CHECK(fixed.kl_bits < kl_upper_bound(Prob::from_decimal("0.3")));
}

TEST_CASE("trial count must be positive") {
  CHECK_THROWS_AS(monte_carlo_report(cfg("0.5", "0.3", 10), 0, 1), DomainError);
}
