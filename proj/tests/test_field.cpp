#include <doctest.h>

#include <set>

#include "ffhyper/field.hpp"
#include "ffhyper/numeric.hpp"

using namespace ffhyper;

namespace {

std::vector<uint32_t> prime_divisors(uint32_t n) {
  std::vector<uint32_t> out;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::pair<uint32_t, uint32_t>> odd_prime_powers(uint32_t qmax) {
  std::vector<std::pair<uint32_t, uint32_t>> out;
  for (uint32_t p = 3; p <= qmax; p += 2) {
    if (!is_prime(p)) continue;
    uint64_t q = p;
    uint32_t r = 1;
    while (q <= qmax) {
      out.push_back({p, r});
      q *= p;
      ++r;
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("field") {

TEST_CASE("construction picks deterministic modulus and generator") {
  FieldCtx f5 = FieldCtx::make(5, 1);
  CHECK(f5.gen().enc == 2);  // smallest primitive root mod 5

  FieldCtx f9 = FieldCtx::make(3, 2);
  CHECK(f9.modulus() == std::vector<uint32_t>{1, 0, 1});  // x^2 + 1

  FieldCtx f7 = FieldCtx::make(7, 1);
  CHECK(f7.gen().enc == 3);
}

TEST_CASE("construction errors are distinct") {
  CHECK_THROWS_WITH_AS(FieldCtx::make(4, 1), doctest::Contains("not prime"), error);
  CHECK_THROWS_AS(FieldCtx::make(2, 1), error);
  try {
    FieldCtx::make(2, 1);
  } catch (const error& e) {
    CHECK(e.code() == errc::even_characteristic);
  }
  try {
    FieldCtx::make(3, 20);
  } catch (const error& e) {
    CHECK(e.code() == errc::budget_exceeded);
  }
}

TEST_CASE("arithmetic examples") {
  FieldCtx f5 = FieldCtx::make(5, 1);
  CHECK(f5.inv(FqElem{2}) == FqElem{3});

  FieldCtx f9 = FieldCtx::make(3, 2);
  FqElem alpha{3};  // the class of x
  CHECK(f9.mul(alpha, alpha) == f9.from_int(-1));

  FieldCtx f7 = FieldCtx::make(7, 1);
  CHECK(f7.pow(FqElem{3}, 6) == f7.one());
  CHECK_THROWS_AS(f7.inv(f7.zero()), error);
}

TEST_CASE("discrete log examples") {
  FieldCtx f5 = FieldCtx::make(5, 1);
  CHECK(f5.log(FqElem{4}) == 2);
  CHECK(f5.log(f5.one()) == 0);
  CHECK_THROWS_AS(f5.log(f5.zero()), error);

  FieldCtx f7 = FieldCtx::make(7, 1);
  CHECK(f7.log(FqElem{6}) == 3);  // 3^3 = 27 = 6 mod 7
}

TEST_CASE("square roots") {
  FieldCtx f7 = FieldCtx::make(7, 1);
  auto s = f7.sqrt(f7.from_int(2));
  REQUIRE(s.has_value());
  std::set<uint32_t> roots{s->first.enc, s->second.enc};
  CHECK(roots == std::set<uint32_t>{3, 4});

  FieldCtx f5 = FieldCtx::make(5, 1);
  CHECK(!f5.sqrt(f5.from_int(2)).has_value());

  auto z = f5.sqrt(f5.zero());
  REQUIRE(z.has_value());
  CHECK(z->first == f5.zero());
  CHECK(z->second == f5.zero());
}

TEST_CASE("trace") {
  FieldCtx f7 = FieldCtx::make(7, 1);
  for (uint32_t e = 0; e < 7; ++e) CHECK(f7.trace(FqElem{e}) == e);

  FieldCtx f9 = FieldCtx::make(3, 2);
  CHECK(f9.trace(FqElem{3}) == 0);  // alpha + alpha^3 = 0
  CHECK(f9.trace(f9.one()) == 2);
}

TEST_CASE("trace is linear and surjective") {
  for (auto [p, r] : {std::pair<uint32_t, uint32_t>{3, 2}, {5, 2}, {3, 3}, {7, 2}}) {
    FieldCtx ctx = FieldCtx::make(p, r);
    std::set<uint32_t> image;
    for (uint32_t e = 0; e < ctx.q(); ++e) image.insert(ctx.trace(FqElem{e}));
    CHECK(image.size() == p);
    for (int i = 0; i < 50; ++i) {
      FqElem a{static_cast<uint32_t>((i * 37 + 5) % ctx.q())};
      FqElem b{static_cast<uint32_t>((i * 91 + 11) % ctx.q())};
      CHECK((ctx.trace(a) + ctx.trace(b)) % p == ctx.trace(ctx.add(a, b)));
    }
  }
}

TEST_CASE("two squares decomposition") {
  TwoSquares t5 = two_squares(5);
  CHECK(t5.x == 1);
  CHECK(t5.y == 2);
  TwoSquares t13 = two_squares(13);
  CHECK(t13.x == 3);
  CHECK(t13.y == 2);
  CHECK_THROWS_AS(two_squares(7), error);
  for (int64_t p : {17, 29, 37, 41, 53, 61, 73, 89, 97}) {
    TwoSquares t = two_squares(p);
    CHECK(t.x * t.x + t.y * t.y == p);
    CHECK(t.x % 2 == 1);
    CHECK(t.y % 2 == 0);
    CHECK(t.x > 0);
    CHECK(t.y > 0);
  }
}

TEST_CASE("generator order is exact for every field up to 2^12") {
  for (auto [p, r] : odd_prime_powers(1u << 12)) {
    FieldCtx ctx = FieldCtx::make(p, r);
    uint32_t qm1 = ctx.q() - 1;
    for (uint32_t d : prime_divisors(qm1))
      CHECK(ctx.pow(ctx.gen(), qm1 / d) != ctx.one());
  }
}

TEST_CASE("log inverts pow") {
  for (auto [p, r] : {std::pair<uint32_t, uint32_t>{7, 2}, {3, 3}, {11, 2}, {47, 1}}) {
    FieldCtx ctx = FieldCtx::make(p, r);
    uint32_t qm1 = ctx.q() - 1;
    for (uint32_t e = 1; e < ctx.q(); ++e) {
      FqElem x{e};
      CHECK(ctx.exp(ctx.log(x)) == x);
    }
    for (uint32_t k = 0; k < qm1; ++k) CHECK(ctx.log(ctx.exp(k)) == k);
  }
}

TEST_CASE("special-value sign is invariant under root sign flips") {
  // -2x phi(6) (-1)^((x+y+1)/2) is unchanged by (x,y) -> (-x,y), (x,-y).
  for (uint32_t p = 5; p <= 97; p += 4) {
    if (!is_prime(p) || p % 4 != 1) continue;
    FieldCtx ctx = FieldCtx::make(p, 1);
    int phi6 = ctx.log(ctx.from_int(6)) % 2 == 0 ? 1 : -1;
    TwoSquares t = two_squares(p);
    auto value = [&](int64_t x, int64_t y) {
      int64_t h = (x + y + 1) / 2;
      int sgn = ((h % 2) + 2) % 2 == 0 ? 1 : -1;
      return -2 * x * phi6 * sgn;
    };
    int64_t base = value(t.x, t.y);
    CHECK(value(-t.x, t.y) == base);
    CHECK(value(t.x, -t.y) == base);
    CHECK(value(-t.x, -t.y) == base);
  }
}

TEST_CASE("element parsing round trips") {
  FieldCtx f49 = FieldCtx::make(7, 2);
  for (uint32_t e : {0u, 1u, 13u, 48u}) {
    FqElem x{e};
    CHECK(f49.parse(f49.to_string(x)) == x);
  }
  FieldCtx f5 = FieldCtx::make(5, 1);
  CHECK(f5.parse("-1") == f5.from_int(4));
}

}  // TEST_SUITE
