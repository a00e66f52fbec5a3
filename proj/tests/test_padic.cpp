#include <doctest.h>

#include "ffhyper/field.hpp"
#include "ffhyper/numeric.hpp"
#include "ffhyper/padic.hpp"

using namespace ffhyper;

TEST_SUITE("padic") {

TEST_CASE("fractional part and floor") {
  auto a = frac_floor(mpq_class(-3, 4));
  CHECK(a.frac == mpq_class(1, 4));
  CHECK(a.floor == -1);
  auto b = frac_floor(mpq_class(7, 4));
  CHECK(b.frac == mpq_class(3, 4));
  CHECK(b.floor == 1);
  auto c = frac_floor(mpq_class(0));
  CHECK(c.frac == 0);
  CHECK(c.floor == 0);
}

TEST_CASE("gamma values") {
  for (uint64_t p : {3ull, 5ull, 7ull, 13ull}) {
    CHECK(gamma_p(mpq_class(0), p, 3).residue() == 1);
    CHECK(gamma_p(mpq_class(1), p, 3).balanced() == -1);
  }
  CHECK(gamma_p(mpq_class(3), 5, 2).residue() == 23);  // (-1)^3 * 1 * 2 mod 25
  CHECK_THROWS_AS(gamma_p(mpq_class(1, 5), 5, 3), error);  // p | denominator
}

TEST_CASE("gamma recurrence matches the defining product") {
  for (uint64_t p : {3ull, 5ull, 7ull, 13ull}) {
    uint32_t N = 4;
    uint64_t pN = checked_pow(p, N, kResidueBudget);
    uint64_t prod = 1;  // prod_{0<j<n, p coprime j} j mod p^N
    for (int64_t n = 1; n <= 200; ++n) {
      uint64_t direct = (n % 2 == 0 ? prod : pN - prod) % pN;  // (-1)^n * prod
      CHECK(gamma_p(mpq_class(static_cast<long>(n)), p, N).residue() == direct);
      if (static_cast<uint64_t>(n) % p != 0) prod = mulmod(prod, n, pN);
    }
  }
}

TEST_CASE("gamma is continuous") {
  // Gamma_p(m) = Gamma_p(m + p^N) mod p^N, via the defining product
  // value[n] = (-1)^n prod_{0<j<n, p coprime j} j.
  for (uint64_t p : {5ull, 7ull, 13ull}) {
    for (uint32_t N = 1; N <= 4; ++N) {
      uint64_t pN = checked_pow(p, N, kResidueBudget);
      std::vector<uint64_t> value(2 * pN);
      uint64_t prod = 1;
      for (uint64_t n = 0; n < 2 * pN; ++n) {
        value[n] = (n % 2 == 0 ? prod : (pN - prod) % pN);
        if (n % p != 0) prod = mulmod(prod, n % pN, pN);
      }
      for (uint64_t m = 0; m < pN; ++m) {
        CHECK(value[m] == value[m + pN]);
        CHECK(gamma_p(mpq_class(static_cast<long>(m)), p, N).residue() == value[m]);
      }
    }
  }
}

TEST_CASE("teichmuller lifts") {
  FieldCtx f5 = FieldCtx::make(5, 1);
  ZqElem w2 = teichmuller(f5, f5.from_int(2), 2);
  CHECK(w2.coeffs()[0] == 7);  // 2^5 = 32 = 7 mod 25, fixed under x -> x^5
  CHECK(teichmuller(f5, f5.one(), 4).coeffs()[0] == 1);
  CHECK_THROWS_AS(teichmuller(f5, f5.zero(), 2), error);

  for (auto [p, r] : {std::pair<uint32_t, uint32_t>{5, 1}, {3, 2}, {7, 2}, {5, 3}, {113, 1}}) {
    FieldCtx ctx = FieldCtx::make(p, r);
    if (ctx.q() > 125 && ctx.q() != 113) continue;
    for (uint32_t N = 1; N <= 4; ++N) {
      ZqElem one = ZqElem::from_int(ctx, N, 1);
      for (uint32_t e = 1; e < ctx.q(); ++e) {
        FqElem t{e};
        ZqElem w = teichmuller(ctx, t, N);
        CHECK(w.reduce() == t);           // residue property
        CHECK(w.pow(ctx.q() - 1) == one); // root-of-unity property
      }
    }
  }
}

TEST_CASE("unramified arithmetic") {
  FieldCtx f9 = FieldCtx::make(3, 2);
  uint32_t N = 4;
  for (uint32_t e = 1; e < 9; ++e) {
    ZqElem w = teichmuller(f9, FqElem{e}, N);
    CHECK(w * w.inv() == ZqElem::from_int(f9, N, 1));
    CHECK(w.inv() == w.pow(7));  // omega^{q-2} inverts omega
  }
  // Non-units have no inverse.
  ZqElem three = ZqElem::from_int(f9, N, 3);
  CHECK_THROWS_AS(three.inv(), error);

  // r = 1 reduces to scalar arithmetic.
  FieldCtx f7 = FieldCtx::make(7, 1);
  ZqElem a = ZqElem::from_int(f7, 3, 25);
  ZqElem b = ZqElem::from_int(f7, 3, 11);
  CHECK((a * b).scalar().residue() == 25 * 11 % checked_pow(7, 3, kResidueBudget));
}

TEST_CASE("precision budget is enforced") {
  CHECK_THROWS_AS(PadicInt(3, 60), error);
  FieldCtx f5 = FieldCtx::make(5, 1);
  CHECK_THROWS_AS(gamma_p(mpq_class(1, 2), 5, 20), error);  // table budget
}

}  // TEST_SUITE
