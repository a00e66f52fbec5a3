#include <doctest.h>

#include <complex>
#include <random>

#include "ffhyper/cyclotomic.hpp"

using namespace ffhyper;

TEST_SUITE("cyclotomic") {

TEST_CASE("roots of unity") {
  CHECK(CycInt::root(4, 2) == CycInt::integer(4, -1));
  CHECK(CycInt::root(1, 0) == CycInt::integer(1, 1));
  CHECK(CycInt::root(6, 2) * CycInt::root(6, 4) == CycInt::integer(6, 1));
  CHECK(CycInt::root(5, 5) == CycInt::integer(5, 1));  // exponent reduction
}

TEST_CASE("ring operations") {
  CHECK(CycInt::root(4, 1).conj() == CycInt::root(4, 3));
  CycInt s = CycInt::integer(3, 1) + CycInt::root(3, 1) + CycInt::root(3, 2);
  CHECK(s.is_zero());
  CHECK(CycInt::root(3, 1).promoted(12) == CycInt::root(12, 4));
  CHECK_THROWS_AS(CycInt::root(3, 1).promoted(8), error);
}

TEST_CASE("canonicalization") {
  CycInt v = CycInt::root(4, 2) + CycInt::integer(4, 1);
  CHECK(v.is_zero());
  CHECK(v.canonical().canonical() == v.canonical());

  const auto& phi6 = cyclotomic_polynomial(6);
  CHECK(phi6 == std::vector<mpz_class>{1, -1, 1});  // x^2 - x + 1
  const auto& phi1 = cyclotomic_polynomial(1);
  CHECK(phi1 == std::vector<mpz_class>{-1, 1});
  const auto& phi12 = cyclotomic_polynomial(12);
  CHECK(phi12 == std::vector<mpz_class>{1, 0, -1, 0, 1});  // x^4 - x^2 + 1
}

TEST_CASE("rational extraction") {
  CycRat a(CycInt::integer(4, 2), 5);
  REQUIRE(a.to_rational().has_value());
  CHECK(*a.to_rational() == mpq_class(2, 5));

  CycRat b(CycInt::root(4, 1), 1);
  CHECK(!b.to_rational().has_value());

  CycRat c(CycInt::root(3, 1) + CycInt::root(3, 2), 2);
  REQUIRE(c.to_rational().has_value());
  CHECK(*c.to_rational() == mpq_class(-1, 2));
}

TEST_CASE("rational arithmetic and normalization") {
  CycRat half = CycRat::from_rational(mpq_class(1, 2));
  CycRat third = CycRat::from_rational(mpq_class(1, 3));
  CHECK(*(half + third).to_rational() == mpq_class(5, 6));
  CHECK(*(half * third).to_rational() == mpq_class(1, 6));
  CycRat z(CycInt::integer(3, 1) + CycInt::root(3, 1) + CycInt::root(3, 2), 7);
  CHECK(z.is_zero());
  CHECK(z.den() == 1);
}

TEST_CASE("canonicalization commutes with multiplication") {
  std::mt19937_64 rng(12345);
  for (int iter = 0; iter < 60; ++iter) {
    uint32_t n = 2 + static_cast<uint32_t>(rng() % 199);
    CycInt a(n), b(n);
    for (uint32_t i = 0; i < n; ++i) {
      a.coeff(i) = static_cast<long>(rng() % 21) - 10;
      b.coeff(i) = static_cast<long>(rng() % 21) - 10;
    }
    CycInt direct = (a * b).canonical();
    CycInt reduced = (a.canonical() * b.canonical()).canonical();
    CHECK(direct == reduced);
  }
}

TEST_CASE("roots have exact multiplicative order") {
  for (uint32_t n : {2u, 3u, 4u, 6u, 8u, 12u, 15u, 24u, 30u, 105u}) {
    CycInt z = CycInt::root(n, 1);
    CycInt pw = CycInt::integer(n, 1);
    for (uint32_t k = 1; k < n; ++k) {
      pw = pw * z;
      CHECK(pw != CycInt::integer(n, 1));
    }
    CHECK(pw * z == CycInt::integer(n, 1));
  }
}

TEST_CASE("complex embedding diagnostic") {
  // Floating-point cross-check only; exactness is established elsewhere.
  std::mt19937_64 rng(999);
  for (int iter = 0; iter < 20; ++iter) {
    uint32_t n = 3 + static_cast<uint32_t>(rng() % 60);
    CycInt a(n), b(n);
    for (uint32_t i = 0; i < n; ++i) {
      a.coeff(i) = static_cast<long>(rng() % 9) - 4;
      b.coeff(i) = static_cast<long>(rng() % 9) - 4;
    }
    auto embed = [&](const CycInt& v) {
      std::complex<double> acc = 0;
      for (uint32_t i = 0; i < n; ++i)
        acc += v.coeffs()[i].get_d() *
               std::exp(std::complex<double>(0, 2 * M_PI * i / n));
      return acc;
    };
    std::complex<double> prod = embed(a) * embed(b);
    std::complex<double> exact = embed((a * b).canonical());
    double scale = std::max(1.0, std::abs(prod));
    WARN_LT(std::abs(prod - exact) / scale, 1e-6);
  }
}

}  // TEST_SUITE
