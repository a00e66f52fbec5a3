#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ffhyper/errors.hpp"

namespace ffhyper {

/// Largest root-of-unity order reachable by promotion.
inline constexpr uint32_t kOrderBudget = 5000;

/// Phi_n, coefficients ascending, monic. Computed by exact division of
/// x^n - 1 by the Phi_d of proper divisors; memoized, thread-safe.
const std::vector<mpz_class>& cyclotomic_polynomial(uint32_t n);

/// Element of Z[zeta_n] in the group-ring representation: a length-n
/// integer vector standing for sum c_i zeta_n^i, reduced mod x^n - 1 only.
/// Canonicalization (reduction mod Phi_n) happens on demand; equality is
/// decided on canonical forms. Values are immutable in spirit: every
/// operation returns a fresh value.
class CycInt {
 public:
  explicit CycInt(uint32_t order = 1) : order_(order), c_(order) {
    if (order == 0 || order > kOrderBudget)
      fail(errc::incompatible_orders, "CycInt: order out of range");
  }

  static CycInt root(uint32_t order, int64_t k);
  static CycInt integer(uint32_t order, mpz_class v);
  static CycInt from_coeffs(uint32_t order, std::vector<mpz_class> c);

  uint32_t order() const { return order_; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  /// Mutable coefficient access; the character-sum accumulation hook.
  mpz_class& coeff(uint32_t i) { return c_[i]; }

  bool raw_is_zero() const;

  CycInt operator-() const;
  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  CycInt& operator*=(const CycInt& o) { return *this = *this * o; }
  CycInt operator*(const mpz_class& s) const;

  /// zeta_n -> zeta_n^{-1}.
  CycInt conj() const;

  /// Lift into Z[zeta_target]; order() must divide target.
  CycInt promoted(uint32_t target) const;

  /// Representative reduced mod Phi_n (degree < phi(n)); idempotent.
  CycInt canonical() const;

  bool is_zero() const { return canonical().raw_is_zero(); }
  bool operator==(const CycInt& o) const;
  bool operator!=(const CycInt& o) const { return !(*this == o); }

  /// gcd of the coefficients (0 for the zero value). Callers wanting the
  /// content of the value itself should canonicalize first.
  mpz_class content() const;
  void divide_exact(const mpz_class& d);

  /// The integer value, when the canonical form is constant.
  std::optional<mpz_class> to_integer() const;

  std::string str() const;

 private:
  uint32_t order_;
  std::vector<mpz_class> c_;
};

uint32_t lcm_order(uint32_t a, uint32_t b);

/// Element of Q(zeta_n) with a plain positive integer denominator.
/// The numerator is kept canonical and gcd(content(num), den) = 1.
class CycRat {
 public:
  CycRat() : num_(1), den_(1) {}
  CycRat(CycInt num, mpz_class den);
  static CycRat from_rational(const mpq_class& v, uint32_t order = 1);

  const CycInt& num() const { return num_; }
  const mpz_class& den() const { return den_; }

  CycRat operator-() const;
  friend CycRat operator+(const CycRat& a, const CycRat& b);
  friend CycRat operator-(const CycRat& a, const CycRat& b);
  friend CycRat operator*(const CycRat& a, const CycRat& b);
  CycRat operator*(const mpq_class& s) const;
  CycRat& operator+=(const CycRat& o) { return *this = *this + o; }
  CycRat& operator*=(const CycRat& o) { return *this = *this * o; }

  bool operator==(const CycRat& o) const;
  bool operator!=(const CycRat& o) const { return !(*this == o); }
  bool is_zero() const { return num_.raw_is_zero(); }

  /// The rational value, when the canonical numerator is constant.
  std::optional<mpq_class> to_rational() const;

  std::string str() const;

 private:
  void normalize();

  CycInt num_;
  mpz_class den_;
};

}  // namespace ffhyper
