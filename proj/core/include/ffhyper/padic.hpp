#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ffhyper/errors.hpp"
#include "ffhyper/field.hpp"

namespace ffhyper {

/// p^N must stay below this for truncated arithmetic to fit a word.
inline constexpr uint64_t kResidueBudget = uint64_t(1) << 62;
/// Largest gamma table (p^N entries) we are willing to build.
inline constexpr uint64_t kGammaTableBudget = uint64_t(1) << 27;

/// x = floor(x) + frac(x) with 0 <= frac(x) < 1, exact.
struct FracFloor {
  mpq_class frac;
  mpz_class floor;
};
FracFloor frac_floor(const mpq_class& x);

/// Truncated element of Z_p: a residue mod p^N.
class PadicInt {
 public:
  PadicInt(uint64_t p, uint32_t N);
  PadicInt(uint64_t p, uint32_t N, int64_t v);

  /// Reduction of a rational with p-coprime denominator.
  static PadicInt from_rational(const mpq_class& v, uint64_t p, uint32_t N);

  uint64_t p() const { return p_; }
  uint32_t precision() const { return N_; }
  uint64_t modulus() const { return pN_; }
  uint64_t residue() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_unit() const { return v_ % p_ != 0; }

  PadicInt& operator+=(const PadicInt& o);
  PadicInt& operator-=(const PadicInt& o);
  PadicInt& operator*=(const PadicInt& o);
  friend PadicInt operator+(PadicInt a, const PadicInt& b) { return a += b; }
  friend PadicInt operator-(PadicInt a, const PadicInt& b) { return a -= b; }
  friend PadicInt operator*(PadicInt a, const PadicInt& b) { return a *= b; }
  PadicInt operator-() const;
  PadicInt inv() const;
  PadicInt pow(uint64_t e) const;
  bool operator==(const PadicInt& o) const;

  /// Representative in (-p^N/2, p^N/2].
  int64_t balanced() const;
  std::string str() const { return std::to_string(balanced()); }

 private:
  uint64_t p_;
  uint32_t N_;
  uint64_t pN_;
  uint64_t v_;
};

/// Gamma_p at a rational argument x with p-coprime denominator, mod p^N.
/// x is reduced to its integer representative m in [0, p^N) and the value
/// is read off a per-(p, N) table built with the recurrence
/// Gamma_p(n+1) = -n Gamma_p(n) (p coprime to n) / -Gamma_p(n) (p | n);
/// congruent arguments give congruent values, so the lookup is exact.
PadicInt gamma_p(const mpq_class& x, uint64_t p, uint32_t N);

/// Drops cached gamma tables (they are rebuilt on demand).
void clear_gamma_cache();

/// Truncated element of Z_q: a residue in (Z/p^N)[x] / (modulus of the
/// field, lifted to integer coefficients). Reduces mod p to an FqElem.
class ZqElem {
 public:
  ZqElem(const FieldCtx& ctx, uint32_t N);
  static ZqElem from_int(const FieldCtx& ctx, uint32_t N, int64_t v);
  static ZqElem from_scalar(const FieldCtx& ctx, const PadicInt& v);
  /// Coefficientwise lift of a field element (digits in [0, p)).
  static ZqElem lift(const FieldCtx& ctx, uint32_t N, FqElem a);

  const FieldCtx& ctx() const { return *ctx_; }
  uint32_t precision() const { return N_; }
  uint64_t modulus() const { return pN_; }
  const std::vector<uint64_t>& coeffs() const { return c_; }

  FqElem reduce() const;
  bool is_zero() const;
  /// True when all non-constant coordinates vanish.
  bool is_scalar() const;
  PadicInt scalar() const;

  ZqElem& operator+=(const ZqElem& o);
  ZqElem& operator-=(const ZqElem& o);
  ZqElem& operator*=(const ZqElem& o);
  friend ZqElem operator+(ZqElem a, const ZqElem& b) { return a += b; }
  friend ZqElem operator-(ZqElem a, const ZqElem& b) { return a -= b; }
  friend ZqElem operator*(ZqElem a, const ZqElem& b) { return a *= b; }
  ZqElem operator-() const;
  ZqElem& mul_scalar(uint64_t s);
  /// Hensel refinement of the residue-field inverse; error on non-units.
  ZqElem inv() const;
  ZqElem pow(uint64_t e) const;
  bool operator==(const ZqElem& o) const;
  bool operator!=(const ZqElem& o) const { return !(*this == o); }

  /// Truncate to a smaller precision.
  ZqElem truncated(uint32_t N) const;
  /// Divide every coordinate by p^k; error if not divisible. Keeps the
  /// stated precision at N - k.
  ZqElem shifted_down(uint32_t k) const;

  std::string str() const;

 private:
  const FieldCtx* ctx_;
  uint32_t N_;
  uint64_t pN_;
  std::vector<uint64_t> c_;
};

/// The Teichmuller lift: the unique (q-1)-th root of unity in Z_q mod p^N
/// reducing to t. Computed by iterating x -> x^q to a fixed point.
ZqElem teichmuller(const FieldCtx& ctx, FqElem t, uint32_t N);

}  // namespace ffhyper
