#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffhyper/errors.hpp"

namespace ffhyper {

/// Largest admissible field size q = p^r.
inline constexpr uint32_t kFieldBudget = 1u << 20;

bool is_prime(uint64_t n);

/// q = p^r with p an odd prime and r >= 1.
struct PrimePower {
  uint32_t p = 0;
  uint32_t r = 0;
  uint32_t q = 0;
};

/// Element of F_q encoded as sum c_i p^i over the power basis of the modulus.
/// For r = 1 the encoding is simply the residue.
struct FqElem {
  uint32_t enc = 0;
  friend auto operator<=>(const FqElem&, const FqElem&) = default;
};

/// p = x^2 + y^2 with x odd, x > 0, y > 0.
struct TwoSquares {
  int64_t x = 0;
  int64_t y = 0;
  int64_t p = 0;
};

/// Decomposition for primes p ≡ 1 (mod 4); exhaustive search over odd x.
TwoSquares two_squares(int64_t p);

/// A concrete finite field: modulus, multiplicative generator, and the
/// full discrete-log table. Immutable after construction; operations are
/// pure and safe to share across threads.
class FieldCtx {
 public:
  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;
  FieldCtx(FieldCtx&&) = default;
  FieldCtx& operator=(FieldCtx&&) = default;

  /// Builds F_{p^r}. The modulus is the first monic irreducible of degree r
  /// in encoding order (coefficient-lexicographic, constant term fastest);
  /// the generator is the first element of exact order q-1 in the same
  /// order. Both choices are deterministic across runs.
  static FieldCtx make(uint32_t p, uint32_t r);

  const PrimePower& pp() const { return pp_; }
  uint32_t p() const { return pp_.p; }
  uint32_t r() const { return pp_.r; }
  uint32_t q() const { return pp_.q; }

  /// Monic modulus, coefficients c_0..c_r ascending (c_r = 1). For r = 1
  /// this is x, i.e. {0, 1}.
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  FqElem gen() const { return gen_; }

  FqElem zero() const { return {0}; }
  FqElem one() const { return {1}; }
  /// v mod p embedded in the prime subfield.
  FqElem from_int(int64_t v) const;
  FqElem from_coeffs(const std::vector<int64_t>& c) const;
  std::vector<uint32_t> coeffs(FqElem a) const;

  FqElem add(FqElem a, FqElem b) const;
  FqElem sub(FqElem a, FqElem b) const;
  FqElem neg(FqElem a) const;
  FqElem mul(FqElem a, FqElem b) const;
  FqElem inv(FqElem a) const;
  FqElem pow(FqElem a, int64_t e) const;

  /// Discrete log base gen(); error on zero.
  uint32_t log(FqElem a) const;
  /// gen()^k.
  FqElem exp(uint64_t k) const;

  /// Both square roots {s, -s} of a nonzero square, {0, 0} for zero,
  /// nullopt for non-squares. Squareness is decided by log parity.
  std::optional<std::pair<FqElem, FqElem>> sqrt(FqElem a) const;

  /// tr(a) = a + a^p + ... + a^{p^{r-1}}, a residue mod p.
  uint32_t trace(FqElem a) const;

  std::string to_string(FqElem a) const;
  /// Parses what to_string produces: a plain integer, or c0,c1,...  (r > 1).
  FqElem parse(const std::string& s) const;

 private:
  FieldCtx() = default;

  PrimePower pp_;
  std::vector<uint32_t> modulus_;
  FqElem gen_;
  std::vector<uint32_t> log_;  // enc -> k with gen^k = enc; log_[0] unused
  std::vector<uint32_t> exp_;  // k -> enc, size q-1
};

}  // namespace ffhyper
