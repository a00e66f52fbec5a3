#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ffhyper/cyclotomic.hpp"
#include "ffhyper/field.hpp"
#include "ffhyper/padic.hpp"

namespace ffhyper {

/// Parameters of the p-adic series: n upper and n lower rationals, all with
/// p-coprime denominators.
struct GParams {
  std::vector<mpq_class> a;
  std::vector<mpq_class> b;
  uint32_t n() const { return static_cast<uint32_t>(a.size()); }
};

/// A value p^valuation * unit with unit carried mod p^N. valuation can be
/// negative only when some lower parameter is not a p-adic integer multiple
/// of 1 (never for the b = 0 series used by the identity suite).
class GValue {
 public:
  GValue(int valuation, ZqElem unit, bool zero_mod_pN)
      : valuation_(valuation), unit_(std::move(unit)), zero_(zero_mod_pN) {}

  int valuation() const { return valuation_; }
  const ZqElem& unit() const { return unit_; }
  uint32_t precision() const { return unit_.precision(); }

  /// Exact 0 mod p^N (the witnessing precision is precision()).
  bool is_zero() const;
  /// p^valuation * unit as a residue mod p^N; error when the value is
  /// genuinely fractional.
  ZqElem residue() const;
  std::string str() const;

 private:
  int valuation_;
  ZqElem unit_;
  bool zero_;
};

/// Default working precision: the smallest N with p^N > 40 q^2 and N >= 3.
/// Every identity-checked value is an integer bounded well below 20 q^2,
/// so equality mod p^N decides exact equality.
uint32_t default_precision(const FieldCtx& ctx);

/// The p-adic hypergeometric series, summed over a = 0..q-2 with exact
/// rational floor/fractional-part bookkeeping, table-backed Gamma_p values
/// and Teichmuller powers. t must be nonzero.
GValue pG(const GParams& params, const FieldCtx& ctx, FqElem t, uint32_t N);

/// Checks the gamma multiplication identity
///   omega(t^{-ta}) prod_i Gamma_p(<-t p^i a/(q-1)>) prod_{h=1}^{t-1} Gamma_p(<h p^i/t>)
///     = prod_i prod_{h=0}^{t-1} Gamma_p(<p^i(1+h)/t - p^i a/(q-1)>)
/// in Z_q mod p^N. Requires p coprime to t.
bool gamma_product_identity_check(const FieldCtx& ctx, uint32_t t, uint32_t a,
                                  uint32_t N);

/// Checks the floor identity
///   -floor(-4ap^i/(q-1)) + floor(-2ap^i/(q-1))
///     = -floor(<p^i/4> - ap^i/(q-1)) - floor(<3p^i/4> - ap^i/(q-1))
/// by exact rational evaluation. q must be an odd prime power.
bool floor_identity_check(uint32_t q, uint32_t a, uint32_t i);

/// Embedding Q(zeta_{q-1}) -> Z_q sending zeta_{q-1} to the Teichmuller
/// lift of the field generator. The cyclotomic order must divide q-1 and
/// denominators must be prime to p.
ZqElem zq_embed(const FieldCtx& ctx, const CycInt& v, uint32_t N);
ZqElem zq_embed(const FieldCtx& ctx, const CycRat& v, uint32_t N);

}  // namespace ffhyper
