#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ffhyper/cyclotomic.hpp"
#include "ffhyper/field.hpp"

namespace ffhyper {

/// Largest root-of-unity order p(q-1) for which Gauss sums are computed
/// exactly; larger fields must stay on Jacobi-only paths.
inline constexpr uint64_t kGaussOrderBudget = 1024;

/// Multiplicative character chi = T^m, where T is the generator character
/// fixed by T(gen) = zeta_{q-1}. chi(0) = 0 for every character, including
/// the trivial one.
struct MulChar {
  const FieldCtx* ctx = nullptr;
  uint32_t m = 0;

  uint32_t order() const;
  bool is_trivial() const { return m % (ctx->q() - 1) == 0; }
  /// chi(-1) as +1/-1.
  int sign_at_minus_one() const { return m % 2 == 0 ? 1 : -1; }

  MulChar operator*(const MulChar& o) const;
  MulChar inverse() const;
  MulChar pow(int64_t e) const;
  bool operator==(const MulChar& o) const;
};

/// 1 if A is trivial, else 0.
int char_delta(const MulChar& A);
/// 1 if x = 0, else 0.
int delta0(FqElem x);

/// chi(x) as an element of Z[zeta_{q-1}] (ring zero for x = 0).
CycInt char_eval(const MulChar& chi, FqElem x);
/// chi(x) when the value is real: +1, -1 or 0 (order of chi must divide 2).
int char_sign(const MulChar& chi, FqElem x);

/// The standard distinguished characters of F_q^x.
struct StdChars {
  MulChar eps;                 // trivial
  MulChar phi;                 // quadratic, order 2
  MulChar T;                   // generator character
  std::optional<MulChar> chi4; // order 4, present iff q = 1 mod 4
  std::optional<MulChar> chi3; // order 3, present iff q = 1 mod 3
};
StdChars std_chars(const FieldCtx& ctx);

/// Resolves "eps", "phi", "chi3", "chi3^2", "chi4", "chi4^3", "T^k".
MulChar char_by_name(const FieldCtx& ctx, const std::string& name);

/// g(chi) = sum_x chi(x) zeta_p^{tr(x)}, exact in Z[zeta_{p(q-1)}].
/// Errors with budget_exceeded when p(q-1) > max_order.
CycInt gauss_sum(const MulChar& chi, uint64_t max_order = kGaussOrderBudget);

/// J(A,B) = sum_x A(x) B(1-x), exact in Z[zeta_{q-1}]. Direct O(q)
/// summation; Gauss sums are never on this path.
CycInt jacobi_sum(const MulChar& A, const MulChar& B);

/// Binomial coefficient: B(-1)/q * J(A, conj(B)).
CycRat binomial(const MulChar& A, const MulChar& B);

}  // namespace ffhyper
