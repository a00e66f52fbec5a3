#pragma once

#include <cstdint>
#include <vector>

#include "ffhyper/characters.hpp"
#include "ffhyper/cyclotomic.hpp"
#include "ffhyper/field.hpp"

namespace ffhyper {

/// Upper characters A_0..A_n, lower characters B_1..B_n over one field.
struct HypFParams {
  std::vector<MulChar> upper;
  std::vector<MulChar> lower;
  uint32_t n() const { return static_cast<uint32_t>(lower.size()); }
};

/// Per-character binomial products for one parameter tuple, built once and
/// reusable across arguments: each evaluation is then a cyclic-shift
/// accumulation. Immutable and shareable after construction.
class GreeneTable {
 public:
  GreeneTable(const FieldCtx& ctx, HypFParams params);

  ///   q/(q-1) sum_chi {A_0 chi | chi} {A_1 chi | B_1 chi} ... chi(x),
  /// exact; 0 at x = 0.
  CycRat eval(FqElem x) const;

  const FieldCtx& ctx() const { return *ctx_; }
  const HypFParams& params() const { return params_; }

 private:
  const FieldCtx* ctx_;
  HypFParams params_;
  std::vector<std::vector<mpz_class>> num_;  // numerators over den q^{n+1}
  mpz_class den_;
};

CycRat greene_F(const FieldCtx& ctx, const HypFParams& params, FqElem x);

/// g(T^k) for every k, built once per field. Budget-guarded like gauss_sum.
class GaussTable {
 public:
  explicit GaussTable(const FieldCtx& ctx, uint64_t max_order = kGaussOrderBudget);
  const CycInt& g(uint32_t k) const { return g_[k % g_.size()]; }
  const FieldCtx& ctx() const { return *ctx_; }

 private:
  const FieldCtx* ctx_;
  std::vector<CycInt> g_;
};

/// The Gauss-sum-quotient hypergeometric function
///   1/(q-1) sum_chi prod_i g(A_i chi)/g(A_i) prod_j g(conj(B_j chi))/g(conj(B_j))
///                    g(conj chi) chi(-1)^{n+1} chi(x),
/// computed verbatim from the definition. Exact; requires Gauss sums within
/// budget.
CycRat mccarthy_F_star(const FieldCtx& ctx, const HypFParams& params, FqElem x,
                       const GaussTable& gauss);
CycRat mccarthy_F_star(const FieldCtx& ctx, const HypFParams& params, FqElem x);

}  // namespace ffhyper
