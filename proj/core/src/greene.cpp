#include "ffhyper/greene.hpp"

namespace ffhyper {

GreeneTable::GreeneTable(const FieldCtx& ctx, HypFParams params)
    : ctx_(&ctx), params_(std::move(params)) {
  if (params_.upper.size() != params_.lower.size() + 1)
    fail(errc::bad_argument, "GreeneTable: need one more upper than lower");
  uint32_t qm1 = ctx.q() - 1;
  uint32_t n = params_.n();
  den_ = 1;
  for (uint32_t i = 0; i <= n; ++i) den_ *= ctx.q();  // q^{n+1}
  num_.reserve(qm1);
  for (uint32_t j = 0; j < qm1; ++j) {
    MulChar chi{&ctx, j};
    CycRat prod = binomial(params_.upper[0] * chi, chi);
    for (uint32_t i = 0; i < n; ++i)
      prod = prod * binomial(params_.upper[i + 1] * chi, params_.lower[i] * chi);
    // Rescale to the common denominator q^{n+1}.
    mpz_class scale = den_ / prod.den();
    CycInt num = prod.num() * scale;
    std::vector<mpz_class> c = num.coeffs();
    c.resize(qm1);
    num_.push_back(std::move(c));
  }
}

CycRat GreeneTable::eval(FqElem x) const {
  uint32_t qm1 = ctx_->q() - 1;
  if (x.enc == 0) return CycRat(CycInt(qm1), 1);
  uint32_t L = ctx_->log(x);
  std::vector<mpz_class> acc(qm1, 0);
  for (uint32_t j = 0; j < qm1; ++j) {
    uint64_t shiftv = static_cast<uint64_t>(j) * L % qm1;
    const auto& src = num_[j];
    for (uint32_t i = 0; i < qm1; ++i) {
      if (src[i] == 0) continue;
      uint32_t k = i + static_cast<uint32_t>(shiftv);
      if (k >= qm1) k -= qm1;
      acc[k] += src[i];
    }
  }
  // F = q * acc / ((q-1) * q^{n+1}) = acc / ((q-1) q^n).
  mpz_class den = den_ / ctx_->q() * (ctx_->q() - 1);
  return CycRat(CycInt::from_coeffs(qm1, std::move(acc)), den);
}

CycRat greene_F(const FieldCtx& ctx, const HypFParams& params, FqElem x) {
  return GreeneTable(ctx, params).eval(x);
}

GaussTable::GaussTable(const FieldCtx& ctx, uint64_t max_order) : ctx_(&ctx) {
  uint32_t qm1 = ctx.q() - 1;
  g_.reserve(qm1);
  for (uint32_t k = 0; k < qm1; ++k)
    g_.push_back(gauss_sum(MulChar{&ctx, k}, max_order));
}

CycRat mccarthy_F_star(const FieldCtx& ctx, const HypFParams& params, FqElem x,
                       const GaussTable& gauss) {
  if (params.upper.size() != params.lower.size() + 1)
    fail(errc::bad_argument, "mccarthy_F_star: need one more upper than lower");
  uint32_t qm1 = ctx.q() - 1;
  uint32_t n = params.n();
  uint32_t ring = ctx.p() * qm1;
  if (x.enc == 0) return CycRat(CycInt(qm1), 1);
  uint32_t L = ctx.log(x);

  CycInt total(ring);
  for (uint32_t j = 0; j < qm1; ++j) {
    CycInt term = gauss.g((qm1 - j) % qm1);  // g(conj chi)
    for (uint32_t i = 0; i <= n; ++i)
      term = term * gauss.g((params.upper[i].m + j) % qm1);
    for (uint32_t i = 0; i < n; ++i)
      term = term * gauss.g((2 * qm1 - params.lower[i].m - j) % qm1);
    // chi(-1)^{n+1} chi(x): both are powers of zeta_{q-1} = zeta_ring^p.
    uint64_t sign_shift = (n % 2 == 0 && j % 2 == 1) ? (qm1 / 2) : 0;
    uint64_t e = (static_cast<uint64_t>(j) * L + sign_shift) % qm1;
    term = term * CycInt::root(ring, static_cast<int64_t>(e * ctx.p()));
    total += term;
  }

  // Divide by (q-1) prod_i g(A_i) prod_j g(conj B_j) using
  // g(chi) conj(g(chi)) = q for nontrivial chi and g(eps) = -1.
  CycInt d0 = CycInt::integer(ring, 1);
  uint32_t nontrivial = 0;
  for (uint32_t i = 0; i <= n; ++i) {
    d0 = d0 * gauss.g(params.upper[i].m);
    if (params.upper[i].m % qm1 != 0) ++nontrivial;
  }
  for (uint32_t i = 0; i < n; ++i) {
    d0 = d0 * gauss.g((qm1 - params.lower[i].m % qm1) % qm1);
    if (params.lower[i].m % qm1 != 0) ++nontrivial;
  }
  CycInt num = total * d0.conj();
  mpz_class den = qm1;
  for (uint32_t i = 0; i < nontrivial; ++i) den *= ctx.q();
  return CycRat(std::move(num), den);
}

CycRat mccarthy_F_star(const FieldCtx& ctx, const HypFParams& params, FqElem x) {
  GaussTable gauss(ctx);
  return mccarthy_F_star(ctx, params, x, gauss);
}

}  // namespace ffhyper
