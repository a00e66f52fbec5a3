#include "ffhyper/characters.hpp"

#include <numeric>

namespace ffhyper {

uint32_t MulChar::order() const {
  uint32_t qm1 = ctx->q() - 1;
  return qm1 / std::gcd(m % qm1, qm1);
}

MulChar MulChar::operator*(const MulChar& o) const {
  return {ctx, (m + o.m) % (ctx->q() - 1)};
}

MulChar MulChar::inverse() const {
  uint32_t qm1 = ctx->q() - 1;
  return {ctx, (qm1 - m % qm1) % qm1};
}

MulChar MulChar::pow(int64_t e) const {
  uint32_t qm1 = ctx->q() - 1;
  int64_t k = (static_cast<int64_t>(m) * (e % qm1)) % qm1;
  if (k < 0) k += qm1;
  return {ctx, static_cast<uint32_t>(k)};
}

bool MulChar::operator==(const MulChar& o) const {
  return ctx == o.ctx && m % (ctx->q() - 1) == o.m % (ctx->q() - 1);
}

int char_delta(const MulChar& A) { return A.is_trivial() ? 1 : 0; }

int delta0(FqElem x) { return x.enc == 0 ? 1 : 0; }

CycInt char_eval(const MulChar& chi, FqElem x) {
  uint32_t qm1 = chi.ctx->q() - 1;
  if (x.enc == 0) return CycInt(qm1);
  uint64_t e = static_cast<uint64_t>(chi.m) * chi.ctx->log(x) % qm1;
  return CycInt::root(qm1, static_cast<int64_t>(e));
}

int char_sign(const MulChar& chi, FqElem x) {
  uint32_t qm1 = chi.ctx->q() - 1;
  if (x.enc == 0) return 0;
  uint64_t e = static_cast<uint64_t>(chi.m) * chi.ctx->log(x) % qm1;
  if (e == 0) return 1;
  if (2 * e == qm1) return -1;
  fail(errc::bad_argument, "char_sign: value is not real");
}

StdChars std_chars(const FieldCtx& ctx) {
  uint32_t qm1 = ctx.q() - 1;
  StdChars s;
  s.eps = {&ctx, 0};
  s.phi = {&ctx, qm1 / 2};
  s.T = {&ctx, 1};
  if (qm1 % 4 == 0) s.chi4 = MulChar{&ctx, qm1 / 4};
  if (qm1 % 3 == 0) s.chi3 = MulChar{&ctx, qm1 / 3};
  return s;
}

MulChar char_by_name(const FieldCtx& ctx, const std::string& name) {
  StdChars s = std_chars(ctx);
  if (name == "eps") return s.eps;
  if (name == "phi") return s.phi;
  if (name == "T") return s.T;
  if (name == "chi4" || name == "chi4^3") {
    if (!s.chi4) fail(errc::bad_congruence, "chi4 requires q = 1 mod 4");
    return name == "chi4" ? *s.chi4 : s.chi4->pow(3);
  }
  if (name == "chi3" || name == "chi3^2") {
    if (!s.chi3) fail(errc::bad_congruence, "chi3 requires q = 1 mod 3");
    return name == "chi3" ? *s.chi3 : s.chi3->pow(2);
  }
  if (name.rfind("T^", 0) == 0) {
    int64_t k = std::stoll(name.substr(2));
    return s.T.pow(k);
  }
  fail(errc::bad_argument, "unknown character name: " + name);
}

CycInt gauss_sum(const MulChar& chi, uint64_t max_order) {
  const FieldCtx& ctx = *chi.ctx;
  uint32_t p = ctx.p();
  uint32_t qm1 = ctx.q() - 1;
  uint64_t order = static_cast<uint64_t>(p) * qm1;
  if (order > max_order)
    fail(errc::budget_exceeded, "gauss_sum: ring order p(q-1) over budget");
  uint32_t n = static_cast<uint32_t>(order);
  CycInt g(n);
  // zeta_{q-1} = zeta_n^p, zeta_p = zeta_n^{q-1}
  for (uint32_t k = 0; k < qm1; ++k) {
    FqElem x = ctx.exp(k);
    uint64_t e = (static_cast<uint64_t>(p) * chi.m % n) * k % n;
    e = (e + static_cast<uint64_t>(qm1) * ctx.trace(x)) % n;
    g.coeff(static_cast<uint32_t>(e)) += 1;
  }
  return g;
}

CycInt jacobi_sum(const MulChar& A, const MulChar& B) {
  const FieldCtx& ctx = *A.ctx;
  uint32_t qm1 = ctx.q() - 1;
  CycInt j(qm1);
  for (uint32_t k = 0; k < qm1; ++k) {
    FqElem x = ctx.exp(k);
    FqElem y = ctx.sub(ctx.one(), x);
    if (y.enc == 0) continue;  // B(0) = 0
    uint64_t e = (static_cast<uint64_t>(A.m) * k +
                  static_cast<uint64_t>(B.m) * ctx.log(y)) %
                 qm1;
    j.coeff(static_cast<uint32_t>(e)) += 1;
  }
  return j;
}

CycRat binomial(const MulChar& A, const MulChar& B) {
  CycInt j = jacobi_sum(A, B.inverse());
  if (B.sign_at_minus_one() < 0) j = -j;
  return CycRat(std::move(j), A.ctx->q());
}

}  // namespace ffhyper
