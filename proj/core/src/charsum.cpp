#include "ffhyper/charsum.hpp"

#include "ffhyper/characters.hpp"

namespace ffhyper {

int64_t phi_quadratic_sum(const FieldCtx& ctx, FqElem x) {
  auto phi_of = [&](FqElem v) -> int64_t {
    if (v.enc == 0) return 0;
    return ctx.log(v) % 2 == 0 ? 1 : -1;
  };
  int64_t sum = 0;
  FqElem one = ctx.one();
  FqElem two = ctx.from_int(2);
  for (uint32_t e = 0; e < ctx.q(); ++e) {
    FqElem y{e};
    FqElem arg = ctx.add(ctx.sub(one, ctx.mul(two, y)), ctx.mul(x, ctx.mul(y, y)));
    sum += phi_of(y) * phi_of(arg);
  }
  return sum;
}

namespace {

// sum_chi {phi chi^2 | chi} {phi chi | pow2 ? chi^2 : chi} chi(arg)
CycRat weighted_binomial_sum(const FieldCtx& ctx, FqElem arg, bool square_second) {
  if (arg.enc == 0) fail(errc::zero_argument, "weighted_binomial_sum: zero argument");
  uint32_t qm1 = ctx.q() - 1;
  uint32_t L = ctx.log(arg);
  StdChars sc = std_chars(ctx);
  mpz_class den = mpz_class(ctx.q()) * ctx.q();
  std::vector<mpz_class> acc(qm1, 0);
  for (uint32_t j = 0; j < qm1; ++j) {
    MulChar chi{&ctx, j};
    CycRat b1 = binomial(sc.phi * chi.pow(2), chi);
    CycRat b2 = binomial(sc.phi * chi, square_second ? chi.pow(2) : chi);
    CycRat prod = b1 * b2;
    mpz_class scale = den / prod.den();
    CycInt num = prod.num() * scale;
    uint64_t shift = static_cast<uint64_t>(j) * L % qm1;
    for (uint32_t i = 0; i < qm1; ++i) {
      const mpz_class& c = num.coeffs()[i];
      if (c == 0) continue;
      uint32_t k = i + static_cast<uint32_t>(shift);
      if (k >= qm1) k -= qm1;
      acc[k] += c;
    }
  }
  return CycRat(CycInt::from_coeffs(qm1, std::move(acc)), den);
}

}  // namespace

CycRat sum_A(const FieldCtx& ctx, FqElem x) {
  if (x.enc == 0) fail(errc::zero_argument, "sum_A: x must be nonzero");
  FqElem arg = ctx.mul(x, ctx.inv(ctx.from_int(4)));
  return weighted_binomial_sum(ctx, arg, /*square_second=*/false);
}

CycRat sum_B(const FieldCtx& ctx, FqElem x) {
  FqElem xm1 = ctx.sub(x, ctx.one());
  if (xm1.enc == 0) fail(errc::bad_argument, "sum_B: x must differ from 1");
  return weighted_binomial_sum(ctx, xm1, /*square_second=*/true);
}

CycRat f_u(const FieldCtx& ctx, FqElem u) {
  if (ctx.r() != 1) fail(errc::bad_argument, "f_u: prime fields only");
  if (u.enc == 0) fail(errc::zero_argument, "f_u: u must be nonzero");
  mpq_class scale(ctx.p(), ctx.p() - 1);
  return sum_A(ctx, u) * scale;
}

}  // namespace ffhyper
