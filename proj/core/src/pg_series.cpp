#include "ffhyper/pg_series.hpp"

#include <sstream>
#include <stdexcept>

#include "ffhyper/numeric.hpp"

namespace ffhyper {

bool GValue::is_zero() const {
  if (zero_) return true;
  if (valuation_ < 0) return false;
  ZqElem v = unit_;
  for (int i = 0; i < valuation_ && i < static_cast<int>(v.precision()); ++i)
    v.mul_scalar(v.ctx().p());
  return v.is_zero();
}

ZqElem GValue::residue() const {
  if (zero_) return ZqElem(unit_.ctx(), unit_.precision());
  if (valuation_ < 0) {
    // Integral after all iff the unit carries enough powers of p.
    return unit_.shifted_down(static_cast<uint32_t>(-valuation_))
        .truncated(unit_.precision() + valuation_);
  }
  ZqElem v = unit_;
  for (int i = 0; i < valuation_; ++i) v.mul_scalar(v.ctx().p());
  return v;
}

std::string GValue::str() const {
  std::ostringstream os;
  if (zero_) {
    os << "0 (mod " << unit_.ctx().p() << "^" << precision() << ")";
    return os.str();
  }
  if (valuation_ < 0) os << unit_.ctx().p() << "^" << valuation_ << " * ";
  os << unit_.str();
  return os.str();
}

uint32_t default_precision(const FieldCtx& ctx) {
  uint64_t bound = 40ull * ctx.q() * ctx.q();
  uint32_t N = 1;
  uint64_t pN = ctx.p();
  while (pN <= bound) {
    pN *= ctx.p();
    ++N;
  }
  return N < 3 ? 3 : N;
}

namespace {

// Exponent of (-p) contributed by (k, i) at summation index a:
//   -floor(<a_k p^i> - s) - floor(<-b_k p^i> + s),  s = a p^i / (q-1).
int term_exponent(const mpq_class& ak_frac, const mpq_class& bk_frac,
                  const mpq_class& s) {
  mpz_class f1 = frac_floor(ak_frac - s).floor;
  mpz_class f2 = frac_floor(bk_frac + s).floor;
  long e = -f1.get_si() - f2.get_si();
  return static_cast<int>(e);
}

}  // namespace

GValue pG(const GParams& params, const FieldCtx& ctx, FqElem t, uint32_t N) {
  if (t.enc == 0) fail(errc::zero_argument, "pG: t must be nonzero");
  if (params.b.size() != params.a.size())
    fail(errc::bad_argument, "pG: parameter count mismatch");
  uint32_t n = params.n();
  uint32_t q = ctx.q();
  uint32_t r = ctx.r();
  uint64_t p = ctx.p();
  uint32_t qm1 = q - 1;

  // Fractional parts <a_k p^i> and <-b_k p^i>, fixed per (k, i).
  std::vector<std::vector<mpq_class>> afrac(n), bfrac(n);
  bool b_integral = true;
  for (uint32_t k = 0; k < n; ++k) {
    afrac[k].resize(r);
    bfrac[k].resize(r);
    mpq_class pi = 1;
    for (uint32_t i = 0; i < r; ++i) {
      afrac[k][i] = frac_floor(params.a[k] * pi).frac;
      bfrac[k][i] = frac_floor(-params.b[k] * pi).frac;
      if (bfrac[k][i] != 0) b_integral = false;
      pi *= static_cast<long>(p);
    }
  }

  // Scale so every term stays in Z_q: shift = -min total exponent of (-p).
  // For integral lower parameters the per-(k,i) exponent is always >= 0.
  int shift = 0;
  if (!b_integral) {
    int min_total = 0;
    for (uint32_t a = 0; a < qm1; ++a) {
      int total = 0;
      mpq_class pi = 1;
      for (uint32_t i = 0; i < r; ++i) {
        mpq_class s = mpq_class(static_cast<long>(a)) * pi / qm1;
        for (uint32_t k = 0; k < n; ++k)
          total += term_exponent(afrac[k][i], bfrac[k][i], s);
        pi *= static_cast<long>(p);
      }
      if (total < min_total) min_total = total;
    }
    shift = -min_total;
  }

  uint32_t M = N + static_cast<uint32_t>(shift);
  uint64_t pM = checked_pow(p, M, kResidueBudget);

  ZqElem wbar = teichmuller(ctx, t, M).inv();
  ZqElem wpow = ZqElem::from_int(ctx, M, 1);
  ZqElem acc(ctx, M);
  uint64_t minus_p = pM - p % pM;

  for (uint32_t a = 0; a < qm1; ++a) {
    uint64_t scalar = 1;
    int total_e = 0;
    mpq_class pi = 1;
    mpq_class a_over = mpq_class(static_cast<long>(a)) / qm1;
    for (uint32_t i = 0; i < r; ++i) {
      mpq_class s = a_over * pi;
      for (uint32_t k = 0; k < n; ++k) {
        int e = term_exponent(afrac[k][i], bfrac[k][i], s);
        if (e < -1 || e > 1 || (b_integral && e < 0))
          throw std::logic_error("pG: per-term exponent out of range");
        total_e += e;
        uint64_t g1 = gamma_p(frac_floor(afrac[k][i] - s).frac, p, M).residue();
        uint64_t g2 = gamma_p(afrac[k][i], p, M).residue();
        uint64_t g3 = gamma_p(frac_floor(bfrac[k][i] + s).frac, p, M).residue();
        uint64_t g4 = gamma_p(bfrac[k][i], p, M).residue();
        scalar = mulmod(scalar, g1, pM);
        scalar = mulmod(scalar, invmod(g2, pM), pM);
        scalar = mulmod(scalar, g3, pM);
        scalar = mulmod(scalar, invmod(g4, pM), pM);
      }
      pi *= static_cast<long>(p);
    }
    int e_scaled = total_e + shift;
    if (e_scaled < 0) throw std::logic_error("pG: scaled exponent negative");
    for (int j = 0; j < e_scaled; ++j) scalar = mulmod(scalar, minus_p, pM);
    if ((static_cast<uint64_t>(a) * n) % 2 == 1) scalar = pM - scalar % pM;  // (-1)^{an}
    ZqElem term = wpow;
    term.mul_scalar(scalar);
    acc += term;
    if (a + 1 < qm1) wpow *= wbar;
  }

  // acc = p^shift * (-(q-1)) * G; divide off the prefactor.
  acc.mul_scalar(pM - invmod(qm1 % pM, pM));

  // Normalize: pull out min(v_p(acc), shift) powers of p.
  uint32_t v = M;
  for (uint64_t c : acc.coeffs()) {
    if (c == 0) continue;
    uint32_t vc = 0;
    while (c % p == 0) {
      c /= p;
      ++vc;
    }
    if (vc < v) v = vc;
  }
  if (v >= M) {
    // Zero at full internal precision, hence zero mod p^N.
    return GValue(0, ZqElem(ctx, N), true);
  }
  uint32_t vv = v < static_cast<uint32_t>(shift) ? v : static_cast<uint32_t>(shift);
  ZqElem unit = acc.shifted_down(vv).truncated(N);
  return GValue(static_cast<int>(vv) - shift, std::move(unit), false);
}

bool gamma_product_identity_check(const FieldCtx& ctx, uint32_t t, uint32_t a,
                                  uint32_t N) {
  if (t % ctx.p() == 0)
    fail(errc::bad_argument, "gamma_product_identity_check: p divides t");
  if (a > ctx.q() - 2)
    fail(errc::bad_argument, "gamma_product_identity_check: a out of range");
  uint64_t p = ctx.p();
  uint32_t qm1 = ctx.q() - 1;
  uint64_t pN = checked_pow(p, N, kResidueBudget);

  // omega(t^{-ta}) with t^{-ta} evaluated in F_q^x.
  int64_t e = mod_signed(-static_cast<int64_t>(t) * a, qm1);
  FqElem u = ctx.pow(ctx.from_int(t), e);
  ZqElem lhs = teichmuller(ctx, u, N);

  uint64_t lhs_scalar = 1, rhs_scalar = 1;
  mpq_class pi = 1;
  for (uint32_t i = 0; i < ctx.r(); ++i) {
    mpq_class s = mpq_class(static_cast<long>(a)) * pi / qm1;
    lhs_scalar = mulmod(
        lhs_scalar,
        gamma_p(frac_floor(mpq_class(-static_cast<long>(t)) * s).frac, p, N).residue(),
        pN);
    for (uint32_t h = 1; h < t; ++h)
      lhs_scalar = mulmod(
          lhs_scalar,
          gamma_p(frac_floor(mpq_class(static_cast<long>(h)) * pi / t).frac, p, N)
              .residue(),
          pN);
    for (uint32_t h = 0; h < t; ++h) {
      mpq_class arg = mpq_class(static_cast<long>(1 + h)) * pi / t - s;
      rhs_scalar = mulmod(rhs_scalar, gamma_p(frac_floor(arg).frac, p, N).residue(), pN);
    }
    pi *= static_cast<long>(p);
  }
  lhs.mul_scalar(lhs_scalar);
  ZqElem rhs = ZqElem::from_int(ctx, N, 1);
  rhs.mul_scalar(rhs_scalar);
  return lhs == rhs;
}

bool floor_identity_check(uint32_t q, uint32_t a, uint32_t i) {
  uint32_t p = 0, r = 0;
  for (uint32_t d = 3; d <= q; d += 2) {
    if (q % d == 0) {
      p = d;
      uint32_t m = q;
      while (m % d == 0) {
        m /= d;
        ++r;
      }
      if (m != 1) fail(errc::bad_argument, "floor_identity_check: q not a prime power");
      break;
    }
  }
  if (p == 0 || p % 2 == 0 || !is_prime(p))
    fail(errc::bad_argument, "floor_identity_check: q must be an odd prime power");
  if (i >= r) fail(errc::bad_argument, "floor_identity_check: i out of range");

  mpq_class pi = 1;
  for (uint32_t j = 0; j < i; ++j) pi *= static_cast<long>(p);
  mpq_class s = mpq_class(static_cast<long>(a)) * pi / (q - 1);

  mpz_class lhs = -frac_floor(-4 * s).floor + frac_floor(-2 * s).floor;
  mpq_class quarter = frac_floor(pi / 4).frac;
  mpq_class three_quarter = frac_floor(3 * pi / 4).frac;
  mpz_class rhs = -frac_floor(quarter - s).floor - frac_floor(three_quarter - s).floor;
  return lhs == rhs;
}

ZqElem zq_embed(const FieldCtx& ctx, const CycInt& v, uint32_t N) {
  CycInt can = v.canonical();
  uint32_t n = can.order();
  uint32_t qm1 = ctx.q() - 1;
  if (qm1 % n != 0)
    fail(errc::incompatible_orders, "zq_embed: order does not divide q-1");
  uint64_t step = qm1 / n;
  ZqElem wg = teichmuller(ctx, ctx.gen(), N);
  ZqElem zeta = wg.pow(step);  // image of zeta_n
  ZqElem acc(ctx, N);
  ZqElem power = ZqElem::from_int(ctx, N, 1);
  uint64_t pN = acc.modulus();
  for (uint32_t i = 0; i < n; ++i) {
    const mpz_class& c = can.coeffs()[i];
    if (c != 0) {
      ZqElem term = power;
      mpz_class red;
      mpz_fdiv_r_ui(red.get_mpz_t(), c.get_mpz_t(), pN);
      term.mul_scalar(red.get_ui());
      acc += term;
    }
    if (i + 1 < n) power *= zeta;
  }
  return acc;
}

ZqElem zq_embed(const FieldCtx& ctx, const CycRat& v, uint32_t N) {
  ZqElem num = zq_embed(ctx, v.num(), N);
  uint64_t pN = num.modulus();
  mpz_class dred;
  mpz_fdiv_r_ui(dred.get_mpz_t(), v.den().get_mpz_t(), pN);
  uint64_t d = dred.get_ui();
  if (d % ctx.p() == 0)
    fail(errc::non_unit, "zq_embed: denominator divisible by p");
  num.mul_scalar(invmod(d, pN));
  return num;
}

}  // namespace ffhyper
