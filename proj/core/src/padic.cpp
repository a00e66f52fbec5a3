#include "ffhyper/padic.hpp"

#include <list>
#include <memory>
#include <mutex>
#include <sstream>

#include "ffhyper/numeric.hpp"

namespace ffhyper {

FracFloor frac_floor(const mpq_class& x) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  mpq_class fr = x - mpq_class(fl);
  return {fr, fl};
}

namespace {

uint64_t reduce_mpz(const mpz_class& v, uint64_t m) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), m);
  return r.get_ui();
}

uint64_t reduce_mpq(const mpq_class& v, uint64_t p, uint64_t m) {
  uint64_t den = reduce_mpz(v.get_den(), m);
  if (den % p == 0)
    fail(errc::non_unit, "p-adic reduction: denominator divisible by p");
  return mulmod(reduce_mpz(v.get_num(), m), invmod(den, m), m);
}

}  // namespace

PadicInt::PadicInt(uint64_t p, uint32_t N) : p_(p), N_(N), v_(0) {
  if (N == 0) fail(errc::bad_precision, "PadicInt: N must be positive");
  pN_ = checked_pow(p, N, kResidueBudget);
}

PadicInt::PadicInt(uint64_t p, uint32_t N, int64_t v) : PadicInt(p, N) {
  v_ = static_cast<uint64_t>(mod_signed(v, pN_));
}

PadicInt PadicInt::from_rational(const mpq_class& v, uint64_t p, uint32_t N) {
  PadicInt out(p, N);
  out.v_ = reduce_mpq(v, p, out.pN_);
  return out;
}

PadicInt& PadicInt::operator+=(const PadicInt& o) {
  v_ = (v_ + o.v_) % pN_;
  return *this;
}

PadicInt& PadicInt::operator-=(const PadicInt& o) {
  v_ = (v_ + pN_ - o.v_) % pN_;
  return *this;
}

PadicInt& PadicInt::operator*=(const PadicInt& o) {
  v_ = mulmod(v_, o.v_, pN_);
  return *this;
}

PadicInt PadicInt::operator-() const {
  PadicInt out = *this;
  out.v_ = v_ == 0 ? 0 : pN_ - v_;
  return out;
}

PadicInt PadicInt::inv() const {
  if (!is_unit()) fail(errc::non_unit, "PadicInt::inv: not a unit");
  PadicInt out = *this;
  out.v_ = invmod(v_, pN_);
  return out;
}

PadicInt PadicInt::pow(uint64_t e) const {
  PadicInt out = *this;
  out.v_ = powmod(v_, e, pN_);
  return out;
}

bool PadicInt::operator==(const PadicInt& o) const {
  return p_ == o.p_ && N_ == o.N_ && v_ == o.v_;
}

int64_t PadicInt::balanced() const {
  if (v_ * 2 > pN_) return static_cast<int64_t>(v_) - static_cast<int64_t>(pN_);
  return static_cast<int64_t>(v_);
}

namespace {

struct GammaTable {
  uint64_t p;
  uint32_t N;
  uint64_t pN;
  std::vector<uint32_t> values;  // Gamma_p(m) mod p^N for m in [0, p^N)
};

std::mutex gamma_mutex;
std::list<std::shared_ptr<const GammaTable>> gamma_cache;  // most recent first
constexpr size_t kGammaCacheKeep = 3;

std::shared_ptr<const GammaTable> gamma_table(uint64_t p, uint32_t N) {
  {
    std::lock_guard<std::mutex> lk(gamma_mutex);
    for (auto it = gamma_cache.begin(); it != gamma_cache.end(); ++it) {
      if ((*it)->p == p && (*it)->N == N) {
        auto t = *it;
        gamma_cache.erase(it);
        gamma_cache.push_front(t);
        return t;
      }
    }
  }
  uint64_t pN = checked_pow(p, N, kGammaTableBudget);
  auto t = std::make_shared<GammaTable>();
  t->p = p;
  t->N = N;
  t->pN = pN;
  t->values.resize(pN);
  t->values[0] = 1;  // Gamma_p(0) = 1
  uint64_t acc = 1;
  for (uint64_t n = 0; n + 1 < pN; ++n) {
    uint64_t f = (n % p == 0) ? pN - 1 : pN - n;  // -1 or -n mod p^N
    acc = mulmod(acc, f, pN);
    t->values[n + 1] = static_cast<uint32_t>(acc);
  }
  std::lock_guard<std::mutex> lk(gamma_mutex);
  gamma_cache.push_front(t);
  while (gamma_cache.size() > kGammaCacheKeep) gamma_cache.pop_back();
  return t;
}

}  // namespace

PadicInt gamma_p(const mpq_class& x, uint64_t p, uint32_t N) {
  auto t = gamma_table(p, N);
  uint64_t m = reduce_mpq(x, p, t->pN);
  PadicInt out(p, N);
  out += PadicInt(p, N, static_cast<int64_t>(t->values[m]));
  return out;
}

void clear_gamma_cache() {
  std::lock_guard<std::mutex> lk(gamma_mutex);
  gamma_cache.clear();
}

ZqElem::ZqElem(const FieldCtx& ctx, uint32_t N) : ctx_(&ctx), N_(N) {
  if (N == 0) fail(errc::bad_precision, "ZqElem: N must be positive");
  pN_ = checked_pow(ctx.p(), N, kResidueBudget);
  c_.assign(ctx.r(), 0);
}

ZqElem ZqElem::from_int(const FieldCtx& ctx, uint32_t N, int64_t v) {
  ZqElem z(ctx, N);
  z.c_[0] = static_cast<uint64_t>(mod_signed(v, z.pN_));
  return z;
}

ZqElem ZqElem::from_scalar(const FieldCtx& ctx, const PadicInt& v) {
  ZqElem z(ctx, v.precision());
  z.c_[0] = v.residue();
  return z;
}

ZqElem ZqElem::lift(const FieldCtx& ctx, uint32_t N, FqElem a) {
  ZqElem z(ctx, N);
  auto cc = ctx.coeffs(a);
  for (size_t i = 0; i < cc.size(); ++i) z.c_[i] = cc[i];
  return z;
}

FqElem ZqElem::reduce() const {
  std::vector<int64_t> cc(c_.size());
  for (size_t i = 0; i < c_.size(); ++i)
    cc[i] = static_cast<int64_t>(c_[i] % ctx_->p());
  return ctx_->from_coeffs(cc);
}

bool ZqElem::is_zero() const {
  for (uint64_t v : c_)
    if (v != 0) return false;
  return true;
}

bool ZqElem::is_scalar() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

PadicInt ZqElem::scalar() const {
  if (!is_scalar()) fail(errc::bad_argument, "ZqElem::scalar: not diagonal");
  return PadicInt(ctx_->p(), N_, static_cast<int64_t>(c_[0]));
}

ZqElem& ZqElem::operator+=(const ZqElem& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] = (c_[i] + o.c_[i]) % pN_;
  return *this;
}

ZqElem& ZqElem::operator-=(const ZqElem& o) {
  for (size_t i = 0; i < c_.size(); ++i) c_[i] = (c_[i] + pN_ - o.c_[i]) % pN_;
  return *this;
}

ZqElem ZqElem::operator-() const {
  ZqElem out = *this;
  for (auto& v : out.c_) v = v == 0 ? 0 : pN_ - v;
  return out;
}

ZqElem& ZqElem::mul_scalar(uint64_t s) {
  for (auto& v : c_) v = mulmod(v, s % pN_, pN_);
  return *this;
}

ZqElem& ZqElem::operator*=(const ZqElem& o) {
  size_t r = c_.size();
  if (r == 1) {
    c_[0] = mulmod(c_[0], o.c_[0], pN_);
    return *this;
  }
  std::vector<uint64_t> prod(2 * r - 1, 0);
  for (size_t i = 0; i < r; ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < r; ++j)
      prod[i + j] = (prod[i + j] + mulmod(c_[i], o.c_[j], pN_)) % pN_;
  }
  const auto& mod = ctx_->modulus();  // monic, integer coefficients
  for (size_t d = prod.size(); d-- > r;) {
    uint64_t cd = prod[d];
    if (cd == 0) continue;
    prod[d] = 0;
    for (size_t j = 0; j < r; ++j) {
      uint64_t s = mulmod(cd, mod[j] % pN_, pN_);
      prod[d - r + j] = (prod[d - r + j] + pN_ - s) % pN_;
    }
  }
  for (size_t i = 0; i < r; ++i) c_[i] = prod[i];
  return *this;
}

ZqElem ZqElem::inv() const {
  FqElem red = reduce();
  if (red.enc == 0) fail(errc::non_unit, "ZqElem::inv: not a unit");
  ZqElem z = lift(*ctx_, N_, ctx_->inv(red));
  ZqElem two = from_int(*ctx_, N_, 2);
  // Newton: z <- z(2 - a z); precision doubles each round.
  uint32_t have = 1;
  while (have < N_) {
    z *= (two - *this * z);
    have *= 2;
  }
  return z;
}

ZqElem ZqElem::pow(uint64_t e) const {
  ZqElem r = from_int(*ctx_, N_, 1);
  ZqElem b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool ZqElem::operator==(const ZqElem& o) const {
  return ctx_ == o.ctx_ && N_ == o.N_ && c_ == o.c_;
}

ZqElem ZqElem::truncated(uint32_t N) const {
  if (N == N_) return *this;
  if (N > N_) fail(errc::bad_precision, "ZqElem::truncated: cannot raise precision");
  ZqElem out(*ctx_, N);
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] % out.pN_;
  return out;
}

ZqElem ZqElem::shifted_down(uint32_t k) const {
  if (k == 0) return *this;
  if (k >= N_) fail(errc::bad_precision, "ZqElem::shifted_down: precision exhausted");
  uint64_t pk = checked_pow(ctx_->p(), k, kResidueBudget);
  ZqElem out(*ctx_, N_ - k);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] % pk != 0)
      fail(errc::bad_argument, "ZqElem::shifted_down: not divisible by p^k");
    out.c_[i] = (c_[i] / pk) % out.pN_;
  }
  return out;
}

std::string ZqElem::str() const {
  if (c_.size() == 1) {
    return PadicInt(ctx_->p(), N_, static_cast<int64_t>(c_[0])).str();
  }
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << PadicInt(ctx_->p(), N_, static_cast<int64_t>(c_[i])).str();
  }
  os << ']';
  return os.str();
}

ZqElem teichmuller(const FieldCtx& ctx, FqElem t, uint32_t N) {
  if (t.enc == 0) fail(errc::zero_argument, "teichmuller: t must be nonzero");
  ZqElem x = ZqElem::lift(ctx, N, t);
  for (uint32_t i = 0; i < N; ++i) x = x.pow(ctx.q());
  // x is now the fixed point of y -> y^q at this precision.
  return x;
}

}  // namespace ffhyper
