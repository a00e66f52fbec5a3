#include "ffhyper/field.hpp"

#include <algorithm>
#include <sstream>

#include "ffhyper/numeric.hpp"

namespace ffhyper {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

TwoSquares two_squares(int64_t p) {
  if (p < 5 || !is_prime(static_cast<uint64_t>(p)))
    fail(errc::not_prime, "two_squares: p must be prime");
  if (p % 4 != 1)
    fail(errc::bad_congruence, "two_squares: p must be 1 mod 4");
  for (int64_t x = 1; x * x <= p; x += 2) {
    int64_t y2 = p - x * x;
    int64_t y = static_cast<int64_t>(isqrt_u64(static_cast<uint64_t>(y2)));
    if (y > 0 && y * y == y2) return {x, y, p};
  }
  fail(errc::bad_argument, "two_squares: no decomposition found");
}

namespace {

// Polynomial helpers over Z/p used only during field construction.
// Polynomials are coefficient vectors, ascending degree.

using Poly = std::vector<uint32_t>;

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, uint32_t p) {
  size_t r = mod.size() - 1;
  std::vector<uint64_t> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p;
  }
  for (size_t d = prod.size(); d-- > r;) {
    uint64_t c = prod[d] % p;
    if (c == 0) continue;
    prod[d] = 0;
    // mod is monic: x^r = -sum mod_j x^j
    for (size_t j = 0; j < r; ++j)
      prod[d - r + j] = (prod[d - r + j] + c * (p - mod[j] % p)) % p;
  }
  Poly out(r, 0);
  for (size_t i = 0; i < r && i < prod.size(); ++i)
    out[i] = static_cast<uint32_t>(prod[i] % p);
  return out;
}

Poly poly_pow_mod(Poly base, uint64_t e, const Poly& mod, uint32_t p) {
  Poly r(mod.size() - 1, 0);
  r[0] = 1;
  while (e) {
    if (e & 1) r = poly_mul_mod(r, base, mod, p);
    base = poly_mul_mod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, uint32_t p) {
  auto deg = [](const Poly& f) -> int {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
      if (f[i] != 0) return i;
    return -1;
  };
  while (deg(b) >= 0) {
    int da = deg(a), db = deg(b);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    // a -= lead(a)/lead(b) * x^(da-db) * b
    uint64_t c = mulmod(a[da], invmod(b[db], p), p);
    for (int j = 0; j <= db; ++j) {
      uint64_t s = mulmod(c, b[j], p);
      a[da - db + j] = static_cast<uint32_t>((a[da - db + j] + p - s) % p);
    }
  }
  return a;
}

bool poly_is_one_up_to_scalar(const Poly& f, uint32_t p) {
  if (f.empty() || f[0] % p == 0) return false;
  for (size_t i = 1; i < f.size(); ++i)
    if (f[i] % p != 0) return false;
  return true;
}

// Rabin irreducibility test for a monic degree-r polynomial over Z/p.
bool is_irreducible(const Poly& f, uint32_t p) {
  size_t r = f.size() - 1;
  Poly x{0, 1};
  // x^(p^r) == x mod f
  Poly xp = x;
  for (size_t i = 0; i < r; ++i) xp = poly_pow_mod(xp, p, f, p);
  if (xp.size() < 2) xp.resize(2, 0);
  Poly diff = xp;
  diff[1] = static_cast<uint32_t>((diff[1] + p - 1) % p);
  bool all_zero = true;
  for (uint32_t c : diff)
    if (c % p != 0) all_zero = false;
  if (!all_zero) return false;
  // gcd(x^(p^(r/l)) - x, f) == 1 for every prime l | r
  for (size_t l = 2; l <= r; ++l) {
    if (r % l != 0) continue;
    bool lprime = true;
    for (size_t d = 2; d * d <= l; ++d)
      if (l % d == 0) lprime = false;
    if (!lprime) continue;
    Poly xe = x;
    for (size_t i = 0; i < r / l; ++i) xe = poly_pow_mod(xe, p, f, p);
    if (xe.size() < 2) xe.resize(2, 0);
    Poly g = xe;
    g[1] = static_cast<uint32_t>((g[1] + p - 1) % p);
    Poly gc = poly_gcd(std::vector<uint32_t>(f), g, p);
    if (!poly_is_one_up_to_scalar(gc, p)) return false;
  }
  return true;
}

std::vector<uint32_t> decode(uint64_t enc, uint32_t p, uint32_t r) {
  std::vector<uint32_t> c(r, 0);
  for (uint32_t i = 0; i < r; ++i) {
    c[i] = static_cast<uint32_t>(enc % p);
    enc /= p;
  }
  return c;
}

uint32_t encode(const std::vector<uint32_t>& c, uint32_t p) {
  uint64_t e = 0;
  for (size_t i = c.size(); i-- > 0;) e = e * p + c[i] % p;
  return static_cast<uint32_t>(e);
}

std::vector<uint32_t> prime_factors(uint32_t n) {
  std::vector<uint32_t> fs;
  for (uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

FieldCtx FieldCtx::make(uint32_t p, uint32_t r) {
  if (!is_prime(p)) fail(errc::not_prime, "make_field: p is not prime");
  if (p % 2 == 0) fail(errc::even_characteristic, "make_field: p must be odd");
  if (r < 1) fail(errc::bad_argument, "make_field: r must be >= 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < r; ++i) {
    q *= p;
    if (q > kFieldBudget)
      fail(errc::budget_exceeded, "make_field: q = p^r exceeds budget");
  }

  FieldCtx ctx;
  ctx.pp_ = {p, r, static_cast<uint32_t>(q)};

  if (r == 1) {
    ctx.modulus_ = {0, 1};
  } else {
    for (uint64_t k = 0;; ++k) {
      Poly f = decode(k, p, r);
      f.push_back(1);  // monic of degree r
      if (is_irreducible(f, p)) {
        ctx.modulus_ = f;
        break;
      }
    }
  }

  // Smallest element (in encoding order) of exact order q-1.
  uint32_t qm1 = ctx.pp_.q - 1;
  auto factors = prime_factors(qm1);
  const Poly& mod = ctx.modulus_;
  uint32_t gen_enc = 0;
  for (uint32_t cand = 2; cand < ctx.pp_.q; ++cand) {
    Poly a = decode(cand, p, r);
    bool full_order = true;
    for (uint32_t l : factors) {
      Poly pw = poly_pow_mod(a, qm1 / l, mod, p);
      if (poly_is_one_up_to_scalar(pw, p) && pw[0] == 1) {
        full_order = false;
        break;
      }
    }
    if (full_order) {
      gen_enc = cand;
      break;
    }
  }
  ctx.gen_ = {gen_enc};

  ctx.exp_.resize(qm1);
  ctx.log_.assign(ctx.pp_.q, 0);
  Poly cur(r, 0);
  cur[0] = 1;
  Poly g = decode(gen_enc, p, r);
  for (uint32_t k = 0; k < qm1; ++k) {
    uint32_t e = encode(cur, p);
    ctx.exp_[k] = e;
    ctx.log_[e] = k;
    cur = poly_mul_mod(cur, g, mod, p);
  }
  return ctx;
}

FqElem FieldCtx::from_int(int64_t v) const {
  int64_t m = v % static_cast<int64_t>(pp_.p);
  if (m < 0) m += pp_.p;
  return {static_cast<uint32_t>(m)};
}

FqElem FieldCtx::from_coeffs(const std::vector<int64_t>& c) const {
  if (c.size() > pp_.r)
    fail(errc::bad_argument, "from_coeffs: too many coefficients");
  std::vector<uint32_t> cc(pp_.r, 0);
  for (size_t i = 0; i < c.size(); ++i) {
    int64_t m = c[i] % static_cast<int64_t>(pp_.p);
    if (m < 0) m += pp_.p;
    cc[i] = static_cast<uint32_t>(m);
  }
  return {encode(cc, pp_.p)};
}

std::vector<uint32_t> FieldCtx::coeffs(FqElem a) const {
  return decode(a.enc, pp_.p, pp_.r);
}

FqElem FieldCtx::add(FqElem a, FqElem b) const {
  if (pp_.r == 1) return {(a.enc + b.enc) % pp_.p};
  auto ca = decode(a.enc, pp_.p, pp_.r);
  auto cb = decode(b.enc, pp_.p, pp_.r);
  for (uint32_t i = 0; i < pp_.r; ++i) ca[i] = (ca[i] + cb[i]) % pp_.p;
  return {encode(ca, pp_.p)};
}

FqElem FieldCtx::neg(FqElem a) const {
  if (pp_.r == 1) return {a.enc == 0 ? 0 : pp_.p - a.enc};
  auto ca = decode(a.enc, pp_.p, pp_.r);
  for (uint32_t i = 0; i < pp_.r; ++i) ca[i] = ca[i] == 0 ? 0 : pp_.p - ca[i];
  return {encode(ca, pp_.p)};
}

FqElem FieldCtx::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem FieldCtx::mul(FqElem a, FqElem b) const {
  if (a.enc == 0 || b.enc == 0) return {0};
  uint32_t qm1 = pp_.q - 1;
  return exp((static_cast<uint64_t>(log_[a.enc]) + log_[b.enc]) % qm1);
}

FqElem FieldCtx::inv(FqElem a) const {
  if (a.enc == 0) fail(errc::zero_argument, "inv: zero has no inverse");
  uint32_t qm1 = pp_.q - 1;
  return exp((qm1 - log_[a.enc]) % qm1);
}

FqElem FieldCtx::pow(FqElem a, int64_t e) const {
  if (a.enc == 0) {
    if (e < 0) fail(errc::zero_argument, "pow: zero to negative power");
    return e == 0 ? one() : zero();
  }
  uint32_t qm1 = pp_.q - 1;
  int64_t k = (static_cast<int64_t>(log_[a.enc]) * (e % qm1)) % qm1;
  if (k < 0) k += qm1;
  return exp(static_cast<uint64_t>(k));
}

uint32_t FieldCtx::log(FqElem a) const {
  if (a.enc == 0) fail(errc::zero_argument, "log: zero has no logarithm");
  return log_[a.enc];
}

FqElem FieldCtx::exp(uint64_t k) const { return {exp_[k % (pp_.q - 1)]}; }

std::optional<std::pair<FqElem, FqElem>> FieldCtx::sqrt(FqElem a) const {
  if (a.enc == 0) return std::make_pair(zero(), zero());
  uint32_t k = log_[a.enc];
  if (k % 2 != 0) return std::nullopt;
  FqElem s = exp(k / 2);
  return std::make_pair(s, neg(s));
}

uint32_t FieldCtx::trace(FqElem a) const {
  if (pp_.r == 1) return a.enc;
  FqElem t = zero();
  uint64_t e = 1;
  for (uint32_t j = 0; j < pp_.r; ++j) {
    t = add(t, pow(a, static_cast<int64_t>(e)));
    e *= pp_.p;
  }
  auto c = decode(t.enc, pp_.p, pp_.r);
  return c[0];
}

std::string FieldCtx::to_string(FqElem a) const {
  if (pp_.r == 1) return std::to_string(a.enc);
  auto c = decode(a.enc, pp_.p, pp_.r);
  std::ostringstream os;
  for (uint32_t i = 0; i < pp_.r; ++i) {
    if (i) os << ',';
    os << c[i];
  }
  return os.str();
}

FqElem FieldCtx::parse(const std::string& s) const {
  std::vector<int64_t> c;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) c.push_back(std::stoll(tok));
  if (c.empty()) fail(errc::bad_argument, "parse: empty element");
  if (c.size() == 1) return from_int(c[0]);
  return from_coeffs(c);
}

}  // namespace ffhyper
