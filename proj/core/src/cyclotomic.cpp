#include "ffhyper/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ffhyper {

namespace {

// Exact division of integer polynomials (divisor monic), ascending coeffs.
std::vector<mpz_class> poly_div_exact(const std::vector<mpz_class>& a,
                                      const std::vector<mpz_class>& b) {
  size_t db = b.size() - 1;
  std::vector<mpz_class> rem = a;
  std::vector<mpz_class> quot(a.size() - db, 0);
  for (size_t d = rem.size(); d-- > db;) {
    if (rem[d] == 0) continue;
    mpz_class c = rem[d];
    quot[d - db] = c;
    for (size_t j = 0; j <= db; ++j) rem[d - db + j] -= c * b[j];
  }
  for (const auto& v : rem)
    if (v != 0) fail(errc::bad_argument, "poly_div_exact: nonzero remainder");
  return quot;
}

std::map<uint32_t, std::vector<mpz_class>>& phi_cache() {
  static std::map<uint32_t, std::vector<mpz_class>> cache;
  return cache;
}
std::mutex phi_mutex;

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(uint32_t n) {
  if (n == 0) fail(errc::bad_argument, "cyclotomic_polynomial: n = 0");
  {
    std::lock_guard<std::mutex> lk(phi_mutex);
    auto it = phi_cache().find(n);
    if (it != phi_cache().end()) return it->second;
  }
  std::vector<mpz_class> f(n + 1, 0);
  f[0] = -1;
  f[n] = 1;
  for (uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    f = poly_div_exact(f, cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lk(phi_mutex);
  return phi_cache().emplace(n, std::move(f)).first->second;
}

CycInt CycInt::root(uint32_t order, int64_t k) {
  CycInt z(order);
  int64_t i = k % static_cast<int64_t>(order);
  if (i < 0) i += order;
  z.c_[static_cast<size_t>(i)] = 1;
  return z;
}

CycInt CycInt::integer(uint32_t order, mpz_class v) {
  CycInt z(order);
  z.c_[0] = std::move(v);
  return z;
}

CycInt CycInt::from_coeffs(uint32_t order, std::vector<mpz_class> c) {
  if (c.size() > order)
    fail(errc::bad_argument, "CycInt::from_coeffs: too many coefficients");
  CycInt z(order);
  for (size_t i = 0; i < c.size(); ++i) z.c_[i] = std::move(c[i]);
  return z;
}

bool CycInt::raw_is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

CycInt CycInt::operator-() const {
  CycInt out(order_);
  for (uint32_t i = 0; i < order_; ++i) out.c_[i] = -c_[i];
  return out;
}

uint32_t lcm_order(uint32_t a, uint32_t b) {
  uint64_t l = std::lcm<uint64_t>(a, b);
  if (l > kOrderBudget)
    fail(errc::incompatible_orders, "root-of-unity order budget exceeded");
  return static_cast<uint32_t>(l);
}

CycInt& CycInt::operator+=(const CycInt& o) {
  if (order_ != o.order_) {
    uint32_t n = lcm_order(order_, o.order_);
    return *this = promoted(n) + o.promoted(n);
  }
  for (uint32_t i = 0; i < order_; ++i) c_[i] += o.c_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  if (order_ != o.order_) {
    uint32_t n = lcm_order(order_, o.order_);
    return *this = promoted(n) - o.promoted(n);
  }
  for (uint32_t i = 0; i < order_; ++i) c_[i] -= o.c_[i];
  return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  if (a.order_ != b.order_) {
    uint32_t n = lcm_order(a.order_, b.order_);
    return a.promoted(n) * b.promoted(n);
  }
  uint32_t n = a.order_;
  CycInt out(n);
  std::vector<uint32_t> nza, nzb;
  for (uint32_t i = 0; i < n; ++i)
    if (a.c_[i] != 0) nza.push_back(i);
  for (uint32_t i = 0; i < n; ++i)
    if (b.c_[i] != 0) nzb.push_back(i);
  for (uint32_t i : nza)
    for (uint32_t j : nzb) {
      uint32_t k = i + j;
      if (k >= n) k -= n;
      out.c_[k] += a.c_[i] * b.c_[j];
    }
  return out;
}

CycInt CycInt::operator*(const mpz_class& s) const {
  CycInt out(order_);
  for (uint32_t i = 0; i < order_; ++i) out.c_[i] = c_[i] * s;
  return out;
}

CycInt CycInt::conj() const {
  CycInt out(order_);
  out.c_[0] = c_[0];
  for (uint32_t i = 1; i < order_; ++i) out.c_[order_ - i] = c_[i];
  return out;
}

CycInt CycInt::promoted(uint32_t target) const {
  if (target == order_) return *this;
  if (target % order_ != 0 || target > kOrderBudget)
    fail(errc::incompatible_orders, "CycInt::promoted: order must divide target");
  uint32_t f = target / order_;
  CycInt out(target);
  for (uint32_t i = 0; i < order_; ++i) out.c_[i * f] = c_[i];
  return out;
}

CycInt CycInt::canonical() const {
  const auto& phi = cyclotomic_polynomial(order_);
  size_t dphi = phi.size() - 1;
  bool reduced = true;
  for (size_t i = dphi; i < c_.size(); ++i)
    if (c_[i] != 0) {
      reduced = false;
      break;
    }
  if (reduced) return *this;
  CycInt out(order_);
  out.c_ = c_;
  for (size_t d = out.c_.size(); d-- > dphi;) {
    if (out.c_[d] == 0) continue;
    mpz_class c = out.c_[d];
    out.c_[d] = 0;
    for (size_t j = 0; j < dphi; ++j) out.c_[d - dphi + j] -= c * phi[j];
  }
  return out;
}

bool CycInt::operator==(const CycInt& o) const {
  if (order_ != o.order_) {
    uint32_t n = lcm_order(order_, o.order_);
    return promoted(n) == o.promoted(n);
  }
  return canonical().c_ == o.canonical().c_;
}

mpz_class CycInt::content() const {
  mpz_class g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return g;
  }
  return g;
}

void CycInt::divide_exact(const mpz_class& d) {
  for (auto& v : c_) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
    if (r != 0) fail(errc::bad_argument, "CycInt::divide_exact: not divisible");
    v = q;
  }
}

std::optional<mpz_class> CycInt::to_integer() const {
  CycInt can = canonical();
  for (uint32_t i = 1; i < order_; ++i)
    if (can.c_[i] != 0) return std::nullopt;
  return can.c_[0];
}

std::string CycInt::str() const {
  CycInt can = canonical();
  std::ostringstream os;
  bool first = true;
  for (uint32_t i = 0; i < order_; ++i) {
    const mpz_class& v = can.c_[i];
    if (v == 0) continue;
    mpz_class a = v < 0 ? mpz_class(-v) : v;
    if (first) {
      if (v < 0) os << '-';
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << '*';
      os << 'z' << order_;
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

CycRat::CycRat(CycInt num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) fail(errc::bad_argument, "CycRat: zero denominator");
  normalize();
}

CycRat CycRat::from_rational(const mpq_class& v, uint32_t order) {
  return CycRat(CycInt::integer(order, v.get_num()), v.get_den());
}

void CycRat::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  num_ = num_.canonical();
  if (num_.raw_is_zero()) {
    den_ = 1;
    return;
  }
  mpz_class g;
  mpz_class c = num_.content();
  mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), den_.get_mpz_t());
  if (g > 1) {
    num_.divide_exact(g);
    den_ /= g;
  }
}

CycRat CycRat::operator-() const { return CycRat(-num_, den_); }

CycRat operator+(const CycRat& a, const CycRat& b) {
  return CycRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

CycRat operator-(const CycRat& a, const CycRat& b) {
  return CycRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

CycRat operator*(const CycRat& a, const CycRat& b) {
  return CycRat(a.num_ * b.num_, a.den_ * b.den_);
}

CycRat CycRat::operator*(const mpq_class& s) const {
  return CycRat(num_ * s.get_num(), den_ * s.get_den());
}

bool CycRat::operator==(const CycRat& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

std::optional<mpq_class> CycRat::to_rational() const {
  auto n = num_.to_integer();
  if (!n) return std::nullopt;
  mpq_class v(*n, den_);
  v.canonicalize();
  return v;
}

std::string CycRat::str() const {
  auto r = to_rational();
  if (r) return r->get_str();
  std::string s = num_.str();
  if (den_ == 1) return s;
  return "(" + s + ")/" + den_.get_str();
}

}  // namespace ffhyper
