#pragma once

#include <cstdint>

#include "ffhyper/errors.hpp"

namespace ffhyper {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = m == 1 ? 0 : 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

/// Inverse of a mod m; a must be a unit.
inline uint64_t invmod(uint64_t a, uint64_t m) {
  int64_t t = 0, nt = 1;
  int64_t r = static_cast<int64_t>(m), nr = static_cast<int64_t>(a % m);
  while (nr != 0) {
    int64_t qt = r / nr;
    t -= qt * nt;
    std::swap(t, nt);
    r -= qt * nr;
    std::swap(r, nr);
  }
  if (r != 1) fail(errc::non_unit, "invmod: argument is not a unit");
  return static_cast<uint64_t>(t < 0 ? t + static_cast<int64_t>(m) : t);
}

inline int64_t mod_signed(int64_t v, uint64_t m) {
  int64_t r = v % static_cast<int64_t>(m);
  return r < 0 ? r + static_cast<int64_t>(m) : r;
}

/// p^n, refusing to exceed `cap`.
inline uint64_t checked_pow(uint64_t p, uint32_t n, uint64_t cap) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < n; ++i) {
    if (r > cap / p) fail(errc::budget_exceeded, "checked_pow: p^n exceeds budget");
    r *= p;
  }
  return r;
}

inline uint64_t isqrt_u64(uint64_t n) {
  if (n == 0) return 0;
  uint64_t x = static_cast<uint64_t>(__builtin_sqrt(static_cast<double>(n)));
  while (x > 0 && x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

}  // namespace ffhyper
