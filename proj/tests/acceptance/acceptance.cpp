// Acceptance gate: every criterion below is exercised at its stated range
// and tolerance (exact equality, mod p^N for p-adic values). One line is
// printed per criterion; the exit code is nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ffhyper/characters.hpp"
#include "ffhyper/charsum.hpp"
#include "ffhyper/field.hpp"
#include "ffhyper/greene.hpp"
#include "ffhyper/numeric.hpp"
#include "ffhyper/padic.hpp"
#include "ffhyper/pg_series.hpp"
#include "ffhyper/theorems.hpp"

using namespace ffhyper;

namespace {

std::vector<std::pair<uint32_t, uint32_t>> fields_up_to(uint32_t qmax) {
  std::vector<std::pair<uint32_t, uint32_t>> out;
  for (uint32_t p = 3; p <= qmax; p += 2) {
    if (!is_prime(p)) continue;
    uint64_t q = p;
    uint32_t r = 1;
    while (q <= qmax) {
      out.push_back({p, r});
      q *= p;
      ++r;
    }
  }
  return out;
}

struct Gate {
  int failures = 0;
  int line = 0;

  bool criterion(const std::string& name, bool pass, const std::string& detail,
                 double secs) {
    ++line;
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << "  " << line << ". " << name;
    if (!detail.empty()) os << ": " << detail;
    os << "  [" << secs << "s]";
    std::cout << os.str() << std::endl;
    if (!pass) ++failures;
    return pass;
  }
};

double secs_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string counts(const Report& rep) {
  std::ostringstream os;
  os << "holds=" << rep.holds << " fails=" << rep.fails
     << " skipped=" << rep.skipped;
  return os.str();
}

Report sweep(uint32_t lo, uint32_t hi, std::vector<uint32_t> degrees,
             uint32_t q_max, std::vector<TheoremId> ids) {
  SuiteConfig cfg;
  cfg.prime_lo = lo;
  cfg.prime_hi = hi;
  cfg.degrees = std::move(degrees);
  cfg.q_max = q_max;
  Report rep = run_suite(cfg, ids);
  for (const auto& res : rep.results) {
    if (res.status == CheckStatus::fails) {
      std::cout << "  FAILED CHECK: " << to_string(res.id) << " p=" << res.p
                << " r=" << res.r << " x=" << res.x << " N=" << res.N
                << "\n    lhs=" << res.lhs << "\n    rhs=" << res.rhs << "\n";
    }
  }
  return rep;
}

}  // namespace

int main() {
  Gate gate;
  auto total0 = std::chrono::steady_clock::now();

  {  // 1. Proposition gates over every odd prime power q <= 49, r in {1,2}.
    auto t0 = std::chrono::steady_clock::now();
    Report rep = sweep(3, 47, {1, 2}, 49, {TheoremId::PROP1, TheoremId::PROP2});
    gate.criterion("proposition gates (three-way identities, q <= 49)",
                   rep.fails == 0 && rep.holds > 0, counts(rep), secs_since(t0));
  }

  {  // 2. Kummer-type transformation.
    auto t0 = std::chrono::steady_clock::now();
    Report r1 = sweep(3, 61, {1}, 61, {TheoremId::MT1});
    Report r2 = sweep(3, 7, {2, 3}, 49, {TheoremId::MT1});
    bool covered = false;
    uint64_t ext_holds = 0;
    for (const auto& res : r2.results)
      if (res.status == CheckStatus::holds && res.r >= 2) ++ext_holds;
    covered = ext_holds > 0;
    gate.criterion("Kummer-type transformation (p <= 61 and q in {9,25,27,49})",
                   r1.fails == 0 && r2.fails == 0 && r1.holds > 0 && covered,
                   counts(r1) + " / ext " + counts(r2), secs_since(t0));
  }

  {  // 3. Zero value at 2 for p = 5,7 mod 8, N >= 4.
    auto t0 = std::chrono::steady_clock::now();
    Report rep = sweep(3, 61, {1}, 61, {TheoremId::SPV1});
    bool n_ok = true;
    for (const auto& res : rep.results)
      if (res.status == CheckStatus::holds && res.N < 4) n_ok = false;
    gate.criterion("zero value at 2 (p = 5,7 mod 8, p <= 61, N >= 4)",
                   rep.fails == 0 && rep.holds == 10 && n_ok, counts(rep),
                   secs_since(t0));
  }

  {  // 4. Clausen-type transformation.
    auto t0 = std::chrono::steady_clock::now();
    Report rep = sweep(3, 37, {1}, 37, {TheoremId::MT4});
    gate.criterion("Clausen-type transformation (p <= 37)",
                   rep.fails == 0 && rep.holds > 0, counts(rep), secs_since(t0));
  }

  {  // 5. Quadratic argument transformations plus the bridge consistency.
    auto t0 = std::chrono::steady_clock::now();
    Report rep = sweep(3, 47, {1, 2}, 49,
                       {TheoremId::MT3, TheoremId::MT2, TheoremId::TR1, TheoremId::TR2});
    gate.criterion(
        "quadratic-argument transformations, p-adic and finite-field forms "
        "bridged (q <= 49)",
        rep.fails == 0 && rep.holds > 0, counts(rep), secs_since(t0));
  }

  {  // 6. Special value at 9 / at 1/9.
    auto t0 = std::chrono::steady_clock::now();
    Report g = special_value_table(TheoremId::MT5_G, 5, 29);
    Report f = special_value_table(TheoremId::MT5_F, 5, 29);
    FieldCtx f13 = FieldCtx::make(13, 1);
    CheckResult spot = verify(TheoremId::MT5_G, f13);
    bool spot_ok = spot.status == CheckStatus::holds && spot.rhs == "-6";
    gate.criterion("special value at 9 (table p in 5..29, both function families)",
                   g.fails == 0 && g.holds == 8 && f.fails == 0 && f.holds == 4 &&
                       spot_ok,
                   "G " + counts(g) + " / F " + counts(f), secs_since(t0));
  }

  {  // 7. sqrt(2) and sqrt(3) families over all admissible q <= 121.
    auto t0 = std::chrono::steady_clock::now();
    Report rep = sweep(3, 113, {1, 2, 3, 4}, 121,
                       {TheoremId::MT7_85, TheoremId::MT7_86, TheoremId::MT7_87,
                        TheoremId::MT6_83, TheoremId::MT6_84});
    uint64_t zero_family = 0;
    for (const auto& res : rep.results)
      if (res.id == TheoremId::MT7_86 && res.status == CheckStatus::holds)
        ++zero_family;
    gate.criterion("root-argument special values (all four branches, q <= 121)",
                   rep.fails == 0 && rep.holds > 0 && zero_family > 0,
                   counts(rep) + " zero-family holds=" + std::to_string(zero_family),
                   secs_since(t0));
  }

  {  // 8. Corollaries over p <= 97.
    auto t0 = std::chrono::steady_clock::now();
    Report rep = sweep(3, 97, {1}, 97, {TheoremId::COR1, TheoremId::COR_FINAL});
    uint64_t c1 = 0, cf = 0;
    for (const auto& res : rep.results) {
      if (res.status != CheckStatus::holds) continue;
      if (res.id == TheoremId::COR1) ++c1;
      if (res.id == TheoremId::COR_FINAL) ++cf;
    }
    gate.criterion("binomial-pair and root-family corollaries (p <= 97)",
                   rep.fails == 0 && c1 == 11 && cf == 5, counts(rep),
                   secs_since(t0));
  }

  {  // 9. Lemma suite.
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string why;

    // Gauss reflection and Jacobi factorization, all characters, q <= 25.
    for (auto [p, r] : fields_up_to(25)) {
      FieldCtx ctx = FieldCtx::make(p, r);
      uint32_t qm1 = ctx.q() - 1;
      std::vector<CycInt> g;
      for (uint32_t k = 0; k < qm1; ++k) g.push_back(gauss_sum(MulChar{&ctx, k}));
      for (uint32_t k = 1; k < qm1 && ok; ++k) {
        MulChar chi{&ctx, k};
        if (g[k] * g[qm1 - k] !=
            CycInt::integer(1, static_cast<long>(ctx.q()) * chi.sign_at_minus_one())) {
          ok = false;
          why = "gauss reflection q=" + std::to_string(ctx.q());
        }
      }
      for (uint32_t a = 0; a < qm1 && ok; ++a)
        for (uint32_t b = 0; b < qm1 && ok; ++b) {
          MulChar A{&ctx, a}, B{&ctx, b};
          CycInt lhs = jacobi_sum(A, B) * g[(a + b) % qm1];
          CycInt rhs = g[a] * g[b];
          if ((a + b) % qm1 == 0)
            rhs += g[0] * mpz_class(static_cast<long>(qm1) * B.sign_at_minus_one());
          if (lhs != rhs) {
            ok = false;
            why = "jacobi factorization q=" + std::to_string(ctx.q());
          }
        }
      // Binomial identities and series expansions.
      mpq_class scale(ctx.q(), qm1);
      for (uint32_t a = 0; a < qm1 && ok; ++a) {
        MulChar A{&ctx, a};
        mpq_class triv(-1, ctx.q());
        if (char_delta(A)) triv += mpq_class(ctx.q() - 1, ctx.q());
        if (binomial(A, std_chars(ctx).eps) != CycRat::from_rational(triv) ||
            binomial(A, A) != CycRat::from_rational(triv)) {
          ok = false;
          why = "binomial trivial-character value q=" + std::to_string(ctx.q());
          break;
        }
        for (uint32_t b = 0; b < qm1; ++b) {
          MulChar B{&ctx, b};
          if (binomial(A, B) != binomial(A, A * B.inverse())) {
            ok = false;
            why = "binomial reindexing q=" + std::to_string(ctx.q());
            break;
          }
        }
        if (!ok) break;
        std::vector<CycRat> shifted, plain;
        for (uint32_t c = 0; c < qm1; ++c) {
          MulChar chi{&ctx, c};
          shifted.push_back(binomial(A * chi, chi));
          plain.push_back(binomial(A, chi));
        }
        for (uint32_t e = 0; e < ctx.q() && ok; ++e) {
          FqElem x{e};
          CycRat s1{CycInt(qm1), 1}, s2{CycInt(qm1), 1};
          for (uint32_t c = 0; c < qm1; ++c) {
            MulChar chi{&ctx, c};
            CycRat cx(char_eval(chi, x), 1);
            s1 += shifted[c] * cx;
            s2 += plain[c] * cx;
          }
          mpq_class d(delta0(x));
          CycRat lhs1(char_eval(A.inverse(), ctx.sub(ctx.one(), x)), 1);
          CycRat lhs2(char_eval(A, ctx.add(ctx.one(), x)), 1);
          if (lhs1 != CycRat::from_rational(d) + s1 * scale ||
              lhs2 != CycRat::from_rational(d) + s2 * scale) {
            ok = false;
            why = "series expansion q=" + std::to_string(ctx.q());
          }
        }
      }
    }

    // Multiplicative lift of Gauss sums, m in {2,3,4}, q <= 27.
    for (auto [p, r] : fields_up_to(27)) {
      if (!ok) break;
      FieldCtx ctx = FieldCtx::make(p, r);
      uint32_t qm1 = ctx.q() - 1;
      std::vector<CycInt> g;
      for (uint32_t k = 0; k < qm1; ++k) g.push_back(gauss_sum(MulChar{&ctx, k}));
      for (uint32_t m : {2u, 3u, 4u}) {
        if (qm1 % m != 0 || !ok) continue;
        uint32_t ring = ctx.p() * qm1;
        CycInt base = CycInt::integer(ring, 1);
        for (uint32_t j = 0; j < m; ++j) base = base * g[j * (qm1 / m)];
        FqElem minv = ctx.inv(ctx.pow(ctx.from_int(m), m));
        for (uint32_t s = 0; s < qm1 && ok; ++s) {
          MulChar psi{&ctx, s};
          CycInt lhs = CycInt::integer(ring, 1);
          for (uint32_t j = 0; j < m; ++j) lhs = lhs * g[(j * (qm1 / m) + s) % qm1];
          CycInt rhs = -g[(static_cast<uint64_t>(s) * m) % qm1];
          rhs = rhs * char_eval(psi, minv).promoted(ring);
          rhs = rhs * base;
          if (lhs != rhs) {
            ok = false;
            why = "gauss lift m=" + std::to_string(m) + " q=" + std::to_string(ctx.q());
          }
        }
      }
    }

    // Floor identity, exhaustive over q <= 343.
    for (auto [p, r] : fields_up_to(343)) {
      if (!ok) break;
      uint32_t q = 1;
      for (uint32_t i = 0; i < r; ++i) q *= p;
      for (uint32_t a = 0; a + 1 < q && ok; ++a)
        for (uint32_t i = 0; i < r; ++i)
          if (!floor_identity_check(q, a, i)) {
            ok = false;
            why = "floor identity q=" + std::to_string(q);
          }
    }

    // Gamma product identity, t in {2,3,4}, q <= 125, N = 3.
    for (auto [p, r] : fields_up_to(125)) {
      if (!ok) break;
      FieldCtx ctx = FieldCtx::make(p, r);
      for (uint32_t t : {2u, 3u, 4u}) {
        if (t % p == 0 || !ok) continue;
        for (uint32_t a = 0; a + 1 < ctx.q() && ok; ++a)
          if (!gamma_product_identity_check(ctx, t, a, 3)) {
            ok = false;
            why = "gamma product q=" + std::to_string(ctx.q()) +
                  " t=" + std::to_string(t);
          }
      }
    }

    gate.criterion(
        "lemma suite (gauss/jacobi/binomial laws q <= 25, lifts q <= 27, floors "
        "q <= 343, gamma products q <= 125)",
        ok, why, secs_since(t0));
  }

  {  // 10. Bridges between the p-adic series and the finite-field functions.
    auto t0 = std::chrono::steady_clock::now();
    Report a = sweep(5, 17, {1}, 17, {TheoremId::TR1, TheoremId::TR2, TheoremId::TR3});
    Report b = sweep(3, 5, {2}, 25, {TheoremId::TR1, TheoremId::TR2, TheoremId::TR3});
    gate.criterion("series-to-function bridges (q in {5,...,17} and {9,25})",
                   a.fails == 0 && b.fails == 0 && a.holds > 0 && b.holds > 0,
                   counts(a) + " / " + counts(b), secs_since(t0));
  }

  {  // 11. Core invariant suites.
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string why;

    // Gamma recurrence against the defining product.
    for (uint64_t p : {5ull, 7ull, 13ull}) {
      uint32_t N = 4;
      uint64_t pN = checked_pow(p, N, kResidueBudget);
      uint64_t prod = 1;
      for (int64_t n = 1; n <= 200 && ok; ++n) {
        uint64_t direct = (n % 2 == 0 ? prod : pN - prod) % pN;
        if (gamma_p(mpq_class(static_cast<long>(n)), p, N).residue() != direct) {
          ok = false;
          why = "gamma recurrence p=" + std::to_string(p);
        }
        if (static_cast<uint64_t>(n) % p != 0) prod = mulmod(prod, n, pN);
      }
    }

    // Gamma continuity.
    for (uint64_t p : {5ull, 7ull, 13ull}) {
      if (!ok) break;
      for (uint32_t N = 1; N <= 4 && ok; ++N) {
        uint64_t pN = checked_pow(p, N, kResidueBudget);
        std::vector<uint64_t> value(2 * pN);
        uint64_t prod = 1;
        for (uint64_t n = 0; n < 2 * pN; ++n) {
          value[n] = (n % 2 == 0 ? prod : (pN - prod) % pN);
          if (n % p != 0) prod = mulmod(prod, n % pN, pN);
        }
        for (uint64_t m = 0; m < pN && ok; ++m)
          if (value[m] != value[m + pN] ||
              gamma_p(mpq_class(static_cast<long>(m)), p, N).residue() != value[m]) {
            ok = false;
            why = "gamma continuity p=" + std::to_string(p);
          }
      }
    }

    // Teichmuller residue/order properties over every field q <= 125.
    for (auto [p, r] : fields_up_to(125)) {
      if (!ok) break;
      FieldCtx ctx = FieldCtx::make(p, r);
      for (uint32_t N = 1; N <= 4 && ok; ++N) {
        ZqElem one = ZqElem::from_int(ctx, N, 1);
        for (uint32_t e = 1; e < ctx.q() && ok; ++e) {
          ZqElem w = teichmuller(ctx, FqElem{e}, N);
          if (w.reduce() != FqElem{e} || w.pow(ctx.q() - 1) != one) {
            ok = false;
            why = "teichmuller q=" + std::to_string(ctx.q());
          }
        }
      }
    }

    // Character multiplicativity and orthogonality.
    for (auto [p, r] : {std::pair<uint32_t, uint32_t>{13, 1}, {3, 2}, {5, 2}, {7, 2}}) {
      if (!ok) break;
      FieldCtx ctx = FieldCtx::make(p, r);
      uint32_t qm1 = ctx.q() - 1;
      for (uint32_t m = 0; m < qm1 && ok; ++m) {
        MulChar chi{&ctx, m};
        CycInt total(qm1);
        for (uint32_t e = 0; e < ctx.q(); ++e) total += char_eval(chi, FqElem{e});
        bool want_zero = m != 0;
        if (want_zero ? !total.is_zero() : total != CycInt::integer(qm1, qm1)) {
          ok = false;
          why = "orthogonality q=" + std::to_string(ctx.q());
        }
        for (uint32_t e = 1; e < ctx.q() && ok; e += 3) {
          FqElem x{e};
          FqElem y = ctx.exp((e * 7) % qm1);
          if (char_eval(chi, ctx.mul(x, y)) != char_eval(chi, x) * char_eval(chi, y)) {
            ok = false;
            why = "multiplicativity q=" + std::to_string(ctx.q());
          }
        }
      }
    }

    gate.criterion("invariant suites (gamma, teichmuller, characters)", ok, why,
                   secs_since(t0));
  }

  double total = secs_since(total0);
  std::cout << (gate.failures == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILED")
            << " (" << gate.failures << " failures, " << total << "s total)"
            << std::endl;
  return gate.failures == 0 ? 0 : 1;
}
