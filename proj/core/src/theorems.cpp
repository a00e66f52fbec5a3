#include "ffhyper/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ffhyper/characters.hpp"
#include "ffhyper/charsum.hpp"
#include "ffhyper/cyclotomic.hpp"
#include "ffhyper/greene.hpp"
#include "ffhyper/numeric.hpp"
#include "ffhyper/padic.hpp"
#include "ffhyper/pg_series.hpp"

namespace ffhyper {

namespace {

const std::vector<std::pair<TheoremId, const char*>>& id_names() {
  static const std::vector<std::pair<TheoremId, const char*>> names = {
      {TheoremId::MT1, "MT1"},           {TheoremId::SPV1, "SPV1"},
      {TheoremId::MT4, "MT4"},           {TheoremId::MT3, "MT3"},
      {TheoremId::MT2, "MT2"},           {TheoremId::MT5_G, "MT5_G"},
      {TheoremId::MT5_F, "MT5_F"},       {TheoremId::MT7_85, "MT7_85"},
      {TheoremId::MT7_86, "MT7_86"},     {TheoremId::MT7_87, "MT7_87"},
      {TheoremId::MT6_83, "MT6_83"},     {TheoremId::MT6_84, "MT6_84"},
      {TheoremId::COR1, "COR1"},         {TheoremId::COR_FINAL, "COR_FINAL"},
      {TheoremId::PROP1, "PROP1"},       {TheoremId::PROP2, "PROP2"},
      {TheoremId::TR1, "TR1"},           {TheoremId::TR2, "TR2"},
      {TheoremId::TR3, "TR3"},
  };
  return names;
}

}  // namespace

std::string to_string(TheoremId id) {
  for (const auto& [i, n] : id_names())
    if (i == id) return n;
  return "?";
}

std::optional<TheoremId> theorem_from_string(const std::string& s) {
  for (const auto& [i, n] : id_names())
    if (s == n) return i;
  return std::nullopt;
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> v;
    for (const auto& [i, n] : id_names()) v.push_back(i);
    return v;
  }();
  return ids;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::fails: return "fails";
    case CheckStatus::skipped_degenerate: return "skipped-degenerate";
    case CheckStatus::skipped_inadmissible: return "skipped-inadmissible";
    case CheckStatus::reported: return "reported";
  }
  return "?";
}

void Report::recount() {
  holds = fails = skipped = reported = 0;
  for (const auto& r : results) {
    switch (r.status) {
      case CheckStatus::holds: ++holds; break;
      case CheckStatus::fails: ++fails; break;
      case CheckStatus::reported: ++reported; break;
      default: ++skipped; break;
    }
  }
}

bool admissible(TheoremId id, const FieldCtx& ctx) {
  uint32_t p = ctx.p(), r = ctx.r(), q = ctx.q();
  switch (id) {
    case TheoremId::MT1:
    case TheoremId::MT3:
    case TheoremId::PROP1:
    case TheoremId::PROP2:
    case TheoremId::TR2:
    case TheoremId::TR3:
      return true;
    case TheoremId::SPV1:
      return r == 1 && (p % 8 == 5 || p % 8 == 7);
    case TheoremId::MT4:
    case TheoremId::MT5_G:
      return r == 1;
    case TheoremId::MT2:
    case TheoremId::TR1:
      return q % 4 == 1;
    case TheoremId::MT5_F:
    case TheoremId::COR1:
      return r == 1 && p % 4 == 1;
    case TheoremId::MT7_85:
    case TheoremId::MT6_83:
      return q % 8 == 1;
    case TheoremId::MT7_86:
      return q % 12 == 11;
    case TheoremId::MT7_87:
    case TheoremId::MT6_84:
      return q % 12 == 1;
    case TheoremId::COR_FINAL:
      return r == 1 && p % 8 == 1;
  }
  return false;
}

bool needs_x(TheoremId id) {
  switch (id) {
    case TheoremId::MT1:
    case TheoremId::MT4:
    case TheoremId::MT3:
    case TheoremId::MT2:
    case TheoremId::PROP1:
    case TheoremId::PROP2:
    case TheoremId::TR1:
    case TheoremId::TR2:
    case TheoremId::TR3:
      return true;
    default:
      return false;
  }
}

bool admissible_x(TheoremId id, const FieldCtx& ctx, FqElem x) {
  FqElem one = ctx.one();
  FqElem mone = ctx.neg(one);
  switch (id) {
    case TheoremId::MT1:
    case TheoremId::MT4:
      return x != ctx.zero() && x != one;
    case TheoremId::MT3:
    case TheoremId::MT2:
      return x != ctx.zero() && x != one && x != mone;
    case TheoremId::PROP1:
      return x != ctx.zero();
    case TheoremId::PROP2:
      return x != one;
    case TheoremId::TR1:
    case TheoremId::TR2:
    case TheoremId::TR3:
      return x != ctx.zero();
    default:
      return true;
  }
}

namespace {

int phi_sign(const FieldCtx& ctx, FqElem v) {
  if (v.enc == 0) return 0;
  return ctx.log(v) % 2 == 0 ? 1 : -1;
}

ZqElem scalar_elem(const FieldCtx& ctx, uint32_t N, const mpq_class& v) {
  return ZqElem::from_scalar(ctx, PadicInt::from_rational(v, ctx.p(), N));
}

// Shared per-field state: standard characters and lazily built tables.
struct Evaluator {
  const FieldCtx& ctx;
  StdChars sc;
  GParams quarter, half2, half3;
  std::optional<GreeneTable> t_chi4, t_chi4s, t_phi, t_phi3;

  explicit Evaluator(const FieldCtx& c) : ctx(c), sc(std_chars(c)) {
    quarter = {{mpq_class(1, 4), mpq_class(3, 4)}, {mpq_class(0), mpq_class(0)}};
    half2 = {{mpq_class(1, 2), mpq_class(1, 2)}, {mpq_class(0), mpq_class(0)}};
    half3 = {{mpq_class(1, 2), mpq_class(1, 2), mpq_class(1, 2)},
             {mpq_class(0), mpq_class(0), mpq_class(0)}};
  }

  const GreeneTable& chi4_f() {
    if (!t_chi4)
      t_chi4.emplace(ctx, HypFParams{{*sc.chi4, sc.chi4->pow(3)}, {sc.eps}});
    return *t_chi4;
  }
  const GreeneTable& chi4_f_swapped() {
    if (!t_chi4s)
      t_chi4s.emplace(ctx, HypFParams{{sc.chi4->pow(3), *sc.chi4}, {sc.eps}});
    return *t_chi4s;
  }
  const GreeneTable& phi_f() {
    if (!t_phi) t_phi.emplace(ctx, HypFParams{{sc.phi, sc.phi}, {sc.eps}});
    return *t_phi;
  }
  const GreeneTable& phi3_f() {
    if (!t_phi3)
      t_phi3.emplace(ctx, HypFParams{{sc.phi, sc.phi, sc.phi}, {sc.eps, sc.eps}});
    return *t_phi3;
  }

  GValue G2q(FqElem t, uint32_t N) { return pG(quarter, ctx, t, N); }
  GValue G2h(FqElem t, uint32_t N) { return pG(half2, ctx, t, N); }
  GValue G3h(FqElem t, uint32_t N) { return pG(half3, ctx, t, N); }

  int phi(FqElem v) const { return phi_sign(ctx, v); }
};

bool g_equals_rational(const GValue& g, const mpq_class& v, const FieldCtx& ctx) {
  try {
    return g.residue() == scalar_elem(ctx, g.precision(), v);
  } catch (const error&) {
    return false;  // fractional value cannot equal a p-adic integer claim
  }
}

bool g_equals_g(const GValue& a, const GValue& b, int sign) {
  try {
    ZqElem ra = a.residue();
    ZqElem rb = b.residue();
    if (sign < 0) rb = -rb;
    return ra == rb;
  } catch (const error&) {
    return false;
  }
}

CheckResult make_result(TheoremId id, const FieldCtx& ctx, uint32_t N) {
  CheckResult res;
  res.id = id;
  res.p = ctx.p();
  res.r = ctx.r();
  res.N = N;
  return res;
}

void set_status(CheckResult& res, bool ok) {
  res.status = ok ? CheckStatus::holds : CheckStatus::fails;
}

// ---- per-id checks ---------------------------------------------------------

CheckResult do_MT1(Evaluator& ev, FqElem x, uint32_t N) {
  const FieldCtx& ctx = ev.ctx;
  CheckResult res = make_result(TheoremId::MT1, ctx, N);
  res.x = ctx.to_string(x);
  GValue lhs = ev.G2q(ctx.inv(x), N);
  GValue rhs = ev.G2q(ctx.inv(ctx.sub(ctx.one(), x)), N);
  int s = ev.phi(ctx.from_int(-2));
  set_status(res, g_equals_g(lhs, rhs, s));
  res.lhs = lhs.str();
  res.rhs = (s < 0 ? std::string("-(") + rhs.str() + ")" : rhs.str());
  return res;
}

CheckResult do_SPV1(Evaluator& ev, uint32_t N) {
  const FieldCtx& ctx = ev.ctx;
  CheckResult res = make_result(TheoremId::SPV1, ctx, N);
  GValue g = ev.G2q(ctx.from_int(2), N);
  set_status(res, g.is_zero());
  res.lhs = g.str();
  res.rhs = "0";
  return res;
}

CheckResult do_MT4(Evaluator& ev, FqElem x, uint32_t N) {
  const FieldCtx& ctx = ev.ctx;
  CheckResult res = make_result(TheoremId::MT4, ctx, N);
  res.x = ctx.to_string(x);
  uint64_t pN = checked_pow(ctx.p(), N, kResidueBudget);
  GValue g3 = ev.G3h(ctx.inv(x), N);
  GValue g2 = ev.G2q(ctx.mul(ctx.sub(x, ctx.one()), ctx.inv(x)), N);
  uint64_t l = g3.residue().scalar().residue();
  uint64_t gv = g2.residue().scalar().residue();
  uint64_t rhs = (mulmod(gv, gv, pN) + pN - ctx.p() % pN) % pN;
  if (ev.phi(ctx.sub(ctx.one(), x)) < 0) rhs = rhs == 0 ? 0 : pN - rhs;
  set_status(res, l == rhs);
  res.lhs = g3.str();
  res.rhs = PadicInt(ctx.p(), N, static_cast<int64_t>(rhs)).str();
  return res;
}

CheckResult do_MT3(Evaluator& ev, FqElem x, uint32_t N) {
  const FieldCtx& ctx = ev.ctx;
  CheckResult res = make_result(TheoremId::MT3, ctx, N);
  res.x = ctx.to_string(x);
  FqElem ratio = ctx.mul(ctx.add(ctx.one(), x), ctx.inv(ctx.sub(ctx.one(), x)));
  GValue lhs = ev.G2q(ctx.mul(ratio, ratio), N);
  GValue rhs = ev.G2h(ctx.inv(x), N);
  int s = ev.phi(ctx.from_int(-2)) * ev.phi(ctx.add(ctx.one(), x));
  set_status(res, g_equals_g(lhs, rhs, s));
  res.lhs = lhs.str();
  res.rhs = (s < 0 ? std::string("-(") + rhs.str() + ")" : rhs.str());
  return res;
}

CheckResult do_MT2(Evaluator& ev, FqElem x, uint32_t N) {
  const FieldCtx& ctx = ev.ctx;
  CheckResult res = make_result(TheoremId::MT2, ctx, N);
  res.x = ctx.to_string(x);
  FqElem ratio = ctx.mul(ctx.sub(ctx.one(), x), ctx.inv(ctx.add(ctx.one(), x)));
  FqElem lam = ctx.mul(ratio, ratio);
  int s = ev.phi(ctx.from_int(-2)) * ev.phi(ctx.add(ctx.one(), x));
  CycRat rhs = ev.phi_f().eval(x) * mpq_class(s);
  CycRat l1 = ev.chi4_f().eval(lam);
  CycRat l2 = ev.chi4_f_swapped().eval(lam);
  set_status(res, l1 == rhs && l2 == rhs);
  res.lhs = l1.str();
  res.rhs = rhs.str();
  return res;
}

mpq_class two_squares_value(uint32_t p, int phi6)  // -2x phi6 (-1)^((x+y+1)/2)
{
  TwoSquares ts = two_squares(p);
  int sgn = ((ts.x + ts.y + 1) / 2) % 2 == 0 ? 1 : -1;
  return mpq_class(-2 * ts.x * phi6 * sgn);
}

CheckResult do_MT5_G(Evaluator& ev, uint32_t N) {
  const FieldCtx& ctx = ev.ctx;
  CheckResult res = make_result(TheoremId::MT5_G, ctx, N);
  if (ctx.p() == 3) {
    res.status = CheckStatus::skipped_degenerate;
    res.rhs = "argument 9 vanishes";
    return res;
  }
  GValue g = ev.G2q(ctx.from_int(9), N);
  if (ctx.p() % 4 == 3) {
    set_status(res, g.is_zero());
    res.lhs = g.str();
    res.rhs = "0";
    return res;
  }
  mpq_class want = two_squares_value(ctx.p(), ev.phi(ctx.from_int(6)));
  set_status(res, g_equals_rational(g, want, ctx));
  res.lhs = g.str();
  res.rhs = want.get_str();
  return res;
}

CheckResult do_MT5_F(Evaluator& ev, uint32_t N) {
  const FieldCtx& ctx = ev.ctx;
  CheckResult res = make_result(TheoremId::MT5_F, ctx, N);
  FqElem arg = ctx.inv(ctx.from_int(9));
  mpq_class want = -two_squares_value(ctx.p(), ev.phi(ctx.from_int(6)));
  want /= ctx.p();
  CycRat expected = CycRat::from_rational(want);
  CycRat f1 = ev.chi4_f().eval(arg);
  CycRat f2 = ev.chi4_f_swapped().eval(arg);
  set_status(res, f1 == expected && f2 == expected);
  res.lhs = f1.str();
  res.rhs = expected.str();
  return res;
}

CheckResult do_COR1(Evaluator& ev, uint32_t N) {
  const FieldCtx& ctx = ev.ctx;
  CheckResult res = make_result(TheoremId::COR1, ctx, N);
  TwoSquares ts = two_squares(ctx.p());
  int sgn = ((ts.x + ts.y + 1) / 2) % 2 == 0 ? 1 : -1;
  mpq_class want(2 * ts.x * sgn, ctx.p());
  want.canonicalize();
  CycRat lhs = binomial(*ev.sc.chi4, ev.sc.phi) + binomial(ev.sc.chi4->pow(3), ev.sc.phi);
  set_status(res, lhs == CycRat::from_rational(want));
  res.lhs = lhs.str();
  res.rhs = want.get_str();
  return res;
}

// Branch helper for the square-root families: evaluates fn for all four
// (root, sign) combinations and aggregates.
template <typename Fn>
CheckResult run_branches(TheoremId id, Evaluator& ev, uint32_t N, int64_t radicand,
                         Fn&& fn) {
  const FieldCtx& ctx = ev.ctx;
  CheckResult res = make_result(id, ctx, N);
  auto rt = ctx.sqrt(ctx.from_int(radicand));
  if (!rt) {
    res.status = CheckStatus::skipped_degenerate;
    res.rhs = "radicand is not a square";
    return res;
  }
  bool any_fail = false, any_hold = false;
  std::ostringstream ls, rs;
  bool first = true;
  for (FqElem s : {rt->first, rt->second}) {
    for (int sg : {1, -1}) {
      CheckResult combo = make_result(id, ctx, N);
      fn(s, sg, combo);
      if (!first) {
        ls << "; ";
        rs << "; ";
      }
      first = false;
      std::string tag = "s=" + ctx.to_string(s) + (sg > 0 ? ",+: " : ",-: ");
      if (combo.status == CheckStatus::skipped_degenerate) {
        ls << tag << "degenerate";
        rs << tag << "degenerate";
      } else {
        ls << tag << combo.lhs;
        rs << tag << combo.rhs;
        if (combo.status == CheckStatus::fails) any_fail = true;
        if (combo.status == CheckStatus::holds) any_hold = true;
      }
    }
  }
  res.lhs = ls.str();
  res.rhs = rs.str();
  if (any_fail)
    res.status = CheckStatus::fails;
  else if (any_hold)
    res.status = CheckStatus::holds;
  else
    res.status = CheckStatus::skipped_degenerate;
  return res;
}

CheckResult do_MT7_85(Evaluator& ev, uint32_t N) {
  const FieldCtx& ctx = ev.ctx;
  CycRat bsum = binomial(*ev.sc.chi4, ev.sc.phi) + binomial(ev.sc.chi4->pow(3), ev.sc.phi);
  auto brat = bsum.to_rational();
  if (!brat) {
    CheckResult res = make_result(TheoremId::MT7_85, ctx, N);
    res.status = CheckStatus::fails;
    res.rhs = "binomial pair sum is not rational: " + bsum.str();
    return res;
  }
  return run_branches(TheoremId::MT7_85, ev, N, 2, [&](FqElem s, int sg, CheckResult& c) {
    FqElem num = ctx.add(ctx.mul(ctx.from_int(6), s), ctx.from_int(3 * sg));
    FqElem den = ctx.add(ctx.mul(ctx.from_int(-2), s), ctx.from_int(3 * sg));
    FqElem warg = ctx.add(ctx.from_int(6), ctx.mul(ctx.from_int(12 * sg), s));
    if (num.enc == 0 || den.enc == 0 || warg.enc == 0) {
      c.status = CheckStatus::skipped_degenerate;
      return;
    }
    FqElem ratio = ctx.mul(num, ctx.inv(den));
    GValue g = ev.G2q(ctx.mul(ratio, ratio), N);
    mpq_class want = *brat * mpq_class(-static_cast<long>(ctx.q()) * ev.phi(warg));
    set_status(c, g_equals_rational(g, want, ctx));
    c.lhs = g.str();
    c.rhs = want.get_str();
  });
}

CheckResult do_MT7_86(Evaluator& ev, uint32_t N) {
  const FieldCtx& ctx = ev.ctx;
  return run_branches(TheoremId::MT7_86, ev, N, 3, [&](FqElem s, int sg, CheckResult& c) {
    FqElem num = ctx.add(ctx.from_int(6), ctx.mul(ctx.from_int(sg), s));
    FqElem den = ctx.add(ctx.from_int(-2), ctx.mul(ctx.from_int(sg), s));
    if (num.enc == 0 || den.enc == 0) {
      c.status = CheckStatus::skipped_degenerate;
      return;
    }
    FqElem ratio = ctx.mul(num, ctx.inv(den));
    GValue g = ev.G2q(ctx.mul(ratio, ratio), N);
    set_status(c, g.is_zero());
    c.lhs = g.str();
    c.rhs = "0";
  });
}

CheckResult do_MT7_87(Evaluator& ev, uint32_t N) {
  const FieldCtx& ctx = ev.ctx;
  CycRat bsum = binomial(ev.sc.phi, *ev.sc.chi3) + binomial(ev.sc.phi, ev.sc.chi3->pow(2));
  auto brat = bsum.to_rational();
  if (!brat) {
    CheckResult res = make_result(TheoremId::MT7_87, ctx, N);
    res.status = CheckStatus::fails;
    res.rhs = "binomial pair sum is not rational: " + bsum.str();
    return res;
  }
  return run_branches(TheoremId::MT7_87, ev, N, 3, [&](FqElem s, int sg, CheckResult& c) {
    FqElem num = ctx.add(ctx.from_int(6), ctx.mul(ctx.from_int(sg), s));
    FqElem den = ctx.add(ctx.from_int(-2), ctx.mul(ctx.from_int(sg), s));
    FqElem wn = ctx.add(ctx.from_int(8), ctx.mul(ctx.from_int(5 * sg), s));
    FqElem wd = ctx.add(ctx.from_int(12), ctx.mul(ctx.from_int(6 * sg), s));
    if (num.enc == 0 || den.enc == 0 || wn.enc == 0 || wd.enc == 0) {
      c.status = CheckStatus::skipped_degenerate;
      return;
    }
    FqElem ratio = ctx.mul(num, ctx.inv(den));
    GValue g = ev.G2q(ctx.mul(ratio, ratio), N);
    int ph = ev.phi(ctx.mul(wn, ctx.inv(wd)));
    mpq_class want = *brat * mpq_class(-static_cast<long>(ctx.q()) * ph);
    set_status(c, g_equals_rational(g, want, ctx));
    c.lhs = g.str();
    c.rhs = want.get_str();
  });
}

CheckResult do_MT6_83(Evaluator& ev, uint32_t N) {
  const FieldCtx& ctx = ev.ctx;
  CycRat bsum = binomial(*ev.sc.chi4, ev.sc.phi) + binomial(ev.sc.chi4->pow(3), ev.sc.phi);
  return run_branches(TheoremId::MT6_83, ev, N, 2, [&](FqElem s, int sg, CheckResult& c) {
    FqElem num = ctx.add(ctx.mul(ctx.from_int(-2), s), ctx.from_int(3 * sg));
    FqElem den = ctx.add(ctx.mul(ctx.from_int(6), s), ctx.from_int(3 * sg));
    FqElem warg = ctx.add(ctx.from_int(6), ctx.mul(ctx.from_int(12 * sg), s));
    if (num.enc == 0 || den.enc == 0 || warg.enc == 0) {
      c.status = CheckStatus::skipped_degenerate;
      return;
    }
    FqElem ratio = ctx.mul(num, ctx.inv(den));
    FqElem lam = ctx.mul(ratio, ratio);
    CycRat want = bsum * mpq_class(ev.phi(warg));
    CycRat f1 = ev.chi4_f().eval(lam);
    CycRat f2 = ev.chi4_f_swapped().eval(lam);
    set_status(c, f1 == want && f2 == want);
    c.lhs = f1.str();
    c.rhs = want.str();
  });
}

CheckResult do_MT6_84(Evaluator& ev, uint32_t N) {
  const FieldCtx& ctx = ev.ctx;
  CycRat bsum = binomial(ev.sc.phi, *ev.sc.chi3) + binomial(ev.sc.phi, ev.sc.chi3->pow(2));
  return run_branches(TheoremId::MT6_84, ev, N, 3, [&](FqElem s, int sg, CheckResult& c) {
    FqElem num = ctx.add(ctx.from_int(-2), ctx.mul(ctx.from_int(sg), s));
    FqElem den = ctx.add(ctx.from_int(6), ctx.mul(ctx.from_int(sg), s));
    FqElem wn = ctx.add(ctx.from_int(8), ctx.mul(ctx.from_int(5 * sg), s));
    FqElem wd = ctx.add(ctx.from_int(12), ctx.mul(ctx.from_int(6 * sg), s));
    if (num.enc == 0 || den.enc == 0 || wn.enc == 0 || wd.enc == 0) {
      c.status = CheckStatus::skipped_degenerate;
      return;
    }
    FqElem ratio = ctx.mul(num, ctx.inv(den));
    FqElem lam = ctx.mul(ratio, ratio);
    CycRat want = bsum * mpq_class(ev.phi(ctx.mul(wn, ctx.inv(wd))));
    CycRat f1 = ev.chi4_f().eval(lam);
    CycRat f2 = ev.chi4_f_swapped().eval(lam);
    set_status(c, f1 == want && f2 == want);
    c.lhs = f1.str();
    c.rhs = want.str();
  });
}

CheckResult do_COR_FINAL(Evaluator& ev, uint32_t N) {
  const FieldCtx& ctx = ev.ctx;
  TwoSquares ts = two_squares(ctx.p());
  int sgn = ((ts.x + ts.y + 1) / 2) % 2 == 0 ? 1 : -1;
  return run_branches(TheoremId::COR_FINAL, ev, N, 2, [&](FqElem s, int sg, CheckResult& c) {
    FqElem num = ctx.add(ctx.mul(ctx.from_int(6), s), ctx.from_int(3 * sg));
    FqElem den = ctx.add(ctx.mul(ctx.from_int(-2), s), ctx.from_int(3 * sg));
    FqElem warg = ctx.add(ctx.from_int(6), ctx.mul(ctx.from_int(12 * sg), s));
    if (num.enc == 0 || den.enc == 0 || warg.enc == 0) {
      c.status = CheckStatus::skipped_degenerate;
      return;
    }
    FqElem ratio = ctx.mul(num, ctx.inv(den));
    GValue g = ev.G2q(ctx.mul(ratio, ratio), N);
    mpq_class want(-2 * ts.x * ev.phi(warg) * sgn);
    set_status(c, g_equals_rational(g, want, ctx));
    c.lhs = g.str();
    c.rhs = want.get_str();
  });
}

CheckResult do_PROP1(Evaluator& ev, FqElem x, uint32_t N) {
  const FieldCtx& ctx = ev.ctx;
  CheckResult res = make_result(TheoremId::PROP1, ctx, N);
  res.x = ctx.to_string(x);
  int64_t oracle = phi_quadratic_sum(ctx, x);
  auto arat = sum_A(ctx, x).to_rational();
  int s2 = ev.phi(ctx.from_int(-2));
  bool mid_ok = false;
  if (arat) {
    mpq_class mid = mpq_class(ev.phi(ctx.mul(ctx.from_int(2), x)));
    mid += mpq_class(ctx.q()) * ctx.q() * s2 / mpq_class(ctx.q() - 1) * (*arat);
    mid_ok = (mid == mpq_class(static_cast<long>(oracle)));
  }
  GValue g = ev.G2q(ctx.inv(x), N);
  // oracle = -phi(-2) * G
  bool g_ok = g_equals_rational(g, mpq_class(static_cast<long>(-s2 * oracle)), ctx);
  set_status(res, mid_ok && g_ok);
  res.lhs = std::to_string(oracle);
  res.rhs = std::string("mid ") + (mid_ok ? "=" : "!=") + " oracle; -phi(-2)G = " +
            (s2 < 0 ? g.str() : "-(" + g.str() + ")");
  return res;
}

CheckResult do_PROP2(Evaluator& ev, FqElem x, uint32_t N) {
  const FieldCtx& ctx = ev.ctx;
  CheckResult res = make_result(TheoremId::PROP2, ctx, N);
  res.x = ctx.to_string(x);
  int64_t oracle = phi_quadratic_sum(ctx, x);
  auto brat = sum_B(ctx, x).to_rational();
  bool mid_ok = false;
  if (brat) {
    mpq_class mid = mpq_class(2 * ev.phi(ctx.sub(x, ctx.one())));
    mid += mpq_class(ctx.q()) * ctx.q() / mpq_class(ctx.q() - 1) * (*brat);
    mid_ok = (mid == mpq_class(static_cast<long>(oracle)));
  }
  GValue g = ev.G2q(ctx.inv(ctx.sub(ctx.one(), x)), N);
  bool g_ok = g_equals_rational(g, mpq_class(static_cast<long>(-oracle)), ctx);
  set_status(res, mid_ok && g_ok);
  res.lhs = std::to_string(oracle);
  res.rhs = std::string("mid ") + (mid_ok ? "=" : "!=") + " oracle; -G = -(" + g.str() + ")";
  return res;
}

CheckResult do_TR1(Evaluator& ev, FqElem x, uint32_t N) {
  const FieldCtx& ctx = ev.ctx;
  CheckResult res = make_result(TheoremId::TR1, ctx, N);
  res.x = ctx.to_string(x);
  GValue g = ev.G2q(x, N);
  mpq_class scale(-static_cast<long>(ctx.q()));
  CycRat rhs1 = ev.chi4_f().eval(ctx.inv(x)) * scale;
  CycRat rhs2 = ev.chi4_f_swapped().eval(ctx.inv(x)) * scale;
  ZqElem w1 = zq_embed(ctx, rhs1, N);
  ZqElem w2 = zq_embed(ctx, rhs2, N);
  bool ok = false;
  try {
    ZqElem got = g.residue();
    ok = (got == w1) && (got == w2);
  } catch (const error&) {
  }
  set_status(res, ok);
  res.lhs = g.str();
  res.rhs = "-q*F -> " + w1.str();
  return res;
}

CheckResult do_TR2(Evaluator& ev, FqElem x, uint32_t N) {
  const FieldCtx& ctx = ev.ctx;
  CheckResult res = make_result(TheoremId::TR2, ctx, N);
  res.x = ctx.to_string(x);
  GValue g = ev.G2h(x, N);
  CycRat rhs = ev.phi_f().eval(ctx.inv(x)) * mpq_class(-static_cast<long>(ctx.q()));
  ZqElem w = zq_embed(ctx, rhs, N);
  bool ok = false;
  try {
    ok = (g.residue() == w);
  } catch (const error&) {
  }
  set_status(res, ok);
  res.lhs = g.str();
  res.rhs = "-q*F -> " + w.str();
  return res;
}

CheckResult do_TR3(Evaluator& ev, FqElem x, uint32_t N) {
  const FieldCtx& ctx = ev.ctx;
  CheckResult res = make_result(TheoremId::TR3, ctx, N);
  res.x = ctx.to_string(x);
  GValue g = ev.G3h(x, N);
  mpq_class q2(static_cast<long>(ctx.q()));
  q2 *= static_cast<long>(ctx.q());
  CycRat rhs = ev.phi3_f().eval(ctx.inv(x)) * q2;
  ZqElem w = zq_embed(ctx, rhs, N);
  bool ok = false;
  try {
    ok = (g.residue() == w);
  } catch (const error&) {
  }
  set_status(res, ok);
  res.lhs = g.str();
  res.rhs = "q^2*F -> " + w.str();
  return res;
}

CheckResult dispatch(Evaluator& ev, TheoremId id, std::optional<FqElem> x,
                     uint32_t N) {
  switch (id) {
    case TheoremId::MT1: return do_MT1(ev, *x, N);
    case TheoremId::SPV1: return do_SPV1(ev, N);
    case TheoremId::MT4: return do_MT4(ev, *x, N);
    case TheoremId::MT3: return do_MT3(ev, *x, N);
    case TheoremId::MT2: return do_MT2(ev, *x, N);
    case TheoremId::MT5_G: return do_MT5_G(ev, N);
    case TheoremId::MT5_F: return do_MT5_F(ev, N);
    case TheoremId::MT7_85: return do_MT7_85(ev, N);
    case TheoremId::MT7_86: return do_MT7_86(ev, N);
    case TheoremId::MT7_87: return do_MT7_87(ev, N);
    case TheoremId::MT6_83: return do_MT6_83(ev, N);
    case TheoremId::MT6_84: return do_MT6_84(ev, N);
    case TheoremId::COR1: return do_COR1(ev, N);
    case TheoremId::COR_FINAL: return do_COR_FINAL(ev, N);
    case TheoremId::PROP1: return do_PROP1(ev, *x, N);
    case TheoremId::PROP2: return do_PROP2(ev, *x, N);
    case TheoremId::TR1: return do_TR1(ev, *x, N);
    case TheoremId::TR2: return do_TR2(ev, *x, N);
    case TheoremId::TR3: return do_TR3(ev, *x, N);
  }
  fail(errc::bad_argument, "dispatch: unknown theorem id");
}

uint32_t precision_for(TheoremId id, const FieldCtx& ctx,
                       std::optional<uint32_t> override_n) {
  if (override_n) return *override_n;
  uint32_t n = default_precision(ctx);
  if (id == TheoremId::SPV1 && n < 4) n = 4;
  return n;
}

}  // namespace

CheckResult verify(TheoremId id, const FieldCtx& ctx, std::optional<FqElem> x,
                   std::optional<uint32_t> precision_override) {
  uint32_t N = precision_for(id, ctx, precision_override);
  if (!admissible(id, ctx)) {
    CheckResult res = make_result(id, ctx, N);
    if (x) res.x = ctx.to_string(*x);
    res.status = CheckStatus::skipped_inadmissible;
    return res;
  }
  if (needs_x(id)) {
    if (!x) fail(errc::bad_argument, "verify: " + to_string(id) + " requires x");
    if (!admissible_x(id, ctx, *x)) {
      CheckResult res = make_result(id, ctx, N);
      res.x = ctx.to_string(*x);
      res.status = CheckStatus::skipped_inadmissible;
      return res;
    }
  }
  Evaluator ev(ctx);
  return dispatch(ev, id, x, N);
}

Report run_suite(const SuiteConfig& cfg, const std::vector<TheoremId>& ids) {
  if (cfg.q_max > kFieldBudget)
    fail(errc::budget_exceeded, "run_suite: q_max exceeds field budget");
  Report report;
  report.meta.ids = ids;
  report.meta.prime_lo = cfg.prime_lo;
  report.meta.prime_hi = cfg.prime_hi;
  report.meta.degrees = cfg.degrees;
  report.meta.q_max = cfg.q_max;
  report.meta.jobs = cfg.jobs;
  if (cfg.precision_override)
    report.meta.precision = std::to_string(*cfg.precision_override);

  std::vector<uint32_t> degrees = cfg.degrees;
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

  struct FieldJob {
    uint32_t p, r;
    uint64_t q;
  };
  std::vector<FieldJob> fields;
  for (uint32_t r : degrees) {
    for (uint32_t p = std::max(3u, cfg.prime_lo | 1); p <= cfg.prime_hi; p += 2) {
      if (!is_prime(p)) continue;
      uint64_t q = 1;
      bool fits = true;
      for (uint32_t i = 0; i < r; ++i) {
        q *= p;
        if (q > cfg.q_max) {
          fits = false;
          break;
        }
      }
      if (fits) fields.push_back({p, r, q});
    }
  }
  std::sort(fields.begin(), fields.end(),
            [](const FieldJob& a, const FieldJob& b) { return a.q < b.q; });

  std::vector<std::vector<std::vector<CheckResult>>> grid(
      fields.size(), std::vector<std::vector<CheckResult>>(ids.size()));

  auto run_field = [&](size_t fi) {
    const FieldJob& fj = fields[fi];
    FieldCtx ctx = FieldCtx::make(fj.p, fj.r);
    Evaluator ev(ctx);
    for (size_t ii = 0; ii < ids.size(); ++ii) {
      TheoremId id = ids[ii];
      uint32_t N = precision_for(id, ctx, cfg.precision_override);
      auto& out = grid[fi][ii];
      try {
        if (!admissible(id, ctx)) {
          CheckResult res = make_result(id, ctx, N);
          res.status = CheckStatus::skipped_inadmissible;
          out.push_back(res);
          continue;
        }
        if (!needs_x(id)) {
          out.push_back(dispatch(ev, id, std::nullopt, N));
          continue;
        }
        for (uint32_t enc = 0; enc < ctx.q(); ++enc) {
          FqElem x{enc};
          if (!admissible_x(id, ctx, x)) continue;
          out.push_back(dispatch(ev, id, x, N));
        }
      } catch (const error& e) {
        CheckResult res = make_result(id, ctx, N);
        res.status = e.code() == errc::budget_exceeded
                         ? CheckStatus::skipped_inadmissible
                         : CheckStatus::fails;
        res.rhs = e.what();
        out.push_back(res);
      } catch (const std::exception& e) {
        CheckResult res = make_result(id, ctx, N);
        res.status = CheckStatus::fails;
        res.rhs = e.what();
        out.push_back(res);
      }
    }
  };

  uint32_t jobs = std::max(1u, cfg.jobs);
  if (jobs == 1 || fields.size() <= 1) {
    for (size_t i = 0; i < fields.size(); ++i) run_field(i);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= fields.size()) return;
        run_field(i);
      }
    };
    std::vector<std::thread> pool;
    for (uint32_t i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (size_t ii = 0; ii < ids.size(); ++ii)
    for (size_t fi = 0; fi < fields.size(); ++fi)
      for (auto& res : grid[fi][ii]) report.results.push_back(std::move(res));
  report.recount();
  return report;
}

Report special_value_table(TheoremId id, uint32_t prime_lo, uint32_t prime_hi) {
  switch (id) {
    case TheoremId::SPV1:
    case TheoremId::MT5_G:
    case TheoremId::MT5_F:
    case TheoremId::MT7_85:
    case TheoremId::MT7_86:
    case TheoremId::MT7_87:
    case TheoremId::MT6_83:
    case TheoremId::MT6_84:
      break;
    default:
      fail(errc::bad_argument, "special_value_table: id has no tabulation");
  }
  Report report;
  report.meta.ids = {id};
  report.meta.prime_lo = prime_lo;
  report.meta.prime_hi = prime_hi;
  report.meta.degrees = {1};
  report.meta.q_max = kFieldBudget;
  for (uint32_t p = std::max(3u, prime_lo | 1); p <= prime_hi; p += 2) {
    if (!is_prime(p)) continue;
    FieldCtx ctx = FieldCtx::make(p, 1);
    if (id == TheoremId::SPV1 && !(p % 8 == 5 || p % 8 == 7)) {
      // Open congruence classes: value computed, no claim attached.
      uint32_t N = std::max(4u, default_precision(ctx));
      Evaluator ev(ctx);
      CheckResult row = make_result(id, ctx, N);
      GValue g = ev.G2q(ctx.from_int(2), N);
      row.status = CheckStatus::reported;
      row.lhs = g.str();
      row.rhs = "";
      report.results.push_back(std::move(row));
      continue;
    }
    report.results.push_back(verify(id, ctx));
  }
  report.recount();
  return report;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string to_json(const Report& report) {
  nlohmann::json j;
  std::vector<std::string> names;
  for (auto id : report.meta.ids) names.push_back(to_string(id));
  j["meta"] = {
      {"ids", names},
      {"prime_lo", report.meta.prime_lo},
      {"prime_hi", report.meta.prime_hi},
      {"degrees", report.meta.degrees},
      {"q_max", report.meta.q_max},
      {"precision", report.meta.precision},
      {"jobs", report.meta.jobs},
      {"version", report.meta.version},
  };
  j["results"] = nlohmann::json::array();
  for (const auto& r : report.results) {
    j["results"].push_back({
        {"id", to_string(r.id)},
        {"p", r.p},
        {"r", r.r},
        {"x", r.x},
        {"status", to_string(r.status)},
        {"lhs", r.lhs},
        {"rhs", r.rhs},
        {"N", r.N},
    });
  }
  j["summary"] = {
      {"holds", report.holds},
      {"fails", report.fails},
      {"skipped", report.skipped},
      {"reported", report.reported},
  };
  return j.dump(2);
}

Report report_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Report report;
  for (const auto& n : j.at("meta").at("ids")) {
    auto id = theorem_from_string(n.get<std::string>());
    if (id) report.meta.ids.push_back(*id);
  }
  report.meta.prime_lo = j.at("meta").at("prime_lo").get<uint32_t>();
  report.meta.prime_hi = j.at("meta").at("prime_hi").get<uint32_t>();
  report.meta.degrees = j.at("meta").at("degrees").get<std::vector<uint32_t>>();
  report.meta.q_max = j.at("meta").at("q_max").get<uint32_t>();
  report.meta.precision = j.at("meta").at("precision").get<std::string>();
  report.meta.jobs = j.at("meta").at("jobs").get<uint32_t>();
  report.meta.version = j.at("meta").at("version").get<std::string>();
  for (const auto& jr : j.at("results")) {
    CheckResult r;
    auto id = theorem_from_string(jr.at("id").get<std::string>());
    if (!id) fail(errc::bad_argument, "report_from_json: unknown id");
    r.id = *id;
    r.p = jr.at("p").get<uint32_t>();
    r.r = jr.at("r").get<uint32_t>();
    r.x = jr.at("x").get<std::string>();
    std::string st = jr.at("status").get<std::string>();
    if (st == "holds") r.status = CheckStatus::holds;
    else if (st == "fails") r.status = CheckStatus::fails;
    else if (st == "skipped-degenerate") r.status = CheckStatus::skipped_degenerate;
    else if (st == "skipped-inadmissible") r.status = CheckStatus::skipped_inadmissible;
    else if (st == "reported") r.status = CheckStatus::reported;
    else fail(errc::bad_argument, "report_from_json: unknown status");
    r.lhs = jr.at("lhs").get<std::string>();
    r.rhs = jr.at("rhs").get<std::string>();
    r.N = jr.at("N").get<uint32_t>();
    report.results.push_back(std::move(r));
  }
  report.recount();
  return report;
}

std::string to_csv(const Report& report) {
  std::ostringstream os;
  os << "id,p,r,x,status,lhs,rhs,N\n";
  for (const auto& r : report.results) {
    os << to_string(r.id) << ',' << r.p << ',' << r.r << ',' << csv_escape(r.x)
       << ',' << to_string(r.status) << ',' << csv_escape(r.lhs) << ','
       << csv_escape(r.rhs) << ',' << r.N << '\n';
  }
  return os.str();
}

}  // namespace ffhyper
