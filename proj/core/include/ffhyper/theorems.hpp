#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffhyper/field.hpp"

namespace ffhyper {

/// One id per displayed identity under verification.
enum class TheoremId {
  MT1,       // Kummer-type transformation of the 2G2[1/4,3/4] series
  SPV1,      // 2G2[1/4,3/4 | 2]_p = 0 for p = 5,7 mod 8
  MT4,       // Clausen-type 3G3 <-> 2G2^2 transformation (prime fields)
  MT3,       // 2G2[1/4,3/4] <-> 2G2[1/2,1/2] transformation
  MT2,       // finite-field analogue of MT3 (q = 1 mod 4)
  MT5_G,     // special value of 2G2[1/4,3/4 | 9]_p
  MT5_F,     // special value of 2F1(chi4,chi4^3;eps | 1/9)_p
  MT7_85,    // 2G2 special value, sqrt(2) family, q = 1 mod 8
  MT7_86,    // 2G2 zero value, sqrt(3) family, q = 11 mod 12
  MT7_87,    // 2G2 special value, sqrt(3) family, q = 1 mod 12
  MT6_83,    // 2F1 special value, sqrt(2) family, q = 1 mod 8
  MT6_84,    // 2F1 special value, sqrt(3) family, q = 1 mod 12
  COR1,      // binomial-pair value 2x(-1)^((x+y+1)/2)/p, p = 1 mod 4
  COR_FINAL, // 2G2 special value via two squares, p = 1 mod 8
  PROP1,     // three-way identity for sum phi(y)phi(1-2y+xy^2), x != 0
  PROP2,     // three-way identity, x != 1
  TR1,       // 2G2[1/4,3/4 | x] = -q 2F1(chi4,chi4^3;eps | 1/x), q = 1 mod 4
  TR2,       // 2G2[1/2,1/2 | x] = -q 2F1(phi,phi;eps | 1/x)
  TR3,       // 3G3[1/2,1/2,1/2 | x] = q^2 3F2(phi,phi,phi;eps,eps | 1/x)
};

std::string to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(const std::string& s);
const std::vector<TheoremId>& all_theorems();

enum class CheckStatus {
  holds,
  fails,
  skipped_degenerate,
  skipped_inadmissible,
  reported,  // tabulated with no claim attached
};
std::string to_string(CheckStatus s);

struct CheckResult {
  TheoremId id{};
  uint32_t p = 0;
  uint32_t r = 0;
  std::string x;  // empty when the check has no argument
  CheckStatus status = CheckStatus::skipped_inadmissible;
  std::string lhs;
  std::string rhs;
  uint32_t N = 0;
};

struct SuiteConfig {
  uint32_t prime_lo = 3;
  uint32_t prime_hi = 13;
  std::vector<uint32_t> degrees{1};
  uint32_t q_max = 1024;
  std::optional<uint32_t> precision_override;
  uint32_t jobs = 1;
};

struct Report {
  struct Meta {
    std::vector<TheoremId> ids;
    uint32_t prime_lo = 0;
    uint32_t prime_hi = 0;
    std::vector<uint32_t> degrees;
    uint32_t q_max = 0;
    std::string precision = "auto";
    uint32_t jobs = 1;
    std::string version = "0.1.0";
  } meta;
  std::vector<CheckResult> results;

  uint64_t holds = 0;
  uint64_t fails = 0;
  uint64_t skipped = 0;
  uint64_t reported = 0;
  void recount();
};

/// Congruence-level admissibility of an id over F_q.
bool admissible(TheoremId id, const FieldCtx& ctx);
/// Whether the id sweeps a field argument.
bool needs_x(TheoremId id);
/// Whether x satisfies the id's hypotheses (x != 0, 1, -1 restrictions).
bool admissible_x(TheoremId id, const FieldCtx& ctx, FqElem x);

/// Runs one check. Inadmissible inputs come back as skipped statuses, never
/// errors; degenerate branch instances (zero arguments or denominators) are
/// flagged skipped-degenerate. Ids with square-root branches evaluate all
/// four (root, sign) combinations with the same root instance used
/// consistently throughout the formula.
CheckResult verify(TheoremId id, const FieldCtx& ctx,
                   std::optional<FqElem> x = std::nullopt,
                   std::optional<uint32_t> precision_override = std::nullopt);

/// The cross product of admissible (id, q, x) checks over the configured
/// prime/degree ranges, in deterministic (id, q, x) order.
Report run_suite(const SuiteConfig& cfg, const std::vector<TheoremId>& ids);

/// Closed-form predictions next to computed values over a prime range
/// (r = 1). Open cases are tabulated with status "reported" and no claim.
Report special_value_table(TheoremId id, uint32_t prime_lo, uint32_t prime_hi);

std::string to_json(const Report& report);
Report report_from_json(const std::string& text);
std::string to_csv(const Report& report);

}  // namespace ffhyper
