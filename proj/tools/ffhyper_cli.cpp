// ffhyper command line: exact evaluation of character sums, finite field and
// p-adic hypergeometric values, identity verification sweeps, and
// special-value tables.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffhyper/characters.hpp"
#include "ffhyper/charsum.hpp"
#include "ffhyper/cyclotomic.hpp"
#include "ffhyper/field.hpp"
#include "ffhyper/greene.hpp"
#include "ffhyper/padic.hpp"
#include "ffhyper/pg_series.hpp"
#include "ffhyper/theorems.hpp"

namespace {

using namespace ffhyper;

std::string modulus_str(const FieldCtx& ctx) {
  if (ctx.r() == 1) return "x (prime field)";
  const auto& m = ctx.modulus();
  std::ostringstream os;
  os << "x^" << ctx.r();
  for (size_t i = ctx.r(); i-- > 0;) {
    if (m[i] == 0) continue;
    os << " + ";
    if (m[i] != 1 || i == 0) os << m[i];
    if (i >= 1) {
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

void print_provenance(const FieldCtx& ctx, std::optional<uint32_t> N = {}) {
  std::cout << "field: F_" << ctx.q() << " (p=" << ctx.p() << ", r=" << ctx.r()
            << "), modulus: " << modulus_str(ctx)
            << ", generator: " << ctx.to_string(ctx.gen());
  if (N) std::cout << ", precision: " << ctx.p() << "^" << *N;
  std::cout << "\n";
}

std::vector<mpq_class> parse_rationals(const std::string& s) {
  std::vector<mpq_class> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    mpq_class v(tok);
    v.canonicalize();
    out.push_back(v);
  }
  return out;
}

std::pair<uint32_t, uint32_t> parse_prime_range(const std::string& s) {
  auto pos = s.find("..");
  if (pos == std::string::npos) {
    uint32_t v = static_cast<uint32_t>(std::stoul(s));
    return {v, v};
  }
  return {static_cast<uint32_t>(std::stoul(s.substr(0, pos))),
          static_cast<uint32_t>(std::stoul(s.substr(pos + 2)))};
}

std::vector<MulChar> parse_char_list(const FieldCtx& ctx, const std::string& s) {
  std::vector<MulChar> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) out.push_back(char_by_name(ctx, tok));
  return out;
}

std::string out_dir_default() {
  const char* env = std::getenv("FFHYPER_OUT");
  return env ? env : ".";
}

int cmd_eval(const std::string& subject, uint32_t p, uint32_t r,
             const std::string& A, const std::string& B, const std::string& chi,
             const std::string& upper, const std::string& lower,
             const std::string& a, const std::string& b, const std::string& t,
             const std::string& x, std::optional<uint32_t> N,
             const std::string& format) {
  FieldCtx ctx = FieldCtx::make(p, r);
  std::string value;
  std::optional<uint32_t> prec;
  if (subject == "gauss") {
    value = gauss_sum(char_by_name(ctx, chi)).str();
  } else if (subject == "jacobi") {
    value = jacobi_sum(char_by_name(ctx, A), char_by_name(ctx, B)).str();
  } else if (subject == "binomial") {
    value = binomial(char_by_name(ctx, A), char_by_name(ctx, B)).str();
  } else if (subject == "greene-f") {
    HypFParams params{parse_char_list(ctx, upper), parse_char_list(ctx, lower)};
    value = greene_F(ctx, params, ctx.parse(x)).str();
  } else if (subject == "pg") {
    GParams params{parse_rationals(a), parse_rationals(b)};
    prec = N ? *N : default_precision(ctx);
    value = pG(params, ctx, ctx.parse(t), *prec).str();
  } else if (subject == "charsum") {
    value = std::to_string(phi_quadratic_sum(ctx, ctx.parse(x)));
  } else {
    std::cerr << "unknown eval subject: " << subject << "\n";
    return 1;
  }
  if (format == "json") {
    nlohmann::json j{{"subject", subject},
                     {"value", value},
                     {"p", ctx.p()},
                     {"r", ctx.r()},
                     {"q", ctx.q()},
                     {"modulus", modulus_str(ctx)},
                     {"generator", ctx.to_string(ctx.gen())}};
    if (prec) j["precision"] = *prec;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "value: " << value << "\n";
    print_provenance(ctx, prec);
  }
  return 0;
}

std::string render_text(const Report& rep) {
  std::ostringstream os;
  for (const auto& res : rep.results) {
    os << to_string(res.id) << "  p=" << res.p << " r=" << res.r;
    if (!res.x.empty()) os << " x=" << res.x;
    os << "  " << to_string(res.status);
    if (!res.lhs.empty()) os << "  lhs=" << res.lhs;
    if (!res.rhs.empty()) os << "  rhs=" << res.rhs;
    os << "\n";
  }
  os << "summary: holds=" << rep.holds << " fails=" << rep.fails
     << " skipped=" << rep.skipped;
  if (rep.reported) os << " reported=" << rep.reported;
  os << "\n";
  return os.str();
}

int cmd_verify(const std::string& ids_arg, const std::string& primes,
               const std::string& degrees_arg, uint32_t q_max,
               std::optional<uint32_t> N, uint32_t jobs, const std::string& out,
               const std::string& format) {
  SuiteConfig cfg;
  auto [lo, hi] = parse_prime_range(primes);
  cfg.prime_lo = lo;
  cfg.prime_hi = hi;
  cfg.q_max = q_max;
  cfg.precision_override = N;
  cfg.jobs = jobs;
  cfg.degrees.clear();
  {
    std::istringstream is(degrees_arg);
    std::string tok;
    while (std::getline(is, tok, ','))
      cfg.degrees.push_back(static_cast<uint32_t>(std::stoul(tok)));
  }
  std::vector<TheoremId> ids;
  if (ids_arg == "ALL") {
    ids = all_theorems();
  } else {
    std::istringstream is(ids_arg);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      auto id = theorem_from_string(tok);
      if (!id) {
        std::cerr << "unknown theorem id: " << tok << "\n";
        return 1;
      }
      ids.push_back(*id);
    }
  }

  Report rep = run_suite(cfg, ids);

  std::filesystem::create_directories(out);
  {
    std::ofstream f(out + "/report.json");
    f << to_json(rep);
  }
  {
    std::ofstream f(out + "/report.csv");
    f << to_csv(rep);
  }

  if (format == "json") {
    std::cout << to_json(rep) << "\n";
  } else if (format == "csv") {
    std::cout << to_csv(rep);
  } else {
    if (rep.fails > 0) {
      // Loud failure: dump the failing rows with full operand values.
      for (const auto& res : rep.results) {
        if (res.status != CheckStatus::fails) continue;
        std::cout << "FAIL " << to_string(res.id) << " p=" << res.p
                  << " r=" << res.r << " x=" << res.x << " N=" << res.N
                  << "\n  lhs=" << res.lhs << "\n  rhs=" << res.rhs << "\n";
      }
    }
    std::cout << "summary: holds=" << rep.holds << " fails=" << rep.fails
              << " skipped=" << rep.skipped << "\n";
    std::cout << "report written to " << out << "/report.{json,csv}\n";
  }
  return rep.fails == 0 ? 0 : 1;
}

int cmd_table(const std::string& id_arg, const std::string& primes,
              const std::string& format, const std::string& out) {
  auto id = theorem_from_string(id_arg);
  if (!id) {
    std::cerr << "unknown theorem id: " << id_arg << "\n";
    return 1;
  }
  auto [lo, hi] = parse_prime_range(primes);
  Report rep = special_value_table(*id, lo, hi);
  std::string text;
  if (format == "json")
    text = to_json(rep) + "\n";
  else if (format == "csv")
    text = to_csv(rep);
  else
    text = render_text(rep);
  std::cout << text;
  if (!out.empty()) {
    std::filesystem::create_directories(out);
    std::string ext = format == "json" ? "json" : format == "csv" ? "csv" : "txt";
    std::ofstream f(out + "/table_" + id_arg + "." + ext);
    f << text;
  }
  return rep.fails == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact finite-field / p-adic hypergeometric calculator and identity verifier"};
  app.require_subcommand(1);

  // eval
  std::string subject, A = "eps", B = "eps", chi = "eps";
  std::string upper, lower, a_list = "1/4,3/4", b_list = "0,0", t_arg = "1", x_arg = "1";
  uint32_t p = 5, r = 1;
  uint32_t n_opt = 0;
  auto* eval = app.add_subcommand("eval", "evaluate one quantity exactly");
  eval->add_option("subject", subject,
                   "gauss | jacobi | binomial | greene-f | pg | charsum")
      ->required();
  eval->add_option("--p", p, "characteristic")->required();
  eval->add_option("--r", r, "extension degree");
  eval->add_option("--A", A, "first character (eval jacobi/binomial)");
  eval->add_option("--B", B, "second character");
  eval->add_option("--chi", chi, "character (eval gauss)");
  eval->add_option("--upper", upper, "comma list of upper characters (greene-f)");
  eval->add_option("--lower", lower, "comma list of lower characters (greene-f)");
  eval->add_option("--a", a_list, "upper parameters, e.g. 1/4,3/4 (pg)");
  eval->add_option("--b", b_list, "lower parameters, e.g. 0,0 (pg)");
  eval->add_option("--t", t_arg, "series argument (pg)");
  eval->add_option("--x", x_arg, "argument (greene-f/charsum)");
  auto* nflag = eval->add_option("--N", n_opt, "p-adic precision override");
  std::string eval_format = "text";
  eval->add_option("--format", eval_format, "text | json");

  // verify
  std::string ids = "ALL", primes = "3..13", degrees = "1";
  uint32_t q_max = 1024, jobs = 1;
  std::string out = out_dir_default(), format = "text";
  uint32_t vn_opt = 0;
  auto* verify_cmd = app.add_subcommand("verify", "run identity sweeps and write reports");
  verify_cmd->add_option("--ids", ids, "comma list of theorem ids, or ALL");
  verify_cmd->add_option("--primes", primes, "prime range lo..hi");
  verify_cmd->add_option("--r", degrees, "comma list of extension degrees");
  verify_cmd->add_option("--qmax", q_max, "largest field size");
  auto* vnflag = verify_cmd->add_option("--N", vn_opt, "p-adic precision override");
  verify_cmd->add_option("--jobs", jobs, "worker parallelism");
  verify_cmd->add_option("--out", out, "output directory (default $FFHYPER_OUT or .)");
  verify_cmd->add_option("--format", format, "stdout format: text | json | csv");

  // table
  std::string table_id = "SPV1", table_primes = "3..50", table_format = "text",
              table_out;
  auto* table_cmd = app.add_subcommand("table", "special-value table over a prime range");
  table_cmd->add_option("--id", table_id, "theorem id to tabulate")->required();
  table_cmd->add_option("--primes", table_primes, "prime range lo..hi");
  table_cmd->add_option("--format", table_format, "text | json | csv");
  table_cmd->add_option("--out", table_out, "also write the table into this directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) {
      std::optional<uint32_t> N;
      if (nflag->count()) N = n_opt;
      return cmd_eval(subject, p, r, A, B, chi, upper, lower, a_list, b_list,
                      t_arg, x_arg, N, eval_format);
    }
    if (verify_cmd->parsed()) {
      std::optional<uint32_t> N;
      if (vnflag->count()) N = vn_opt;
      return cmd_verify(ids, primes, degrees, q_max, N, jobs, out, format);
    }
    if (table_cmd->parsed()) {
      return cmd_table(table_id, table_primes, table_format, table_out);
    }
  } catch (const ffhyper::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
