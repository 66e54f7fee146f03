#include "cubicfrac_cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cubicfrac/bcf.hpp"
#include "cubicfrac/cubic.hpp"
#include "cubicfrac/error.hpp"
#include "cubicfrac/jacobi.hpp"
#include "cubicfrac/periodic.hpp"
#include "cubicfrac/redei.hpp"
#include "cubicfrac/serialize.hpp"
#include "format.hpp"

namespace cubicfrac::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precision of the reference enclosures used for reported errors.
constexpr unsigned long kErrorBits = 256;

const std::vector<std::size_t> kDepths{5, 10, 20, 40};

std::string status_kind(const ExpansionStatus& s) {
  if (std::holds_alternative<Periodic>(s)) return "periodic";
  if (std::holds_alternative<Exhausted>(s)) return "exhausted";
  return "terminated";
}

Enclosure cbrt_enclosure(const BigInt& m) { return nth_root_enclosure(m, 3, kErrorBits); }

std::vector<std::size_t> report_depths(std::size_t depth) {
  std::set<std::size_t> out;
  for (std::size_t k : kDepths) {
    if (k <= depth) out.insert(k);
  }
  out.insert(depth);
  return {out.begin(), out.end()};
}

// Common flags shared by every subcommand.
struct Output {
  std::string format = "tsv";
  std::string path;
};

void add_output_flags(CLI::App* cmd, Output& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  cmd->add_option("--out", o.path, "Write the record to FILE instead of stdout");
}

// ---------------------------------------------------------------- jacobi

struct JacobiArgs {
  std::string cbrt_pair;
  std::string d;
  std::string x;
  std::string y;
  std::size_t max_steps = 100;
};

template <class T>
json expansion_result(const JacobiExpansion<T>& e) {
  json a = json::array();
  json b = json::array();
  for (const auto& s : e.steps) {
    a.push_back(s.a.get_str());
    b.push_back(s.b.get_str());
  }
  return json{{"status", e.status}, {"steps", e.steps.size()}, {"a", a}, {"b", b}};
}

json run_jacobi(const JacobiArgs& args, json& params) {
  const int modes = !args.cbrt_pair.empty() + !args.d.empty() + (!args.x.empty() || !args.y.empty());
  if (modes != 1) throw UsageError("jacobi needs exactly one of --cbrt-pair, --d or --x/--y");
  params["max_steps"] = args.max_steps;

  if (!args.x.empty() || !args.y.empty()) {
    if (args.x.empty() || args.y.empty()) throw UsageError("--x and --y must be given together");
    const Rational x = Rational::parse(args.x);
    const Rational y = Rational::parse(args.y);
    params["x"] = x;
    params["y"] = y;
    json r = expansion_result(jacobi_expand(x, y, args.max_steps));
    r["input"] = {{"x", x}, {"y", y}};
    return r;
  }

  BigInt d;
  if (!args.cbrt_pair.empty()) {
    const BigInt n = parse_bigint(args.cbrt_pair);
    params["cbrt_pair"] = n.get_str();
    if (n < 4 || !is_perfect_power(n, 2)) {
      throw DomainError("cbrt-pair N=" + n.get_str() + " must be a perfect square s^2 with s >= 2");
    }
    mpz_sqrt(d.get_mpz_t(), n.get_mpz_t());
  } else {
    d = parse_bigint(args.d);
    params["d"] = d.get_str();
  }
  const Radicand rad(d);
  const CubicNumber x = CubicNumber::cbrt_squared(rad);
  const CubicNumber y = CubicNumber::cbrt(rad);
  json r = expansion_result(jacobi_expand(x, y, args.max_steps));
  r["input"] = {{"x", x}, {"y", y}};
  return r;
}

// -------------------------------------------------------------- periodic

struct PeriodicArgs {
  std::string d;
  std::string z;
  std::size_t depth = 40;
};

json convergent_errors(const std::pair<Rational, Rational>& v, const Enclosure& ex, const Enclosure& ey) {
  return json{{"x", scientific(distance_bound(v.first, ex))}, {"y", scientific(distance_bound(v.second, ey))}};
}

json run_periodic(const PeriodicArgs& args, json& params) {
  const BigInt d = parse_bigint(args.d);
  const BigInt z = parse_bigint(args.z);
  params["d"] = d.get_str();
  params["z"] = z.get_str();
  params["depth"] = args.depth;

  const TheoremFraction t = build_theorem_bcf(d, z);
  const Enclosure ex = cbrt_enclosure(d * d);
  const Enclosure ey = cbrt_enclosure(d);

  json r;
  r["fraction"] = t.fraction;
  json table = json::array();
  for (std::size_t k : report_depths(args.depth)) {
    json row{{"depth", k}};
    const auto triple = convergents(t.fraction, k).back();
    if (triple.C.is_zero()) {
      row["x_error"] = nullptr;
      row["y_error"] = nullptr;
    } else {
      const json e = convergent_errors({triple.A / triple.C, triple.B / triple.C}, ex, ey);
      row["x_error"] = e["x"];
      row["y_error"] = e["y"];
    }
    table.push_back(std::move(row));
  }
  const auto [cx, cy] = evaluate_numeric(t.fraction, args.depth);
  r["convergent"] = {{"x", cx}, {"y", cy}, {"x_approx", cx.to_double()}, {"y_approx", cy.to_double()}};
  r["errors"] = std::move(table);
  r["enclosure_width"] = scientific(ex.width() > ey.width() ? ex.width() : ey.width());

  const VerificationReport mu = verify_mu_convergents(d, z, args.depth);
  r["mu_verification"] = json(mu)["summary"];
  const VerificationReport sn = sn_mu_identity(d, z, std::max<std::size_t>(args.depth, 2));
  r["sn_identity"] = json(sn)["summary"];
  return r;
}

// --------------------------------------------------------------- compare

struct CompareArgs {
  std::string d;
  std::string z;
  std::size_t max_steps = 1000;
};

json scheme_row(const std::string& name, const Bcf& f, const ExpansionStatus& status,
                std::size_t max_steps, const Enclosure& ex, const Enclosure& ey) {
  json row{{"scheme", name}, {"status", status_kind(status)}};
  if (const auto* p = std::get_if<Periodic>(&status)) {
    row["preperiod"] = p->preperiod_len;
    row["period"] = p->period_len;
  } else {
    row["preperiod"] = nullptr;
    row["period"] = "none within " + std::to_string(max_steps);
  }
  for (std::size_t k : kDepths) {
    const std::string key = "error@" + std::to_string(k);
    if (!f.resolvable(k)) {
      row[key] = nullptr;
      continue;
    }
    const auto t = convergents(f, k).back();
    if (t.C.is_zero()) {
      row[key] = nullptr;
      continue;
    }
    const Rational dx = distance_bound(t.A / t.C, ex);
    const Rational dy = distance_bound(t.B / t.C, ey);
    row[key] = scientific(dx > dy ? dx : dy);
  }
  return row;
}

json run_compare(const CompareArgs& args, json& params) {
  const BigInt d = parse_bigint(args.d);
  const BigInt z = parse_bigint(args.z);
  params["d"] = d.get_str();
  params["z"] = z.get_str();
  params["max_steps"] = args.max_steps;

  const TheoremFraction t = build_theorem_bcf(d, z);
  const Radicand rad(d);
  const auto e = jacobi_expand(CubicNumber::cbrt_squared(rad), CubicNumber::cbrt(rad), args.max_steps);
  const Enclosure ex = cbrt_enclosure(d * d);
  const Enclosure ey = cbrt_enclosure(d);

  json rows = json::array();
  rows.push_back(scheme_row("jacobi", to_bcf(e.steps, e.status), e.status, args.max_steps, ex, ey));
  rows.push_back(scheme_row("theorem", t.fraction, Periodic{2, 3}, args.max_steps, ex, ey));
  return json{{"rows", rows}};
}

// ----------------------------------------------------------------- redei

struct RedeiArgs {
  unsigned e = 0;
  std::string d;
  std::string z;
  unsigned long n = 0;
  std::optional<unsigned> k;
  unsigned long ff_q = 0;
  long ff_d = 0;
};

json run_redei(const RedeiArgs& args, bool finite_field, bool integral, json& params) {
  if (args.n < 1) throw DomainError("n=" + std::to_string(args.n) + " must be >= 1");
  params["n"] = args.n;
  if (finite_field) {
    if (integral) throw UsageError("--ff-q/--ff-d cannot be combined with --e/--d/--z/--k");
    params["q"] = args.ff_q;
    params["d"] = args.ff_d;
    const RedeiPermutation p = redei_permutes(args.ff_q, args.ff_d, args.n);
    return json{{"permutes", p.permutes}, {"gcd", p.gcd}, {"gcd_is_one", p.gcd == 1}, {"poles", p.poles}};
  }
  if (args.e == 0 || args.d.empty() || args.z.empty()) {
    throw UsageError("redei needs --e, --d, --z and --n, or --ff-q, --ff-d and --n");
  }
  const BigInt d = parse_bigint(args.d);
  const BigInt z = parse_bigint(args.z);
  params["e"] = args.e;
  params["d"] = d.get_str();
  params["z"] = z.get_str();
  if (args.k) params["k"] = *args.k;

  if (args.k && *args.k >= args.e) {
    throw DomainError("k=" + std::to_string(*args.k) + " must be below e=" + std::to_string(args.e));
  }
  const auto sums = mu_coords(args.e, d, z, args.n);
  const IntMatrix m = mu_matrix(args.e, d, z, args.n);
  json mu = json::array();
  json column = json::array();
  bool matches = true;
  for (unsigned k = 0; k < args.e; ++k) {
    if (args.k && *args.k != k) continue;
    mu.push_back(sums[k].get_str());
    column.push_back(m[k][0].get_str());
    matches = matches && sums[k] == m[k][0];
  }
  json r{{"mu", mu}, {"matrix_column", column}, {"sum_matches_matrix", matches}};
  if (args.e == 2) {
    const RedeiPair p = redei_classic(d, Rational(z), args.n);
    r["classic"] = {{"N", p.N}, {"D", p.D}};
  }
  return r;
}

// ------------------------------------------------------------- transform

struct TransformArgs {
  std::string d;
  std::string z;
  std::string matrix;
  std::size_t depth = 20;
};

Matrix3 parse_matrix(const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned) {
    if (c == ',' || c == ';') c = ' ';
  }
  std::istringstream in(cleaned);
  std::vector<Rational> entries;
  for (std::string tok; in >> tok;) entries.push_back(Rational::parse(tok));
  if (entries.size() != 9) {
    throw UsageError("--matrix needs 9 rationals, got " + std::to_string(entries.size()));
  }
  std::array<Rational, 9> a;
  std::copy(entries.begin(), entries.end(), a.begin());
  return Matrix3::from_rows(a);
}

json limit_json(const CubicPair& l) {
  return json{{"x", l.first}, {"y", l.second}, {"x_approx", l.first.to_double()},
              {"y_approx", l.second.to_double()}};
}

json run_transform(const TransformArgs& args, json& params) {
  const BigInt d = parse_bigint(args.d);
  const BigInt z = parse_bigint(args.z);
  const Matrix3 m = parse_matrix(args.matrix);
  params["d"] = d.get_str();
  params["z"] = z.get_str();
  params["matrix"] = m;
  params["depth"] = args.depth;

  const TheoremFraction t = build_theorem_bcf(d, z);
  const CubicPair limits = transform_limits(m, Radicand(d));

  json r;
  r["limits"] = limit_json(limits);

  const Rational width(BigInt(1), BigInt(1) << kErrorBits);
  const Enclosure ex = enclose(limits.first, width);
  const Enclosure ey = enclose(limits.second, width);
  json table = json::array();
  const auto triples = transformed_convergents(m, t.fraction, args.depth);
  for (std::size_t k : report_depths(args.depth)) {
    const auto& tr = triples[k];
    json row{{"depth", k}};
    if (tr.C.is_zero()) {
      row["x_error"] = nullptr;
      row["y_error"] = nullptr;
    } else {
      row["x_error"] = scientific(distance_bound(tr.A / tr.C, ex));
      row["y_error"] = scientific(distance_bound(tr.B / tr.C, ey));
    }
    table.push_back(std::move(row));
  }
  r["convergence"] = std::move(table);

  const FourMatrixOutcome outcome = four_matrix_solve(m);
  json solve{{"feasible", outcome.feasible()}};
  if (outcome.feasible()) {
    const FourMatrixSolution& s = *outcome.solution;
    solve["a"] = s.a;
    solve["b"] = s.b;
    solve["closed_form_mismatches"] = s.closed_form_mismatches;
    const PairedFraction paired = paired_periodic_bcf(m, d, z);
    r["paired"] = {{"fraction", paired.fraction}, {"limits", limit_json(paired.limits)}};
  } else {
    solve["reason"] = outcome.reason;
  }
  r["solve"] = std::move(solve);
  return r;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact bifurcating continued fractions of cubic irrationalities", "cubicfrac"};
  app.require_subcommand(1);
  Output output;

  JacobiArgs jargs;
  auto* jacobi = app.add_subcommand("jacobi", "Jacobi algorithm on an exact pair");
  jacobi->add_option("--cbrt-pair,--d2", jargs.cbrt_pair, "N = s^2; expands (cbrt(N), cbrt(s))");
  jacobi->add_option("--d", jargs.d, "Expands (cbrt(D^2), cbrt(D))");
  jacobi->add_option("--x", jargs.x, "Rational x as p/q");
  jacobi->add_option("--y", jargs.y, "Rational y as p/q");
  jacobi->add_option("--max-steps", jargs.max_steps, "Step budget");
  add_output_flags(jacobi, output);

  PeriodicArgs pargs;
  auto* periodic = app.add_subcommand("periodic", "Periodic fraction for (cbrt(d^2), cbrt(d))");
  periodic->add_option("--d", pargs.d, "Radicand")->required();
  periodic->add_option("--z", pargs.z, "Nonzero integer parameter")->required();
  periodic->add_option("--depth", pargs.depth, "Convergent depth");
  add_output_flags(periodic, output);

  CompareArgs cargs;
  auto* compare = app.add_subcommand("compare", "Jacobi expansion versus the periodic fraction");
  compare->add_option("--d", cargs.d, "Radicand")->required();
  compare->add_option("--z", cargs.z, "Nonzero integer parameter")->required();
  compare->add_option("--max-steps", cargs.max_steps, "Jacobi step budget");
  add_output_flags(compare, output);

  RedeiArgs rargs;
  auto* redei = app.add_subcommand("redei", "Generalized Redei values or the F_q permutation test");
  auto* opt_e = redei->add_option("--e", rargs.e, "Root degree e >= 2");
  auto* opt_d = redei->add_option("--d", rargs.d, "Radicand");
  auto* opt_z = redei->add_option("--z", rargs.z, "Integer argument");
  redei->add_option("--n", rargs.n, "Exponent n >= 1")->required();
  auto* opt_k = redei->add_option("--k", rargs.k, "Single coordinate k < e");
  auto* opt_q = redei->add_option("--ff-q", rargs.ff_q, "Odd prime q");
  auto* opt_fd = redei->add_option("--ff-d", rargs.ff_d, "Quadratic non-residue mod q");
  add_output_flags(redei, output);

  TransformArgs targs;
  auto* transform = app.add_subcommand("transform", "Transformed limits and the four-matrix solve");
  transform->add_option("--d", targs.d, "Radicand")->required();
  transform->add_option("--z", targs.z, "Nonzero integer parameter")->required();
  transform->add_option("--matrix", targs.matrix, "Nine rationals, row major")->required();
  transform->add_option("--depth", targs.depth, "Convergent depth");
  add_output_flags(transform, output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  json params = json::object();
  json result;
  std::string command;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (jacobi->parsed()) {
      command = "jacobi";
      result = run_jacobi(jargs, params);
    } else if (periodic->parsed()) {
      command = "periodic";
      result = run_periodic(pargs, params);
    } else if (compare->parsed()) {
      command = "compare";
      result = run_compare(cargs, params);
    } else if (redei->parsed()) {
      command = "redei";
      const bool ff = opt_q->count() > 0 || opt_fd->count() > 0;
      if (ff && (opt_q->count() == 0 || opt_fd->count() == 0)) {
        throw UsageError("--ff-q and --ff-d must be given together");
      }
      const bool integral = opt_e->count() + opt_d->count() + opt_z->count() + opt_k->count() > 0;
      result = run_redei(rargs, ff, integral, params);
    } else {
      command = "transform";
      result = run_transform(targs, params);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;

  const json record{{"command", command},
                    {"params", params},
                    {"result", result},
                    {"timing_ms", std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()}};

  std::ofstream file;
  if (!output.path.empty()) {
    file.open(output.path);
    if (!file) {
      err << "error: cannot open " << output.path << " for writing\n";
      return kExitUsage;
    }
  }
  std::ostream& sink = output.path.empty() ? out : file;
  if (output.format == "json") {
    write_json(record, sink);
  } else {
    write_tsv(record, sink);
  }
  return kExitOk;
}

}  // namespace cubicfrac::cli
