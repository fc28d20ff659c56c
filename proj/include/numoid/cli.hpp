#ifndef NUMOID_CLI_HPP
#define NUMOID_CLI_HPP

#include "numoid/json.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

namespace numoid::cli {

enum ExitStatus : int { kOk = 0, kValidationError = 1, kBudgetOrInconclusive = 2 };

namespace detail {

inline Int parse_int(const std::string& text, const std::string& flag) {
  std::size_t used = 0;
  Int v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size())
    throw Error(ErrorCode::InvalidArgument, flag + ": expected an integer, got '" + text + "'");
  return v;
}

inline std::vector<Int> parse_gens(const std::string& text) {
  std::vector<Int> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma - start), "--gens"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

/// "p/q" or an integer literal; no decimals.
inline Rational parse_rational(const std::string& text, const std::string& flag) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text, flag));
  const Int den = parse_int(text.substr(slash + 1), flag);
  if (den == 0) throw Error(ErrorCode::InvalidArgument, flag + ": zero denominator");
  return Rational(parse_int(text.substr(0, slash), flag), den);
}

inline void emit_error(std::ostream& err, std::string_view code, const std::string& message,
                       std::optional<std::size_t> position = std::nullopt) {
  json::Json j{{"error", std::string(code)}, {"message", message}};
  if (position) j["position"] = *position;
  err << j.dump() << '\n';
}

inline bool is_budget_error(ErrorCode code) {
  return code == ErrorCode::BudgetExhausted || code == ErrorCode::NoCandidate;
}

}  // namespace detail

/// Run one CLI invocation. `args` excludes the program name. Results go to
/// `out`; failures print a single-line JSON object to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factorization invariants of numerical monoids", "numoid"};
  app.require_subcommand(1);

  std::string gens;
  Int scan_bound = -1;
  auto* inv = app.add_subcommand("invariants", "definition-level invariant report");
  inv->add_option("--gens", gens, "generators, e.g. 3,5,7")->required();
  inv->add_option("--scan-bound", scan_bound, "range of the Ca(H) scan");

  Int element = 0;
  std::string fact_format = "json";
  auto* fact = app.add_subcommand("factorizations", "list the factorizations of an element");
  fact->add_option("--gens", gens)->required();
  fact->add_option("--element", element)->required();
  fact->add_option("--format", fact_format)->check(CLI::IsMember({"json", "text"}));

  auto* c3 = app.add_subcommand("cat3", "closed-form c(H) = t(H) for three pairwise coprime atoms");
  c3->add_option("--gens", gens)->required();

  std::string alpha, eps;
  Int p = 0, i = 0, j = 0, budget = 10000;
  auto* dir = app.add_subcommand("dirichlet", "prime x and y in given classes with y/x near alpha");
  dir->add_option("--alpha", alpha)->required();
  dir->add_option("--eps", eps)->required();
  dir->add_option("--p", p)->required();
  dir->add_option("--i", i)->required();
  dir->add_option("--j", j)->required();
  dir->add_option("--budget", budget);

  Int h1 = 0, k = 0, h2_min = 0, retries = 0;
  std::string family_alpha;
  bool family_check = false;
  auto* fam = app.add_subcommand("family", "one member of the (h1, k) stratum");
  fam->add_option("--h1", h1)->required();
  fam->add_option("--k", k)->required();
  fam->add_option("--h2-min", h2_min);
  fam->add_option("--retries", retries);
  fam->add_option("--alpha", family_alpha, "steering target inside (h1-k, h1-k+1)");
  fam->add_flag("--check", family_check, "verify by brute force");

  Int per_stratum = 0;
  std::string crosscheck = "0", out_path, ds_format = "csv";
  auto* ds = app.add_subcommand("dataset", "stratified family dataset");
  ds->add_option("--h1", h1)->required();
  ds->add_option("--per-stratum", per_stratum)->required();
  ds->add_option("--crosscheck", crosscheck, "fraction checked by brute force, p/q");
  ds->add_option("--h2-min", h2_min);
  ds->add_option("--out", out_path, "output file (stdout when omitted)");
  ds->add_option("--format", ds_format)->check(CLI::IsMember({"csv", "json"}));

  std::string formula, kind, invariant;
  Int samples = 4;
  auto* fal = app.add_subcommand("falsify", "search for a counterexample to a candidate formula");
  fal->add_option("--formula", formula)->required();
  fal->add_option("--kind", kind)->required()->check(CLI::IsMember({"explicit", "implicit"}));
  fal->add_option("--invariant", invariant)->required()->check(CLI::IsMember({"catenary", "tame", "elasticity"}));
  fal->add_option("--budget", budget, "number of monoids examined");
  fal->add_option("--samples-per-stratum", samples);

  Int degree = 0, points = 0, fresh_rounds = 8;
  std::string dataset_path;
  auto* cert = app.add_subcommand("certify", "degree certificate against implicit formulas");
  cert->add_option("--h1", h1)->required();
  cert->add_option("--degree", degree)->required();
  cert->add_option("--points-per-stratum", points)->required();
  cert->add_option("--dataset", dataset_path, "dataset CSV (generated when omitted)");
  cert->add_option("--fresh-rounds", fresh_rounds);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    detail::emit_error(err, "UsageError", e.what());
    return kValidationError;
  }

  try {
    if (inv->parsed()) {
      const auto monoid = new_monoid(detail::parse_gens(gens));
      std::optional<Int> bound;
      if (scan_bound >= 0) bound = scan_bound;
      out << json::to_json(invariant_report(monoid, bound)).dump(2) << '\n';
    } else if (fact->parsed()) {
      const auto monoid = new_monoid(detail::parse_gens(gens));
      const auto zs = factorization_vectors(monoid, element);
      if (fact_format == "text") {
        for (const auto& z : zs) {
          for (std::size_t idx = 0; idx < z.size(); ++idx) out << (idx ? " " : "") << z[idx];
          out << '\n';
        }
      } else {
        out << json::Json{{"atoms", json::atoms(monoid)}, {"element", element}, {"count", zs.size()},
                          {"factorizations", zs}}
                   .dump(2)
            << '\n';
      }
    } else if (c3->parsed()) {
      out << json::to_json(numoid::cat3(new_monoid(detail::parse_gens(gens)))).dump(2) << '\n';
    } else if (dir->parsed()) {
      DirichletQuery q{detail::parse_rational(alpha, "--alpha"), detail::parse_rational(eps, "--eps"), p, i, j, budget};
      out << json::to_json(q, dirichlet_find(q)).dump(2) << '\n';
    } else if (fam->parsed()) {
      Comp3Options opts{h2_min, retries, std::nullopt};
      if (!family_alpha.empty()) opts.alpha = detail::parse_rational(family_alpha, "--alpha");
      auto rec = comp3_generate(h1, k, opts);
      if (family_check) brute_force_check(rec);
      out << json::to_json(rec).dump(2) << '\n';
    } else if (ds->parsed()) {
      const auto fraction = detail::parse_rational(crosscheck, "--crosscheck");
      const auto data = strata_dataset(h1, per_stratum, fraction, h2_min);
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open " + out_path + " for writing");
      }
      std::ostream& sink = out_path.empty() ? out : file;
      if (ds_format == "json")
        sink << json::to_json(data).dump(2) << '\n';
      else
        write_csv(sink, data.records);
    } else if (fal->parsed()) {
      const auto fk = kind == "explicit" ? FormulaKind::Explicit : FormulaKind::Implicit;
      const auto name = invariant == "catenary" ? InvariantName::Catenary
                        : invariant == "tame"   ? InvariantName::Tame
                                                : InvariantName::Elasticity;
      const auto candidate = parse_formula(formula, fk);
      FalsifyBudget fb;
      fb.max_monoids = budget;
      fb.samples_per_stratum = samples;
      const auto result = falsify(candidate, name, fb);
      out << json::to_json(candidate, name, result).dump(2) << '\n';
      if (std::holds_alternative<NotFoundWithinBudget>(result)) return kBudgetOrInconclusive;
    } else if (cert->parsed()) {
      if (degree < 0) throw Error(ErrorCode::InvalidArgument, "--degree must be nonnegative");
      StrataDataset data;
      if (dataset_path.empty()) {
        data = strata_dataset(h1, points, Rational(0));
      } else {
        std::ifstream in(dataset_path);
        if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + dataset_path);
        data.h1 = h1;
        data.records = read_csv(in);
      }
      const auto c = degree_certificate(h1, static_cast<unsigned>(degree), points, data, {fresh_rounds});
      out << json::to_json(c).dump(2) << '\n';
      if (c.outcome == CertificateOutcome::Inconclusive) return kBudgetOrInconclusive;
    }
  } catch (const Error& e) {
    detail::emit_error(err, to_string(e.code()), e.what(), e.position());
    return detail::is_budget_error(e.code()) ? kBudgetOrInconclusive : kValidationError;
  }
  return kOk;
}

}  // namespace numoid::cli

#endif  // NUMOID_CLI_HPP
