#include "complement/cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "complement/complement_engine.hpp"

namespace complement::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Plain, Csv, Json };

struct Options {
  std::string family;
  unsigned r = 0;
  unsigned long base = 0;
  std::string u_file;
  std::string psi;
  std::optional<Index> n0;
  std::string format = "plain";
  Bits initial_bits = EvalConfig{}.initial_bits;
  Bits max_bits = EvalConfig{}.max_bits;

  // subcommand-specific
  std::optional<Index> from;
  Index count = 10;
  std::string limit;
  Index n_max = 0;
  std::optional<Index> hypothesis_start;
  std::string at;
  bool floor = false;
};

void add_shared(CLI::App& cmd, Options& o, bool needs_family) {
  auto* fam = cmd.add_option("--family", o.family, "Base sequence")
                  ->check(CLI::IsMember(
                      {"squares", "cubes", "rth-power", "powers", "triangular", "fibonacci", "custom"}));
  if (needs_family) fam->required();
  cmd.add_option("--r", o.r, "Exponent for rth-power")->check(CLI::Range(2u, 1u << 20));
  cmd.add_option("--base", o.base, "Base for powers")->check(CLI::Range(2ul, 1ul << 62));
  cmd.add_option("--u-file", o.u_file, "Custom sequence, one integer per line");
  cmd.add_option("--psi", o.psi, "Custom inverse map psi(x)");
  cmd.add_option("--n0", o.n0, "First generating index for --psi");
  cmd.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "csv", "json"}));
  cmd.add_option("--initial-bits", o.initial_bits, "Starting precision in bits");
  cmd.add_option("--max-bits", o.max_bits, "Precision ceiling in bits");
}

Format format_of(const Options& o) {
  if (o.format == "csv") return Format::Csv;
  if (o.format == "json") return Format::Json;
  return Format::Plain;
}

EvalConfig config_of(const Options& o) {
  EvalConfig cfg{o.initial_bits, o.max_bits};
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

SequenceFamily family_of(const Options& o) {
  if (o.family == "squares") return SequenceFamily::rth_powers(2);
  if (o.family == "cubes") return SequenceFamily::rth_powers(3);
  if (o.family == "rth-power") {
    if (o.r == 0) throw UsageError("--family rth-power needs --r");
    return SequenceFamily::rth_powers(o.r);
  }
  if (o.family == "powers") {
    if (o.base == 0) throw UsageError("--family powers needs --base");
    return SequenceFamily::powers_of(o.base);
  }
  if (o.family == "triangular") return SequenceFamily::triangular();
  if (o.family == "fibonacci") return SequenceFamily::fibonacci();
  if (o.u_file.empty()) throw UsageError("--family custom needs --u-file");
  try {
    return load_custom_family(o.u_file);
  } catch (const std::exception& e) {
    throw UsageError(o.u_file + ": " + e.what());
  }
}

ComplementFormula formula_of(const Options& o) {
  const SequenceFamily family = family_of(o);
  if (!o.psi.empty()) {
    if (!o.n0) throw UsageError("--psi needs --n0");
    return {parse(o.psi), *o.n0, family};
  }
  if (o.n0) throw UsageError("--n0 is only meaningful with --psi");
  if (o.family == "squares") return builtin_formula(Builtin::Squares);
  if (o.family == "cubes") return builtin_formula(Builtin::Cubes);
  if (o.family == "rth-power") return builtin_formula(Builtin::RthPowers, o.r);
  if (o.family == "powers") return builtin_formula(Builtin::PowersOf, o.base);
  if (o.family == "custom") throw UsageError("--family custom needs --psi and --n0");
  return builtin_formula(family);
}

void emit(std::ostream& out, Format fmt, Index n, const BigNat& value, bool certified, Bits bits) {
  switch (fmt) {
    case Format::Plain:
      out << value.get_str() << '\n';
      break;
    case Format::Csv:
      out << n << ',' << value.get_str() << '\n';
      break;
    case Format::Json: {
      ordered_json rec;
      rec["n"] = std::to_string(n);
      rec["value"] = value.get_str();
      rec["certified"] = certified;
      rec["bits_used"] = bits;
      out << rec.dump() << '\n';
      break;
    }
  }
}

int cmd_gen(const Options& o, std::ostream& out) {
  const auto f = formula_of(o);
  const auto cfg = config_of(o);
  const Index from = o.from.value_or(f.n0);
  if (from < f.n0) {
    throw UsageError("--from " + std::to_string(from) + " is below n0 = " + std::to_string(f.n0));
  }
  if (o.count < 1) throw UsageError("--count must be >= 1");
  const Format fmt = format_of(o);
  // Stream term by term so earlier values survive an uncertified index.
  for (Index n = from; n < from + o.count; ++n) {
    const auto term = generate_terms(f, n, n, cfg).front();
    emit(out, fmt, term.n, term.value, true, term.bits);
  }
  return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const auto family = family_of(o);
  if (o.limit.empty()) throw UsageError("oracle needs --limit");
  BigNat limit;
  if (limit.set_str(o.limit, 10) != 0 || limit < 0) throw UsageError("--limit must be a nonnegative integer");
  const BigNat first = term(family, 0);
  if (limit < first) throw UsageError("--limit is below u_0 = " + first.get_str());
  const auto values = oracle_complement(family, limit);
  const Format fmt = format_of(o);
  // Index k of the complement aligns with generator index u_0 + 1 + k.
  const Index base_index = first.get_si() + 1;
  for (std::size_t k = 0; k < values.size(); ++k) {
    emit(out, fmt, base_index + static_cast<Index>(k), values[k], true, 0);
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto f = formula_of(o);
  if (o.hypothesis_start) f.hypothesis_start = *o.hypothesis_start;
  if (f.hypothesis_start < 0) throw UsageError("--hypothesis-start must be >= 0");
  if (o.n_max < f.hypothesis_start) throw UsageError("--n-max is below the hypothesis start");
  if (const auto len = known_length(f.family); len && static_cast<std::size_t>(o.n_max) >= *len) {
    throw UsageError("--n-max exceeds the custom sequence length");
  }
  const auto report = verify_hypothesis(f, o.n_max, config_of(o));

  ordered_json j;
  j["family"] = report.family_id;
  j["n_lo"] = std::to_string(report.n_lo);
  j["n_hi"] = std::to_string(report.n_hi);
  j["pass"] = report.pass;
  j["failures"] = ordered_json::array();
  for (const auto& fail : report.failures) {
    ordered_json row;
    row["n"] = std::to_string(fail.n);
    row["inequality"] = to_string(fail.which);
    row["observed"] = fail.domain_error.empty() ? to_string(fail.observed) : "domain-error";
    if (!fail.domain_error.empty()) row["detail"] = fail.domain_error;
    j["failures"].push_back(row);
  }
  j["uncertified"] = ordered_json::array();
  for (Index n : report.uncertified) j["uncertified"].push_back(std::to_string(n));
  out << j.dump() << '\n';

  if (report.pass) return kExitOk;
  return report.failures.empty() ? kExitUncertified : kExitFailed;
}

int cmd_crosscheck(const Options& o, std::ostream& out) {
  const auto f = formula_of(o);
  if (o.count < 1) throw UsageError("--count must be >= 1");
  const auto report = crosscheck(f, o.count, config_of(o));

  ordered_json j;
  j["family"] = report.family_id;
  j["n_lo"] = std::to_string(report.n_lo);
  j["n_hi"] = std::to_string(report.n_hi);
  j["pass"] = report.pass;
  j["mismatches"] = ordered_json::array();
  for (const auto& m : report.mismatches) {
    ordered_json row;
    row["n"] = std::to_string(m.n);
    row["formula"] = m.formula ? ordered_json(m.formula->get_str()) : ordered_json(nullptr);
    row["oracle"] = m.oracle.get_str();
    j["mismatches"].push_back(row);
  }
  out << j.dump() << '\n';
  return report.pass ? kExitOk : kExitFailed;
}

int cmd_gould(const Options& o, std::ostream& out) {
  if (o.count < 0) throw UsageError("--count must be >= 0");
  const auto rows = gould_compare(o.count, config_of(o));
  const Format fmt = format_of(o);
  if (fmt == Format::Plain) out << "n\tgould\toracle\tequal\n";
  for (const auto& row : rows) {
    switch (fmt) {
      case Format::Plain:
        out << row.n << '\t' << row.gould << '\t' << row.oracle.get_str() << '\t'
            << (row.equal ? "yes" : "no") << '\n';
        break;
      case Format::Csv:
        out << row.n << ',' << row.gould << ',' << row.oracle.get_str() << ','
            << (row.equal ? "true" : "false") << '\n';
        break;
      case Format::Json: {
        ordered_json rec;
        rec["n"] = std::to_string(row.n);
        rec["gould"] = std::to_string(row.gould);
        rec["oracle"] = row.oracle.get_str();
        rec["equal"] = row.equal;
        out << rec.dump() << '\n';
        break;
      }
    }
  }
  return kExitOk;
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.psi.empty()) throw UsageError("eval needs --psi");
  if (o.at.empty()) throw UsageError("eval needs --at");
  const Expr psi = parse(o.psi);
  const Expr at_expr = parse(o.at);
  const auto at = free_var_count(at_expr) == 0 ? eval_exact(at_expr, 0) : std::nullopt;
  if (!at) throw UsageError("--at must be an exact rational constant");
  const auto cfg = config_of(o);
  const Expr generator = Expr::var() + psi;

  if (!o.floor) {
    out << eval_interval(generator, *at, cfg.initial_bits).to_string(30) << '\n';
    return kExitOk;
  }
  const auto outcome = certified_floor(generator, *at, cfg);
  if (const auto* u = std::get_if<Uncertified>(&outcome)) {
    err << "error: floor not certified at " << u->bits << " bits; enclosure "
        << u->enclosure.to_string(30) << '\n';
    return kExitUncertified;
  }
  out << std::get<Determined>(outcome).value.get_str() << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complements of integer sequences via certified floor formulas", "complement"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Generate floor(n + psi(n)) terms");
  add_shared(*gen, o, true);
  gen->add_option("--from", o.from, "First index (default n0)");
  gen->add_option("--count", o.count, "Number of terms");

  auto* oracle = app.add_subcommand("oracle", "Sieve the complement up to --limit");
  add_shared(*oracle, o, true);
  oracle->add_option("--limit", o.limit, "Inclusive upper bound")->required();

  auto* verify = app.add_subcommand("verify", "Check the psi-form hypothesis per index");
  add_shared(*verify, o, true);
  verify->add_option("--n-max", o.n_max, "Last index checked")->required();
  verify->add_option("--hypothesis-start", o.hypothesis_start, "First index checked (default 1)");

  auto* cross = app.add_subcommand("crosscheck", "Compare generated terms with the sieve");
  add_shared(*cross, o, true);
  cross->add_option("--count", o.count, "Number of terms");

  auto* gould = app.add_subcommand("gould", "Gould's formula next to the sieve");
  add_shared(*gould, o, false);
  gould->add_option("--count", o.count, "Number of rows");

  auto* eval = app.add_subcommand("eval", "Evaluate x + psi(x) at a rational point");
  add_shared(*eval, o, false);
  eval->add_option("--at", o.at, "Evaluation point, e.g. 7 or 5/2")->required();
  eval->add_flag("--floor", o.floor, "Print the certified floor instead of an enclosure");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(o, out);
    if (*oracle) return cmd_oracle(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*cross) return cmd_crosscheck(o, out);
    if (*gould) return cmd_gould(o, out);
    if (*eval) return cmd_eval(o, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UncertifiedError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUncertified;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace complement::cli
