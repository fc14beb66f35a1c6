#include "hitchlat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "hitchlat/cocycle.hpp"
#include "hitchlat/json_io.hpp"

namespace hitchlat {

namespace {

// Without an explicit --limit, verify sweeps at most this many admissible
// types (a lexicographic prefix); counts grow combinatorially in g.
constexpr unsigned long long kDefaultSweepCap = 100000;

std::string tuple_text(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string chain_text(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rat_to_string(v[i]);
  }
  return s + ")";
}

void print_verification(const VerificationReport& r, std::ostream& out) {
  out << r.check << " n=" << r.n << " g=" << r.g << " mu=" << tuple_text(r.mu)
      << ": computed " << rat_to_string(r.computed) << ", closed form "
      << rat_to_string(r.closed_form) << ", chain " << chain_text(r.chain)
      << ": " << (r.match ? "ok" : "MISMATCH") << "\n";
}

Json verify_mu_checks_json(const QuotientPtr& model, long n,
                           const std::vector<long>& mu, bool& all_match) {
  Json checks = Json::array();
  const VerificationReport dot_k = check_lambda_dot_K(model, n, mu);
  const VerificationReport self = check_lambda_self(model, n, mu);
  const PullbackReport defining = verify_lambda_pullback(model, n, mu);
  all_match = all_match && dot_k.match && self.match && defining.match;
  checks.push_back(verification_to_json(dot_k));
  checks.push_back(verification_to_json(self));
  Json def_doc;
  def_doc["check"] = "lambda_pullback";
  def_doc["n"] = n;
  def_doc["g"] = model->genus();
  def_doc["mu"] = mu;
  def_doc["lhs"] = divisor_to_json(defining.lhs);
  def_doc["rhs"] = divisor_to_json(defining.rhs);
  def_doc["match"] = defining.match;
  checks.push_back(std::move(def_doc));
  return checks;
}

int run_verify(const RunConfig& config, std::ostream& sink) {
  const long n = *config.n;
  const int g = *config.g;
  const QuotientPtr model = build_quotient_model(g);
  const PullbackReport canonical = verify_canonical_pullback(model);
  bool all_match = canonical.match;

  if (config.mu) {
    Json checks = verify_mu_checks_json(model, n, *config.mu, all_match);
    if (config.format == "json") {
      Json doc;
      doc["command"] = "verify";
      doc["n"] = n;
      doc["g"] = g;
      doc["mu"] = *config.mu;
      doc["canonical_identity"] = pullback_report_to_json(canonical);
      doc["checks"] = std::move(checks);
      doc["all_match"] = all_match;
      sink << doc.dump(2) << "\n";
    } else {
      sink << "verify n=" << n << " g=" << g << " mu=" << tuple_text(*config.mu)
           << "\n";
      sink << "canonical identity: " << (canonical.match ? "ok" : "MISMATCH")
           << "\n";
      for (const Json& check : checks) {
        if (check.at("check") == "lambda_pullback") {
          sink << "lambda_pullback n=" << n << " g=" << g
               << " mu=" << tuple_text(*config.mu) << ": "
               << (check.at("match").get<bool>() ? "ok" : "MISMATCH") << "\n";
        } else {
          sink << check.at("check").get<std::string>() << " n=" << n
               << " g=" << g << " mu=" << tuple_text(*config.mu)
               << ": computed " << check.at("computed").get<std::string>()
               << ", closed form "
               << check.at("closed_form").get<std::string>() << ", chain (";
          const auto& chain = check.at("chain");
          for (std::size_t i = 0; i < chain.size(); ++i)
            sink << (i ? ", " : "") << chain[i].get<std::string>();
          sink << "): "
               << (check.at("match").get<bool>() ? "ok" : "MISMATCH") << "\n";
        }
      }
      sink << (all_match ? "all checks passed" : "FAILED") << "\n";
    }
    return all_match ? 0 : 1;
  }

  // Sweep every admissible type in lexicographic order, up to the cap.
  const EnumerationResult admissible =
      enumerate_cover_types(n, g, EnumerationMode::ordered);
  const unsigned long long cap = config.limit.value_or(kDefaultSweepCap);
  const std::size_t checked = static_cast<std::size_t>(
      std::min<unsigned long long>(cap, admissible.types.size()));
  Json failures = Json::array();
  unsigned long long checks_run = 0;
  for (std::size_t i = 0; i < checked; ++i) {
    const std::vector<long>& mu = admissible.types[i].entries();
    const VerificationReport dot_k = check_lambda_dot_K(model, n, mu);
    const VerificationReport self = check_lambda_self(model, n, mu);
    const PullbackReport defining = verify_lambda_pullback(model, n, mu);
    checks_run += 3;
    if (!dot_k.match) failures.push_back(verification_to_json(dot_k));
    if (!self.match) failures.push_back(verification_to_json(self));
    if (!defining.match) {
      Json doc;
      doc["check"] = "lambda_pullback";
      doc["mu"] = mu;
      doc["match"] = false;
      failures.push_back(std::move(doc));
    }
    all_match = all_match && dot_k.match && self.match && defining.match;
  }

  if (config.format == "json") {
    Json doc;
    doc["command"] = "verify";
    doc["n"] = n;
    doc["g"] = g;
    doc["canonical_identity"] = pullback_report_to_json(canonical);
    doc["admissible_total"] = admissible.count;
    doc["checked"] = checked;
    doc["checks_run"] = checks_run;
    doc["limit_applied"] = checked < admissible.types.size();
    doc["failures"] = std::move(failures);
    doc["all_match"] = all_match;
    sink << doc.dump(2) << "\n";
  } else {
    sink << "verify n=" << n << " g=" << g << ": sweeping " << checked
         << " of " << admissible.count << " admissible types\n";
    sink << "canonical identity: " << (canonical.match ? "ok" : "MISMATCH")
         << "\n";
    sink << "checks run: " << checks_run << ", failures: " << failures.size()
         << "\n";
    for (const Json& f : failures) sink << "  failed: " << f.dump() << "\n";
    sink << (all_match ? "all checks passed" : "FAILED") << "\n";
  }
  return all_match ? 0 : 1;
}

int run_enumerate(const RunConfig& config, std::ostream& sink) {
  EnumerationResult result =
      enumerate_cover_types(*config.n, *config.g, config.mode);
  if (config.limit && *config.limit < result.types.size()) {
    result.types.erase(
        result.types.begin() + static_cast<std::ptrdiff_t>(*config.limit),
        result.types.end());
    // Keep the emitted document self-consistent: count always equals the
    // number of types listed.
    result.count = result.types.size();
  }
  if (config.format == "json") {
    sink << enumeration_to_json(result).dump(2) << "\n";
  } else if (config.format == "csv") {
    enumeration_to_csv(result, sink);
  } else {
    sink << "enumerate n=" << result.n << " g=" << result.g
         << " mode=" << enumeration_mode_name(result.mode)
         << " bound=" << result.bound << ": " << result.count << " types\n";
    if (result.below_lemma_range)
      sink << "note: n <= 2 lies outside the lemma range; the bound is "
              "still defined\n";
    for (const CoverType& t : result.types)
      sink << tuple_text(t.entries()) << " mu2=" << t.mu2() << " genus="
           << type_genus(result.n, result.g, t.mu2()) << "\n";
  }
  return 0;
}

int run_genus(const RunConfig& config, std::ostream& sink) {
  const QuotientPtr model = build_quotient_model(*config.g);
  const long value = genus_lambda(model, *config.n, *config.mu);
  if (config.format == "json") {
    Json doc;
    doc["command"] = "genus";
    doc["n"] = *config.n;
    doc["g"] = *config.g;
    doc["mu"] = *config.mu;
    doc["genus"] = value;
    sink << doc.dump(2) << "\n";
  } else {
    sink << "genus = " << value << "\n";
  }
  return 0;
}

int run_dim(const RunConfig& config, std::ostream& sink) {
  const long value = moduli_dimension(*config.n, *config.g);
  if (config.format == "json") {
    Json doc;
    doc["command"] = "dim";
    doc["n"] = *config.n;
    doc["g"] = *config.g;
    doc["dim"] = value;
    doc["rigidity"] = rigidity_constant();
    sink << doc.dump(2) << "\n";
  } else {
    sink << "dim = " << value << "\n";
  }
  return 0;
}

int run_lattice(const RunConfig& config, std::ostream& sink) {
  const QuotientPtr model = build_quotient_model(*config.g);
  if (config.format == "json") {
    Json doc;
    doc["command"] = "lattice";
    doc["g"] = *config.g;
    doc["ruled"] = surface_to_json(*model->ruled());
    doc["blown"] = surface_to_json(*model->blown());
    doc["top"] = surface_to_json(*model->top());
    doc["quotient"] = quotient_to_json(*model);
    sink << doc.dump(2) << "\n";
  } else {
    sink << "lattice g=" << *config.g << "\n";
    for (const auto& surface :
         {model->ruled(), model->blown(), model->top()}) {
      sink << surface->name() << ": dim " << surface->dim() << ", basis (";
      const auto& basis = surface->basis();
      for (std::size_t i = 0; i < basis.size(); ++i)
        sink << (i ? ", " : "") << basis[i];
      sink << ")\n";
    }
    sink << "quotient generators:";
    for (const auto& name : model->generator_names()) sink << " " << name;
    sink << "\ncanonical pullback: "
         << chain_text(model->canonical_pullback().coeffs()) << "\n";
  }
  return 0;
}

int run_cocycle(const RunConfig& config, std::ostream& sink) {
  const CocycleKind kind =
      config.kind == "rank2" ? CocycleKind::rank2 : CocycleKind::affine;
  const int g = kind == CocycleKind::affine ? config.g.value_or(0) : 0;
  const CocycleReport report = verify_cocycle(config.m, kind, g);
  if (config.format == "json") {
    sink << cocycle_to_json(report).dump(2) << "\n";
  } else {
    sink << "cocycle " << cocycle_kind_label(report.kind, report.g)
         << " m=" << report.m << ": identities checked "
         << report.identities_checked << ", failures "
         << report.failures.size() << "\n";
    for (const std::string& f : report.failures) sink << "  " << f << "\n";
    sink << (report.ok() ? "all identities hold" : "FAILED") << "\n";
  }
  return report.ok() ? 0 : 1;
}

int usage_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << "\n";
  return 2;
}

int dispatch(const RunConfig& config, std::ostream& sink, std::ostream& err) {
  const std::string& cmd = config.command;
  const bool needs_n = cmd == "verify" || cmd == "enumerate" ||
                       cmd == "genus" || cmd == "dim";
  const bool needs_g = needs_n || cmd == "lattice";
  if (cmd != "verify" && cmd != "enumerate" && cmd != "genus" &&
      cmd != "dim" && cmd != "lattice" && cmd != "cocycle")
    return usage_error(err, "unknown command '" + cmd + "'");
  if (needs_n && !config.n) return usage_error(err, cmd + " requires --n");
  if (needs_g && !config.g) return usage_error(err, cmd + " requires --g");
  if (cmd == "genus" && !config.mu)
    return usage_error(err, "genus requires --mu");
  if (config.format != "text" && config.format != "json" &&
      config.format != "csv")
    return usage_error(err, "unknown format '" + config.format + "'");
  if (config.format == "csv" && cmd != "enumerate")
    return usage_error(err, "csv format is only available for enumerate");
  if (cmd == "cocycle") {
    if (config.kind != "rank2" && config.kind != "affine")
      return usage_error(err, "unknown cocycle kind '" + config.kind + "'");
    if (config.kind == "affine" && !config.g)
      return usage_error(err, "cocycle --kind affine requires --g");
  }

  if (cmd == "verify") return run_verify(config, sink);
  if (cmd == "enumerate") return run_enumerate(config, sink);
  if (cmd == "genus") return run_genus(config, sink);
  if (cmd == "dim") return run_dim(config, sink);
  if (cmd == "lattice") return run_lattice(config, sink);
  return run_cocycle(config, sink);
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.output) {
      std::ostringstream buffer;
      const int code = dispatch(config, buffer, err);
      if (code == 2) return code;
      std::ofstream file(*config.output, std::ios::binary);
      if (!file)
        return usage_error(err,
                           "cannot open output file '" + *config.output + "'");
      file << buffer.str();
      if (!file.flush())
        return usage_error(err,
                           "failed writing output file '" + *config.output +
                               "'");
      return code;
    }
    return dispatch(config, out, err);
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Exact Picard-lattice computations for hyperelliptic tangential "
      "covers"};
  app.require_subcommand(1);
  RunConfig config;

  std::vector<long> mu_values;
  std::vector<CLI::Option*> mu_options;

  auto add_format = [&config](CLI::App* cmd,
                              const std::vector<std::string>& formats) {
    cmd->add_option("--format", config.format, "output format")
        ->check(CLI::IsMember(formats));
    cmd->add_option("--output", config.output,
                    "write the report to this file instead of stdout");
  };
  auto add_mu = [&](CLI::App* cmd, bool required) {
    CLI::Option* opt =
        cmd->add_option("--mu", mu_values,
                        "cover type, comma separated (length 2g+2)")
            ->delimiter(',');
    if (required) opt->required();
    mu_options.push_back(opt);
  };

  CLI::App* verify = app.add_subcommand(
      "verify", "check the lambda lemmas and the canonical identity");
  verify->add_option("--n", config.n, "cover degree")->required();
  verify->add_option("--g", config.g, "base-curve genus")->required();
  add_mu(verify, false);
  verify->add_option("--limit", config.limit,
                     "cap on the number of swept types");
  add_format(verify, {"text", "json"});

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list admissible cover types for (n, g)");
  enumerate->add_option("--n", config.n, "cover degree")->required();
  enumerate->add_option("--g", config.g, "base-curve genus")->required();
  std::string mode_name = "ordered";
  enumerate->add_option("--mode", mode_name, "ordered or multiset")
      ->check(CLI::IsMember({"ordered", "multiset"}));
  enumerate->add_option("--limit", config.limit,
                        "emit only this many types");
  add_format(enumerate, {"text", "json", "csv"});

  CLI::App* genus =
      app.add_subcommand("genus", "arithmetic genus of lambda(n, mu)");
  genus->add_option("--n", config.n, "cover degree")->required();
  genus->add_option("--g", config.g, "base-curve genus")->required();
  add_mu(genus, true);
  add_format(genus, {"text", "json"});

  CLI::App* dim =
      app.add_subcommand("dim", "dimension of the ambient moduli family");
  dim->add_option("--n", config.n, "cover degree")->required();
  dim->add_option("--g", config.g, "base-curve genus")->required();
  add_format(dim, {"text", "json"});

  CLI::App* lattice =
      app.add_subcommand("lattice", "dump the blow-up tower and quotient");
  lattice->add_option("--g", config.g, "base-curve genus")->required();
  add_format(lattice, {"text", "json"});

  CLI::App* cocycle = app.add_subcommand(
      "cocycle", "verify transition-matrix cocycle identities");
  cocycle->add_option("--m", config.m, "number of charts")
      ->check(CLI::PositiveNumber);
  cocycle->add_option("--kind", config.kind, "rank2 or affine")
      ->check(CLI::IsMember({"rank2", "affine"}));
  cocycle->add_option("--g", config.g,
                      "fiber parameter for the affine kind");
  add_format(cocycle, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    err << app.help();
    return 2;
  }

  config.command = app.get_subcommands().front()->get_name();
  for (const CLI::Option* opt : mu_options)
    if (opt->count() > 0) config.mu = mu_values;
  if (mode_name == "multiset") config.mode = EnumerationMode::multiset;
  return run(config, out, err);
}

}  // namespace hitchlat
