#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "biq/biquotient.hpp"
#include "biq/errors.hpp"
#include "biq/lefschetz.hpp"
#include "biq/momentmap.hpp"
#include "biq/serialize.hpp"

namespace biq::cli {

namespace {

struct RunConfig {
  std::string group;
  unsigned n = 0;
  std::string torus;
  std::optional<unsigned> k;
  std::string omega;
  std::string format = "json";
  std::string output;
  std::string params = "1,1,1";
  std::string order = "degrevlex";
  std::string budget;
  std::optional<std::size_t> max_basis;
  std::optional<std::size_t> max_bits;
  bool reduced_power = false;
  bool no_timing = false;
  bool exact = false;
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  if (!text.empty() && text.back() == ',') out.emplace_back();
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text, const std::string& what) {
  std::vector<Rational> out;
  for (const auto& item : split_commas(text)) {
    try {
      out.push_back(parse_rational(item));
    } catch (const UsageError&) {
      throw UsageError("bad " + what + " entry '" + item + "'");
    }
  }
  return out;
}

ResourceBudget named_budget(const std::string& name) {
  if (name == "standard") return ResourceBudget::standard();
  if (name == "large") return ResourceBudget::large();
  if (name == "unlimited") return ResourceBudget::unlimited();
  throw UsageError("unknown budget '" + name + "' (expected standard, large or unlimited)");
}

ResourceBudget resolve_budget(const RunConfig& cfg) {
  std::string name = "standard";
  if (const char* env = std::getenv("BIQ_BUDGET"); env != nullptr && *env != '\0') name = env;
  if (!cfg.budget.empty()) name = cfg.budget;
  auto budget = named_budget(name);
  if (cfg.max_basis) budget.max_basis_size = *cfg.max_basis;
  if (cfg.max_bits) budget.max_coefficient_bits = *cfg.max_bits;
  return budget;
}

MonomialOrder resolve_order(const RunConfig& cfg) {
  if (cfg.order == "degrevlex" || cfg.order == "grevlex") return MonomialOrder::degrevlex();
  if (cfg.order == "lex") return MonomialOrder::lex();
  throw UsageError("unknown monomial order '" + cfg.order + "'");
}

GradedAlgebraPresentation resolve_presentation(const RunConfig& cfg) {
  if (cfg.group.empty()) throw UsageError("--group is required");
  if (cfg.torus.empty()) throw UsageError("--torus is required");
  GroupSpec g{parse_family(cfg.group), cfg.n};
  g.validate();
  const auto t = parse_torus(cfg.torus, g, cfg.k);
  return cohomology_presentation(g, t);
}

void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + cfg.output + "' for writing");
  file << text;
  if (!file) throw UsageError("failed writing '" + cfg.output + "'");
}

int cmd_cohomology(const RunConfig& cfg, std::ostream& out) {
  write_output(cfg, presentation_json(resolve_presentation(cfg)), out);
  return kPass;
}

int cmd_betti(const RunConfig& cfg, std::ostream& out) {
  const auto pres = resolve_presentation(cfg);
  const CohomologyRing ring(pres, resolve_order(cfg), resolve_budget(cfg));
  write_output(cfg, betti_json(pres, betti_numbers(ring)), out);
  return kPass;
}

int cmd_hlp(const RunConfig& cfg, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const auto pres = resolve_presentation(cfg);
  HlpOptions options{resolve_order(cfg), resolve_budget(cfg), cfg.reduced_power, !cfg.exact};
  const auto omega = cfg.omega.empty()
                         ? default_omega(pres)
                         : omega_from_coefficients(pres, parse_rationals(cfg.omega, "--omega"));
  const CohomologyRing ring(pres, options.order, options.budget);
  const auto verdict = is_hard_lefschetz(ring, omega, options);
  const auto betti = betti_numbers(ring);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  const std::int64_t runtime_ms = cfg.no_timing ? 0 : elapsed.count();
  write_output(cfg, verdict_json(verdict, *pres.context, betti, runtime_ms), out);
  return verdict.passes ? kPass : kHlpFail;
}

int cmd_moment(const RunConfig& cfg, std::ostream& out) {
  const auto values = parse_rationals(cfg.params, "--params");
  if (values.size() != 3) throw UsageError("--params needs exactly three values a,b,c");
  const auto img = moment::polytope_image({values[0], values[1], values[2]});
  const auto format = cfg.format == "svg" ? moment::EmitFormat::kSvg : moment::EmitFormat::kJson;
  write_output(cfg, moment::emit(img, format), out);
  return kPass;
}

void add_selectors(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--group", cfg.group, "Group family: su, sp, spin-odd, spin-even");
  sub->add_option("--n", cfg.n, "Group index n");
  sub->add_option("--torus", cfg.torus, "Torus: s1, s2, s<k><j> (SU), eschenburg");
  sub->add_option("--k", cfg.k, "k for the SU tori s_k1 / s_k2");
  sub->add_option("-o,--output", cfg.output, "Write to this file instead of stdout");
}

void add_budget(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--order", cfg.order, "Monomial order: degrevlex or lex")
      ->check(CLI::IsMember({"degrevlex", "grevlex", "lex"}));
  sub->add_option("--budget", cfg.budget, "Resource budget: standard, large, unlimited (env BIQ_BUDGET)");
  sub->add_option("--max-basis", cfg.max_basis, "Maximum Groebner basis size");
  sub->add_option("--max-bits", cfg.max_bits, "Maximum coefficient size in bits");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Cohomology and Hard Lefschetz checks for equal-rank torus biquotients", "biq"};
  app.require_subcommand(1);

  auto* cohomology = app.add_subcommand("cohomology", "Print the cohomology presentation as JSON");
  add_selectors(cohomology, cfg);

  auto* hlp = app.add_subcommand("hlp", "Test a degree-2 class for the Hard Lefschetz property");
  add_selectors(hlp, cfg);
  add_budget(hlp, cfg);
  hlp->add_option("--omega", cfg.omega, "Comma-separated rational coefficients of omega");
  hlp->add_flag("--reduced-power", cfg.reduced_power, "Reduce omega^k modulo the relations first");
  hlp->add_flag("--no-timing", cfg.no_timing, "Report runtime_ms as 0");
  hlp->add_flag("--exact", cfg.exact, "Decide every k over Q, skipping the modular certificate");

  auto* betti = app.add_subcommand("betti", "Betti numbers and Euler characteristic");
  add_selectors(betti, cfg);
  add_budget(betti, cfg);

  auto* moment = app.add_subcommand("moment", "Momentum image of the Eschenburg flag");
  moment->add_option("--format", cfg.format, "json or svg")->check(CLI::IsMember({"json", "svg"}));
  moment->add_option("--params", cfg.params, "Edge-length multipliers a,b,c");
  moment->add_option("-o,--output", cfg.output, "Write to this file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidInput;
  }

  try {
    if (app.got_subcommand(cohomology)) return cmd_cohomology(cfg, out);
    if (app.got_subcommand(hlp)) return cmd_hlp(cfg, out);
    if (app.got_subcommand(betti)) return cmd_betti(cfg, out);
    return cmd_moment(cfg, out);
  } catch (const LimitError& e) {
    err << "error: resource limit reached: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace biq::cli
