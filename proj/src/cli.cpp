#include "cantor/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "cantor/cyclotomic.hpp"
#include "cantor/enumeration.hpp"
#include "cantor/errors.hpp"
#include "cantor/exp_char.hpp"
#include "cantor/oeis_io.hpp"
#include "cantor/report.hpp"
#include "cantor/search.hpp"
#include "cantor/version.hpp"

namespace cantor::cli {
namespace {

constexpr int kOk = 0;
constexpr int kUsageOrInputError = 1;
constexpr int kDisagreement = 2;

ReportFormat parse_format(const std::string& name) {
  if (name == "human") return ReportFormat::Human;
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  throw BadArgumentError("unknown format: " + name);
}

mpz_class parse_natural(const std::string& text, const char* what) {
  if (text.empty()) throw BadArgumentError(std::string(what) + " is empty");
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw BadArgumentError(std::string(what) + " must be a natural number, got `" +
                             text + "`");
    }
  }
  return mpz_class(text);
}

// Options shared by every subcommand.
struct CommonOpts {
  std::string format = "human";
  bool timings = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"human", "json", "csv"}))
        ->capture_default_str();
    cmd->add_flag("--timings", timings,
                  "Include wall-clock timings in the output");
  }

  ReportContext context(const std::string& command) const {
    ReportContext ctx;
    ctx.format = parse_format(format);
    ctx.command = command;
    ctx.timings = timings;
    return ctx;
  }
};

int run_certify(const std::string& p_text, int mr_rounds,
                const CommonOpts& common, std::ostream& out) {
  const mpz_class p = parse_natural(p_text, "p");
  ReportContext ctx = common.context("certify");
  ctx.parameters["p"] = p.get_str();
  ctx.parameters["mr_rounds"] = mr_rounds;
  emit_certificates(out, ctx, {certify(p, mr_rounds)});
  return kOk;
}

int run_enumerate(std::uint64_t limit, int mr_rounds, int threads,
                  const CommonOpts& common, std::ostream& out) {
  EnumerateOptions opts;
  opts.mr_rounds = mr_rounds;
  opts.threads = threads;
  ReportContext ctx = common.context("enumerate");
  ctx.parameters["limit"] = limit;
  ctx.parameters["mr_rounds"] = mr_rounds;
  ctx.parameters["threads"] = threads;
  emit_certificates(out, ctx, enumerate_cantor_primes(limit, opts));
  return kOk;
}

int run_exclusions(std::uint64_t limit, const std::string& stage,
                   const CommonOpts& common, std::ostream& out) {
  StageFilter filter;
  if (stage == "1") {
    filter = StageFilter::FirstDigit;
  } else if (stage == "2") {
    filter = StageFilter::SecondDigit;
  } else if (stage == "n") {
    filter = StageFilter::LaterDigit;
  } else {
    throw BadArgumentError("unknown stage: " + stage);
  }
  ReportContext ctx = common.context("exclusions");
  ctx.parameters["limit"] = limit;
  ctx.parameters["stage"] = stage;
  std::vector<ExclusionVerdict> verdicts;
  for (std::uint64_t p : exclusion_report(limit, filter)) {
    verdicts.push_back(exclusion_stage(mpz_class(p)));
  }
  emit_exclusions(out, ctx, verdicts);
  return kOk;
}

int run_search_repunit(std::uint64_t max_s, std::uint64_t min_s, int mr_rounds,
                       int threads, const CommonOpts& common,
                       std::ostream& out) {
  SearchOptions opts;
  opts.mr_rounds = mr_rounds;
  opts.threads = threads;
  opts.min_s = min_s;
  ReportContext ctx = common.context("search-repunit");
  ctx.parameters["max_s"] = max_s;
  ctx.parameters["min_s"] = min_s;
  ctx.parameters["mr_rounds"] = mr_rounds;
  ctx.parameters["threads"] = threads;
  emit_search_records(out, ctx, search_repunit_prime_exponents(max_s, opts));
  return kOk;
}

int run_search_deep(std::uint64_t s, std::uint64_t max_j, int mr_rounds,
                    std::uint64_t trit_budget, const CommonOpts& common,
                    std::ostream& out) {
  SearchOptions opts;
  opts.mr_rounds = mr_rounds;
  opts.trit_budget = trit_budget;
  ReportContext ctx = common.context("search-deep");
  ctx.parameters["s"] = s;
  ctx.parameters["max_j"] = max_j;
  ctx.parameters["mr_rounds"] = mr_rounds;
  ctx.parameters["trit_budget"] = trit_budget;
  emit_search_records(out, ctx, search_deep_forms(s, max_j, opts));
  return kOk;
}

int run_crosscheck(const std::string& bfile_path, const std::string& cap_text,
                   const std::string& series, const CommonOpts& common,
                   std::ostream& out) {
  const mpz_class cap = parse_natural(cap_text, "cap");
  std::ifstream in(bfile_path);
  if (!in) {
    throw BadArgumentError("cannot open b-file: " + bfile_path);
  }
  const std::vector<SequenceEntry> expected = parse_bfile(in);

  // Recompute the chosen series up to the cap.
  std::vector<mpz_class> computed;
  if (series == "cantor") {
    if (!mpz_fits_ulong_p(cap.get_mpz_t())) {
      throw BadArgumentError("cap too large for enumeration");
    }
    for (const auto& cert :
         enumerate_cantor_primes(mpz_get_ui(cap.get_mpz_t()))) {
      // The b-file counterpart (repunit primes 13, 1093, ...) omits 3.
      if (cert.small_special) continue;
      computed.push_back(cert.p);
    }
  } else if (series == "repunit" || series == "repunit-exponents") {
    const bool values = series == "repunit";
    // Scan prime exponents until the repunit value itself passes the cap;
    // for the exponent series the cap bounds s directly.
    std::uint64_t max_s;
    if (values) {
      max_s = 2;
      while (repunit3(max_s + 1) <= cap) ++max_s;
    } else {
      if (!mpz_fits_ulong_p(cap.get_mpz_t())) {
        throw BadArgumentError("cap too large for exponent search");
      }
      max_s = mpz_get_ui(cap.get_mpz_t());
    }
    for (const SearchRecord& rec : search_repunit_prime_exponents(max_s)) {
      if (!rec.positive()) continue;
      computed.push_back(values ? repunit3(rec.s) : mpz_class(rec.s));
    }
  } else {
    throw BadArgumentError("unknown series: " + series);
  }

  ReportContext ctx = common.context("crosscheck");
  ctx.parameters["bfile"] = bfile_path;
  ctx.parameters["cap"] = cap.get_str();
  ctx.parameters["series"] = series;
  const CrossCheckReport report = cross_check(expected, computed, cap);
  emit_crosscheck(out, ctx, report);
  return report.agree() ? kOk : kDisagreement;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Cantor prime certification, enumeration and search"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // certify
  auto* certify_cmd =
      app.add_subcommand("certify", "Certify one prime against all three "
                                    "characterizations");
  std::string p_text;
  certify_cmd->add_option("p", p_text, "Prime to certify")->required();
  int certify_rounds = kDefaultMrRounds;
  certify_cmd->add_option("--mr-rounds", certify_rounds,
                          "Miller-Rabin rounds above 2^64")
      ->check(CLI::PositiveNumber);
  CommonOpts certify_common;
  certify_common.attach(certify_cmd);

  // enumerate
  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "List all Cantor primes up to a bound");
  std::uint64_t enum_limit = 0;
  enumerate_cmd->add_option("--limit", enum_limit, "Upper bound (inclusive)")
      ->required();
  int enum_rounds = kDefaultMrRounds;
  enumerate_cmd
      ->add_option("--mr-rounds", enum_rounds, "Miller-Rabin rounds above 2^64")
      ->check(CLI::PositiveNumber);
  int enum_threads = 0;
  enumerate_cmd->add_option("--threads", enum_threads,
                            "Worker threads (0 = all available)");
  CommonOpts enum_common;
  enum_common.attach(enumerate_cmd);

  // exclusions
  auto* exclusions_cmd = app.add_subcommand(
      "exclusions", "List primes excluded at a given chain stage");
  std::uint64_t excl_limit = 0;
  exclusions_cmd->add_option("--limit", excl_limit, "Upper bound (inclusive)")
      ->required();
  std::string excl_stage;
  exclusions_cmd
      ->add_option("--stage", excl_stage,
                   "1 (first digit), 2 (second digit) or n (third or later)")
      ->required()
      ->check(CLI::IsMember({"1", "2", "n"}));
  CommonOpts excl_common;
  excl_common.attach(exclusions_cmd);

  // search-repunit
  auto* repunit_cmd = app.add_subcommand(
      "search-repunit", "Probe base-3 repunits R_s for prime exponents s");
  std::uint64_t max_s = 0;
  repunit_cmd->add_option("--max-s", max_s, "Largest exponent to test")
      ->required();
  std::uint64_t min_s = 2;
  repunit_cmd->add_option("--min-s", min_s,
                          "Smallest exponent to test (resume point)");
  int repunit_rounds = kDefaultMrRounds;
  repunit_cmd
      ->add_option("--mr-rounds", repunit_rounds,
                   "Miller-Rabin rounds above 2^64")
      ->check(CLI::PositiveNumber);
  int repunit_threads = 0;
  repunit_cmd->add_option("--threads", repunit_threads,
                          "Worker threads (0 = all available)");
  CommonOpts repunit_common;
  repunit_common.attach(repunit_cmd);

  // search-deep
  auto* deep_cmd = app.add_subcommand(
      "search-deep", "Probe the tower Phi_s(3^(s^j)) for j = 0..max-j");
  std::uint64_t deep_s = 0;
  deep_cmd->add_option("--s", deep_s, "Odd prime s")->required();
  std::uint64_t deep_max_j = 0;
  deep_cmd->add_option("--max-j", deep_max_j, "Largest tower height j")
      ->required();
  int deep_rounds = kDefaultMrRounds;
  deep_cmd
      ->add_option("--mr-rounds", deep_rounds, "Miller-Rabin rounds above 2^64")
      ->check(CLI::PositiveNumber);
  std::uint64_t deep_budget = kDefaultTritBudget;
  deep_cmd->add_option("--trit-budget", deep_budget,
                       "Ceiling on candidate size in ternary digits");
  CommonOpts deep_common;
  deep_common.attach(deep_cmd);

  // crosscheck
  auto* cross_cmd = app.add_subcommand(
      "crosscheck", "Compare computed terms against an OEIS b-file");
  std::string bfile_path;
  cross_cmd->add_option("--bfile", bfile_path, "Path to the b-file")
      ->required();
  std::string cap_text;
  cross_cmd
      ->add_option("--cap", cap_text,
                   "Compare only terms <= cap (decimal, any size)")
      ->required();
  std::string series = "repunit";
  cross_cmd
      ->add_option("--series", series,
                   "Which series to recompute: repunit values, their "
                   "exponents, or Cantor primes")
      ->check(CLI::IsMember({"repunit", "repunit-exponents", "cantor"}))
      ->capture_default_str();
  CommonOpts cross_common;
  cross_common.attach(cross_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsageOrInputError;
  }

  try {
    if (certify_cmd->parsed()) {
      return run_certify(p_text, certify_rounds, certify_common, out);
    }
    if (enumerate_cmd->parsed()) {
      return run_enumerate(enum_limit, enum_rounds, enum_threads, enum_common,
                           out);
    }
    if (exclusions_cmd->parsed()) {
      return run_exclusions(excl_limit, excl_stage, excl_common, out);
    }
    if (repunit_cmd->parsed()) {
      return run_search_repunit(max_s, min_s, repunit_rounds, repunit_threads,
                                repunit_common, out);
    }
    if (deep_cmd->parsed()) {
      return run_search_deep(deep_s, deep_max_j, deep_rounds, deep_budget,
                             deep_common, out);
    }
    if (cross_cmd->parsed()) {
      return run_crosscheck(bfile_path, cap_text, series, cross_common, out);
    }
    err << "no subcommand\n";
    return kUsageOrInputError;
  } catch (const DisagreementError& e) {
    err << "disagreement: " << e.what() << '\n';
    return kDisagreement;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrInputError;
  }
}

}  // namespace cantor::cli
