#include "cantor/report.hpp"

#include <ostream>
#include <sstream>

#include "cantor/errors.hpp"
#include "cantor/version.hpp"

namespace cantor {
namespace {

using ordered_json = nlohmann::ordered_json;

template <typename T>
std::string joined(const std::vector<T>& xs, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << sep;
    os << xs[i];
  }
  return os.str();
}

void emit_json_document(std::ostream& out, const ReportContext& ctx,
                        ordered_json results) {
  ordered_json doc;
  doc["command"] = ctx.command;
  doc["parameters"] = ctx.parameters;
  doc["results"] = std::move(results);
  doc["version"] = kVersion;
  out << doc.dump(2) << '\n';
}

void emit_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << cells[i];
  }
  out << '\n';
}

ordered_json exclusion_to_json(const ExclusionVerdict& v) {
  ordered_json o;
  o["kind"] = exclusion_kind(v.stage);
  o["digit_index"] = v.digit_index;
  o["witness_exponents"] = v.witness_exponents;
  return o;
}

std::string offsets_as_sum(const std::vector<std::uint64_t>& offsets) {
  std::ostringstream os;
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    if (i) os << " + ";
    os << "3^" << offsets[i];
  }
  return os.str();
}

void human_certificate(std::ostream& out, const CantorCertificate& c) {
  out << "p = " << c.p << ": "
      << (c.is_cantor ? "Cantor prime" : "not a Cantor prime") << '\n';
  if (c.small_special) {
    out << "  1/3 = 0.0222... lies in the Cantor set; the exponential and"
           " cyclotomic characterizations do not apply\n";
    return;
  }
  if (c.q) out << "  q = ord_p(3) = " << *c.q << '\n';
  if (c.K) {
    out << "  K = " << *c.K;
    if (c.offsets) out << " = " << offsets_as_sum(*c.offsets);
    out << '\n';
  }
  if (c.form) {
    out << "  form: Phi_" << c.form->first << "(3^(" << c.form->first << "^"
        << c.form->second << "))\n";
  } else if (c.q) {
    out << "  form: none\n";
  }
  if (c.exclusion) {
    const ExclusionVerdict& v = *c.exclusion;
    if (v.passes()) {
      out << "  exclusion chain: passes, witness exponents ["
          << joined(v.witness_exponents, ", ") << "]\n";
    } else {
      out << "  exclusion chain: fails at non-zero digit " << v.digit_index
          << '\n';
    }
  }
}

std::vector<std::string> certificate_csv_row(const CantorCertificate& c) {
  std::vector<std::string> row(11);
  row[0] = c.p.get_str();
  row[1] = c.is_cantor ? "true" : "false";
  row[2] = c.small_special ? "true" : "false";
  if (c.q) row[3] = std::to_string(*c.q);
  if (c.K) row[4] = c.K->get_str();
  if (c.offsets) row[5] = joined(*c.offsets, ";");
  if (c.form) {
    row[6] = std::to_string(c.form->first);
    row[7] = std::to_string(c.form->second);
  }
  if (c.exclusion) {
    row[8] = exclusion_kind(c.exclusion->stage);
    row[9] = std::to_string(c.exclusion->digit_index);
    row[10] = joined(c.exclusion->witness_exponents, ";");
  }
  return row;
}

}  // namespace

std::string exclusion_kind(ExclusionStage stage) {
  switch (stage) {
    case ExclusionStage::FailsFirstDigit:
      return "fails_first_digit";
    case ExclusionStage::FailsSecondDigit:
      return "fails_second_digit";
    case ExclusionStage::FailsAtDigit:
      return "fails_at_digit";
    case ExclusionStage::Passes:
      return "passes";
  }
  throw BadArgumentError("unknown exclusion stage");
}

std::string verdict_name(PrimalityStatus status) {
  switch (status) {
    case PrimalityStatus::Prime:
      return "prime";
    case PrimalityStatus::ProbablePrime:
      return "probable_prime";
    case PrimalityStatus::Composite:
      return "composite";
  }
  throw BadArgumentError("unknown primality status");
}

ordered_json certificate_to_json(const CantorCertificate& c) {
  ordered_json o;
  o["p"] = c.p.get_str();
  o["is_cantor"] = c.is_cantor;
  o["small_special"] = c.small_special;
  o["q"] = c.q ? ordered_json(*c.q) : ordered_json(nullptr);
  o["K"] = c.K ? ordered_json(c.K->get_str()) : ordered_json(nullptr);
  o["offsets"] = c.offsets ? ordered_json(*c.offsets) : ordered_json(nullptr);
  if (c.form) {
    o["form"] = ordered_json{{"s", c.form->first}, {"j", c.form->second}};
  } else {
    o["form"] = nullptr;
  }
  o["exclusion"] =
      c.exclusion ? exclusion_to_json(*c.exclusion) : ordered_json(nullptr);
  return o;
}

void emit_certificates(std::ostream& out, const ReportContext& ctx,
                       const std::vector<CantorCertificate>& certs) {
  switch (ctx.format) {
    case ReportFormat::Json: {
      ordered_json results = ordered_json::array();
      for (const auto& c : certs) results.push_back(certificate_to_json(c));
      emit_json_document(out, ctx, std::move(results));
      return;
    }
    case ReportFormat::Csv:
      emit_csv_row(out, {"p", "is_cantor", "small_special", "q", "K",
                         "offsets", "form_s", "form_j", "exclusion_kind",
                         "exclusion_digit_index", "witness_exponents"});
      for (const auto& c : certs) emit_csv_row(out, certificate_csv_row(c));
      return;
    case ReportFormat::Human:
      for (const auto& c : certs) human_certificate(out, c);
      if (certs.empty()) out << "no Cantor primes in range\n";
      return;
  }
}

void emit_exclusions(std::ostream& out, const ReportContext& ctx,
                     const std::vector<ExclusionVerdict>& verdicts) {
  switch (ctx.format) {
    case ReportFormat::Json: {
      ordered_json results = ordered_json::array();
      for (const auto& v : verdicts) {
        ordered_json o;
        o["p"] = v.p.get_str();
        o["kind"] = exclusion_kind(v.stage);
        o["digit_index"] = v.digit_index;
        o["witness_exponents"] = v.witness_exponents;
        results.push_back(std::move(o));
      }
      emit_json_document(out, ctx, std::move(results));
      return;
    }
    case ReportFormat::Csv:
      emit_csv_row(out, {"p", "kind", "digit_index", "witness_exponents"});
      for (const auto& v : verdicts) {
        emit_csv_row(out, {v.p.get_str(), exclusion_kind(v.stage),
                           std::to_string(v.digit_index),
                           joined(v.witness_exponents, ";")});
      }
      return;
    case ReportFormat::Human:
      for (const auto& v : verdicts) {
        out << "p = " << v.p << ": excluded at non-zero digit "
            << v.digit_index;
        if (!v.witness_exponents.empty()) {
          out << " (witness exponents [" << joined(v.witness_exponents, ", ")
              << "])";
        }
        out << '\n';
      }
      if (verdicts.empty()) out << "no primes excluded at this stage\n";
      return;
  }
}

void emit_search_records(std::ostream& out, const ReportContext& ctx,
                         const std::vector<SearchRecord>& records) {
  switch (ctx.format) {
    case ReportFormat::Json: {
      ordered_json results = ordered_json::array();
      for (const auto& r : records) {
        ordered_json o;
        o["s"] = r.s;
        o["j"] = r.j;
        o["digits3"] = r.digits3;
        o["verdict"] = verdict_name(r.verdict);
        o["mr_rounds"] = r.mr_rounds;
        if (ctx.timings) o["elapsed_ms"] = r.elapsed_ms;
        results.push_back(std::move(o));
      }
      emit_json_document(out, ctx, std::move(results));
      return;
    }
    case ReportFormat::Csv: {
      std::vector<std::string> header = {"s", "j", "digits3", "verdict",
                                         "mr_rounds"};
      if (ctx.timings) header.push_back("elapsed_ms");
      emit_csv_row(out, header);
      for (const auto& r : records) {
        std::vector<std::string> row = {
            std::to_string(r.s), std::to_string(r.j),
            std::to_string(r.digits3), verdict_name(r.verdict),
            std::to_string(r.mr_rounds)};
        if (ctx.timings) row.push_back(std::to_string(r.elapsed_ms));
        emit_csv_row(out, row);
      }
      return;
    }
    case ReportFormat::Human:
      for (const auto& r : records) {
        out << "s = " << r.s << ", j = " << r.j << ": " << r.digits3
            << " ternary digits, " << verdict_name(r.verdict);
        if (r.verdict == PrimalityStatus::ProbablePrime) {
          out << " (" << r.mr_rounds << " rounds)";
        }
        if (ctx.timings) out << " [" << r.elapsed_ms << " ms]";
        out << '\n';
      }
      return;
  }
}

void emit_crosscheck(std::ostream& out, const ReportContext& ctx,
                     const CrossCheckReport& report) {
  switch (ctx.format) {
    case ReportFormat::Json: {
      ordered_json o;
      o["agree"] = report.agree();
      o["expected_only"] = ordered_json::array();
      for (const auto& v : report.expected_only) {
        o["expected_only"].push_back(v.get_str());
      }
      o["computed_only"] = ordered_json::array();
      for (const auto& v : report.computed_only) {
        o["computed_only"].push_back(v.get_str());
      }
      emit_json_document(out, ctx, ordered_json::array({std::move(o)}));
      return;
    }
    case ReportFormat::Csv:
      emit_csv_row(out, {"side", "value"});
      for (const auto& v : report.expected_only) {
        emit_csv_row(out, {"expected_only", v.get_str()});
      }
      for (const auto& v : report.computed_only) {
        emit_csv_row(out, {"computed_only", v.get_str()});
      }
      return;
    case ReportFormat::Human:
      if (report.agree()) {
        out << "cross-check passed: computed terms match the reference\n";
      } else {
        for (const auto& v : report.expected_only) {
          out << "missing from computed: " << v << '\n';
        }
        for (const auto& v : report.computed_only) {
          out << "not in reference: " << v << '\n';
        }
      }
      return;
  }
}

}  // namespace cantor
