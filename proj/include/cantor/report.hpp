#pragma once

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

#include "cantor/enumeration.hpp"
#include "cantor/oeis_io.hpp"
#include "cantor/search.hpp"
#include "cantor/ternary_oracle.hpp"

namespace cantor {

enum class ReportFormat { Human, Json, Csv };

// Everything an emitter needs besides the payload. JSON documents are
// {"command", "parameters", "results", "version"} with keys in insertion
// order; big integers are rendered as decimal strings. Timing fields only
// appear when `timings` is set, keeping default output byte-stable.
struct ReportContext {
  ReportFormat format = ReportFormat::Human;
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  bool timings = false;
};

std::string exclusion_kind(ExclusionStage stage);
std::string verdict_name(PrimalityStatus status);

nlohmann::ordered_json certificate_to_json(const CantorCertificate& cert);

void emit_certificates(std::ostream& out, const ReportContext& ctx,
                       const std::vector<CantorCertificate>& certs);
void emit_exclusions(std::ostream& out, const ReportContext& ctx,
                     const std::vector<ExclusionVerdict>& verdicts);
void emit_search_records(std::ostream& out, const ReportContext& ctx,
                         const std::vector<SearchRecord>& records);
void emit_crosscheck(std::ostream& out, const ReportContext& ctx,
                     const CrossCheckReport& report);

}  // namespace cantor
