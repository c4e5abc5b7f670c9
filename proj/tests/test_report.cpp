#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cantor/enumeration.hpp"
#include "cantor/report.hpp"
#include "cantor/search.hpp"

using namespace cantor;

namespace {

ReportContext context(ReportFormat format, bool timings = false) {
  ReportContext ctx;
  ctx.format = format;
  ctx.command = "test";
  ctx.parameters["limit"] = 100;
  ctx.timings = timings;
  return ctx;
}

}  // namespace

TEST_CASE("names for enums") {
  CHECK(exclusion_kind(ExclusionStage::Passes) == "passes");
  CHECK(exclusion_kind(ExclusionStage::FailsFirstDigit) ==
        "fails_first_digit");
  CHECK(exclusion_kind(ExclusionStage::FailsSecondDigit) ==
        "fails_second_digit");
  CHECK(exclusion_kind(ExclusionStage::FailsAtDigit) == "fails_at_digit");
  CHECK(verdict_name(PrimalityStatus::Prime) == "prime");
  CHECK(verdict_name(PrimalityStatus::ProbablePrime) == "probable_prime");
  CHECK(verdict_name(PrimalityStatus::Composite) == "composite");
}

TEST_CASE("certificate JSON carries the schema") {
  const auto j = certificate_to_json(certify(mpz_class(757)));
  CHECK(j["p"] == "757");
  CHECK(j["is_cantor"] == true);
  CHECK(j["small_special"] == false);
  CHECK(j["q"] == 9);
  CHECK(j["K"] == "13");
  CHECK(j["offsets"] == nlohmann::ordered_json({2, 1, 0}));
  CHECK(j["form"]["s"] == 3);
  CHECK(j["form"]["j"] == 1);
  CHECK(j["exclusion"]["kind"] == "passes");
  CHECK(j["exclusion"]["witness_exponents"] ==
        nlohmann::ordered_json({7, 1, 1}));

  const auto three = certificate_to_json(certify(mpz_class(3)));
  CHECK(three["is_cantor"] == true);
  CHECK(three["small_special"] == true);
  CHECK(three["q"].is_null());
  CHECK(three["K"].is_null());
  CHECK(three["form"].is_null());
  CHECK(three["exclusion"].is_null());
}

TEST_CASE("json document envelope") {
  std::ostringstream out;
  emit_certificates(out, context(ReportFormat::Json), {certify(mpz_class(13))});
  const auto doc = nlohmann::json::parse(out.str());
  REQUIRE(doc.contains("command"));
  REQUIRE(doc.contains("parameters"));
  REQUIRE(doc.contains("results"));
  REQUIRE(doc.contains("version"));
  CHECK(doc.size() == 4);
  CHECK(doc["command"] == "test");
  CHECK(doc["parameters"]["limit"] == 100);
  CHECK(doc["results"].size() == 1);
  CHECK(doc["version"] == "0.1.0");
}

TEST_CASE("emission is deterministic") {
  const std::vector<CantorCertificate> certs = {certify(mpz_class(757)),
                                                certify(mpz_class(5))};
  for (ReportFormat f :
       {ReportFormat::Human, ReportFormat::Json, ReportFormat::Csv}) {
    std::ostringstream a, b;
    emit_certificates(a, context(f), certs);
    emit_certificates(b, context(f), certs);
    CHECK(a.str() == b.str());
    CHECK_FALSE(a.str().empty());
  }
}

TEST_CASE("csv header and rows") {
  std::ostringstream out;
  emit_certificates(out, context(ReportFormat::Csv), {certify(mpz_class(13))});
  const std::string text = out.str();
  CHECK(text.rfind("p,is_cantor,small_special,q,K,offsets,form_s,form_j,"
                   "exclusion_kind,exclusion_digit_index,witness_exponents\n",
                   0) == 0);
  CHECK(text.find("13,true,false,3,1,0,3,0,passes,0,3\n") !=
        std::string::npos);
}

TEST_CASE("timings only appear when requested") {
  const auto records = search_deep_forms(3, 1);
  for (ReportFormat f : {ReportFormat::Json, ReportFormat::Csv}) {
    std::ostringstream without, with;
    emit_search_records(without, context(f), records);
    emit_search_records(with, context(f, true), records);
    CHECK(without.str().find("elapsed_ms") == std::string::npos);
    CHECK(with.str().find("elapsed_ms") != std::string::npos);
  }
}

TEST_CASE("search records render verdicts") {
  std::ostringstream out;
  emit_search_records(out, context(ReportFormat::Csv),
                      search_repunit_prime_exponents(13));
  const std::string text = out.str();
  CHECK(text.rfind("s,j,digits3,verdict,mr_rounds\n", 0) == 0);
  CHECK(text.find("3,0,3,prime,0\n") != std::string::npos);
  CHECK(text.find("5,0,5,composite,0\n") != std::string::npos);
  CHECK(text.find("13,0,13,prime,0\n") != std::string::npos);
}

TEST_CASE("crosscheck rendering") {
  CrossCheckReport report;
  report.expected_only = {mpz_class(757)};
  report.computed_only = {mpz_class(4177)};
  std::ostringstream human, json, csv;
  emit_crosscheck(human, context(ReportFormat::Human), report);
  CHECK(human.str().find("757") != std::string::npos);
  CHECK(human.str().find("4177") != std::string::npos);

  emit_crosscheck(json, context(ReportFormat::Json), report);
  const auto doc = nlohmann::json::parse(json.str());
  CHECK(doc["results"][0]["agree"] == false);
  CHECK(doc["results"][0]["expected_only"][0] == "757");

  emit_crosscheck(csv, context(ReportFormat::Csv), report);
  CHECK(csv.str().rfind("side,value\n", 0) == 0);
  CHECK(csv.str().find("expected_only,757\n") != std::string::npos);

  CrossCheckReport clean;
  std::ostringstream ok;
  emit_crosscheck(ok, context(ReportFormat::Human), clean);
  CHECK(ok.str().find("passed") != std::string::npos);
}
