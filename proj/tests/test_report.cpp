#include <gtest/gtest.h>

#include <sstream>

#include "congrlab/congrlab.hpp"
#include "json.hpp"

using namespace congrlab;

namespace {

std::string emit(const Report& r, ReportFormat f, EmitOptions opt = {}) {
  std::ostringstream out;
  emit_report(r, f, out, opt);
  return out.str();
}

CheckResult failing_record() {
  CheckResult r;
  r.check_id = "X.fail";
  r.prime = 11;
  r.t = Rational(-1, 4);
  r.target = 3;
  r.valuation = 1;
  r.status = Status::Fail;
  r.lhs = "5";
  r.rhs = "16";
  r.elapsed_us = 1234;
  return r;
}

}  // namespace

TEST(Report, EmptyJson) {
  EXPECT_EQ(emit(Report{}, ReportFormat::Json), "[]\n");
}

TEST(Report, CsvHeader) {
  auto text = emit(Report{}, ReportFormat::Csv);
  EXPECT_EQ(text, "check,prime,t,target,valuation,pass,lhs,rhs,us\n");
}

TEST(Report, FailingRecordSchema) {
  Report rep;
  rep.results.push_back(failing_record());
  auto j = nlohmann::json::parse(emit(rep, ReportFormat::Json));
  ASSERT_EQ(j.size(), 1u);
  const auto& rec = j[0];
  EXPECT_EQ(rec["check"], "X.fail");
  EXPECT_EQ(rec["prime"], 11);
  EXPECT_EQ(rec["t"], "-1/4");
  EXPECT_EQ(rec["target"], 3);
  EXPECT_EQ(rec["pass"], false);
  EXPECT_LT(rec["valuation"].get<int>(), rec["target"].get<int>());
  EXPECT_EQ(rec["lhs"], "5");
  EXPECT_EQ(rec["rhs"], "16");
  EXPECT_EQ(rec["us"], 0);
  EXPECT_FALSE(rec.contains("error"));
  std::vector<std::string> keys;
  for (auto it = rec.begin(); it != rec.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys.size(), 9u);

  auto timed = nlohmann::json::parse(emit(rep, ReportFormat::Json, {true}));
  EXPECT_EQ(timed[0]["us"], 1234);

  auto csv = emit(rep, ReportFormat::Csv);
  EXPECT_NE(csv.find("\nX.fail,11,-1/4,3,1,false,5,16,0\n"), std::string::npos) << csv;
}

TEST(Report, IntegerTAndInfiniteValuation) {
  CheckResult r;
  r.check_id = "X.ok";
  r.prime = 7;
  r.t = Rational(2);
  r.target = 2;
  r.valuation = kInfiniteValuation;
  r.status = Status::Pass;
  Report rep;
  rep.results.push_back(r);
  auto j = nlohmann::json::parse(emit(rep, ReportFormat::Json));
  EXPECT_EQ(j[0]["t"], "2/1");
  EXPECT_EQ(j[0]["valuation"], "inf");
  EXPECT_EQ(j[0]["pass"], true);
}

TEST(Report, ErrorRecordCarriesMessage) {
  CheckResult r;
  r.check_id = "X.err";
  r.prime = 7;
  r.target = 2;
  r.status = Status::Error;
  r.message = "NotDivisibleByP: boom";
  Report rep;
  rep.results.push_back(r);
  auto j = nlohmann::json::parse(emit(rep, ReportFormat::Json));
  EXPECT_EQ(j[0]["pass"], false);
  EXPECT_TRUE(j[0]["valuation"].is_null());
  EXPECT_EQ(j[0]["error"], "NotDivisibleByP: boom");
  EXPECT_EQ(rep.worst(), Status::Error);
}

TEST(Report, TextLineForMc1) {
  Report rep;
  rep.results.push_back(run_congruence(builtin_checks().lookup("TM.mc1"), 7));
  EXPECT_EQ(emit(rep, ReportFormat::Text), "TM.mc1 p=7 PASS v≥5\n");
}

TEST(Report, IdentityRecords) {
  auto reg = builtin_checks();
  std::vector<std::int64_t> n1{1};
  Report rep;
  rep.results.push_back(run_identity(*reg.find_identity("L26.wz1"), n1));
  auto j = nlohmann::json::parse(emit(rep, ReportFormat::Json));
  EXPECT_EQ(j[0]["check"], "L26.wz1[n=1]");
  EXPECT_TRUE(j[0]["prime"].is_null());
  EXPECT_TRUE(j[0]["target"].is_null());
  EXPECT_EQ(j[0]["valuation"], "inf");
  EXPECT_EQ(emit(rep, ReportFormat::Text), "L26.wz1[n=1] PASS exact\n");
}

TEST(Report, ParseFormat) {
  EXPECT_EQ(parse_format("json"), ReportFormat::Json);
  EXPECT_EQ(parse_format("csv"), ReportFormat::Csv);
  EXPECT_EQ(parse_format("text"), ReportFormat::Text);
  EXPECT_THROW(parse_format("xml"), Error);
}
