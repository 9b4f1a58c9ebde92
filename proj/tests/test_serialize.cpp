#include <string>
#include <vector>

#include "doctest.h"

#include "ahs/report.hpp"
#include "ahs/serialize.hpp"

using namespace ahs;

TEST_CASE("rational jets survive a JSON round trip exactly") {
  JetQ j(rat(3, 7), {rat(1), rat(-5, 3), rat(0), rat(22, 7)});
  const ordered_json v = jet_to_json(j);
  const JetQ back = jetq_from_json(v);
  REQUIRE(back.order() == j.order());
  CHECK(back.base() == j.base());
  for (int k = 0; k <= j.order(); ++k) CHECK(back[k] == j[k]);

  // Abstract base points travel as null.
  JetQ free_base(std::nullopt, {rat(2), rat(9, 4)});
  const JetQ back2 = jetq_from_json(jet_to_json(free_base));
  CHECK_FALSE(back2.base().has_value());
  CHECK(back2[1] == rat(9, 4));
}

TEST_CASE("complex jets round trip bit for bit") {
  JetC j(Cplx(0.125, -3.5), {Cplx(1.0, 0.0), Cplx(-0.7, 0.31)});
  const JetC back = jetc_from_json(jet_to_json(j));
  REQUIRE(back.order() == 1);
  CHECK(back.base() == j.base());
  CHECK(back[0] == j[0]);
  CHECK(back[1] == j[1]);
}

TEST_CASE("matrices and scalars round trip") {
  const IMat g{3, -1, 7, -2};
  const IMat gb = imat_from_json(imat_to_json(g));
  CHECK(gb == g);

  const Cplx z(-0.1, 2.25);
  CHECK(cplx_from_json(cplx_to_json(z)) == z);

  const Rat r = rat(-355, 113);
  CHECK(rat_from_json(rat_to_json(r)) == r);
}

TEST_CASE("q-expansions round trip exactly") {
  QSeries s = QSeries::zeros(4);
  s.a[0] = rat(1);
  s.a[1] = rat(-24);
  s.a[3] = rat(7, 5);
  const QSeries back = qseries_from_json(qseries_to_json(s));
  REQUIRE(back.a.size() == s.a.size());
  for (std::size_t i = 0; i < s.a.size(); ++i) CHECK(back.a[i] == s.a[i]);
}

TEST_CASE("double formatting is shortest and byte stable") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-2.5e-7) == format_double(-2.5e-7));
  // Round-trip property: parsing the text recovers the exact bits.
  for (double x : {3.141592653589793, 1e-300, -7.25, 0.30000000000000004}) {
    CHECK(std::stod(format_double(x)) == x);
  }
}

TEST_CASE("reports aggregate verdicts conservatively") {
  Report r;
  r.suite = "demo";
  r.cases.push_back({"b", "PASS", 0.0, ""});
  r.cases.push_back({"a", "DEGENERATE", 0.0, ""});
  CHECK(r.aggregate_verdict() == "DEGENERATE");
  r.cases.push_back({"c", "FAIL", 0.5, "boom"});
  CHECK(r.aggregate_verdict() == "FAIL");
  CHECK(r.count_verdict("PASS") == 1);

  r.sort_cases();
  CHECK(r.cases.front().key == "a");
  CHECK(exit_code_for(r) == 1);

  Report clean;
  clean.cases.push_back({"x", "PASS", 0.0, ""});
  CHECK(exit_code_for(clean) == 0);
  Report degen;
  degen.cases.push_back({"x", "DEGENERATE", 0.0, ""});
  CHECK(exit_code_for(degen) == 2);
}

TEST_CASE("nested reports serialize with a config echo") {
  Report parent;
  parent.suite = "all";
  Report child;
  child.suite = "inner";
  child.cases.push_back({"k", "PASS", 1.25e-9, "ok"});
  child.metrics.emplace_back("residual_max", 1.25e-9);
  child.labels.emplace_back("note", "fixed");
  parent.children.push_back(child);

  RunConfig cfg;
  cfg.seed = 99;
  cfg.workers = 8;          // execution detail, must not appear
  cfg.out_path = "/tmp/x";  // likewise
  const ordered_json v = report_to_json(parent, cfg);
  const std::string text = v.dump(2);
  CHECK(text.find("workers") == std::string::npos);
  CHECK(text.find("/tmp/x") == std::string::npos);
  CHECK(text.find("\"seed\"") != std::string::npos);
  CHECK(text.find("inner") != std::string::npos);
  CHECK(text.find("residual_max") != std::string::npos);

  const std::string csv = report_to_csv(parent);
  CHECK(csv.find("inner") != std::string::npos);
  CHECK(csv.find("PASS") != std::string::npos);
}
