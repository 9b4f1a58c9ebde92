#include "ahs/report.hpp"

#include <algorithm>
#include <sstream>

namespace ahs {

void Report::sort_cases() {
  std::sort(cases.begin(), cases.end(),
            [](const CaseRecord& a, const CaseRecord& b) {
              return a.key < b.key;
            });
  for (Report& c : children) c.sort_cases();
}

long Report::count_verdict(const std::string& v) const {
  long n = 0;
  for (const CaseRecord& c : cases)
    if (c.verdict == v) ++n;
  for (const Report& c : children) n += c.count_verdict(v);
  return n;
}

std::string Report::aggregate_verdict() const {
  if (count_verdict("FAIL") > 0) return "FAIL";
  if (count_verdict("DEGENERATE") > 0) return "DEGENERATE";
  return "PASS";
}

namespace {

ordered_json config_echo(const RunConfig& cfg) {
  // workers and output routing deliberately left out: they must not change
  // report bytes.
  ordered_json c;
  c["seed"] = cfg.seed;
  c["q_order"] = cfg.q_order;
  c["jet_order"] = cfg.jet_order;
  c["tol"] = cfg.tol;
  c["height_min"] = cfg.height_min;
  c["height_max"] = cfg.height_max;
  c["words"] = cfg.words;
  c["word_len"] = cfg.word_len;
  c["points"] = cfg.points;
  c["n_lo"] = cfg.n_lo;
  c["n_hi"] = cfg.n_hi;
  return c;
}

ordered_json report_body(const Report& r) {
  ordered_json j;
  j["suite"] = r.suite;
  ordered_json cases = ordered_json::array();
  for (const CaseRecord& c : r.cases) {
    ordered_json e;
    e["key"] = c.key;
    e["verdict"] = c.verdict;
    e["residual"] = c.residual;
    if (!c.detail.empty()) e["detail"] = c.detail;
    cases.push_back(std::move(e));
  }
  j["cases"] = std::move(cases);
  if (!r.metrics.empty()) {
    ordered_json m;
    for (const auto& [k, v] : r.metrics) m[k] = v;
    j["metrics"] = std::move(m);
  }
  if (!r.labels.empty()) {
    ordered_json m;
    for (const auto& [k, v] : r.labels) m[k] = v;
    j["labels"] = std::move(m);
  }
  if (!r.children.empty()) {
    ordered_json kids = ordered_json::array();
    for (const Report& c : r.children) kids.push_back(report_body(c));
    j["sub_reports"] = std::move(kids);
  }
  ordered_json agg;
  agg["pass"] = r.count_verdict("PASS");
  agg["fail"] = r.count_verdict("FAIL");
  agg["degenerate"] = r.count_verdict("DEGENERATE");
  agg["verdict"] = r.aggregate_verdict();
  j["aggregate"] = std::move(agg);
  return j;
}

void csv_rows(const Report& r, const std::string& prefix,
              std::ostringstream& os) {
  for (const CaseRecord& c : r.cases) {
    std::string detail = c.detail;
    for (char& ch : detail)
      if (ch == ',' || ch == '\n') ch = ';';
    os << prefix << ',' << c.key << ',' << c.verdict << ','
       << format_double(c.residual) << ',' << detail << '\n';
  }
  for (const Report& c : r.children)
    csv_rows(c, prefix.empty() ? c.suite : prefix + "/" + c.suite, os);
}

}  // namespace

ordered_json report_to_json(const Report& r, const RunConfig& cfg) {
  ordered_json j = report_body(r);
  j["config"] = config_echo(cfg);
  return j;
}

std::string report_to_csv(const Report& r) {
  std::ostringstream os;
  os << "suite,case,verdict,residual,detail\n";
  csv_rows(r, r.suite, os);
  return os.str();
}

int exit_code_for(const Report& r) {
  const std::string v = r.aggregate_verdict();
  if (v == "FAIL") return 1;
  if (v == "DEGENERATE") return 2;
  return 0;
}

}  // namespace ahs
