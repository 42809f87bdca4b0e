#include "mlab/report_io.hpp"

#include <sstream>

namespace mlab {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["claim"] = r.claim_id;
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = std::move(params);
  j["expected"] = r.expected;
  j["computed"] = r.computed;
  j["verdict"] = to_string(r.verdict);
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

std::string params_string(const VerificationReport& r, char sep) {
  std::string out;
  for (const auto& [k, v] : r.params) {
    if (!out.empty()) out += sep;
    out += k + "=" + std::to_string(v);
  }
  return out;
}

std::string render_json(const std::vector<VerificationReport>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  return arr.dump(2) + "\n";
}

std::string render_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "claim,params,expected,computed,verdict,elapsed_ms\n";
  for (const auto& r : reports)
    os << csv_field(r.claim_id) << ',' << csv_field(params_string(r)) << ',' << csv_field(r.expected) << ','
       << csv_field(r.computed) << ',' << to_string(r.verdict) << ',' << r.elapsed_ms << '\n';
  return os.str();
}

std::string render_text(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& r : reports) {
    os << to_string(r.verdict) << "  " << r.claim_id << "  " << params_string(r, ' ') << "  expected=" << r.expected
       << "  computed=" << r.computed;
    if (r.elapsed_ms) os << "  " << r.elapsed_ms << "ms";
    os << '\n';
    (r.verdict == Verdict::Pass ? pass : r.verdict == Verdict::Fail ? fail : skipped)++;
  }
  os << reports.size() << " reports: " << pass << " pass, " << fail << " fail, " << skipped << " skipped\n";
  return os.str();
}

std::string render_reports(const std::vector<VerificationReport>& reports, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return render_json(reports);
    case ReportFormat::Csv: return render_csv(reports);
    case ReportFormat::Text: return render_text(reports);
  }
  return {};
}

}  // namespace mlab
