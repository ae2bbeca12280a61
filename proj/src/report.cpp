#include "qwol/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "qwol/errors.hpp"

namespace qwol {

namespace {

using Json = nlohmann::ordered_json;

Json parameter_json(const std::vector<std::int64_t>& p) {
  if (p.size() == 1) return p.front();
  return Json(p);
}

std::vector<std::int64_t> parameter_from_json(const Json& j) {
  if (j.is_array()) return j.get<std::vector<std::int64_t>>();
  return {j.get<std::int64_t>()};
}

Json verdict_json(const CongruenceVerdict& v) {
  Json j;
  j["claim"] = claim_name(v.claim);
  j["parameter"] = parameter_json(v.parameter);
  j["holds"] = v.holds;
  j["modulus"] = v.modulus.to_canonical();
  j["residue_witness"] = v.residue_witness.to_canonical();
  j["notes"] = v.notes;
  return j;
}

Json header_json(const CheckReport& r, const FormatOptions& options) {
  Json j;
  j["type"] = "report";
  j["tool_version"] = r.tool_version;
  j["claim"] = r.claim;
  Json params = Json::array();
  for (const auto& p : r.parameters_run) params.push_back(parameter_json(p));
  j["parameters_run"] = std::move(params);
  j["verdict_count"] = r.verdicts.size();
  j["all_hold"] = r.all_hold;
  if (options.timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

std::string csv_field(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

void append_json(std::ostringstream& os, const CheckReport& r, const FormatOptions& options) {
  os << header_json(r, options).dump() << '\n';
  for (const auto& v : r.verdicts) os << verdict_json(v).dump() << '\n';
}

void append_csv_rows(std::ostringstream& os, const CheckReport& r) {
  for (const auto& v : r.verdicts) {
    os << claim_name(v.claim) << ',' << parameter_label(v.parameter) << ',' << (v.holds ? "true" : "false") << ','
       << csv_field(v.notes) << '\n';
  }
}

void append_text(std::ostringstream& os, const CheckReport& r, const FormatOptions& options) {
  std::size_t passed = 0;
  for (const auto& v : r.verdicts) passed += v.holds ? 1 : 0;
  os << "qwol " << r.tool_version << "  claim " << r.claim << "  cases " << r.verdicts.size() << '/'
     << r.parameters_run.size() << '\n';

  std::size_t w_claim = 5, w_param = 9, w_notes = 5;
  for (const auto& v : r.verdicts) {
    w_claim = std::max(w_claim, claim_name(v.claim).size());
    w_param = std::max(w_param, parameter_label(v.parameter).size());
    w_notes = std::max(w_notes, v.notes.size());
  }
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(s.size(), w), ' ');
    return s;
  };
  for (const auto& v : r.verdicts) {
    os << pad(std::string(claim_name(v.claim)), w_claim) << "  " << pad(parameter_label(v.parameter), w_param)
       << "  " << pad(v.notes, w_notes) << "  " << (v.holds ? "OK" : "FAIL") << '\n';
  }
  os << "summary: " << passed << '/' << r.verdicts.size() << " hold; all_hold=" << (r.all_hold ? "true" : "false");
  if (options.timing) os << "; elapsed_ms=" << r.elapsed_ms;
  os << '\n';
}

CongruenceVerdict verdict_from_json(const Json& j) {
  CongruenceVerdict v;
  auto claim = claim_from_name(j.at("claim").get<std::string>());
  if (!claim) throw ParseError("unknown claim in report: " + j.at("claim").get<std::string>());
  v.claim = *claim;
  v.parameter = parameter_from_json(j.at("parameter"));
  v.holds = j.at("holds").get<bool>();
  v.modulus = Polynomial::from_canonical(j.at("modulus").get<std::vector<std::string>>());
  v.residue_witness = Polynomial::from_canonical(j.at("residue_witness").get<std::vector<std::string>>());
  v.notes = j.at("notes").get<std::string>();
  return v;
}

}  // namespace

ReportFormat parse_format(std::string_view name) {
  if (name == "text") return ReportFormat::kText;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  throw ParseError("unknown report format '" + std::string(name) + "'");
}

std::string parameter_label(std::span<const std::int64_t> parameter) {
  std::string out;
  for (std::size_t i = 0; i < parameter.size(); ++i) {
    if (i > 0) out += ':';
    out += std::to_string(parameter[i]);
  }
  return out;
}

std::string format_report(const CheckReport& report, ReportFormat format, FormatOptions options) {
  return format_reports(std::span(&report, 1), format, options);
}

std::string format_reports(std::span<const CheckReport> reports, ReportFormat format, FormatOptions options) {
  std::ostringstream os;
  switch (format) {
    case ReportFormat::kCsv:
      os << "claim,parameter,holds,notes\n";
      for (const auto& r : reports) append_csv_rows(os, r);
      break;
    case ReportFormat::kJson:
      for (const auto& r : reports) append_json(os, r, options);
      break;
    case ReportFormat::kText:
      for (const auto& r : reports) append_text(os, r, options);
      break;
  }
  return os.str();
}

std::vector<CheckReport> parse_json_reports(std::string_view text) {
  std::vector<CheckReport> reports;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
      if (j.contains("type") && j["type"] == "report") {
        CheckReport r;
        r.tool_version = j.at("tool_version").get<std::string>();
        r.claim = j.at("claim").get<std::string>();
        for (const auto& p : j.at("parameters_run")) r.parameters_run.push_back(parameter_from_json(p));
        r.all_hold = j.at("all_hold").get<bool>();
        if (j.contains("elapsed_ms")) r.elapsed_ms = j["elapsed_ms"].get<std::int64_t>();
        reports.push_back(std::move(r));
      } else {
        if (reports.empty()) throw ParseError("verdict line before any report header");
        reports.back().verdicts.push_back(verdict_from_json(j));
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("malformed report line: ") + e.what());
    }
  }
  return reports;
}

}  // namespace qwol
