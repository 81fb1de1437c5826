#include "bsym_cli/report.hpp"

#include <algorithm>

#include "bsym/error.hpp"

namespace bsym::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
    case Status::skipped: return "skipped";
  }
  return "fail";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "inconclusive") return Status::inconclusive;
  if (s == "skipped") return Status::skipped;
  fail(ErrorKind::InvalidArgument, "unknown status " + s);
}

bool VerificationReport::failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::fail; });
}

Json to_json(const Check& c) {
  Json j;
  j["name"] = c.name;
  j["status"] = to_string(c.status);
  j["reference"] = c.reference;
  j["measured"] = c.measured;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["schema"] = kSchema;
  j["suite"] = r.suite;
  j["config"] = r.config;
  std::size_t counts[4] = {0, 0, 0, 0};
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    ++counts[static_cast<int>(c.status)];
    checks.push_back(to_json(c));
  }
  j["summary"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"inconclusive", counts[2]}, {"skipped", counts[3]}};
  j["checks"] = checks;
  return j;
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  r.suite = j.at("suite").get<std::string>();
  r.config = j.at("config");
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), status_from_string(c.at("status").get<std::string>()),
                        c.at("reference").get<std::string>(), c.at("measured")});
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv(std::ostream& os, const Table& t) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
    os << "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

Format format_from_string(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  fail(ErrorKind::InvalidArgument, "unknown format " + s);
}

Json envelope(const std::string& command, Json config, Json result) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["config"] = std::move(config);
  j["result"] = std::move(result);
  return j;
}

}  // namespace bsym::cli
