#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace bsym::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "bsym-report/1";

enum class Status { pass, fail, inconclusive, skipped };
std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct Check {
  std::string name;
  Status status = Status::pass;
  std::string reference;
  Json measured = Json::object();

  friend bool operator==(const Check&, const Check&) = default;
};

struct VerificationReport {
  std::string suite;
  Json config = Json::object();
  std::vector<Check> checks;

  bool failed() const;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

Json to_json(const Check& c);
Json to_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& j);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// RFC 4180 field quoting.
std::string csv_field(const std::string& s);
void write_csv(std::ostream& os, const Table& t);

enum class Format { json, csv, text };
Format format_from_string(const std::string& s);

/// Envelope shared by every subcommand.
Json envelope(const std::string& command, Json config, Json result);

}  // namespace bsym::cli
