#include "output.hpp"

#include <charconv>
#include <cmath>

namespace biquad::cli {

namespace {

CensusRow make_row(std::string h, std::string sig, const CensusCell& c) {
  CensusRow row{std::move(h), std::move(sig), c.fields, c.admitting, c.predicted, std::nullopt};
  if (std::isfinite(c.ratio)) row.ratio = c.ratio;
  return row;
}

}  // namespace

CensusOutput to_output(const CensusReport& r) {
  CensusOutput o;
  o.X = r.X;
  o.group = to_string(r.group);
  o.prime_bound = r.prime_bound;
  for (int h = 1; h <= 4; ++h) {
    for (Signature s : {Signature::TotallyReal, Signature::TotallyComplex}) {
      o.rows.push_back(make_row(std::to_string(h), to_string(s), r.at(h, s)));
    }
  }
  for (Signature s : {Signature::TotallyReal, Signature::TotallyComplex}) {
    o.rows.push_back(make_row("all", to_string(s), r.at(s)));
  }
  o.rows.push_back(make_row("all", "all", r.total));
  return o;
}

void to_json(nlohmann::json& j, const CensusRow& r) {
  j = nlohmann::json{{"h", r.h},
                     {"signature", r.signature},
                     {"count_fields", r.count_fields},
                     {"count_G", r.count_G},
                     {"predicted_G", r.predicted_G}};
  j["ratio"] = r.ratio ? nlohmann::json(*r.ratio) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, CensusRow& r) {
  j.at("h").get_to(r.h);
  j.at("signature").get_to(r.signature);
  j.at("count_fields").get_to(r.count_fields);
  j.at("count_G").get_to(r.count_G);
  j.at("predicted_G").get_to(r.predicted_G);
  const auto& ratio = j.at("ratio");
  r.ratio = ratio.is_null() ? std::nullopt : std::optional<double>(ratio.get<double>());
}

void to_json(nlohmann::json& j, const CensusOutput& o) {
  j = nlohmann::json{{"schema_version", o.schema_version},
                     {"command", "census"},
                     {"X", o.X},
                     {"group", o.group},
                     {"prime_bound", o.prime_bound},
                     {"rows", o.rows}};
}

void from_json(const nlohmann::json& j, CensusOutput& o) {
  j.at("schema_version").get_to(o.schema_version);
  j.at("X").get_to(o.X);
  j.at("group").get_to(o.group);
  j.at("prime_bound").get_to(o.prime_bound);
  j.at("rows").get_to(o.rows);
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void write_csv(std::ostream& os, const CensusOutput& o) {
  os << kCensusCsvHeader << "\r\n";
  for (const CensusRow& r : o.rows) {
    os << o.X << ',' << csv_field(r.h) << ',' << csv_field(r.signature) << ',' << r.count_fields << ','
       << r.count_G << ',' << format_double(r.predicted_G) << ',' << (r.ratio ? format_double(*r.ratio) : "")
       << "\r\n";
  }
}

}  // namespace biquad::cli
