#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "epg/verify.hpp"

namespace epg {

inline nlohmann::json to_json(const VerdictReport& r) {
  nlohmann::json j;
  j["label"] = r.label;
  j["claim"] = r.claim;
  j["status"] = std::string(to_string(r.status));
  j["nG"] = r.n_g;
  j["exp"] = r.exponent;
  j["order"] = r.order;
  j["p"] = r.p;
  j["alpha"] = r.alpha;
  if (std::holds_alternative<std::int64_t>(r.witness))
    j["witness"] = std::get<std::int64_t>(r.witness);
  else if (std::holds_alternative<std::string>(r.witness))
    j["witness"] = std::get<std::string>(r.witness);
  else
    j["witness"] = nullptr;
  return j;
}

/// One JSON object per line, in report order.
inline std::string to_jsonl(const std::vector<VerdictReport>& reports) {
  std::string out;
  for (const VerdictReport& r : reports) {
    out += to_json(r).dump();
    out += "\n";
  }
  return out;
}

namespace detail {

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace detail

/// CSV summary with the fixed column set.
inline std::string to_csv(const std::vector<VerdictReport>& reports) {
  std::string out = "label,claim,status,nG,exp,order,p,alpha,witness\n";
  for (const VerdictReport& r : reports) {
    out += detail::csv_escape(r.label);
    out += ",";
    out += detail::csv_escape(r.claim);
    out += ",";
    out += std::string(to_string(r.status));
    out += ",";
    out += std::to_string(r.n_g);
    out += ",";
    out += std::to_string(r.exponent);
    out += ",";
    out += std::to_string(r.order);
    out += ",";
    out += std::to_string(r.p);
    out += ",";
    out += std::to_string(r.alpha);
    out += ",";
    if (std::holds_alternative<std::int64_t>(r.witness))
      out += std::to_string(std::get<std::int64_t>(r.witness));
    else if (std::holds_alternative<std::string>(r.witness))
      out += detail::csv_escape(std::get<std::string>(r.witness));
    out += "\n";
  }
  return out;
}

}  // namespace epg
