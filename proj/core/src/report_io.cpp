#include "permsq/report_io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace permsq {

namespace {

using nlohmann::json;

const char* const kPsLabels[] = {"PS1", "PS2", "PS3", "OE1/PS", "OE2/PS", "OE3/PS"};

json checks_to_json(const std::vector<IdentityCheck>& checks, bool with_pass) {
  json out = json::array();
  for (const auto& c : checks) {
    json item = {{"name", c.name}, {"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}};
    if (with_pass) item["pass"] = c.pass();
    out.push_back(std::move(item));
  }
  return out;
}

Count parse_count(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("count must be a decimal string");
  const auto s = j.get<std::string>();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("malformed count \"" + s + "\"");
  return Count(s);
}

}  // namespace

std::vector<std::pair<std::string, Count>> census_values(const CensusReport& r) {
  std::vector<std::pair<std::string, Count>> out;
  const auto& labels = all_labels();
  for (std::size_t i = 0; i < 6; ++i) out.emplace_back(labels[i].to_string(), r.all[i]);
  for (std::size_t i = 0; i < 6; ++i) out.emplace_back(kPsLabels[i], r.ps[i]);
  out.emplace_back("EE", r.ee_total);
  out.emplace_back("OE", r.oe_total);
  out.emplace_back("alpha", r.alpha);
  out.emplace_back("total", r.total());
  return out;
}

std::string census_to_csv(const CensusReport& r) {
  std::string out;
  for (const auto& [label, value] : census_values(r))
    out += std::to_string(r.n) + "," + label + "," + value.str() + "\n";
  return out;
}

std::string census_to_json(const CensusReport& r) {
  json labels = json::object();
  for (const auto& [label, value] : census_values(r)) labels[label] = value.str();
  json j = {{"n", r.n}, {"labels", labels}, {"verdicts", checks_to_json(r.verdicts, true)}};
  return j.dump();
}

CensusReport census_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("census JSON: ") + e.what());
  }
  try {
    CensusReport r;
    r.n = j.at("n").get<int>();
    const auto& labels = j.at("labels");
    const auto& names = all_labels();
    for (std::size_t i = 0; i < 6; ++i) {
      r.all[i] = parse_count(labels.at(names[i].to_string()));
      r.ps[i] = parse_count(labels.at(kPsLabels[i]));
    }
    r.ee_total = parse_count(labels.at("EE"));
    r.oe_total = parse_count(labels.at("OE"));
    r.alpha = parse_count(labels.at("alpha"));
    for (const auto& c : j.at("verdicts"))
      r.verdicts.push_back({c.at("name").get<std::string>(), parse_count(c.at("lhs")), parse_count(c.at("rhs"))});
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("census JSON: ") + e.what());
  }
}

std::string verdict_to_json(const IdentityVerdict& v) {
  json j = {{"identity", identity_name(v.identity)},
            {"n", v.n},
            {"pass", v.pass()},
            {"checks", checks_to_json(v.checks, false)}};
  return j.dump();
}

}  // namespace permsq
