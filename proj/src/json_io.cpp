#include "crslab/json_io.hpp"

#include <json.hpp>

#include "crslab/errors.hpp"

namespace crslab::crs {

namespace {

using nlohmann::json;

json gens_to_json(const TruncSubgroup& s) {
  json gens = json::array();
  for (const auto& row : s.gens()) {
    json jrow = json::array();
    for (std::uint64_t v : row) jrow.push_back(v);
    gens.push_back(std::move(jrow));
  }
  return gens;
}

json parse_or_throw(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw domain_error("malformed JSON");
  return j;
}

}  // namespace

std::string distribution_to_json(const SubgroupDistribution& dist, int indent) {
  json doc;
  doc["modulus"] = dist.modulus();
  doc["rank"] = dist.rank();
  json entries = json::array();
  for (const auto& [subgroup, prob] : dist.entries()) {
    json e;
    e["gens"] = gens_to_json(subgroup);
    e["prob"] = rational_string(prob);
    entries.push_back(std::move(e));
  }
  doc["entries"] = std::move(entries);
  return doc.dump(indent);
}

SubgroupDistribution distribution_from_json(const std::string& text) {
  json doc = parse_or_throw(text);
  try {
    const std::uint64_t modulus = doc.at("modulus").get<std::uint64_t>();
    const std::uint32_t rank = doc.at("rank").get<std::uint32_t>();
    SubgroupDistribution::Table table;
    for (const auto& e : doc.at("entries")) {
      ZRowList rows;
      for (const auto& jrow : e.at("gens")) {
        rows.push_back(jrow.get<ZRow>());
      }
      TruncSubgroup s(modulus, rank, std::move(rows));
      table[s] += parse_rational(e.at("prob").get<std::string>());
    }
    return SubgroupDistribution(modulus, rank, std::move(table));
  } catch (const json::exception& ex) {
    throw domain_error(std::string("bad distribution document: ") + ex.what());
  }
}

std::string subgroup_to_json_line(const TruncSubgroup& s) {
  json doc;
  doc["modulus"] = s.modulus();
  doc["rank"] = s.rank();
  doc["gens"] = gens_to_json(s);
  return doc.dump();
}

SequenceDescriptor descriptor_from_json(const std::string& text) {
  json doc = parse_or_throw(text);
  SequenceDescriptor seq;
  try {
    const std::string n_trend = doc.at("n_trend").get<std::string>();
    if (n_trend == "diverges") {
      seq.n_trend = SequenceDescriptor::Trend::diverges;
      return seq;
    }
    if (n_trend != "constant") throw domain_error("n_trend must be 'constant' or 'diverges'");
    seq.n_trend = SequenceDescriptor::Trend::constant;
    seq.n = doc.at("n").get<std::uint64_t>();
    const std::string mo = doc.value("maxorder_trend", std::string("bounded"));
    if (mo == "diverges") {
      seq.maxorder_trend = SequenceDescriptor::Trend::diverges;
      return seq;
    }
    if (mo != "bounded") throw domain_error("maxorder_trend must be 'bounded' or 'diverges'");
    seq.maxorder_trend = SequenceDescriptor::Trend::constant;
    if (doc.contains("stable")) {
      seq.stable_part =
          finab::FinAbGroup::from_orders(doc.at("stable").get<std::vector<std::uint64_t>>());
    }
    if (doc.contains("growing")) {
      seq.growing_blocks = doc.at("growing").get<std::vector<std::uint64_t>>();
    }
  } catch (const json::exception& ex) {
    throw domain_error(std::string("bad descriptor document: ") + ex.what());
  }
  seq.validate();
  return seq;
}

}  // namespace crslab::crs
