#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tdom/descriptor.hpp"
#include "tdom/domination.hpp"

namespace tdom {

std::string_view tool_version();

// One solver or bound result, serialised as a single JSON line.
struct ResultRecord {
  std::string descriptor;  // canonical
  std::string quantity;    // gamma | gammat | upper
  std::int64_t value = 0;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<Label> witness;  // sorted; residues are 1-element labels
  bool optimal = false;
  std::string method;
  std::int64_t elapsed_ms = 0;
  std::uint64_t nodes = 0;
  bool deterministic = false;
  std::string tool_version;
  nlohmann::json extra = nlohmann::json::object();  // command-specific fields
};

nlohmann::json to_json(const ResultRecord& r, bool ucg);
ResultRecord record_from_json(const nlohmann::json& j);  // throws ParseError
std::string to_line(const ResultRecord& r);

// Witness labels of d on g, sorted.
std::vector<Label> witness_labels(const Graph& g, const VertexSet& d);
// Maps labels back onto g's vertices; nullopt if any label is not a vertex of g.
std::optional<VertexSet> witness_set(const Graph& g, const std::vector<Label>& labels);

// Empty string when the record is sound: descriptor canonical, |witness| = value, the
// witness passes the checker for the quantity, and lo <= value <= hi when optimal.
std::string verify_record(const ResultRecord& r, const GraphLimits& limits = {});

}  // namespace tdom
