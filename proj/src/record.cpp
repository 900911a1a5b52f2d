#include "tdom/record.hpp"

#include <algorithm>
#include <map>

namespace tdom {

using nlohmann::json;

std::string_view tool_version() { return "tdom " TDOM_VERSION; }

json to_json(const ResultRecord& r, bool ucg) {
  json w = json::array();
  for (const auto& l : r.witness) {
    if (ucg && l.size() == 1)
      w.push_back(l[0]);
    else
      w.push_back(l);
  }
  json j = {{"descriptor", r.descriptor}, {"quantity", r.quantity}, {"value", r.value},
            {"lo", r.lo},                 {"hi", r.hi},             {"witness", std::move(w)},
            {"optimal", r.optimal},       {"method", r.method},     {"elapsed_ms", r.elapsed_ms},
            {"nodes", r.nodes},           {"deterministic", r.deterministic},
            {"tool_version", r.tool_version}};
  for (const auto& [k, v] : r.extra.items()) j[k] = v;
  return j;
}

std::string to_line(const ResultRecord& r) {
  return to_json(r, r.descriptor.rfind("ucg:", 0) == 0).dump();
}

ResultRecord record_from_json(const json& j) {
  static const std::vector<std::string> core = {"descriptor", "quantity", "value", "lo", "hi", "witness",
                                                "optimal", "method", "elapsed_ms", "nodes", "deterministic",
                                                "tool_version"};
  try {
    ResultRecord r;
    r.descriptor = j.at("descriptor").get<std::string>();
    r.quantity = j.at("quantity").get<std::string>();
    r.value = j.at("value").get<std::int64_t>();
    r.lo = j.at("lo").get<std::int64_t>();
    r.hi = j.at("hi").get<std::int64_t>();
    for (const auto& w : j.at("witness")) {
      if (w.is_array())
        r.witness.push_back(w.get<Label>());
      else
        r.witness.push_back({w.get<std::int64_t>()});
    }
    r.optimal = j.at("optimal").get<bool>();
    r.method = j.at("method").get<std::string>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    r.nodes = j.value("nodes", std::uint64_t{0});
    r.deterministic = j.value("deterministic", false);
    r.tool_version = j.at("tool_version").get<std::string>();
    for (const auto& [k, v] : j.items())
      if (std::find(core.begin(), core.end(), k) == core.end()) r.extra[k] = v;
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed result record: ") + e.what());
  }
}

std::vector<Label> witness_labels(const Graph& g, const VertexSet& d) {
  std::vector<Label> out;
  d.for_each([&](std::size_t v) { out.push_back(g.labels()[v]); });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<VertexSet> witness_set(const Graph& g, const std::vector<Label>& labels) {
  std::map<Label, std::size_t> index;
  for (std::size_t v = 0; v < g.order(); ++v) index.emplace(g.labels()[v], v);
  VertexSet d(g.order());
  for (const auto& l : labels) {
    auto it = index.find(l);
    if (it == index.end()) return std::nullopt;
    d.set(it->second);
  }
  return d;
}

std::string verify_record(const ResultRecord& r, const GraphLimits& limits) {
  Descriptor desc;
  try {
    desc = parse_descriptor(r.descriptor);
  } catch (const ParseError& e) {
    return e.what();
  }
  if (desc.canonical() != r.descriptor) return "descriptor is not canonical";
  Quantity q;
  try {
    q = parse_quantity(r.quantity);
  } catch (const Error& e) {
    return e.what();
  }
  if (!std::is_sorted(r.witness.begin(), r.witness.end())) return "witness is not sorted";
  if (static_cast<std::int64_t>(r.witness.size()) != r.value) return "witness size differs from value";
  if (r.optimal && (r.value < r.lo || r.value > r.hi)) return "value outside [lo, hi]";
  const Graph g = desc.build(limits);
  const auto d = witness_set(g, r.witness);
  if (!d) return "witness names a vertex outside the graph";
  if (static_cast<std::int64_t>(d->count()) != r.value) return "witness has repeated vertices";
  if (!passes_checker(g, q, *d)) return "witness fails the " + r.quantity + " checker";
  return {};
}

}  // namespace tdom
