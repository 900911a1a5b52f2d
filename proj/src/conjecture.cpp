#include <map>

#include "tdom/theory.hpp"

namespace tdom::theory {

ConjectureRecord conjecture_check(const ProductSpec& input, const Budget& budget) {
  const ProductSpec spec = input.canonical();
  const Graph g = product_spec_graph(spec);
  const auto n = g.order();
  const auto b1 = static_cast<std::size_t>(spec.factors[0].b);

  ConjectureRecord rec;
  rec.conjectured = static_cast<std::int64_t>(n / b1);
  UpperOptions opts;
  opts.cliques = clique_partition(spec);
  opts.on_minimal = [&](const VertexSet&, std::size_t lonely, std::size_t social) {
    ++rec.minimal_sets_seen;
    if (b1 * lonely + 2 * social > n) rec.packing_violated = true;
  };
  rec.exact = gamma_upper_exact(g, budget, opts);
  rec.agrees = rec.exact.optimal && static_cast<std::int64_t>(rec.exact.value) == rec.conjectured;
  return rec;
}

bool lemma4_holds(const ProductSpec& spec, const Graph& g, const VertexSet& witness) {
  const std::size_t t = spec.t();
  // (coordinate, value) -> members carrying that value
  std::map<std::pair<std::size_t, std::int64_t>, std::vector<std::size_t>> fibres;
  witness.for_each([&](std::size_t v) {
    const auto& label = g.labels()[v];
    for (std::size_t l = 0; l < t; ++l) fibres[{l, label[l]}].push_back(v);
  });
  std::vector<std::pair<std::size_t, const std::vector<std::size_t>*>> pairs;
  for (const auto& [key, members] : fibres) {
    if (members.size() > 2) return false;
    if (members.size() == 2) pairs.push_back({key.first, &members});
  }
  // Two-member fibres on different coordinates must share a member.
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t k = i + 1; k < pairs.size(); ++k) {
      if (pairs[i].first == pairs[k].first) continue;
      const auto& x = *pairs[i].second;
      const auto& y = *pairs[k].second;
      if (x[0] != y[0] && x[0] != y[1] && x[1] != y[0] && x[1] != y[1]) return false;
    }
  return true;
}

}  // namespace tdom::theory
