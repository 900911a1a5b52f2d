#include <algorithm>
#include <string>

#include "tdom/theory.hpp"

namespace tdom::theory {

std::string_view to_string(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::dominating: return "dominating";
    case ConstructionKind::total_dominating: return "total_dominating";
    case ConstructionKind::minimal_dominating: return "minimal_dominating";
  }
  return "?";
}

namespace {

// Sorted complete-graph sizes n_1 <= ... <= n_t of a product of complete graphs.
std::vector<std::int64_t> complete_sizes(const ProductSpec& spec, std::string_view what) {
  if (!spec.all_complete())
    throw PreconditionError(std::string(what) + " requires a product of complete graphs (all a_i = 1)");
  auto sizes = spec.complete_sizes();
  if (!std::is_sorted(sizes.begin(), sizes.end()))
    throw PreconditionError(std::string(what) + " requires n_1 <= n_2 <= ... <= n_t");
  return sizes;
}

[[noreturn]] void violated(std::string_view what, const std::string& inequality) {
  throw PreconditionError(std::string(what) + ": hypothesis fails: " + inequality);
}

ConstructionResult finish(Graph g, const std::vector<std::vector<std::int64_t>>& tuples, const ProductSpec& spec,
                          ConstructionKind kind) {
  VertexSet d(g.order());
  for (const auto& t : tuples) d.set(static_cast<std::size_t>(spec.index_of(t)));
  ConstructionResult r{std::move(g), std::move(d), kind, false};
  switch (kind) {
    case ConstructionKind::dominating: r.verified = is_dominating(r.graph, r.vertex_set); break;
    case ConstructionKind::total_dominating: r.verified = is_total_dominating(r.graph, r.vertex_set); break;
    case ConstructionKind::minimal_dominating: r.verified = is_minimal_dominating(r.graph, r.vertex_set); break;
  }
  return r;
}

}  // namespace

ConstructionResult consecutive_residue_set(std::int64_t n) {
  if (n < 2) throw PreconditionError("consecutive_residue_set requires n >= 2");
  const auto g = static_cast<std::int64_t>(numth::jacobsthal(static_cast<std::uint64_t>(n)));
  ConstructionResult r{unitary_cayley(n), VertexSet(static_cast<std::size_t>(n)), ConstructionKind::total_dominating,
                       false};
  for (std::int64_t i = 0; i < g && i < n; ++i) r.vertex_set.set(static_cast<std::size_t>(i));
  r.verified = is_total_dominating(r.graph, r.vertex_set);
  return r;
}

ConstructionResult diagonal_set(const ProductSpec& spec, std::int64_t m) {
  constexpr std::string_view what = "diagonal_set";
  const auto sizes = complete_sizes(spec, what);
  const auto t = static_cast<std::int64_t>(sizes.size());
  if (m < 0) violated(what, "m >= 0");
  if (t < 3) violated(what, "t >= 3 (t = " + std::to_string(t) + ")");
  if (!(t + m < sizes[0] * (m + 1)))
    violated(what, "(t+m)/(m+1) < n_1 with t+m = " + std::to_string(t + m) + ", m+1 = " + std::to_string(m + 1) +
                       ", n_1 = " + std::to_string(sizes[0]));
  if (!(t + m < sizes[1]))
    violated(what, "t+m < n_2 with t+m = " + std::to_string(t + m) + ", n_2 = " + std::to_string(sizes[1]));

  std::vector<std::vector<std::int64_t>> tuples;
  for (std::int64_t r = 0; r <= t + m; ++r) {
    std::vector<std::int64_t> y;
    for (auto ni : sizes) y.push_back(r % ni);
    tuples.push_back(std::move(y));
  }
  return finish(product_spec_graph(spec), tuples, spec, ConstructionKind::total_dominating);
}

ConstructionResult theorem3_set(const ProductSpec& spec) {
  constexpr std::string_view what = "theorem3_set";
  const auto sizes = complete_sizes(spec, what);
  const auto t = static_cast<std::int64_t>(sizes.size());
  if (t < 4) violated(what, "t >= 4 (t = " + std::to_string(t) + ")");
  if (sizes[1] < 3) violated(what, "n_2 >= 3 (n_2 = " + std::to_string(sizes[1]) + ")");
  if (sizes[2] < t + 1)
    violated(what, "n_3 >= t+1 (n_3 = " + std::to_string(sizes[2]) + ", t+1 = " + std::to_string(t + 1) + ")");
  if (sizes[0] != t) violated(what, "n_1 = t (n_1 = " + std::to_string(sizes[0]) + ", t = " + std::to_string(t) + ")");

  std::vector<std::vector<std::int64_t>> tuples;
  for (std::int64_t r = 0; r < t; ++r) {
    std::vector<std::int64_t> y;
    for (auto ni : sizes) y.push_back(r % ni);
    tuples.push_back(std::move(y));
  }
  std::vector<std::int64_t> a(static_cast<std::size_t>(t), t);
  std::vector<std::int64_t> b(static_cast<std::size_t>(t), t);
  a[0] = 0;
  a[1] = 1;
  b[0] = 1;
  b[1] = 0;
  tuples.push_back(std::move(a));
  tuples.push_back(std::move(b));
  return finish(product_spec_graph(spec), tuples, spec, ConstructionKind::dominating);
}

ConstructionResult cube_corner_set(const ProductSpec& spec) {
  constexpr std::string_view what = "cube_corner_set";
  const auto sizes = complete_sizes(spec, what);
  if (sizes.size() != 4) violated(what, "t = 4 (t = " + std::to_string(sizes.size()) + ")");
  if (sizes[0] != 2) violated(what, "n_1 = 2 (n_1 = " + std::to_string(sizes[0]) + ")");

  // The four corners {(0,0,0),(0,1,1),(1,0,1),(1,1,0)} of the last three factors,
  // each paired with both vertices of K_2.
  static const std::int64_t corners[4][3] = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  std::vector<std::vector<std::int64_t>> tuples;
  for (std::int64_t head = 0; head < 2; ++head)
    for (const auto& c : corners) tuples.push_back({head, c[0], c[1], c[2]});
  return finish(product_spec_graph(spec), tuples, spec, ConstructionKind::dominating);
}

ConstructionResult prop2_set(const ProductSpec& spec) {
  if (spec.factors.empty()) throw PreconditionError("prop2_set: empty spec");
  const ProductSpec canon = spec.canonical();
  if (!(canon == spec)) throw PreconditionError("prop2_set requires a canonical spec (b_1 <= ... <= b_t)");
  Graph g = product_spec_graph(spec);
  const auto b1 = spec.factors[0].b;
  VertexSet d(g.order());
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.labels()[v][0] % b1 == 0) d.set(v);
  ConstructionResult r{std::move(g), std::move(d), ConstructionKind::minimal_dominating, false};
  r.verified = is_minimal_dominating(r.graph, r.vertex_set);
  return r;
}

}  // namespace tdom::theory
