#include "support.hpp"

#include <algorithm>

#include "tdom/descriptor.hpp"

namespace tdom::testing {

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Bitset> adj(n, Bitset(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) {
        adj[u].set(v);
        adj[v].set(u);
      }
  return Graph::from_adjacency(std::move(adj));
}

VertexSet random_subset(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  VertexSet s(n);
  for (std::size_t v = 0; v < n; ++v)
    if (coin(rng)) s.set(v);
  return s;
}

namespace {

void extend(std::vector<Factor>& cur, std::uint64_t size, std::uint64_t max_vertices, std::size_t max_t,
            bool complete_only, std::vector<ProductSpec>& out) {
  if (!cur.empty()) out.push_back(ProductSpec::make(cur));
  if (cur.size() == max_t) return;
  // Next factor must be >= the last in (b, a) order.
  for (std::int64_t b = cur.empty() ? 2 : cur.back().b; static_cast<std::uint64_t>(b) * size <= max_vertices; ++b) {
    std::int64_t a0 = (!cur.empty() && cur.back().b == b) ? cur.back().a : 1;
    for (std::int64_t a = a0; static_cast<std::uint64_t>(a * b) * size <= max_vertices; ++a) {
      if (complete_only && a != 1) break;
      cur.push_back(Factor::make(a, b));
      extend(cur, size * static_cast<std::uint64_t>(a * b), max_vertices, max_t, complete_only, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<ProductSpec> all_specs(std::uint64_t max_vertices, std::size_t max_t) {
  std::vector<ProductSpec> out;
  std::vector<Factor> cur;
  extend(cur, 1, max_vertices, max_t, false, out);
  return out;
}

std::vector<ProductSpec> all_complete_specs(std::uint64_t max_vertices, std::size_t max_t) {
  std::vector<ProductSpec> out;
  std::vector<Factor> cur;
  extend(cur, 1, max_vertices, max_t, true, out);
  return out;
}

ProductSpec random_spec(std::mt19937_64& rng, std::uint64_t max_vertices, bool complete_only) {
  std::vector<Factor> fs;
  std::uint64_t size = 1;
  std::uniform_int_distribution<int> stop(0, 3);
  while (true) {
    std::uint64_t room = max_vertices / size;
    if (room < 2) break;
    std::int64_t bmax = static_cast<std::int64_t>(std::min<std::uint64_t>(room, 9));
    std::int64_t b = std::uniform_int_distribution<std::int64_t>(2, bmax)(rng);
    std::int64_t amax = complete_only ? 1 : static_cast<std::int64_t>(std::min<std::uint64_t>(room / b, 3));
    std::int64_t a = std::uniform_int_distribution<std::int64_t>(1, amax)(rng);
    fs.push_back(Factor::make(a, b));
    size *= static_cast<std::uint64_t>(a * b);
    if (stop(rng) == 0) break;
  }
  if (fs.empty()) fs.push_back(Factor::make(1, 2));
  std::shuffle(fs.begin(), fs.end(), rng);
  return ProductSpec::make(fs).canonical();
}

std::string describe(const ProductSpec& spec) { return render_spec(spec); }

}  // namespace tdom::testing
