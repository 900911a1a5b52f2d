#include <vector>

#include "tdom/domination.hpp"

namespace tdom {

SolveResult gamma_product(const ProductSpec& spec_in, const Budget& budget, const GraphLimits& limits) {
  const ProductSpec spec = spec_in.canonical();
  const K2Reduction red = k2_reduction(spec);
  if (red.s < 2 || !red.rest) return gamma_exact(product_spec_graph(spec, limits), budget);

  // (K_2)^s x H is 2^(s-1) copies of K_2 x H; component c collects the vertices
  // whose K_2 coordinates satisfy e_i = e_1 xor c_i for i = 2..s.
  std::vector<Factor> reduced = {Factor::make(1, 2)};
  reduced.insert(reduced.end(), red.rest->factors.begin(), red.rest->factors.end());
  const ProductSpec small = ProductSpec::make(reduced);
  const Graph small_graph = product_spec_graph(small, limits);
  SolveResult inner = gamma_exact(small_graph, budget);

  const std::size_t s = red.s;
  const std::uint64_t h_order = red.rest->vertex_count();
  const std::uint64_t n = spec.vertex_count();
  VertexSet lifted(static_cast<std::size_t>(n));
  const std::uint64_t components = std::uint64_t{1} << (s - 1);
  for (std::uint64_t c = 0; c < components; ++c) {
    inner.witness.for_each([&](std::size_t v) {
      const std::uint64_t e1 = v / h_order;
      const std::uint64_t h = v % h_order;
      std::uint64_t prefix = e1;
      for (std::size_t i = 1; i < s; ++i) prefix = prefix * 2 + (e1 ^ ((c >> (i - 1)) & 1U));
      lifted.set(static_cast<std::size_t>(prefix * h_order + h));
    });
  }

  SolveResult r = inner;
  r.method = Method::reduction;
  r.value = inner.value << (s - 1);
  r.witness = std::move(lifted);
  return r;
}

}  // namespace tdom
