#include <string>
#include <vector>

#include "tdom/domination.hpp"

namespace tdom {

namespace {

// Definition-level checks by adjacency queries, sharing nothing with the solvers.
bool dominated_by(const Graph& g, std::size_t v, const std::vector<std::uint32_t>& d, bool closed) {
  for (auto x : d)
    if ((closed && x == v) || g.adjacent(x, v)) return true;
  return false;
}

bool covers(const Graph& g, const std::vector<std::uint32_t>& d, bool closed) {
  for (std::size_t v = 0; v < g.order(); ++v)
    if (!dominated_by(g, v, d, closed)) return false;
  return true;
}

bool minimal_by_definition(const Graph& g, const std::vector<std::uint32_t>& d) {
  if (!covers(g, d, true)) return false;
  for (std::size_t skip = 0; skip < d.size(); ++skip) {
    std::vector<std::uint32_t> smaller;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (i != skip) smaller.push_back(d[i]);
    if (covers(g, smaller, true)) return false;
  }
  return true;
}

// Visits k-subsets of 0..n-1 in lexicographic order until f returns true.
template <typename F>
bool first_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return false;
  std::vector<std::uint32_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<std::uint32_t>(i);
  while (true) {
    if (f(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

SolveResult gamma_oracle(const Graph& g, Quantity q, const OracleCaps& caps) {
  const std::size_t n = g.order();
  if (n == 0) throw PreconditionError("gamma_oracle on an empty graph");
  const std::size_t cap = q == Quantity::upper ? caps.max_vertices_upper : caps.max_vertices_min;
  if (n > cap)
    throw CapExceeded("oracle limited to " + std::to_string(cap) + " vertices, graph has " + std::to_string(n));
  if (q == Quantity::gamma_total && g.has_isolated_vertex())
    throw PreconditionError("graph has an isolated vertex; no total dominating set exists");

  SolveResult r;
  r.quantity = q;
  r.method = Method::oracle;
  r.optimal = true;
  std::vector<std::uint32_t> hit;
  auto accept = [&](const std::vector<std::uint32_t>& s) {
    ++r.nodes;
    bool ok = false;
    switch (q) {
      case Quantity::gamma: ok = covers(g, s, true); break;
      case Quantity::gamma_total: ok = covers(g, s, false); break;
      case Quantity::upper: ok = minimal_by_definition(g, s); break;
    }
    if (ok) hit = s;
    return ok;
  };

  if (q == Quantity::upper) {
    for (std::size_t k = n; k >= 1; --k)
      if (first_subset(n, k, accept)) break;
  } else {
    for (std::size_t k = 1; k <= n; ++k)
      if (first_subset(n, k, accept)) break;
  }
  r.value = hit.size();
  r.witness = Bitset::from_indices(n, hit);
  return r;
}

}  // namespace tdom
