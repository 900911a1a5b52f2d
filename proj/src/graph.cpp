#include "tdom/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "tdom/errors.hpp"
#include "tdom/numth.hpp"

namespace tdom {

Factor Factor::make(std::int64_t a, std::int64_t b) {
  if (a < 1) throw PreconditionError("K[a,b] requires a >= 1, got a = " + std::to_string(a));
  if (b < 2) throw PreconditionError("K[a,b] requires b >= 2, got b = " + std::to_string(b));
  numth::checked_mul(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  return {a, b};
}

ProductSpec ProductSpec::make(std::vector<Factor> factors) {
  if (factors.empty()) throw PreconditionError("product spec must have at least one factor");
  for (const Factor& f : factors) Factor::make(f.a, f.b);
  ProductSpec s{std::move(factors), false};
  s.canonical_order = std::is_sorted(s.factors.begin(), s.factors.end());
  return s;
}

ProductSpec ProductSpec::canonical() const {
  ProductSpec s = *this;
  std::stable_sort(s.factors.begin(), s.factors.end());
  s.canonical_order = true;
  return s;
}

std::uint64_t ProductSpec::vertex_count() const {
  std::uint64_t n = 1;
  for (const Factor& f : factors) n = numth::checked_mul(n, static_cast<std::uint64_t>(f.order()));
  return n;
}

bool ProductSpec::all_complete() const {
  return std::all_of(factors.begin(), factors.end(), [](const Factor& f) { return f.a == 1; });
}

std::vector<std::int64_t> ProductSpec::complete_sizes() const {
  std::vector<std::int64_t> out;
  for (const Factor& f : factors) out.push_back(f.b);
  return out;
}

std::uint64_t ProductSpec::index_of(std::span<const std::int64_t> coords) const {
  if (coords.size() != factors.size()) throw PreconditionError("coordinate tuple has wrong length");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto m = factors[i].order();
    auto c = coords[i] % m;
    if (c < 0) c += m;
    idx = idx * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(c);
  }
  return idx;
}

std::vector<std::int64_t> ProductSpec::coords_of(std::uint64_t index) const {
  std::vector<std::int64_t> c(factors.size());
  for (std::size_t i = factors.size(); i-- > 0;) {
    const auto m = static_cast<std::uint64_t>(factors[i].order());
    c[i] = static_cast<std::int64_t>(index % m);
    index /= m;
  }
  return c;
}

Graph Graph::from_adjacency(std::vector<Bitset> adjacency, LabelKind kind, std::vector<Label> labels,
                            std::optional<ProductStructure> product) {
  const std::size_t n = adjacency.size();
  for (std::size_t u = 0; u < n; ++u) {
    if (adjacency[u].size() != n) throw PreconditionError("adjacency row has wrong width");
    if (adjacency[u].test(u)) throw PreconditionError("graph has a loop at vertex " + std::to_string(u));
    adjacency[u].for_each([&](std::size_t v) {
      if (!adjacency[v].test(u)) throw PreconditionError("adjacency is not symmetric");
    });
  }
  if (kind != LabelKind::none) {
    if (labels.size() != n) throw PreconditionError("label list length differs from vertex count");
    std::set<Label> seen(labels.begin(), labels.end());
    if (seen.size() != n) throw PreconditionError("vertex labels are not distinct");
  } else {
    labels.clear();
  }
  if (product && product->coords.size() != n * product->factors.size())
    throw PreconditionError("product structure has wrong coordinate count");
  Graph g;
  g.adj_ = std::move(adjacency);
  g.label_kind_ = kind;
  g.labels_ = std::move(labels);
  g.product_ = std::move(product);
  return g;
}

Bitset Graph::closed_neighborhood(std::size_t v) const {
  Bitset b = adj_[v];
  b.set(v);
  return b;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& row : adj_) d = std::max(d, row.count());
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(adj_.begin(), adj_.end(), [](const Bitset& row) { return row.none(); });
}

bool Graph::is_regular(std::size_t* degree_out) const {
  if (adj_.empty()) return true;
  const std::size_t d = adj_[0].count();
  for (const auto& row : adj_)
    if (row.count() != d) return false;
  if (degree_out) *degree_out = d;
  return true;
}

namespace {

void check_cap(std::uint64_t n, const GraphLimits& limits) {
  if (n > limits.max_vertices)
    throw CapExceeded("graph would have " + std::to_string(n) + " vertices; cap is " +
                      std::to_string(limits.max_vertices));
}

Label label_or_index(const Graph& g, std::size_t v) {
  if (g.label_kind() == LabelKind::none) return {static_cast<std::int64_t>(v)};
  return g.labels()[v];
}

}  // namespace

Graph complete_graph(std::int64_t n) {
  if (n < 1) throw PreconditionError("complete_graph requires n >= 1");
  if (n == 1) return Graph::from_adjacency({Bitset(1)}, LabelKind::residue, {{0}});
  return multipartite(1, n);
}

Graph multipartite(std::int64_t a, std::int64_t b) {
  const Factor f = Factor::make(a, b);
  const auto n = static_cast<std::size_t>(f.order());
  check_cap(n, {});
  std::vector<Bitset> adj(n, Bitset(n));
  std::vector<Label> labels(n);
  ProductStructure ps{{f}, std::vector<std::uint32_t>(n)};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y)
      if (x % static_cast<std::size_t>(b) != y % static_cast<std::size_t>(b)) adj[x].set(y);
    labels[x] = {static_cast<std::int64_t>(x)};
    ps.coords[x] = static_cast<std::uint32_t>(x);
  }
  return Graph::from_adjacency(std::move(adj), LabelKind::residue, std::move(labels), std::move(ps));
}

Graph direct_product(const Graph& g, const Graph& h, const GraphLimits& limits) {
  if (g.order() == 0 || h.order() == 0) throw PreconditionError("direct_product of an empty graph");
  const std::uint64_t n = numth::checked_mul(g.order(), h.order());
  check_cap(n, limits);
  const std::size_t nh = h.order();
  std::vector<Bitset> adj(n, Bitset(n));
  std::vector<Label> labels(n);
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t x = 0; x < nh; ++x) {
      Bitset& row = adj[u * nh + x];
      g.neighbors(u).for_each([&](std::size_t v) {
        h.neighbors(x).for_each([&](std::size_t y) { row.set(v * nh + y); });
      });
      Label l = label_or_index(g, u);
      const Label r = label_or_index(h, x);
      l.insert(l.end(), r.begin(), r.end());
      labels[u * nh + x] = std::move(l);
    }
  }
  std::optional<ProductStructure> ps;
  if (g.product() && h.product()) {
    const auto& pg = *g.product();
    const auto& ph = *h.product();
    ps.emplace();
    ps->factors = pg.factors;
    ps->factors.insert(ps->factors.end(), ph.factors.begin(), ph.factors.end());
    ps->coords.reserve(n * ps->factors.size());
    for (std::size_t u = 0; u < g.order(); ++u)
      for (std::size_t x = 0; x < nh; ++x) {
        for (auto c : pg.coord(u)) ps->coords.push_back(c);
        for (auto c : ph.coord(x)) ps->coords.push_back(c);
      }
  }
  return Graph::from_adjacency(std::move(adj), LabelKind::tuple, std::move(labels), std::move(ps));
}

Graph disjoint_union(const Graph& g, const Graph& h, const GraphLimits& limits) {
  const std::size_t n = g.order() + h.order();
  check_cap(n, limits);
  std::vector<Bitset> adj(n, Bitset(n));
  std::vector<Label> labels(n);
  for (std::size_t u = 0; u < g.order(); ++u) {
    g.neighbors(u).for_each([&](std::size_t v) { adj[u].set(v); });
    labels[u] = label_or_index(g, u);
    labels[u].insert(labels[u].begin(), 0);
  }
  for (std::size_t u = 0; u < h.order(); ++u) {
    const std::size_t s = g.order() + u;
    h.neighbors(u).for_each([&](std::size_t v) { adj[s].set(g.order() + v); });
    labels[s] = label_or_index(h, u);
    labels[s].insert(labels[s].begin(), 1);
  }
  return Graph::from_adjacency(std::move(adj), LabelKind::tuple, std::move(labels));
}

Graph unitary_cayley(std::int64_t n, const GraphLimits& limits) {
  if (n < 2) throw PreconditionError("unitary_cayley requires n >= 2");
  check_cap(static_cast<std::uint64_t>(n), limits);
  const auto un = static_cast<std::size_t>(n);
  const auto unit = numth::coprime_table(un);
  const CrtMap crt = crt_isomorphism(n);
  std::vector<Bitset> adj(un, Bitset(un));
  std::vector<Label> labels(un);
  ProductStructure ps{crt.spec.factors, {}};
  ps.coords.reserve(un * ps.factors.size());
  for (std::size_t x = 0; x < un; ++x) {
    for (std::size_t y = 0; y < un; ++y)
      if (unit[(y + un - x) % un]) adj[x].set(y);
    labels[x] = {static_cast<std::int64_t>(x)};
    for (auto c : crt.image[x]) ps.coords.push_back(static_cast<std::uint32_t>(c));
  }
  return Graph::from_adjacency(std::move(adj), LabelKind::residue, std::move(labels), std::move(ps));
}

Graph product_spec_graph(const ProductSpec& spec, const GraphLimits& limits) {
  if (spec.factors.empty()) throw PreconditionError("empty product spec");
  const std::uint64_t n64 = spec.vertex_count();
  check_cap(n64, limits);
  const auto n = static_cast<std::size_t>(n64);
  const std::size_t t = spec.t();

  std::vector<Label> labels(n);
  ProductStructure ps{spec.factors, std::vector<std::uint32_t>(n * t)};
  for (std::size_t v = 0; v < n; ++v) {
    labels[v] = spec.coords_of(v);
    for (std::size_t i = 0; i < t; ++i) ps.coords[v * t + i] = static_cast<std::uint32_t>(labels[v][i]);
  }

  // Per factor, the bitmask of product vertices whose coordinate lies in
  // each residue class mod b_i; a vertex's neighbourhood is the AND over
  // factors of the complement of its own class.
  std::vector<std::vector<Bitset>> same_class(t);
  for (std::size_t i = 0; i < t; ++i) {
    const auto b = static_cast<std::size_t>(spec.factors[i].b);
    same_class[i].assign(b, Bitset(n));
    for (std::size_t v = 0; v < n; ++v) same_class[i][static_cast<std::size_t>(labels[v][i]) % b].set(v);
  }
  std::vector<Bitset> adj(n);
  for (std::size_t v = 0; v < n; ++v) {
    Bitset row = Bitset::full(n);
    for (std::size_t i = 0; i < t; ++i) {
      const auto b = static_cast<std::size_t>(spec.factors[i].b);
      row.andnot(same_class[i][static_cast<std::size_t>(labels[v][i]) % b]);
    }
    adj[v] = std::move(row);
  }
  return Graph::from_adjacency(std::move(adj), LabelKind::tuple, std::move(labels), std::move(ps));
}

CrtMap crt_isomorphism(std::int64_t n) {
  if (n < 2) throw PreconditionError("crt_isomorphism requires n >= 2");
  CrtMap m;
  m.n = n;
  std::vector<Factor> factors;
  std::vector<std::int64_t> moduli;
  for (const auto& pp : numth::factorize(static_cast<std::uint64_t>(n))) {
    std::int64_t pa = 1;
    for (unsigned k = 1; k < pp.alpha; ++k) pa *= static_cast<std::int64_t>(pp.p);
    factors.push_back(Factor::make(pa, static_cast<std::int64_t>(pp.p)));
    moduli.push_back(pa * static_cast<std::int64_t>(pp.p));
  }
  m.spec = ProductSpec::make(std::move(factors));
  m.image.resize(static_cast<std::size_t>(n));
  for (std::int64_t x = 0; x < n; ++x) {
    Label l;
    for (auto q : moduli) l.push_back(x % q);
    m.image[static_cast<std::size_t>(x)] = std::move(l);
  }
  return m;
}

CliquePartition clique_partition(const ProductSpec& spec) {
  if (spec.factors.empty()) throw PreconditionError("empty product spec");
  const std::int64_t b1 = spec.factors[0].b;
  for (const Factor& f : spec.factors)
    if (f.b < b1) throw PreconditionError("clique_partition requires b_1 to be the smallest part count");

  // Cliques of the prefix product, as coordinate tuples; extended one factor at a time.
  std::vector<std::vector<Label>> cliques;
  const Factor& f1 = spec.factors[0];
  for (std::int64_t m = 0; m < f1.a; ++m) {
    std::vector<Label> c;
    for (std::int64_t j = 0; j < b1; ++j) c.push_back({m * b1 + j});
    cliques.push_back(std::move(c));
  }
  for (std::size_t i = 1; i < spec.t(); ++i) {
    const std::int64_t order = spec.factors[i].order();
    std::vector<std::vector<Label>> next;
    next.reserve(cliques.size() * static_cast<std::size_t>(order));
    for (const auto& c : cliques) {
      for (std::int64_t l = 0; l < order; ++l) {
        std::vector<Label> ext = c;
        for (std::size_t j = 0; j < ext.size(); ++j) ext[j].push_back((l + static_cast<std::int64_t>(j)) % order);
        next.push_back(std::move(ext));
      }
    }
    cliques = std::move(next);
  }

  CliquePartition p;
  p.cliques.reserve(cliques.size());
  for (const auto& c : cliques) {
    std::vector<std::uint32_t> idx;
    for (const auto& l : c) idx.push_back(static_cast<std::uint32_t>(spec.index_of(l)));
    std::sort(idx.begin(), idx.end());
    p.cliques.push_back(std::move(idx));
  }
  return p;
}

bool is_valid_clique_partition(const Graph& g, const CliquePartition& p, std::size_t clique_size) {
  const std::size_t n = g.order();
  if (clique_size == 0 || n % clique_size != 0 || p.cliques.size() != n / clique_size) return false;
  Bitset seen(n);
  for (const auto& c : p.cliques) {
    if (c.size() != clique_size) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= n || seen.test(c[i])) return false;
      seen.set(c[i]);
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (!g.adjacent(c[i], c[j])) return false;
    }
  }
  return seen.count() == n;
}

K2Reduction k2_reduction(const ProductSpec& spec) {
  K2Reduction r;
  std::vector<Factor> rest;
  for (const Factor& f : spec.factors) {
    if (f.a == 1 && f.b == 2)
      ++r.s;
    else
      rest.push_back(f);
  }
  if (r.s == 0) {
    r.rest = spec;
  } else if (!rest.empty()) {
    r.rest = ProductSpec::make(std::move(rest));
  }
  return r;
}

}  // namespace tdom
