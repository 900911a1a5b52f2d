#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tdom/bitset.hpp"

namespace tdom {

// K[a,b]: balanced complete b-partite graph with partite sets of size a.
// Vertices are residues 0..ab-1; x ~ y iff x and y differ mod b.
struct Factor {
  std::int64_t a = 1;
  std::int64_t b = 2;

  static Factor make(std::int64_t a, std::int64_t b);  // validates a >= 1, b >= 2
  std::int64_t order() const { return a * b; }
  friend auto operator<=>(const Factor& x, const Factor& y) {
    if (auto c = x.b <=> y.b; c != 0) return c;
    return x.a <=> y.a;
  }
  friend bool operator==(const Factor&, const Factor&) = default;
};

// Ordered factor list of a direct product of multipartite graphs.
struct ProductSpec {
  std::vector<Factor> factors;
  bool canonical_order = false;

  static ProductSpec make(std::vector<Factor> factors);  // nonempty; sets the canonical flag if already sorted
  ProductSpec canonical() const;                        // factors sorted by (b, a)

  std::size_t t() const { return factors.size(); }
  std::uint64_t vertex_count() const;  // product of a_i b_i; throws CapExceeded on overflow
  bool all_complete() const;           // every a_i = 1
  std::vector<std::int64_t> complete_sizes() const;  // the b_i

  // Row-major index of a coordinate tuple (first factor most significant).
  std::uint64_t index_of(std::span<const std::int64_t> coords) const;
  std::vector<std::int64_t> coords_of(std::uint64_t index) const;

  friend bool operator==(const ProductSpec& x, const ProductSpec& y) { return x.factors == y.factors; }
};

enum class LabelKind { none, residue, tuple };
using Label = std::vector<std::int64_t>;

// Coordinates of every vertex in a direct product of multipartite factors.
// Lets solvers exploit the per-factor automorphisms.
struct ProductStructure {
  std::vector<Factor> factors;
  std::vector<std::uint32_t> coords;  // n * t, row-major per vertex

  std::span<const std::uint32_t> coord(std::size_t v) const { return {coords.data() + v * factors.size(), factors.size()}; }
};

struct GraphLimits {
  std::uint64_t max_vertices = 2'000'000;
};

// Immutable simple graph with dense bit-vector adjacency.
class Graph {
 public:
  Graph() = default;

  // Validates symmetry, irreflexivity and label distinctness.
  static Graph from_adjacency(std::vector<Bitset> adjacency, LabelKind kind = LabelKind::none,
                              std::vector<Label> labels = {},
                              std::optional<ProductStructure> product = std::nullopt);

  std::size_t order() const { return adj_.size(); }
  const Bitset& neighbors(std::size_t v) const { return adj_[v]; }
  Bitset closed_neighborhood(std::size_t v) const;
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
  std::size_t degree(std::size_t v) const { return adj_[v].count(); }
  std::size_t max_degree() const;
  std::size_t edge_count() const;
  bool has_isolated_vertex() const;
  bool is_regular(std::size_t* degree_out = nullptr) const;

  LabelKind label_kind() const { return label_kind_; }
  const std::vector<Label>& labels() const { return labels_; }
  const std::optional<ProductStructure>& product() const { return product_; }

  VertexSet empty_set() const { return VertexSet(order()); }

 private:
  std::vector<Bitset> adj_;
  LabelKind label_kind_ = LabelKind::none;
  std::vector<Label> labels_;
  std::optional<ProductStructure> product_;
};

Graph complete_graph(std::int64_t n);
Graph multipartite(std::int64_t a, std::int64_t b);
Graph direct_product(const Graph& g, const Graph& h, const GraphLimits& limits = {});
Graph disjoint_union(const Graph& g, const Graph& h, const GraphLimits& limits = {});
Graph unitary_cayley(std::int64_t n, const GraphLimits& limits = {});
Graph product_spec_graph(const ProductSpec& spec, const GraphLimits& limits = {});

// x -> (x mod p_1^a_1, ..., x mod p_k^a_k), read as vertices of prod K[p_i^(a_i-1), p_i].
struct CrtMap {
  std::int64_t n = 0;
  ProductSpec spec;
  std::vector<Label> image;  // image[x] = coordinate tuple of residue x
};
CrtMap crt_isomorphism(std::int64_t n);

// Cliques of size b_1 covering the vertices of product_spec_graph(spec), spec canonical.
struct CliquePartition {
  std::vector<std::vector<std::uint32_t>> cliques;
};
CliquePartition clique_partition(const ProductSpec& spec);
// Checks disjointness, coverage, clique property and the expected count/size.
bool is_valid_clique_partition(const Graph& g, const CliquePartition& p, std::size_t clique_size);

// Number of K[1,2] factors and the remaining factors. gamma(spec) = 2^(s-1) * gamma(K_2 x rest) for s >= 1.
struct K2Reduction {
  std::size_t s = 0;
  std::optional<ProductSpec> rest;
};
K2Reduction k2_reduction(const ProductSpec& spec);

}  // namespace tdom
