#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tdom/domination.hpp"
#include "tdom/graph.hpp"

namespace tdom::testing {

// G(n, p) with a fixed engine; may contain isolated vertices.
Graph random_graph(std::mt19937_64& rng, std::size_t n, double p);

// Random subset, each vertex kept with probability p.
VertexSet random_subset(std::mt19937_64& rng, std::size_t n, double p);

// Every canonical spec (factors sorted by (b, a)) with at most max_vertices vertices and
// at most max_t factors.
std::vector<ProductSpec> all_specs(std::uint64_t max_vertices, std::size_t max_t = 8);
// Same, restricted to products of complete graphs.
std::vector<ProductSpec> all_complete_specs(std::uint64_t max_vertices, std::size_t max_t = 8);

// Uniform pick from all_specs-style enumeration would be skewed toward tiny factors;
// this draws factor by factor until the vertex budget runs out.
ProductSpec random_spec(std::mt19937_64& rng, std::uint64_t max_vertices, bool complete_only = false);

std::string describe(const ProductSpec& spec);

}  // namespace tdom::testing
