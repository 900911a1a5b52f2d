#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string_view>

#include "tdom/errors.hpp"
#include "tdom/graph.hpp"

namespace tdom {

enum class Quantity { gamma, gamma_total, upper };
enum class Method { oracle, branch_and_bound, reduction };

std::string_view to_string(Quantity q);
std::string_view to_string(Method m);
Quantity parse_quantity(std::string_view s);  // "gamma" | "gammat" | "upper"

// ---- checkers -------------------------------------------------------------

bool is_dominating(const Graph& g, const VertexSet& d);
bool is_total_dominating(const Graph& g, const VertexSet& d);
// Ore: d dominates and every member is lonely or has a private neighbour.
bool is_minimal_dominating(const Graph& g, const VertexSet& d);
bool passes_checker(const Graph& g, Quantity q, const VertexSet& d);

// Thrown by classify() when a social member has no private neighbour.
class NotMinimalError : public Error {
 public:
  NotMinimalError(std::uint32_t vertex, const std::string& what) : Error(what), vertex_(vertex) {}
  std::uint32_t vertex() const { return vertex_; }

 private:
  std::uint32_t vertex_;
};

struct VertexClassification {
  VertexSet lonely;
  VertexSet social;
  // social member -> its smallest-index private neighbour
  std::map<std::uint32_t, std::uint32_t> private_neighbor;
};

// Requires d dominating (PreconditionError otherwise); throws NotMinimalError for an
// unmatched social member.
VertexClassification classify(const Graph& g, const VertexSet& d);

// ---- solvers --------------------------------------------------------------

struct Budget {
  std::uint64_t max_nodes = 10'000'000;
  std::chrono::milliseconds time_limit{60'000};
  // Lexicographically smallest optimal witness (γ, γ_t need an extra canonicalisation pass).
  bool deterministic = false;
};

struct SolveResult {
  Quantity quantity = Quantity::gamma;
  std::size_t value = 0;
  VertexSet witness;
  bool optimal = false;
  Method method = Method::branch_and_bound;
  std::uint64_t nodes = 0;
  double elapsed_ms = 0;
};

struct OracleCaps {
  std::size_t max_vertices_min = 20;    // γ, γ_t
  std::size_t max_vertices_upper = 16;  // Γ
};

// Exhaustive subset enumeration; the independent ground truth for tests.
// Returns the lexicographically smallest optimal set. Throws CapExceeded above the cap and
// PreconditionError for γ_t on a graph with an isolated vertex.
SolveResult gamma_oracle(const Graph& g, Quantity q, const OracleCaps& caps = {});

// Minimum set cover over closed neighbourhoods.
SolveResult gamma_exact(const Graph& g, const Budget& budget = {});
// Minimum set cover over open neighbourhoods; PreconditionError on isolated vertices.
SolveResult gamma_total_exact(const Graph& g, const Budget& budget = {});

struct UpperOptions {
  // Clique partition (cliques of equal size b_1) enabling the lonely/social packing bound.
  std::optional<CliquePartition> cliques;
  // Called with every minimal dominating set reached at a leaf, with its lonely/social counts.
  std::function<void(const VertexSet&, std::size_t lonely, std::size_t social)> on_minimal;
};

// Maximum minimal dominating set by in/out branching in vertex order.
SolveResult gamma_upper_exact(const Graph& g, const Budget& budget = {}, const UpperOptions& options = {});

// γ of a product spec, factoring out K_2 factors: γ = 2^(s-1) γ(K_2 x rest) when s >= 2;
// the witness is lifted back onto product_spec_graph(spec). Falls through to gamma_exact otherwise.
SolveResult gamma_product(const ProductSpec& spec, const Budget& budget = {}, const GraphLimits& limits = {});

// Shrinks a dominating set to a minimal one by dropping removable members in index order.
VertexSet shrink_to_minimal(const Graph& g, VertexSet d);

}  // namespace tdom
