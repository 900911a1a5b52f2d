#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tdom/domination.hpp"
#include "tdom/graph.hpp"
#include "tdom/numth.hpp"

namespace tdom::theory {

// ---- explicit constructions -------------------------------------------------

enum class ConstructionKind { dominating, total_dominating, minimal_dominating };
std::string_view to_string(ConstructionKind k);

struct ConstructionResult {
  Graph graph;  // the graph the set lives on (unitary Cayley or product_spec_graph)
  VertexSet vertex_set;
  ConstructionKind kind = ConstructionKind::dominating;
  bool verified = false;
};

// {0, ..., g(n)-1} on X_n; total dominating.
ConstructionResult consecutive_residue_set(std::int64_t n);
// Diagonal vertices (r mod n_1, ..., r mod n_t), r = 0..t+m, on a product of complete graphs.
ConstructionResult diagonal_set(const ProductSpec& spec, std::int64_t m);
// The t diagonal vertices plus (0,1,t,...,t) and (1,0,t,...,t); requires n_1 = t, n_3 >= t+1.
ConstructionResult theorem3_set(const ProductSpec& spec);
// Eight vertices for K_2 x K_{n_2} x K_{n_3} x K_{n_4}.
ConstructionResult cube_corner_set(const ProductSpec& spec);
// All vertices whose first coordinate lies in one partite set of K[a_1,b_1]; minimal dominating.
ConstructionResult prop2_set(const ProductSpec& spec);

// ---- formulas -------------------------------------------------------------------

// γ(X_n) for squarefree n with 1 <= ω(n) <= 3.
std::int64_t eq7_value(std::int64_t n);

// t + 1 + floor((t-1)/(n_1-1)) for products of t >= 4 complete graphs with n_2 >= 3.
std::int64_t thm2_lower(const ProductSpec& spec);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  std::int64_t ceil() const { return (num + den - 1) / den; }
  friend bool operator==(const Rational&, const Rational&) = default;
};
// p_1 t / (p_1 - 1) for non-squarefree n with ω(n) = t <= 3.
Rational lemma6_lower(std::int64_t n);

// ---- bound composition ------------------------------------------------------------

enum class Side { lower, upper, exact };

struct Provenance {
  std::string tag;  // short rule name, e.g. "thm1", "lemma3", "eq7"
  Side side = Side::lower;
  std::int64_t value = 0;
  std::string note;
};

struct BoundReport {
  Quantity quantity = Quantity::gamma;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<Provenance> provenance;
  bool exact = false;
  // Value predicted by the upper-domination conjecture, reported separately from proven bounds.
  std::optional<std::int64_t> conjectured;
};

// Products of t complete graphs alone: exact for t = 2, 3; lower bound t+1 for t >= 4, exact when n_1 >= t+1.
BoundReport mekis_bound(const ProductSpec& spec);
// Tightest γ interval from every applicable result; ConsistencyError if lo > hi.
BoundReport gamma_bounds(const ProductSpec& spec);
BoundReport ucg_gamma_bounds(std::int64_t n);
// Γ interval: partite-class lower bound, exact where the conjecture is proven.
BoundReport upper_bounds(const ProductSpec& spec);

// ---- witnesses for M and M_t ---------------------------------------------------------

struct WitnessN {
  std::uint64_t n = 0;
  std::uint64_t q = 0;
  std::uint64_t k = 0;
  std::vector<std::uint64_t> primes;  // p_1..p_k
  std::vector<std::uint64_t> D;       // {0, ..., q+1, y}
  std::uint64_t y = 0;
  std::uint64_t z = 0;
  std::uint64_t run_length = 0;  // q + 3 consecutive non-coprime integers from z
  unsigned omega = 0;

  bool run_verified = false;       // gcd(z+i, n) > 1 for every i
  bool symbolic_verified = false;  // no residue escapes D (CRT assignment search)
  std::optional<bool> scan_verified;     // residue-by-residue scan, when n is small enough
  std::optional<std::uint64_t> g_exact;  // Jacobsthal value, when n is small enough
  bool verified() const { return run_verified && symbolic_verified && scan_verified.value_or(true); }
};

struct WitnessOptions {
  std::uint64_t scan_limit = 50'000'000;  // largest n verified by full residue scan
};

WitnessN thm6_witness(std::int64_t j, const WitnessOptions& options = {});

struct Prop1Witness {
  int family = 0;
  std::uint64_t p1 = 0;
  std::uint64_t p2 = 0;
  std::uint64_t n = 0;
  std::uint64_t x = 0;               // start of the non-coprime run
  std::uint64_t run_length = 0;
  std::uint64_t g_lower = 0;         // run_length + 1
  std::uint64_t g_exact = 0;         // Jacobsthal value by residue scan
  std::int64_t gamma = 0;            // claimed γ(X_n) for the family (4 or 8)
  std::vector<std::uint64_t> dominating;  // residues of a dominating set of that size
  bool verified = false;             // run is coprime-free, set dominates X_n, |set| < g_lower
};

Prop1Witness prop1_witness(int family, std::int64_t p1, std::int64_t p2);

// A residue of Z/nZ not (totally) dominated by D in X_n, or nullopt if D (totally)
// dominates. Works on the prime residues only, so n may be far too large to scan.
std::optional<std::uint64_t> find_undominated_residue(std::uint64_t n, const std::vector<std::uint64_t>& D,
                                                      bool total);
// Same question answered by checking every residue against a coprimality table.
bool scan_dominates(std::uint64_t n, const std::vector<std::uint64_t>& D, bool total);

// ---- upper domination conjecture ---------------------------------------------------------

struct ConjectureRecord {
  std::int64_t conjectured = 0;
  SolveResult exact;
  bool agrees = false;
  bool packing_violated = false;  // b_1 l + 2 s > n on some minimal set seen during search
  std::uint64_t minimal_sets_seen = 0;
};

ConjectureRecord conjecture_check(const ProductSpec& spec, const Budget& budget = {});

// For a minimum dominating set of size t+2 on a product of complete graphs: every
// coordinate value is shared by at most two members.
bool lemma4_holds(const ProductSpec& spec, const Graph& g, const VertexSet& witness);

}  // namespace tdom::theory
