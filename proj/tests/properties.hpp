#pragma once

#include <cstdint>
#include <string>

namespace tdom::testing {

// Outcome of one randomized or exhaustive property suite. A suite that ran zero
// cases counts as failed, so a shrinking budget cannot make it pass vacuously.
struct Outcome {
  std::uint64_t cases = 0;
  std::string failure;  // first counterexample, empty when none
  bool ok() const { return cases > 0 && failure.empty(); }
};

// gamma_exact / gamma_total_exact / gamma_upper_exact against gamma_oracle, values and
// deterministic witnesses, plus γ <= γ_t and γ <= Γ on each graph.
Outcome solver_vs_oracle_random(std::uint64_t seed, int count = 200, std::size_t max_vertices = 14);
Outcome solver_vs_oracle_specs(std::uint64_t max_vertices = 16);

// is_minimal_dominating against the remove-one-element definition.
Outcome ore_equivalence(std::uint64_t seed, int count = 500);

// γ(X_n) <= γ_t(X_n) <= g(n) for 2 <= n <= max_n, and γ <= Γ for n <= max_upper_n.
Outcome ucg_chain(std::int64_t max_n = 120, std::int64_t max_upper_n = 24);

// Every gamma_bounds / ucg_gamma_bounds / upper_bounds interval contains the exact value.
Outcome bounds_contain_exact(std::uint64_t seed);

// diagonal_set and theorem3_set under random parameters that satisfy their hypotheses.
Outcome construction_sweep(std::uint64_t seed, int count = 40);

Outcome clique_partitions(std::uint64_t seed, int count = 60, std::uint64_t max_vertices = 500);

// γ(K_2^s x rest) = 2^(s-1) γ(K_2 x rest), including γ(K2xK2xK3xK5) = 2 γ(K2xK3xK5) = 8.
Outcome lemma1_identity(std::uint64_t max_vertices = 60);

// b_1 l + 2 s <= n on every minimal dominating set reached by the Γ search, with l and s
// recomputed independently by classify().
Outcome packing_inequality(std::uint64_t max_vertices = 24);

// Optimal witnesses of size t+2 keep every coordinate fibre at <= 2 members.
Outcome lemma4_fibres();

}  // namespace tdom::testing
