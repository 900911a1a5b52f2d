#include "properties.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "support.hpp"
#include "tdom/numth.hpp"
#include "tdom/theory.hpp"

namespace tdom::testing {

namespace {

std::string set_str(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto v : s.to_indices()) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << '}';
  return os.str();
}

// Records the first failure only.
void fail(Outcome& o, const std::string& msg) {
  if (o.failure.empty()) o.failure = msg;
}

Budget deterministic_budget() {
  Budget b;
  b.deterministic = true;
  return b;
}

// Compares the three exact solvers with the oracle on one graph. `tag` names the graph.
void compare_with_oracle(Outcome& o, const Graph& g, const std::string& tag,
                         const std::optional<CliquePartition>& cliques) {
  const Budget det = deterministic_budget();

  auto check = [&](Quantity q, const SolveResult& got, const SolveResult& want) {
    if (!got.optimal || got.value != want.value) {
      fail(o, tag + ": " + std::string(to_string(q)) + " solver " + std::to_string(got.value) + " vs oracle " +
                  std::to_string(want.value));
      return;
    }
    if (!passes_checker(g, q, got.witness) || got.witness.count() != got.value)
      fail(o, tag + ": " + std::string(to_string(q)) + " witness " + set_str(got.witness) + " fails its checker");
    if (!(got.witness == want.witness))
      fail(o, tag + ": " + std::string(to_string(q)) + " deterministic witness " + set_str(got.witness) +
                  " is not the lex-smallest " + set_str(want.witness));
  };

  SolveResult og = gamma_oracle(g, Quantity::gamma);
  SolveResult sg = gamma_exact(g, det);
  check(Quantity::gamma, sg, og);

  UpperOptions uo;
  uo.cliques = cliques;
  SolveResult ou = gamma_oracle(g, Quantity::upper);
  SolveResult su = gamma_upper_exact(g, det, uo);
  check(Quantity::upper, su, ou);

  // γ <= Γ through a shrunk γ-witness.
  VertexSet shrunk = shrink_to_minimal(g, og.witness);
  if (!is_minimal_dominating(g, shrunk) || shrunk.count() > ou.value)
    fail(o, tag + ": shrunk gamma witness " + set_str(shrunk) + " not minimal or larger than Gamma");

  if (g.has_isolated_vertex()) {
    bool threw = false;
    try {
      gamma_total_exact(g, det);
    } catch (const PreconditionError&) {
      threw = true;
    }
    if (!threw) fail(o, tag + ": gamma_total_exact accepted a graph with an isolated vertex");
  } else {
    SolveResult ot = gamma_oracle(g, Quantity::gamma_total);
    SolveResult st = gamma_total_exact(g, det);
    check(Quantity::gamma_total, st, ot);
    if (og.value > ot.value) fail(o, tag + ": gamma > gamma_t");
  }
  ++o.cases;
}

bool minimal_by_definition(const Graph& g, const VertexSet& d) {
  if (!is_dominating(g, d)) return false;
  bool all_needed = true;
  d.for_each([&](std::size_t v) {
    VertexSet smaller = d;
    smaller.reset(v);
    if (is_dominating(g, smaller)) all_needed = false;
  });
  return all_needed;
}

}  // namespace

Outcome solver_vs_oracle_random(std::uint64_t seed, int count, std::size_t max_vertices) {
  Outcome o;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, max_vertices);
  std::uniform_real_distribution<double> dens(0.1, 0.9);
  for (int i = 0; i < count; ++i) {
    std::size_t n = size(rng);
    double p = dens(rng);
    Graph g = random_graph(rng, n, p);
    compare_with_oracle(o, g, "random graph #" + std::to_string(i) + " (n=" + std::to_string(n) + ")", std::nullopt);
  }
  return o;
}

Outcome solver_vs_oracle_specs(std::uint64_t max_vertices) {
  Outcome o;
  for (const auto& spec : all_specs(max_vertices)) {
    Graph g = product_spec_graph(spec);
    compare_with_oracle(o, g, describe(spec), clique_partition(spec));
    SolveResult og = gamma_oracle(g, Quantity::gamma);
    SolveResult gp = gamma_product(spec);
    if (!gp.optimal || gp.value != og.value || !is_dominating(g, gp.witness))
      fail(o, describe(spec) + ": gamma_product " + std::to_string(gp.value) + " vs oracle " +
                  std::to_string(og.value));
  }
  return o;
}

Outcome ore_equivalence(std::uint64_t seed, int count) {
  Outcome o;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, 12);
  std::uniform_real_distribution<double> dens(0.1, 0.9);
  int minimal_hits = 0;
  for (int i = 0; i < count; ++i) {
    std::size_t n = size(rng);
    Graph g = random_graph(rng, n, dens(rng));
    VertexSet d = random_subset(rng, n, dens(rng));
    // Half the samples start from a dominating set so minimal ones actually occur.
    if (i % 2 == 0) {
      for (std::size_t v = 0; v < n; ++v)
        if (!d.intersects(g.closed_neighborhood(v))) d.set(v);
      if (i % 4 == 0) d = shrink_to_minimal(g, d);
    }
    bool ore = is_minimal_dominating(g, d);
    bool def = minimal_by_definition(g, d);
    if (ore != def)
      fail(o, "pair #" + std::to_string(i) + ": Ore says " + (ore ? "minimal" : "not minimal") + " for " + set_str(d));
    minimal_hits += def;
    ++o.cases;
  }
  if (minimal_hits == 0) fail(o, "no minimal dominating set among the samples");
  return o;
}

Outcome ucg_chain(std::int64_t max_n, std::int64_t max_upper_n) {
  Outcome o;
  for (std::int64_t n = 2; n <= max_n; ++n) {
    Graph g = unitary_cayley(n);
    SolveResult gm = gamma_exact(g);
    SolveResult gt = gamma_total_exact(g);
    auto jac = numth::jacobsthal(static_cast<std::uint64_t>(n));
    if (!gm.optimal || !gt.optimal) {
      fail(o, "X_" + std::to_string(n) + ": solver did not finish");
      continue;
    }
    if (!(gm.value <= gt.value && gt.value <= jac))
      fail(o, "X_" + std::to_string(n) + ": gamma " + std::to_string(gm.value) + ", gamma_t " +
                  std::to_string(gt.value) + ", g " + std::to_string(jac));
    if (n <= max_upper_n) {
      SolveResult up = gamma_upper_exact(g);
      if (!up.optimal || gm.value > up.value) fail(o, "X_" + std::to_string(n) + ": gamma > Gamma");
    }
    ++o.cases;
  }
  return o;
}

Outcome bounds_contain_exact(std::uint64_t seed) {
  Outcome o;
  auto inside = [&](const theory::BoundReport& r, std::size_t exact, const std::string& tag) {
    auto v = static_cast<std::int64_t>(exact);
    if (v < r.lo || v > r.hi)
      fail(o, tag + ": exact " + std::to_string(v) + " outside [" + std::to_string(r.lo) + "," +
                  std::to_string(r.hi) + "]");
    if (r.exact && r.lo != v) fail(o, tag + ": report claims exact " + std::to_string(r.lo));
    ++o.cases;
  };

  for (std::int64_t n = 2; n <= 300; ++n) {
    SolveResult s = gamma_exact(unitary_cayley(n));
    if (s.optimal) inside(theory::ucg_gamma_bounds(n), s.value, "ucg:" + std::to_string(n));
  }

  for (const auto& spec : all_specs(64)) {
    SolveResult s = gamma_exact(product_spec_graph(spec));
    if (s.optimal) inside(theory::gamma_bounds(spec), s.value, describe(spec));
  }

  Budget capped;
  capped.max_nodes = 200'000;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 60; ++i) {
    ProductSpec spec = random_spec(rng, 300);
    SolveResult s = gamma_exact(product_spec_graph(spec), capped);
    if (s.optimal) inside(theory::gamma_bounds(spec), s.value, describe(spec));
  }

  for (const auto& spec : all_specs(20)) {
    Graph g = product_spec_graph(spec);
    UpperOptions uo;
    uo.cliques = clique_partition(spec);
    SolveResult s = gamma_upper_exact(g, {}, uo);
    if (s.optimal) inside(theory::upper_bounds(spec), s.value, "upper " + describe(spec));
  }
  return o;
}

Outcome construction_sweep(std::uint64_t seed, int count) {
  Outcome o;
  std::mt19937_64 rng(seed);
  auto uni = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
  auto make = [](const std::vector<std::int64_t>& sizes) {
    std::vector<Factor> fs;
    for (auto b : sizes) fs.push_back(Factor::make(1, b));
    return ProductSpec::make(fs);
  };
  auto volume = [](const std::vector<std::int64_t>& sizes) {
    std::int64_t v = 1;
    for (auto b : sizes) v *= b;
    return v;
  };

  for (int i = 0; i < count; ++i) {
    // Diagonal: t >= 3, (t+m)/(m+1) < n_1, t+m < n_2.
    std::vector<std::int64_t> sizes;
    std::int64_t t = 0, m = 0;
    do {
      t = uni(3, 5);
      m = uni(0, 2);
      std::int64_t n1_min = std::max<std::int64_t>(2, (t + m) / (m + 1) + 1);
      sizes = {uni(n1_min, n1_min + 2)};
      std::int64_t prev = std::max(sizes[0], t + m + 1);
      for (std::int64_t k = 1; k < t; ++k) sizes.push_back(prev = uni(prev, prev + 1));
    } while (volume(sizes) > 20'000);
    auto r = theory::diagonal_set(make(sizes), m);
    if (!r.verified || r.vertex_set.count() != static_cast<std::size_t>(t + m + 1) ||
        !is_total_dominating(r.graph, r.vertex_set))
      fail(o, "diagonal_set " + describe(make(sizes)) + " m=" + std::to_string(m) + " failed to verify");
    ++o.cases;

    // theorem3_set: t >= 4, n_1 = t, n_2 >= 3, n_3 >= t+1.
    do {
      t = uni(4, 5);
      sizes = {t, uni(t, t + 2)};
      std::int64_t prev = std::max(sizes[1], t + 1);
      for (std::int64_t k = 2; k < t; ++k) sizes.push_back(prev = uni(prev, prev + 1));
    } while (volume(sizes) > 20'000);
    auto r3 = theory::theorem3_set(make(sizes));
    if (!r3.verified || r3.vertex_set.count() != static_cast<std::size_t>(t + 2) ||
        !is_dominating(r3.graph, r3.vertex_set))
      fail(o, "theorem3_set " + describe(make(sizes)) + " failed to verify");
    ++o.cases;
  }
  return o;
}

Outcome clique_partitions(std::uint64_t seed, int count, std::uint64_t max_vertices) {
  Outcome o;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    ProductSpec spec = random_spec(rng, max_vertices);
    Graph g = product_spec_graph(spec);
    CliquePartition cp = clique_partition(spec);
    auto b1 = static_cast<std::size_t>(spec.factors[0].b);
    // Independent of is_valid_clique_partition: recheck all four properties here.
    std::vector<int> seen(g.order(), 0);
    bool ok = cp.cliques.size() * b1 == g.order();
    for (const auto& c : cp.cliques) {
      ok = ok && c.size() == b1;
      for (std::size_t x = 0; x < c.size(); ++x) {
        ok = ok && c[x] < g.order() && ++seen[c[x]] == 1;
        for (std::size_t y = x + 1; y < c.size() && ok; ++y) ok = g.adjacent(c[x], c[y]);
      }
    }
    ok = ok && std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
    if (!ok || !is_valid_clique_partition(g, cp, b1)) fail(o, "clique partition of " + describe(spec) + " is invalid");
    ++o.cases;
  }
  return o;
}

Outcome lemma1_identity(std::uint64_t max_vertices) {
  Outcome o;
  auto k2 = Factor::make(1, 2);
  auto gamma_of = [](const ProductSpec& s) { return gamma_exact(product_spec_graph(s)).value; };

  ProductSpec big = ProductSpec::make({k2, k2, Factor::make(1, 3), Factor::make(1, 5)});
  ProductSpec small = ProductSpec::make({k2, Factor::make(1, 3), Factor::make(1, 5)});
  std::size_t gb = gamma_of(big), gs = gamma_of(small);
  if (gb != 8 || gs != 4) fail(o, "gamma(K2xK2xK3xK5) = " + std::to_string(gb) + ", gamma(K2xK3xK5) = " + std::to_string(gs));
  ++o.cases;

  for (const auto& spec : all_specs(max_vertices)) {
    K2Reduction red = k2_reduction(spec);
    if (red.s == 0 || !red.rest) continue;
    std::vector<Factor> base{k2};
    base.insert(base.end(), red.rest->factors.begin(), red.rest->factors.end());
    std::size_t lhs = gamma_of(spec);
    std::size_t rhs = (std::size_t{1} << (red.s - 1)) * gamma_of(ProductSpec::make(base));
    if (lhs != rhs)
      fail(o, describe(spec) + ": gamma " + std::to_string(lhs) + " vs 2^(s-1) gamma(K2 x rest) " + std::to_string(rhs));
    ++o.cases;
  }
  return o;
}

Outcome packing_inequality(std::uint64_t max_vertices) {
  Outcome o;
  std::vector<ProductSpec> specs = all_specs(max_vertices);
  specs.push_back(ProductSpec::make({Factor::make(1, 3), Factor::make(1, 3), Factor::make(1, 3)}));
  for (const auto& spec : specs) {
    Graph g = product_spec_graph(spec);
    const auto n = g.order();
    const auto b1 = static_cast<std::size_t>(spec.factors[0].b);
    UpperOptions uo;
    uo.cliques = clique_partition(spec);
    std::uint64_t seen = 0;
    uo.on_minimal = [&](const VertexSet& d, std::size_t lonely, std::size_t social) {
      ++seen;
      auto cls = classify(g, d);
      if (cls.lonely.count() != lonely || cls.social.count() != social)
        fail(o, describe(spec) + ": search reported l=" + std::to_string(lonely) + ", s=" + std::to_string(social) +
                    " for " + set_str(d));
      if (b1 * cls.lonely.count() + 2 * cls.social.count() > n)
        fail(o, describe(spec) + ": packing violated by " + set_str(d));
    };
    gamma_upper_exact(g, {}, uo);
    if (seen == 0) fail(o, describe(spec) + ": search reached no minimal set");
    o.cases += seen;
  }
  // The search prunes most minimal sets; on small specs walk all of them.
  for (const auto& spec : all_specs(16)) {
    Graph g = product_spec_graph(spec);
    const auto n = g.order();
    const auto b1 = static_cast<std::size_t>(spec.factors[0].b);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      VertexSet d(n);
      for (std::size_t v = 0; v < n; ++v)
        if (mask >> v & 1U) d.set(v);
      if (!minimal_by_definition(g, d)) continue;
      auto cls = classify(g, d);
      if (b1 * cls.lonely.count() + 2 * cls.social.count() > n)
        fail(o, describe(spec) + ": packing violated by " + set_str(d));
      ++o.cases;
    }
  }
  return o;
}

Outcome lemma4_fibres() {
  Outcome o;
  auto complete = [](std::vector<std::int64_t> sizes) {
    std::vector<Factor> fs;
    for (auto b : sizes) fs.push_back(Factor::make(1, b));
    return ProductSpec::make(fs);
  };
  for (const auto& spec : {complete({4, 4, 5, 5}), complete({4, 5, 5, 5}), complete({4, 4, 5, 6}),
                           complete({4, 4, 4, 4}), complete({3, 4, 4, 4})}) {
    Graph g = product_spec_graph(spec);
    SolveResult r = gamma_exact(g);
    if (!r.optimal || r.value != spec.t() + 2) continue;
    if (!theory::lemma4_holds(spec, g, r.witness)) fail(o, describe(spec) + ": fibre with 3+ members in " + set_str(r.witness));
    ++o.cases;
  }
  return o;
}

}  // namespace tdom::testing
