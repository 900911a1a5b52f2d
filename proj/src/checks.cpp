#include <string>

#include "tdom/domination.hpp"

namespace tdom {

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::gamma: return "gamma";
    case Quantity::gamma_total: return "gammat";
    case Quantity::upper: return "upper";
  }
  return "?";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::oracle: return "oracle";
    case Method::branch_and_bound: return "branch-and-bound";
    case Method::reduction: return "reduction";
  }
  return "?";
}

Quantity parse_quantity(std::string_view s) {
  if (s == "gamma") return Quantity::gamma;
  if (s == "gammat" || s == "gamma_total") return Quantity::gamma_total;
  if (s == "upper") return Quantity::upper;
  throw ParseError("unknown quantity '" + std::string(s) + "' (expected gamma, gammat or upper)");
}

namespace {

void check_bound(const Graph& g, const VertexSet& d) {
  if (d.size() != g.order()) throw PreconditionError("vertex set is not bound to this graph");
}

}  // namespace

bool is_dominating(const Graph& g, const VertexSet& d) {
  check_bound(g, d);
  VertexSet covered = d;
  d.for_each([&](std::size_t v) { covered |= g.neighbors(v); });
  return covered.count() == g.order();
}

bool is_total_dominating(const Graph& g, const VertexSet& d) {
  check_bound(g, d);
  VertexSet covered(g.order());
  d.for_each([&](std::size_t v) { covered |= g.neighbors(v); });
  return covered.count() == g.order();
}

bool is_minimal_dominating(const Graph& g, const VertexSet& d) {
  if (!is_dominating(g, d)) return false;
  bool ok = true;
  d.for_each([&](std::size_t v) {
    if (!ok || !g.neighbors(v).intersects(d)) return;  // lonely
    bool has_private = false;
    g.neighbors(v).for_each([&](std::size_t p) {
      if (!has_private && !d.test(p) && g.neighbors(p).count_and(d) == 1) has_private = true;
    });
    ok = has_private;
  });
  return ok;
}

bool passes_checker(const Graph& g, Quantity q, const VertexSet& d) {
  switch (q) {
    case Quantity::gamma: return is_dominating(g, d);
    case Quantity::gamma_total: return is_total_dominating(g, d);
    case Quantity::upper: return is_minimal_dominating(g, d);
  }
  return false;
}

VertexClassification classify(const Graph& g, const VertexSet& d) {
  if (!is_dominating(g, d)) throw PreconditionError("classify: set is not dominating");
  VertexClassification c{VertexSet(g.order()), VertexSet(g.order()), {}};
  d.for_each([&](std::size_t v) {
    if (!g.neighbors(v).intersects(d)) {
      c.lonely.set(v);
      return;
    }
    c.social.set(v);
    const Bitset& nv = g.neighbors(v);
    for (std::size_t p = nv.find_first(); p < g.order(); p = nv.find_next(p + 1)) {
      if (!d.test(p) && g.neighbors(p).count_and(d) == 1) {
        c.private_neighbor.emplace(static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(p));
        return;
      }
    }
    throw NotMinimalError(static_cast<std::uint32_t>(v),
                          "social vertex " + std::to_string(v) + " has no private neighbour; set is not minimal");
  });
  return c;
}

VertexSet shrink_to_minimal(const Graph& g, VertexSet d) {
  if (!is_dominating(g, d)) throw PreconditionError("shrink_to_minimal: set is not dominating");
  for (std::size_t v = d.find_first(); v < d.size(); v = d.find_next(v + 1)) {
    d.reset(v);
    if (!is_dominating(g, d)) d.set(v);
  }
  return d;
}

}  // namespace tdom
