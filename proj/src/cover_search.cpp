#include <algorithm>
#include <numeric>
#include <vector>

#include "search_budget.hpp"
#include "tdom/domination.hpp"

namespace tdom {

namespace {

using detail::SearchBudget;

// Minimum cover of all vertices by candidate sets cover[c], c in `allowed`.
// cover is symmetric: cover[c] contains v iff cover[v] contains c, so the
// candidates able to cover v are cover[v] & allowed.
class CoverSearch {
 public:
  CoverSearch(const std::vector<Bitset>& cover, const Bitset& allowed, const ProductStructure* symmetry,
              SearchBudget& budget)
      : cover_(cover), allowed_(allowed), sym_(symmetry), budget_(budget), n_(cover.size()) {
    cand_count_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) cand_count_[v] = cover_[v].count_and(allowed_);
    max_gain_ = 0;
    allowed_.for_each([&](std::size_t c) { max_gain_ = std::max(max_gain_, cover_[c].count()); });
    max_gain_ = std::max<std::size_t>(max_gain_, 1);
  }

  // Searches for a cover of size < limit extending `prefix`. With stop_at_first the
  // search returns as soon as one is found; otherwise it keeps tightening the limit.
  void run(std::vector<std::uint32_t> prefix, std::size_t limit, bool stop_at_first) {
    best_limit_ = limit;
    stop_at_first_ = stop_at_first;
    Bitset uncovered = Bitset::full(n_);
    for (auto c : prefix) uncovered.andnot(cover_[c]);
    chosen_ = std::move(prefix);
    recurse(uncovered);
  }

  bool found() const { return found_; }
  std::size_t best_size() const { return best_.size(); }
  const std::vector<std::uint32_t>& best() const { return best_; }
  bool aborted() const { return budget_.exhausted(); }

 private:
  bool done() const { return budget_.exhausted() || (stop_at_first_ && found_); }

  void record() {
    best_ = chosen_;
    found_ = true;
    best_limit_ = chosen_.size();
  }

  // Fewest candidates needed to cover |U| vertices given the multiset of current gains.
  std::size_t gain_bound(const Bitset& uncovered, std::size_t remaining) {
    std::vector<std::size_t>& hist = gain_hist_;
    hist.assign(max_gain_ + 1, 0);
    allowed_.for_each([&](std::size_t c) { ++hist[cover_[c].count_and(uncovered)]; });
    std::size_t covered = 0;
    std::size_t used = 0;
    for (std::size_t gval = max_gain_; gval > 0 && covered < remaining; --gval) {
      const std::size_t take_all = hist[gval];
      if (take_all == 0) continue;
      const std::size_t need = (remaining - covered + gval - 1) / gval;
      if (need <= take_all) return used + need;
      used += take_all;
      covered += take_all * gval;
    }
    return covered >= remaining ? used : n_ + 1;
  }

  // Uncovered vertices with pairwise disjoint candidate sets each need their own pick.
  std::size_t packing_bound(const Bitset& uncovered) {
    Bitset& claimed = scratch_;
    claimed = Bitset(n_);
    std::size_t count = 0;
    uncovered.for_each([&](std::size_t v) {
      Bitset cand = cover_[v];
      cand &= allowed_;
      if (!cand.intersects(claimed)) {
        claimed |= cand;
        ++count;
      }
    });
    return count;
  }

  // True when candidate c is not the canonical member of its orbit under the
  // per-factor automorphisms fixing every chosen vertex and u.
  bool symmetric_duplicate(std::size_t u, std::size_t c) const {
    const std::size_t t = sym_->factors.size();
    const auto cc = sym_->coord(c);
    for (std::size_t i = 0; i < t; ++i) {
      const auto b = static_cast<std::uint32_t>(sym_->factors[i].b);
      const auto order = static_cast<std::uint32_t>(sym_->factors[i].order());
      auto used = [&](std::uint32_t x) {
        if (sym_->coord(u)[i] == x) return true;
        for (auto s : chosen_)
          if (sym_->coord(s)[i] == x) return true;
        return false;
      };
      auto class_used = [&](std::uint32_t cls) {
        if (sym_->coord(u)[i] % b == cls) return true;
        for (auto s : chosen_)
          if (sym_->coord(s)[i] % b == cls) return true;
        return false;
      };
      const std::uint32_t x = cc[i];
      if (used(x)) continue;
      std::uint32_t rep = x;
      if (class_used(x % b)) {
        for (std::uint32_t y = x % b; y < order; y += b)
          if (!used(y)) {
            rep = y;
            break;
          }
      } else {
        for (std::uint32_t cls = 0; cls < b; ++cls)
          if (!class_used(cls)) {
            rep = cls;
            break;
          }
      }
      if (rep != x) return true;
    }
    return false;
  }

  void recurse(const Bitset& uncovered) {
    if (!budget_.tick()) return;
    const std::size_t remaining = uncovered.count();
    if (remaining == 0) {
      if (chosen_.size() < best_limit_) record();
      return;
    }
    const std::size_t depth = chosen_.size();
    if (depth + 1 >= best_limit_) return;
    if (depth + (remaining + max_gain_ - 1) / max_gain_ >= best_limit_) return;

    // Branch on the uncovered vertex with fewest candidates.
    std::size_t u = n_;
    std::size_t fewest = n_ + 1;
    uncovered.for_each([&](std::size_t v) {
      if (cand_count_[v] < fewest) {
        fewest = cand_count_[v];
        u = v;
      }
    });
    if (fewest == 0) return;

    if (depth + gain_bound(uncovered, remaining) >= best_limit_) return;
    if (depth + packing_bound(uncovered) >= best_limit_) return;

    std::vector<std::pair<std::size_t, std::uint32_t>> cands;
    cands.reserve(fewest);
    Bitset cand_set = cover_[u];
    cand_set &= allowed_;
    cand_set.for_each([&](std::size_t c) {
      if (sym_ && symmetric_duplicate(u, c)) return;
      cands.emplace_back(cover_[c].count_and(uncovered), static_cast<std::uint32_t>(c));
    });
    std::sort(cands.begin(), cands.end(), [](const auto& x, const auto& y) {
      return x.first != y.first ? x.first > y.first : x.second < y.second;
    });

    Bitset next(n_);
    for (const auto& [gain, c] : cands) {
      if (done()) return;
      if (depth + 1 + (remaining - gain + max_gain_ - 1) / max_gain_ >= best_limit_) continue;
      next = uncovered;
      next.andnot(cover_[c]);
      chosen_.push_back(c);
      recurse(next);
      chosen_.pop_back();
    }
  }

  const std::vector<Bitset>& cover_;
  const Bitset& allowed_;
  const ProductStructure* sym_;
  SearchBudget& budget_;
  std::size_t n_;
  std::vector<std::size_t> cand_count_;
  std::size_t max_gain_ = 1;

  std::vector<std::uint32_t> chosen_;
  std::vector<std::uint32_t> best_;
  std::size_t best_limit_ = 0;
  bool found_ = false;
  bool stop_at_first_ = false;
  std::vector<std::size_t> gain_hist_;
  Bitset scratch_;
};

std::vector<std::uint32_t> greedy_cover(const std::vector<Bitset>& cover) {
  const std::size_t n = cover.size();
  Bitset uncovered = Bitset::full(n);
  std::vector<std::uint32_t> picks;
  while (uncovered.any()) {
    std::size_t best_c = 0;
    std::size_t best_gain = 0;
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t gain = cover[c].count_and(uncovered);
      if (gain > best_gain) {
        best_gain = gain;
        best_c = c;
      }
    }
    picks.push_back(static_cast<std::uint32_t>(best_c));
    uncovered.andnot(cover[best_c]);
  }
  return picks;
}

// Lexicographically smallest cover of the given size: fix members one position at a
// time, taking the smallest index that still admits a completion from larger indices.
std::optional<std::vector<std::uint32_t>> lex_smallest_cover(const std::vector<Bitset>& cover, std::size_t size,
                                                             SearchBudget& budget) {
  const std::size_t n = cover.size();
  std::vector<std::uint32_t> prefix;
  std::size_t start = 0;
  while (prefix.size() < size) {
    bool extended = false;
    for (std::size_t v = start; v < n && !extended; ++v) {
      std::vector<std::uint32_t> trial = prefix;
      trial.push_back(static_cast<std::uint32_t>(v));
      Bitset allowed(n);
      for (std::size_t w = v + 1; w < n; ++w) allowed.set(w);
      CoverSearch s(cover, allowed, nullptr, budget);
      s.run(trial, size + 1, true);
      if (budget.exhausted()) return std::nullopt;
      if (s.found()) {
        prefix = std::move(trial);
        start = v + 1;
        extended = true;
        // A completion might need fewer than `size` members; pad is impossible
        // since `size` is optimal, so found() implies an exact-size cover.
      }
    }
    if (!extended) return std::nullopt;
  }
  return prefix;
}

SolveResult solve_cover(const Graph& g, Quantity q, std::vector<Bitset> cover, const Budget& budget) {
  SearchBudget clock(budget);
  const std::size_t n = g.order();
  SolveResult r;
  r.quantity = q;
  r.method = Method::branch_and_bound;

  const std::vector<std::uint32_t> greedy = greedy_cover(cover);
  const Bitset allowed = Bitset::full(n);
  const ProductStructure* sym = g.product() ? &*g.product() : nullptr;

  CoverSearch search(cover, allowed, sym, clock);
  search.run({}, greedy.size(), false);
  std::vector<std::uint32_t> best = search.found() ? search.best() : greedy;
  r.optimal = !search.aborted();

  if (budget.deterministic && r.optimal) {
    if (auto lex = lex_smallest_cover(cover, best.size(), clock)) best = std::move(*lex);
  }

  r.value = best.size();
  r.witness = Bitset::from_indices(n, best);
  r.nodes = clock.nodes();
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

}  // namespace

SolveResult gamma_exact(const Graph& g, const Budget& budget) {
  if (g.order() == 0) throw PreconditionError("gamma_exact on an empty graph");
  std::vector<Bitset> cover;
  cover.reserve(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) cover.push_back(g.closed_neighborhood(v));
  return solve_cover(g, Quantity::gamma, std::move(cover), budget);
}

SolveResult gamma_total_exact(const Graph& g, const Budget& budget) {
  if (g.order() == 0) throw PreconditionError("gamma_total_exact on an empty graph");
  if (g.has_isolated_vertex()) throw PreconditionError("graph has an isolated vertex; no total dominating set exists");
  std::vector<Bitset> cover;
  cover.reserve(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) cover.push_back(g.neighbors(v));
  return solve_cover(g, Quantity::gamma_total, std::move(cover), budget);
}

}  // namespace tdom
