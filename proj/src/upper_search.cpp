#include <algorithm>
#include <vector>

#include "search_budget.hpp"
#include "tdom/domination.hpp"

namespace tdom {

namespace {

using detail::SearchBudget;

// Decides vertices 0..n-1 in order, "in" before "out", so the first maximum
// found is the lexicographically smallest one.
//
// Every member d of a minimal dominating set owns a private witness p in N[d]
// with N[p] ∩ D = {d}. Witness candidates only disappear as D grows, so a
// member without one can be pruned immediately; members added later must take
// their witness from the currently undominated vertices.
class UpperSearch {
 public:
  UpperSearch(const Graph& g, SearchBudget& budget, const UpperOptions& options)
      : g_(g), n_(g.order()), budget_(budget), options_(options) {
    closed_.reserve(n_);
    for (std::size_t v = 0; v < n_; ++v) closed_.push_back(g.closed_neighborhood(v));
    dom_count_.assign(n_, 0);
    avail_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) avail_[v] = closed_[v].count();
    once_ = Bitset(n_);
    multi_ = Bitset(n_);
    in_ = Bitset(n_);
    if (options_.cliques && !options_.cliques->cliques.empty()) clique_size_ = options_.cliques->cliques[0].size();
  }

  void run() { recurse(0); }

  std::size_t best_size() const { return best_.size(); }
  const std::vector<std::uint32_t>& best() const { return best_; }
  bool found() const { return found_; }

 private:
  void add(std::size_t x) {
    in_.set(x);
    members_.push_back(static_cast<std::uint32_t>(x));
    closed_[x].for_each([&](std::size_t p) {
      const auto c = ++dom_count_[p];
      if (c == 1) {
        once_.set(p);
      } else if (c == 2) {
        once_.reset(p);
        multi_.set(p);
      }
    });
  }

  void remove(std::size_t x) {
    in_.reset(x);
    members_.pop_back();
    closed_[x].for_each([&](std::size_t p) {
      const auto c = --dom_count_[p];
      if (c == 0) {
        once_.reset(p);
      } else if (c == 1) {
        multi_.reset(p);
        once_.set(p);
      }
    });
  }

  bool every_member_has_witness() const {
    return std::all_of(members_.begin(), members_.end(),
                       [&](std::uint32_t d) { return closed_[d].intersects(once_); });
  }

  // Marks x "out"; false when some vertex loses its last possible dominator.
  bool exclude(std::size_t x) {
    bool ok = true;
    closed_[x].for_each([&](std::size_t p) {
      if (--avail_[p] == 0) ok = false;
    });
    return ok;
  }

  void unexclude(std::size_t x) {
    closed_[x].for_each([&](std::size_t p) { ++avail_[p]; });
  }

  // Upper bound on the final size of D given vertices < pos are decided.
  std::size_t upper_bound(std::size_t pos) const {
    const std::size_t undecided = n_ - pos;
    std::size_t bound = members_.size() + undecided;
    if (bound <= best_.size()) return bound;

    Bitset undominated = Bitset::full(n_);
    undominated.andnot(once_);
    undominated.andnot(multi_);
    const std::size_t w = undominated.count();
    std::size_t addable = 0;
    for (std::size_t v = pos; v < n_; ++v)
      if (closed_[v].intersects(undominated)) ++addable;
    bound = std::min(bound, members_.size() + std::min(w, addable));

    if (clique_size_ >= 2) {
      // Members already lonely with every neighbour excluded stay lonely; each
      // lonely member claims its whole clique, each social one two vertices.
      std::size_t lonely_fixed = 0;
      for (auto d : members_) {
        const Bitset& nd = g_.neighbors(d);
        if (!nd.intersects(in_) && nd.find_next(pos) == n_) ++lonely_fixed;
      }
      const std::size_t rest = n_ - clique_size_ * lonely_fixed;
      bound = std::min(bound, lonely_fixed + rest / 2);
    }
    return bound;
  }

  void leaf() {
    if (options_.on_minimal) {
      std::size_t lonely = 0;
      for (auto d : members_)
        if (!g_.neighbors(d).intersects(in_)) ++lonely;
      options_.on_minimal(in_, lonely, members_.size() - lonely);
    }
    if (!found_ || members_.size() > best_.size()) {
      best_ = members_;
      found_ = true;
    }
  }

  void recurse(std::size_t pos) {
    if (!budget_.tick()) return;
    if (pos == n_) {
      leaf();
      return;
    }
    if (found_ && upper_bound(pos) <= best_.size()) return;

    add(pos);
    if (every_member_has_witness()) recurse(pos + 1);
    remove(pos);
    if (budget_.exhausted()) return;

    if (exclude(pos)) recurse(pos + 1);
    unexclude(pos);
  }

  const Graph& g_;
  std::size_t n_;
  SearchBudget& budget_;
  const UpperOptions& options_;
  std::vector<Bitset> closed_;
  std::vector<std::uint32_t> dom_count_;
  std::vector<std::size_t> avail_;
  Bitset once_;
  Bitset multi_;
  Bitset in_;
  std::vector<std::uint32_t> members_;
  std::vector<std::uint32_t> best_;
  bool found_ = false;
  std::size_t clique_size_ = 0;
};

}  // namespace

SolveResult gamma_upper_exact(const Graph& g, const Budget& budget, const UpperOptions& options) {
  if (g.order() == 0) throw PreconditionError("gamma_upper_exact on an empty graph");
  if (options.cliques && !is_valid_clique_partition(g, *options.cliques,
                                                    options.cliques->cliques.empty() ? 0 : options.cliques->cliques[0].size()))
    throw PreconditionError("supplied clique partition is not valid for this graph");

  SearchBudget clock(budget);
  UpperSearch search(g, clock, options);
  search.run();

  SolveResult r;
  r.quantity = Quantity::upper;
  r.method = Method::branch_and_bound;
  r.optimal = !clock.exhausted();
  if (search.found()) {
    r.value = search.best_size();
    r.witness = Bitset::from_indices(g.order(), search.best());
  } else {
    // Budget ran out before any leaf: any minimal dominating set is a valid lower witness.
    r.witness = shrink_to_minimal(g, Bitset::full(g.order()));
    r.value = r.witness.count();
  }
  r.nodes = clock.nodes();
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

}  // namespace tdom
