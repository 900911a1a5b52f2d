#include <algorithm>
#include <numeric>
#include <string>

#include "tdom/theory.hpp"

namespace tdom::theory {

namespace {

// Collects bound contributions; lo and hi are settled in finish().
class Collector {
 public:
  Collector(Quantity q, bool lower_only = false) : lower_only_(lower_only) { report_.quantity = q; }

  void lower(std::string tag, std::int64_t v, std::string note = {}) {
    report_.provenance.push_back({std::move(tag), Side::lower, v, std::move(note)});
  }
  void upper(std::string tag, std::int64_t v, std::string note = {}) {
    if (lower_only_) return;
    report_.provenance.push_back({std::move(tag), Side::upper, v, std::move(note)});
  }
  void exact(std::string tag, std::int64_t v, std::string note = {}) {
    report_.provenance.push_back({std::move(tag), lower_only_ ? Side::lower : Side::exact, v, std::move(note)});
  }

  std::int64_t lo() const {
    std::int64_t lo = 0;
    for (const auto& p : report_.provenance)
      if (p.side != Side::upper) lo = std::max(lo, p.value);
    return lo;
  }
  std::optional<std::int64_t> hi() const {
    std::optional<std::int64_t> hi;
    for (const auto& p : report_.provenance)
      if (p.side != Side::lower) hi = hi ? std::min(*hi, p.value) : p.value;
    return hi;
  }

  BoundReport finish(std::int64_t fallback_hi) {
    report_.lo = lo();
    report_.hi = hi().value_or(fallback_hi);
    if (report_.lo > report_.hi)
      throw ConsistencyError("bound composition: lo = " + std::to_string(report_.lo) + " exceeds hi = " +
                             std::to_string(report_.hi));
    report_.exact = report_.lo == report_.hi;
    return std::move(report_);
  }

  BoundReport& report() { return report_; }

 private:
  BoundReport report_;
  bool lower_only_;
};

std::int64_t vertex_count(const std::vector<std::int64_t>& sizes) {
  std::uint64_t n = 1;
  for (auto s : sizes) n = numth::checked_mul(n, static_cast<std::uint64_t>(s));
  return static_cast<std::int64_t>(n);
}

// Rules for the product of complete graphs K_{n_1} x ... x K_{n_t}, n_i sorted.
void complete_rules(Collector& c, const std::vector<std::int64_t>& n) {
  const auto t = static_cast<std::int64_t>(n.size());
  if (t == 1) {
    c.exact("trivial", 1, "K_n has a universal vertex");
    return;
  }
  const auto s = static_cast<std::int64_t>(std::count(n.begin(), n.end(), 2));

  if (t == 2) {
    c.exact("thm1", n[0] == 2 ? 2 : 3, "t = 2");
  } else if (t == 3) {
    c.exact("thm1", 4, "t = 3");
  } else if (n[0] >= t + 1) {
    c.exact("thm1", t + 1, "n_1 >= t+1");
  } else {
    c.lower("thm1", t + 1, "t >= 4");
  }

  if (t >= 4 && n[1] >= 3) {
    const auto l2 = t + 1 + (t - 1) / (n[0] - 1);
    c.lower("thm2", l2);
    if (n[2] >= t + 1) {
      const bool characterised = n[0] == t || (t + 1 < 2 * n[0] && n[0] <= t - 1 && t + 1 < n[1]);
      if (characterised)
        c.exact("thm3", t + 2, "gamma = t+2 characterisation holds");
      else if (c.lo() == t + 2)
        c.lower("thm3", t + 3, "gamma >= t+2 but the t+2 characterisation fails");
    }
  }

  if (t >= 3) {
    // Smallest m with (t+m)/(m+1) < n_1.
    std::int64_t m = t < n[0] ? 0 : (t - n[0]) / (n[0] - 1) + 1;
    if (t + m < n[1]) c.upper("lemma3", t + m + 1, "diagonal set with m = " + std::to_string(m));
  }

  if (t == 4 && n[0] == 2) c.exact("cube_corner", 8);

  if (s >= 2) {
    std::vector<std::int64_t> k2_rest{2};
    k2_rest.insert(k2_rest.end(), n.begin() + s, n.end());
    Collector sub(Quantity::gamma);
    complete_rules(sub, k2_rest);
    const std::int64_t scale = std::int64_t{1} << (s - 1);
    const std::string note = "2^" + std::to_string(s - 1) + " * gamma(K_2 x rest)";
    c.lower("lemma1", scale * sub.lo(), note);
    if (auto h = sub.hi()) c.upper("lemma1", scale * *h, note);
  }

  c.lower("trivial", 1);
  c.upper("trivial", vertex_count(n), "|V|");
}

std::vector<std::int64_t> sorted_complete_sizes(const ProductSpec& spec, std::string_view what) {
  if (!spec.all_complete()) throw PreconditionError(std::string(what) + " requires all a_i = 1");
  auto n = spec.complete_sizes();
  if (!std::is_sorted(n.begin(), n.end())) throw PreconditionError(std::string(what) + " requires sorted n_i");
  return n;
}

}  // namespace

std::int64_t eq7_value(std::int64_t n) {
  if (n < 2) throw PreconditionError("eq7_value requires n >= 2");
  const auto u = static_cast<std::uint64_t>(n);
  if (!numth::is_squarefree(u)) throw PreconditionError("eq7_value requires squarefree n");
  const auto f = numth::factorize(u);
  switch (f.size()) {
    case 1: return 1;
    case 2: return f[0].p == 2 ? 2 : 3;
    case 3: return 4;
    default: throw PreconditionError("eq7_value requires omega(n) <= 3");
  }
}

std::int64_t thm2_lower(const ProductSpec& spec) {
  const auto n = sorted_complete_sizes(spec, "thm2_lower");
  const auto t = static_cast<std::int64_t>(n.size());
  if (t < 4) throw PreconditionError("thm2_lower requires t >= 4");
  if (n[1] < 3) throw PreconditionError("thm2_lower requires n_2 >= 3");
  return t + 1 + (t - 1) / (n[0] - 1);
}

Rational lemma6_lower(std::int64_t n) {
  if (n < 2) throw PreconditionError("lemma6_lower requires n >= 2");
  const auto u = static_cast<std::uint64_t>(n);
  const auto f = numth::factorize(u);
  if (f.size() > 3) throw PreconditionError("lemma6_lower requires omega(n) <= 3");
  if (numth::is_squarefree(u)) throw PreconditionError("lemma6_lower requires n not squarefree");
  const auto p1 = static_cast<std::int64_t>(f[0].p);
  Rational r{p1 * static_cast<std::int64_t>(f.size()), p1 - 1};
  const auto g = std::gcd(r.num, r.den);
  return {r.num / g, r.den / g};
}

BoundReport mekis_bound(const ProductSpec& spec) {
  const auto n = sorted_complete_sizes(spec, "mekis_bound");
  const auto t = static_cast<std::int64_t>(n.size());
  if (t < 2) throw PreconditionError("mekis_bound requires t >= 2");
  Collector c(Quantity::gamma);
  if (t == 2)
    c.exact("thm1", n[0] == 2 ? 2 : 3, "t = 2");
  else if (t == 3)
    c.exact("thm1", 4, "t = 3");
  else if (n[0] >= t + 1)
    c.exact("thm1", t + 1, "n_1 >= t+1");
  else
    c.lower("thm1", t + 1, "t >= 4");
  c.upper("trivial", vertex_count(n), "|V|");
  return c.finish(vertex_count(n));
}

BoundReport gamma_bounds(const ProductSpec& input) {
  const ProductSpec spec = input.canonical();
  const auto nv = static_cast<std::int64_t>(spec.vertex_count());
  Collector c(Quantity::gamma);

  if (spec.t() == 1) {
    const auto& f = spec.factors[0];
    c.exact("trivial", f.a == 1 ? 1 : 2, f.a == 1 ? "K_b has a universal vertex" : "two vertices from different parts");
    return c.finish(nv);
  }

  const auto sizes = spec.complete_sizes();
  if (spec.all_complete()) {
    complete_rules(c, sizes);
  } else {
    Collector sub(Quantity::gamma, true);
    complete_rules(sub, sizes);
    std::string via;
    for (const auto& p : sub.report().provenance)
      if (p.value == sub.lo()) {
        via = p.tag;
        break;
      }
    c.lower("lemma5", sub.lo(), "gamma of the product of K_{b_i}, via " + via);
    c.lower("trivial", 1);
    c.upper("trivial", nv, "|V|");
  }
  return c.finish(nv);
}

BoundReport ucg_gamma_bounds(std::int64_t n) {
  if (n < 2) throw PreconditionError("ucg_gamma_bounds requires n >= 2");
  const auto u = static_cast<std::uint64_t>(n);
  const auto f = numth::factorize(u);
  std::vector<Factor> factors;
  for (const auto& pp : f) {
    std::uint64_t a = 1;
    for (unsigned i = 1; i < pp.alpha; ++i) a *= pp.p;
    factors.push_back(Factor::make(static_cast<std::int64_t>(a), static_cast<std::int64_t>(pp.p)));
  }

  Collector c(Quantity::gamma);
  for (auto& p : gamma_bounds(ProductSpec::make(factors)).provenance) c.report().provenance.push_back(p);

  std::optional<std::int64_t> g;
  try {
    g = static_cast<std::int64_t>(numth::jacobsthal(u));
  } catch (const CapExceeded&) {
  }
  if (g) c.upper("g_upper", *g, "gamma <= gamma_t <= g(n)");

  const bool squarefree = numth::is_squarefree(u);
  if (f.size() <= 3) {
    if (squarefree) {
      c.exact("eq7", eq7_value(n));
    } else {
      const Rational r = lemma6_lower(n);
      c.lower("lemma6", r.ceil(), std::to_string(r.num) + "/" + std::to_string(r.den));
      if (g) c.exact("thm4", *g, "n not squarefree, omega(n) <= 3");
    }
  }
  return c.finish(n);
}

BoundReport upper_bounds(const ProductSpec& input) {
  const ProductSpec spec = input.canonical();
  const auto nv = static_cast<std::int64_t>(spec.vertex_count());
  const auto t = static_cast<std::int64_t>(spec.t());
  const auto b1 = spec.factors[0].b;
  const std::int64_t conj = nv / b1;

  Collector c(Quantity::upper);
  c.lower("prop2", conj, "first coordinate in one part of K[a_1,b_1]");
  if (b1 == 2) c.exact("evenupdom", conj, "b_1 = 2");
  if (t <= 2) c.exact("prop3", conj, "t <= 2");
  if (t == 3) c.exact("cor1", conj, "t = 3");
  if (t >= 3) {
    std::vector<std::size_t> kappa(spec.t());
    std::iota(kappa.begin(), kappa.end(), std::size_t{0});
    std::stable_sort(kappa.begin(), kappa.end(),
                     [&](std::size_t x, std::size_t y) { return spec.factors[x].order() < spec.factors[y].order(); });
    const auto& k1 = spec.factors[kappa[0]];
    const auto& k2 = spec.factors[kappa[1]];
    const auto& k3 = spec.factors[kappa[2]];
    const std::int64_t rhs = k1.a * k2.order() * k3.order();
    if (t * (t - 1) * (t - 2) + 3 <= rhs)
      c.exact("thm5", conj, std::to_string(t * (t - 1) * (t - 2) + 3) + " <= " + std::to_string(rhs));
  }
  // b_1 l + 2 s <= n with b_1 >= 2 gives 2|D| <= n for every minimal dominating set.
  c.upper("evenupdom", nv / 2, "packing: 2|D| <= b_1 l + 2 s <= n");
  BoundReport r = c.finish(nv);
  r.conjectured = conj;
  return r;
}

}  // namespace tdom::theory
