#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "tdom/theory.hpp"

namespace tdom::theory {

namespace {

using numth::Congruence;

std::uint64_t solve(const std::vector<Congruence>& system) { return numth::crt_solve(system).residue; }

bool dominated_by(std::uint64_t x, const std::vector<std::uint64_t>& D, std::uint64_t n, bool total) {
  for (auto d : D) {
    if (!total && x == d) return true;
    const std::uint64_t diff = x >= d ? x - d : n - (d - x);
    if (std::gcd(diff, n) == 1) return true;
  }
  return false;
}

// Backtracking over "x ≡ d (mod p)" choices: x escapes D exactly when every d shares
// some prime p | n with x, so a residue class per chosen prime is all that matters.
class EscapeSearch {
 public:
  EscapeSearch(std::uint64_t n, const std::vector<std::uint64_t>& D, bool total)
      : n_(n), D_(D), total_(total) {
    for (const auto& pp : numth::factorize(n)) primes_.push_back(pp.p);
    assigned_.assign(primes_.size(), std::nullopt);
  }

  std::optional<std::uint64_t> run() {
    std::vector<std::size_t> pending(D_.size());
    std::iota(pending.begin(), pending.end(), std::size_t{0});
    return search(pending);
  }

 private:
  bool satisfied(std::size_t di) const {
    for (std::size_t k = 0; k < primes_.size(); ++k)
      if (assigned_[k] && *assigned_[k] == D_[di] % primes_[k]) return true;
    return false;
  }

  // Each free prime can absorb at most its largest residue class among the pending members.
  bool capacity_ok(const std::vector<std::size_t>& pending) const {
    std::size_t capacity = 0;
    for (std::size_t k = 0; k < primes_.size() && capacity < pending.size(); ++k) {
      if (assigned_[k]) continue;
      std::map<std::uint64_t, std::size_t> classes;
      std::size_t best = 0;
      for (auto di : pending) best = std::max(best, ++classes[D_[di] % primes_[k]]);
      capacity += best;
    }
    return capacity >= pending.size();
  }

  std::optional<std::uint64_t> search(const std::vector<std::size_t>& pending_in) {
    std::vector<std::size_t> pending;
    for (auto di : pending_in)
      if (!satisfied(di)) pending.push_back(di);
    if (pending.empty()) return leaf();
    if (!capacity_ok(pending)) return std::nullopt;
    const std::size_t di = pending.front();
    for (std::size_t k = 0; k < primes_.size(); ++k) {
      if (assigned_[k]) continue;
      assigned_[k] = D_[di] % primes_[k];
      auto r = search(pending);
      assigned_[k].reset();
      if (r) return r;
    }
    return std::nullopt;
  }

  // Every x in the coset fixed by the assigned residues escapes D's neighbourhoods;
  // for plain domination x must also avoid D itself.
  std::optional<std::uint64_t> leaf() const {
    std::vector<Congruence> system;
    std::uint64_t modulus = 1;
    for (std::size_t k = 0; k < primes_.size(); ++k)
      if (assigned_[k]) {
        system.push_back({*assigned_[k], primes_[k]});
        modulus *= primes_[k];
      }
    const std::uint64_t x0 = system.empty() ? 0 : solve(system);
    const std::uint64_t lifts = n_ / modulus;
    const std::uint64_t tries = total_ ? 1 : std::min<std::uint64_t>(lifts, D_.size() + 1);
    for (std::uint64_t i = 0; i < tries; ++i) {
      const std::uint64_t x = x0 + i * modulus;
      if (total_ || std::find(D_.begin(), D_.end(), x) == D_.end()) return x;
    }
    return std::nullopt;
  }

  std::uint64_t n_;
  const std::vector<std::uint64_t>& D_;
  bool total_;
  std::vector<std::uint64_t> primes_;
  std::vector<std::optional<std::uint64_t>> assigned_;
};

}  // namespace

std::optional<std::uint64_t> find_undominated_residue(std::uint64_t n, const std::vector<std::uint64_t>& D,
                                                      bool total) {
  if (n < 2) throw PreconditionError("find_undominated_residue requires n >= 2");
  std::vector<std::uint64_t> d;
  for (auto v : D) d.push_back(v % n);
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  auto x = EscapeSearch(n, d, total).run();
  if (x && dominated_by(*x, d, n, total))
    throw ConsistencyError("escape search returned a dominated residue " + std::to_string(*x));
  return x;
}

bool scan_dominates(std::uint64_t n, const std::vector<std::uint64_t>& D, bool total) {
  if (n < 2) throw PreconditionError("scan_dominates requires n >= 2");
  const auto coprime = numth::coprime_table(n);
  std::vector<std::uint64_t> d;
  for (auto v : D) d.push_back(v % n);
  std::vector<std::uint8_t> in_d(total ? 0 : n, 0);
  if (!total)
    for (auto v : d) in_d[v] = 1;
  for (std::uint64_t x = 0; x < n; ++x) {
    if (!total && in_d[x]) continue;
    bool hit = false;
    for (auto v : d) {
      const std::uint64_t diff = x >= v ? x - v : x + n - v;
      if (coprime[diff]) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

WitnessN thm6_witness(std::int64_t j, const WitnessOptions& options) {
  if (j < 1) throw PreconditionError("thm6_witness requires j >= 1");
  WitnessN w;
  // Smallest prime q ≡ 1 (mod 3) with 2(q-1)/3 + 2 >= j.
  std::uint64_t q = 7;
  while (!(numth::is_prime(q) && static_cast<std::int64_t>(2 * (q - 1) / 3 + 2) >= j)) q += 6;
  w.q = q;
  w.k = 2 * (q - 1) / 3;
  for (std::uint64_t p = numth::next_prime(q + 3); w.primes.size() < w.k; p = numth::next_prime(p + 1))
    w.primes.push_back(p);

  w.n = numth::checked_mul(3, q);
  for (auto p : w.primes) w.n = numth::checked_mul(w.n, p);
  w.omega = numth::omega(w.n);

  // Moduli a_i for i = 0..q+2: 3 on multiples of 3, q at 1 and q+1, p_l at the l-th
  // non-multiple of 3 in {2..q}.
  std::vector<std::uint64_t> a(q + 3, 0);
  for (std::uint64_t i = 0; i <= q + 2; i += 3) a[i] = 3;
  a[1] = a[q + 1] = q;
  std::size_t l = 0;
  for (std::uint64_t s = 2; s <= q; ++s)
    if (s % 3 != 0) a[s] = w.primes.at(l++);

  std::map<std::uint64_t, Congruence> by_modulus;
  for (std::uint64_t i = 0; i <= q + 2; ++i) {
    const auto c = Congruence::make(-static_cast<std::int64_t>(i), a[i]);
    auto [it, fresh] = by_modulus.emplace(a[i], c);
    if (!fresh && it->second.residue != c.residue)
      throw ConsistencyError("inconsistent run congruences modulo " + std::to_string(a[i]));
  }
  std::vector<Congruence> zsys;
  for (const auto& [m, c] : by_modulus) zsys.push_back(c);
  w.z = solve(zsys);
  w.run_length = q + 3;
  w.run_verified = true;
  for (std::uint64_t i = 0; i < w.run_length; ++i)
    if (std::gcd((w.z + i) % w.n, w.n) == 1) w.run_verified = false;

  std::vector<Congruence> ysys{Congruence::make(1, 3), Congruence::make(-1, q)};
  for (auto p : w.primes) ysys.push_back(Congruence::make(-1, p));
  w.y = solve(ysys);

  for (std::uint64_t i = 0; i <= q + 1; ++i) w.D.push_back(i);
  w.D.push_back(w.y);

  w.symbolic_verified = !find_undominated_residue(w.n, w.D, true).has_value();
  if (w.n <= options.scan_limit) {
    w.scan_verified = scan_dominates(w.n, w.D, true);
    w.g_exact = numth::jacobsthal(w.n);
  }
  return w;
}

Prop1Witness prop1_witness(int family, std::int64_t p1, std::int64_t p2) {
  if (family != 1 && family != 2) throw PreconditionError("prop1 family must be 1 or 2");
  const std::int64_t min_p1 = family == 1 ? 3 : 5;
  if (p1 < min_p1) throw PreconditionError("prop1 family " + std::to_string(family) + " requires p1 >= " +
                                           std::to_string(min_p1));
  if (p2 <= p1) throw PreconditionError("prop1 requires p1 < p2");
  if (!numth::is_prime(static_cast<std::uint64_t>(p1)) || !numth::is_prime(static_cast<std::uint64_t>(p2)))
    throw PreconditionError("prop1 requires prime p1 and p2");

  Prop1Witness w;
  w.family = family;
  w.p1 = static_cast<std::uint64_t>(p1);
  w.p2 = static_cast<std::uint64_t>(p2);

  std::vector<std::uint64_t> moduli{2};
  std::vector<Congruence> xsys{Congruence::make(0, 2)};
  if (family == 2) {
    moduli.push_back(3);
    xsys.push_back(Congruence::make(-1, 3));
  }
  moduli.push_back(w.p1);
  moduli.push_back(w.p2);
  xsys.push_back(Congruence::make(family == 1 ? -1 : -3, w.p1));
  xsys.push_back(Congruence::make(family == 1 ? -3 : -5, w.p2));
  w.n = numth::checked_mul(numth::checked_mul(family == 1 ? 2 : 6, w.p1), w.p2);
  w.x = solve(xsys);
  w.run_length = family == 1 ? 5 : 9;
  w.g_lower = w.run_length + 1;
  w.gamma = family == 1 ? 4 : 8;

  bool run_ok = true;
  for (std::uint64_t i = 0; i < w.run_length; ++i)
    if (std::gcd((w.x + i) % w.n, w.n) == 1) run_ok = false;

  // Corners {(0,0,0),(0,1,1),(1,0,1),(1,1,0)} on the last three prime moduli, with
  // family 2 also taking both residues mod 2.
  static const std::uint64_t corners[4][3] = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  const std::size_t off = moduli.size() - 3;
  const int heads = family == 1 ? 1 : 2;
  for (int h = 0; h < heads; ++h)
    for (const auto& c : corners) {
      std::vector<Congruence> sys;
      if (family == 2) sys.push_back({static_cast<std::uint64_t>(h), 2});
      for (std::size_t i = 0; i < 3; ++i) sys.push_back({c[i], moduli[off + i]});
      w.dominating.push_back(solve(sys));
    }
  std::sort(w.dominating.begin(), w.dominating.end());

  w.g_exact = numth::jacobsthal(w.n);
  const bool dominates = scan_dominates(w.n, w.dominating, false) &&
                         !find_undominated_residue(w.n, w.dominating, false).has_value();
  w.verified = run_ok && dominates && w.dominating.size() == static_cast<std::size_t>(w.gamma) &&
               w.dominating.size() < w.g_lower && w.g_exact >= w.g_lower;
  return w;
}

}  // namespace tdom::theory
