#include "tdom/numth.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>

#include "tdom/bitset.hpp"
#include "tdom/errors.hpp"

namespace tdom::numth {

namespace {
// Residue scans allocate one bit per residue of radical(n).
constexpr std::uint64_t kMaxScanModulus = std::uint64_t{1} << 32;
}  // namespace

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw CapExceeded("integer overflow: " + std::to_string(a) + " * " + std::to_string(b));
  return r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw PreconditionError("factorize: n must be >= 1");
  Factorization out;
  auto take = [&](std::uint64_t p) {
    unsigned a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    if (a > 0) out.push_back({p, a});
  };
  take(2);
  take(3);
  for (std::uint64_t p = 5; p <= n / p; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::uint64_t reconstruct(const Factorization& f) {
  std::uint64_t n = 1;
  for (const auto& [p, a] : f)
    for (unsigned i = 0; i < a; ++i) n = checked_mul(n, p);
  return n;
}

unsigned omega(std::uint64_t n) { return static_cast<unsigned>(factorize(n).size()); }

std::uint64_t radical(std::uint64_t n) {
  std::uint64_t r = 1;
  for (const auto& pp : factorize(n)) r *= pp.p;
  return r;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& pp : factorize(n)) phi = phi / pp.p * (pp.p - 1);
  return phi;
}

bool is_squarefree(std::uint64_t n) {
  const auto f = factorize(n);
  return std::all_of(f.begin(), f.end(), [](const PrimePower& pp) { return pp.alpha == 1; });
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.size() == 1 && f[0].alpha == 1;
}

std::uint64_t next_prime(std::uint64_t n) {
  if (n <= 2) return 2;
  while (!is_prime(n)) ++n;
  return n;
}

std::vector<std::uint8_t> coprime_table(std::uint64_t n) {
  if (n == 0) throw PreconditionError("coprime_table: n must be >= 1");
  if (n > kMaxScanModulus) throw CapExceeded("coprime_table: modulus too large: " + std::to_string(n));
  std::vector<std::uint8_t> table(n, 1);
  if (n == 1) return table;
  for (const auto& pp : factorize(n))
    for (std::uint64_t r = 0; r < n; r += pp.p) table[r] = 0;
  return table;
}

JacobsthalResult jacobsthal_run(std::uint64_t n) {
  if (n == 0) throw PreconditionError("jacobsthal: n must be >= 1");
  const std::uint64_t m = radical(n);
  if (m > kMaxScanModulus) throw CapExceeded("jacobsthal: radical too large: " + std::to_string(m));
  if (m == 1) return {1, 0, 0};

  // Mark non-coprime residues of the radical; the pattern mod n is this one repeated.
  Bitset blocked(m);
  for (const auto& pp : factorize(m))
    for (std::uint64_t r = 0; r < m; r += pp.p) blocked.set(r);

  // Rotate the scan to start just after a coprime residue (1 always is) so
  // cyclic runs never wrap.
  std::uint64_t best_len = 0;
  std::uint64_t best_start = 0;
  std::uint64_t cur_len = 0;
  std::uint64_t cur_start = 0;
  for (std::uint64_t k = 0; k < m; ++k) {
    const std::uint64_t r = (k + 2) % m;
    if (blocked.test(r)) {
      if (cur_len == 0) cur_start = r;
      ++cur_len;
      if (cur_len > best_len || (cur_len == best_len && cur_start < best_start)) {
        best_len = cur_len;
        best_start = cur_start;
      }
    } else {
      cur_len = 0;
    }
  }
  return {best_len + 1, best_start, best_len};
}

std::uint64_t jacobsthal(std::uint64_t n) { return jacobsthal_run(n).value; }

Congruence Congruence::make(std::int64_t residue, std::uint64_t modulus) {
  if (modulus == 0) throw PreconditionError("congruence modulus must be positive");
  const auto m = static_cast<__int128>(modulus);
  auto r = static_cast<__int128>(residue) % m;
  if (r < 0) r += m;
  return {static_cast<std::uint64_t>(r), modulus};
}

namespace {

// Inverse of a modulo m, for gcd(a, m) = 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    const __int128 q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) throw PreconditionError("crt_solve: moduli are not pairwise coprime");
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Congruence crt_solve(std::span<const Congruence> system) {
  Congruence acc{0, 1};
  for (const Congruence& c : system) {
    if (c.modulus == 0) throw PreconditionError("crt_solve: zero modulus");
    if (std::gcd(acc.modulus, c.modulus) != 1) throw PreconditionError("crt_solve: moduli are not pairwise coprime");
    const std::uint64_t m = checked_mul(acc.modulus, c.modulus);
    // x = acc.residue + acc.modulus * k with k = (c.residue - acc.residue) / acc.modulus mod c.modulus
    const std::uint64_t target = c.residue % c.modulus;
    const std::uint64_t cur = acc.residue % c.modulus;
    const std::uint64_t diff = (target + c.modulus - cur) % c.modulus;
    const std::uint64_t k = mul_mod(diff, inverse_mod(acc.modulus % c.modulus, c.modulus), c.modulus);
    acc.residue = static_cast<std::uint64_t>((static_cast<unsigned __int128>(acc.modulus) * k + acc.residue) % m);
    acc.modulus = m;
  }
  return acc;
}

}  // namespace tdom::numth
