#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tdom::numth {

struct PrimePower {
  std::uint64_t p = 0;
  unsigned alpha = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Sorted by prime; empty for n = 1.
using Factorization = std::vector<PrimePower>;

Factorization factorize(std::uint64_t n);
std::uint64_t reconstruct(const Factorization& f);

unsigned omega(std::uint64_t n);
std::uint64_t radical(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
bool is_squarefree(std::uint64_t n);
bool is_prime(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n);  // smallest prime >= n

// One byte per residue 0..n-1: 1 iff gcd(residue, n) = 1. Built by sieving the prime divisors.
std::vector<std::uint8_t> coprime_table(std::uint64_t n);

struct JacobsthalResult {
  std::uint64_t value = 1;      // g(n)
  std::uint64_t run_start = 0;  // residue where a longest run of non-coprime residues begins
  std::uint64_t run_length = 0; // = value - 1
};

// Jacobsthal's function: the least m such that every m consecutive integers
// contain one coprime to n. Scans the cyclic residue pattern of radical(n),
// so the cost is linear in radical(n).
JacobsthalResult jacobsthal_run(std::uint64_t n);
std::uint64_t jacobsthal(std::uint64_t n);

struct Congruence {
  std::uint64_t residue = 0;
  std::uint64_t modulus = 1;

  // Normalises a possibly negative residue into [0, modulus).
  static Congruence make(std::int64_t residue, std::uint64_t modulus);
};

// Unique x mod prod(moduli) satisfying every congruence; moduli must be pairwise coprime.
Congruence crt_solve(std::span<const Congruence> system);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);  // throws on overflow

}  // namespace tdom::numth
