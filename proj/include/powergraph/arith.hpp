#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "powergraph/int128.hpp"

namespace powergraph {

inline constexpr std::size_t kDefaultClassCap = 4096;
inline constexpr std::uint64_t kMaxOrder = (std::uint64_t{1} << 63) - 1;

// Prime-power decomposition n = p_1^{n_1} * ... * p_r^{n_r}, p_1 < ... < p_r.
// Prime indices are 1-based throughout the library so that parameters read the
// same as in candidate labels like Z_4^1.
struct Factorization {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> primes;
  std::vector<std::uint32_t> exponents;

  int prime_count() const { return static_cast<int>(primes.size()); }
  std::uint64_t prime(int a) const;
  std::uint32_t exponent(int a) const;

  std::uint64_t radical() const;   // p_1 * ... * p_r
  std::uint64_t cofactor() const;  // n / radical()

  // Throws std::logic_error if a structural invariant is broken.
  void validate() const;
};

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t m);

// Trial division with a 2/3 wheel. Throws std::domain_error for n < 2.
Factorization factorize(std::uint64_t n);

// A divisor d = prod p_i^{e_i} of n, standing for the phi(d) elements of
// order d. weight == phi(value), established at construction.
struct DivisorClass {
  std::vector<std::uint32_t> exponents;
  std::uint64_t value = 1;
  std::uint64_t weight = 1;
};

// phi of the class divisor; equals the number of generators of the cyclic
// subgroup of that order.
std::uint64_t totient(const DivisorClass& c);

std::uint64_t divisor_from_exponents(const Factorization& f, std::span<const std::uint32_t> e);
std::uint64_t totient_from_exponents(const Factorization& f, std::span<const std::uint32_t> e);

// prod over i != skip_a, skip_b of p_i, and its totient. Skips are 1-based,
// 0 means "skip nothing".
std::uint64_t radical_excluding(const Factorization& f, int skip_a = 0, int skip_b = 0);
std::uint64_t totient_of_radical_excluding(const Factorization& f, int skip_a = 0, int skip_b = 0);

// Every divisor class of n, ordered lexicographically by exponent vector.
// Throws std::length_error once the class count exceeds class_cap.
std::vector<DivisorClass> divisor_classes(const Factorization& f,
                                          std::size_t class_cap = kDefaultClassCap);

// sum_{l=k}^{s} phi(n / p_a^l) in closed form, 0 <= k <= s <= n_a.
std::uint64_t partial_totient_sum(const Factorization& f, int a, int k, int s);

// sum_{k=s}^{n_a} sum_{l=t}^{n_b} phi(n / (p_a^k p_b^l)) in closed form,
// a != b, 0 <= s <= n_a, 0 <= t <= n_b.
std::uint64_t double_totient_sum(const Factorization& f, int a, int b, int s, int t);

}  // namespace powergraph
