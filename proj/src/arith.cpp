#include "powergraph/arith.hpp"

#include <stdexcept>

namespace powergraph {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(u128{a} * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

constexpr std::uint64_t kMillerRabinBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t p : kMillerRabinBases) {
    if (m % p == 0) return m == p;
  }
  std::uint64_t d = m - 1;
  int twos = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++twos;
  }
  // This fixed base set decides primality exactly for all inputs below 2^64.
  for (std::uint64_t base : kMillerRabinBases) {
    std::uint64_t x = powmod(base, d, m);
    if (x == 1 || x == m - 1) continue;
    bool composite = true;
    for (int i = 1; i < twos; ++i) {
      x = mulmod(x, x, m);
      if (x == m - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n < 2) throw std::domain_error("order must be at least 2");
  Factorization f;
  f.n = n;
  std::uint64_t rest = n;
  auto strip = [&](std::uint64_t p) {
    std::uint32_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) {
      f.primes.push_back(p);
      f.exponents.push_back(e);
    }
  };
  strip(2);
  strip(3);
  for (std::uint64_t p = 5; rest > 1 && p <= rest / p; p += (p % 6 == 5) ? 2 : 4) {
    strip(p);
  }
  if (rest > 1) {
    f.primes.push_back(rest);
    f.exponents.push_back(1);
  }
  f.validate();
  return f;
}

std::uint64_t Factorization::prime(int a) const {
  if (a < 1 || a > prime_count()) throw std::invalid_argument("prime index out of range");
  return primes[static_cast<std::size_t>(a) - 1];
}

std::uint32_t Factorization::exponent(int a) const {
  if (a < 1 || a > prime_count()) throw std::invalid_argument("prime index out of range");
  return exponents[static_cast<std::size_t>(a) - 1];
}

std::uint64_t Factorization::radical() const {
  u128 r = 1;
  for (std::uint64_t p : primes) r = checked_mul(r, p);
  return narrow_u64(r, "radical");
}

std::uint64_t Factorization::cofactor() const { return n / radical(); }

void Factorization::validate() const {
  if (primes.empty() || primes.size() != exponents.size())
    throw std::logic_error("factorization: empty or mismatched prime/exponent lists");
  u128 product = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i > 0 && primes[i - 1] >= primes[i])
      throw std::logic_error("factorization: primes not strictly increasing");
    if (!is_prime(primes[i])) throw std::logic_error("factorization: non-prime factor");
    if (exponents[i] == 0) throw std::logic_error("factorization: zero exponent");
    product = checked_mul(product, checked_pow(primes[i], exponents[i]));
  }
  if (product != n) throw std::logic_error("factorization: factors do not multiply to n");
}

std::uint64_t totient(const DivisorClass& c) { return c.weight; }

std::uint64_t divisor_from_exponents(const Factorization& f, std::span<const std::uint32_t> e) {
  if (e.size() != f.primes.size()) throw std::invalid_argument("exponent vector length mismatch");
  u128 d = 1;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > f.exponents[i]) throw std::invalid_argument("exponent exceeds factorization");
    d = checked_mul(d, checked_pow(f.primes[i], e[i]));
  }
  return narrow_u64(d, "divisor value");
}

std::uint64_t totient_from_exponents(const Factorization& f, std::span<const std::uint32_t> e) {
  if (e.size() != f.primes.size()) throw std::invalid_argument("exponent vector length mismatch");
  u128 w = 1;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > f.exponents[i]) throw std::invalid_argument("exponent exceeds factorization");
    if (e[i] >= 1)
      w = checked_mul(w, checked_mul(checked_pow(f.primes[i], e[i] - 1), f.primes[i] - 1));
  }
  return narrow_u64(w, "totient value");
}

std::uint64_t radical_excluding(const Factorization& f, int skip_a, int skip_b) {
  u128 r = 1;
  for (int i = 1; i <= f.prime_count(); ++i) {
    if (i == skip_a || i == skip_b) continue;
    r = checked_mul(r, f.prime(i));
  }
  return narrow_u64(r, "partial radical");
}

std::uint64_t totient_of_radical_excluding(const Factorization& f, int skip_a, int skip_b) {
  u128 w = 1;
  for (int i = 1; i <= f.prime_count(); ++i) {
    if (i == skip_a || i == skip_b) continue;
    w = checked_mul(w, f.prime(i) - 1);
  }
  return narrow_u64(w, "partial radical totient");
}

std::vector<DivisorClass> divisor_classes(const Factorization& f, std::size_t class_cap) {
  u128 count = 1;
  for (std::uint32_t e : f.exponents) count = checked_mul(count, u128{e} + 1);
  if (count > class_cap) throw std::length_error("divisor lattice too large");

  std::vector<DivisorClass> classes;
  classes.reserve(static_cast<std::size_t>(count));
  std::vector<std::uint32_t> e(f.primes.size(), 0);
  while (true) {
    DivisorClass c;
    c.exponents = e;
    c.value = divisor_from_exponents(f, e);
    c.weight = totient_from_exponents(f, e);
    classes.push_back(std::move(c));
    int i = static_cast<int>(e.size()) - 1;
    while (i >= 0 && e[static_cast<std::size_t>(i)] == f.exponents[static_cast<std::size_t>(i)]) {
      e[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++e[static_cast<std::size_t>(i)];
  }

  u128 total = 0;
  for (const DivisorClass& c : classes) total = checked_add(total, c.weight);
  if (total != f.n) throw std::logic_error("divisor classes: weights do not sum to n");
  return classes;
}

namespace {

// cofactor * p_a / p_a^j, exact for 0 <= j <= n_a + 1 because the cofactor
// carries p_a^{n_a - 1}. The extra p_a in the numerator absorbs the j = 0
// case of the k - 1 exponent in the layer-sum closed form.
u128 deflated_cofactor(const Factorization& f, int a, int j) {
  u128 numerator = checked_mul(f.cofactor(), f.prime(a));
  return exact_div(numerator, checked_pow(f.prime(a), static_cast<unsigned>(j)));
}

}  // namespace

std::uint64_t partial_totient_sum(const Factorization& f, int a, int k, int s) {
  const int na = static_cast<int>(f.exponent(a));
  if (k < 0 || k > s || s > na)
    throw std::invalid_argument("layer sum bounds must satisfy 0 <= k <= s <= n_a");
  const u128 phi_rad_a = totient_of_radical_excluding(f, a);
  u128 total;
  if (s == na) {
    total = checked_mul(phi_rad_a, deflated_cofactor(f, a, k));
  } else {
    total = checked_mul(
        phi_rad_a, checked_sub(deflated_cofactor(f, a, k), deflated_cofactor(f, a, s + 1)));
  }
  return narrow_u64(total, "partial totient sum");
}

std::uint64_t double_totient_sum(const Factorization& f, int a, int b, int s, int t) {
  if (a == b) throw std::invalid_argument("prime indices must differ");
  const int na = static_cast<int>(f.exponent(a));
  const int nb = static_cast<int>(f.exponent(b));
  if (s < 0 || s > na || t < 0 || t > nb)
    throw std::invalid_argument("layer sum bounds out of range");
  u128 phi_rest = 1;
  for (int i = 1; i <= f.prime_count(); ++i) {
    if (i == a || i == b) continue;
    const std::uint64_t p = f.prime(i);
    phi_rest = checked_mul(phi_rest, checked_mul(checked_pow(p, f.exponent(i) - 1), p - 1));
  }
  const u128 total = checked_mul(
      phi_rest, checked_mul(checked_pow(f.prime(a), static_cast<unsigned>(na - s)),
                            checked_pow(f.prime(b), static_cast<unsigned>(nb - t))));
  return narrow_u64(total, "double totient sum");
}

}  // namespace powergraph
