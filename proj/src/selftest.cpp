#include "powergraph/selftest.hpp"

#include <bit>

#include "powergraph/candidates.hpp"

namespace powergraph {

void InequalityCheck::record(std::uint64_t n, const std::string& detail) {
  ++violation_count;
  if (samples.size() < 8) samples.push_back("n=" + std::to_string(n) + ": " + detail);
}

namespace {

void check_phi_layer_monotone(const Factorization& f, InequalityCheck& out) {
  const int r = f.prime_count();
  std::vector<std::uint64_t> layer(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) {
    std::vector<std::uint32_t> e(f.exponents.begin(), f.exponents.end());
    --e[static_cast<std::size_t>(i) - 1];
    layer[static_cast<std::size_t>(i) - 1] = totient_from_exponents(f, e);
  }
  for (int i = 1; i <= r; ++i) {
    for (int k = i; k <= r; ++k) {
      ++out.instances;
      if (layer[static_cast<std::size_t>(i) - 1] < layer[static_cast<std::size_t>(k) - 1])
        out.record(f.n, "phi(n/p_" + std::to_string(i) + ") < phi(n/p_" + std::to_string(k) + ")");
    }
  }
}

void check_product_totient_bound(const Factorization& f, InequalityCheck& out) {
  const int r = f.prime_count();
  for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
    ++out.instances;
    u128 product = 1, phi = 1;
    for (int i = 0; i < r; ++i) {
      if (mask & (1u << i)) {
        product = checked_mul(product, f.primes[static_cast<std::size_t>(i)]);
        phi = checked_mul(phi, f.primes[static_cast<std::size_t>(i)] - 1);
      }
    }
    const unsigned t = static_cast<unsigned>(std::popcount(mask));
    const u128 lhs = checked_mul(u128{t} + 1, phi);
    const bool equality_expected =
        (mask == 0b01u && f.primes[0] == 2) ||
        (mask == 0b11u && r >= 2 && f.primes[0] == 2 && f.primes[1] == 3);
    if (lhs < product)
      out.record(f.n, "(t+1)phi < product for subset mask " + std::to_string(mask));
    else if ((lhs == product) != equality_expected)
      out.record(f.n, "equality case mismatch for subset mask " + std::to_string(mask));
  }
}

void check_totient_inclusion_exclusion(const Factorization& f, InequalityCheck& out) {
  const int r = f.prime_count();
  for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
    if (std::popcount(mask) > 4) continue;
    ++out.instances;
    u128 eta = 1, phi = 1;
    for (int i = 0; i < r; ++i) {
      if (mask & (1u << i)) {
        eta = checked_mul(eta, f.primes[static_cast<std::size_t>(i)]);
        phi = checked_mul(phi, f.primes[static_cast<std::size_t>(i)] - 1);
      }
    }
    // alternating sum of eta / (products of sub-subsets)
    __int128 alternating = 0;
    for (std::uint32_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
      u128 denom = 1;
      for (int i = 0; i < r; ++i) {
        if (sub & (1u << i)) denom = checked_mul(denom, f.primes[static_cast<std::size_t>(i)]);
      }
      const __int128 term = static_cast<__int128>(exact_div(eta, denom));
      alternating += (std::popcount(sub) % 2 == 1) ? term : -term;
    }
    if (static_cast<__int128>(checked_sub(eta, phi)) != alternating)
      out.record(f.n, "expansion mismatch for subset mask " + std::to_string(mask));
  }
}

void check_layer_vs_nongenerators(const Factorization& f, InequalityCheck& out) {
  const int r = f.prime_count();
  if (r < 2) return;
  for (int j = 1; j < r; ++j) {
    ++out.instances;
    std::vector<std::uint32_t> e(f.exponents.begin(), f.exponents.end());
    --e[static_cast<std::size_t>(j) - 1];
    const std::uint64_t layer = totient_from_exponents(f, e);
    --e[static_cast<std::size_t>(r) - 1];
    const std::uint64_t sub_order = divisor_from_exponents(f, e);
    const std::uint64_t sub_phi = totient_from_exponents(f, e);
    if (!(layer > sub_order - sub_phi))
      out.record(f.n, "phi(n/p_" + std::to_string(j) + ") too small against j=" +
                          std::to_string(j) + ", r=" + std::to_string(r));
  }
}

void check_layer_plus_union(const Factorization& f, InequalityCheck& out) {
  const int r = f.prime_count();
  if (r < 3) return;
  const std::uint64_t q_r_1 = q_size(f, r, 1);
  for (int a = 1; a <= r; ++a) {
    for (int b = 1; b <= r; ++b) {
      if (a == b || f.prime(b) == 2) continue;
      ++out.instances;
      std::vector<int> rest;
      for (int j = 1; j <= r; ++j) {
        if (j != a && j != b) rest.push_back(j);
      }
      const std::uint64_t union_size = union_subgroup_size(f, rest, b);
      std::vector<std::uint32_t> e(f.exponents.begin(), f.exponents.end());
      --e[static_cast<std::size_t>(a) - 1];
      const std::uint64_t layer = totient_from_exponents(f, e);
      if (!(u128{layer} + union_size > q_r_1))
        out.record(f.n, "a=" + std::to_string(a) + ", b=" + std::to_string(b));
    }
  }
}

void check_q_union_strictly_decreasing(const Factorization& f, InequalityCheck& out) {
  const int r = f.prime_count();
  if (r < 3) return;
  for (int a = 1; a <= r; ++a) {
    for (int b = a + 1; b <= r; ++b) {
      ++out.instances;
      if (!(q_size(f, a, 1) > q_size(f, b, 1)))
        out.record(f.n, "|Q_" + std::to_string(a) + "^1| <= |Q_" + std::to_string(b) + "^1|");
      if (!(z_size(f, a, 1) > z_size(f, b, 1)))
        out.record(f.n, "|Z_" + std::to_string(a) + "^1| <= |Z_" + std::to_string(b) + "^1|");
    }
  }
}

void check_z_size_monotone_direction(const Factorization& f, InequalityCheck& out) {
  const int r = f.prime_count();
  if (r < 3) return;
  for (int a = 1; a <= r; ++a) {
    const int na = static_cast<int>(f.exponent(a));
    if (na < 2) continue;
    ++out.instances;
    const std::uint64_t rad_a = radical_excluding(f, a);
    const std::uint64_t phi_rad_a = totient_of_radical_excluding(f, a);
    if (2 * u128{phi_rad_a} == rad_a) {
      out.record(f.n, "unexpected equality 2 phi(rad/p_a) = rad/p_a at a=" + std::to_string(a));
      continue;
    }
    const bool increasing = 2 * u128{phi_rad_a} > rad_a;
    for (int s = 1; s < na; ++s) {
      const std::uint64_t lhs = z_size(f, a, s);
      const std::uint64_t rhs = z_size(f, a, s + 1);
      if (increasing ? !(lhs < rhs) : !(lhs > rhs)) {
        out.record(f.n, "direction broken at a=" + std::to_string(a) + ", s=" + std::to_string(s));
        break;
      }
    }
  }
}

}  // namespace

std::vector<InequalityCheck> run_inequality_suite(std::uint64_t lo, std::uint64_t hi) {
  std::vector<InequalityCheck> checks(7);
  checks[0].name = "phi_layer_monotone";
  checks[1].name = "product_totient_bound";
  checks[2].name = "totient_inclusion_exclusion";
  checks[3].name = "layer_vs_nongenerators";
  checks[4].name = "layer_plus_union";
  checks[5].name = "q_union_strictly_decreasing";
  checks[6].name = "z_size_monotone_direction";
  for (std::uint64_t n = lo; n <= hi; ++n) {
    const Factorization f = factorize(n);
    check_phi_layer_monotone(f, checks[0]);
    check_product_totient_bound(f, checks[1]);
    check_totient_inclusion_exclusion(f, checks[2]);
    check_layer_vs_nongenerators(f, checks[3]);
    check_layer_plus_union(f, checks[4]);
    check_q_union_strictly_decreasing(f, checks[5]);
    check_z_size_monotone_direction(f, checks[6]);
  }
  return checks;
}

}  // namespace powergraph
