#include "powergraph/candidates.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace powergraph {

namespace {

void require_z_domain(const Factorization& f, int a, int s) {
  if (f.prime_count() < 2) throw std::domain_error("complete graph has no cut-set");
  const int na = static_cast<int>(f.exponent(a));
  if (s < 1 || s > na) throw std::invalid_argument("parameter s must be in [1, n_a]");
}

void require_x_domain(const Factorization& f, int a, int b, int s, int t) {
  if (f.prime_count() < 3)
    throw std::invalid_argument("second-type candidates require at least three primes");
  if (a == b) throw std::invalid_argument("prime indices must differ");
  if (s < 1 || s > static_cast<int>(f.exponent(a)))
    throw std::invalid_argument("parameter s must be in [1, n_a]");
  if (t < 1 || t > static_cast<int>(f.exponent(b)))
    throw std::invalid_argument("parameter t must be in [1, n_b]");
}

void check_classes_match(const Factorization& f, std::span<const DivisorClass> classes) {
  if (classes.empty() || classes.front().exponents.size() != f.primes.size())
    throw std::invalid_argument("class list does not match the factorization");
}

void finalize_values(std::span<const DivisorClass> classes, CutCandidate& cand) {
  cand.class_values.reserve(cand.class_indices.size());
  for (std::uint32_t idx : cand.class_indices) cand.class_values.push_back(classes[idx].value);
  std::sort(cand.class_values.begin(), cand.class_values.end());
}

}  // namespace

std::string CutCandidate::label() const {
  if (kind == CandidateKind::Z) return "Z_" + std::to_string(a) + "^" + std::to_string(s);
  return "X_{" + std::to_string(a) + "," + std::to_string(b) + "}^{" + std::to_string(s) + "," +
         std::to_string(t) + "}";
}

bool same_class_set(const CutCandidate& lhs, const CutCandidate& rhs) {
  return lhs.class_values == rhs.class_values;
}

bool candidate_order_less(const CutCandidate& lhs, const CutCandidate& rhs) {
  return std::tuple(lhs.kind, lhs.a, lhs.b, lhs.s, lhs.t) <
         std::tuple(rhs.kind, rhs.a, rhs.b, rhs.s, rhs.t);
}

std::uint64_t q_size(const Factorization& f, int a, int s) {
  if (f.prime_count() < 2) throw std::domain_error("no second prime");
  const int na = static_cast<int>(f.exponent(a));
  if (s < 1 || s > na) throw std::invalid_argument("parameter s must be in [1, n_a]");
  const u128 rad_a = radical_excluding(f, a);
  const u128 phi_rad_a = totient_of_radical_excluding(f, a);
  const u128 scaled = exact_div(f.cofactor(), checked_pow(f.prime(a), static_cast<unsigned>(s - 1)));
  return narrow_u64(checked_mul(scaled, checked_sub(rad_a, phi_rad_a)), "q_size");
}

std::uint64_t q_ab_size(const Factorization& f, int a, int b, int s) {
  if (a == b) throw std::invalid_argument("prime indices must differ");
  const int na = static_cast<int>(f.exponent(a));
  f.exponent(b);  // range check
  if (s < 1 || s > na) throw std::invalid_argument("parameter s must be in [1, n_a]");
  const u128 rad_ab = radical_excluding(f, a, b);
  const u128 phi_rad_ab = totient_of_radical_excluding(f, a, b);
  const u128 scaled = exact_div(f.cofactor(), checked_pow(f.prime(a), static_cast<unsigned>(s - 1)));
  return narrow_u64(checked_mul(checked_mul(scaled, f.prime(b)), checked_sub(rad_ab, phi_rad_ab)),
                    "q_ab_size");
}

std::uint64_t union_subgroup_size(const Factorization& f, std::span<const int> index_set, int a) {
  if (index_set.empty()) throw std::invalid_argument("index set must be nonempty");
  f.prime(a);  // range check
  std::vector<int> sorted(index_set.begin(), index_set.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("index set has repeated entries");
  u128 alpha = 1, phi_alpha = 1;
  for (int i : sorted) {
    if (i == a) throw std::invalid_argument("index a must not belong to the index set");
    alpha = checked_mul(alpha, f.prime(i));
    phi_alpha = checked_mul(phi_alpha, f.prime(i) - 1);
  }
  u128 beta = 1;
  for (int j = 1; j <= f.prime_count(); ++j) {
    if (j == a || std::binary_search(sorted.begin(), sorted.end(), j)) continue;
    beta = checked_mul(beta, f.prime(j));
  }
  const u128 total = checked_mul(checked_mul(f.cofactor(), beta), checked_sub(alpha, phi_alpha));
  return narrow_u64(total, "union_subgroup_size");
}

std::uint64_t z_size(const Factorization& f, int a, int s) {
  require_z_domain(f, a, s);
  const u128 rad_a = radical_excluding(f, a);
  const u128 phi_rad_a = totient_of_radical_excluding(f, a);
  const u128 pa_pow = checked_pow(f.prime(a), static_cast<unsigned>(s - 1));
  // The bracket rad_a + phi_rad_a * (p_a^{s-1} - 2) is positive for every
  // valid s but has a negative factor at s = 1; branch to stay unsigned.
  u128 bracket;
  if (s == 1) {
    bracket = checked_sub(rad_a, phi_rad_a);
  } else {
    bracket = checked_add(rad_a, checked_mul(phi_rad_a, checked_sub(pa_pow, 2)));
  }
  const u128 scaled = exact_div(f.cofactor(), pa_pow);
  const u128 phi_n = totient_from_exponents(f, f.exponents);
  return narrow_u64(checked_add(phi_n, checked_mul(scaled, bracket)), "z_size");
}

std::uint64_t x_size(const Factorization& f, int a, int b, int s, int t) {
  require_x_domain(f, a, b, s, t);
  const std::size_t ai = static_cast<std::size_t>(a) - 1;
  const std::size_t bi = static_cast<std::size_t>(b) - 1;
  u128 top_total = 0;
  std::vector<std::uint32_t> e(f.exponents.begin(), f.exponents.end());
  for (int i = 0; i <= s; ++i) {
    for (int j = 0; j <= t; ++j) {
      if (i == s && j == t) continue;
      e[ai] = f.exponents[ai] - static_cast<std::uint32_t>(i);
      e[bi] = f.exponents[bi] - static_cast<std::uint32_t>(j);
      top_total = checked_add(top_total, totient_from_exponents(f, e));
    }
  }
  e[ai] = f.exponents[ai] - static_cast<std::uint32_t>(s);
  e[bi] = f.exponents[bi] - static_cast<std::uint32_t>(t);
  const u128 sub_order = divisor_from_exponents(f, e);
  const u128 sub_phi = totient_from_exponents(f, e);
  return narrow_u64(checked_add(top_total, checked_sub(sub_order, sub_phi)), "x_size");
}

CutCandidate z_candidate(const Factorization& f, std::span<const DivisorClass> classes, int a,
                         int s) {
  const std::uint64_t closed = z_size(f, a, s);
  check_classes_match(f, classes);
  const std::size_t ai = static_cast<std::size_t>(a) - 1;
  const std::uint32_t na = f.exponent(a);
  const std::uint32_t us = static_cast<std::uint32_t>(s);

  CutCandidate cand;
  cand.kind = CandidateKind::Z;
  cand.a = a;
  cand.s = s;
  u128 enumerated = 0;
  for (std::uint32_t idx = 0; idx < classes.size(); ++idx) {
    const DivisorClass& c = classes[idx];
    bool others_full = true;
    bool others_deficient = false;
    for (std::size_t i = 0; i < c.exponents.size(); ++i) {
      if (i == ai) continue;
      if (c.exponents[i] != f.exponents[i]) others_full = false;
      if (c.exponents[i] < f.exponents[i]) others_deficient = true;
    }
    const bool in_top_layers = others_full && c.exponents[ai] + us > na;
    const bool in_union = others_deficient && c.exponents[ai] + us <= na;
    if (in_top_layers || in_union) {
      cand.class_indices.push_back(idx);
      enumerated = checked_add(enumerated, c.weight);
    }
  }
  if (enumerated != closed)
    throw std::logic_error("Z candidate: closed-form size disagrees with class enumeration");
  cand.size = closed;
  finalize_values(classes, cand);
  return cand;
}

CutCandidate x_candidate(const Factorization& f, std::span<const DivisorClass> classes, int a,
                         int b, int s, int t) {
  const std::uint64_t closed = x_size(f, a, b, s, t);
  check_classes_match(f, classes);
  const std::size_t ai = static_cast<std::size_t>(a) - 1;
  const std::size_t bi = static_cast<std::size_t>(b) - 1;
  const std::uint32_t na = f.exponent(a);
  const std::uint32_t nb = f.exponent(b);
  const std::uint32_t us = static_cast<std::uint32_t>(s);
  const std::uint32_t ut = static_cast<std::uint32_t>(t);

  CutCandidate cand;
  cand.kind = CandidateKind::X;
  cand.a = a;
  cand.b = b;
  cand.s = s;
  cand.t = t;
  u128 enumerated = 0;
  for (std::uint32_t idx = 0; idx < classes.size(); ++idx) {
    const DivisorClass& c = classes[idx];
    bool others_full = true;
    for (std::size_t i = 0; i < c.exponents.size(); ++i) {
      if (i == ai || i == bi) continue;
      if (c.exponents[i] != f.exponents[i]) {
        others_full = false;
        break;
      }
    }
    const bool at_corner = c.exponents[ai] + us == na && c.exponents[bi] + ut == nb;
    const bool in_top = others_full && c.exponents[ai] + us >= na && c.exponents[bi] + ut >= nb &&
                        !(at_corner && others_full);
    const bool in_subgroup = c.exponents[ai] + us <= na && c.exponents[bi] + ut <= nb &&
                             !(at_corner && others_full);
    if (in_top && in_subgroup)
      throw std::logic_error("X candidate: top layers and subgroup part overlap");
    if (in_top || in_subgroup) {
      cand.class_indices.push_back(idx);
      enumerated = checked_add(enumerated, c.weight);
    }
  }
  if (enumerated != closed)
    throw std::logic_error("X candidate: closed-form size disagrees with class enumeration");
  cand.size = closed;
  finalize_values(classes, cand);
  return cand;
}

BoundaryLayers boundary_layers(const Factorization& f, int a, int b, int s, int t) {
  if (a == b) throw std::invalid_argument("prime indices must differ");
  const std::uint32_t na = f.exponent(a);
  const std::uint32_t nb = f.exponent(b);
  if (s < 1 || s > static_cast<int>(na) || t < 1 || t > static_cast<int>(nb))
    throw std::invalid_argument("layer parameters out of range");

  u128 phi_rest = 1;
  for (int i = 1; i <= f.prime_count(); ++i) {
    if (i == a || i == b) continue;
    const std::uint64_t p = f.prime(i);
    phi_rest = checked_mul(phi_rest, checked_mul(checked_pow(p, f.exponent(i) - 1), p - 1));
  }
  const unsigned da = na - static_cast<unsigned>(s);
  const unsigned db = nb - static_cast<unsigned>(t);
  auto phi_prime_power = [&](std::uint64_t p, unsigned e) -> u128 {
    return e == 0 ? u128{1} : checked_mul(checked_pow(p, e - 1), p - 1);
  };

  BoundaryLayers out;
  const u128 tail = checked_mul(checked_pow(f.prime(a), da), checked_pow(f.prime(b), db));
  const u128 tail_phi =
      checked_mul(phi_prime_power(f.prime(a), da), phi_prime_power(f.prime(b), db));
  out.l_size = narrow_u64(checked_mul(phi_rest, checked_sub(tail, tail_phi)), "l_size");
  if (da > 0) {
    const u128 w = checked_mul(phi_rest, phi_prime_power(f.prime(b), db));
    out.m_size = narrow_u64(checked_mul(w, checked_pow(f.prime(a), da - 1)), "m_size");
  }
  if (db > 0) {
    const u128 w = checked_mul(phi_rest, phi_prime_power(f.prime(a), da));
    out.n_size = narrow_u64(checked_mul(w, checked_pow(f.prime(b), db - 1)), "n_size");
  }
  return out;
}

}  // namespace powergraph
