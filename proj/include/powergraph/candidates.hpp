#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "powergraph/arith.hpp"

namespace powergraph {

enum class CandidateKind { Z, X };

// A candidate cut-set as a set of divisor classes. class_indices point into
// the lattice the candidate was built from (lexicographic order);
// class_values hold the same classes as divisors, ascending. size is the
// exact number of group elements covered.
struct CutCandidate {
  CandidateKind kind = CandidateKind::Z;
  int a = 0;
  int b = 0;  // X only
  int s = 0;
  int t = 0;  // X only
  std::vector<std::uint32_t> class_indices;
  std::vector<std::uint64_t> class_values;
  std::uint64_t size = 0;

  std::string label() const;  // "Z_4^1", "X_{3,4}^{1,1}"
};

// Same divisor classes, regardless of the parameters that produced them.
bool same_class_set(const CutCandidate& lhs, const CutCandidate& rhs);

// Ordering by (kind, a, b, s, t), Z before X.
bool candidate_order_less(const CutCandidate& lhs, const CutCandidate& rhs);

// |Q_a^s|: the union of the subgroups of order n / (p_i p_a^s) over i != a.
// Requires r >= 2, s in [1, n_a].
std::uint64_t q_size(const Factorization& f, int a, int s);

// |Q_{a,b}^s|: the same union restricted to i outside {a, b}. Empty (0) when
// r = 2. Requires a != b, s in [1, n_a].
std::uint64_t q_ab_size(const Factorization& f, int a, int b, int s);

// |union over i in index_set of S_{n/(p_i p_a)}| with a outside index_set.
std::uint64_t union_subgroup_size(const Factorization& f, std::span<const int> index_set, int a);

// Closed-form candidate sizes.
std::uint64_t z_size(const Factorization& f, int a, int s);
std::uint64_t x_size(const Factorization& f, int a, int b, int s, int t);

// Candidate constructors. Both the closed-form size and the weighted class
// enumeration are computed; disagreement is a hard std::logic_error.
CutCandidate z_candidate(const Factorization& f, std::span<const DivisorClass> classes, int a,
                         int s);
CutCandidate x_candidate(const Factorization& f, std::span<const DivisorClass> classes, int a,
                         int b, int s, int t);

// Cardinalities of the boundary layers L, M, N of the subgroup part of
// X_{a,b}^{s,t}. m_size = 0 iff s = n_a; n_size = 0 iff t = n_b.
struct BoundaryLayers {
  std::uint64_t l_size = 0;
  std::uint64_t m_size = 0;
  std::uint64_t n_size = 0;
};
BoundaryLayers boundary_layers(const Factorization& f, int a, int b, int s, int t);

}  // namespace powergraph
