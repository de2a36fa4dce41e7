#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "powergraph/arith.hpp"
#include "powergraph/candidates.hpp"

namespace powergraph {

inline constexpr int kDefaultExhaustiveLimit = 20;

// Compressed model of the power graph of C_n: one node per divisor class,
// weighted by phi(d), with classes adjacent exactly when one divisor divides
// the other. Each class is a clique of the uncompressed graph and every
// minimum cut-set is a union of whole classes, so class-level cuts carry the
// full element-level connectivity information.
struct DivisorGraph {
  Factorization fact;
  std::vector<DivisorClass> nodes;  // lexicographic exponent order
  std::vector<std::vector<int>> neighbors;
  std::vector<std::uint8_t> adjacency;  // dense matrix, row-major

  int node_count() const { return static_cast<int>(nodes.size()); }
  bool is_adjacent(int i, int j) const {
    return adjacency[static_cast<std::size_t>(i) * nodes.size() + static_cast<std::size_t>(j)] !=
           0;
  }
  int index_of_value(std::uint64_t d) const;  // -1 when d is not a node
};

DivisorGraph build_divisor_graph(const Factorization& f, std::size_t class_cap = kDefaultClassCap);

enum class CutStatus { ok, complete_graph };

struct ConnectivityResult {
  CutStatus status = CutStatus::complete_graph;
  std::uint64_t kappa = 0;
  std::vector<int> cut_classes;  // node indices, ascending
};

// Connected components of the survivors after removing the given node
// indices. Throws std::domain_error when every node is removed.
std::vector<std::vector<int>> induced_components(const DivisorGraph& g,
                                                 std::span<const int> removed);

// Minimum total weight of a disconnecting class set, via max-flow on the
// node-split network, minimized over every non-adjacent node pair.
ConnectivityResult weighted_vertex_connectivity(const DivisorGraph& g);

// Independent second oracle: tries every subset of classes as a removal set.
// Throws std::length_error when the node count exceeds class_limit.
ConnectivityResult exhaustive_min_cut(const DivisorGraph& g,
                                      int class_limit = kDefaultExhaustiveLimit);

struct SeparationWitness {
  std::vector<int> side_a;
  std::vector<int> side_b;
};

// Removes the candidate's classes and verifies the expected separation: the
// near side must be exactly the class chain n/p_a^k (s <= k <= n_a) for Z, or
// the single class n/(p_a^s p_b^t) for X. Throws std::logic_error when the
// removal fails to disconnect or the near side differs.
SeparationWitness check_separation(const DivisorGraph& g, const CutCandidate& candidate);

}  // namespace powergraph
