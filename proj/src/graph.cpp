#include "powergraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <stdexcept>

namespace powergraph {

int DivisorGraph::index_of_value(std::uint64_t d) const {
  for (int i = 0; i < node_count(); ++i) {
    if (nodes[static_cast<std::size_t>(i)].value == d) return i;
  }
  return -1;
}

DivisorGraph build_divisor_graph(const Factorization& f, std::size_t class_cap) {
  DivisorGraph g;
  g.fact = f;
  g.nodes = divisor_classes(f, class_cap);
  const std::size_t m = g.nodes.size();
  g.neighbors.assign(m, {});
  g.adjacency.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::uint64_t di = g.nodes[i].value;
      const std::uint64_t dj = g.nodes[j].value;
      if (dj % di == 0 || di % dj == 0) {
        g.adjacency[i * m + j] = 1;
        g.adjacency[j * m + i] = 1;
        g.neighbors[i].push_back(static_cast<int>(j));
        g.neighbors[j].push_back(static_cast<int>(i));
      }
    }
  }
  return g;
}

std::vector<std::vector<int>> induced_components(const DivisorGraph& g,
                                                 std::span<const int> removed) {
  const int m = g.node_count();
  std::vector<char> gone(static_cast<std::size_t>(m), 0);
  for (int idx : removed) {
    if (idx < 0 || idx >= m) throw std::invalid_argument("removed node index out of range");
    gone[static_cast<std::size_t>(idx)] = 1;
  }
  if (std::count(gone.begin(), gone.end(), char{1}) == m)
    throw std::domain_error("empty residual graph");

  std::vector<std::vector<int>> components;
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  for (int start = 0; start < m; ++start) {
    if (gone[static_cast<std::size_t>(start)] || seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> comp;
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors[static_cast<std::size_t>(v)]) {
        if (!gone[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

namespace {

// Node-split flow network: class i becomes arc in(i) -> out(i) of capacity
// phi(d_i); each adjacency contributes two infinite arcs out(i) -> in(j) and
// out(j) -> in(i). The only finite arcs are the node arcs, so a minimum cut
// reads off directly as a set of classes.
class SplitNetwork {
 public:
  explicit SplitNetwork(const DivisorGraph& g) : m_(g.node_count()) {
    infinite_ = g.fact.n + 1;  // exceeds the total node weight
    const int vertex_count = 2 * m_;
    head_.assign(static_cast<std::size_t>(vertex_count), {});
    node_arc_.resize(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i)
      node_arc_[static_cast<std::size_t>(i)] =
          add_arc(in(i), out(i), g.nodes[static_cast<std::size_t>(i)].weight);
    for (int i = 0; i < m_; ++i) {
      for (int j : g.neighbors[static_cast<std::size_t>(i)]) add_arc(out(i), in(j), infinite_);
    }
    initial_cap_ = cap_;
    level_.resize(static_cast<std::size_t>(vertex_count));
    iter_.resize(static_cast<std::size_t>(vertex_count));
  }

  static int in(int i) { return 2 * i; }
  static int out(int i) { return 2 * i + 1; }

  std::uint64_t max_flow(int source, int sink) {
    cap_ = initial_cap_;
    std::uint64_t flow = 0;
    while (bfs(source, sink)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      while (std::uint64_t pushed = dfs(source, sink, infinite_)) flow += pushed;
    }
    return flow;
  }

  // Classes whose node arc crosses the source-side/sink-side boundary of the
  // last computed flow.
  std::vector<int> min_cut_classes(int source) const {
    std::vector<char> reach(head_.size(), 0);
    std::vector<int> stack{source};
    reach[static_cast<std::size_t>(source)] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int e : head_[static_cast<std::size_t>(v)]) {
        const int w = to_[static_cast<std::size_t>(e)];
        if (cap_[static_cast<std::size_t>(e)] > 0 && !reach[static_cast<std::size_t>(w)]) {
          reach[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    std::vector<int> cut;
    for (int i = 0; i < m_; ++i) {
      if (reach[static_cast<std::size_t>(in(i))] && !reach[static_cast<std::size_t>(out(i))])
        cut.push_back(i);
    }
    return cut;
  }

 private:
  int add_arc(int from, int to, std::uint64_t capacity) {
    const int id = static_cast<int>(to_.size());
    to_.push_back(to);
    cap_.push_back(capacity);
    head_[static_cast<std::size_t>(from)].push_back(id);
    to_.push_back(from);
    cap_.push_back(0);
    head_[static_cast<std::size_t>(to)].push_back(id + 1);
    return id;
  }

  bool bfs(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    queue.push(source);
    level_[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int e : head_[static_cast<std::size_t>(v)]) {
        const int w = to_[static_cast<std::size_t>(e)];
        if (cap_[static_cast<std::size_t>(e)] > 0 && level_[static_cast<std::size_t>(w)] < 0) {
          level_[static_cast<std::size_t>(w)] = level_[static_cast<std::size_t>(v)] + 1;
          queue.push(w);
        }
      }
    }
    return level_[static_cast<std::size_t>(sink)] >= 0;
  }

  std::uint64_t dfs(int v, int sink, std::uint64_t limit) {
    if (v == sink) return limit;
    for (int& i = iter_[static_cast<std::size_t>(v)];
         i < static_cast<int>(head_[static_cast<std::size_t>(v)].size()); ++i) {
      const int e = head_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
      const int w = to_[static_cast<std::size_t>(e)];
      if (cap_[static_cast<std::size_t>(e)] == 0 ||
          level_[static_cast<std::size_t>(w)] != level_[static_cast<std::size_t>(v)] + 1)
        continue;
      const std::uint64_t pushed =
          dfs(w, sink, std::min(limit, cap_[static_cast<std::size_t>(e)]));
      if (pushed > 0) {
        cap_[static_cast<std::size_t>(e)] -= pushed;
        cap_[static_cast<std::size_t>(e ^ 1)] += pushed;
        return pushed;
      }
    }
    return 0;
  }

  int m_;
  std::uint64_t infinite_;
  std::vector<int> to_;
  std::vector<std::uint64_t> cap_;
  std::vector<std::uint64_t> initial_cap_;
  std::vector<std::vector<int>> head_;
  std::vector<int> node_arc_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace

ConnectivityResult weighted_vertex_connectivity(const DivisorGraph& g) {
  const int m = g.node_count();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (!g.is_adjacent(i, j)) pairs.emplace_back(i, j);
    }
  }
  if (pairs.empty()) return {CutStatus::complete_graph, 0, {}};

  SplitNetwork net(g);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::pair<int, int> best_pair = pairs.front();
  for (const auto& [u, v] : pairs) {
    const std::uint64_t flow = net.max_flow(SplitNetwork::out(u), SplitNetwork::in(v));
    if (flow < best) {
      best = flow;
      best_pair = {u, v};
    }
  }

  net.max_flow(SplitNetwork::out(best_pair.first), SplitNetwork::in(best_pair.second));
  std::vector<int> cut = net.min_cut_classes(SplitNetwork::out(best_pair.first));

  u128 cut_weight = 0;
  for (int i : cut) {
    if (i == best_pair.first || i == best_pair.second)
      throw std::logic_error("vertex connectivity: cut contains a terminal");
    cut_weight = checked_add(cut_weight, g.nodes[static_cast<std::size_t>(i)].weight);
  }
  if (cut_weight != best)
    throw std::logic_error("vertex connectivity: cut weight disagrees with flow value");
  if (induced_components(g, cut).size() < 2)
    throw std::logic_error("vertex connectivity: recovered cut does not disconnect");
  return {CutStatus::ok, best, std::move(cut)};
}

namespace {

int component_count(std::uint64_t survivors, const std::vector<std::uint64_t>& adj_mask) {
  int count = 0;
  std::uint64_t left = survivors;
  while (left != 0) {
    ++count;
    std::uint64_t frontier = left & (~left + 1);
    std::uint64_t seen = 0;
    while (frontier != 0) {
      seen |= frontier;
      std::uint64_t next = 0;
      std::uint64_t bits = frontier;
      while (bits != 0) {
        const int v = std::countr_zero(bits);
        bits &= bits - 1;
        next |= adj_mask[static_cast<std::size_t>(v)];
      }
      frontier = next & survivors & ~seen;
    }
    left &= ~seen;
  }
  return count;
}

}  // namespace

ConnectivityResult exhaustive_min_cut(const DivisorGraph& g, int class_limit) {
  if (class_limit < 1 || class_limit > 30)
    throw std::invalid_argument("exhaustive class limit out of range");
  const int m = g.node_count();
  if (m > class_limit) throw std::length_error("instance too large for exhaustive oracle");

  std::vector<std::uint64_t> adj_mask(static_cast<std::size_t>(m), 0);
  std::uint64_t universal = 0;
  for (int i = 0; i < m; ++i) {
    for (int j : g.neighbors[static_cast<std::size_t>(i)])
      adj_mask[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    if (static_cast<int>(g.neighbors[static_cast<std::size_t>(i)].size()) == m - 1)
      universal |= std::uint64_t{1} << i;
  }

  const std::uint64_t full = (m == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  bool found = false;
  std::uint64_t best = 0;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    if (mask == full) continue;  // removal must leave survivors
    // A surviving class adjacent to every other class keeps the residual
    // graph connected, so a disconnecting removal contains all such classes.
    if ((mask & universal) != universal) continue;
    std::uint64_t weight = 0;
    std::uint64_t bits = mask;
    while (bits != 0) {
      const int v = std::countr_zero(bits);
      bits &= bits - 1;
      weight += g.nodes[static_cast<std::size_t>(v)].weight;
    }
    if (found && weight >= best) continue;
    if (component_count(full & ~mask, adj_mask) >= 2) {
      found = true;
      best = weight;
      best_mask = mask;
    }
  }

  if (!found) return {CutStatus::complete_graph, 0, {}};
  ConnectivityResult result{CutStatus::ok, best, {}};
  for (int i = 0; i < m; ++i) {
    if (best_mask & (std::uint64_t{1} << i)) result.cut_classes.push_back(i);
  }
  return result;
}

SeparationWitness check_separation(const DivisorGraph& g, const CutCandidate& candidate) {
  const Factorization& f = g.fact;
  std::vector<int> removed;
  removed.reserve(candidate.class_values.size());
  for (std::uint64_t value : candidate.class_values) {
    const int idx = g.index_of_value(value);
    if (idx < 0) throw std::invalid_argument("candidate does not belong to this graph");
    removed.push_back(idx);
  }

  const auto components = induced_components(g, removed);
  if (components.size() < 2)
    throw std::logic_error("candidate removal failed to disconnect the class graph");

  std::vector<int> expected;
  std::vector<std::uint32_t> e(f.exponents.begin(), f.exponents.end());
  if (candidate.kind == CandidateKind::Z) {
    const std::size_t ai = static_cast<std::size_t>(candidate.a) - 1;
    for (std::uint32_t k = static_cast<std::uint32_t>(candidate.s); k <= f.exponent(candidate.a);
         ++k) {
      e[ai] = f.exponent(candidate.a) - k;
      expected.push_back(g.index_of_value(divisor_from_exponents(f, e)));
    }
  } else {
    e[static_cast<std::size_t>(candidate.a) - 1] =
        f.exponent(candidate.a) - static_cast<std::uint32_t>(candidate.s);
    e[static_cast<std::size_t>(candidate.b) - 1] =
        f.exponent(candidate.b) - static_cast<std::uint32_t>(candidate.t);
    expected.push_back(g.index_of_value(divisor_from_exponents(f, e)));
  }
  std::sort(expected.begin(), expected.end());

  const auto near_side =
      std::find_if(components.begin(), components.end(), [&](const std::vector<int>& comp) {
        return std::binary_search(comp.begin(), comp.end(), expected.front());
      });
  if (near_side == components.end() || *near_side != expected)
    throw std::logic_error("separation near side differs from the expected class set");

  SeparationWitness witness;
  witness.side_a = expected;
  for (const auto& comp : components) {
    if (&comp == &*near_side) continue;
    witness.side_b.insert(witness.side_b.end(), comp.begin(), comp.end());
  }
  std::sort(witness.side_b.begin(), witness.side_b.end());
  for (int u : witness.side_a) {
    for (int v : witness.side_b) {
      if (g.is_adjacent(u, v)) throw std::logic_error("separation sides are joined by an edge");
    }
  }
  return witness;
}

}  // namespace powergraph
