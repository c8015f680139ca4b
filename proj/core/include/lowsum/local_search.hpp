#ifndef LOWSUM_LOCAL_SEARCH_HPP
#define LOWSUM_LOCAL_SEARCH_HPP

#include <cstdint>
#include <vector>

#include "lowsum/graph_core.hpp"

namespace lowsum {

// Arbitrary simple spanning subgraph of K_n; acyclicity is not required
// here, unlike SpanningForest.
class SpanningSubgraph {
public:
    SpanningSubgraph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    int max_degree() const { return max_degree_; }
    bool is_regular() const { return is_regular_; }
    bool has_edge(int u, int v) const;

    std::int64_t label_sum(const EdgeLabeling& labeling) const;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
    int max_degree_ = 0;
    bool is_regular_ = true;
};

// Edges of H between {u,v} and (N_H(u) u N_H(v)) \ {u,v}; the edge uv itself
// is excluded. Sorted for deterministic output.
std::vector<Edge> boundary_set(const SpanningSubgraph& h, int u, int v);

// The copy of H in which u and v exchange their roles (relabeling by the
// transposition (u v)).
SpanningSubgraph swap_roles(const SpanningSubgraph& h, int u, int v);

// c(H_uv) - c(H) in O(deg(u) + deg(v)) label lookups.
std::int64_t swap_delta(const EdgeLabeling& labeling, const SpanningSubgraph& h, int u, int v);

enum class DescentRule { best_improvement, first_improvement };

struct DescendResult {
    SpanningSubgraph subgraph;
    std::vector<std::int64_t> trace; // |trace| = steps + 1, trace[0] = c(H0)
    bool stalled = false;            // stopped at a local optimum above 2*Delta
    bool certified = false;          // zero-sum labeling and regular start: 2*Delta window guaranteed
};

// Role-swap descent on |c(H)|: repeatedly apply an improving swap until
// |c| <= 2*Delta or no swap strictly reduces |c|. With require_zero_sum the
// call refuses non-zero-sum labelings (the regular-case guarantee needs
// them); otherwise any labeling is accepted and the result may stall.
DescendResult descend(const EdgeLabeling& labeling, const SpanningSubgraph& start,
                      DescentRule rule = DescentRule::best_improvement,
                      bool require_zero_sum = false);

// Random d-regular spanning subgraph: shuffled matching for d=1, random
// cycle cover for d=2, configuration model with restarts for d >= 3.
// Requires n*d even and d < n.
SpanningSubgraph gen_regular_subgraph(int n, int degree, std::uint64_t seed);

} // namespace lowsum

#endif
