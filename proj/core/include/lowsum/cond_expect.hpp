#ifndef LOWSUM_COND_EXPECT_HPP
#define LOWSUM_COND_EXPECT_HPP

#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

#include "lowsum/exact_value.hpp"
#include "lowsum/graph_core.hpp"
#include "lowsum/ordering.hpp"

namespace lowsum {

// One candidate host p for the next embedding step, with the exact
// conditional expectation of extending the prefix by p.
struct CandidateEvaluation {
    int host = 0;
    int d1 = 0;          // F-neighbors of the next F-vertex already placed
    int d2 = 0;          // F-neighbors still unplaced after this step
    std::int64_t c1 = 0; // labels from p to the placed neighbors' hosts
    ExactValue value;    // E[i_1,...,i_k,p]
};

// Incremental state for E[c(F_pi) | prefix]. Placing a host costs O(n)
// residual-sum updates; evaluating a candidate costs O(k + deg) and never
// recomputes from scratch. Holds references to the labeling and forest: both
// must outlive the state.
class ExpectationState {
public:
    ExpectationState(const EdgeLabeling& labeling, const SpanningForest& forest,
                     VertexOrdering ordering);

    int n() const { return n_; }
    int prefix_size() const { return k_; }
    const std::vector<int>& prefix() const { return prefix_; }
    const VertexOrdering& ordering() const { return ordering_; }
    bool is_placed(int host) const { return placed_[host] != 0; }

    // E[i_1,...,i_k], exact. Integer once the copy is fully determined.
    ExactValue expectation() const;

    CandidateEvaluation evaluate_candidate(int host) const;

    void place(int host);

    // Introspection, mainly for verification: c_[k], d_k(j), S_k(j), m_k, T_k.
    std::int64_t prefix_weight() const { return c_prefix_; }
    int residual_degree(int step) const { return deg_residual_[step]; }
    std::int64_t residual_star_sum(int step) const { return star_sum_[prefix_[step - 1]]; }
    int residual_edges() const { return m_residual_; }
    std::int64_t residual_clique_sum() const { return clique_sum_; }

    // Number of states built since process start (hot paths are expected to
    // build exactly one per embedding).
    static std::uint64_t build_count() { return builds_.load(); }

private:
    void refresh_next_neighbor_marks();

    const EdgeLabeling* labeling_;
    const SpanningForest* forest_;
    VertexOrdering ordering_;
    int n_;
    int k_ = 0;
    std::vector<int> prefix_;            // host placed at step j (slot j-1)
    std::vector<char> placed_;           // host -> placed?
    std::vector<int> host_of_fvertex_;   // 0 while unplaced
    std::vector<int> deg_residual_;      // step -> d_k(step)
    std::vector<int> active_steps_;      // steps with d_k > 0, unordered
    std::vector<int> active_pos_;        // step -> index+1 into active_steps_
    std::vector<std::int64_t> star_sum_; // host -> sum of labels into unplaced set
    std::int64_t clique_sum_;            // T_k
    std::int64_t c_prefix_ = 0;          // c_[k]
    int m_residual_;                     // m_k
    std::vector<char> next_nbr_mark_;    // step -> is sigma(step) an F-neighbor of the next F-vertex
    std::vector<int> next_nbr_steps_;

    static std::atomic<std::uint64_t> builds_;
};

// Slow reference path: the same expectation assembled non-incrementally from
// the weight of the determined edges, the per-placed-vertex residual
// averages, and the residual clique average.
ExactValue expectation_direct(const EdgeLabeling& labeling, const SpanningForest& forest,
                              const VertexOrdering& ordering, std::span<const int> prefix);

} // namespace lowsum

#endif
