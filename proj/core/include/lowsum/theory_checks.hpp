#ifndef LOWSUM_THEORY_CHECKS_HPP
#define LOWSUM_THEORY_CHECKS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lowsum/embedders.hpp"
#include "lowsum/exact_value.hpp"
#include "lowsum/graph_core.hpp"

namespace lowsum {

// Graph on a subset of [n], used for the positive-edge auxiliary graph.
class SimpleGraph {
public:
    SimpleGraph(std::vector<int> vertices, std::vector<Edge> edges);

    int order() const { return static_cast<int>(vertices_.size()); }
    std::int64_t edge_count() const { return m_; }
    const std::vector<int>& vertices() const { return vertices_; }
    int degree(int v) const;
    bool contains(int v) const;

private:
    std::vector<int> vertices_; // sorted
    std::vector<int> degree_;   // parallel to vertices_
    std::int64_t m_ = 0;
};

struct GapCheck {
    ExactValue gap;   // |avg over p - avg over p-q|
    ExactValue bound; // 2q/p
    bool holds = false;
};

// Dropping the last q of p +-1 values moves the average by at most 2q/p.
GapCheck check_averaging_gap(std::span<const int> values, int q);

// Graph on [n] \ excluded whose edges are exactly the pairs labeled +1.
SimpleGraph build_positive_graph(const EdgeLabeling& labeling,
                                 const std::vector<int>& excluded);

// Smallest-index vertex with degree in [(1/4 - eps) n, (3/4 + eps) n - 1].
// Preconditions (checked): eps * n >= 10 and |m - C(n,2)/2| <= eps/10 * C(n,2).
// Existence is guaranteed; failing to find one is a fatal inconsistency.
int find_balanced_vertex(const SimpleGraph& graph, const Rational& epsilon);

// Diagnostic comparison of a greedy trace against the per-step and absolute
// bounds; the bounds hold asymptotically for the best candidate, so exceeding
// them is reported, never fatal.
struct TraceReport {
    int steps = 0;
    Rational step_bound_simple; // (1 + 16 eps / 3) Delta + 8/eps + 4
    Rational step_bound_sharp;  // (1/2 + 327 eps) Delta + 8/eps + 4
    Rational trajectory_bound;  // (3/4 + 327 eps) Delta + 8/eps + 4
    ExactValue max_step_delta;
    ExactValue max_abs_expectation;
    std::vector<int> steps_exceeding_simple; // step k: |trace[k+1]-trace[k]| above bound
    std::vector<int> steps_exceeding_sharp;
    std::vector<int> steps_exceeding_trajectory; // k: |trace[k]| above bound
    std::string note;

    bool clean() const {
        return steps_exceeding_simple.empty() && steps_exceeding_sharp.empty() &&
               steps_exceeding_trajectory.empty();
    }
};

TraceReport analyze_trace(const EmbedResult& result, const SpanningForest& forest,
                          const GreedyConfig& config);

} // namespace lowsum

#endif
