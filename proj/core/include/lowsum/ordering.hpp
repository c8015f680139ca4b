#ifndef LOWSUM_ORDERING_HPP
#define LOWSUM_ORDERING_HPP

#include <vector>

#include "lowsum/exact_value.hpp"
#include "lowsum/graph_core.hpp"

namespace lowsum {

// Order in which the forest's vertices are embedded: position j holds the
// F-vertex placed at step j. The first t positions form the 1-degenerate
// prefix produced by reorder_forest.
class VertexOrdering {
public:
    static VertexOrdering identity(int n); // natural order, t = 0
    VertexOrdering(std::vector<int> order, int t);

    int n() const { return static_cast<int>(order_.size()) - 1; }
    int prefix_length() const { return t_; }
    int fvertex_at(int step) const { return order_[step]; } // 1-indexed step
    int step_of(int fvertex) const { return step_of_[fvertex]; }

private:
    std::vector<int> order_;   // index 0 unused
    std::vector<int> step_of_; // inverse
    int t_;
};

// Each of the first t positions has at most one F-neighbor earlier in the
// order (the prefix is 1-degenerate in order).
bool check_prefix_condition(const VertexOrdering& ordering, const SpanningForest& forest);

// Every position past t holds an F-vertex of degree at most 2/epsilon.
bool check_degree_condition(const VertexOrdering& ordering, const SpanningForest& forest,
                            const Rational& epsilon);

// Ordering with t = floor(epsilon*n) satisfying both conditions above:
// vertices of degree above 2/epsilon, padded with the highest-degree
// remainder, are listed first in per-component BFS order; everything else
// follows by index.
VertexOrdering reorder_forest(const SpanningForest& forest, const Rational& epsilon);

} // namespace lowsum

#endif
