#ifndef LOWSUM_EMBEDDERS_HPP
#define LOWSUM_EMBEDDERS_HPP

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "lowsum/exact_value.hpp"
#include "lowsum/graph_core.hpp"
#include "lowsum/ordering.hpp"

namespace lowsum {

// Greedy parameters derived from epsilon in (0, 1/4): prefix length
// floor(eps*n) and the bound (3/4 + 327 eps) * Delta + (8/eps + 4).
class GreedyConfig {
public:
    explicit GreedyConfig(Rational epsilon);

    const Rational& epsilon() const { return epsilon_; }
    int prefix_length(int n) const;
    Rational slope() const;             // 3/4 + 327 eps
    Rational additive_constant() const; // 8/eps + 4
    Rational asymptotic_bound(int max_degree) const;

private:
    Rational epsilon_;
};

struct BoundCertificates {
    bool delta_plus_1_checked = false;
    bool delta_plus_1_holds = false;
    bool asymptotic_checked = false;
    bool asymptotic_holds = false;
};

struct EmbedResult {
    Embedding embedding;
    std::int64_t c_value = 0;
    std::vector<ExactValue> trace;       // E after each step, length n+1
    std::vector<ExactValue> step_deltas; // trace[k+1] - trace[k]
    BoundCertificates certificates;
    std::string algorithm;
    std::chrono::duration<double> runtime{0};
};

struct WalkResult {
    int pivot = 0; // F-vertex of degree <= 1 whose role every swap touches
    std::vector<std::int64_t> sums; // c(F_pi_0), ..., c(F_pi_r)
    std::size_t best_index = 0;
    Embedding best_embedding;
    std::vector<Embedding> path; // all r+1 permutations, for verification

    std::size_t length() const { return sums.size() - 1; }
};

// Sequential argmin-|E| placement over the reordered forest; accepts
// non-zero-sum labelings (certificates are then omitted).
EmbedResult greedy_embed(const EdgeLabeling& labeling, const SpanningForest& forest,
                         const GreedyConfig& config);

enum class MonotoneSign { plus, minus };

// Derandomized one-sided embedding: with plus each step keeps E at or above
// its previous value, so the final copy sum is >= 0 (<= 0 for minus).
// Requires a zero-sum labeling.
EmbedResult monotone_embed(const EdgeLabeling& labeling, const SpanningForest& forest,
                           MonotoneSign sign);

// Walks between two copies by role swaps that always involve a forest vertex
// of degree <= 1, so each step removes and adds at most Delta+1 edges.
WalkResult transposition_walk(const EdgeLabeling& labeling, const SpanningForest& forest,
                              const Embedding& from, const Embedding& to);

// monotone(+), monotone(-), then the walk between them; the best intermediate
// is guaranteed to satisfy |c| <= Delta+1.
EmbedResult prop2_embed(const EdgeLabeling& labeling, const SpanningForest& forest);

// Better of greedy_embed and prop2_embed by |c| (tie: greedy); inherits the
// hard Delta+1 guarantee.
EmbedResult best_embed(const EdgeLabeling& labeling, const SpanningForest& forest,
                       const GreedyConfig& config);

} // namespace lowsum

#endif
