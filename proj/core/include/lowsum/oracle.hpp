#ifndef LOWSUM_ORACLE_HPP
#define LOWSUM_ORACLE_HPP

#include <cstdint>
#include <map>
#include <span>

#include "lowsum/cond_expect.hpp"
#include "lowsum/exact_value.hpp"
#include "lowsum/graph_core.hpp"
#include "lowsum/ordering.hpp"

namespace lowsum {

// Exact distribution of c(F_pi) over all n! permutations.
struct SumDistribution {
    std::map<std::int64_t, std::uint64_t> counts;
    std::uint64_t total = 0; // n!

    ExactValue mean() const;
    std::int64_t min_abs() const;
};

// Default enumeration cap; 10 is the hard ceiling no flag can lift.
inline constexpr int kOracleDefaultCap = 8;
inline constexpr int kOracleHardCap = 10;

SumDistribution enumerate_sums(const EdgeLabeling& labeling, const SpanningForest& forest,
                               int cap = kOracleDefaultCap);

std::int64_t min_abs_sum(const EdgeLabeling& labeling, const SpanningForest& forest,
                         int cap = kOracleDefaultCap);

// Average of copy_sum over the (n-k)! completions of the prefix, exactly.
ExactValue conditional_expectation_bruteforce(const EdgeLabeling& labeling,
                                              const SpanningForest& forest,
                                              const VertexOrdering& ordering,
                                              std::span<const int> prefix,
                                              int cap = kOracleDefaultCap);

} // namespace lowsum

#endif
