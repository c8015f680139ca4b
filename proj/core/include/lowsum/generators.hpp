#ifndef LOWSUM_GENERATORS_HPP
#define LOWSUM_GENERATORS_HPP

#include <cstdint>
#include <string>

#include "lowsum/graph_core.hpp"

namespace lowsum {

enum class LabelingPattern { uniform, block_adversarial };
enum class ForestKind { path, star, perfect_matching, random_tree, random_forest, binary_tree };

LabelingPattern parse_labeling_pattern(const std::string& name);
ForestKind parse_forest_kind(const std::string& name);
const char* forest_kind_name(ForestKind kind);

// Balanced +-1 labeling of K_n: exactly half the edges +1. Deterministic in
// (n, seed, pattern). uniform shuffles a balanced multiset;
// block_adversarial packs +1 into a ceil(n/2)-vertex block as far as the
// balance budget allows and randomizes the remainder.
EdgeLabeling gen_zero_sum_labeling(int n, std::uint64_t seed, LabelingPattern pattern);

// Fixture forests on [n]; deterministic in (n, kind, seed). perfect_matching
// requires even n.
SpanningForest gen_forest(int n, ForestKind kind, std::uint64_t seed);

} // namespace lowsum

#endif
