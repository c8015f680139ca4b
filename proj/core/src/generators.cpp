#include "lowsum/generators.hpp"

#include <algorithm>
#include <numeric>

#include "lowsum/errors.hpp"
#include "lowsum/prng.hpp"

namespace lowsum {

LabelingPattern parse_labeling_pattern(const std::string& name) {
    if (name == "uniform") return LabelingPattern::uniform;
    if (name == "block" || name == "block_adversarial") return LabelingPattern::block_adversarial;
    throw Error(Errc::bad_parameters, "unknown labeling pattern '" + name + "'");
}

ForestKind parse_forest_kind(const std::string& name) {
    if (name == "path") return ForestKind::path;
    if (name == "star") return ForestKind::star;
    if (name == "perfect_matching" || name == "matching") return ForestKind::perfect_matching;
    if (name == "random_tree") return ForestKind::random_tree;
    if (name == "random_forest") return ForestKind::random_forest;
    if (name == "binary_tree") return ForestKind::binary_tree;
    throw Error(Errc::bad_parameters, "unknown forest kind '" + name + "'");
}

const char* forest_kind_name(ForestKind kind) {
    switch (kind) {
        case ForestKind::path: return "path";
        case ForestKind::star: return "star";
        case ForestKind::perfect_matching: return "perfect_matching";
        case ForestKind::random_tree: return "random_tree";
        case ForestKind::random_forest: return "random_forest";
        case ForestKind::binary_tree: return "binary_tree";
    }
    return "?";
}

EdgeLabeling gen_zero_sum_labeling(int n, std::uint64_t seed, LabelingPattern pattern) {
    if (n < 1) {
        throw Error(Errc::bad_parameters, "vertex count must be positive");
    }
    std::int64_t m = std::int64_t(n) * (n - 1) / 2;
    if (m % 2 != 0) {
        throw Error(Errc::infeasible_zero_sum,
                    "K_" + std::to_string(n) + " has an odd number of edges (" +
                        std::to_string(m) + "); zero-sum needs n = 0 or 1 (mod 4)");
    }
    std::vector<std::int8_t> labels(static_cast<std::size_t>(m), -1);
    std::int64_t budget = m / 2; // number of +1 labels
    SplitMix64 rng(seed);

    auto pair_index = [n](int u, int v) {
        return std::size_t(u - 1) * (2 * n - u) / 2 + std::size_t(v - u - 1);
    };

    switch (pattern) {
        case LabelingPattern::uniform: {
            std::fill(labels.begin(), labels.begin() + budget, std::int8_t(1));
            rng.shuffle(labels);
            break;
        }
        case LabelingPattern::block_adversarial: {
            int block = (n + 1) / 2;
            std::vector<std::size_t> inside, outside;
            for (int u = 1; u <= n; ++u) {
                for (int v = u + 1; v <= n; ++v) {
                    (v <= block ? inside : outside).push_back(pair_index(u, v));
                }
            }
            if (static_cast<std::int64_t>(inside.size()) <= budget) {
                for (std::size_t idx : inside) labels[idx] = 1;
                std::int64_t leftover = budget - static_cast<std::int64_t>(inside.size());
                rng.shuffle(outside);
                for (std::int64_t i = 0; i < leftover; ++i) labels[outside[i]] = 1;
            } else {
                rng.shuffle(inside);
                for (std::int64_t i = 0; i < budget; ++i) labels[inside[i]] = 1;
            }
            break;
        }
    }
    return EdgeLabeling(n, std::move(labels), 0);
}

namespace {

std::vector<Edge> prufer_random_tree(int n, SplitMix64& rng) {
    std::vector<Edge> edges;
    if (n < 2) return edges;
    edges.reserve(n - 1);
    std::vector<int> seq(n - 2);
    for (int& a : seq) a = 1 + static_cast<int>(rng.next_below(n));

    std::vector<int> deg(n + 1, 1);
    for (int a : seq) deg[a]++;
    int ptr = 1;
    while (deg[ptr] != 1) ptr++;
    int leaf = ptr;
    for (int a : seq) {
        edges.emplace_back(leaf, a);
        if (--deg[a] == 1 && a < ptr) {
            leaf = a;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n);
    return edges;
}

} // namespace

SpanningForest gen_forest(int n, ForestKind kind, std::uint64_t seed) {
    if (n < 1) {
        throw Error(Errc::bad_parameters, "vertex count must be positive");
    }
    std::vector<Edge> edges;
    SplitMix64 rng(seed);
    switch (kind) {
        case ForestKind::path:
            for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case ForestKind::star:
            for (int i = 2; i <= n; ++i) edges.emplace_back(1, i);
            break;
        case ForestKind::perfect_matching:
            if (n % 2 != 0) {
                throw Error(Errc::infeasible_kind,
                            "perfect matching needs even n, got " + std::to_string(n));
            }
            for (int i = 1; i < n; i += 2) edges.emplace_back(i, i + 1);
            break;
        case ForestKind::random_tree:
            edges = prufer_random_tree(n, rng);
            break;
        case ForestKind::random_forest: {
            edges = prufer_random_tree(n, rng);
            std::sort(edges.begin(), edges.end());
            std::vector<Edge> kept;
            for (const Edge& e : edges) {
                if (rng.next_below(4) != 0) kept.push_back(e); // drop ~1/4 of tree edges
            }
            edges = std::move(kept);
            break;
        }
        case ForestKind::binary_tree:
            for (int i = 1; i <= n; ++i) {
                if (2 * i <= n) edges.emplace_back(i, 2 * i);
                if (2 * i + 1 <= n) edges.emplace_back(i, 2 * i + 1);
            }
            break;
    }
    return SpanningForest(n, std::move(edges));
}

} // namespace lowsum
