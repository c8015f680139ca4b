#ifndef LOWSUM_GRAPH_CORE_HPP
#define LOWSUM_GRAPH_CORE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace lowsum {

// Unordered pair of distinct vertices, stored with u < v. Vertices are
// 1-indexed everywhere in the public API.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool operator==(const Edge&) const = default;
    bool operator<(const Edge& other) const {
        return std::tie(u, v) < std::tie(other.u, other.v);
    }
};

// A +-1 labeling of the edges of the complete graph K_n, immutable after
// construction. Labels live in a flat triangular array; the total sum is
// cached at build time.
class EdgeLabeling {
public:
    EdgeLabeling(int n, std::vector<std::int8_t> labels, std::int64_t total_sum);

    int n() const { return n_; }
    std::int64_t edge_count() const { return std::int64_t(n_) * (n_ - 1) / 2; }

    int label(int u, int v) const {
        return labels_[pair_index(u, v)];
    }

    std::int64_t total_sum() const { return total_sum_; }
    bool is_zero_sum() const { return total_sum_ == 0; }

    // Sum of labels from v to every other vertex.
    std::int64_t star_sum(int v) const;

    std::size_t pair_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        // row u occupies a block of n-u entries starting at offset(u)
        return std::size_t(u - 1) * (2 * n_ - u) / 2 + std::size_t(v - u - 1);
    }

private:
    int n_;
    std::vector<std::int8_t> labels_;
    std::int64_t total_sum_;
};

// Builds an EdgeLabeling from raw (u, v, sign) triples, checking that every
// unordered pair is covered exactly once with sign in {-1, +1}.
EdgeLabeling validate_labeling(int n, std::span<const std::tuple<int, int, int>> raw);

// Spanning forest of K_n: acyclic (checked by union-find at construction),
// isolated vertices allowed.
class SpanningForest {
public:
    SpanningForest(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    int max_degree() const { return max_degree_; }

private:
    int n_;
    std::vector<Edge> edges_;               // normalized, sorted
    std::vector<std::vector<int>> adjacency_; // index 0 unused
    int max_degree_ = 0;
};

// Bijection pi: forest vertices -> host vertices; pi(u) is the K-vertex
// playing the role of F-vertex u.
class Embedding {
public:
    static Embedding identity(int n);
    explicit Embedding(std::vector<int> pi); // pi[0] unused, validated as a permutation of [n]

    int n() const { return static_cast<int>(pi_.size()) - 1; }
    int of(int fvertex) const { return pi_[fvertex]; }
    void swap_images(int a, int b) { std::swap(pi_[a], pi_[b]); }
    const std::vector<int>& raw() const { return pi_; }

    bool operator==(const Embedding&) const = default;

private:
    std::vector<int> pi_;
};

// c(F_pi) = sum of labels over the copy's edges.
std::int64_t copy_sum(const EdgeLabeling& labeling, const SpanningForest& forest,
                      const Embedding& emb);

} // namespace lowsum

#endif
