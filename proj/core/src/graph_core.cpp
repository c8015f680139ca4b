#include "lowsum/graph_core.hpp"

#include <algorithm>
#include <numeric>

#include "lowsum/errors.hpp"

namespace lowsum {

namespace {

// Plain union-find, path halving plus union by size.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n + 1), size_(n + 1, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

void check_vertex_range(int v, int n, const char* what) {
    if (v < 1 || v > n) {
        throw Error(Errc::malformed_input,
                    std::string(what) + " vertex " + std::to_string(v) + " outside [1," +
                        std::to_string(n) + "]");
    }
}

} // namespace

EdgeLabeling::EdgeLabeling(int n, std::vector<std::int8_t> labels, std::int64_t total_sum)
    : n_(n), labels_(std::move(labels)), total_sum_(total_sum) {
    if (n_ < 1) {
        throw Error(Errc::malformed_input, "labeling needs at least one vertex");
    }
    if (static_cast<std::int64_t>(labels_.size()) != edge_count()) {
        throw Error(Errc::malformed_input, "labeling has wrong number of edges");
    }
    std::int64_t sum = 0;
    for (std::int8_t s : labels_) {
        if (s != 1 && s != -1) {
            throw Error(Errc::malformed_input, "edge label outside {-1,+1}");
        }
        sum += s;
    }
    if (sum != total_sum_) {
        throw Error(Errc::malformed_input, "cached total_sum does not match labels");
    }
}

std::int64_t EdgeLabeling::star_sum(int v) const {
    std::int64_t sum = 0;
    for (int u = 1; u <= n_; ++u) {
        if (u != v) sum += label(u, v);
    }
    return sum;
}

EdgeLabeling validate_labeling(int n, std::span<const std::tuple<int, int, int>> raw) {
    if (n < 1) {
        throw Error(Errc::malformed_input, "vertex count must be positive");
    }
    std::size_t expected = std::size_t(n) * (n - 1) / 2;
    std::vector<std::int8_t> labels(expected, 0);
    std::vector<bool> seen(expected, false);
    std::int64_t total = 0;

    // temporary labeling object only to reuse the triangular indexing
    for (const auto& [u, v, s] : raw) {
        check_vertex_range(u, n, "edge");
        check_vertex_range(v, n, "edge");
        if (u == v) {
            throw Error(Errc::malformed_input, "self-loop at vertex " + std::to_string(u));
        }
        if (s != 1 && s != -1) {
            throw Error(Errc::malformed_input,
                        "label " + std::to_string(s) + " outside {-1,+1}");
        }
        int a = std::min(u, v), b = std::max(u, v);
        std::size_t idx = std::size_t(a - 1) * (2 * n - a) / 2 + std::size_t(b - a - 1);
        if (seen[idx]) {
            throw Error(Errc::malformed_input,
                        "pair {" + std::to_string(a) + "," + std::to_string(b) +
                            "} labeled twice");
        }
        seen[idx] = true;
        labels[idx] = static_cast<std::int8_t>(s);
        total += s;
    }
    if (raw.size() != expected) {
        throw Error(Errc::malformed_input,
                    "expected " + std::to_string(expected) + " labeled pairs, got " +
                        std::to_string(raw.size()));
    }
    return EdgeLabeling(n, std::move(labels), total);
}

SpanningForest::SpanningForest(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) {
        throw Error(Errc::malformed_input, "forest needs at least one vertex");
    }
    adjacency_.assign(n_ + 1, {});
    UnionFind uf(n_);
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        check_vertex_range(e.u, n_, "forest");
        check_vertex_range(e.v, n_, "forest");
        if (e.u == e.v) {
            throw Error(Errc::malformed_input, "forest self-loop at " + std::to_string(e.u));
        }
        if (i > 0 && edges_[i - 1] == e) {
            throw Error(Errc::malformed_input, "duplicate forest edge");
        }
        if (!uf.unite(e.u, e.v)) {
            throw Error(Errc::malformed_input, "forest contains a cycle through " +
                                                   std::to_string(e.u) + "-" +
                                                   std::to_string(e.v));
        }
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (int v = 1; v <= n_; ++v) {
        std::sort(adjacency_[v].begin(), adjacency_[v].end());
        max_degree_ = std::max(max_degree_, degree(v));
    }
}

Embedding Embedding::identity(int n) {
    std::vector<int> pi(n + 1);
    std::iota(pi.begin(), pi.end(), 0);
    return Embedding(std::move(pi));
}

Embedding::Embedding(std::vector<int> pi) : pi_(std::move(pi)) {
    if (pi_.empty()) {
        throw Error(Errc::malformed_input, "empty embedding");
    }
    int n = static_cast<int>(pi_.size()) - 1;
    std::vector<bool> hit(n + 1, false);
    for (int u = 1; u <= n; ++u) {
        int image = pi_[u];
        if (image < 1 || image > n || hit[image]) {
            throw Error(Errc::malformed_input, "embedding is not a permutation of [n]");
        }
        hit[image] = true;
    }
    pi_[0] = 0;
}

std::int64_t copy_sum(const EdgeLabeling& labeling, const SpanningForest& forest,
                      const Embedding& emb) {
    if (labeling.n() != forest.n() || labeling.n() != emb.n()) {
        throw Error(Errc::dimension_mismatch,
                    "labeling, forest, and embedding must share one vertex count");
    }
    std::int64_t sum = 0;
    for (const Edge& e : forest.edges()) {
        sum += labeling.label(emb.of(e.u), emb.of(e.v));
    }
    return sum;
}

} // namespace lowsum
