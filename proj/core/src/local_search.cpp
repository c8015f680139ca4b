#include "lowsum/local_search.hpp"

#include <algorithm>

#include "lowsum/errors.hpp"
#include "lowsum/prng.hpp"

namespace lowsum {

SpanningSubgraph::SpanningSubgraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) {
        throw Error(Errc::malformed_input, "subgraph needs at least one vertex");
    }
    adjacency_.assign(n_ + 1, {});
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u < 1 || e.v > n_) {
            throw Error(Errc::malformed_input, "subgraph edge outside [1," + std::to_string(n_) + "]");
        }
        if (e.u == e.v) {
            throw Error(Errc::malformed_input, "subgraph self-loop at " + std::to_string(e.u));
        }
        if (i > 0 && edges_[i - 1] == e) {
            throw Error(Errc::malformed_input, "duplicate subgraph edge");
        }
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (int v = 1; v <= n_; ++v) {
        std::sort(adjacency_[v].begin(), adjacency_[v].end());
        max_degree_ = std::max(max_degree_, degree(v));
    }
    for (int v = 1; v <= n_ && is_regular_; ++v) {
        is_regular_ = degree(v) == max_degree_;
    }
}

bool SpanningSubgraph::has_edge(int u, int v) const {
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::int64_t SpanningSubgraph::label_sum(const EdgeLabeling& labeling) const {
    if (labeling.n() != n_) {
        throw Error(Errc::dimension_mismatch, "labeling and subgraph sizes differ");
    }
    std::int64_t sum = 0;
    for (const Edge& e : edges_) sum += labeling.label(e.u, e.v);
    return sum;
}

std::vector<Edge> boundary_set(const SpanningSubgraph& h, int u, int v) {
    if (u == v) {
        throw Error(Errc::same_vertex, "boundary set needs two distinct vertices");
    }
    std::vector<Edge> out;
    for (int x : h.neighbors(u)) {
        if (x != v) out.emplace_back(u, x);
    }
    for (int x : h.neighbors(v)) {
        if (x != u) out.emplace_back(v, x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SpanningSubgraph swap_roles(const SpanningSubgraph& h, int u, int v) {
    if (u == v) {
        throw Error(Errc::same_vertex, "role swap needs two distinct vertices");
    }
    auto relabel = [u, v](int x) { return x == u ? v : (x == v ? u : x); };
    std::vector<Edge> edges;
    edges.reserve(h.edges().size());
    for (const Edge& e : h.edges()) {
        edges.emplace_back(relabel(e.u), relabel(e.v));
    }
    return SpanningSubgraph(h.n(), std::move(edges));
}

std::int64_t swap_delta(const EdgeLabeling& labeling, const SpanningSubgraph& h, int u, int v) {
    if (u == v) {
        throw Error(Errc::same_vertex, "swap delta needs two distinct vertices");
    }
    // Only boundary edges change; common neighbors cancel.
    std::int64_t delta = 0;
    for (int x : h.neighbors(u)) {
        if (x != v) delta += labeling.label(v, x) - labeling.label(u, x);
    }
    for (int x : h.neighbors(v)) {
        if (x != u) delta += labeling.label(u, x) - labeling.label(v, x);
    }
    return delta;
}

DescendResult descend(const EdgeLabeling& labeling, const SpanningSubgraph& start,
                      DescentRule rule, bool require_zero_sum) {
    if (labeling.n() != start.n()) {
        throw Error(Errc::dimension_mismatch, "labeling and subgraph sizes differ");
    }
    if (require_zero_sum && !labeling.is_zero_sum()) {
        throw Error(Errc::not_zero_sum,
                    "the 2*Delta guarantee needs a zero-sum labeling; this one sums to " +
                        std::to_string(labeling.total_sum()));
    }
    int n = start.n();
    // Role swaps preserve the degree multiset, so Delta is a loop invariant.
    std::int64_t window = 2 * std::int64_t(start.max_degree());
    bool guaranteed = labeling.is_zero_sum() && start.is_regular();

    DescendResult result{start, {}, false, guaranteed};
    std::int64_t c = start.label_sum(labeling);
    result.trace.push_back(c);

    while (std::llabs(c) > window) {
        int best_u = 0, best_v = 0;
        std::int64_t best_c = c;
        bool found = false;
        for (int u = 1; u < n && !(found && rule == DescentRule::first_improvement); ++u) {
            for (int v = u + 1; v <= n; ++v) {
                std::int64_t candidate = c + swap_delta(labeling, result.subgraph, u, v);
                if (std::llabs(candidate) >= std::llabs(c)) continue;
                if (!found || std::llabs(candidate) < std::llabs(best_c)) {
                    best_u = u;
                    best_v = v;
                    best_c = candidate;
                    found = true;
                }
                if (rule == DescentRule::first_improvement) break;
            }
        }
        if (!found) {
            result.stalled = true;
            break;
        }
        result.subgraph = swap_roles(result.subgraph, best_u, best_v);
        c = best_c;
        result.trace.push_back(c);
    }
    if (guaranteed && result.stalled) {
        throw Error(Errc::bad_value, "internal: regular descent stalled above 2*Delta");
    }
    return result;
}

SpanningSubgraph gen_regular_subgraph(int n, int degree, std::uint64_t seed) {
    if (n < 1 || degree < 0 || degree >= n) {
        throw Error(Errc::bad_parameters, "regular subgraph needs 0 <= d < n");
    }
    if ((std::int64_t(n) * degree) % 2 != 0) {
        throw Error(Errc::infeasible_kind, "no " + std::to_string(degree) +
                                               "-regular graph on " + std::to_string(n) +
                                               " vertices (odd degree sum)");
    }
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    if (degree == 0) {
        return SpanningSubgraph(n, std::move(edges));
    }
    if (degree == 1) {
        std::vector<int> vertices(n);
        for (int i = 0; i < n; ++i) vertices[i] = i + 1;
        rng.shuffle(vertices);
        for (int i = 0; i < n; i += 2) edges.emplace_back(vertices[i], vertices[i + 1]);
        return SpanningSubgraph(n, std::move(edges));
    }
    if (degree == 2) {
        // Random cycle cover with cycle lengths >= 3.
        if (n < 3) {
            throw Error(Errc::infeasible_kind, "2-regular graphs need n >= 3");
        }
        std::vector<int> vertices(n);
        for (int i = 0; i < n; ++i) vertices[i] = i + 1;
        rng.shuffle(vertices);
        std::size_t begin = 0;
        while (begin < vertices.size()) {
            std::size_t remaining = vertices.size() - begin;
            std::size_t len = remaining < 6 ? remaining
                                            : 3 + static_cast<std::size_t>(rng.next_below(remaining - 5));
            for (std::size_t i = 0; i + 1 < len; ++i) {
                edges.emplace_back(vertices[begin + i], vertices[begin + i + 1]);
            }
            edges.emplace_back(vertices[begin + len - 1], vertices[begin]);
            begin += len;
        }
        return SpanningSubgraph(n, std::move(edges));
    }

    // Configuration model with restarts until the pairing is simple.
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * degree);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        stubs.clear();
        for (int v = 1; v <= n; ++v) {
            for (int i = 0; i < degree; ++i) stubs.push_back(v);
        }
        rng.shuffle(stubs);
        edges.clear();
        bool ok = true;
        for (std::size_t i = 0; ok && i < stubs.size(); i += 2) {
            if (stubs[i] == stubs[i + 1]) {
                ok = false;
                break;
            }
            edges.emplace_back(stubs[i], stubs[i + 1]);
        }
        if (!ok) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        return SpanningSubgraph(n, std::move(edges));
    }
    throw Error(Errc::bad_parameters, "configuration model failed to produce a simple graph");
}

} // namespace lowsum
