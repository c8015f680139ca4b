#include "lowsum/embedders.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "lowsum/cond_expect.hpp"
#include "lowsum/errors.hpp"

namespace lowsum {

// ---------------------------------------------------------------------------
// VertexOrdering / reorder_forest

VertexOrdering VertexOrdering::identity(int n) {
    std::vector<int> order(n + 1);
    std::iota(order.begin(), order.end(), 0);
    return VertexOrdering(std::move(order), 0);
}

VertexOrdering::VertexOrdering(std::vector<int> order, int t) : order_(std::move(order)), t_(t) {
    int n = static_cast<int>(order_.size()) - 1;
    if (n < 1 || t_ < 0 || t_ > n) {
        throw Error(Errc::bad_parameters, "ordering prefix length out of range");
    }
    step_of_.assign(n + 1, 0);
    for (int step = 1; step <= n; ++step) {
        int fvertex = order_[step];
        if (fvertex < 1 || fvertex > n || step_of_[fvertex] != 0) {
            throw Error(Errc::bad_parameters, "ordering is not a permutation of [n]");
        }
        step_of_[fvertex] = step;
    }
    order_[0] = 0;
}

bool check_prefix_condition(const VertexOrdering& ordering, const SpanningForest& forest) {
    for (int step = 1; step <= ordering.prefix_length(); ++step) {
        int fvertex = ordering.fvertex_at(step);
        int earlier = 0;
        for (int g : forest.neighbors(fvertex)) {
            if (ordering.step_of(g) < step) ++earlier;
        }
        if (earlier > 1) return false;
    }
    return true;
}

bool check_degree_condition(const VertexOrdering& ordering, const SpanningForest& forest,
                            const Rational& epsilon) {
    for (int step = ordering.prefix_length() + 1; step <= ordering.n(); ++step) {
        int degree = forest.degree(ordering.fvertex_at(step));
        // degree <= 2/eps  <=>  degree * eps_num <= 2 * eps_den
        if (ExactValue(degree) * epsilon > ExactValue(2)) return false;
    }
    return true;
}

VertexOrdering reorder_forest(const SpanningForest& forest, const Rational& epsilon) {
    if (epsilon.sign() <= 0) {
        throw Error(Errc::epsilon_out_of_range, "epsilon must be positive, got " + epsilon.str());
    }
    int n = forest.n();
    std::int64_t t_wide = (epsilon.num() * n) / epsilon.den(); // floor, epsilon > 0
    int t = static_cast<int>(std::min<std::int64_t>(t_wide, n));

    // High-degree vertices (d > 2/eps); always fewer than eps*n of them since
    // the degree sum of a forest stays below 2n.
    std::vector<char> in_prefix(n + 1, 0);
    int prefix_count = 0;
    for (int v = 1; v <= n; ++v) {
        if (ExactValue(forest.degree(v)) * epsilon > ExactValue(2)) {
            in_prefix[v] = 1;
            ++prefix_count;
        }
    }
    if (prefix_count > t) {
        throw Error(Errc::bad_value, "internal: high-degree set exceeds the ordering prefix");
    }

    // Pad with the highest-degree remainder, ties by ascending index.
    if (prefix_count < t) {
        std::vector<int> rest;
        rest.reserve(n - prefix_count);
        for (int v = 1; v <= n; ++v) {
            if (!in_prefix[v]) rest.push_back(v);
        }
        std::stable_sort(rest.begin(), rest.end(), [&forest](int a, int b) {
            return forest.degree(a) > forest.degree(b);
        });
        for (int i = 0; prefix_count < t; ++i, ++prefix_count) in_prefix[rest[i]] = 1;
    }

    // List each component of F[prefix] from its maximum-degree root in BFS
    // order, so every non-root sees exactly its parent among earlier
    // positions.
    std::vector<int> order;
    order.reserve(n + 1);
    order.push_back(0);
    std::vector<char> visited(n + 1, 0), listed(n + 1, 0);
    for (int v = 1; v <= n; ++v) {
        if (!in_prefix[v] || visited[v]) continue;
        std::vector<int> component{v};
        visited[v] = 1;
        for (std::size_t head = 0; head < component.size(); ++head) {
            for (int g : forest.neighbors(component[head])) {
                if (in_prefix[g] && !visited[g]) {
                    visited[g] = 1;
                    component.push_back(g);
                }
            }
        }
        int root = component.front();
        for (int u : component) {
            if (forest.degree(u) > forest.degree(root) ||
                (forest.degree(u) == forest.degree(root) && u < root)) {
                root = u;
            }
        }
        std::queue<int> queue;
        queue.push(root);
        listed[root] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            order.push_back(u);
            for (int g : forest.neighbors(u)) {
                if (in_prefix[g] && !listed[g]) {
                    listed[g] = 1;
                    queue.push(g);
                }
            }
        }
    }
    for (int v = 1; v <= n; ++v) {
        if (!in_prefix[v]) order.push_back(v);
    }
    return VertexOrdering(std::move(order), t);
}

// ---------------------------------------------------------------------------
// GreedyConfig

GreedyConfig::GreedyConfig(Rational epsilon) : epsilon_(epsilon) {
    if (epsilon_.sign() <= 0 || !(epsilon_ < ExactValue::ratio(1, 4))) {
        throw Error(Errc::epsilon_out_of_range,
                    "epsilon must lie in (0, 1/4), got " + epsilon_.str());
    }
}

int GreedyConfig::prefix_length(int n) const {
    return static_cast<int>(std::min<std::int64_t>((epsilon_.num() * n) / epsilon_.den(), n));
}

Rational GreedyConfig::slope() const {
    return ExactValue::ratio(3, 4) + ExactValue(327) * epsilon_;
}

Rational GreedyConfig::additive_constant() const {
    return ExactValue(8) / epsilon_ + ExactValue(4);
}

Rational GreedyConfig::asymptotic_bound(int max_degree) const {
    return slope() * ExactValue(max_degree) + additive_constant();
}

// ---------------------------------------------------------------------------
// Embedding algorithms

namespace {

void check_same_n(const EdgeLabeling& labeling, const SpanningForest& forest) {
    if (labeling.n() != forest.n()) {
        throw Error(Errc::dimension_mismatch, "labeling on " + std::to_string(labeling.n()) +
                                                  " vertices, forest on " +
                                                  std::to_string(forest.n()));
    }
}

Embedding embedding_from_prefix(const VertexOrdering& ordering, const std::vector<int>& prefix) {
    int n = ordering.n();
    std::vector<int> pi(n + 1, 0);
    for (int step = 1; step <= n; ++step) {
        pi[ordering.fvertex_at(step)] = prefix[step - 1];
    }
    return Embedding(std::move(pi));
}

void fill_deltas_and_certificates(EmbedResult& result, const EdgeLabeling& labeling,
                                  const SpanningForest& forest, const GreedyConfig* config) {
    result.step_deltas.clear();
    for (std::size_t k = 0; k + 1 < result.trace.size(); ++k) {
        result.step_deltas.push_back(result.trace[k + 1] - result.trace[k]);
    }
    if (!labeling.is_zero_sum()) return;
    std::int64_t abs_c = result.c_value < 0 ? -result.c_value : result.c_value;
    result.certificates.delta_plus_1_checked = true;
    result.certificates.delta_plus_1_holds = abs_c <= forest.max_degree() + 1;
    if (config != nullptr) {
        result.certificates.asymptotic_checked = true;
        result.certificates.asymptotic_holds =
            ExactValue(abs_c) <= config->asymptotic_bound(forest.max_degree());
    }
}

// Shared skeleton of the sequential conditional-expectation embedders; the
// chooser picks among candidate evaluations at one step.
template <typename Chooser>
EmbedResult run_sequential_embed(const EdgeLabeling& labeling, const SpanningForest& forest,
                                 VertexOrdering ordering, const char* tag, Chooser choose) {
    auto started = std::chrono::steady_clock::now();
    int n = labeling.n();
    ExpectationState state(labeling, forest, std::move(ordering));

    EmbedResult result{Embedding::identity(n)};
    result.algorithm = tag;
    result.trace.reserve(n + 1);
    result.trace.push_back(state.expectation());
    for (int k = 0; k < n; ++k) {
        bool have = false;
        CandidateEvaluation best;
        for (int p = 1; p <= n; ++p) {
            if (state.is_placed(p)) continue;
            CandidateEvaluation eval = state.evaluate_candidate(p);
            if (!have || choose(eval.value, best.value)) {
                best = eval;
                have = true;
            }
        }
        state.place(best.host);
        result.trace.push_back(best.value);
    }
    result.embedding = embedding_from_prefix(state.ordering(), state.prefix());
    result.c_value = result.trace.back().as_integer();
    result.runtime = std::chrono::steady_clock::now() - started;
    return result;
}

std::int64_t role_swap_delta(const EdgeLabeling& labeling, const SpanningForest& forest,
                             const Embedding& emb, int a, int b) {
    std::int64_t delta = 0;
    int host_a = emb.of(a), host_b = emb.of(b);
    for (int g : forest.neighbors(a)) {
        if (g == b) continue; // the edge ab maps to the same host pair
        delta += labeling.label(host_b, emb.of(g)) - labeling.label(host_a, emb.of(g));
    }
    for (int g : forest.neighbors(b)) {
        if (g == a) continue;
        delta += labeling.label(host_a, emb.of(g)) - labeling.label(host_b, emb.of(g));
    }
    return delta;
}

} // namespace

EmbedResult greedy_embed(const EdgeLabeling& labeling, const SpanningForest& forest,
                         const GreedyConfig& config) {
    check_same_n(labeling, forest);
    VertexOrdering ordering = reorder_forest(forest, config.epsilon());
    EmbedResult result = run_sequential_embed(
        labeling, forest, std::move(ordering), "greedy",
        [](const ExactValue& candidate, const ExactValue& best) {
            return ExactValue::abs_less(candidate, best);
        });
    fill_deltas_and_certificates(result, labeling, forest, &config);
    return result;
}

EmbedResult monotone_embed(const EdgeLabeling& labeling, const SpanningForest& forest,
                           MonotoneSign sign) {
    check_same_n(labeling, forest);
    if (!labeling.is_zero_sum()) {
        throw Error(Errc::not_zero_sum,
                    "monotone embedding needs E_0 = 0, labeling sums to " +
                        std::to_string(labeling.total_sum()));
    }
    const char* tag = sign == MonotoneSign::plus ? "monotone+" : "monotone-";
    EmbedResult result = run_sequential_embed(
        labeling, forest, VertexOrdering::identity(labeling.n()), tag,
        [sign](const ExactValue& candidate, const ExactValue& best) {
            return sign == MonotoneSign::plus ? best < candidate : candidate < best;
        });
    fill_deltas_and_certificates(result, labeling, forest, nullptr);
    return result;
}

WalkResult transposition_walk(const EdgeLabeling& labeling, const SpanningForest& forest,
                              const Embedding& from, const Embedding& to) {
    check_same_n(labeling, forest);
    int n = labeling.n();
    if (from.n() != n || to.n() != n) {
        throw Error(Errc::dimension_mismatch, "embeddings do not match the host size");
    }

    // Smallest-index forest vertex of degree <= 1; a forest always has one.
    int pivot = 0;
    for (int v = 1; v <= n; ++v) {
        if (forest.degree(v) <= 1) {
            pivot = v;
            break;
        }
    }

    std::vector<int> target_fvertex(n + 1, 0); // host -> F-vertex in `to`
    for (int u = 1; u <= n; ++u) target_fvertex[to.of(u)] = u;

    WalkResult walk{.pivot = pivot, .sums = {}, .best_index = 0, .best_embedding = from, .path = {}};
    Embedding current = from;
    std::int64_t sum = copy_sum(labeling, forest, current);
    walk.sums.push_back(sum);
    walk.path.push_back(current);
    std::int64_t best_abs = sum < 0 ? -sum : sum;

    auto apply_swap = [&](int other) {
        sum += role_swap_delta(labeling, forest, current, pivot, other);
        current.swap_images(pivot, other);
        walk.sums.push_back(sum);
        walk.path.push_back(current);
        std::int64_t abs_sum = sum < 0 ? -sum : sum;
        if (abs_sum < best_abs) {
            best_abs = abs_sum;
            walk.best_index = walk.sums.size() - 1;
            walk.best_embedding = current;
        }
    };

    // Selection with a fixed pivot: while some F-vertex is mapped away from
    // its target, either route the pivot's current host to its final slot or
    // pull an unfinished host onto the pivot.
    while (true) {
        if (current.of(pivot) != to.of(pivot)) {
            apply_swap(target_fvertex[current.of(pivot)]);
            continue;
        }
        int unfinished = 0;
        for (int u = 1; u <= n; ++u) {
            if (current.of(u) != to.of(u)) {
                unfinished = u;
                break;
            }
        }
        if (unfinished == 0) break;
        apply_swap(unfinished);
    }
    return walk;
}

EmbedResult prop2_embed(const EdgeLabeling& labeling, const SpanningForest& forest) {
    auto started = std::chrono::steady_clock::now();
    check_same_n(labeling, forest);
    if (!labeling.is_zero_sum()) {
        throw Error(Errc::not_zero_sum, "the Delta+1 certificate needs a zero-sum labeling");
    }
    EmbedResult plus = monotone_embed(labeling, forest, MonotoneSign::plus);
    EmbedResult minus = monotone_embed(labeling, forest, MonotoneSign::minus);
    WalkResult walk = transposition_walk(labeling, forest, plus.embedding, minus.embedding);

    EmbedResult result{walk.best_embedding};
    result.algorithm = "prop2";
    result.c_value = walk.sums[walk.best_index];

    // Expectation trajectory of the returned copy along the natural order.
    ExpectationState replay(labeling, forest, VertexOrdering::identity(labeling.n()));
    result.trace.reserve(labeling.n() + 1);
    result.trace.push_back(replay.expectation());
    for (int u = 1; u <= labeling.n(); ++u) {
        replay.place(result.embedding.of(u));
        result.trace.push_back(replay.expectation());
    }
    fill_deltas_and_certificates(result, labeling, forest, nullptr);
    result.runtime = std::chrono::steady_clock::now() - started;
    return result;
}

EmbedResult best_embed(const EdgeLabeling& labeling, const SpanningForest& forest,
                       const GreedyConfig& config) {
    auto started = std::chrono::steady_clock::now();
    check_same_n(labeling, forest);
    if (!labeling.is_zero_sum()) {
        throw Error(Errc::not_zero_sum, "best_embed certifies Delta+1 and needs zero-sum input");
    }
    EmbedResult greedy = greedy_embed(labeling, forest, config);
    EmbedResult prop2 = prop2_embed(labeling, forest);
    std::int64_t greedy_abs = greedy.c_value < 0 ? -greedy.c_value : greedy.c_value;
    std::int64_t prop2_abs = prop2.c_value < 0 ? -prop2.c_value : prop2.c_value;
    EmbedResult result = greedy_abs <= prop2_abs ? std::move(greedy) : std::move(prop2);
    result.algorithm = "best";
    fill_deltas_and_certificates(result, labeling, forest, &config);
    result.runtime = std::chrono::steady_clock::now() - started;
    return result;
}

} // namespace lowsum
