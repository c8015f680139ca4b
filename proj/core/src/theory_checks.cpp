#include "lowsum/theory_checks.hpp"

#include <algorithm>

#include "lowsum/errors.hpp"

namespace lowsum {

SimpleGraph::SimpleGraph(std::vector<int> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
        throw Error(Errc::malformed_input, "duplicate vertex in graph");
    }
    degree_.assign(vertices_.size(), 0);
    std::sort(edges.begin(), edges.end());
    Edge previous{};
    for (const Edge& e : edges) {
        if (e == previous) {
            throw Error(Errc::malformed_input, "duplicate edge in graph");
        }
        previous = e;
        auto u_it = std::lower_bound(vertices_.begin(), vertices_.end(), e.u);
        auto v_it = std::lower_bound(vertices_.begin(), vertices_.end(), e.v);
        if (u_it == vertices_.end() || *u_it != e.u || v_it == vertices_.end() || *v_it != e.v ||
            e.u == e.v) {
            throw Error(Errc::malformed_input, "edge endpoint outside the vertex set");
        }
        ++degree_[u_it - vertices_.begin()];
        ++degree_[v_it - vertices_.begin()];
        ++m_;
    }
}

int SimpleGraph::degree(int v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) {
        throw Error(Errc::bad_parameters, "vertex " + std::to_string(v) + " not in graph");
    }
    return degree_[it - vertices_.begin()];
}

bool SimpleGraph::contains(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

GapCheck check_averaging_gap(std::span<const int> values, int q) {
    int p = static_cast<int>(values.size());
    if (q <= 0 || q >= p) {
        throw Error(Errc::bad_parameters,
                    "need 0 < q < p, got q = " + std::to_string(q) + ", p = " + std::to_string(p));
    }
    std::int64_t full = 0, head = 0;
    for (int i = 0; i < p; ++i) {
        if (values[i] != 1 && values[i] != -1) {
            throw Error(Errc::bad_value, "sequence value outside {-1,+1}");
        }
        full += values[i];
        if (i < p - q) head += values[i];
    }
    GapCheck check;
    check.gap = (ExactValue::ratio(full, p) - ExactValue::ratio(head, p - q)).abs();
    check.bound = ExactValue::ratio(2 * std::int64_t(q), p);
    check.holds = check.gap <= check.bound;
    return check;
}

SimpleGraph build_positive_graph(const EdgeLabeling& labeling,
                                 const std::vector<int>& excluded) {
    int n = labeling.n();
    std::vector<char> keep(n + 1, 1);
    for (int v : excluded) {
        if (v < 1 || v > n) {
            throw Error(Errc::bad_parameters, "excluded vertex outside [1,n]");
        }
        keep[v] = 0;
    }
    std::vector<int> vertices;
    for (int v = 1; v <= n; ++v) {
        if (keep[v]) vertices.push_back(v);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (labeling.label(vertices[i], vertices[j]) > 0) {
                edges.emplace_back(vertices[i], vertices[j]);
            }
        }
    }
    return SimpleGraph(std::move(vertices), std::move(edges));
}

int find_balanced_vertex(const SimpleGraph& graph, const Rational& epsilon) {
    std::int64_t n = graph.order();
    ExactValue n_value(n);
    if (!(epsilon * n_value >= ExactValue(10))) {
        throw Error(Errc::precondition_violated,
                    "need eps * n >= 10, got eps = " + epsilon.str() + ", n = " +
                        std::to_string(n));
    }
    ExactValue pairs = ExactValue::ratio(n * (n - 1), 2);
    ExactValue density_slack = (ExactValue(graph.edge_count()) - pairs * ExactValue::ratio(1, 2)).abs();
    if (!(density_slack <= epsilon * pairs / ExactValue(10))) {
        throw Error(Errc::precondition_violated,
                    "edge count " + std::to_string(graph.edge_count()) +
                        " is farther than eps/10 from half of " + pairs.str());
    }

    ExactValue lower = (ExactValue::ratio(1, 4) - epsilon) * n_value;
    ExactValue upper = (ExactValue::ratio(3, 4) + epsilon) * n_value - ExactValue(1);
    for (int v : graph.vertices()) {
        ExactValue degree(graph.degree(v));
        if (lower <= degree && degree <= upper) return v;
    }
    throw Error(Errc::witness_not_found,
                "no vertex with degree in [" + lower.str() + ", " + upper.str() +
                    "] on " + std::to_string(n) + " vertices with " +
                    std::to_string(graph.edge_count()) +
                    " edges; this contradicts the degree-window guarantee");
}

TraceReport analyze_trace(const EmbedResult& result, const SpanningForest& forest,
                          const GreedyConfig& config) {
    int n = forest.n();
    if (static_cast<int>(result.trace.size()) != n + 1) {
        throw Error(Errc::trace_mismatch,
                    "trace has " + std::to_string(result.trace.size()) + " entries, expected " +
                        std::to_string(n + 1));
    }
    const Rational& eps = config.epsilon();
    ExactValue delta(forest.max_degree());
    Rational additive = config.additive_constant();

    TraceReport report;
    report.steps = n;
    report.step_bound_simple =
        (ExactValue(1) + ExactValue::ratio(16, 3) * eps) * delta + additive;
    report.step_bound_sharp = (ExactValue::ratio(1, 2) + ExactValue(327) * eps) * delta + additive;
    report.trajectory_bound = config.asymptotic_bound(forest.max_degree());
    report.note =
        "per-step bounds hold for the best candidate once n is large in terms of eps; "
        "the sharp bound's derivation rescales the degree-window threshold to 320*eps/3, "
        "this report applies the configured eps directly";

    for (int k = 0; k <= n; ++k) {
        ExactValue abs_value = result.trace[k].abs();
        if (ExactValue::abs_less(report.max_abs_expectation, abs_value)) {
            report.max_abs_expectation = abs_value;
        }
        if (k > 0 && report.trajectory_bound < abs_value) {
            report.steps_exceeding_trajectory.push_back(k);
        }
        if (k == n) continue;
        ExactValue step_delta = (result.trace[k + 1] - result.trace[k]).abs();
        if (ExactValue::abs_less(report.max_step_delta, step_delta)) {
            report.max_step_delta = step_delta;
        }
        if (report.step_bound_simple < step_delta) report.steps_exceeding_simple.push_back(k);
        if (report.step_bound_sharp < step_delta) report.steps_exceeding_sharp.push_back(k);
    }
    return report;
}

} // namespace lowsum
