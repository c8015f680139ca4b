#include "lowsum/cond_expect.hpp"

#include "lowsum/errors.hpp"

namespace lowsum {

std::atomic<std::uint64_t> ExpectationState::builds_{0};

ExpectationState::ExpectationState(const EdgeLabeling& labeling, const SpanningForest& forest,
                                   VertexOrdering ordering)
    : labeling_(&labeling),
      forest_(&forest),
      ordering_(std::move(ordering)),
      n_(labeling.n()) {
    if (forest.n() != n_ || ordering_.n() != n_) {
        throw Error(Errc::dimension_mismatch,
                    "labeling, forest, and ordering must share one vertex count");
    }
    builds_.fetch_add(1, std::memory_order_relaxed);
    prefix_.reserve(n_);
    placed_.assign(n_ + 1, 0);
    host_of_fvertex_.assign(n_ + 1, 0);
    deg_residual_.assign(n_ + 1, 0);
    active_pos_.assign(n_ + 1, 0);
    star_sum_.assign(n_ + 1, 0);
    for (int v = 1; v <= n_; ++v) star_sum_[v] = labeling.star_sum(v);
    clique_sum_ = labeling.total_sum();
    m_residual_ = forest.edge_count();
    next_nbr_mark_.assign(n_ + 1, 0);
    refresh_next_neighbor_marks();
}

void ExpectationState::refresh_next_neighbor_marks() {
    for (int step : next_nbr_steps_) next_nbr_mark_[step] = 0;
    next_nbr_steps_.clear();
    if (k_ >= n_) return;
    int next_fvertex = ordering_.fvertex_at(k_ + 1);
    for (int g : forest_->neighbors(next_fvertex)) {
        if (host_of_fvertex_[g] != 0) {
            int step = ordering_.step_of(g);
            next_nbr_mark_[step] = 1;
            next_nbr_steps_.push_back(step);
        }
    }
}

ExactValue ExpectationState::expectation() const {
    int q = n_ - k_; // unplaced host count
    std::int64_t star = 0;
    for (int j : active_steps_) {
        star += std::int64_t(deg_residual_[j]) * star_sum_[prefix_[j - 1]];
    }
    if (q < 2) {
        // q == 1: star averages have denominator 1; q == 0: star == 0.
        // Either way the clique term is vacuous (m_k == 0).
        return ExactValue(c_prefix_ + star);
    }
    std::int64_t den = std::int64_t(q) * (q - 1);
    std::int64_t num =
        c_prefix_ * den + star * (q - 1) + 2 * clique_sum_ * m_residual_;
    return ExactValue::ratio(num, den);
}

CandidateEvaluation ExpectationState::evaluate_candidate(int host) const {
    if (k_ >= n_) {
        throw Error(Errc::prefix_complete, "all vertices are already placed");
    }
    if (host < 1 || host > n_) {
        throw Error(Errc::bad_parameters, "host vertex " + std::to_string(host) +
                                              " outside [1," + std::to_string(n_) + "]");
    }
    if (placed_[host]) {
        throw Error(Errc::already_placed, "host vertex " + std::to_string(host));
    }

    CandidateEvaluation eval;
    eval.host = host;
    int next_fvertex = ordering_.fvertex_at(k_ + 1);
    eval.d1 = static_cast<int>(next_nbr_steps_.size());
    for (int step : next_nbr_steps_) {
        eval.c1 += labeling_->label(prefix_[step - 1], host);
    }
    eval.d2 = forest_->degree(next_fvertex) - eval.d1;

    // Residual star sums after hypothetically placing host: every placed
    // vertex loses its label toward host, placed neighbors of the next
    // F-vertex additionally lose one residual degree. Steps with residual
    // degree 0 are never marked (the next F-vertex is an unplaced neighbor
    // of every marked step), so scanning the active steps is exhaustive.
    std::int64_t star = 0;
    for (int j : active_steps_) {
        int dj = deg_residual_[j] - next_nbr_mark_[j];
        if (dj != 0) {
            star += std::int64_t(dj) *
                    (star_sum_[prefix_[j - 1]] - labeling_->label(prefix_[j - 1], host));
        }
    }
    star += std::int64_t(eval.d2) * star_sum_[host];

    int r = n_ - k_ - 1; // unplaced after this step
    std::int64_t base = c_prefix_ + eval.c1;
    if (r < 2) {
        // r == 1 leaves no residual F-edge (m == 0); r == 0 leaves nothing.
        eval.value = ExactValue(base + star);
        return eval;
    }
    std::int64_t m2 = m_residual_ - eval.d2;
    std::int64_t t2 = clique_sum_ - star_sum_[host];
    std::int64_t den = std::int64_t(r) * (r - 1);
    eval.value = ExactValue::ratio(base * den + star * (r - 1) + 2 * t2 * m2, den);
    return eval;
}

void ExpectationState::place(int host) {
    if (k_ >= n_) {
        throw Error(Errc::prefix_complete, "all vertices are already placed");
    }
    if (host < 1 || host > n_) {
        throw Error(Errc::bad_parameters, "host vertex " + std::to_string(host) +
                                              " outside [1," + std::to_string(n_) + "]");
    }
    if (placed_[host]) {
        throw Error(Errc::already_placed, "host vertex " + std::to_string(host));
    }

    auto deactivate_step = [this](int step) {
        int idx = active_pos_[step] - 1;
        int last = active_steps_.back();
        active_steps_[idx] = last;
        active_pos_[last] = idx + 1;
        active_steps_.pop_back();
        active_pos_[step] = 0;
    };

    int next_fvertex = ordering_.fvertex_at(k_ + 1);
    int d1 = 0;
    for (int step : next_nbr_steps_) {
        c_prefix_ += labeling_->label(prefix_[step - 1], host);
        if (--deg_residual_[step] == 0) deactivate_step(step);
        ++d1;
    }
    int d2 = forest_->degree(next_fvertex) - d1;

    ++k_;
    prefix_.push_back(host);
    placed_[host] = 1;
    host_of_fvertex_[next_fvertex] = host;
    deg_residual_[k_] = d2;
    if (d2 > 0) {
        active_steps_.push_back(k_);
        active_pos_[k_] = static_cast<int>(active_steps_.size());
    }
    m_residual_ -= d2;

    clique_sum_ -= star_sum_[host];
    for (int v = 1; v <= n_; ++v) {
        if (v != host) star_sum_[v] -= labeling_->label(v, host);
    }

    refresh_next_neighbor_marks();
}

ExactValue expectation_direct(const EdgeLabeling& labeling, const SpanningForest& forest,
                              const VertexOrdering& ordering, std::span<const int> prefix) {
    int n = labeling.n();
    if (forest.n() != n || ordering.n() != n) {
        throw Error(Errc::dimension_mismatch,
                    "labeling, forest, and ordering must share one vertex count");
    }
    int k = static_cast<int>(prefix.size());
    if (k > n) {
        throw Error(Errc::bad_parameters, "prefix longer than n");
    }
    std::vector<char> placed(n + 1, 0);
    std::vector<int> host_of_fvertex(n + 1, 0);
    for (int j = 1; j <= k; ++j) {
        int host = prefix[j - 1];
        if (host < 1 || host > n) {
            throw Error(Errc::bad_parameters,
                        "prefix vertex " + std::to_string(host) + " outside [1," +
                            std::to_string(n) + "]");
        }
        if (placed[host]) {
            throw Error(Errc::duplicate_in_prefix,
                        "host vertex " + std::to_string(host) + " appears twice");
        }
        placed[host] = 1;
        host_of_fvertex[ordering.fvertex_at(j)] = host;
    }

    // weight of the fully determined edges; residual edge count alongside
    std::int64_t determined = 0;
    int m_residual = 0;
    for (const Edge& e : forest.edges()) {
        bool u_placed = host_of_fvertex[e.u] != 0;
        bool v_placed = host_of_fvertex[e.v] != 0;
        if (u_placed && v_placed) {
            determined += labeling.label(host_of_fvertex[e.u], host_of_fvertex[e.v]);
        } else if (!u_placed && !v_placed) {
            ++m_residual;
        }
    }

    // expected weight of the edges each placed vertex sends into the
    // unplaced set
    std::int64_t star = 0;
    for (int j = 1; j <= k; ++j) {
        int fvertex = ordering.fvertex_at(j);
        int host = prefix[j - 1];
        int residual_degree = 0;
        for (int g : forest.neighbors(fvertex)) {
            if (host_of_fvertex[g] == 0) ++residual_degree;
        }
        if (residual_degree == 0) continue;
        std::int64_t residual_sum = 0;
        for (int v = 1; v <= n; ++v) {
            if (!placed[v]) residual_sum += labeling.label(host, v);
        }
        star += std::int64_t(residual_degree) * residual_sum;
    }

    // expected weight of the edges embedded entirely within the unplaced
    // remainder
    std::int64_t clique_sum = 0;
    for (int u = 1; u <= n; ++u) {
        if (placed[u]) continue;
        for (int v = u + 1; v <= n; ++v) {
            if (!placed[v]) clique_sum += labeling.label(u, v);
        }
    }

    int q = n - k;
    if (q < 2) {
        return ExactValue(determined + star);
    }
    std::int64_t den = std::int64_t(q) * (q - 1);
    return ExactValue::ratio(determined * den + star * (q - 1) + 2 * clique_sum * m_residual,
                             den);
}

} // namespace lowsum
