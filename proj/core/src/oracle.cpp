#include "lowsum/oracle.hpp"

#include <algorithm>

#include "lowsum/errors.hpp"

namespace lowsum {

namespace {

void check_cap(int n, int cap, const char* what) {
    int effective = std::min(cap, kOracleHardCap);
    if (n > effective) {
        throw Error(Errc::too_large, std::string(what) + " enumerates n! permutations; n = " +
                                         std::to_string(n) + " exceeds the cap " +
                                         std::to_string(effective));
    }
}

// Depth-first enumeration over assignments of hosts to the F-vertices in
// ordering position order; the partial copy sum is maintained incrementally
// through the placed-neighbor labels only.
struct Enumerator {
    const EdgeLabeling& labeling;
    const SpanningForest& forest;
    VertexOrdering ordering;
    std::vector<int> host_of_fvertex;
    std::vector<char> used;
    std::map<std::int64_t, std::uint64_t>* counts = nullptr;
    std::int64_t sum_of_sums = 0;
    std::uint64_t leaves = 0;

    Enumerator(const EdgeLabeling& l, const SpanningForest& f, VertexOrdering o)
        : labeling(l), forest(f), ordering(std::move(o)),
          host_of_fvertex(l.n() + 1, 0), used(l.n() + 1, 0) {}

    void run(int step, std::int64_t partial) {
        int n = labeling.n();
        if (step > n) {
            if (counts != nullptr) ++(*counts)[partial];
            sum_of_sums += partial;
            ++leaves;
            return;
        }
        int fvertex = ordering.fvertex_at(step);
        for (int host = 1; host <= n; ++host) {
            if (used[host]) continue;
            std::int64_t gained = 0;
            for (int g : forest.neighbors(fvertex)) {
                if (host_of_fvertex[g] != 0) gained += labeling.label(host_of_fvertex[g], host);
            }
            used[host] = 1;
            host_of_fvertex[fvertex] = host;
            run(step + 1, partial + gained);
            host_of_fvertex[fvertex] = 0;
            used[host] = 0;
        }
    }
};

} // namespace

ExactValue SumDistribution::mean() const {
    std::int64_t weighted = 0;
    for (const auto& [sum, count] : counts) {
        weighted += sum * static_cast<std::int64_t>(count);
    }
    return ExactValue::ratio(weighted, static_cast<std::int64_t>(total));
}

std::int64_t SumDistribution::min_abs() const {
    std::int64_t best = -1;
    for (const auto& [sum, count] : counts) {
        std::int64_t abs_sum = sum < 0 ? -sum : sum;
        if (best < 0 || abs_sum < best) best = abs_sum;
    }
    return best;
}

SumDistribution enumerate_sums(const EdgeLabeling& labeling, const SpanningForest& forest,
                               int cap) {
    if (labeling.n() != forest.n()) {
        throw Error(Errc::dimension_mismatch, "labeling and forest sizes differ");
    }
    check_cap(labeling.n(), cap, "enumerate_sums");
    SumDistribution dist;
    Enumerator enumerator(labeling, forest, VertexOrdering::identity(labeling.n()));
    enumerator.counts = &dist.counts;
    enumerator.run(1, 0);
    dist.total = enumerator.leaves;
    return dist;
}

std::int64_t min_abs_sum(const EdgeLabeling& labeling, const SpanningForest& forest, int cap) {
    return enumerate_sums(labeling, forest, cap).min_abs();
}

ExactValue conditional_expectation_bruteforce(const EdgeLabeling& labeling,
                                              const SpanningForest& forest,
                                              const VertexOrdering& ordering,
                                              std::span<const int> prefix, int cap) {
    int n = labeling.n();
    if (forest.n() != n || ordering.n() != n) {
        throw Error(Errc::dimension_mismatch, "labeling, forest, and ordering sizes differ");
    }
    check_cap(n, cap, "conditional_expectation_bruteforce");

    Enumerator enumerator(labeling, forest, ordering);
    std::int64_t fixed = 0;
    int k = static_cast<int>(prefix.size());
    if (k > n) {
        throw Error(Errc::bad_parameters, "prefix longer than n");
    }
    for (int j = 1; j <= k; ++j) {
        int host = prefix[j - 1];
        if (host < 1 || host > n) {
            throw Error(Errc::bad_parameters, "prefix vertex outside [1,n]");
        }
        if (enumerator.used[host]) {
            throw Error(Errc::duplicate_in_prefix,
                        "host vertex " + std::to_string(host) + " appears twice");
        }
        int fvertex = ordering.fvertex_at(j);
        for (int g : forest.neighbors(fvertex)) {
            if (enumerator.host_of_fvertex[g] != 0) {
                fixed += labeling.label(enumerator.host_of_fvertex[g], host);
            }
        }
        enumerator.used[host] = 1;
        enumerator.host_of_fvertex[fvertex] = host;
    }
    enumerator.run(k + 1, fixed);
    return ExactValue::ratio(enumerator.sum_of_sums,
                             static_cast<std::int64_t>(enumerator.leaves));
}

} // namespace lowsum
