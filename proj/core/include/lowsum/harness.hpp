#ifndef LOWSUM_HARNESS_HPP
#define LOWSUM_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lowsum/exact_value.hpp"
#include "lowsum/generators.hpp"
#include "lowsum/graph_core.hpp"
#include "lowsum/ordering.hpp"
#include "lowsum/prng.hpp"

namespace lowsum {

struct ExperimentConfig {
    std::vector<int> ns;
    int trials = 1;
    std::uint64_t seed = 0;
    std::vector<ForestKind> kinds{ForestKind::random_tree};
    Rational epsilon = ExactValue::ratio(1, 5);
    std::vector<std::string> algorithms{"best"};
    LabelingPattern pattern = LabelingPattern::uniform;
    int oracle_cap = 8; // oracle columns are filled for n up to this
    int threads = 1;

    static ExperimentConfig from_json_text(const std::string& text);
    void validate() const;
};

struct RunRecord {
    int n = 0;
    std::string kind;
    int trial = 0;
    std::uint64_t instance_seed = 0;
    std::string algorithm;
    int max_degree = 0;
    int forest_edges = 0;
    std::int64_t c_value = 0;
    bool met_delta_plus_1 = false;
    Rational asymptotic_bound;
    bool met_asymptotic = false;
    Rational conjecture_bound; // (Delta-1)/2, reported only
    bool met_conjecture = false;
    std::optional<std::int64_t> oracle_min; // filled when n <= oracle_cap
    std::optional<bool> monitor_clean;      // greedy rows: step-size diagnostics silent?
    Rational max_step_delta;                // greedy rows: largest |trace step|
    double runtime_seconds = 0;             // never serialized into output files
    std::string error;                      // per-row domain failure, row kept
};

struct BenchOutput {
    std::vector<RunRecord> rows;
    std::string csv;          // deterministic, byte-stable across reruns
    std::string summary_json; // deterministic, byte-stable across reruns
    double wall_seconds = 0;
};

BenchOutput run_bench(const ExperimentConfig& config);

// Instance-level checks behind the `verify` subcommand. status is one of
// "pass", "fail", "skipped".
struct CheckResult {
    std::string name;
    std::string status;
    std::uint64_t cases = 0;
    std::string detail;
};

std::vector<CheckResult> run_verification(const EdgeLabeling& labeling,
                                          const SpanningForest& forest,
                                          const std::vector<std::string>& checks,
                                          std::uint64_t seed);

// Shared sampling helpers (verification, tests, bench).
std::vector<int> random_prefix(int n, int length, SplitMix64& rng);
VertexOrdering random_ordering(int n, SplitMix64& rng);

// Entry point used by the lowsum binary; also callable in-process by tests.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lowsum

#endif
