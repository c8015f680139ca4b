#include "lowsum/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "lowsum/cond_expect.hpp"
#include "lowsum/embedders.hpp"
#include "lowsum/errors.hpp"
#include "lowsum/oracle.hpp"
#include "lowsum/theory_checks.hpp"

namespace lowsum {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Exact decimal expansion when the denominator is 2^a 5^b, "num/den" text
// otherwise; CSV consumers get a '.' decimal point whenever one exists.
std::string csv_rational(const Rational& value) {
    std::int64_t den = value.den();
    int twos = 0, fives = 0;
    std::int64_t rest = den;
    while (rest % 2 == 0) {
        rest /= 2;
        ++twos;
    }
    while (rest % 5 == 0) {
        rest /= 5;
        ++fives;
    }
    if (rest != 1 || twos > 18 || fives > 18) return value.str();
    int digits = std::max(twos, fives);
    if (digits == 0) return std::to_string(value.num());
    __int128 scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    __int128 scaled = static_cast<__int128>(value.num()) * scale / den;
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string raw;
    while (scaled > 0) {
        raw.push_back(static_cast<char>('0' + static_cast<int>(scaled % 10)));
        scaled /= 10;
    }
    while (static_cast<int>(raw.size()) <= digits) raw.push_back('0');
    std::reverse(raw.begin(), raw.end());
    raw.insert(raw.size() - digits, ".");
    return (negative ? "-" : "") + raw;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += "\"\"";
        else quoted += c;
    }
    quoted += "\"";
    return quoted;
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
    threads = static_cast<int>(std::min<std::size_t>(std::max(threads, 1), count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
    if (failure) std::rethrow_exception(failure);
}

Rational rational_from_json(const json& value, const char* what) {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return ExactValue(value.get<std::int64_t>());
    throw Error(Errc::bad_parameters,
                std::string(what) + " must be a string rational like \"0.2\" or \"1/5\"");
}

EmbedResult run_algorithm(const std::string& name, const EdgeLabeling& labeling,
                          const SpanningForest& forest, const Rational& epsilon) {
    if (name == "greedy") return greedy_embed(labeling, forest, GreedyConfig(epsilon));
    if (name == "prop2") return prop2_embed(labeling, forest);
    if (name == "monotone+") return monotone_embed(labeling, forest, MonotoneSign::plus);
    if (name == "monotone-") return monotone_embed(labeling, forest, MonotoneSign::minus);
    if (name == "best") return best_embed(labeling, forest, GreedyConfig(epsilon));
    throw Error(Errc::bad_parameters, "unknown algorithm '" + name + "'");
}

} // namespace

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
    json parsed;
    try {
        parsed = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(Errc::malformed_input, std::string("bench config: ") + e.what());
    }
    ExperimentConfig config;
    try {
        if (parsed.contains("n")) {
            if (parsed["n"].is_array()) {
                config.ns = parsed["n"].get<std::vector<int>>();
            } else {
                config.ns = {parsed["n"].get<int>()};
            }
        }
        config.trials = parsed.value("trials", config.trials);
        config.seed = parsed.value("seed", config.seed);
        if (parsed.contains("kinds")) {
            config.kinds.clear();
            for (const auto& kind : parsed["kinds"]) {
                config.kinds.push_back(parse_forest_kind(kind.get<std::string>()));
            }
        }
        if (parsed.contains("epsilon")) {
            config.epsilon = rational_from_json(parsed["epsilon"], "epsilon");
        }
        if (parsed.contains("algorithms")) {
            config.algorithms = parsed["algorithms"].get<std::vector<std::string>>();
        }
        if (parsed.contains("pattern")) {
            config.pattern = parse_labeling_pattern(parsed["pattern"].get<std::string>());
        }
        config.oracle_cap = parsed.value("oracle_cap", config.oracle_cap);
        config.threads = parsed.value("threads", config.threads);
    } catch (const json::exception& e) {
        throw Error(Errc::malformed_input, std::string("bench config: ") + e.what());
    }
    config.validate();
    return config;
}

void ExperimentConfig::validate() const {
    if (ns.empty()) {
        throw Error(Errc::bad_parameters, "bench config needs at least one n");
    }
    for (int n : ns) {
        if (n < 2) {
            throw Error(Errc::bad_parameters, "bench sizes must be at least 2");
        }
        if ((std::int64_t(n) * (n - 1) / 2) % 2 != 0) {
            throw Error(Errc::infeasible_zero_sum,
                        "n = " + std::to_string(n) + " admits no zero-sum labeling");
        }
    }
    if (trials < 1) {
        throw Error(Errc::bad_parameters, "trials must be at least 1");
    }
    if (kinds.empty() || algorithms.empty()) {
        throw Error(Errc::bad_parameters, "bench config needs kinds and algorithms");
    }
    for (const std::string& name : algorithms) {
        if (name != "greedy" && name != "prop2" && name != "monotone+" && name != "monotone-" &&
            name != "best") {
            throw Error(Errc::bad_parameters, "unknown algorithm '" + name + "'");
        }
    }
    if (oracle_cap > kOracleHardCap) {
        throw Error(Errc::too_large, "oracle_cap above the hard ceiling 10");
    }
    if (threads < 1) {
        throw Error(Errc::bad_parameters, "threads must be at least 1");
    }
    (void)GreedyConfig(epsilon); // range check
}

namespace {

struct InstanceOutcome {
    std::uint64_t instance_seed = 0;
    int max_degree = 0;
    int forest_edges = 0;
    std::optional<std::int64_t> oracle_min;
    std::vector<std::int64_t> c_values; // parallel to config.algorithms
    std::vector<double> runtimes;
    std::vector<std::string> errors;
    std::vector<int> monitor_clean; // -1 none, 0 flagged, 1 clean
    std::vector<Rational> max_step_deltas;
    std::string instance_error;
};

} // namespace

BenchOutput run_bench(const ExperimentConfig& config) {
    auto started = std::chrono::steady_clock::now();
    config.validate();

    struct TaskKey {
        int n_index;
        int kind_index;
        int trial;
    };
    std::vector<TaskKey> tasks;
    for (int ni = 0; ni < static_cast<int>(config.ns.size()); ++ni) {
        for (int ki = 0; ki < static_cast<int>(config.kinds.size()); ++ki) {
            for (int trial = 0; trial < config.trials; ++trial) {
                tasks.push_back({ni, ki, trial});
            }
        }
    }

    std::vector<InstanceOutcome> outcomes(tasks.size());
    parallel_for(tasks.size(), config.threads, [&](std::size_t index) {
        const TaskKey& key = tasks[index];
        InstanceOutcome& outcome = outcomes[index];
        int n = config.ns[key.n_index];
        ForestKind kind = config.kinds[key.kind_index];
        outcome.instance_seed = derive_seed(config.seed, static_cast<std::uint64_t>(n),
                                            (std::uint64_t(key.kind_index) << 32) |
                                                std::uint64_t(key.trial));
        std::uint64_t forest_seed = derive_seed(outcome.instance_seed, 0x464f5245u);
        try {
            EdgeLabeling labeling = gen_zero_sum_labeling(n, outcome.instance_seed, config.pattern);
            SpanningForest forest = gen_forest(n, kind, forest_seed);
            outcome.max_degree = forest.max_degree();
            outcome.forest_edges = forest.edge_count();
            if (n <= config.oracle_cap) {
                outcome.oracle_min = min_abs_sum(labeling, forest, config.oracle_cap);
            }
            for (const std::string& algorithm : config.algorithms) {
                try {
                    EmbedResult result = run_algorithm(algorithm, labeling, forest, config.epsilon);
                    outcome.c_values.push_back(result.c_value);
                    outcome.runtimes.push_back(result.runtime.count());
                    outcome.errors.emplace_back();
                    if (algorithm == "greedy") {
                        TraceReport report =
                            analyze_trace(result, forest, GreedyConfig(config.epsilon));
                        outcome.monitor_clean.push_back(report.clean() ? 1 : 0);
                        outcome.max_step_deltas.push_back(report.max_step_delta);
                    } else {
                        outcome.monitor_clean.push_back(-1);
                        outcome.max_step_deltas.emplace_back(0);
                    }
                } catch (const Error& e) {
                    outcome.c_values.push_back(0);
                    outcome.runtimes.push_back(0);
                    outcome.errors.push_back(e.what());
                    outcome.monitor_clean.push_back(-1);
                    outcome.max_step_deltas.emplace_back(0);
                }
            }
        } catch (const Error& e) {
            outcome.instance_error = e.what();
        }
    });

    BenchOutput output;
    std::size_t task_index = 0;
    for (int ni = 0; ni < static_cast<int>(config.ns.size()); ++ni) {
        for (int ki = 0; ki < static_cast<int>(config.kinds.size()); ++ki) {
            for (int trial = 0; trial < config.trials; ++trial, ++task_index) {
                const InstanceOutcome& outcome = outcomes[task_index];
                int n = config.ns[ni];
                for (std::size_t ai = 0; ai < config.algorithms.size(); ++ai) {
                    RunRecord record;
                    record.n = n;
                    record.kind = forest_kind_name(config.kinds[ki]);
                    record.trial = trial;
                    record.instance_seed = outcome.instance_seed;
                    record.algorithm = config.algorithms[ai];
                    if (!outcome.instance_error.empty()) {
                        record.error = outcome.instance_error;
                        output.rows.push_back(std::move(record));
                        continue;
                    }
                    record.max_degree = outcome.max_degree;
                    record.forest_edges = outcome.forest_edges;
                    record.error = outcome.errors[ai];
                    if (record.error.empty()) {
                        record.c_value = outcome.c_values[ai];
                        record.runtime_seconds = outcome.runtimes[ai];
                        std::int64_t abs_c = std::llabs(record.c_value);
                        record.met_delta_plus_1 = abs_c <= record.max_degree + 1;
                        GreedyConfig greedy_config(config.epsilon);
                        record.asymptotic_bound = greedy_config.asymptotic_bound(record.max_degree);
                        record.met_asymptotic = ExactValue(abs_c) <= record.asymptotic_bound;
                        record.conjecture_bound = ExactValue::ratio(record.max_degree - 1, 2);
                        record.met_conjecture = ExactValue(abs_c) <= record.conjecture_bound;
                        record.oracle_min = outcome.oracle_min;
                        if (outcome.monitor_clean[ai] >= 0) {
                            record.monitor_clean = outcome.monitor_clean[ai] == 1;
                            record.max_step_delta = outcome.max_step_deltas[ai];
                        }
                    }
                    output.rows.push_back(std::move(record));
                }
            }
        }
    }

    // CSV, stable column set; runtime intentionally absent so that reruns are
    // byte-identical.
    std::ostringstream csv;
    csv << "n,kind,trial,seed,algorithm,delta,forest_edges,c_value,abs_c,"
           "delta_plus_1_bound,met_delta_plus_1,asymptotic_bound,met_asymptotic,"
           "conjecture_bound,met_conjecture,oracle_min_abs,gap,monitor_clean,"
           "max_step_delta,error\n";
    for (const RunRecord& record : output.rows) {
        std::vector<std::string> fields;
        fields.push_back(std::to_string(record.n));
        fields.push_back(csv_escape(record.kind));
        fields.push_back(std::to_string(record.trial));
        fields.push_back(std::to_string(record.instance_seed));
        fields.push_back(csv_escape(record.algorithm));
        if (record.error.empty()) {
            std::int64_t abs_c = std::llabs(record.c_value);
            fields.push_back(std::to_string(record.max_degree));
            fields.push_back(std::to_string(record.forest_edges));
            fields.push_back(std::to_string(record.c_value));
            fields.push_back(std::to_string(abs_c));
            fields.push_back(std::to_string(record.max_degree + 1));
            fields.push_back(record.met_delta_plus_1 ? "1" : "0");
            fields.push_back(csv_rational(record.asymptotic_bound));
            fields.push_back(record.met_asymptotic ? "1" : "0");
            fields.push_back(csv_rational(record.conjecture_bound));
            fields.push_back(record.met_conjecture ? "1" : "0");
            fields.push_back(record.oracle_min ? std::to_string(*record.oracle_min) : "");
            fields.push_back(record.oracle_min ? std::to_string(abs_c - *record.oracle_min) : "");
            fields.push_back(record.monitor_clean ? (*record.monitor_clean ? "1" : "0") : "");
            fields.push_back(record.monitor_clean ? csv_rational(record.max_step_delta) : "");
            fields.push_back("");
        } else {
            for (int i = 0; i < 14; ++i) fields.emplace_back();
            fields.push_back(csv_escape(record.error));
        }
        for (std::size_t i = 0; i < fields.size(); ++i) {
            csv << fields[i] << (i + 1 < fields.size() ? "," : "\n");
        }
    }
    output.csv = csv.str();

    // Summary: per-algorithm exact fractions plus the oracle gap statistics.
    ordered_json summary;
    summary["prng"] = kPrngName;
    summary["rows"] = output.rows.size();
    summary["config"] = ordered_json{{"trials", config.trials},
                                     {"seed", config.seed},
                                     {"epsilon", config.epsilon.str()},
                                     {"oracle_cap", config.oracle_cap}};
    summary["config"]["n"] = config.ns;
    {
        std::vector<std::string> kind_names;
        for (ForestKind kind : config.kinds) kind_names.emplace_back(forest_kind_name(kind));
        summary["config"]["kinds"] = kind_names;
        summary["config"]["algorithms"] = config.algorithms;
    }
    ordered_json per_algorithm = ordered_json::object();
    for (const std::string& algorithm : config.algorithms) {
        std::uint64_t runs = 0, met_dp1 = 0, met_thm = 0, met_conj = 0, failed = 0;
        std::uint64_t oracle_runs = 0;
        std::uint64_t monitored = 0, monitor_clean = 0;
        std::int64_t gap_total = 0;
        Rational max_ratio(0);
        bool have_ratio = false;
        for (const RunRecord& record : output.rows) {
            if (record.algorithm != algorithm) continue;
            if (!record.error.empty()) {
                ++failed;
                continue;
            }
            ++runs;
            met_dp1 += record.met_delta_plus_1 ? 1 : 0;
            met_thm += record.met_asymptotic ? 1 : 0;
            met_conj += record.met_conjecture ? 1 : 0;
            if (record.monitor_clean.has_value()) {
                ++monitored;
                monitor_clean += *record.monitor_clean ? 1 : 0;
            }
            if (record.max_degree >= 1) {
                Rational ratio = ExactValue::ratio(std::llabs(record.c_value), record.max_degree);
                if (!have_ratio || max_ratio < ratio) {
                    max_ratio = ratio;
                    have_ratio = true;
                }
            }
            if (record.oracle_min.has_value()) {
                ++oracle_runs;
                gap_total += std::llabs(record.c_value) - *record.oracle_min;
            }
        }
        ordered_json entry;
        entry["runs"] = runs;
        entry["failed_rows"] = failed;
        auto fraction = [&](std::uint64_t hits) {
            return runs == 0 ? std::string("0")
                             : ExactValue::ratio(static_cast<std::int64_t>(hits),
                                                 static_cast<std::int64_t>(runs))
                                   .str();
        };
        entry["frac_delta_plus_1"] = fraction(met_dp1);
        entry["frac_asymptotic_bound"] = fraction(met_thm);
        entry["frac_conjecture"] = fraction(met_conj);
        entry["max_abs_c_over_delta"] = have_ratio ? max_ratio.str() : "0";
        if (oracle_runs > 0) {
            entry["oracle_rows"] = oracle_runs;
            entry["mean_gap_to_optimum"] =
                ExactValue::ratio(gap_total, static_cast<std::int64_t>(oracle_runs)).str();
        }
        if (monitored > 0) {
            entry["frac_monitor_clean"] =
                ExactValue::ratio(static_cast<std::int64_t>(monitor_clean),
                                  static_cast<std::int64_t>(monitored))
                    .str();
        }
        per_algorithm[algorithm] = entry;
    }
    summary["per_algorithm"] = per_algorithm;
    output.summary_json = summary.dump(2) + "\n";
    output.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return output;
}

// ---------------------------------------------------------------------------
// Verification checks

std::vector<int> random_prefix(int n, int length, SplitMix64& rng) {
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    for (int i = 0; i < length; ++i) {
        int j = i + static_cast<int>(rng.next_below(n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(length);
    return pool;
}

VertexOrdering random_ordering(int n, SplitMix64& rng) {
    std::vector<int> order(n + 1);
    std::iota(order.begin(), order.end(), 0);
    for (int i = 1; i < n; ++i) {
        int j = i + static_cast<int>(rng.next_below(n - i + 1));
        std::swap(order[i], order[j]);
    }
    return VertexOrdering(std::move(order), 0);
}

namespace {

CheckResult check_formula(const EdgeLabeling& labeling, const SpanningForest& forest,
                          std::uint64_t seed) {
    SplitMix64 rng(derive_seed(seed, 0x666f726d));
    int n = labeling.n();
    CheckResult result{"formula", "pass", 0, ""};
    bool brute = n <= kOracleDefaultCap;
    for (int round = 0; round < 48; ++round) {
        VertexOrdering ordering =
            (round % 2 == 0) ? VertexOrdering::identity(n) : random_ordering(n, rng);
        int length = static_cast<int>(rng.next_below(n + 1));
        std::vector<int> prefix = random_prefix(n, length, rng);

        ExpectationState state(labeling, forest, ordering);
        for (int host : prefix) state.place(host);
        ExactValue incremental = state.expectation();
        ExactValue direct = expectation_direct(labeling, forest, ordering, prefix);
        if (incremental != direct) {
            result.status = "fail";
            result.detail = "incremental and direct expectations differ at prefix length " +
                            std::to_string(length);
            return result;
        }
        if (brute) {
            ExactValue average =
                conditional_expectation_bruteforce(labeling, forest, ordering, prefix);
            if (incremental != average) {
                result.status = "fail";
                result.detail = "expectation differs from the brute-force average";
                return result;
            }
        }
        ++result.cases;
    }
    result.detail = brute ? "incremental = direct = brute-force average"
                          : "incremental = direct (brute force skipped above n = 8)";
    return result;
}

CheckResult check_recurrence(const EdgeLabeling& labeling, const SpanningForest& forest,
                             std::uint64_t seed) {
    SplitMix64 rng(derive_seed(seed, 0x72656375));
    int n = labeling.n();
    CheckResult result{"recurrence", "pass", 0, ""};
    for (int round = 0; round < 48; ++round) {
        VertexOrdering ordering =
            (round % 2 == 0) ? VertexOrdering::identity(n) : random_ordering(n, rng);
        int length = static_cast<int>(rng.next_below(n)); // k < n so candidates exist
        ExpectationState state(labeling, forest, ordering);
        for (int host : random_prefix(n, length, rng)) state.place(host);

        ExactValue total(0);
        int candidates = 0;
        for (int p = 1; p <= n; ++p) {
            if (state.is_placed(p)) continue;
            total = total + state.evaluate_candidate(p).value;
            ++candidates;
        }
        if (total / ExactValue(candidates) != state.expectation()) {
            result.status = "fail";
            result.detail = "candidate mean differs from the state expectation at k = " +
                            std::to_string(length);
            return result;
        }
        ++result.cases;
    }
    result.detail = "mean over unplaced candidates equals E at every sampled state";
    return result;
}

CheckResult check_claim3(std::uint64_t seed) {
    CheckResult result{"claim3", "pass", 0, ""};
    // Exhaustive over short sequences.
    for (int p = 2; p <= 10; ++p) {
        for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
            std::vector<int> values(p);
            for (int i = 0; i < p; ++i) values[i] = (mask >> i) & 1 ? 1 : -1;
            for (int q = 1; q < p; ++q) {
                if (!check_averaging_gap(values, q).holds) {
                    result.status = "fail";
                    result.detail = "gap above 2q/p at p = " + std::to_string(p);
                    return result;
                }
                ++result.cases;
            }
        }
    }
    // Random long sequences.
    SplitMix64 rng(derive_seed(seed, 0x636c6133));
    for (int round = 0; round < 1000; ++round) {
        int p = 2 + static_cast<int>(rng.next_below(1999));
        std::vector<int> values(p);
        for (int& value : values) value = rng.next_bool() ? 1 : -1;
        int q = 1 + static_cast<int>(rng.next_below(p - 1));
        if (!check_averaging_gap(values, q).holds) {
            result.status = "fail";
            result.detail = "gap above 2q/p at random p = " + std::to_string(p);
            return result;
        }
        ++result.cases;
    }
    result.detail = "averaging gap within 2q/p on all sequences";
    return result;
}

CheckResult check_claim4(const EdgeLabeling& labeling) {
    CheckResult result{"claim4", "pass", 0, ""};
    int n = labeling.n();
    Rational epsilon = ExactValue::ratio(1, 10);
    if (epsilon * ExactValue(n) < ExactValue(10)) {
        epsilon = ExactValue::ratio(10, n);
    }
    try {
        SimpleGraph positive = build_positive_graph(labeling, {});
        int witness = find_balanced_vertex(positive, epsilon);
        result.cases = 1;
        result.detail = "positive graph has balanced vertex " + std::to_string(witness) +
                        " at eps = " + epsilon.str();
    } catch (const Error& e) {
        if (e.code() == Errc::precondition_violated) {
            result.status = "skipped";
            result.detail = e.what();
        } else {
            result.status = "fail";
            result.detail = e.what();
        }
    }
    return result;
}

} // namespace

std::vector<CheckResult> run_verification(const EdgeLabeling& labeling,
                                          const SpanningForest& forest,
                                          const std::vector<std::string>& checks,
                                          std::uint64_t seed) {
    if (labeling.n() != forest.n()) {
        throw Error(Errc::dimension_mismatch, "labeling and forest sizes differ");
    }
    std::vector<CheckResult> results;
    for (const std::string& name : checks) {
        if (name == "formula") {
            results.push_back(check_formula(labeling, forest, seed));
        } else if (name == "recurrence") {
            results.push_back(check_recurrence(labeling, forest, seed));
        } else if (name == "claim3") {
            results.push_back(check_claim3(seed));
        } else if (name == "claim4") {
            results.push_back(check_claim4(labeling));
        } else {
            throw Error(Errc::bad_parameters, "unknown check '" + name + "'");
        }
    }
    return results;
}

} // namespace lowsum
