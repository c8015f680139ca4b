#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lowsum/embedders.hpp"
#include "lowsum/errors.hpp"
#include "lowsum/generators.hpp"
#include "lowsum/graph_io.hpp"
#include "lowsum/harness.hpp"
#include "lowsum/local_search.hpp"
#include "lowsum/oracle.hpp"
#include "lowsum/prng.hpp"
#include "lowsum/theory_checks.hpp"

namespace lowsum {

namespace {

using nlohmann::ordered_json;

ordered_json embed_result_json(const EmbedResult& result, const EdgeLabeling& labeling,
                               const SpanningForest& forest, const Rational& epsilon) {
    ordered_json doc;
    doc["algorithm"] = result.algorithm;
    doc["n"] = labeling.n();
    doc["forest_edges"] = forest.edge_count();
    doc["max_degree"] = forest.max_degree();
    doc["zero_sum"] = labeling.is_zero_sum();
    doc["c_value"] = result.c_value;
    doc["abs_c"] = std::llabs(result.c_value);
    doc["bounds"] = ordered_json{
        {"delta_plus_1", forest.max_degree() + 1},
        {"asymptotic", GreedyConfig(epsilon).asymptotic_bound(forest.max_degree()).str()},
        {"conjecture", ExactValue::ratio(forest.max_degree() - 1, 2).str()},
    };
    doc["certificates"] = ordered_json{
        {"delta_plus_1",
         ordered_json{{"checked", result.certificates.delta_plus_1_checked},
                      {"holds", result.certificates.delta_plus_1_holds}}},
        {"asymptotic", ordered_json{{"checked", result.certificates.asymptotic_checked},
                                 {"holds", result.certificates.asymptotic_holds}}},
    };
    std::vector<int> embedding(labeling.n());
    for (int u = 1; u <= labeling.n(); ++u) embedding[u - 1] = result.embedding.of(u);
    doc["embedding"] = embedding;
    std::vector<std::string> trace;
    trace.reserve(result.trace.size());
    for (const ExactValue& value : result.trace) trace.push_back(value.str());
    doc["trace"] = trace;

    // Step-size diagnostics for greedy traces (monitored, never asserted).
    if (result.algorithm == "greedy") {
        TraceReport report = analyze_trace(result, forest, GreedyConfig(epsilon));
        doc["trace_report"] = ordered_json{
            {"steps", report.steps},
            {"step_bound_simple", report.step_bound_simple.str()},
            {"step_bound_sharp", report.step_bound_sharp.str()},
            {"trajectory_bound", report.trajectory_bound.str()},
            {"max_step_delta", report.max_step_delta.str()},
            {"max_abs_expectation", report.max_abs_expectation.str()},
            {"steps_exceeding_simple", report.steps_exceeding_simple},
            {"steps_exceeding_sharp", report.steps_exceeding_sharp},
            {"steps_exceeding_trajectory", report.steps_exceeding_trajectory},
            {"clean", report.clean()},
            {"note", report.note},
        };
    }
    doc["prng"] = kPrngName;
    return doc;
}

void maybe_write_json(const std::string& path, const ordered_json& doc) {
    if (path.empty()) return;
    write_text_file(path, doc.dump(2) + "\n");
}

int cmd_gen_labeling(int n, std::uint64_t seed, const std::string& pattern_name,
                     const std::string& out_path, std::ostream& out) {
    LabelingPattern pattern = parse_labeling_pattern(pattern_name);
    EdgeLabeling labeling = gen_zero_sum_labeling(n, seed, pattern);
    std::ostringstream metadata;
    metadata << "lowsum labeling n=" << n << " seed=" << seed << " pattern=" << pattern_name
             << " prng=" << kPrngName;
    write_text_file(out_path, serialize_labeling(labeling, metadata.str()));
    out << "wrote labeling n=" << n << " (+1 on " << labeling.edge_count() / 2 << " of "
        << labeling.edge_count() << " edges) to " << out_path << "\n";
    return 0;
}

int cmd_gen_forest(int n, const std::string& kind_name, std::uint64_t seed,
                   const std::string& out_path, std::ostream& out) {
    ForestKind kind = parse_forest_kind(kind_name);
    SpanningForest forest = gen_forest(n, kind, seed);
    write_text_file(out_path, serialize_forest(forest));
    out << "wrote " << kind_name << " forest n=" << n << " m=" << forest.edge_count()
        << " delta=" << forest.max_degree() << " to " << out_path << "\n";
    return 0;
}

int cmd_embed(const std::string& labeling_path, const std::string& forest_path,
              const std::string& algorithm, const std::string& epsilon_text,
              const std::string& json_path, const std::string& embedding_path, std::ostream& out,
              std::ostream& err) {
    EdgeLabeling labeling = read_labeling_file(labeling_path);
    SpanningForest forest = read_forest_file(forest_path);
    Rational epsilon = parse_rational(epsilon_text);
    GreedyConfig config(epsilon); // validated up front; the report derives bounds from it

    EmbedResult result = [&] {
        if (algorithm == "greedy") return greedy_embed(labeling, forest, config);
        if (algorithm == "prop2") return prop2_embed(labeling, forest);
        if (algorithm == "monotone+") return monotone_embed(labeling, forest, MonotoneSign::plus);
        if (algorithm == "monotone-") return monotone_embed(labeling, forest, MonotoneSign::minus);
        if (algorithm == "best") return best_embed(labeling, forest, config);
        throw Error(Errc::bad_parameters, "unknown algorithm '" + algorithm + "'");
    }();

    maybe_write_json(json_path, embed_result_json(result, labeling, forest, epsilon));
    if (!embedding_path.empty()) {
        write_text_file(embedding_path, serialize_embedding(result.embedding));
    }
    out << "algorithm=" << result.algorithm << " n=" << labeling.n()
        << " delta=" << forest.max_degree() << " c=" << result.c_value
        << " abs=" << std::llabs(result.c_value);
    if (result.certificates.delta_plus_1_checked) {
        out << " delta_plus_1=" << (result.certificates.delta_plus_1_holds ? "ok" : "exceeded");
    }
    out << "\n";
    err << "runtime_seconds=" << result.runtime.count() << "\n";
    return 0;
}

int cmd_local_search(const std::string& labeling_path, const std::string& subgraph_path,
                     const std::string& rule_name, const std::string& json_path,
                     std::ostream& out, std::ostream& err) {
    EdgeLabeling labeling = read_labeling_file(labeling_path);
    SpanningSubgraph subgraph = read_subgraph_file(subgraph_path);
    DescentRule rule;
    if (rule_name == "best") {
        rule = DescentRule::best_improvement;
    } else if (rule_name == "first") {
        rule = DescentRule::first_improvement;
    } else {
        throw Error(Errc::bad_parameters, "unknown rule '" + rule_name + "'");
    }

    auto started = std::chrono::steady_clock::now();
    DescendResult result = descend(labeling, subgraph, rule);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    ordered_json doc;
    doc["n"] = subgraph.n();
    doc["edges"] = subgraph.edge_count();
    doc["max_degree"] = subgraph.max_degree();
    doc["regular"] = subgraph.is_regular();
    doc["zero_sum"] = labeling.is_zero_sum();
    doc["rule"] = rule_name;
    doc["window"] = 2 * subgraph.max_degree();
    doc["c_start"] = result.trace.front();
    doc["c_final"] = result.trace.back();
    doc["steps"] = result.trace.size() - 1;
    doc["stalled"] = result.stalled;
    doc["certified"] = result.certified;
    doc["trace"] = result.trace;
    maybe_write_json(json_path, doc);

    out << "local-search rule=" << rule_name << " c_start=" << result.trace.front()
        << " c_final=" << result.trace.back() << " steps=" << result.trace.size() - 1
        << " window=" << 2 * subgraph.max_degree()
        << (result.stalled ? " stalled" : "")
        << (result.certified ? " certified" : "") << "\n";
    err << "runtime_seconds=" << seconds << "\n";
    return 0;
}

int cmd_oracle(const std::string& labeling_path, const std::string& forest_path, int cap,
               const std::string& json_path, std::ostream& out) {
    EdgeLabeling labeling = read_labeling_file(labeling_path);
    SpanningForest forest = read_forest_file(forest_path);
    SumDistribution dist = enumerate_sums(labeling, forest, cap);

    ordered_json doc;
    doc["n"] = labeling.n();
    doc["forest_edges"] = forest.edge_count();
    doc["permutations"] = dist.total;
    doc["mean"] = dist.mean().str();
    doc["min_abs"] = dist.min_abs();
    ordered_json counts = ordered_json::object();
    for (const auto& [sum, count] : dist.counts) {
        counts[std::to_string(sum)] = count;
    }
    doc["counts"] = counts;
    maybe_write_json(json_path, doc);
    out << doc.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& labeling_path, const std::string& forest_path,
               const std::string& checks_csv, std::uint64_t seed, const std::string& json_path,
               std::ostream& out) {
    EdgeLabeling labeling = read_labeling_file(labeling_path);
    SpanningForest forest = read_forest_file(forest_path);

    std::vector<std::string> checks;
    std::stringstream stream(checks_csv);
    std::string name;
    while (std::getline(stream, name, ',')) {
        if (!name.empty()) checks.push_back(name);
    }
    std::vector<CheckResult> results = run_verification(labeling, forest, checks, seed);

    bool all_pass = true;
    ordered_json doc;
    doc["n"] = labeling.n();
    doc["seed"] = seed;
    ordered_json entries = ordered_json::object();
    for (const CheckResult& result : results) {
        entries[result.name] = ordered_json{
            {"status", result.status}, {"cases", result.cases}, {"detail", result.detail}};
        if (result.status == "fail") all_pass = false;
    }
    doc["checks"] = entries;
    doc["all_pass"] = all_pass;
    maybe_write_json(json_path, doc);
    out << doc.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

int cmd_bench(const std::string& config_path, const std::string& out_dir, int threads_override,
              std::ostream& out, std::ostream& err) {
    std::ifstream in(config_path);
    if (!in) {
        throw Error(Errc::io_error, "cannot open '" + config_path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    ExperimentConfig config = ExperimentConfig::from_json_text(buffer.str());
    if (threads_override > 0) config.threads = threads_override;

    BenchOutput result = run_bench(config);
    std::filesystem::create_directories(out_dir);
    std::string csv_path = (std::filesystem::path(out_dir) / "runs.csv").string();
    std::string summary_path = (std::filesystem::path(out_dir) / "summary.json").string();
    write_text_file(csv_path, result.csv);
    write_text_file(summary_path, result.summary_json);
    out << "bench wrote " << result.rows.size() << " rows to " << csv_path << "\n";
    err << "runtime_seconds=" << result.wall_seconds << "\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"low-sum spanning forest embeddings in +-1-labeled complete graphs"};
    app.require_subcommand(1);

    // gen-labeling
    auto* gen_labeling = app.add_subcommand("gen-labeling", "generate a zero-sum labeling file");
    int gl_n = 0;
    std::uint64_t gl_seed = 0;
    std::string gl_pattern = "uniform";
    std::string gl_out;
    gen_labeling->add_option("--n", gl_n, "vertex count")->required();
    gen_labeling->add_option("--seed", gl_seed, "generator seed");
    gen_labeling->add_option("--pattern", gl_pattern, "uniform|block")
        ->check(CLI::IsMember({"uniform", "block", "block_adversarial"}));
    gen_labeling->add_option("--out", gl_out, "output path")->required();

    // gen-forest
    auto* gen_forest_cmd = app.add_subcommand("gen-forest", "generate a spanning forest file");
    int gf_n = 0;
    std::uint64_t gf_seed = 0;
    std::string gf_kind;
    std::string gf_out;
    gen_forest_cmd->add_option("--n", gf_n, "vertex count")->required();
    gen_forest_cmd->add_option("--kind", gf_kind, "path|star|perfect_matching|random_tree|random_forest|binary_tree")
        ->required();
    gen_forest_cmd->add_option("--seed", gf_seed, "generator seed");
    gen_forest_cmd->add_option("--out", gf_out, "output path")->required();

    // embed
    auto* embed = app.add_subcommand("embed", "find a low-sum copy of a forest");
    std::string em_labeling, em_forest, em_json, em_embedding;
    std::string em_algo = "best";
    std::string em_epsilon = "0.2";
    embed->add_option("--labeling", em_labeling, "labeling file")->required();
    embed->add_option("--forest", em_forest, "forest file")->required();
    embed->add_option("--algo", em_algo, "greedy|prop2|monotone+|monotone-|best")
        ->check(CLI::IsMember({"greedy", "prop2", "monotone+", "monotone-", "best"}));
    embed->add_option("--epsilon", em_epsilon, "greedy epsilon in (0, 1/4), e.g. 0.2 or 1/5");
    embed->add_option("--json", em_json, "write the full result as JSON");
    embed->add_option("--out-embedding", em_embedding, "write the permutation in embedding format");

    // local-search
    auto* local = app.add_subcommand("local-search", "role-swap descent on a spanning subgraph");
    std::string ls_labeling, ls_subgraph, ls_json;
    std::string ls_rule = "best";
    local->add_option("--labeling", ls_labeling, "labeling file")->required();
    local->add_option("--subgraph", ls_subgraph, "subgraph file (forest format)")->required();
    local->add_option("--rule", ls_rule, "best|first")->check(CLI::IsMember({"best", "first"}));
    local->add_option("--json", ls_json, "write the full result as JSON");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force distribution over all n! copies");
    std::string or_labeling, or_forest, or_json;
    int or_cap = kOracleDefaultCap;
    oracle_cmd->add_option("--labeling", or_labeling, "labeling file")->required();
    oracle_cmd->add_option("--forest", or_forest, "forest file")->required();
    oracle_cmd->add_option("--cap", or_cap, "refuse n above this (hard ceiling 10)");
    oracle_cmd->add_option("--json", or_json, "also write the distribution as JSON");

    // verify
    auto* verify = app.add_subcommand("verify", "run instance-level consistency checks");
    std::string vf_labeling, vf_forest, vf_json;
    std::string vf_checks = "recurrence,formula,claim3,claim4";
    std::uint64_t vf_seed = 0;
    verify->add_option("--labeling", vf_labeling, "labeling file")->required();
    verify->add_option("--forest", vf_forest, "forest file")->required();
    verify->add_option("--checks", vf_checks, "comma list: recurrence,formula,claim3,claim4");
    verify->add_option("--seed", vf_seed, "sampling seed");
    verify->add_option("--json", vf_json, "write the report as JSON");

    // bench
    auto* bench = app.add_subcommand("bench", "run an experiment grid from a JSON config");
    std::string bn_config, bn_out;
    int bn_threads = 0;
    bench->add_option("--config", bn_config, "config JSON file")->required();
    bench->add_option("--out", bn_out, "output directory")->required();
    bench->add_option("--threads", bn_threads, "override the config worker count");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (gen_labeling->parsed()) return cmd_gen_labeling(gl_n, gl_seed, gl_pattern, gl_out, out);
        if (gen_forest_cmd->parsed()) return cmd_gen_forest(gf_n, gf_kind, gf_seed, gf_out, out);
        if (embed->parsed())
            return cmd_embed(em_labeling, em_forest, em_algo, em_epsilon, em_json, em_embedding,
                             out, err);
        if (local->parsed())
            return cmd_local_search(ls_labeling, ls_subgraph, ls_rule, ls_json, out, err);
        if (oracle_cmd->parsed()) return cmd_oracle(or_labeling, or_forest, or_cap, or_json, out);
        if (verify->parsed())
            return cmd_verify(vf_labeling, vf_forest, vf_checks, vf_seed, vf_json, out);
        if (bench->parsed()) return cmd_bench(bn_config, bn_out, bn_threads, out, err);
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace lowsum
