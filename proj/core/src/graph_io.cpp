#include "lowsum/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "lowsum/errors.hpp"

namespace lowsum {

namespace {

// Pulls the next line that is neither blank nor a '#' comment.
bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        if (line.back() == '\r') line.pop_back();
        return true;
    }
    return false;
}

std::vector<std::int64_t> split_ints(const std::string& line, const char* context) {
    std::istringstream iss(line);
    std::vector<std::int64_t> out;
    std::int64_t value;
    while (iss >> value) out.push_back(value);
    std::string rest;
    if (iss.clear(), iss >> rest) {
        throw Error(Errc::malformed_input,
                    std::string(context) + ": unexpected token '" + rest + "'");
    }
    return out;
}

std::vector<std::int64_t> expect_ints(std::istream& in, std::size_t count, const char* context) {
    std::string line;
    if (!next_content_line(in, line)) {
        throw Error(Errc::malformed_input, std::string(context) + ": unexpected end of file");
    }
    auto values = split_ints(line, context);
    if (values.size() != count) {
        throw Error(Errc::malformed_input,
                    std::string(context) + ": expected " + std::to_string(count) +
                        " integers, got " + std::to_string(values.size()));
    }
    return values;
}

// Header sanity caps: a malformed or hostile header must fail as
// MalformedInput before any size-proportional allocation happens. Labelings
// store all n(n-1)/2 labels, so their cap is much lower.
constexpr std::int64_t kMaxLabelingVertices = 32768;
constexpr std::int64_t kMaxGraphVertices = 1000000;

int checked_vertex_count(std::int64_t n, std::int64_t cap, const char* context) {
    if (n < 1 || n > cap) {
        throw Error(Errc::malformed_input, std::string(context) + ": vertex count " +
                                               std::to_string(n) + " outside [1," +
                                               std::to_string(cap) + "]");
    }
    return static_cast<int>(n);
}

std::vector<Edge> parse_edge_lines(std::istream& in, int n, std::int64_t m,
                                   const char* context) {
    std::int64_t pairs = std::int64_t(n) * (n - 1) / 2;
    if (m < 0 || m > pairs) {
        throw Error(Errc::malformed_input, std::string(context) + ": edge count " +
                                               std::to_string(m) + " outside [0," +
                                               std::to_string(pairs) + "]");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) {
        auto uv = expect_ints(in, 2, context);
        edges.emplace_back(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
    }
    return edges;
}

} // namespace

EdgeLabeling parse_labeling(std::istream& in) {
    auto header = expect_ints(in, 1, "labeling header");
    int n = checked_vertex_count(header[0], kMaxLabelingVertices, "labeling header");
    std::int64_t m = std::int64_t(n) * (n - 1) / 2;
    std::vector<std::tuple<int, int, int>> raw;
    raw.reserve(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) {
        auto uvs = expect_ints(in, 3, "labeling edge");
        raw.emplace_back(static_cast<int>(uvs[0]), static_cast<int>(uvs[1]),
                         static_cast<int>(uvs[2]));
    }
    return validate_labeling(n, raw);
}

SpanningForest parse_forest(std::istream& in) {
    auto header = expect_ints(in, 2, "forest header");
    int n = checked_vertex_count(header[0], kMaxGraphVertices, "forest header");
    return SpanningForest(n, parse_edge_lines(in, n, header[1], "forest edge"));
}

SpanningSubgraph parse_subgraph(std::istream& in) {
    auto header = expect_ints(in, 2, "subgraph header");
    int n = checked_vertex_count(header[0], kMaxGraphVertices, "subgraph header");
    return SpanningSubgraph(n, parse_edge_lines(in, n, header[1], "subgraph edge"));
}

Embedding parse_embedding(std::istream& in) {
    auto header = expect_ints(in, 1, "embedding header");
    int n = checked_vertex_count(header[0], kMaxGraphVertices, "embedding header");
    auto values = expect_ints(in, static_cast<std::size_t>(n), "embedding row");
    std::vector<int> pi(n + 1, 0);
    for (int u = 1; u <= n; ++u) pi[u] = static_cast<int>(values[u - 1]);
    return Embedding(std::move(pi));
}

std::string serialize_labeling(const EdgeLabeling& labeling, const std::string& metadata) {
    std::ostringstream out;
    if (!metadata.empty()) {
        std::istringstream lines(metadata);
        std::string line;
        while (std::getline(lines, line)) out << "# " << line << "\n";
    }
    out << labeling.n() << "\n";
    for (int u = 1; u <= labeling.n(); ++u) {
        for (int v = u + 1; v <= labeling.n(); ++v) {
            out << u << " " << v << " " << (labeling.label(u, v) > 0 ? "+1" : "-1") << "\n";
        }
    }
    return out.str();
}

namespace {

std::string serialize_edge_list(int n, const std::vector<Edge>& edges) {
    std::ostringstream out;
    out << n << " " << edges.size() << "\n";
    for (const Edge& e : edges) out << e.u << " " << e.v << "\n";
    return out.str();
}

} // namespace

std::string serialize_forest(const SpanningForest& forest) {
    return serialize_edge_list(forest.n(), forest.edges());
}

std::string serialize_subgraph(const SpanningSubgraph& subgraph) {
    return serialize_edge_list(subgraph.n(), subgraph.edges());
}

std::string serialize_embedding(const Embedding& emb) {
    std::ostringstream out;
    out << emb.n() << "\n";
    for (int u = 1; u <= emb.n(); ++u) {
        out << emb.of(u) << (u == emb.n() ? "\n" : " ");
    }
    return out.str();
}

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(Errc::io_error, "cannot open '" + path + "' for reading");
    }
    return in;
}

} // namespace

EdgeLabeling read_labeling_file(const std::string& path) {
    auto in = open_input(path);
    return parse_labeling(in);
}

SpanningForest read_forest_file(const std::string& path) {
    auto in = open_input(path);
    return parse_forest(in);
}

SpanningSubgraph read_subgraph_file(const std::string& path) {
    auto in = open_input(path);
    return parse_subgraph(in);
}

Embedding read_embedding_file(const std::string& path) {
    auto in = open_input(path);
    return parse_embedding(in);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(Errc::io_error, "cannot open '" + path + "' for writing");
    }
    out << content;
    if (!out) {
        throw Error(Errc::io_error, "write to '" + path + "' failed");
    }
}

} // namespace lowsum
