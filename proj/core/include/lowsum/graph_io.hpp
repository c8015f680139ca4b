#ifndef LOWSUM_GRAPH_IO_HPP
#define LOWSUM_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "lowsum/graph_core.hpp"
#include "lowsum/local_search.hpp"

namespace lowsum {

// Text formats (UTF-8, lines starting with '#' ignored on input):
//   labeling:  "n" then n(n-1)/2 lines "u v s", u < v, lexicographic, s in {+1,-1}
//   forest:    "n m" then m lines "u v", u < v
//   subgraph:  forest format without the acyclicity requirement
//   embedding: "n" then one line of n integers, position u holds pi(u)

EdgeLabeling parse_labeling(std::istream& in);
SpanningForest parse_forest(std::istream& in);
SpanningSubgraph parse_subgraph(std::istream& in);
Embedding parse_embedding(std::istream& in);

// metadata, when nonempty, is emitted as leading '#' comment lines.
std::string serialize_labeling(const EdgeLabeling& labeling, const std::string& metadata = "");
std::string serialize_forest(const SpanningForest& forest);
std::string serialize_subgraph(const SpanningSubgraph& subgraph);
std::string serialize_embedding(const Embedding& emb);

EdgeLabeling read_labeling_file(const std::string& path);
SpanningForest read_forest_file(const std::string& path);
SpanningSubgraph read_subgraph_file(const std::string& path);
Embedding read_embedding_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

} // namespace lowsum

#endif
