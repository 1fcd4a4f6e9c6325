#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "setrank/token.hpp"
#include "setrank/type_hierarchy.hpp"

namespace setrank {

struct EntityRef {
  std::string id;
  std::string type_id;
};

struct QueryRecord {
  std::string query_id;
  std::string text;                 // free text, tokenized when words is empty
  std::vector<std::string> words;   // optional pre-tokenized words
  std::vector<EntityRef> entities;
};

/// JSON-lines query file, one object per line:
/// {"query_id":"q1","text":"...","words":[...],"entities":[{"id":"...","type":"..."}]}
std::vector<QueryRecord> load_queries(const std::string& path);

/// Normalized query-side view used by the bag-of-tokens baselines.
struct QueryTerms {
  std::vector<std::string> word_seq;                   // surviving words, original order
  std::vector<std::pair<Token, std::uint32_t>> terms;  // distinct tokens with query freq
  std::vector<Token> tokens() const;
  bool empty() const { return terms.empty(); }
};

QueryTerms analyze_query(const QueryRecord& record);

enum class EdgeKind : std::uint8_t { WW, EE };

struct QueryEdge {
  std::size_t a = 0;  // node indices, a < b
  std::size_t b = 0;
  EdgeKind kind = EdgeKind::WW;
  double weight = 1.0;  // 1 for W-W, relation strength for E-E
};

/// Heterogeneous query graph: distinct word/entity tokens as nodes, adjacent
/// word pairs and all entity pairs as edges.
struct QueryGraph {
  std::string query_id;
  std::vector<Token> nodes;  // word nodes first, then entity nodes
  std::vector<QueryEdge> edges;
  std::vector<std::vector<std::size_t>> incident;  // node -> edge indices
  std::size_t word_node_count = 0;
  std::size_t entity_node_count = 0;
};

QueryGraph build_query_graph(const QueryRecord& record, const TypeHierarchy& hierarchy);

}  // namespace setrank
