#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "setrank/corpus.hpp"
#include "setrank/language_model.hpp"
#include "setrank/query_graph.hpp"

namespace setrank {

/// One candidate ranking model: field weights, Dirichlet scales, and the
/// word/entity balance.
struct ParameterSetting {
  double delta_title = 20.0;
  double delta_abs = 5.0;
  double mu_title = 1000.0;
  double mu_abs = 1000.0;
  double lambda_e = 0.7;

  void validate() const;
  SmoothingParams smoothing() const;
  /// Canonical "k=v" rendering used for tags and report keys.
  std::string canonical() const;
};

enum class SetRankVariant { Full, NoType, NoSet };

std::string_view to_string(SetRankVariant v);
std::optional<SetRankVariant> parse_variant(std::string_view name);

/// Query-graph nodes and edges matched by one document. A node is covered iff
/// its token occurs in any field; an edge is covered iff both endpoints are.
struct CoveredSubgraph {
  std::vector<char> node_covered;
  std::vector<char> edge_covered;
  std::vector<std::size_t> nodes;  // covered node indices, ascending
  std::vector<std::size_t> edges;  // covered edge indices, ascending

  bool empty() const { return nodes.empty(); }
};

CoveredSubgraph covered_subgraph(const QueryGraph& graph, const CorpusIndex& index,
                                 const std::string& doc_id);

/// Graph-covering score evaluated against an explicit probability table
/// (probs[i] = P(node i | d)). Exposed separately so scores can be checked
/// over synthetic tables.
double setrank_score_from_probs(const QueryGraph& graph, const CoveredSubgraph& covered,
                                std::span<const double> probs, double lambda_e,
                                SetRankVariant variant);

double setrank_score(const QueryGraph& graph, const CorpusIndex& index,
                     const std::string& doc_id, const ParameterSetting& params,
                     SetRankVariant variant = SetRankVariant::Full);

struct Bm25Params {
  double k1 = 1.2;
  double b = 0.75;
  void validate() const;
};

enum class BaselineModel { Bm25, LmDir, LmJm };

/// Bag-of-tokens baselines over the same field mixture. Word and entity sides
/// are combined as (1-lambda_e)*word + lambda_e*entity.
double baseline_score(BaselineModel model, const CorpusIndex& index,
                      const std::string& doc_id, const QueryTerms& query,
                      const ParameterSetting& params, const Bm25Params& bm25 = {},
                      double jm_lambda = 0.5);

struct RankedEntry {
  std::string doc_id;
  double score = 0.0;
};

struct RankedList {
  std::string query_id;
  std::vector<RankedEntry> entries;  // scores non-increasing, ties by doc id
};

struct RankerConfig {
  enum class Model { SetRank, Bm25, LmDir, LmJm };

  Model model = Model::SetRank;
  SetRankVariant variant = SetRankVariant::Full;
  ParameterSetting params;
  Bm25Params bm25;
  double jm_lambda = 0.5;

  static std::optional<Model> parse_model(std::string_view name);
  static std::string_view model_name(Model m);
  /// Run tag: model name plus a hash of the parameter values.
  std::string tag() const;
};

/// Scores candidate documents (those covering at least one query token) and
/// returns the top k; zero-score documents are dropped.
RankedList rank(const RankerConfig& config, const QueryRecord& query,
                const TypeHierarchy& hierarchy, const CorpusIndex& index, std::size_t k);

/// TREC run format: "query_id Q0 doc_id rank score tag".
void write_run(std::ostream& os, const std::vector<RankedList>& lists,
               const std::string& tag);

std::string format_score(double value);

}  // namespace setrank
