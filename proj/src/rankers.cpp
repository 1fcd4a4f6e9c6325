#include "setrank/rankers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace setrank {

void ParameterSetting::validate() const {
  if (delta_title < 0.0 || delta_abs < 0.0) throw Error("field weights must be >= 0");
  if (!(delta_title + delta_abs > 0.0)) {
    throw Error("at least one field weight must be positive");
  }
  if (!(mu_title > 0.0) || !(mu_abs > 0.0)) throw Error("mu must be positive");
  if (!(lambda_e >= 0.0 && lambda_e <= 1.0)) throw Error("lambda_e must lie in [0,1]");
}

SmoothingParams ParameterSetting::smoothing() const {
  SmoothingParams s;
  s.mu[index_of(Field::Title)] = mu_title;
  s.mu[index_of(Field::Abstract)] = mu_abs;
  s.delta[index_of(Field::Title)] = delta_title;
  s.delta[index_of(Field::Abstract)] = delta_abs;
  return s;
}

std::string ParameterSetting::canonical() const {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "delta_title=%g,delta_abs=%g,mu_title=%g,mu_abs=%g,lambda_e=%g",
                delta_title, delta_abs, mu_title, mu_abs, lambda_e);
  return buf;
}

std::string_view to_string(SetRankVariant v) {
  switch (v) {
    case SetRankVariant::Full: return "full";
    case SetRankVariant::NoType: return "no-type";
    case SetRankVariant::NoSet: return "no-set";
  }
  return "full";
}

std::optional<SetRankVariant> parse_variant(std::string_view name) {
  if (name == "full") return SetRankVariant::Full;
  if (name == "no-type") return SetRankVariant::NoType;
  if (name == "no-set") return SetRankVariant::NoSet;
  return std::nullopt;
}

CoveredSubgraph covered_subgraph(const QueryGraph& graph, const CorpusIndex& index,
                                 const std::string& doc_id) {
  const Document& doc = index.document(doc_id);
  CoveredSubgraph out;
  out.node_covered.assign(graph.nodes.size(), 0);
  out.edge_covered.assign(graph.edges.size(), 0);
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const Token& t = graph.nodes[i];
    for (Field f : kFields) {
      if (doc.field(f).count(t.kind, t.id) > 0) {
        out.node_covered[i] = 1;
        out.nodes.push_back(i);
        break;
      }
    }
  }
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    if (out.node_covered[graph.edges[e].a] && out.node_covered[graph.edges[e].b]) {
      out.edge_covered[e] = 1;
      out.edges.push_back(e);
    }
  }
  return out;
}

double setrank_score_from_probs(const QueryGraph& graph, const CoveredSubgraph& covered,
                                std::span<const double> probs, double lambda_e,
                                SetRankVariant variant) {
  double total = 0.0;
  for (std::size_t i : covered.nodes) {
    const Token& t = graph.nodes[i];
    const double outer = t.kind == TokenKind::Entity ? lambda_e : 1.0 - lambda_e;
    double bracket = 1.0;
    if (variant != SetRankVariant::NoSet) {
      for (std::size_t e : graph.incident[i]) {
        if (!covered.edge_covered[e]) continue;
        const QueryEdge& edge = graph.edges[e];
        const std::size_t other = edge.a == i ? edge.b : edge.a;
        double w = 1.0;
        if (edge.kind == EdgeKind::EE && variant == SetRankVariant::Full) {
          w = edge.weight;
        }
        bracket += w * std::sqrt(probs[other]);
      }
    }
    total += outer * bracket * std::sqrt(probs[i]);
  }
  return total;
}

double setrank_score(const QueryGraph& graph, const CorpusIndex& index,
                     const std::string& doc_id, const ParameterSetting& params,
                     SetRankVariant variant) {
  params.validate();
  const CoveredSubgraph covered = covered_subgraph(graph, index, doc_id);
  if (covered.empty()) return 0.0;
  const SmoothingParams smoothing = params.smoothing();
  std::vector<double> probs(graph.nodes.size(), 0.0);
  for (std::size_t i : covered.nodes) {
    probs[i] = doc_token_prob(index, doc_id, graph.nodes[i], smoothing);
  }
  return setrank_score_from_probs(graph, covered, probs, params.lambda_e, variant);
}

void Bm25Params::validate() const {
  if (!(k1 > 0.0)) throw Error("k1 must be positive");
  if (!(b >= 0.0 && b <= 1.0)) throw Error("b must lie in [0,1]");
}

namespace {

// Okapi BM25 with the non-negative ln(1 + .) idf form, per (field, kind).
double bm25_field_term(const CorpusIndex& index, const FieldBag& bag, Field field,
                       const Token& token, const Bm25Params& p) {
  const double tf = static_cast<double>(bag.count(token.kind, token.id));
  if (tf == 0.0) return 0.0;
  const CollectionStats& col = index.collection(field, token.kind);
  const double n_docs = static_cast<double>(index.doc_count());
  const double df = static_cast<double>(col.df(token.id));
  const double avgdl = static_cast<double>(col.length) / n_docs;
  const double dl = static_cast<double>(bag.length(token.kind));
  const double idf = std::log(1.0 + (n_docs - df + 0.5) / (df + 0.5));
  const double tf_part = (p.k1 + 1.0) * tf / (tf + p.k1 * (1.0 - p.b + p.b * dl / avgdl));
  return idf * tf_part;
}

// Sum over query terms of one kind; mixture weights over delta>0 fields.
double baseline_kind_score(BaselineModel model, const CorpusIndex& index,
                           const std::string& doc_id, const QueryTerms& query,
                           TokenKind kind, const SmoothingParams& smoothing,
                           const Bm25Params& bm25) {
  double score = 0.0;
  if (model == BaselineModel::Bm25) {
    double delta_sum = 0.0;
    for (Field f : kFields) delta_sum += smoothing.delta[index_of(f)];
    const Document& doc = index.document(doc_id);
    for (const auto& [token, qtf] : query.terms) {
      if (token.kind != kind) continue;
      for (Field f : kFields) {
        const double d = smoothing.delta[index_of(f)];
        if (d == 0.0) continue;
        score += (d / delta_sum) * static_cast<double>(qtf) *
                 bm25_field_term(index, doc.field(f), f, token, bm25);
      }
    }
    return score;
  }
  for (const auto& [token, qtf] : query.terms) {
    if (token.kind != kind) continue;
    const double p = model == BaselineModel::LmDir
                         ? doc_token_prob(index, doc_id, token, smoothing)
                         : doc_token_prob_jm(index, doc_id, token, smoothing);
    if (p == 0.0) continue;  // token absent from the whole collection
    score += static_cast<double>(qtf) * std::log(p);
  }
  return score;
}

}  // namespace

double baseline_score(BaselineModel model, const CorpusIndex& index,
                      const std::string& doc_id, const QueryTerms& query,
                      const ParameterSetting& params, const Bm25Params& bm25,
                      double jm_lambda) {
  params.validate();
  bm25.validate();
  SmoothingParams smoothing = params.smoothing();
  if (model == BaselineModel::LmJm) smoothing.jm_lambda = jm_lambda;
  double score = 0.0;
  // a kind whose balance weight is zero is skipped entirely
  if (params.lambda_e < 1.0) {
    score += (1.0 - params.lambda_e) * baseline_kind_score(model, index, doc_id, query,
                                                           TokenKind::Word, smoothing,
                                                           bm25);
  }
  if (params.lambda_e > 0.0) {
    score += params.lambda_e * baseline_kind_score(model, index, doc_id, query,
                                                   TokenKind::Entity, smoothing, bm25);
  }
  return score;
}

std::optional<RankerConfig::Model> RankerConfig::parse_model(std::string_view name) {
  if (name == "setrank") return Model::SetRank;
  if (name == "bm25") return Model::Bm25;
  if (name == "lm-dir") return Model::LmDir;
  if (name == "lm-jm") return Model::LmJm;
  return std::nullopt;
}

std::string_view RankerConfig::model_name(Model m) {
  switch (m) {
    case Model::SetRank: return "setrank";
    case Model::Bm25: return "bm25";
    case Model::LmDir: return "lm-dir";
    case Model::LmJm: return "lm-jm";
  }
  return "setrank";
}

std::string RankerConfig::tag() const {
  std::string canon = std::string(model_name(model));
  canon += ';';
  canon += params.canonical();
  char extra[96];
  std::snprintf(extra, sizeof extra, ";variant=%s;k1=%g;b=%g;jm=%g",
                std::string(to_string(variant)).c_str(), bm25.k1, bm25.b, jm_lambda);
  canon += extra;
  // FNV-1a over the canonical parameter string
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "-%08x", static_cast<std::uint32_t>(h ^ (h >> 32)));
  return std::string(model_name(model)) + buf;
}

RankedList rank(const RankerConfig& config, const QueryRecord& query,
                const TypeHierarchy& hierarchy, const CorpusIndex& index,
                std::size_t k) {
  if (k < 1) throw Error("k must be >= 1");
  const QueryTerms terms = analyze_query(query);
  if (terms.empty()) throw Error("empty query");

  RankedList list;
  list.query_id = query.query_id;
  const std::vector<std::string> candidates = index.candidates(terms.tokens());

  if (config.model == RankerConfig::Model::SetRank) {
    const QueryGraph graph = build_query_graph(query, hierarchy);
    for (const auto& doc_id : candidates) {
      const double s = setrank_score(graph, index, doc_id, config.params, config.variant);
      if (s != 0.0) list.entries.push_back({doc_id, s});
    }
  } else {
    const BaselineModel model = config.model == RankerConfig::Model::Bm25
                                    ? BaselineModel::Bm25
                                    : (config.model == RankerConfig::Model::LmDir
                                           ? BaselineModel::LmDir
                                           : BaselineModel::LmJm);
    for (const auto& doc_id : candidates) {
      const double s = baseline_score(model, index, doc_id, terms, config.params,
                                      config.bm25, config.jm_lambda);
      if (s != 0.0) list.entries.push_back({doc_id, s});
    }
  }

  std::stable_sort(list.entries.begin(), list.entries.end(),
                   [](const RankedEntry& a, const RankedEntry& b) {
                     if (a.score != b.score) return a.score > b.score;
                     return a.doc_id < b.doc_id;
                   });
  if (list.entries.size() > k) list.entries.resize(k);
  return list;
}

std::string format_score(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

void write_run(std::ostream& os, const std::vector<RankedList>& lists,
               const std::string& tag) {
  for (const auto& list : lists) {
    std::size_t r = 1;
    for (const auto& entry : list.entries) {
      os << list.query_id << " Q0 " << entry.doc_id << ' ' << r << ' '
         << format_score(entry.score) << ' ' << tag << '\n';
      ++r;
    }
  }
}

}  // namespace setrank
