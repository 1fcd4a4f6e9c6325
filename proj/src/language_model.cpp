#include "setrank/language_model.hpp"

namespace setrank {

void SmoothingParams::validate() const {
  double delta_sum = 0.0;
  for (Field f : kFields) {
    if (!(mu[index_of(f)] > 0.0)) throw Error("mu must be positive");
    if (delta[index_of(f)] < 0.0) throw Error("delta must be non-negative");
    delta_sum += delta[index_of(f)];
  }
  if (!(delta_sum > 0.0)) throw Error("at least one field weight must be positive");
  if (jm_lambda && !(*jm_lambda > 0.0 && *jm_lambda < 1.0)) {
    throw Error("jm_lambda must lie in (0,1)");
  }
}

double field_token_prob(const CorpusIndex& index, const std::string& doc_id, Field field,
                        const Token& token, double mu) {
  if (!(mu > 0.0)) throw Error("mu must be positive");
  const CollectionStats& col = index.collection(field, token.kind);
  if (col.length == 0) {
    throw Error(std::string("no background model for (") + std::string(to_string(field)) +
                ", " + std::string(to_string(token.kind)) + ")");
  }
  const FieldBag& bag = index.document(doc_id).field(field);
  const double n_td = static_cast<double>(bag.count(token.kind, token.id));
  const double l_d = static_cast<double>(bag.length(token.kind));
  const double background =
      static_cast<double>(col.count(token.id)) / static_cast<double>(col.length);
  return (n_td + mu * background) / (l_d + mu);
}

double doc_token_prob(const CorpusIndex& index, const std::string& doc_id,
                      const Token& token, const SmoothingParams& params) {
  params.validate();
  double delta_sum = 0.0;
  for (Field f : kFields) delta_sum += params.delta[index_of(f)];
  double p = 0.0;
  for (Field f : kFields) {
    const double d = params.delta[index_of(f)];
    if (d == 0.0) continue;
    p += (d / delta_sum) *
         field_token_prob(index, doc_id, f, token, params.mu[index_of(f)]);
  }
  return p;
}

double field_token_prob_jm(const CorpusIndex& index, const std::string& doc_id,
                           Field field, const Token& token, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw Error("jm_lambda must lie in (0,1)");
  const CollectionStats& col = index.collection(field, token.kind);
  if (col.length == 0) {
    throw Error(std::string("no background model for (") + std::string(to_string(field)) +
                ", " + std::string(to_string(token.kind)) + ")");
  }
  const FieldBag& bag = index.document(doc_id).field(field);
  const double l_d = static_cast<double>(bag.length(token.kind));
  const double doc_ml =
      l_d > 0.0 ? static_cast<double>(bag.count(token.kind, token.id)) / l_d : 0.0;
  const double col_ml =
      static_cast<double>(col.count(token.id)) / static_cast<double>(col.length);
  return (1.0 - lambda) * doc_ml + lambda * col_ml;
}

double doc_token_prob_jm(const CorpusIndex& index, const std::string& doc_id,
                         const Token& token, const SmoothingParams& params) {
  params.validate();
  if (!params.jm_lambda) throw Error("jm_lambda is not set");
  double delta_sum = 0.0;
  for (Field f : kFields) delta_sum += params.delta[index_of(f)];
  double p = 0.0;
  for (Field f : kFields) {
    const double d = params.delta[index_of(f)];
    if (d == 0.0) continue;
    p += (d / delta_sum) *
         field_token_prob_jm(index, doc_id, f, token, *params.jm_lambda);
  }
  return p;
}

}  // namespace setrank
