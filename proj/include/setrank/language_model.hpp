#pragma once

#include <array>
#include <optional>

#include "setrank/corpus.hpp"

namespace setrank {

/// Field-mixture smoothing setup. mu and delta are indexed by Field; the same
/// mu_j applies to both token kinds of a field, delta is shared across kinds.
struct SmoothingParams {
  std::array<double, kFieldCount> mu{1000.0, 1000.0};
  std::array<double, kFieldCount> delta{1.0, 1.0};
  std::optional<double> jm_lambda;  // Jelinek-Mercer coefficient, baselines only

  void validate() const;
};

/// Dirichlet-smoothed per-field token probability:
///   (n_{t,d_ij} + mu_j * n_{t,D_j} / L_{D_j}) / (L_{d_ij} + mu_j)
double field_token_prob(const CorpusIndex& index, const std::string& doc_id, Field field,
                        const Token& token, double mu);

/// Field-weighted mixture of field_token_prob; fields with delta 0 are skipped.
double doc_token_prob(const CorpusIndex& index, const std::string& doc_id,
                      const Token& token, const SmoothingParams& params);

/// Jelinek-Mercer per-field estimate: (1-lambda)*ML(t|d_j) + lambda*ML(t|D_j).
double field_token_prob_jm(const CorpusIndex& index, const std::string& doc_id,
                           Field field, const Token& token, double lambda);

double doc_token_prob_jm(const CorpusIndex& index, const std::string& doc_id,
                         const Token& token, const SmoothingParams& params);

}  // namespace setrank
