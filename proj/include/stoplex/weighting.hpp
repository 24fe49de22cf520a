#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stoplex/corpus.hpp"
#include "stoplex/error.hpp"
#include "stoplex/summation.hpp"

namespace stoplex {

/// Denominator used when averaging TF-IDF over documents.
enum class Averaging {
  AllDocuments,         // mean over all n documents, zero counts included
  ContainingDocuments,  // mean over the m documents that contain the word
};

/// ln(n/m). Exactly zero when the word occurs in every document.
[[nodiscard]] inline double inverse_document_frequency(std::size_t n, std::size_t m) {
  if (m == 0 || m > n) {
    throw DomainError("document frequency m=" + std::to_string(m) + " outside [1, n=" +
                      std::to_string(n) + "]");
  }
  if (m == n) return 0.0;
  return std::log(static_cast<double>(n) / static_cast<double>(m));
}

/// Average TF-IDF of one word. TF is the raw count; the per-document terms
/// TF*idf share the factor idf, so the sum is taken over exact integer
/// counts and scaled once.
[[nodiscard]] inline double word_weight(const WordEntry& entry, std::size_t n,
                                        Averaging averaging = Averaging::AllDocuments) {
  if (entry.per_doc_counts.size() != n) {
    throw DomainError("word '" + entry.surface + "' has " +
                      std::to_string(entry.per_doc_counts.size()) + " counts, expected " +
                      std::to_string(n));
  }
  std::uint64_t total = 0;
  std::size_t containing = 0;
  for (const auto c : entry.per_doc_counts) {
    total += c;
    if (c > 0) ++containing;
  }
  if (total == 0) throw DomainError("word '" + entry.surface + "' never occurs");

  const double idf = inverse_document_frequency(n, containing);
  const double denominator =
      static_cast<double>(averaging == Averaging::AllDocuments ? n : containing);
  return static_cast<double>(total) * idf / denominator;
}

/// Fills idf and weight for every entry of the lexicon.
inline void assign_weights(Lexicon& lexicon, Averaging averaging = Averaging::AllDocuments) {
  const std::size_t n = lexicon.doc_count;
  for (auto& entry : lexicon.entries) {
    entry.idf = inverse_document_frequency(n, entry.doc_frequency);
    entry.weight = word_weight(entry, n, averaging);
  }
}

/// p_i = w_i / sum(w). The sum is compensated and reduced in the given order.
[[nodiscard]] inline std::vector<double> normalize_weights(std::span<const double> weights) {
  CompensatedSum total;
  for (const double w : weights) {
    if (!std::isfinite(w) || w < 0.0) throw DomainError("weights must be finite and non-negative");
    total.add(w);
  }
  const double sum = total.value();
  if (!(sum > 0.0)) throw AllZeroWeights();

  std::vector<double> probabilities;
  probabilities.reserve(weights.size());
  for (const double w : weights) probabilities.push_back(w / sum);
  return probabilities;
}

/// Fills the probability of every entry from its weight.
inline void assign_probabilities(Lexicon& lexicon) {
  std::vector<double> weights;
  weights.reserve(lexicon.size());
  for (const auto& entry : lexicon.entries) weights.push_back(entry.weight);
  const auto probabilities = normalize_weights(weights);
  for (std::size_t k = 0; k < lexicon.size(); ++k) {
    lexicon.entries[k].probability = probabilities[k];
  }
}

}  // namespace stoplex
