#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mia/corpus.hpp"
#include "mia/lm.hpp"
#include "mia/vocab.hpp"

namespace mia {

// Every score is oriented so that larger values look more like a member.

enum class ScoreName { loss, mink, zlib, neighborhood };

std::string_view to_string(ScoreName s);
ScoreName parse_score_name(std::string_view name);

struct ScoreRecord {
  std::string doc_id;
  ScoreName score_name = ScoreName::loss;
  std::string model_id;
  double value = 0.0;
};

/// Mean token log-likelihood (negated average NLL).
double score_loss(std::span<const double> logls);
inline double score_loss(const TokenLogLikelihoods& t) { return score_loss(t.values); }

/// Mean of the m = max(1, floor(k_frac * n)) lowest token log-likelihoods.
double score_mink(std::span<const double> logls, double k_frac = 0.20);
inline double score_mink(const TokenLogLikelihoods& t, double k_frac = 0.20) {
  return score_mink(t.values, k_frac);
}

/// Byte length of the zlib stream (header and checksum included) produced at
/// the default compression level.
std::size_t zlib_compressed_size(std::string_view text);

/// Summed log-likelihood divided by zlib_compressed_size(text).
double score_zlib(std::span<const double> logls, std::string_view text);
inline double score_zlib(const TokenLogLikelihoods& t, std::string_view text) {
  return score_zlib(t.values, text);
}

struct NeighborSet {
  std::string source_id;
  std::vector<Document> neighbors;
  double perturb_rate = 0.0;
  std::uint64_t seed = 0;
};

/// Each neighbor replaces every token independently with probability
/// perturb_rate by a uniform draw from the vocabulary's 1000 most frequent
/// regular tokens. Neighbors are re-joined with single spaces, so a neighbor
/// tokenizes to exactly as many tokens as the source.
NeighborSet generate_neighbors(const Document& doc, const Vocabulary& vocab, std::size_t count,
                               double perturb_rate, std::uint64_t seed);

/// score_loss(source) minus the mean score_loss over neighbors.
double score_neighborhood(const TokenLogLikelihoods& source,
                          std::span<const TokenLogLikelihoods> neighbors);

void write_scores_jsonl(std::span<const ScoreRecord> records, const std::filesystem::path& path);
std::vector<ScoreRecord> read_scores_jsonl(const std::filesystem::path& path);

}  // namespace mia
