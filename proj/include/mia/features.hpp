#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

#include "mia/corpus.hpp"

namespace mia {

inline constexpr std::size_t kFeatureDim = 12;

/// Feature names, in vector order.
const std::array<std::string_view, kFeatureDim>& feature_names();

/// Hash of the feature schema (names and order), stored in model headers.
std::uint64_t feature_schema_hash();

/// Add-one smoothed unigram log-frequencies from a reference document set.
class ReferenceUnigram {
 public:
  ReferenceUnigram() = default;
  explicit ReferenceUnigram(std::span<const Document* const> docs);

  double log_freq(const std::string& token) const;
  double unk_log_freq() const { return unk_log_freq_; }

  nlohmann::json to_json() const;
  static ReferenceUnigram from_json(const nlohmann::json& j);

 private:
  std::map<std::string, std::uint64_t, std::less<>> counts_;
  std::uint64_t total_ = 0;
  double unk_log_freq_ = 0.0;
  void finalize();
};

/// Raw (unstandardized) features of one document. Throws on empty text.
Eigen::VectorXd raw_features(const Document& doc, const ReferenceUnigram& ref);

/// Per-column affine standardization (population variance). Columns with
/// zero variance keep unit scale.
class Standardizer {
 public:
  Standardizer() = default;
  /// Each column of `samples` is one observation.
  explicit Standardizer(const Eigen::MatrixXd& samples);

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd apply(const Eigen::MatrixXd& xs) const;

  nlohmann::json to_json() const;
  static Standardizer from_json(const nlohmann::json& j);

 private:
  Eigen::VectorXd mean_;
  Eigen::VectorXd scale_;
};

/// Reference unigram plus standardizer, both fitted on public_train.
class Featurizer {
 public:
  Featurizer() = default;
  explicit Featurizer(std::span<const Document* const> public_train);

  Eigen::VectorXd featurize(const Document& doc) const;
  /// One column per document.
  Eigen::MatrixXd featurize(std::span<const Document* const> docs) const;

  nlohmann::json to_json() const;
  static Featurizer from_json(const nlohmann::json& j);

 private:
  ReferenceUnigram ref_;
  Standardizer standardizer_;
};

}  // namespace mia
