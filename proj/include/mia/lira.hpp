#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mia/calibration.hpp"
#include "mia/corpus.hpp"
#include "mia/lm.hpp"

namespace mia {

enum class VarianceMode { per_example, fixed };

std::string_view to_string(VarianceMode m);
VarianceMode parse_variance_mode(std::string_view name);

inline constexpr double kLiraSigmaFloor = 1e-9;

/// Offline LiRA calibration of one document from its scores under the shadows
/// that did not train on it. per_example: mean and Bessel-corrected standard
/// deviation (needs >= 2 scores). fixed: mean and the supplied fixed_sigma.
/// Sigma is floored at kLiraSigmaFloor; the floor is flagged on the result.
GaussianCalibration lira_calibrate(std::span<const double> shadow_scores, VarianceMode mode,
                                   double fixed_sigma = 0.0);

/// Sample standard deviation (Bessel) of a pooled residual list.
double fixed_sigma_from_residuals(std::span<const double> residuals);

/// Leave-one-out residuals s(x; m) - mean_{k != m} s(x; k) for every shadow m
/// of one document. Each residual compares a shadow against the mean of the
/// others, the same way a target score is compared against the mean of all
/// shadows.
std::vector<double> leave_one_out_residuals(std::span<const double> shadow_scores);

using ScoreFn = std::function<double(const LanguageModel&, const Document&)>;

class LiraModel {
 public:
  LiraModel() = default;

  std::size_t size() const { return shadows_.size(); }
  const LanguageModel& shadow(std::size_t m) const { return *shadows_.at(m); }
  const std::set<std::string, std::less<>>& subset(std::size_t m) const { return subsets_.at(m); }
  /// public_train documents that no shadow trained on.
  const std::vector<std::string>& holdout_ids() const { return holdout_; }

  bool trained_on(std::size_t m, std::string_view doc_id) const { return subsets_.at(m).contains(doc_id); }

  /// Scores of doc under every shadow that excluded it.
  std::vector<double> out_scores(const Document& doc, const ScoreFn& score) const;

  /// Throws DataError if doc is in any shadow's subset.
  GaussianCalibration calibrate(const Document& doc, const ScoreFn& score, VarianceMode mode,
                                double fixed_sigma = 0.0) const;

  /// Pooled leave-one-out residual standard deviation over the holdout docs.
  double estimate_fixed_sigma(std::span<const Document* const> holdout_docs, const ScoreFn& score) const;

  nlohmann::json to_json() const;
  static LiraModel from_json(const nlohmann::json& j);

  friend LiraModel train_shadows(std::span<const Document* const>, std::shared_ptr<const Vocabulary>,
                                 std::size_t, const LmSpec&, double, double, std::uint64_t);

 private:
  std::vector<std::unique_ptr<LanguageModel>> shadows_;
  std::vector<std::set<std::string, std::less<>>> subsets_;
  std::vector<std::string> holdout_;
};

/// Carves a seeded holdout_frac of public_train that no shadow sees, then
/// trains M shadows, each on an independent seeded subset_frac subsample of
/// the remaining documents.
LiraModel train_shadows(std::span<const Document* const> public_train, std::shared_ptr<const Vocabulary> vocab,
                        std::size_t shadows, const LmSpec& spec, double subset_frac, double holdout_frac,
                        std::uint64_t seed);

}  // namespace mia
