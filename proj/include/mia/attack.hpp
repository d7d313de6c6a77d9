#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "mia/calibration.hpp"

namespace mia {

struct AttackOutcome {
  std::string doc_id;
  double score = 0.0;
  double mu = 0.0;
  double sigma = 1.0;
  double z = 0.0;
  double threshold = 0.0;
  bool accused = false;
  bool is_member = false;
};

/// Accuses iff score >= threshold(cal, alpha); the boundary accuses.
AttackOutcome accuse(double score, const GaussianCalibration& cal, double alpha);

struct LabeledScore {
  double z = 0.0;
  bool member = false;
};

struct RocPoint {
  double threshold = 0.0;
  std::uint64_t fp = 0;  // nonmembers with z >= threshold
  std::uint64_t tp = 0;  // members with z >= threshold
  double fpr = 0.0;
  double tpr = 0.0;
};

struct RocSummary {
  std::vector<RocPoint> points;  // one per distinct z, descending threshold
  double auc = 0.0;
  std::map<double, double> tpr_at;               // highest TPR with FPR <= alpha
  std::map<double, double> tpr_at_interpolated;  // linear along the ROC polyline
  std::uint64_t n_members = 0;
  std::uint64_t n_nonmembers = 0;
};

inline constexpr double kDefaultAlphaValues[] = {0.001, 0.01};
inline constexpr std::span<const double> kDefaultAlphas{kDefaultAlphaValues};

/// Sweeps every distinct z as a threshold (z >= t accuses). AUC is the
/// trapezoid area from the origin, computed from integer counts. Throws
/// DataError if either class is missing.
RocSummary roc(std::span<const LabeledScore> scores, std::span<const double> alphas = kDefaultAlphas);

/// Highest TPR among points with FPR <= alpha (0 when none qualifies).
double tpr_at_fpr(const RocSummary& summary, double alpha);
double tpr_at_fpr_interpolated(const RocSummary& summary, double alpha);

struct MethodResult {
  std::string method;
  RocSummary roc;
};

/// Header row followed by one row per method, alphas in the given order.
std::string results_csv(std::span<const MethodResult> results, std::span<const double> alphas);
std::string results_table(std::span<const MethodResult> results, std::span<const double> alphas);
/// threshold, fpr, tpr per line with fpr nondecreasing.
std::string roc_tsv(const RocSummary& summary);

/// Writes results.csv, results.txt, roc_<method>.tsv and metadata.json.
void write_report(const std::filesystem::path& dir, std::span<const MethodResult> results,
                  std::span<const double> alphas, const nlohmann::json& metadata);

/// Formats alpha the way it appears in CSV headers (e.g. 0.001).
std::string format_alpha(double alpha);

}  // namespace mia
