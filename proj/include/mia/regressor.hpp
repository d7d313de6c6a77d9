#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

#include "mia/calibration.hpp"

namespace mia {

enum class QrObjective { gaussian_nll, dual_pinball };

std::string_view to_string(QrObjective o);
QrObjective parse_objective(std::string_view name);

/// sigma = softplus(r) + kSigmaOffset, in standardized score units.
inline constexpr double kSigmaOffset = 1e-6;
inline constexpr std::string_view kSigmaMapping = "softplus(r)+1e-6";

double softplus(double r);

struct QrConfig {
  int epochs = 200;
  double learning_rate = 1e-3;
  int batch_size = 128;
  int hidden = 64;
  double holdout_frac = 0.10;
  std::uint64_t seed = 0;
};

/// in -> hidden -> hidden -> 2 perceptron with tanh activations. Output row 0
/// is the raw mean, row 1 the raw scale.
class Mlp {
 public:
  Mlp() = default;
  Mlp(int inputs, int hidden, std::uint64_t seed);

  int inputs() const { return inputs_; }
  int hidden() const { return hidden_; }
  Eigen::VectorXd& params() { return theta_; }
  const Eigen::VectorXd& params() const { return theta_; }

  /// Columns of x are samples; returns a 2 x B matrix.
  Eigen::MatrixXd forward(const Eigen::MatrixXd& x) const;

  /// Mean objective over the batch (targets in the same units as the outputs).
  /// Writes the gradient w.r.t. params when grad is non-null.
  double objective(const Eigen::MatrixXd& x, std::span<const double> targets, QrObjective obj,
                   Eigen::VectorXd* grad = nullptr) const;

 private:
  int inputs_ = 0;
  int hidden_ = 0;
  Eigen::VectorXd theta_;
};

/// Per-sample objective on raw outputs (m, r) with sigma = softplus(r) + offset.
/// d_m and d_r receive the partial derivatives.
double sample_objective(double m, double r, double s, QrObjective obj, double* d_m, double* d_r);

/// Index of the first minimum.
std::size_t select_snapshot(std::span<const double> holdout_losses);

class QuantileRegressor {
 public:
  QuantileRegressor() = default;
  QuantileRegressor(Mlp net, QrObjective objective, std::uint64_t seed, double y_mean, double y_scale);

  QrObjective objective() const { return objective_; }
  std::uint64_t seed() const { return seed_; }
  const Mlp& net() const { return net_; }

  MeanSigma predict(const Eigen::VectorXd& x) const;
  std::vector<MeanSigma> predict(const Eigen::MatrixXd& xs) const;

  nlohmann::json to_json() const;
  static QuantileRegressor from_json(const nlohmann::json& j);

 private:
  Mlp net_;
  QrObjective objective_ = QrObjective::gaussian_nll;
  std::uint64_t seed_ = 0;
  double y_mean_ = 0.0;
  double y_scale_ = 1.0;
};

struct QrTrainReport {
  std::vector<double> holdout_losses;  // one per epoch
  std::size_t best_epoch = 0;          // 1-based
};

/// Fits one regressor on (features, score) pairs. Columns of x are samples.
/// A seeded holdout_frac of the pairs is held out; the per-epoch snapshot
/// with the lowest holdout objective is returned.
QuantileRegressor train_qr(const Eigen::MatrixXd& x, std::span<const double> scores, QrObjective objective,
                           const QrConfig& config, QrTrainReport* report = nullptr);

class Ensemble {
 public:
  Ensemble() = default;
  Ensemble(std::vector<QuantileRegressor> members);

  std::size_t size() const { return members_.size(); }
  QrObjective objective() const { return members_.front().objective(); }
  const std::vector<QuantileRegressor>& members() const { return members_; }

  GaussianCalibration calibrate(const Eigen::VectorXd& x, std::string doc_id = {}) const;
  std::vector<GaussianCalibration> calibrate(const Eigen::MatrixXd& xs) const;

  nlohmann::json to_json() const;
  static Ensemble from_json(const nlohmann::json& j);

 private:
  std::vector<QuantileRegressor> members_;
};

/// M independently seeded members, each trained on all the given pairs.
Ensemble train_ensemble(const Eigen::MatrixXd& x, std::span<const double> scores, QrObjective objective,
                        std::size_t members, const QrConfig& config,
                        std::vector<QrTrainReport>* reports = nullptr);

/// Mean pinball loss at level 1 - alpha of the alpha-thresholds.
double holdout_pinball(std::span<const GaussianCalibration> cals, std::span<const double> scores, double alpha);

/// Minimizer of losses; exact ties go to gaussian_nll, then to the lower index.
std::size_t argmin_objective(std::span<const QrObjective> objectives, std::span<const double> losses);

struct ObjectiveSelection {
  std::size_t index = 0;
  std::vector<double> losses;
};

ObjectiveSelection select_objective(std::span<const Ensemble> candidates, const Eigen::MatrixXd& x,
                                    std::span<const double> scores, double alpha);

}  // namespace mia
