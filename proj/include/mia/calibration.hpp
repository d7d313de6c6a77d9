#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mia {

enum class CalibrationSource { qr, ensemble, lira, lira_fixed, marginal };

std::string_view to_string(CalibrationSource s);
CalibrationSource parse_calibration_source(std::string_view name);

/// Gaussian model N(mu, sigma^2) of a document's score under the null.
struct GaussianCalibration {
  std::string doc_id;
  double mu = 0.0;
  double sigma = 1.0;
  CalibrationSource source = CalibrationSource::qr;
  bool sigma_floored = false;
};

/// Pinball loss at quantile `level`: max{(1-level)(y_hat-y), level(y-y_hat)}.
double pinball_loss(double y_hat, double y, double level);

/// d pinball / d y_hat. At the kink (y_hat == y) the (1 - level) branch is used.
double pinball_grad(double y_hat, double y, double level);

/// Negative log density of N(mu, sigma^2) at s. Throws DataError if sigma <= 0.
double gaussian_nll(double s, double mu, double sigma);

/// q = phi^{-1}(1 - alpha) * sigma + mu.
double threshold(double mu, double sigma, double alpha);
inline double threshold(const GaussianCalibration& cal, double alpha) {
  return threshold(cal.mu, cal.sigma, alpha);
}

struct MeanSigma {
  double mu;
  double sigma;
};

inline constexpr double kMixtureVarianceFloor = 1e-12;

/// Moments of the uniformly weighted mixture of member Gaussians:
/// mu* = mean(mu_m), var* = mean(sigma_m^2 + mu_m^2) - mu*^2 (clamped below at
/// 1e-12). sigma_floored reports whether the clamp fired.
GaussianCalibration ensemble_combine(std::span<const MeanSigma> members, bool* sigma_floored = nullptr);

void write_calibrations_jsonl(std::span<const GaussianCalibration> cals,
                              const std::filesystem::path& path, const double* alpha = nullptr);
std::vector<GaussianCalibration> read_calibrations_jsonl(const std::filesystem::path& path);

}  // namespace mia
