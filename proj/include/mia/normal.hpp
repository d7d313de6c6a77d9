#pragma once

namespace mia {

/// Standard normal CDF at 0 and 1.
inline constexpr double kPhi0 = 0.5;
inline constexpr double kPhi1 = 0.8413447460685429;

double normal_cdf(double x);

/// Standard normal quantile for p in (0, 1); throws DataError otherwise.
/// Rational approximation followed by one Newton step on normal_cdf.
double normal_inverse_cdf(double p);

}  // namespace mia
