#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mia {

/// Input that violates a documented contract (bad record, bad argument).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid run configuration or CLI flags.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical failure during training (non-finite loss, degenerate data).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 64-bit mixing function used for seed derivation.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s,
                                std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Derives a child seed from a parent seed and a label. Stages, ensemble
/// members and shadows each get their own link in the chain.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::string_view label) {
  return splitmix64(parent ^ fnv1a64(label));
}

constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) {
  return splitmix64(splitmix64(parent) + index);
}

/// Seeded generator whose outputs are identical across standard libraries:
/// only the engine (fully specified by the standard) is taken from <random>,
/// the distributions are implemented here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 bits of precision.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n). Lemire-style rejection keeps it unbiased.
  std::uint64_t below(std::uint64_t n);

  double normal();

  double normal(double mean, double sd) { return mean + sd * normal(); }

  bool bernoulli(double p) { return uniform() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Identity permutation shuffled with `rng`.
std::vector<std::size_t> permutation(std::size_t n, Rng& rng);

/// Number of worker threads: MIA_THREADS if set, else hardware concurrency.
unsigned thread_count();

/// Runs fn(i) for i in [0, n) across worker threads. fn must only write to
/// slots owned by index i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

double mean(std::span<const double> xs);

/// Sample standard deviation (divisor n - 1). Requires n >= 2.
double sample_sd(std::span<const double> xs);

}  // namespace mia
