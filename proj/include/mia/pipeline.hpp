#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mia/corpus.hpp"
#include "mia/lira.hpp"
#include "mia/lm.hpp"
#include "mia/regressor.hpp"
#include "mia/scores.hpp"

namespace mia {

struct CorpusConfig {
  std::filesystem::path path;
  CorpusFormat format = CorpusFormat::jsonl;
  std::size_t min_chars = 25;
  double subsample = 1.0;  // seeded uniform subsample before splitting
};

struct SplitConfig {
  SplitFractions fractions;
  std::optional<std::uint64_t> seed;  // derived from the master seed when unset
};

struct TargetConfig {
  enum class Kind { neural_ngram, count_ngram, external } kind = Kind::neural_ngram;
  LmSpec lm;
  std::size_t vocab_size = 5000;
  std::filesystem::path logls_path;  // external only
};

struct ScoreConfig {
  std::vector<ScoreName> functions = {ScoreName::loss, ScoreName::mink, ScoreName::zlib,
                                      ScoreName::neighborhood};
  double mink_k = 0.20;
  std::size_t neighbors = 25;
  double perturb_rate = 0.10;
};

struct CalibratorConfig {
  std::string objective = "auto";  // gaussian_nll | dual_pinball | auto
  std::size_t ensemble_size = 5;
  QrConfig qr;
  double selection_alpha = 0.01;
  double selection_holdout_frac = 0.10;
};

struct LiraConfig {
  bool enabled = true;
  std::size_t shadows = 4;
  std::vector<VarianceMode> modes = {VarianceMode::per_example, VarianceMode::fixed};
  double subset_frac = 0.5;
  double holdout_frac = 0.10;
  std::optional<LmSpec> model;  // defaults to the target's settings
};

struct RunConfig {
  CorpusConfig corpus;
  SplitConfig split;
  TargetConfig target;
  ScoreConfig scores;
  CalibratorConfig calibrator;
  LiraConfig lira;
  std::vector<double> alphas = {0.001, 0.01};
  std::filesystem::path output_dir = "mia_out";
  std::uint64_t seed = 0;

  /// Throws ConfigError on unknown keys, bad values or missing paths.
  static RunConfig from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
  static RunConfig load(const std::filesystem::path& path);
  nlohmann::json to_json() const;
  void validate() const;
  /// MIA_OUTPUT_DIR, when set, replaces output_dir.
  void apply_environment();
};

/// Stage names, in execution order. Artifacts live under <output>/<stage>/.
inline constexpr std::string_view kStages[] = {"split", "train-target", "score", "train-calibrator",
                                               "train-shadows", "attack", "report"};

struct StageResult {
  std::string stage;
  bool skipped = false;
};

/// Thrown when a stage fails; carries the stage name.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& cause)
      : std::runtime_error("stage '" + stage + "' failed: " + cause), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

/// Missing upstream artifact; names the subcommand that produces it.
class MissingArtifact : public std::runtime_error {
 public:
  MissingArtifact(const std::string& what, std::string producer)
      : std::runtime_error(what + " (run `" + producer + "` first)"), producer_(std::move(producer)) {}
  const std::string& producer() const { return producer_; }

 private:
  std::string producer_;
};

class Pipeline {
 public:
  explicit Pipeline(RunConfig config);

  const RunConfig& config() const { return config_; }
  std::filesystem::path stage_dir(std::string_view stage) const;

  /// Runs one stage against persisted upstream artifacts. With force == false
  /// a stage whose fingerprint matches the stored one is skipped.
  StageResult run_stage(std::string_view stage, bool force = false);

  /// All stages in order.
  std::vector<StageResult> run_all();

  /// Seed of a stage, derived from the master seed.
  std::uint64_t stage_seed(std::string_view stage) const;

 private:
  std::string fingerprint(std::string_view stage) const;
  nlohmann::json stage_config(std::string_view stage) const;
  std::string upstream_fingerprint(std::string_view stage) const;
  bool lira_active() const;

  void run_split(const std::filesystem::path& dir);
  void run_train_target(const std::filesystem::path& dir);
  void run_score(const std::filesystem::path& dir);
  void run_train_calibrator(const std::filesystem::path& dir);
  void run_train_shadows(const std::filesystem::path& dir);
  void run_attack(const std::filesystem::path& dir);
  void run_report(const std::filesystem::path& dir);

  RunConfig config_;
};

/// Reads stage.json of a completed stage; throws MissingArtifact otherwise.
nlohmann::json read_stage_record(const std::filesystem::path& output_dir, std::string_view stage);

}  // namespace mia
