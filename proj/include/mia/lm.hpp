#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

#include "mia/corpus.hpp"
#include "mia/optim.hpp"
#include "mia/vocab.hpp"

namespace mia {

/// Natural-log likelihood of every predicted token of one document (all
/// regular tokens followed by EOS; BOS is never predicted).
struct TokenLogLikelihoods {
  std::string doc_id;
  std::string model_id;
  std::vector<double> values;

  std::size_t n() const { return values.size(); }
};

struct TrainConfig {
  int epochs = 3;
  double learning_rate = 1e-3;
  int batch_size = 64;  // token positions per update
  std::uint64_t seed = 0;
  OptimizerKind optimizer = OptimizerKind::adaptive_moment;

  void validate() const;
};

/// One prediction: the (order - 1) preceding ids (BOS padded) and the target.
struct NGramExample {
  std::array<TokenId, 3> context{};
  TokenId target = 0;
};

/// All predictions of a document: its tokens then EOS, with BOS padding.
std::vector<NGramExample> ngram_examples(std::span<const TokenId> tokens, int order);

class LanguageModel {
 public:
  virtual ~LanguageModel() = default;

  virtual std::string_view kind() const = 0;
  virtual int order() const = 0;
  virtual const Vocabulary& vocab() const = 0;

  /// log P(target | context) for each example.
  virtual std::vector<double> example_logls(std::span<const NGramExample> examples) const = 0;

  /// Full next-token distribution for one context (length order - 1).
  virtual std::vector<double> next_token_probs(std::span<const TokenId> context) const = 0;

  virtual nlohmann::json to_json() const = 0;
};

/// Per-epoch callback: epoch number (1-based) and mean training NLL per token.
using EpochCallback = std::function<void(int epoch, double mean_nll, const LanguageModel&)>;

/// Interpolated add-k smoothed n-gram counts. Training accumulates counts once;
/// further epochs see the same data and change nothing.
class CountNGramLM final : public LanguageModel {
 public:
  CountNGramLM(std::shared_ptr<const Vocabulary> vocab, int order = 3, double k_add = 0.1,
               std::vector<double> lambdas = {});

  std::string_view kind() const override { return "count_ngram"; }
  int order() const override { return order_; }
  const Vocabulary& vocab() const override { return *vocab_; }
  const std::vector<double>& lambdas() const { return lambdas_; }
  double k_add() const { return k_add_; }

  void observe(std::span<const TokenId> tokens);
  /// Returns one mean NLL per requested epoch (all identical after counting).
  std::vector<double> train(std::span<const Document* const> docs, const TrainConfig& config,
                            const EpochCallback& on_epoch = {});

  double prob(std::span<const TokenId> context, TokenId token) const;

  std::vector<double> example_logls(std::span<const NGramExample> examples) const override;
  std::vector<double> next_token_probs(std::span<const TokenId> context) const override;

  nlohmann::json to_json() const override;
  static std::unique_ptr<CountNGramLM> from_json(const nlohmann::json& j,
                                                 std::shared_ptr<const Vocabulary> vocab);

 private:
  std::uint64_t key(std::span<const TokenId> tokens) const;

  std::shared_ptr<const Vocabulary> vocab_;
  int order_;
  double k_add_;
  std::vector<double> lambdas_;
  // Index j holds (j+1)-gram statistics: context counts and full n-gram counts.
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> context_counts_;
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> ngram_counts_;
};

struct NeuralLMShape {
  int order = 4;
  int embed_dim = 32;
  int hidden_dim = 64;
};

/// Feedforward n-gram model: concatenated context embeddings, one tanh
/// hidden layer, softmax over the vocabulary.
class NeuralNGramLM final : public LanguageModel {
 public:
  NeuralNGramLM(std::shared_ptr<const Vocabulary> vocab, NeuralLMShape shape, std::uint64_t init_seed);

  std::string_view kind() const override { return "neural_ngram"; }
  int order() const override { return shape_.order; }
  const Vocabulary& vocab() const override { return *vocab_; }
  const NeuralLMShape& shape() const { return shape_; }

  Eigen::VectorXd& params() { return theta_; }
  const Eigen::VectorXd& params() const { return theta_; }

  /// Named slices of the flat parameter vector: {name, offset, size}.
  struct Tensor {
    std::string name;
    Eigen::Index offset;
    Eigen::Index size;
  };
  std::vector<Tensor> tensors() const;

  /// Summed negative log-likelihood over the examples; writes its gradient.
  double loss_and_grad(std::span<const NGramExample> examples, Eigen::VectorXd& grad) const;
  double loss(std::span<const NGramExample> examples) const;

  /// Mini-batch training; returns mean training NLL per epoch.
  std::vector<double> train(std::span<const Document* const> docs, const TrainConfig& config,
                            const EpochCallback& on_epoch = {});

  std::vector<double> example_logls(std::span<const NGramExample> examples) const override;
  std::vector<double> next_token_probs(std::span<const TokenId> context) const override;

  nlohmann::json to_json() const override;
  static std::unique_ptr<NeuralNGramLM> from_json(const nlohmann::json& j,
                                                  std::shared_ptr<const Vocabulary> vocab);

 private:
  Eigen::Index context_len() const { return shape_.order - 1; }
  Eigen::MatrixXd gather_inputs(std::span<const NGramExample> examples) const;
  Eigen::MatrixXd log_softmax_columns(std::span<const NGramExample> examples,
                                      Eigen::MatrixXd* hidden, Eigen::MatrixXd* inputs) const;

  std::shared_ptr<const Vocabulary> vocab_;
  NeuralLMShape shape_;
  Eigen::VectorXd theta_;
  Eigen::Index off_embed_, off_w1_, off_b1_, off_w2_, off_b2_;
};

enum class LmKind { neural_ngram, count_ngram };

LmKind parse_lm_kind(std::string_view name);
std::string_view to_string(LmKind k);

/// Everything needed to build and train a fresh model of either kind.
struct LmSpec {
  LmKind kind = LmKind::neural_ngram;
  NeuralLMShape neural;
  int count_order = 3;
  double k_add = 0.1;
  TrainConfig train;
};

/// Builds a model from spec, initialized and trained with the given seed.
std::unique_ptr<LanguageModel> train_language_model(std::shared_ptr<const Vocabulary> vocab,
                                                    const LmSpec& spec,
                                                    std::span<const Document* const> docs,
                                                    std::uint64_t seed,
                                                    const EpochCallback& on_epoch = {},
                                                    std::vector<double>* history = nullptr);

/// log f(x_i | x_<i) for every predicted token of doc. Throws DataError if the
/// document has no tokens.
TokenLogLikelihoods token_logls(const LanguageModel& model, const Document& doc,
                                std::string model_id = {});

/// Sum of the per-token values: the model's joint log-probability of the
/// token sequence followed by EOS.
double joint_logprob(const LanguageModel& model, std::span<const TokenId> tokens);

void save_lm(const LanguageModel& model, const std::filesystem::path& path);
std::unique_ptr<LanguageModel> load_lm(const std::filesystem::path& path);
std::unique_ptr<LanguageModel> lm_from_json(const nlohmann::json& j);

// Score-exchange format: JSON Lines {"doc_id", "model_id", "logls", "meta"?}.

void write_logls_jsonl(std::span<const TokenLogLikelihoods> records, const std::filesystem::path& path);

/// Streams and validates exchange records. known_ids, when given, rejects
/// doc_ids outside the split manifest. Errors name the offending line.
void for_each_external_logls(const std::filesystem::path& path,
                             const std::function<bool(std::string_view)>& known_id,
                             const std::function<void(TokenLogLikelihoods&&)>& sink);

std::vector<TokenLogLikelihoods> load_external_logls(
    const std::filesystem::path& path, const std::function<bool(std::string_view)>& known_id = {});

}  // namespace mia
