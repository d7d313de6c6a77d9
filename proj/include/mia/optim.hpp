#pragma once

#include <string_view>

#include <Eigen/Core>

namespace mia {

enum class OptimizerKind { adaptive_moment, plain_sgd };

OptimizerKind parse_optimizer(std::string_view name);
std::string_view to_string(OptimizerKind k);

/// First-order update over a flat parameter vector. adaptive_moment is Adam
/// with bias correction (beta1 0.9, beta2 0.999, eps 1e-8).
class Optimizer {
 public:
  Optimizer(OptimizerKind kind, double learning_rate, Eigen::Index n_params);

  void step(Eigen::Ref<Eigen::VectorXd> params, const Eigen::VectorXd& grad);

 private:
  OptimizerKind kind_;
  double lr_;
  Eigen::VectorXd m_;
  Eigen::VectorXd v_;
  long t_ = 0;
};

}  // namespace mia
