#include "rpg/mdp.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rpg {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

void TabularMdp::validate() const {
  require(n_states > 0, "n_states must be positive");
  require(n_actions > 0, "n_actions must be positive");
  require(transition.rows() == n_pairs() && transition.cols() == n_states,
          "transition must be (n_states*n_actions) x n_states");
  require(reward_mean.rows() == n_states && reward_mean.cols() == n_actions,
          "reward_mean must be n_states x n_actions");
  require(reward_noise_std >= 0.0, "reward_noise_std must be >= 0");
  require(discount >= 0.0 && discount < 1.0, "discount must lie in [0, 1)");
  require(init_dist.size() == n_states, "init_dist must have one entry per state");
  for (int row = 0; row < transition.rows(); ++row) {
    require(transition.row(row).minCoeff() >= 0.0,
            "transition row " + std::to_string(row) + " has a negative entry");
    require(std::abs(transition.row(row).sum() - 1.0) <= 1e-12,
            "transition row " + std::to_string(row) + " does not sum to 1");
  }
  require(init_dist.minCoeff() >= 0.0, "init_dist has a negative entry");
  require(std::abs(init_dist.sum() - 1.0) <= 1e-12, "init_dist does not sum to 1");
  require(reward_mean.minCoeff() >= 0.0 && reward_mean.maxCoeff() <= 1.0,
          "reward_mean entries must lie in [0, 1]");
}

FeatureMap FeatureMap::one_hot(int n_states, int n_actions) {
  FeatureMap phi;
  phi.dim = n_states * n_actions;
  phi.values = Mat::Identity(phi.dim, phi.dim);
  return phi;
}

void FeatureMap::validate() const {
  require(dim > 0, "feature dimension must be positive");
  require(values.cols() == dim, "feature rows must have length dim");
  for (int row = 0; row < values.rows(); ++row) {
    require(values.row(row).norm() <= 1.0 + 1e-9,
            "feature norm exceeds 1 at pair " + std::to_string(row));
  }
}

ResetDistribution ResetDistribution::uniform(int n_pairs) {
  ResetDistribution nu;
  nu.weights = Vec::Constant(n_pairs, 1.0 / n_pairs);
  return nu;
}

ResetDistribution ResetDistribution::point(int pair, int n_pairs) {
  ResetDistribution nu;
  nu.weights = Vec::Zero(n_pairs);
  nu.weights[pair] = 1.0;
  return nu;
}

void ResetDistribution::validate() const {
  require(weights.size() > 0, "reset distribution is empty");
  require(weights.minCoeff() >= 0.0, "reset distribution has a negative entry");
  require(std::abs(weights.sum() - 1.0) <= 1e-12, "reset distribution does not sum to 1");
}

SoftmaxLinearPolicy::SoftmaxLinearPolicy(std::shared_ptr<const FeatureMap> phi, int n_states,
                                         int n_actions)
    : SoftmaxLinearPolicy(std::move(phi), n_states, n_actions, Vec()) {}

SoftmaxLinearPolicy::SoftmaxLinearPolicy(std::shared_ptr<const FeatureMap> phi, int n_states,
                                         int n_actions, Vec theta)
    : phi_(std::move(phi)), n_states_(n_states), n_actions_(n_actions), theta_(std::move(theta)) {
  if (!phi_) throw std::invalid_argument("feature map must not be null");
  if (theta_.size() == 0) theta_ = Vec::Zero(phi_->dim);
  if (theta_.size() != phi_->dim) throw std::invalid_argument("theta length must equal feature dim");
}

Vec SoftmaxLinearPolicy::action_probs(int state) const {
  Vec logits(n_actions_);
  for (int a = 0; a < n_actions_; ++a) {
    logits[a] = phi_->feature(state * n_actions_ + a).dot(theta_);
  }
  const double peak = logits.maxCoeff();
  Vec probs = (logits.array() - peak).exp();
  probs /= probs.sum();
  return probs;
}

SoftmaxLinearPolicy SoftmaxLinearPolicy::with_theta(Vec theta) const {
  return SoftmaxLinearPolicy(phi_, n_states_, n_actions_, std::move(theta));
}

TablePolicy::TablePolicy(Mat probs) : probs_(std::move(probs)) {
  for (int s = 0; s < probs_.rows(); ++s) {
    if (probs_.row(s).minCoeff() < 0.0 || std::abs(probs_.row(s).sum() - 1.0) > 1e-12) {
      throw std::invalid_argument("policy row " + std::to_string(s) + " is not a distribution");
    }
  }
}

TablePolicy TablePolicy::uniform(int n_states, int n_actions) {
  return TablePolicy(Mat::Constant(n_states, n_actions, 1.0 / n_actions));
}

Vec TablePolicy::action_probs(int state) const { return probs_.row(state); }

void TablePolicy::set_row(int state, const Vec& probs) {
  if (probs.minCoeff() < 0.0 || std::abs(probs.sum() - 1.0) > 1e-12) {
    throw std::invalid_argument("policy row update is not a distribution");
  }
  probs_.row(state) = probs;
}

PolicyMixture PolicyMixture::single(std::shared_ptr<const Policy> policy) {
  PolicyMixture mix;
  mix.components.push_back(std::move(policy));
  return mix;
}

const Policy& PolicyMixture::pick(RngStream& rng) const {
  if (components.empty()) throw std::logic_error("empty policy mixture");
  if (components.size() == 1) return *components[0];
  return *components[static_cast<std::size_t>(rng.uniform_int(static_cast<std::int64_t>(components.size())))];
}

}  // namespace rpg
