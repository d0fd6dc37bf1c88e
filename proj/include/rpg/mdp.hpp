#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "rpg/rng.hpp"

namespace rpg {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Finite MDP with stochastic rewards. Rewards are Gaussian around
// reward_mean(s,a) with a common standard deviation; transition row (s,a)
// lives at pair_index(s,a). Immutable after construction by convention: all
// solvers and samplers take it by const reference and it is safe to share
// across threads.
struct TabularMdp {
  int n_states = 0;
  int n_actions = 0;
  Mat transition;   // (n_states*n_actions) x n_states, each row a distribution
  Mat reward_mean;  // n_states x n_actions, entries in [0, 1]
  double reward_noise_std = 0.0;
  double discount = 0.0;  // in [0, 1)
  Vec init_dist;          // over states

  int pair_index(int s, int a) const { return s * n_actions + a; }
  int n_pairs() const { return n_states * n_actions; }

  // Throws std::invalid_argument on any violated structural invariant
  // (rows not summing to 1, rewards outside [0,1], discount outside [0,1), ...).
  void validate() const;
};

struct FeatureMap {
  int dim = 0;
  Mat values;  // n_pairs x dim, row = feature of (s,a), each row norm <= 1

  auto feature(int pair) const { return values.row(pair); }

  static FeatureMap one_hot(int n_states, int n_actions);
  void validate() const;
};

// Restart distribution over state-action pairs.
struct ResetDistribution {
  Vec weights;  // over pairs, sums to 1

  static ResetDistribution uniform(int n_pairs);
  static ResetDistribution point(int pair, int n_pairs);
  void validate() const;
};

// A stationary policy over a finite MDP, evaluable state by state.
class Policy {
 public:
  virtual ~Policy() = default;
  // Probability vector over actions; entries sum to 1 within 1e-12.
  virtual Vec action_probs(int state) const = 0;
};

// pi(a|s) proportional to exp(theta . phi(s,a)), computed with
// max-subtraction so large parameters stay finite.
class SoftmaxLinearPolicy final : public Policy {
 public:
  SoftmaxLinearPolicy(std::shared_ptr<const FeatureMap> phi, int n_states, int n_actions);
  SoftmaxLinearPolicy(std::shared_ptr<const FeatureMap> phi, int n_states, int n_actions,
                      Vec theta);

  Vec action_probs(int state) const override;

  const Vec& theta() const { return theta_; }
  SoftmaxLinearPolicy with_theta(Vec theta) const;
  const FeatureMap& features() const { return *phi_; }
  std::shared_ptr<const FeatureMap> features_ptr() const { return phi_; }
  int n_states() const { return n_states_; }
  int n_actions() const { return n_actions_; }

 private:
  std::shared_ptr<const FeatureMap> phi_;
  int n_states_ = 0;
  int n_actions_ = 0;
  Vec theta_;
};

// Explicit per-state action distributions. Supports zero-probability actions,
// which the softmax class cannot represent.
class TablePolicy final : public Policy {
 public:
  explicit TablePolicy(Mat probs);
  static TablePolicy uniform(int n_states, int n_actions);

  Vec action_probs(int state) const override;
  const Mat& probs() const { return probs_; }
  void set_row(int state, const Vec& probs);

 private:
  Mat probs_;  // n_states x n_actions
};

// Uniform mixture over policies: a component is drawn once per episode and
// followed throughout. Values and occupancies of the mixture are the averages
// of the per-component quantities, which is how the evaluation code treats it.
struct PolicyMixture {
  std::vector<std::shared_ptr<const Policy>> components;

  static PolicyMixture single(std::shared_ptr<const Policy> policy);
  const Policy& pick(RngStream& rng) const;
  std::size_t size() const { return components.size(); }
};

// One regression datum produced by an episode. The truth_* fields are harness
// bookkeeping for scoring detection; learners never read them.
struct EpisodeSample {
  int state = 0;
  int action = 0;
  double q_hat = 0.0;
  bool truth_corrupted = false;
  double truth_q_hat = 0.0;
};

}  // namespace rpg
