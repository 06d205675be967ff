#pragma once

#include <vector>

#include "finreward/reward_math.hpp"

namespace finreward {
namespace batch {

// Batch forms of the scalar kernels. The *_serial versions are the
// reference implementations; the OpenMP versions write each result into its
// own slot, so outputs are bit-identical to the serial path for any thread
// count. Tests compare the two; the bench target times them.

std::vector<double> aggregate_steps_serial(
    const std::vector<rmath::StepComponentVector>& vectors, double temperature = 1.0);
std::vector<double> aggregate_steps(
    const std::vector<rmath::StepComponentVector>& vectors, double temperature = 1.0);

std::vector<std::vector<double>> group_advantages_serial(
    const std::vector<rmath::GroupRewards>& groups);
std::vector<std::vector<double>> group_advantages(
    const std::vector<rmath::GroupRewards>& groups);

std::vector<double> bce_losses_serial(const std::vector<double>& logits,
                                      const std::vector<int>& labels);
std::vector<double> bce_losses(const std::vector<double>& logits,
                               const std::vector<int>& labels);

}  // namespace batch
}  // namespace finreward
