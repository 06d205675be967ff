#include "finreward/batch.hpp"

#include "finreward/errors.hpp"

namespace finreward {
namespace batch {

std::vector<double> aggregate_steps_serial(
    const std::vector<rmath::StepComponentVector>& vectors, double temperature) {
    std::vector<double> out(vectors.size());
    for (size_t i = 0; i < vectors.size(); ++i) {
        out[i] = rmath::aggregate_step(vectors[i], temperature);
    }
    return out;
}

std::vector<double> aggregate_steps(
    const std::vector<rmath::StepComponentVector>& vectors, double temperature) {
    std::vector<double> out(vectors.size());
    const long n = static_cast<long>(vectors.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
        out[i] = rmath::aggregate_step(vectors[i], temperature);
    }
    return out;
}

std::vector<std::vector<double>> group_advantages_serial(
    const std::vector<rmath::GroupRewards>& groups) {
    std::vector<std::vector<double>> out(groups.size());
    for (size_t i = 0; i < groups.size(); ++i) {
        out[i] = rmath::group_advantages(groups[i]);
    }
    return out;
}

std::vector<std::vector<double>> group_advantages(
    const std::vector<rmath::GroupRewards>& groups) {
    std::vector<std::vector<double>> out(groups.size());
    const long n = static_cast<long>(groups.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
        out[i] = rmath::group_advantages(groups[i]);
    }
    return out;
}

std::vector<double> bce_losses_serial(const std::vector<double>& logits,
                                      const std::vector<int>& labels) {
    if (logits.size() != labels.size()) throw DomainError("bce_losses: length mismatch");
    std::vector<double> out(logits.size());
    for (size_t i = 0; i < logits.size(); ++i) {
        out[i] = rmath::bce_loss(logits[i], labels[i]);
    }
    return out;
}

std::vector<double> bce_losses(const std::vector<double>& logits,
                               const std::vector<int>& labels) {
    if (logits.size() != labels.size()) throw DomainError("bce_losses: length mismatch");
    std::vector<double> out(logits.size());
    const long n = static_cast<long>(logits.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
        out[i] = rmath::bce_loss(logits[i], labels[i]);
    }
    return out;
}

}  // namespace batch
}  // namespace finreward
