#pragma once

// Ranking-quality metrics and sample-size bounds.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dgsp {

class SampleBatch;

struct MeanError {
  double value = 0.0;
  /// Ground-truth patterns with no estimate; those count as estimate 0.
  size_t missing = 0;
};

/// ME(k): mean absolute error over the first k ground-truth patterns.
/// `exact` and `estimated` are aligned and must hold at least k entries.
MeanError mean_estimation_error(std::span<const double> exact,
                                std::span<const std::optional<double>> estimated, size_t k);

/// AP(k) over the full produced list L against the ground-truth top-k G(k):
///   (1/|G(k)|) * sum_i precision(L(i), G(k)) * [L_i in G(k)].
/// `truth` needs at least k entries.
double average_precision(std::span<const std::string> produced,
                         std::span<const std::string> truth, size_t k);

/// RS(k) = |G(k) ∩ L(k)| / k. Both lists need at least k entries.
double ranking_similarity(std::span<const std::string> produced,
                          std::span<const std::string> truth, size_t k);

struct BoundInputs {
  double epsilon = 0.1;
  double delta = 0.1;
  uint64_t item_count = 0;
  uint32_t l = 1;
  /// Mean-to-max ratio of path weights, in (0, 1].
  double a = 1.0;
  /// |Q_l| when known; may be astronomically large, hence double.
  std::optional<double> pattern_count;
};

/// Throws a domain error unless epsilon, delta in (0,1) and a in (0,1].
void validate(const BoundInputs& inputs);

/// 12 / (eps^2 a) * ln(2 |Q_l| / delta). Requires pattern_count.
double union_bound_sample_size(const BoundInputs& inputs);
/// (12 |I| (l+1) + 12) / (eps^2 a) * ln(2 / delta).
double item_bound_sample_size(const BoundInputs& inputs);
/// The pattern-count bound when pattern_count is set, else the item bound.
double sample_size_bound(const BoundInputs& inputs);

/// Plug-in estimate mean(M) / max(M). Optimistic: the sampled maximum can
/// only under-state the true maximum path weight.
double estimate_a(std::span<const uint64_t> path_weights);
double estimate_a(const SampleBatch& batch);

}  // namespace dgsp
