#include "dgsp/eval.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "dgsp/error.hpp"
#include "dgsp/sampler.hpp"

namespace dgsp {

MeanError mean_estimation_error(std::span<const double> exact,
                                std::span<const std::optional<double>> estimated, size_t k) {
  if (k == 0) throw domain_error("k must be at least 1");
  if (exact.size() < k || estimated.size() < k) {
    throw domain_error("ME(k) needs at least k ground-truth patterns");
  }
  MeanError result;
  double sum = 0.0;
  for (size_t i = 0; i < k; ++i) {
    if (!estimated[i]) ++result.missing;
    sum += std::abs(exact[i] - estimated[i].value_or(0.0));
  }
  result.value = sum / static_cast<double>(k);
  return result;
}

double average_precision(std::span<const std::string> produced,
                         std::span<const std::string> truth, size_t k) {
  if (k == 0) throw domain_error("k must be at least 1");
  if (truth.size() < k) throw domain_error("AP(k) needs at least k ground-truth patterns");
  const std::unordered_set<std::string> top(truth.begin(), truth.begin() + k);
  std::unordered_set<std::string> seen;
  double sum = 0.0;
  size_t hits = 0;
  for (size_t i = 0; i < produced.size(); ++i) {
    if (!top.contains(produced[i]) || !seen.insert(produced[i]).second) continue;
    ++hits;
    sum += static_cast<double>(hits) / static_cast<double>(i + 1);
  }
  return sum / static_cast<double>(top.size());
}

double ranking_similarity(std::span<const std::string> produced,
                          std::span<const std::string> truth, size_t k) {
  if (k == 0) throw domain_error("k must be at least 1");
  if (produced.size() < k || truth.size() < k) {
    throw domain_error("RS(k) needs at least k entries in both lists");
  }
  const std::unordered_set<std::string> top(truth.begin(), truth.begin() + k);
  size_t shared = 0;
  for (size_t i = 0; i < k; ++i) shared += top.contains(produced[i]) ? 1 : 0;
  return static_cast<double>(shared) / static_cast<double>(k);
}

void validate(const BoundInputs& in) {
  if (!(in.epsilon > 0.0 && in.epsilon < 1.0)) throw domain_error("epsilon must lie in (0, 1)");
  if (!(in.delta > 0.0 && in.delta < 1.0)) throw domain_error("delta must lie in (0, 1)");
  if (!(in.a > 0.0 && in.a <= 1.0)) throw domain_error("a must lie in (0, 1]");
  if (in.pattern_count && !(*in.pattern_count >= 1.0)) {
    throw domain_error("pattern count must be at least 1");
  }
}

double union_bound_sample_size(const BoundInputs& in) {
  validate(in);
  if (!in.pattern_count) throw domain_error("pattern count required");
  return 12.0 / (in.epsilon * in.epsilon * in.a) * std::log(2.0 * *in.pattern_count / in.delta);
}

double item_bound_sample_size(const BoundInputs& in) {
  validate(in);
  const double numerator =
      12.0 * static_cast<double>(in.item_count) * (static_cast<double>(in.l) + 1.0) + 12.0;
  return numerator / (in.epsilon * in.epsilon * in.a) * std::log(2.0 / in.delta);
}

double sample_size_bound(const BoundInputs& in) {
  return in.pattern_count ? union_bound_sample_size(in) : item_bound_sample_size(in);
}

double estimate_a(std::span<const uint64_t> path_weights) {
  if (path_weights.empty()) throw domain_error("cannot estimate a from an empty batch");
  long double sum = 0;
  uint64_t max = 0;
  for (uint64_t w : path_weights) {
    sum += w;
    max = std::max(max, w);
  }
  return static_cast<double>(sum / path_weights.size() / max);
}

double estimate_a(const SampleBatch& batch) { return estimate_a(batch.weights()); }

}  // namespace dgsp
