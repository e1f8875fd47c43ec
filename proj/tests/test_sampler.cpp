#include <doctest.h>

#include <map>
#include <sstream>

#include "dgsp/error.hpp"
#include "dgsp/sampler.hpp"
#include "stats.hpp"
#include "support.hpp"

using namespace dgsp;
using namespace dgsp::testing;

TEST_CASE("fig1 l=3 always samples p6") {
  const auto g = fig1();
  const auto w = compute_weights(g, 3, WeightMode::kWalkCount);
  Rng rng(1);
  const std::vector<VertexId> p6{vid(g, "v1"), vid(g, "v2"), vid(g, "v4"), vid(g, "v7")};
  for (int i = 0; i < 200; ++i) CHECK(sample_path(g, w, 3, rng).vertices == p6);
}

TEST_CASE("fig1 l=2 path sampling is uniform") {
  const auto g = fig1();
  const PathSampler sampler(g, 2, WeightMode::kWalkCount);
  const auto paths = enumerate_paths(g, 2);
  std::map<std::vector<VertexId>, uint64_t> counts;
  Rng rng(2);
  const int draws = 300'000;
  for (int i = 0; i < draws; ++i) ++counts[sampler.sample(rng).vertices];
  REQUIRE(paths.size() == 4);
  REQUIRE(counts.size() == 4);
  std::vector<uint64_t> observed;
  for (const auto& p : paths) {
    const double share = static_cast<double>(counts[p.vertices]) / draws;
    CHECK(std::abs(share - 1.0 / 4) <= 0.01);
    observed.push_back(counts[p.vertices]);
  }
  CHECK(chi_square_passes(observed, std::vector<double>(4, 1.0 / 4), 0.001));
}

TEST_CASE("path sampler errors") {
  const auto edgeless = parse_graph(
      R"({"format":"dgsp-graph/1","vertices":[{"id":"a","db":[["x"]]},{"id":"b","db":[["y"]]}],"edges":[]})");
  CHECK_THROWS_WITH_AS(PathSampler(edgeless, 1, WeightMode::kWalkCount), doctest::Contains("no length-1"),
                       Error);
  try {
    PathSampler(edgeless, 1, WeightMode::kWalkCount);
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::kNoPath);
  }

  // A 2-cycle has length-2 walks but no simple length-2 path.
  const auto cycle = parse_graph(
      R"({"format":"dgsp-graph/1","vertices":[{"id":"a","db":[["x"]]},{"id":"b","db":[["y"]]}],"edges":[["a","b"],["b","a"]]})");
  const PathSampler sampler(cycle, 2, WeightMode::kWalkCount, 50);
  Rng rng(3);
  try {
    sampler.sample(rng);
    FAIL("expected rejection budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::kRejectionBudget);
  }
}

TEST_CASE("walk-count sampling is uniform on random digraphs") {
  Rng gen(555);
  int checked = 0;
  for (int trial = 0; trial < 30 && checked < 8; ++trial) {
    const auto g = random_graph(gen, 4 + static_cast<uint32_t>(gen.below(7)), 0.3, 2, 1);
    const uint32_t l = 2 + static_cast<uint32_t>(gen.below(2));
    const auto truth = brute_simple_paths(g, l);
    if (truth.size() < 2) continue;
    ++checked;
    const PathSampler sampler(g, l, WeightMode::kWalkCount);
    std::map<std::vector<VertexId>, uint64_t> counts;
    Rng rng(1000 + trial);
    for (int i = 0; i < 40'000; ++i) ++counts[sampler.sample(rng).vertices];
    std::vector<uint64_t> observed;
    for (const auto& p : truth) observed.push_back(counts[p]);
    CHECK(counts.size() == truth.size());
    CHECK(chi_square_passes(observed, std::vector<double>(truth.size(), 1.0 / truth.size()), 0.001));
  }
  CHECK(checked >= 5);
}

TEST_CASE("paper-literal mode only emits valid simple paths") {
  Rng gen(9);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_graph(gen, 6, 0.35, 2, 1);
    if (brute_simple_paths(g, 2).empty()) continue;
    const PathSampler sampler(g, 2, WeightMode::kPaperLiteral);
    Rng rng(trial);
    for (int i = 0; i < 200; ++i) {
      const auto p = sampler.sample(rng).vertices;
      const auto all = brute_simple_paths(g, 2);
      CHECK(std::binary_search(all.begin(), all.end(), p));
    }
  }
}

TEST_CASE("transaction sequence sampling on p6") {
  const auto g = fig1();
  const Path p6{{vid(g, "v1"), vid(g, "v2"), vid(g, "v4"), vid(g, "v7")}};
  Rng rng(4);
  std::map<std::vector<uint32_t>, uint64_t> counts;
  const int draws = 120'000;
  for (int i = 0; i < draws; ++i) {
    const auto rec = sample_transaction_sequence(g, p6, rng);
    CHECK(rec.path_weight == 12);
    ++counts[rec.sequence.choices];
  }
  REQUIRE(counts.size() == 12);
  for (const auto& [choices, n] : counts) {
    CHECK(std::abs(static_cast<double>(n) / draws - 1.0 / 12) <= 0.01);
  }

  const Path singles{{vid(g, "v3"), vid(g, "v6")}};
  const auto rec = sample_transaction_sequence(g, singles, rng);
  CHECK(rec.path_weight == 1);
  CHECK(rec.sequence.choices == std::vector<uint32_t>{0, 0});
}

TEST_CASE("sample_batch basics") {
  const auto g = fig1();
  BatchOptions opts;
  opts.seed = 17;
  const auto batch = sample_batch(g, 3, 1000, opts);
  CHECK(batch.size() == 1000);
  CHECK(batch.length() == 3);
  CHECK(batch.rejections() == 0);
  for (size_t i = 0; i < batch.size(); ++i) {
    CHECK(batch.weight(i) == 12);
    CHECK(batch.path(i)[3] == vid(g, "v7"));
  }
  CHECK(batch.total_weight() == 12000);
  CHECK_THROWS_AS(sample_batch(g, 3, 0, opts), Error);
  CHECK_THROWS_AS(sample_batch(g, 4, 10, opts), Error);
}

TEST_CASE("sample_batch output does not depend on worker count") {
  Rng gen(21);
  const auto g = random_graph(gen, 9, 0.3, 3, 4);
  BatchOptions opts;
  opts.seed = 123;
  const auto one = sample_batch(g, 2, 5000, opts);
  for (unsigned workers : {2u, 3u, 4u, 8u}) {
    opts.workers = workers;
    const auto many = sample_batch(g, 2, 5000, opts);
    CHECK(many == one);
  }
  opts.seed = 124;
  CHECK_FALSE(sample_batch(g, 2, 5000, opts) == one);
}

TEST_CASE("two-step marginal on fig1 l=2 is 1/(|P_2| M)") {
  const auto g = fig1();
  BatchOptions opts;
  opts.seed = 99;
  const size_t m = 200'000;
  const auto batch = sample_batch(g, 2, m, opts);
  std::map<std::pair<std::vector<VertexId>, std::vector<uint32_t>>, uint64_t> counts;
  for (size_t i = 0; i < m; ++i) {
    ++counts[{{batch.path(i).begin(), batch.path(i).end()},
              {batch.choices(i).begin(), batch.choices(i).end()}}];
  }
  size_t outcomes = 0;
  const auto paths = enumerate_paths(g, 2);
  for (const auto& p : paths) {
    const uint64_t weight = path_weight(g, p.vertices);
    for (const auto& seq : induce_sequences(g, p)) {
      ++outcomes;
      const double expected = 1.0 / (static_cast<double>(paths.size() * weight));
      CHECK(within_standard_errors(counts[{p.vertices, seq.choices}], m, expected, 4.0));
    }
  }
  CHECK(outcomes == 25);
  CHECK(counts.size() == 25);
}

TEST_CASE("batch JSONL export") {
  const auto g = fig1();
  BatchOptions opts;
  opts.seed = 5;
  const auto batch = sample_batch(g, 3, 3, opts);
  std::stringstream out;
  write_batch_jsonl(g, batch, out);
  std::string first;
  std::getline(out, first);
  const std::string expected_prefix = R"({"path":["v1","v2","v4","v7"],"tids":[)";
  CHECK(first.rfind(expected_prefix, 0) == 0);
  CHECK(first.find(R"("weight":12})") != std::string::npos);

  std::stringstream again;
  write_batch_jsonl(g, batch, again);
  CHECK(read_batch_weights(again) == std::vector<uint64_t>{12, 12, 12});

  std::stringstream bad(R"({"path":[],"tids":[],"weight":0})");
  CHECK_THROWS_AS(read_batch_weights(bad), Error);
}
