#include <doctest.h>

#include <set>

#include "dgsp/baseline.hpp"
#include "dgsp/error.hpp"
#include "dgsp/weights.hpp"
#include "support.hpp"

using namespace dgsp;
using namespace dgsp::testing;

namespace {

std::vector<VertexId> ids(const DatabaseGraph& g, std::initializer_list<const char*> names) {
  std::vector<VertexId> out;
  for (const char* n : names) out.push_back(vid(g, n));
  return out;
}

std::string render(const DatabaseGraph& g, const SequenceView& seq) {
  std::string text;
  for (const auto& tx : seq) {
    text += '(';
    for (size_t j = 0; j < tx.size(); ++j) text += (j ? "," : "") + g.item_name(tx[j]);
    text += ')';
  }
  return text;
}

}  // namespace

TEST_CASE("enumerate_paths on fig1") {
  const auto g = fig1();
  const auto l3 = enumerate_paths(g, 3);
  REQUIRE(l3.size() == 1);
  CHECK(l3[0].vertices == ids(g, {"v1", "v2", "v4", "v7"}));

  // p3, p4, p5 start at v1; <v2,v4,v7> is the fourth length-2 path.
  const auto l2 = enumerate_paths(g, 2);
  REQUIRE(l2.size() == 4);
  CHECK(l2[0].vertices == ids(g, {"v1", "v2", "v4"}));
  CHECK(l2[1].vertices == ids(g, {"v1", "v2", "v5"}));
  CHECK(l2[2].vertices == ids(g, {"v1", "v3", "v6"}));
  CHECK(l2[3].vertices == ids(g, {"v2", "v4", "v7"}));

  CHECK(enumerate_paths(g, 4).empty());
  CHECK(count_paths(g, 1) == 6);
}

TEST_CASE("induced sequences of p6 are the reference D_3 in product order") {
  const auto g = fig1();
  const auto p6 = enumerate_paths(g, 3).at(0);
  const auto seqs = induce_sequences(g, p6);
  const std::vector<std::string> reference_d3 = {
      "(i1,i2,i3)(i1,i3)(i1,i3)(i1,i4)", "(i1,i2,i3)(i1,i3)(i2,i3)(i1,i4)",
      "(i1,i2,i3)(i2,i3)(i1,i3)(i1,i4)", "(i1,i2,i3)(i2,i3)(i2,i3)(i1,i4)",
      "(i1,i4)(i1,i3)(i1,i3)(i1,i4)",    "(i1,i4)(i1,i3)(i2,i3)(i1,i4)",
      "(i1,i4)(i2,i3)(i1,i3)(i1,i4)",    "(i1,i4)(i2,i3)(i2,i3)(i1,i4)",
      "(i1,i3)(i1,i3)(i1,i3)(i1,i4)",    "(i1,i3)(i1,i3)(i2,i3)(i1,i4)",
      "(i1,i3)(i2,i3)(i1,i3)(i1,i4)",    "(i1,i3)(i2,i3)(i2,i3)(i1,i4)",
  };
  REQUIRE(seqs.size() == 12);
  for (size_t i = 0; i < 12; ++i) {
    CHECK(render(g, sequence_itemsets(g, seqs[i].path.vertices, seqs[i].choices)) == reference_d3[i]);
  }
  CHECK(path_weight(g, p6.vertices) == 12);
}

TEST_CASE("induce_sequences sizes") {
  const auto g = fig1();
  CHECK(induce_sequences(g, Path{ids(g, {"v1", "v2"})}).size() == 6);
  CHECK(induce_sequences(g, Path{ids(g, {"v3", "v6"})}).size() == 1);
  CHECK(count_sequences(g, 3) == 12);
  CHECK(count_sequences(g, 2) == 12 + 6 + 3 + 4);
}

TEST_CASE("exact_frequency on fig1") {
  const auto g = fig1();
  CHECK(exact_frequency(g, 3, make_pattern(g, {{"i1"}, {"i3"}, {"i3"}, {"i1", "i4"}})) ==
        Frequency{12, 12});
  CHECK(exact_frequency(g, 3, make_pattern(g, {{"i3"}, {"i3"}, {"i3"}, {"i1"}})) ==
        Frequency{8, 12});
  // An item id outside the universe can never be contained.
  Pattern absent = make_pattern(g, {{"i1"}, {"i3"}, {"i3"}, {"i1"}});
  absent.itemsets[2] = {99};
  CHECK(exact_frequency(g, 3, absent).count == 0);

  CHECK_THROWS_AS(exact_frequency(g, 4, Pattern{{{0}, {0}, {0}, {0}, {0}}}), Error);
  CHECK_THROWS_AS(exact_frequency(g, 3, Pattern{{{0}, {0}}}), Error);
}

TEST_CASE("exact_topk reproduces the reference top-9") {
  const auto g = fig1();
  const auto top = exact_topk(g, 3, 9);
  const std::vector<std::string> reference_top9 = {
      "(i1)(i3)(i3)(i1)",    "(i1)(i3)(i3)(i4)",    "(i1)(i3)(i3)(i1,i4)",
      "(i3)(i3)(i3)(i1)",    "(i3)(i3)(i3)(i4)",    "(i3)(i3)(i3)(i1,i4)",
      "(i1,i3)(i3)(i3)(i1)", "(i1,i3)(i3)(i3)(i4)", "(i1,i3)(i3)(i3)(i1,i4)",
  };
  REQUIRE(top.entries.size() == 9);
  CHECK(top.total == 12);
  CHECK(top.kind == ScoreKind::kExactFrequency);
  for (size_t i = 0; i < 9; ++i) {
    CHECK(to_text(g, top.entries[i].pattern) == reference_top9[i]);
    CHECK(top.entries[i].rank == i + 1);
    CHECK(top.entries[i].support == (i < 3 ? 12u : 8u));
    CHECK(exact_frequency(g, 3, top.entries[i].pattern).count == top.entries[i].support);
  }
}

TEST_CASE("exact_topk edge cases") {
  const auto g = fig1();
  CHECK_THROWS_AS(exact_topk(g, 4, 3), Error);

  // Universal item at every vertex: its singleton pattern is rank 1 at 1.0.
  const auto u = parse_graph(R"({"format":"dgsp-graph/1","vertices":[
    {"id":"a","db":[["u","x"],["u"]]},{"id":"b","db":[["u","y"],["u","x"]]},{"id":"c","db":[["u"]]}],
    "edges":[["a","b"],["b","c"],["a","c"]]})");
  const auto top = exact_topk(u, 1, 1);
  REQUIRE(top.entries.size() == 1);
  CHECK(to_text(u, top.entries[0].pattern) == "(u)(u)");
  CHECK(top.entries[0].frequency == 1.0);

  // Fewer patterns than k: all of them.
  const auto tiny = parse_graph(R"({"format":"dgsp-graph/1","vertices":[
    {"id":"a","db":[["x"]]},{"id":"b","db":[["y"]]}],"edges":[["a","b"]]})");
  CHECK(exact_topk(tiny, 1, 50).entries.size() == 1);
}

TEST_CASE("path enumeration matches brute force and walk counts on DAGs") {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const bool dag = trial % 2 == 0;
    const auto g = random_graph(rng, 2 + static_cast<uint32_t>(rng.below(9)), 0.3, 2, 1, dag);
    for (uint32_t l = 1; l <= 3; ++l) {
      std::vector<std::vector<VertexId>> got;
      for (const auto& p : enumerate_paths(g, l)) got.push_back(p.vertices);
      auto sorted = got;
      std::sort(sorted.begin(), sorted.end());
      CHECK(sorted == got);  // DFS in lexicographic order
      CHECK(got == brute_simple_paths(g, l));
      if (dag) CHECK(got.size() == compute_weights(g, l, WeightMode::kWalkCount).total(l));
    }
  }
}

TEST_CASE("exact frequency is anti-monotone under itemset growth") {
  Rng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_graph(rng, 5, 0.4, 4, 3);
    if (count_paths(g, 2) == 0) continue;
    const auto sets = all_itemsets(static_cast<uint32_t>(g.item_count()));
    for (int probe = 0; probe < 20; ++probe) {
      Pattern s;
      for (int q = 0; q < 3; ++q) s.itemsets.push_back(sets[rng.below(sets.size())]);
      Pattern bigger = s;
      const size_t q = rng.below(3);
      const ItemId extra = static_cast<ItemId>(rng.below(g.item_count()));
      auto& x = bigger.itemsets[q];
      if (std::find(x.begin(), x.end(), extra) != x.end()) continue;
      x.insert(std::upper_bound(x.begin(), x.end(), extra), extra);
      CHECK(exact_frequency(g, 2, bigger).count <= exact_frequency(g, 2, s).count);
    }
  }
}

TEST_CASE("exact_topk agrees with the full-lattice oracle") {
  Rng rng(4242);
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 15; ++trial) {
    const auto g = random_graph(rng, 3 + static_cast<uint32_t>(rng.below(4)), 0.4, 4, 3);
    const uint32_t l = 1 + static_cast<uint32_t>(rng.below(2));
    if (count_paths(g, l) == 0) continue;
    ++checked;
    const auto oracle = brute_ranking(g, l);
    for (size_t k : {1u, 5u, 20u}) {
      const auto top = exact_topk(g, l, k);
      REQUIRE(top.entries.size() == std::min(k, oracle.size()));
      for (size_t i = 0; i < top.entries.size(); ++i) {
        CHECK(top.entries[i].pattern == oracle[i].pattern);
        CHECK(top.entries[i].support == oracle[i].support);
        if (i > 0) CHECK(top.entries[i].support <= top.entries[i - 1].support);
      }
    }
  }
  CHECK(checked >= 10);
}
