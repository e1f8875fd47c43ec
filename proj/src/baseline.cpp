#include "dgsp/baseline.hpp"

#include "dgsp/error.hpp"
#include "dgsp/miner.hpp"
#include "dgsp/vertical_index.hpp"

namespace dgsp {
namespace {

void extend(const DatabaseGraph& graph, uint32_t l, std::vector<VertexId>& path,
            std::vector<char>& on_path, const PathVisitor& visit) {
  if (path.size() == static_cast<size_t>(l) + 1) {
    visit(path);
    return;
  }
  for (VertexId next : graph.out(path.back())) {
    if (on_path[next]) continue;
    on_path[next] = 1;
    path.push_back(next);
    extend(graph, l, path, on_path, visit);
    path.pop_back();
    on_path[next] = 0;
  }
}

}  // namespace

void for_each_path(const DatabaseGraph& graph, uint32_t l, const PathVisitor& visit) {
  if (l < 1) throw domain_error("path length must be at least 1");
  std::vector<VertexId> path;
  path.reserve(l + 1);
  std::vector<char> on_path(graph.vertex_count(), 0);
  for (VertexId start = 0; start < graph.vertex_count(); ++start) {
    on_path[start] = 1;
    path.push_back(start);
    extend(graph, l, path, on_path, visit);
    path.pop_back();
    on_path[start] = 0;
  }
}

std::vector<Path> enumerate_paths(const DatabaseGraph& graph, uint32_t l) {
  std::vector<Path> paths;
  for_each_path(graph, l, [&](std::span<const VertexId> p) {
    paths.push_back(Path{{p.begin(), p.end()}});
  });
  return paths;
}

uint64_t count_paths(const DatabaseGraph& graph, uint32_t l) {
  uint64_t count = 0;
  for_each_path(graph, l, [&](std::span<const VertexId>) { ++count; });
  return count;
}

void for_each_choice(const DatabaseGraph& graph, std::span<const VertexId> path,
                     const ChoiceVisitor& visit) {
  const size_t n = path.size();
  std::vector<uint32_t> choices(n, 0);
  while (true) {
    visit(choices);
    // Odometer increment, last position fastest.
    size_t q = n;
    while (q > 0) {
      --q;
      if (++choices[q] < graph.database(path[q]).size()) break;
      choices[q] = 0;
      if (q == 0) return;
    }
    if (n == 0) return;
  }
}

std::vector<TransactionSequence> induce_sequences(const DatabaseGraph& graph, const Path& path) {
  std::vector<TransactionSequence> out;
  for_each_choice(graph, path.vertices, [&](std::span<const uint32_t> c) {
    out.push_back(TransactionSequence{path, {c.begin(), c.end()}});
  });
  return out;
}

uint64_t path_weight(const DatabaseGraph& graph, std::span<const VertexId> path) {
  uint64_t product = 1;
  for (VertexId v : path) {
    if (__builtin_mul_overflow(product, graph.database(v).size(), &product)) {
      throw Error(Error::Kind::kOverflow, "path weight overflows 64 bits");
    }
  }
  return product;
}

SequenceView sequence_itemsets(const DatabaseGraph& graph, std::span<const VertexId> path,
                               std::span<const uint32_t> choices) {
  SequenceView view;
  view.reserve(path.size());
  for (size_t q = 0; q < path.size(); ++q) {
    view.emplace_back(graph.database(path[q])[choices[q]].items);
  }
  return view;
}

uint64_t count_sequences(const DatabaseGraph& graph, uint32_t l) {
  uint64_t total = 0;
  for_each_path(graph, l, [&](std::span<const VertexId> p) {
    if (__builtin_add_overflow(total, path_weight(graph, p), &total)) {
      throw Error(Error::Kind::kOverflow, "|D_l| overflows 64 bits");
    }
  });
  return total;
}

Frequency exact_frequency(const DatabaseGraph& graph, uint32_t l, const Pattern& pattern) {
  if (pattern.itemsets.size() != static_cast<size_t>(l) + 1) {
    throw domain_error("pattern length does not match l");
  }
  Frequency f;
  for_each_path(graph, l, [&](std::span<const VertexId> p) {
    for_each_choice(graph, p, [&](std::span<const uint32_t> c) {
      ++f.total;
      if (contains(sequence_itemsets(graph, p, c), pattern)) ++f.count;
    });
  });
  if (f.total == 0) {
    throw Error(Error::Kind::kNoPath, "no length-" + std::to_string(l) + " path in graph");
  }
  return f;
}

RankedPatterns exact_topk(const DatabaseGraph& graph, uint32_t l, size_t k,
                          const ExactOptions& options) {
  const auto index = VerticalIndex::from_exact(graph, l, options.max_records);
  MineOptions mine;
  mine.k = k;
  mine.max_itemset_width = options.max_itemset_width;
  auto ranked = mine_topk(index, mine);
  ranked.kind = ScoreKind::kExactFrequency;
  return ranked;
}

}  // namespace dgsp
