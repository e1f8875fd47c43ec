#pragma once

// Test-only fixtures and brute-force oracles. Nothing here calls into the
// library's enumeration, weighting or mining code.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dgsp/graph.hpp"
#include "dgsp/pattern.hpp"
#include "dgsp/rng.hpp"

namespace dgsp::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(DGSP_FIXTURE_DIR) + "/" + name;
}

inline DatabaseGraph fig1() { return load_graph_file(fixture_path("fig1.json")); }

inline VertexId vid(const DatabaseGraph& g, const std::string& name) {
  return g.find_vertex(name).value();
}

/// Pattern from nested item names, e.g. {{"i1"},{"i3"},{"i3"},{"i1","i4"}}.
inline Pattern make_pattern(const DatabaseGraph& g, const std::vector<std::vector<std::string>>& sets) {
  Pattern p;
  for (const auto& names : sets) {
    Itemset s;
    for (const auto& n : names) s.push_back(g.find_item(n).value());
    std::sort(s.begin(), s.end());
    p.itemsets.push_back(std::move(s));
  }
  return p;
}

/// Small random digraph with random databases over `item_count` items named
/// a, b, c, ... Each ordered pair becomes an edge with probability
/// `edge_probability`.
inline DatabaseGraph random_graph(Rng& rng, uint32_t vertices, double edge_probability,
                                  uint32_t item_count, uint32_t max_db, bool dag = false) {
  GraphBuilder builder;
  for (uint32_t v = 0; v < vertices; ++v) {
    std::vector<std::vector<std::string>> db;
    const uint64_t size = 1 + rng.below(max_db);
    for (uint64_t t = 0; t < size; ++t) {
      std::vector<std::string> items;
      while (items.empty()) {
        for (uint32_t i = 0; i < item_count; ++i) {
          if (rng.uniform() < 0.5) items.push_back(std::string(1, static_cast<char>('a' + i)));
        }
      }
      db.push_back(std::move(items));
    }
    builder.add_vertex("v" + std::to_string(v), std::move(db));
  }
  for (uint32_t u = 0; u < vertices; ++u) {
    for (uint32_t v = 0; v < vertices; ++v) {
      if (u == v || (dag && u > v)) continue;
      if (rng.uniform() < edge_probability) {
        builder.add_edge("v" + std::to_string(u), "v" + std::to_string(v));
      }
    }
  }
  return builder.build();
}

/// Random directed tree (each vertex > 0 gets one parent with a smaller id).
inline DatabaseGraph random_tree(Rng& rng, uint32_t vertices) {
  GraphBuilder builder;
  for (uint32_t v = 0; v < vertices; ++v) builder.add_vertex("v" + std::to_string(v), {{"x"}});
  for (uint32_t v = 1; v < vertices; ++v) {
    builder.add_edge("v" + std::to_string(rng.below(v)), "v" + std::to_string(v));
  }
  return builder.build();
}

/// Calls `visit` for every sequence of `length` vertex ids in [0, n).
inline void for_each_tuple(uint32_t n, size_t length,
                           const std::function<void(const std::vector<VertexId>&)>& visit) {
  std::vector<VertexId> t(length, 0);
  while (true) {
    visit(t);
    size_t q = length;
    while (q > 0) {
      --q;
      if (++t[q] < n) break;
      t[q] = 0;
      if (q == 0) return;
    }
  }
}

/// Number of length-q walks from v, by enumerating every vertex tuple.
inline uint64_t brute_walk_count(const DatabaseGraph& g, VertexId v, uint32_t q) {
  if (q == 0) return 1;
  uint64_t count = 0;
  for_each_tuple(static_cast<uint32_t>(g.vertex_count()), q, [&](const std::vector<VertexId>& t) {
    VertexId prev = v;
    for (VertexId next : t) {
      if (!g.has_edge(prev, next)) return;
      prev = next;
    }
    ++count;
  });
  return count;
}

/// All simple length-l paths, by filtering every vertex tuple; sorted.
inline std::vector<std::vector<VertexId>> brute_simple_paths(const DatabaseGraph& g, uint32_t l) {
  std::vector<std::vector<VertexId>> paths;
  for_each_tuple(static_cast<uint32_t>(g.vertex_count()), l + 1,
                 [&](const std::vector<VertexId>& t) {
                   for (size_t i = 0; i + 1 < t.size(); ++i) {
                     if (!g.has_edge(t[i], t[i + 1])) return;
                   }
                   auto sorted = t;
                   std::sort(sorted.begin(), sorted.end());
                   if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return;
                   paths.push_back(t);
                 });
  std::sort(paths.begin(), paths.end());
  return paths;
}

/// Every record of D_l as materialized itemsets.
inline std::vector<std::vector<Itemset>> brute_records(const DatabaseGraph& g, uint32_t l) {
  std::vector<std::vector<Itemset>> records;
  for (const auto& path : brute_simple_paths(g, l)) {
    std::vector<size_t> idx(path.size(), 0);
    while (true) {
      std::vector<Itemset> rec;
      for (size_t q = 0; q < path.size(); ++q) rec.push_back(g.database(path[q])[idx[q]].items);
      records.push_back(std::move(rec));
      size_t q = path.size();
      bool done = false;
      while (q > 0) {
        --q;
        if (++idx[q] < g.database(path[q]).size()) break;
        idx[q] = 0;
        if (q == 0) done = true;
      }
      if (done) break;
    }
  }
  return records;
}

inline bool brute_contains(const std::vector<Itemset>& record, const Pattern& p) {
  for (size_t q = 0; q < record.size(); ++q) {
    for (ItemId i : p.itemsets[q]) {
      if (std::find(record[q].begin(), record[q].end(), i) == record[q].end()) return false;
    }
  }
  return true;
}

inline uint64_t brute_support(const std::vector<std::vector<Itemset>>& records, const Pattern& p) {
  uint64_t n = 0;
  for (const auto& r : records) n += brute_contains(r, p) ? 1 : 0;
  return n;
}

/// Every non-empty subset of [0, item_count) as a sorted itemset.
inline std::vector<Itemset> all_itemsets(uint32_t item_count) {
  std::vector<Itemset> sets;
  for (uint32_t mask = 1; mask < (1u << item_count); ++mask) {
    Itemset s;
    for (uint32_t i = 0; i < item_count; ++i) {
      if (mask & (1u << i)) s.push_back(i);
    }
    sets.push_back(std::move(s));
  }
  return sets;
}

struct ScoredPattern {
  Pattern pattern;
  uint64_t support;
};

/// Scores the whole pattern lattice against D_l and sorts by (support desc,
/// canonical order). Patterns with zero support are dropped.
inline std::vector<ScoredPattern> brute_ranking(const DatabaseGraph& g, uint32_t l) {
  const auto records = brute_records(g, l);
  const auto sets = all_itemsets(static_cast<uint32_t>(g.item_count()));
  std::vector<ScoredPattern> scored;
  std::vector<size_t> idx(l + 1, 0);
  while (true) {
    Pattern p;
    for (size_t q = 0; q <= l; ++q) p.itemsets.push_back(sets[idx[q]]);
    const uint64_t s = brute_support(records, p);
    if (s > 0) scored.push_back({std::move(p), s});
    size_t q = l + 1;
    bool done = false;
    while (q > 0) {
      --q;
      if (++idx[q] < sets.size()) break;
      idx[q] = 0;
      if (q == 0) done = true;
    }
    if (done) break;
  }
  std::sort(scored.begin(), scored.end(), [](const ScoredPattern& a, const ScoredPattern& b) {
    if (a.support != b.support) return a.support > b.support;
    return canonical_compare(a.pattern, b.pattern) < 0;
  });
  return scored;
}

}  // namespace dgsp::testing
