#pragma once

// Seeded random generators for the property tests.

#include <algorithm>
#include <random>
#include <vector>

#include "chargraph/graph.hpp"
#include "chargraph/shapes.hpp"

namespace gen {

using chargraph::GraphExpr;
using Rng = std::mt19937_64;

inline unsigned uniform(Rng& rng, unsigned lo, unsigned hi) {
  return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

/// Leaf count of an expression (its vertex count after evaluation).
inline unsigned leaf_size(const GraphExpr& e) {
  switch (e.kind) {
    case GraphExpr::Kind::complete:
    case GraphExpr::Kind::cycle: return e.n;
    default: {
      unsigned s = 0;
      for (const auto& c : e.children) s += leaf_size(c);
      return s;
    }
  }
}

/// Random shape with at most `budget` vertices and nesting depth <= depth.
/// Unions and joins always get two or more operands.
inline GraphExpr shape(Rng& rng, unsigned budget, unsigned depth) {
  const bool leaf = depth == 0 || budget < 2 || uniform(rng, 0, 2) == 0;
  if (leaf) {
    if (budget >= 3 && uniform(rng, 0, 2) == 0) return GraphExpr::cycle(uniform(rng, 3, budget));
    return GraphExpr::complete(uniform(rng, 1, std::max(1u, budget)));
  }
  switch (uniform(rng, 0, 2)) {
    case 0: return GraphExpr::complement_of(shape(rng, budget, depth - 1));
    default: {
      const bool is_join = uniform(rng, 0, 1) == 1;
      // Split the budget into `count` positive shares.
      const unsigned count = uniform(rng, 2, std::min(3u, budget));
      std::vector<unsigned> shares(count, 1);
      for (unsigned extra = budget - count; extra > 0; --extra) ++shares[uniform(rng, 0, count - 1)];
      std::vector<GraphExpr> parts;
      for (unsigned share : shares) parts.push_back(shape(rng, share, depth - 1));
      return is_join ? GraphExpr::join_of(std::move(parts)) : GraphExpr::union_of(std::move(parts));
    }
  }
}

/// Small degree set whose degrees are products of primes drawn from `pool`.
inline chargraph::DegreeSet degree_set(Rng& rng, const std::vector<std::uint64_t>& pool) {
  std::vector<std::uint64_t> degrees{1};
  const unsigned count = uniform(rng, 0, 4);
  for (unsigned i = 0; i < count; ++i) {
    std::uint64_t d = 1;
    const unsigned factors = uniform(rng, 1, 3);
    for (unsigned k = 0; k < factors; ++k) d *= pool[uniform(rng, 0, static_cast<unsigned>(pool.size() - 1))];
    degrees.push_back(d);
  }
  return chargraph::DegreeSet(degrees);
}

/// Random graph on the given prime labels with edge probability ~1/2.
inline chargraph::CharGraph graph(Rng& rng, const std::vector<std::uint64_t>& labels) {
  std::vector<chargraph::Edge> edges;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (uniform(rng, 0, 1)) edges.push_back(chargraph::make_edge(labels[i], labels[j]));
  return chargraph::CharGraph(labels, edges);
}

/// The same graph with its vertices sent through a random bijection onto
/// `target` labels.
inline chargraph::CharGraph relabel(Rng& rng, const chargraph::CharGraph& g,
                                    std::vector<std::uint64_t> target) {
  std::shuffle(target.begin(), target.end(), rng);
  std::vector<chargraph::Edge> edges;
  auto image = [&](std::uint64_t v) { return target[g.index_of(v)]; };
  for (const auto& e : g.edges()) edges.push_back(chargraph::make_edge(image(e.a), image(e.b)));
  return chargraph::CharGraph(target, edges);
}

}  // namespace gen
