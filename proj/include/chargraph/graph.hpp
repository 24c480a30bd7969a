#pragma once

// Character graphs on prime labels, degree sets, and the graph predicates
// used to reason about them.

#include <algorithm>
#include <array>
#include <iterator>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chargraph/arith.hpp"

namespace chargraph {

using Prime = u64;
using PrimeSet = std::vector<Prime>;  // sorted, unique

struct Edge {
  Prime a;
  Prime b;  // a < b

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Prime x, Prime y) {
  if (x == y) throw std::invalid_argument("edge: self-loop on " + std::to_string(x));
  return x < y ? Edge{x, y} : Edge{y, x};
}

/// Largest graph the exhaustive clique and isomorphism searches accept.
inline constexpr std::size_t kBruteForceBound = 12;

/// A finite simple graph whose vertices are primes. Immutable after
/// construction; vertices and edges are kept sorted.
class CharGraph {
 public:
  CharGraph() = default;

  CharGraph(PrimeSet vertices, std::vector<Edge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()),
                    vertices_.end());
    for (Prime v : vertices_) {
      if (!is_prime(v)) {
        throw std::invalid_argument("graph: vertex " + std::to_string(v) +
                                    " is not prime");
      }
    }
    for (Edge& e : edges_) {
      e = make_edge(e.a, e.b);
      if (!has_vertex(e.a) || !has_vertex(e.b)) {
        throw std::invalid_argument("graph: edge endpoint not a vertex");
      }
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  const PrimeSet& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t order() const { return vertices_.size(); }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return vertices_.empty(); }

  bool has_vertex(Prime v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  bool adjacent(Prime x, Prime y) const {
    if (x == y) return false;
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(x, y));
  }

  std::size_t degree(Prime v) const {
    return static_cast<std::size_t>(std::count_if(
        edges_.begin(), edges_.end(),
        [v](const Edge& e) { return e.a == v || e.b == v; }));
  }

  PrimeSet neighbors(Prime v) const {
    PrimeSet out;
    for (const Edge& e : edges_) {
      if (e.a == v) out.push_back(e.b);
      if (e.b == v) out.push_back(e.a);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t index_of(Prime v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) {
      throw std::invalid_argument("graph: unknown vertex " + std::to_string(v));
    }
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  /// Dense adjacency over vertex indices.
  std::vector<std::vector<bool>> adjacency_matrix() const {
    std::vector<std::vector<bool>> m(order(), std::vector<bool>(order(), false));
    for (const Edge& e : edges_) {
      const auto i = index_of(e.a), j = index_of(e.b);
      m[i][j] = m[j][i] = true;
    }
    return m;
  }

  friend bool operator==(const CharGraph&, const CharGraph&) = default;

 private:
  PrimeSet vertices_;
  std::vector<Edge> edges_;
};

inline CharGraph complete_graph(const PrimeSet& vs) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) edges.push_back(make_edge(vs[i], vs[j]));
  return CharGraph(vs, std::move(edges));
}

inline CharGraph edgeless_graph(const PrimeSet& vs) { return CharGraph(vs, {}); }

/// A set of character degrees; always contains 1.
class DegreeSet {
 public:
  DegreeSet() : degrees_{1} {}

  explicit DegreeSet(std::vector<u64> degrees) : degrees_(std::move(degrees)) {
    std::sort(degrees_.begin(), degrees_.end());
    degrees_.erase(std::unique(degrees_.begin(), degrees_.end()), degrees_.end());
    if (degrees_.empty() || degrees_.front() != 1) {
      if (!degrees_.empty() && degrees_.front() == 0) {
        throw std::invalid_argument("degree set: degrees must be positive");
      }
      throw std::invalid_argument("degree set: must contain 1");
    }
  }

  const std::vector<u64>& degrees() const { return degrees_; }
  std::size_t size() const { return degrees_.size(); }
  bool contains(u64 d) const {
    return std::binary_search(degrees_.begin(), degrees_.end(), d);
  }

  /// rho: primes dividing some degree.
  PrimeSet primes() const {
    PrimeSet out;
    for (u64 d : degrees_) out = merge_primes(out, prime_divisors(d));
    return out;
  }

  friend bool operator==(const DegreeSet&, const DegreeSet&) = default;

 private:
  std::vector<u64> degrees_;
};

/// Product set {x*y : x in a, y in b}.
inline DegreeSet degree_product(const DegreeSet& a, const DegreeSet& b) {
  std::vector<u64> out;
  out.reserve(a.size() * b.size());
  for (u64 x : a.degrees())
    for (u64 y : b.degrees()) out.push_back(checked_mul(x, y));
  return DegreeSet(std::move(out));
}

/// Delta(G): vertices are primes dividing some degree, p ~ q when pq divides
/// some degree.
inline CharGraph graph_from_cd(const DegreeSet& cd) {
  PrimeSet vertices;
  std::vector<Edge> edges;
  for (u64 d : cd.degrees()) {
    const PrimeSet ps = prime_divisors(d);
    vertices = merge_primes(vertices, ps);
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j) edges.push_back({ps[i], ps[j]});
  }
  return CharGraph(std::move(vertices), std::move(edges));
}

namespace detail {

inline void require_disjoint(const CharGraph& a, const CharGraph& b,
                             const char* op) {
  PrimeSet common;
  std::set_intersection(a.vertices().begin(), a.vertices().end(),
                        b.vertices().begin(), b.vertices().end(),
                        std::back_inserter(common));
  if (!common.empty()) {
    throw std::invalid_argument(std::string(op) + ": vertex sets overlap at " +
                                std::to_string(common.front()));
  }
}

inline std::vector<Edge> concat_edges(const CharGraph& a, const CharGraph& b) {
  std::vector<Edge> edges = a.edges();
  edges.insert(edges.end(), b.edges().begin(), b.edges().end());
  return edges;
}

}  // namespace detail

inline CharGraph disjoint_union(const CharGraph& a, const CharGraph& b) {
  detail::require_disjoint(a, b, "disjoint_union");
  return CharGraph(merge_primes(a.vertices(), b.vertices()),
                   detail::concat_edges(a, b));
}

/// Disjoint union plus every edge between the two vertex sets.
inline CharGraph join(const CharGraph& a, const CharGraph& b) {
  detail::require_disjoint(a, b, "join");
  auto edges = detail::concat_edges(a, b);
  for (Prime x : a.vertices())
    for (Prime y : b.vertices()) edges.push_back(make_edge(x, y));
  return CharGraph(merge_primes(a.vertices(), b.vertices()), std::move(edges));
}

inline CharGraph complement(const CharGraph& g) {
  std::vector<Edge> edges;
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) edges.push_back({vs[i], vs[j]});
  return CharGraph(vs, std::move(edges));
}

inline CharGraph induced(const CharGraph& g, PrimeSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (Prime v : s) {
    if (!g.has_vertex(v)) {
      throw std::invalid_argument("induced: unknown vertex " + std::to_string(v));
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (std::binary_search(s.begin(), s.end(), e.a) &&
        std::binary_search(s.begin(), s.end(), e.b)) {
      edges.push_back(e);
    }
  }
  return CharGraph(std::move(s), std::move(edges));
}

/// Size of a maximum clique. Branch-and-bound; no size limit.
inline std::size_t max_clique_size(const CharGraph& g) {
  const auto adj = g.adjacency_matrix();
  const std::size_t n = g.order();
  std::size_t best = 0;
  std::vector<std::size_t> candidates(n);
  std::iota(candidates.begin(), candidates.end(), 0);
  std::function<void(std::size_t, const std::vector<std::size_t>&)> extend =
      [&](std::size_t depth, const std::vector<std::size_t>& cand) {
        best = std::max(best, depth);
        for (std::size_t k = 0; k < cand.size(); ++k) {
          if (depth + (cand.size() - k) <= best) return;
          std::vector<std::size_t> next;
          for (std::size_t l = k + 1; l < cand.size(); ++l)
            if (adj[cand[k]][cand[l]]) next.push_back(cand[l]);
          extend(depth + 1, next);
        }
      };
  extend(0, candidates);
  return best;
}

/// True iff g contains no K_n. Exhaustive, so bounded at kBruteForceBound
/// vertices.
inline bool is_kn_free(const CharGraph& g, std::size_t n) {
  if (n < 2) throw std::invalid_argument("is_kn_free: n must be >= 2");
  if (g.order() > kBruteForceBound) {
    throw std::length_error("is_kn_free: more than " +
                            std::to_string(kBruteForceBound) + " vertices");
  }
  return max_clique_size(g) < n;
}

/// Components ordered by their smallest vertex; each component sorted.
inline std::vector<PrimeSet> connected_components(const CharGraph& g) {
  const std::size_t n = g.order();
  const auto adj = g.adjacency_matrix();
  std::vector<bool> seen(n, false);
  std::vector<PrimeSet> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    PrimeSet comp;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      comp.push_back(g.vertices()[v]);
      for (std::size_t w = 0; w < n; ++w) {
        if (adj[v][w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

/// Breadth-first 2-colouring.
inline bool is_bipartite(const CharGraph& g) {
  const std::size_t n = g.order();
  const auto adj = g.adjacency_matrix();
  std::vector<int> colour(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::vector<std::size_t> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto v = queue[head];
      for (std::size_t w = 0; w < n; ++w) {
        if (!adj[v][w]) continue;
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

using Triple = std::array<Prime, 3>;

/// All 3-subsets that are independent in g, i.e. triangles of complement(g),
/// in lexicographic order.
inline std::vector<Triple> odd_cycle_triples(const CharGraph& g) {
  std::vector<Triple> out;
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (g.adjacent(vs[i], vs[j])) continue;
      for (std::size_t k = j + 1; k < vs.size(); ++k)
        if (!g.adjacent(vs[i], vs[k]) && !g.adjacent(vs[j], vs[k]))
          out.push_back({vs[i], vs[j], vs[k]});
    }
  return out;
}

inline bool has_triangle(const CharGraph& g) {
  return !odd_cycle_triples(complement(g)).empty();
}

using VertexMap = std::map<Prime, Prime>;

/// A label bijection a -> b preserving adjacency and non-adjacency, if any.
/// Backtracking over vertices of a, matching only equal-degree vertices and
/// checking adjacency against every vertex already placed.
inline std::optional<VertexMap> are_isomorphic(const CharGraph& a,
                                               const CharGraph& b) {
  if (a.order() > kBruteForceBound || b.order() > kBruteForceBound) {
    throw std::length_error("are_isomorphic: more than " +
                            std::to_string(kBruteForceBound) + " vertices");
  }
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  const std::size_t n = a.order();
  const auto adj_a = a.adjacency_matrix();
  const auto adj_b = b.adjacency_matrix();
  auto degrees = [n](const std::vector<std::vector<bool>>& adj) {
    std::vector<std::size_t> d(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i] += adj[i][j] ? 1 : 0;
    return d;
  };
  const auto deg_a = degrees(adj_a);
  const auto deg_b = degrees(adj_b);
  {
    auto sa = deg_a, sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || deg_a[i] != deg_b[j]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < i && consistent; ++k)
        consistent = adj_a[i][k] == adj_b[j][image[k]];
      if (!consistent) continue;
      image[i] = j;
      used[j] = true;
      if (place(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  VertexMap map;
  for (std::size_t i = 0; i < n; ++i) map[a.vertices()[i]] = b.vertices()[image[i]];
  return map;
}

/// Graphviz DOT, deterministic.
inline std::string to_dot(const CharGraph& g, const std::string& name = "Delta") {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  for (Prime v : g.vertices()) os << "  " << v << ";\n";
  for (const Edge& e : g.edges()) os << "  " << e.a << " -- " << e.b << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string format_set(const PrimeSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace chargraph
