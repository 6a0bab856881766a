#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sidonlab/errors.hpp"
#include "sidonlab/point_set.hpp"

namespace sidonlab {

// An edge is a sorted triple of vertex indices.
using Edge = std::array<int, 3>;

// A 3-uniform hypergraph on vertices 0..n-1 with lexicographically sorted,
// pairwise distinct edges. Vertices may optionally carry rational labels
// (the point values when the system is an A.P.-hypergraph).
class TripleSystem {
 public:
  TripleSystem(int vertex_count, std::vector<Edge> edges,
               std::vector<Rational> vertex_labels = {})
      : vertex_count_(vertex_count),
        edges_(std::move(edges)),
        labels_(std::move(vertex_labels)) {
    if (vertex_count_ < 0)
      throw std::invalid_argument("negative vertex count");
    if (!labels_.empty() &&
        labels_.size() != static_cast<std::size_t>(vertex_count_))
      throw std::invalid_argument("label count must match vertex count");
    for (Edge& e : edges_) {
      std::sort(e.begin(), e.end());
      if (e[0] == e[1] || e[1] == e[2])
        throw std::invalid_argument("edge with repeated vertex");
      if (e[0] < 0 || e[2] >= vertex_count_)
        throw std::invalid_argument("edge vertex out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw std::invalid_argument("duplicate edge");
  }

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<Rational>& labels() const { return labels_; }

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
  std::vector<Rational> labels_;
};

// H(A): vertex i = i-th smallest point, edges = index triples i < j < k with
// a_i + a_k = 2 a_j (three-term arithmetic progressions). O(n^2 log n).
inline TripleSystem build_ap_hypergraph(const PointSet& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) {
      Rational mid = (a[i] + a[k]) / 2;
      if (auto j = a.index_of(mid); j.has_value()) {
        // a_i < mid < a_k because the values are distinct, so i < j < k and
        // the progression is nondegenerate.
        edges.push_back(Edge{i, static_cast<int>(*j), k});
      }
    }
  return TripleSystem(n, std::move(edges), a.values());
}

struct MidpointReport {
  std::vector<int> midpoint_of_edge;  // middle vertex index, per edge
  bool injective = true;              // no two edges share their midpoint
  bool avoids_extremes = true;        // no midpoint is the min or max vertex
};

// The edge -> middle-vertex map. Requires labels, and every edge must be a
// genuine labeled 3-term progression. For H(A) with A weak Sidon the map is
// injective and avoids both extremes (which forces m <= n - 2).
inline MidpointReport midpoint_map(const TripleSystem& h) {
  MidpointReport rep;
  if (h.edge_count() == 0) return rep;  // vacuously injective
  if (!h.has_labels())
    throw std::invalid_argument("midpoint_map requires vertex labels");
  const auto& lab = h.labels();
  std::vector<char> seen(static_cast<std::size_t>(h.vertex_count()), 0);
  for (const Edge& e : h.edges()) {
    if (lab[e[0]] + lab[e[2]] != 2 * lab[e[1]])
      throw std::invalid_argument("edge is not a labeled 3-term progression");
    rep.midpoint_of_edge.push_back(e[1]);
    if (seen[e[1]]) rep.injective = false;
    seen[e[1]] = 1;
    if (e[1] == 0 || e[1] == h.vertex_count() - 1) rep.avoids_extremes = false;
  }
  return rep;
}

// Linear: every two distinct edges meet in at most one vertex. On failure
// returns the first offending edge pair in index order.
inline std::pair<bool, std::optional<std::pair<Edge, Edge>>> is_linear(
    const TripleSystem& h) {
  const auto& edges = h.edges();
  for (std::size_t p = 0; p < edges.size(); ++p)
    for (std::size_t q = p + 1; q < edges.size(); ++q) {
      int common = 0;
      for (int u : edges[p])
        for (int v : edges[q]) common += u == v;
      if (common >= 2) return {false, std::make_pair(edges[p], edges[q])};
    }
  return {true, std::nullopt};
}

// The 7-vertex, 5-edge configuration excluded from A.P.-hypergraphs of
// (4,5)-sets: a hub vertex lying on three edges plus two edges connecting
// their free ends crosswise. Degree multiset {3, 2, 2, 2, 2, 2, 2}.
inline const TripleSystem& f7_pattern() {
  static const TripleSystem f7(
      7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {2, 4, 6}});
  return f7;
}

struct F7Embedding {
  std::array<int, 7> vertex_image;       // F7 vertex i -> host vertex
  std::array<std::size_t, 5> edge_list;  // indices of the five host edges
};

namespace detail {

// Tries to match the five host edges `sub` (indices into h.edges()) against
// the F7 pattern. The candidate already has 7 vertices with degree multiset
// {3,2,2,2,2,2,2}; anchor the degree-3 vertex as the hub and try the at most
// 3! * 2^3 assignments of the hub edges, then check the two cross edges.
inline std::optional<F7Embedding> match_f7(
    const TripleSystem& h, const std::array<std::size_t, 5>& sub,
    int hub_vertex) {
  const auto& edges = h.edges();
  std::array<std::size_t, 3> hub_edges{};
  std::array<std::size_t, 2> cross_edges{};
  int nh = 0, nc = 0;
  for (std::size_t e : sub) {
    bool at_hub = std::find(edges[e].begin(), edges[e].end(), hub_vertex) !=
                  edges[e].end();
    if (at_hub) {
      if (nh == 3) return std::nullopt;
      hub_edges[nh++] = e;
    } else {
      if (nc == 2) return std::nullopt;
      cross_edges[nc++] = e;
    }
  }
  if (nh != 3) return std::nullopt;
  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end());
  do {
    for (int flips = 0; flips < 8; ++flips) {
      // phi maps F7 vertices 0..6; hub edge t covers {0, 2t+1, 2t+2}.
      std::array<int, 7> phi{};
      phi[0] = hub_vertex;
      for (int t = 0; t < 3; ++t) {
        const Edge& e = edges[hub_edges[order[t]]];
        std::array<int, 2> free{};
        int nf = 0;
        for (int v : e)
          if (v != hub_vertex) free[nf++] = v;
        bool swap = flips >> t & 1;
        phi[2 * t + 1] = free[swap ? 1 : 0];
        phi[2 * t + 2] = free[swap ? 0 : 1];
      }
      Edge c1{phi[1], phi[3], phi[5]};
      Edge c2{phi[2], phi[4], phi[6]};
      std::sort(c1.begin(), c1.end());
      std::sort(c2.begin(), c2.end());
      const Edge& e1 = edges[cross_edges[0]];
      const Edge& e2 = edges[cross_edges[1]];
      if ((c1 == e1 && c2 == e2) || (c1 == e2 && c2 == e1)) {
        F7Embedding emb;
        emb.vertex_image = phi;
        emb.edge_list = {hub_edges[order[0]], hub_edges[order[1]],
                         hub_edges[order[2]], cross_edges[0], cross_edges[1]};
        return emb;
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

}  // namespace detail

// Searches for five edges of h spanning exactly 7 vertices that form a copy
// of F7 (as a subhypergraph: extra host edges elsewhere are irrelevant).
// Enumeration over 5-edge subsets is practical only for modest m, so the
// edge count is capped (throws std::length_error beyond the cap); the
// A.P.-hypergraphs this library builds satisfy m <= n - 2, far below it.
inline std::pair<bool, std::optional<F7Embedding>> contains_f7(
    const TripleSystem& h, int edge_cap = 64) {
  const int m = h.edge_count();
  if (m > edge_cap)
    throw std::length_error("contains_f7: edge count " + std::to_string(m) +
                            " exceeds cap " + std::to_string(edge_cap));
  if (h.vertex_count() < 7 || m < 5) return {false, std::nullopt};
  const auto& edges = h.edges();

  // Incremental sorted vertex unions, pruned at 7 vertices.
  using VSet = std::vector<int>;
  auto merge_edge = [&](const VSet& base, const Edge& e) {
    VSet out;
    out.reserve(base.size() + 3);
    std::set_union(base.begin(), base.end(), e.begin(), e.end(),
                   std::back_inserter(out));
    return out;
  };

  std::array<std::size_t, 5> pick{};
  VSet levels[6];
  auto rec = [&](auto&& self, int depth, std::size_t start) ->
      std::optional<F7Embedding> {
        if (depth == 5) {
          if (levels[5].size() != 7) return std::nullopt;
          // Degree multiset filter: one vertex of degree 3, six of degree 2.
          int deg3 = -1, twos = 0;
          for (int v : levels[5]) {
            int d = 0;
            for (std::size_t e : pick)
              d += std::find(edges[e].begin(), edges[e].end(), v) !=
                   edges[e].end();
            if (d == 3 && deg3 < 0)
              deg3 = v;
            else if (d == 2)
              ++twos;
            else
              return std::nullopt;
          }
          if (twos != 6) return std::nullopt;
          return detail::match_f7(h, pick, deg3);
        }
        for (std::size_t e = start; e < edges.size(); ++e) {
          VSet merged = merge_edge(levels[depth], edges[e]);
          if (merged.size() > 7) continue;
          // Not enough edges left or too few fresh vertices reachable.
          if (edges.size() - e < static_cast<std::size_t>(5 - depth)) break;
          pick[depth] = e;
          levels[depth + 1] = std::move(merged);
          if (auto r = self(self, depth + 1, e + 1); r.has_value()) return r;
        }
        return std::nullopt;
      };
  auto emb = rec(rec, 0, 0);
  if (emb.has_value()) return {true, emb};
  return {false, std::nullopt};
}

struct EdgeBoundReport {
  int vertex_count = 0;
  int edge_count = 0;
  bool holds = false;  // m <= n - 2
};

// The structural edge bound m <= n - 2 satisfied by every A.P.-hypergraph of
// a weak Sidon set with at least two points. Requires n >= 2.
inline EdgeBoundReport edge_bound_report(const TripleSystem& h) {
  if (h.vertex_count() < 2)
    throw std::invalid_argument("edge bound requires at least 2 vertices");
  return EdgeBoundReport{h.vertex_count(), h.edge_count(),
                         h.edge_count() <= h.vertex_count() - 2};
}

}  // namespace sidonlab
