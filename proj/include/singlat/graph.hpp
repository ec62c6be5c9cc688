#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "singlat/linalg.hpp"
#include "singlat/numeric.hpp"

namespace singlat {

// One irreducible exceptional curve: id token, self-intersection E^2 and
// arithmetic genus p_a(E). Nodes and cusps of a component are absorbed into
// the genus weight; loops are never represented as edges.
struct Vertex {
  std::string id;
  Int self_int;
  Int genus;
};

// One record per unordered vertex pair, carrying the total intersection
// number E_a . E_b.
struct Edge {
  int a;
  int b;
  Int mult;
};

// Vertex-indexed exact coefficient vectors, aligned with the owning graph's
// vertex order.
using Cycle = std::vector<Int>;
using RationalCycle = std::vector<Rat>;

// Weighted dual graph of an exceptional divisor. Immutable after
// construction; blow-ups and contractions build new graphs.
class ResolutionGraph {
 public:
  ResolutionGraph() = default;

  ResolutionGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
      : vertices_(std::move(vertices)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (vertices_[i].genus < 0)
        throw error("vertex '" + vertices_[i].id + "': genus must be >= 0");
      if (!index_.emplace(vertices_[i].id, static_cast<int>(i)).second)
        throw error("duplicate vertex id '" + vertices_[i].id + "'");
    }
    for (auto& e : edges) {
      if (e.a == e.b)
        throw error("self-intersections are vertex weights, not edges ('" +
                    vertices_.at(e.a).id + "')");
      if (e.mult < 1) throw error("edge multiplicity must be >= 1");
      if (e.a > e.b) std::swap(e.a, e.b);
      check_index(e.a);
      check_index(e.b);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
      return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    for (std::size_t i = 1; i < edges.size(); ++i)
      if (edges[i - 1].a == edges[i].a && edges[i - 1].b == edges[i].b)
        throw error("duplicate edge " + vertices_[edges[i].a].id + " -- " +
                    vertices_[edges[i].b].id);
    edges_ = std::move(edges);
    adjacency_.assign(vertices_.size(), {});
    for (const auto& e : edges_) {
      adjacency_[e.a].emplace_back(e.b, e.mult);
      adjacency_[e.b].emplace_back(e.a, e.mult);
    }
  }

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(int i) const { return vertices_.at(i); }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<std::vector<std::pair<int, Int>>>& adjacency() const {
    return adjacency_;
  }

  bool has_vertex(const std::string& id) const { return index_.count(id) > 0; }

  int index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw error("unknown vertex '" + id + "'");
    return it->second;
  }

  // E_i . E_j; the self-intersection when i == j.
  Int pairing(int i, int j) const {
    if (i == j) return vertices_.at(i).self_int;
    for (const auto& [k, m] : adjacency_.at(i))
      if (k == j) return m;
    return 0;
  }

  IntMatrix intersection_matrix() const {
    const std::size_t n = size();
    IntMatrix m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = vertices_[i].self_int;
    for (const auto& e : edges_) {
      m[e.a][e.b] = e.mult;
      m[e.b][e.a] = e.mult;
    }
    return m;
  }

  bool connected() const {
    if (vertices_.empty()) return true;
    std::vector<char> seen(size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& [w, m] : adjacency_[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    return reached == size();
  }

  bool same_labelled_graph(const ResolutionGraph& other) const {
    if (size() != other.size() || edges_.size() != other.edges_.size())
      return false;
    for (std::size_t i = 0; i < size(); ++i) {
      const auto& a = vertices_[i];
      if (!other.has_vertex(a.id)) return false;
      const auto& b = other.vertex(other.index_of(a.id));
      if (a.self_int != b.self_int || a.genus != b.genus) return false;
    }
    for (const auto& e : edges_) {
      int oa = other.index_of(vertices_[e.a].id);
      int ob = other.index_of(vertices_[e.b].id);
      if (other.pairing(oa, ob) != e.mult) return false;
    }
    return true;
  }

 private:
  void check_index(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= vertices_.size())
      throw error("edge refers to vertex index out of range");
  }

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, int> index_;
  std::vector<std::vector<std::pair<int, Int>>> adjacency_;
};

// Free helper: build a graph from id-named edge triples.
inline ResolutionGraph make_graph(
    std::vector<Vertex> vertices,
    const std::vector<std::tuple<std::string, std::string, Int>>& named_edges) {
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    idx.emplace(vertices[i].id, static_cast<int>(i));
  std::vector<Edge> edges;
  for (const auto& [a, b, mult] : named_edges) {
    auto ia = idx.find(a);
    auto ib = idx.find(b);
    if (ia == idx.end()) throw error("unknown vertex '" + a + "'");
    if (ib == idx.end()) throw error("unknown vertex '" + b + "'");
    edges.push_back({ia->second, ib->second, mult});
  }
  return ResolutionGraph(std::move(vertices), std::move(edges));
}

// A curve configuration carrying per-component fibre multiplicities. The
// full fibre class is sum(mult_i * C_i).
struct FibreGraph {
  ResolutionGraph graph;
  std::vector<Int> mult;

  FibreGraph() = default;
  FibreGraph(ResolutionGraph g, std::vector<Int> m)
      : graph(std::move(g)), mult(std::move(m)) {
    if (mult.size() != graph.size())
      throw error("fibre multiplicities must cover every vertex");
    for (const auto& n : mult)
      if (n < 1) throw error("fibre multiplicities must be >= 1");
  }

  Cycle fibre_class() const { return mult; }
};

inline void check_cycle(const ResolutionGraph& g, std::size_t cycle_size) {
  if (cycle_size != g.size())
    throw error("cycle is not defined on this graph's vertex set");
}

inline bool is_positive(const Cycle& c) {
  bool some = false;
  for (const auto& x : c) {
    if (x < 0) return false;
    if (x > 0) some = true;
  }
  return some;
}

inline bool is_zero(const Cycle& c) {
  for (const auto& x : c)
    if (x != 0) return false;
  return true;
}

inline Cycle add(const Cycle& a, const Cycle& b) {
  Cycle r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Cycle unit_cycle(std::size_t n, int i) {
  Cycle c(n, 0);
  c[i] = 1;
  return c;
}

inline RationalCycle to_rational(const Cycle& c) {
  RationalCycle r;
  r.reserve(c.size());
  for (const auto& x : c) r.emplace_back(x);
  return r;
}

}  // namespace singlat
