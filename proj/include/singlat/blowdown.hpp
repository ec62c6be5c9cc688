#pragma once

#include <string>
#include <utility>
#include <vector>

#include "singlat/graph.hpp"
#include "singlat/lattice.hpp"

namespace singlat {

struct BlowUpResult {
  ResolutionGraph graph;
  std::string new_vertex;
};

inline std::string fresh_vertex_id(const ResolutionGraph& g) {
  for (int k = 1;; ++k) {
    std::string candidate = "b" + std::to_string(k);
    if (!g.has_vertex(candidate)) return candidate;
  }
}

// Blow up a smooth point of E_v: new (-1)-curve meeting E_v once, and the
// strict transform of E_v drops its self-intersection by one.
inline BlowUpResult blow_up_smooth(const ResolutionGraph& g,
                                   const std::string& v,
                                   std::string new_id = "") {
  int iv = g.index_of(v);
  if (new_id.empty()) new_id = fresh_vertex_id(g);
  if (g.has_vertex(new_id))
    throw error("vertex id '" + new_id + "' already in use");
  std::vector<Vertex> vs = g.vertices();
  vs[iv].self_int -= 1;
  vs.push_back({new_id, -1, 0});
  std::vector<Edge> es = g.edges();
  es.push_back({iv, static_cast<int>(vs.size()) - 1, 1});
  return {ResolutionGraph(std::move(vs), std::move(es)), new_id};
}

// Blow up one intersection point of E_a and E_b: both strict transforms
// drop their self-intersection, their mutual intersection number drops by
// one, and the new (-1)-curve meets each once.
inline BlowUpResult blow_up_edge(const ResolutionGraph& g,
                                 const std::string& a, const std::string& b,
                                 std::string new_id = "") {
  int ia = g.index_of(a);
  int ib = g.index_of(b);
  if (g.pairing(ia, ib) < 1)
    throw error("no edge between '" + a + "' and '" + b + "'");
  if (new_id.empty()) new_id = fresh_vertex_id(g);
  if (g.has_vertex(new_id))
    throw error("vertex id '" + new_id + "' already in use");
  std::vector<Vertex> vs = g.vertices();
  vs[ia].self_int -= 1;
  vs[ib].self_int -= 1;
  vs.push_back({new_id, -1, 0});
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    if ((e.a == std::min(ia, ib)) && (e.b == std::max(ia, ib))) {
      if (e.mult > 1) es.push_back({e.a, e.b, e.mult - 1});
    } else {
      es.push_back(e);
    }
  }
  int in = static_cast<int>(vs.size()) - 1;
  es.push_back({ia, in, 1});
  es.push_back({ib, in, 1});
  return {ResolutionGraph(std::move(vs), std::move(es)), new_id};
}

// Blow down a rational (-1)-curve at lattice level: neighbours i, j with
// m_i = E_i . E_v gain m_i * m_j mutual intersection, m_i^2 self-intersection
// and m_i (m_i - 1)/2 genus. Contracting the last vertex of a graph would
// leave nothing, which is the resolution of a smooth point; we represent it
// as the empty graph.
inline ResolutionGraph contract(const ResolutionGraph& g,
                                const std::string& v) {
  int iv = g.index_of(v);
  const auto& vert = g.vertex(iv);
  if (vert.self_int != -1 || vert.genus != 0)
    throw error("contract: '" + v + "' is not a rational (-1)-curve");

  std::vector<int> old_to_new(g.size(), -1);
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (static_cast<int>(i) == iv) continue;
    old_to_new[i] = static_cast<int>(vs.size());
    vs.push_back(g.vertex(static_cast<int>(i)));
  }
  const auto& nbrs = g.adjacency()[iv];
  for (const auto& [i, m] : nbrs) {
    vs[old_to_new[i]].self_int += m * m;
    vs[old_to_new[i]].genus += m * (m - 1) / 2;
  }
  // Accumulate surviving edges, then the pairwise corrections.
  std::map<std::pair<int, int>, Int> mult;
  for (const auto& e : g.edges()) {
    if (e.a == iv || e.b == iv) continue;
    mult[{old_to_new[e.a], old_to_new[e.b]}] += e.mult;
  }
  for (std::size_t x = 0; x < nbrs.size(); ++x)
    for (std::size_t y = x + 1; y < nbrs.size(); ++y) {
      int i = old_to_new[nbrs[x].first];
      int j = old_to_new[nbrs[y].first];
      mult[{std::min(i, j), std::max(i, j)}] += nbrs[x].second * nbrs[y].second;
    }
  std::vector<Edge> es;
  for (const auto& [key, m] : mult) es.push_back({key.first, key.second, m});
  return ResolutionGraph(std::move(vs), std::move(es));
}

inline bool is_contractible_vertex(const Vertex& v) {
  return v.self_int == -1 && v.genus == 0;
}

// Repeatedly contract rational (-1)-curves. A single remaining vertex is
// never contracted (the graph stays nonempty), matching the convention that
// the minimal model of an iterated point blow-up is one (-1)-curve.
inline ResolutionGraph minimal_model(const ResolutionGraph& g) {
  if (!g.connected()) throw error("minimal_model requires a connected graph");
  ResolutionGraph cur = g;
  bool progress = true;
  while (progress && cur.size() > 1) {
    progress = false;
    for (const auto& v : cur.vertices())
      if (is_contractible_vertex(v)) {
        cur = contract(cur, v.id);
        progress = true;
        break;
      }
  }
  return cur;
}

inline bool is_minimal_graph(const ResolutionGraph& g) {
  if (g.size() <= 1) return true;
  for (const auto& v : g.vertices())
    if (is_contractible_vertex(v)) return false;
  return true;
}

}  // namespace singlat
