#ifndef GOG_TESTS_FIXTURES_HPP
#define GOG_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "gog/realisation.hpp"

namespace gog::fixtures {

inline std::vector<Rat> rv(const std::vector<long>& v) {
  return std::vector<Rat>(v.begin(), v.end());
}

inline Mat mat(const std::vector<std::vector<long>>& values) {
  std::vector<std::vector<Rat>> r;
  for (const auto& row : values) r.emplace_back(row.begin(), row.end());
  return Mat::from_rows(r);
}

inline Hypergraph triangle_graph() {
  return Hypergraph({"v1", "v2", "v3"},
                    {{"e1", {"v1", "v2"}}, {"e2", {"v2", "v3"}}, {"e3", {"v1", "v3"}}});
}

/// The worked plane triangle at (0,0), (1,0), (0,1).
inline Instance triangle_instance() {
  BarJointInstance b;
  b.d = 2;
  b.coordinates = {{"v1", rv({0, 0})}, {"v2", rv({1, 0})}, {"v3", rv({0, 1})}};
  return Instance{triangle_graph(), b};
}

/// Two K5-minus-an-edge bodies glued along {v, w}; the classical spatial
/// counterexample. 18 = 3*8 - 6 edges yet one internal degree of freedom.
inline Instance banana_instance() {
  std::vector<std::string> verts{"v", "w", "a1", "a2", "a3", "b1", "b2", "b3"};
  std::vector<HyperEdge> edges;
  auto add_body = [&](const std::vector<std::string>& xs, const std::string& tag) {
    std::vector<std::string> five{"v", "w"};
    five.insert(five.end(), xs.begin(), xs.end());
    int k = 0;
    for (std::size_t i = 0; i < five.size(); ++i)
      for (std::size_t j = i + 1; j < five.size(); ++j) {
        if (five[i] == "v" && five[j] == "w") continue;
        edges.push_back({tag + std::to_string(k++), {five[i], five[j]}});
      }
  };
  add_body({"a1", "a2", "a3"}, "p");
  add_body({"b1", "b2", "b3"}, "q");
  BarJointInstance b;
  b.d = 3;
  b.coordinates = {{"v", rv({0, 0, 3})},   {"w", rv({1, 1, -2})}, {"a1", rv({2, 0, 0})},
                   {"a2", rv({0, 3, 1})},  {"a3", rv({1, -1, 0})}, {"b1", rv({-1, 2, 0})},
                   {"b2", rv({3, 2, 1})},  {"b3", rv({-2, -1, 1})}};
  return Instance{Hypergraph(verts, edges), b};
}

/// Unit square 4-cycle: one shear mechanism.
inline Instance square_instance() {
  Hypergraph h({"p1", "p2", "p3", "p4"}, {{"e1", {"p1", "p2"}},
                                          {"e2", {"p2", "p3"}},
                                          {"e3", {"p3", "p4"}},
                                          {"e4", {"p4", "p1"}}});
  BarJointInstance b;
  b.d = 2;
  b.coordinates = {
      {"p1", rv({0, 0})}, {"p2", rv({1, 0})}, {"p3", rv({1, 1})}, {"p4", rv({0, 1})}};
  return Instance{std::move(h), b};
}

/// Two triangles sharing one vertex: flexes by relative rotation there.
inline Instance shared_vertex_triangles_instance() {
  Hypergraph h({"s", "x1", "x2", "y1", "y2"},
               {{"e1", {"s", "x1"}},
                {"e2", {"s", "x2"}},
                {"e3", {"x1", "x2"}},
                {"e4", {"s", "y1"}},
                {"e5", {"s", "y2"}},
                {"e6", {"y1", "y2"}}});
  BarJointInstance b;
  b.d = 2;
  b.coordinates = {{"s", rv({0, 0})},
                   {"x1", rv({2, 0})},
                   {"x2", rv({1, 2})},
                   {"y1", rv({-2, 1})},
                   {"y2", rv({-1, -2})}};
  return Instance{std::move(h), b};
}

inline Instance single_bar_instance() {
  Hypergraph h({"a", "b"}, {{"e", {"a", "b"}}});
  BarJointInstance bj;
  bj.d = 2;
  bj.coordinates = {{"a", rv({0, 0})}, {"b", rv({1, 0})}};
  return Instance{std::move(h), bj};
}

inline Instance single_vertex_instance() {
  BarJointInstance bj;
  bj.d = 2;
  bj.coordinates = {{"a", rv({0, 0})}};
  return Instance{Hypergraph({"a"}, {}), bj};
}

/// Triangle of points and lines in the projective plane.
inline Instance projective_triangle_instance() {
  ProjectiveInstance p;
  p.n = 3;
  p.k = 1;
  p.l = 2;
  p.vertex_subspaces = {{"v1", mat({{1, 0, 0}})},
                        {"v2", mat({{0, 1, 0}})},
                        {"v3", mat({{0, 0, 1}})}};
  p.edge_subspaces = {{"e1", mat({{1, 0, 0}, {0, 1, 0}})},
                      {"e2", mat({{0, 1, 0}, {0, 0, 1}})},
                      {"e3", mat({{1, 0, 0}, {0, 0, 1}})}};
  return Instance{triangle_graph(), p};
}

/// Scene over the plane picture: a triangle of points whose edge lines
/// avoid the projection centre.
inline Instance scene_triangle_instance() {
  SceneInstance s;
  s.d = 2;
  s.points = {{"v1", rv({1, 0, 1})}, {"v2", rv({0, 1, 1})}, {"v3", rv({1, 1, 1})}};
  return Instance{triangle_graph(), s};
}

/// Triangle with its three side lines as a parallel-redrawing instance.
inline Instance parallel_triangle_instance() {
  ParallelInstance p;
  p.d = 2;
  p.points = {{"v1", rv({0, 0})}, {"v2", rv({1, 0})}, {"v3", rv({0, 1})}};
  p.hyperplanes = {{"e1", Hyperplane{rv({0, 1}), Rat(0)}},
                   {"e2", Hyperplane{rv({1, 1}), Rat(1)}},
                   {"e3", Hyperplane{rv({1, 0}), Rat(0)}}};
  return Instance{triangle_graph(), p};
}

inline Hypergraph k3_graph() { return triangle_graph(); }

inline Hypergraph c5_graph() {
  return Hypergraph({"1", "2", "3", "4", "5"}, {{"e1", {"1", "2"}},
                                                {"e2", {"2", "3"}},
                                                {"e3", {"3", "4"}},
                                                {"e4", {"4", "5"}},
                                                {"e5", {"5", "1"}}});
}

inline Hypergraph k4_minus_edge_graph() {
  return Hypergraph({"1", "2", "3", "4"}, {{"e1", {"1", "2"}},
                                           {"e2", {"1", "3"}},
                                           {"e3", {"1", "4"}},
                                           {"e4", {"2", "3"}},
                                           {"e5", {"2", "4"}}});
}

inline Hypergraph k4_graph() {
  return Hypergraph({"1", "2", "3", "4"}, {{"e1", {"1", "2"}},
                                           {"e2", {"1", "3"}},
                                           {"e3", {"1", "4"}},
                                           {"e4", {"2", "3"}},
                                           {"e5", {"2", "4"}},
                                           {"e6", {"3", "4"}}});
}

} // namespace gog::fixtures

#endif
