#include "corpus.hpp"

#include <algorithm>
#include <set>

#include "gog/errors.hpp"

namespace gog::corpus {

namespace {

std::vector<std::string> vertex_names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("v" + std::to_string(i + 1));
  return v;
}

std::vector<HyperEdge> random_simple_edges(Rng& rng, const std::vector<std::string>& verts,
                                           std::size_t count) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) pairs.emplace_back(i, j);
  std::shuffle(pairs.begin(), pairs.end(), rng.engine);
  count = std::min(count, pairs.size());
  std::vector<HyperEdge> edges;
  for (std::size_t k = 0; k < count; ++k)
    edges.push_back(
        {"e" + std::to_string(k + 1), {verts[pairs[k].first], verts[pairs[k].second]}});
  return edges;
}

} // namespace

Instance random_bar_joint(Rng& rng, int d, std::size_t max_vertices) {
  std::size_t nv = static_cast<std::size_t>(rng.int_in(1, static_cast<long>(max_vertices)));
  auto verts = vertex_names(nv);

  BarJointInstance inst;
  inst.d = d;
  std::set<std::vector<std::string>> seen; // string forms keep distinctness exact
  for (const auto& v : verts) {
    std::vector<Rat> p;
    std::vector<std::string> key;
    do {
      p = rng.rat_vec(static_cast<std::size_t>(d));
      key.clear();
      for (const auto& x : p) key.push_back(rat_to_string(x));
    } while (!seen.insert(key).second);
    inst.coordinates[v] = p;
  }

  std::size_t max_edges = std::min(nv * (nv - 1) / 2, 3 * nv);
  std::size_t ne = nv < 2 ? 0 : static_cast<std::size_t>(rng.int_in(0, static_cast<long>(max_edges)));
  return Instance{Hypergraph(verts, random_simple_edges(rng, verts, ne)), inst};
}

Instance random_projective(Rng& rng, std::size_t max_vertices) {
  std::size_t nv = static_cast<std::size_t>(rng.int_in(2, static_cast<long>(max_vertices)));
  auto verts = vertex_names(nv);

  ProjectiveInstance inst;
  inst.n = 3;
  inst.k = 1;
  inst.l = 2;

  // pairwise independent points so every chosen pair spans a line
  std::vector<std::vector<Rat>> points;
  while (points.size() < nv) {
    std::vector<Rat> p = rng.rat_vec(3);
    bool ok = std::any_of(p.begin(), p.end(), [](const Rat& x) { return x != 0; });
    for (const auto& q : points) {
      if (!ok) break;
      Mat pair(0, 3);
      pair.append_row(p);
      pair.append_row(q);
      if (rank(pair) < 2) ok = false;
    }
    if (ok) points.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < nv; ++i) {
    Mat basis(0, 3);
    basis.append_row(points[i]);
    inst.vertex_subspaces[verts[i]] = std::move(basis);
  }

  std::size_t max_edges = std::min(nv * (nv - 1) / 2, std::size_t{8});
  auto edges = random_simple_edges(rng, verts, static_cast<std::size_t>(rng.int_in(
                                                   1, static_cast<long>(max_edges))));
  for (const auto& e : edges) {
    Mat basis(0, 3);
    basis.append_row(points[static_cast<std::size_t>(
        std::find(verts.begin(), verts.end(), e.vertices[0]) - verts.begin())]);
    basis.append_row(points[static_cast<std::size_t>(
        std::find(verts.begin(), verts.end(), e.vertices[1]) - verts.begin())]);
    inst.edge_subspaces[e.id] = std::move(basis);
  }
  return Instance{Hypergraph(verts, edges), inst};
}

Instance random_scene(Rng& rng, int d) {
  const std::size_t dim = static_cast<std::size_t>(d);
  std::size_t nv = static_cast<std::size_t>(rng.int_in(static_cast<long>(dim),
                                                       static_cast<long>(dim) + 4));
  auto verts = vertex_names(nv);

  for (int attempt = 0; attempt < 200; ++attempt) {
    SceneInstance inst;
    inst.d = d;
    bool points_ok = true;
    for (const auto& v : verts) {
      std::vector<Rat> p = rng.rat_vec(dim + 1);
      bool finite_part = false;
      for (std::size_t i = 0; i < dim; ++i)
        if (p[i] != 0) finite_part = true;
      if (!finite_part) {
        points_ok = false;
        break;
      }
      inst.points[v] = std::move(p);
    }
    if (!points_ok) continue;

    // edges: exactly d vertices each, covering every vertex
    std::size_t ne = static_cast<std::size_t>(rng.int_in(2, 4));
    std::vector<HyperEdge> edges;
    std::vector<std::size_t> order(nv);
    for (std::size_t i = 0; i < nv; ++i) order[i] = i;
    for (std::size_t k = 0; k < ne; ++k) {
      std::shuffle(order.begin(), order.end(), rng.engine);
      std::vector<std::string> members;
      for (std::size_t t = 0; t < dim; ++t) members.push_back(verts[order[t]]);
      std::sort(members.begin(), members.end());
      edges.push_back({"e" + std::to_string(k + 1), members});
    }
    // cover leftover vertices with one edge each
    std::set<std::string> covered;
    for (const auto& e : edges)
      covered.insert(e.vertices.begin(), e.vertices.end());
    for (std::size_t i = 0; i < nv && edges.size() < 9; ++i) {
      if (covered.count(verts[i])) continue;
      std::vector<std::string> members{verts[i]};
      for (std::size_t j = 0; members.size() < dim; ++j)
        if (verts[j] != verts[i]) members.push_back(verts[j]);
      std::sort(members.begin(), members.end());
      edges.push_back({"e" + std::to_string(edges.size() + 1), members});
      covered.insert(members.begin(), members.end());
    }
    // drop duplicated vertex sets only if ids collide (they cannot), but
    // reject edges that fail to span or whose hyperplane meets the centre
    bool edges_ok = true;
    for (const auto& e : edges) {
      Mat rows(0, dim + 1);
      for (const auto& v : e.vertices) rows.append_row(inst.points.at(v));
      Subspace sol = nullspace(rows);
      if (sol.dim() != 1 || sol.basis().at(0, dim) == 0) {
        edges_ok = false;
        break;
      }
    }
    if (!edges_ok) continue;
    return Instance{Hypergraph(verts, edges), inst};
  }
  throw internal_error("scene corpus generation failed to converge");
}

Instance random_parallel(Rng& rng, int d) {
  return dualize_instance(random_scene(rng, d), DualTarget::scene_to_parallel);
}

ConstrainedCase random_constrained(Rng& rng, std::size_t max_vertices) {
  Instance base = random_bar_joint(rng, 2, max_vertices);
  const auto& bj = std::get<BarJointInstance>(base.payload);
  ConstrainedInstance inst;
  inst.d = 2;
  inst.coordinates = bj.coordinates;
  ConstrainedCase out;
  for (const auto& [v, p] : inst.coordinates) {
    long want = rng.int_in(0, 2);
    Mat dirs(0, 2);
    while (dirs.rows() < static_cast<std::size_t>(want)) {
      std::vector<Rat> row = rng.rat_vec(2);
      Mat trial = dirs;
      trial.append_row(row);
      if (rank(trial) == trial.rows()) dirs = std::move(trial);
    }
    out.dim_sum += want;
    inst.constraints[v] = AffineSubspace{p, std::move(dirs)};
  }
  out.instance = Instance{base.hypergraph, std::move(inst)};
  return out;
}

} // namespace gog::corpus
