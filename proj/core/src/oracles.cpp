#include "gog/oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "gog/errors.hpp"

namespace gog {

namespace {

// Elimination local to the oracles: intentionally not shared with linalg.
std::size_t oracle_rank(std::vector<std::vector<Rat>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j)
        if (m[rank][j] != 0) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

long choose2(long x) { return x >= 2 ? x * (x - 1) / 2 : 0; }

} // namespace

RigidityOracle rigidity_nullity(const Hypergraph& graph,
                                const std::map<std::string, std::vector<Rat>>& coords, int d) {
  require(d >= 1, "dimension must be positive");
  const std::size_t nd = static_cast<std::size_t>(d);
  const std::size_t nv = graph.vertices().size();
  auto point = [&](const std::string& v) -> const std::vector<Rat>& {
    auto it = coords.find(v);
    require(it != coords.end(), "missing coordinates for " + v);
    require(it->second.size() == nd, "coordinates of " + v + " have wrong dimension");
    return it->second;
  };

  // rigidity matrix: one row per edge, (p(v)-p(w)) in v's block and the
  // negative in w's block
  std::vector<std::vector<Rat>> rows;
  for (const auto& e : graph.edges()) {
    require(e.vertices.size() == 2, "rigidity matrix needs 2-edges");
    const auto& p = point(e.vertices[0]);
    const auto& q = point(e.vertices[1]);
    require(p != q, "edge " + e.id + " has coincident endpoints");
    std::vector<Rat> row(nd * nv, Rat(0));
    std::size_t vi = graph.vertex_index(e.vertices[0]);
    std::size_t wi = graph.vertex_index(e.vertices[1]);
    for (std::size_t t = 0; t < nd; ++t) {
      row[vi * nd + t] = p[t] - q[t];
      row[wi * nd + t] = q[t] - p[t];
    }
    rows.push_back(std::move(row));
  }

  RigidityOracle out;
  out.nullity = nd * nv - oracle_rank(rows);

  // affine span: rank of the differences against the first point
  std::size_t k = 0;
  if (nv >= 2) {
    std::vector<std::vector<Rat>> diffs;
    const auto& base = point(graph.vertices().front());
    for (std::size_t i = 1; i < nv; ++i) {
      const auto& p = point(graph.vertices()[i]);
      std::vector<Rat> row(nd);
      for (std::size_t t = 0; t < nd; ++t) row[t] = p[t] - base[t];
      diffs.push_back(std::move(row));
    }
    k = oracle_rank(diffs);
  }
  out.affine_span_dim = k;
  out.trivial_dim = choose2(d + 1) - choose2(d - static_cast<long>(k));
  out.rigid = nv == 0 ? true : static_cast<long>(out.nullity) == out.trivial_dim;
  return out;
}

ColouringList proper_colourings(const Hypergraph& graph, int n) {
  require(n >= 1, "colour count must be positive");
  require(graph.is_two_uniform(), "colouring enumeration needs a graph with 2-edges");
  const std::size_t nv = graph.vertices().size();
  std::vector<std::vector<std::size_t>> adj(nv);
  for (const auto& e : graph.edges()) {
    std::size_t a = graph.vertex_index(e.vertices[0]);
    std::size_t b = graph.vertex_index(e.vertices[1]);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  ColouringList out;
  std::vector<int> col(nv, -1);
  std::vector<std::size_t> order(nv);
  for (std::size_t i = 0; i < nv; ++i) order[i] = i;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == nv) {
      ++out.count;
      out.colourings.push_back(col);
      return;
    }
    std::size_t v = order[k];
    for (int c = 0; c < n; ++c) {
      bool ok = std::none_of(adj[v].begin(), adj[v].end(),
                             [&](std::size_t u) { return col[u] == c; });
      if (!ok) continue;
      col[v] = c;
      rec(k + 1);
      col[v] = -1;
    }
  };
  rec(0);
  return out;
}

bool unique_colourability_bruteforce(const Hypergraph& graph, int n) {
  ColouringList all = proper_colourings(graph, n);
  if (all.count == 0) return true; // vacuous
  auto canonical = [](const std::vector<int>& c) {
    std::vector<int> relabel, out;
    relabel.assign(c.size() + 16, -1);
    int next = 0;
    for (int colour : c) {
      if (relabel[static_cast<std::size_t>(colour)] < 0)
        relabel[static_cast<std::size_t>(colour)] = next++;
      out.push_back(relabel[static_cast<std::size_t>(colour)]);
    }
    return out;
  };
  std::vector<int> first = canonical(all.colourings.front());
  return std::all_of(all.colourings.begin(), all.colourings.end(),
                     [&](const std::vector<int>& c) { return canonical(c) == first; });
}

MaxwellCountReport classical_maxwell_count(const Hypergraph& graph, int d,
                                           std::size_t max_free_bits) {
  require(graph.is_two_uniform(), "classical count needs 2-edges");
  MaxwellCountReport out;
  out.edge_count = static_cast<long>(graph.edges().size());
  out.expected_edges = static_cast<long>(d) * static_cast<long>(graph.vertices().size()) -
                       choose2(d + 1);
  out.count_tight = out.edge_count == out.expected_edges;

  const std::size_t ne = graph.edges().size();
  auto check = [&](const std::vector<std::size_t>& subset) {
    if (subset.empty()) return true;
    std::set<std::string> vs;
    for (std::size_t e : subset)
      for (const auto& v : graph.edges()[e].vertices) vs.insert(v);
    long k = std::min<long>(d, static_cast<long>(vs.size()) - 1);
    long trivial = choose2(d + 1) - choose2(d - k);
    return static_cast<long>(subset.size()) <=
           static_cast<long>(d) * static_cast<long>(vs.size()) - trivial;
  };

  if (ne <= max_free_bits) {
    out.subsets_exhaustive = true;
    for (std::size_t mask = 1; mask < (std::size_t{1} << ne); ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t e = 0; e < ne; ++e)
        if ((mask >> e) & 1u) subset.push_back(e);
      if (!check(subset)) {
        out.subsets_ok = false;
        return out;
      }
    }
  } else {
    const std::size_t nv = graph.vertices().size();
    require(nv <= max_free_bits, "graph too large for the subset scan");
    for (std::size_t mask = 1; mask < (std::size_t{1} << nv); ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t e = 0; e < ne; ++e) {
        const auto& verts = graph.edges()[e].vertices;
        bool inside = std::all_of(verts.begin(), verts.end(), [&](const std::string& v) {
          return (mask >> graph.vertex_index(v)) & 1u;
        });
        if (inside) subset.push_back(e);
      }
      if (!check(subset)) {
        out.subsets_ok = false;
        return out;
      }
    }
  }
  return out;
}

long homomorphism_count_bruteforce(const Hypergraph& gamma, const Hypergraph& lambda) {
  require(gamma.is_two_uniform() && lambda.is_two_uniform(), "homomorphisms need graphs");
  const std::size_t gn = gamma.vertices().size();
  const std::size_t ln = lambda.vertices().size();
  std::vector<std::vector<bool>> ladj(ln, std::vector<bool>(ln, false));
  for (const auto& e : lambda.edges()) {
    std::size_t a = lambda.vertex_index(e.vertices[0]);
    std::size_t b = lambda.vertex_index(e.vertices[1]);
    ladj[a][b] = ladj[b][a] = true;
  }
  if (gn == 0) return 1;
  if (ln == 0) return 0;
  long count = 0;
  std::vector<std::size_t> img(gn, 0);
  // plain odometer over all assignments: deliberately the dumbest check
  while (true) {
    bool ok = true;
    for (const auto& e : gamma.edges()) {
      std::size_t a = gamma.vertex_index(e.vertices[0]);
      std::size_t b = gamma.vertex_index(e.vertices[1]);
      if (!ladj[img[a]][img[b]]) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    std::size_t pos = 0;
    while (pos < gn && ++img[pos] == ln) img[pos++] = 0;
    if (pos == gn) break;
  }
  return count;
}

} // namespace gog
