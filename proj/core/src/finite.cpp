#include "gog/finite.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

#include "gog/errors.hpp"

namespace gog {

Perm perm_compose(const Perm& a, const Perm& b) {
  ensure(a.size() == b.size(), "composing permutations of different degree");
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[static_cast<std::size_t>(b[x])];
  return c;
}

Perm perm_inverse(const Perm& a) {
  Perm inv(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) inv[static_cast<std::size_t>(a[x])] = static_cast<int>(x);
  return inv;
}

namespace {
void validate_perm(const Perm& p, int degree) {
  require(p.size() == static_cast<std::size_t>(degree), "permutation has wrong degree");
  std::vector<bool> seen(p.size(), false);
  for (int img : p) {
    require(img >= 0 && img < degree, "permutation image out of range");
    require(!seen[static_cast<std::size_t>(img)], "permutation repeats an image");
    seen[static_cast<std::size_t>(img)] = true;
  }
}
} // namespace

PermGroup::PermGroup(int degree, std::vector<Perm> elements)
    : degree_(degree), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  ensure(!elements_.empty(), "empty permutation group");
}

PermGroup PermGroup::symmetric(int degree) {
  require(degree >= 1, "symmetric group needs degree >= 1");
  Perm p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return PermGroup(degree, std::move(all));
}

PermGroup PermGroup::generated(int degree, const std::vector<Perm>& gens, std::size_t cap) {
  require(degree >= 1, "group needs degree >= 1");
  for (const Perm& g : gens) validate_perm(g, degree);
  Perm id(static_cast<std::size_t>(degree));
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> closure{id};
  std::queue<Perm> work;
  work.push(id);
  while (!work.empty()) {
    Perm cur = work.front();
    work.pop();
    for (const Perm& g : gens) {
      Perm next = perm_compose(g, cur);
      if (closure.insert(next).second) {
        require(closure.size() <= cap, "group closure exceeds the enumeration cap");
        work.push(std::move(next));
      }
    }
  }
  return PermGroup(degree, std::vector<Perm>(closure.begin(), closure.end()));
}

std::size_t PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  require(it != elements_.end() && *it == p, "permutation not in the group");
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t PermGroup::compose(std::size_t i, std::size_t j) const {
  return index_of(perm_compose(elements_[i], elements_[j]));
}

std::size_t PermGroup::inverse(std::size_t i) const { return index_of(perm_inverse(elements_[i])); }

std::vector<std::uint32_t> PermGroup::point_stabiliser(int point) const {
  require(point >= 0 && point < degree_, "stabilised point out of range");
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i][static_cast<std::size_t>(point)] == point)
      out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

bool is_subgroup(const PermGroup& g, const ElementSet& h) {
  if (h.empty()) return false;
  std::vector<bool> member(g.order(), false);
  for (std::uint32_t i : h) {
    if (i >= g.order()) return false;
    member[i] = true;
  }
  for (std::uint32_t a : h)
    for (std::uint32_t b : h)
      if (!member[g.compose(a, b)]) return false;
  return true;
}

ElementSet intersect_sets(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet left_coset(const PermGroup& g, std::uint32_t rep, const ElementSet& subgroup) {
  ElementSet out;
  out.reserve(subgroup.size());
  for (std::uint32_t h : subgroup)
    out.push_back(static_cast<std::uint32_t>(g.compose(rep, h)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> fix_of_subgroup(const PermGroup& g, const ElementSet& subgroup) {
  require(is_subgroup(g, subgroup), "fix: not a subgroup");
  std::vector<int> out;
  for (int x = 0; x < g.degree(); ++x) {
    bool fixed = std::all_of(subgroup.begin(), subgroup.end(), [&](std::uint32_t i) {
      return g.element(i)[static_cast<std::size_t>(x)] == x;
    });
    if (fixed) out.push_back(x);
  }
  return out;
}

FiniteRealisation make_finite_realisation(Hypergraph h, PermGroup g,
                                          std::vector<ElementSet> vertex_groups,
                                          std::vector<ElementSet> edge_groups,
                                          std::vector<ElementSet> incidence_groups) {
  require(vertex_groups.size() == h.vertices().size(), "vertex subgroup count mismatch");
  require(edge_groups.size() == h.edges().size(), "edge subgroup count mismatch");
  auto incs = incidence_set(h);
  require(incidence_groups.size() == incs.size(), "incidence subgroup count mismatch");
  for (const auto& s : vertex_groups) require(is_subgroup(g, s), "vertex set is not a subgroup");
  for (const auto& s : edge_groups) require(is_subgroup(g, s), "edge set is not a subgroup");
  for (std::size_t q = 0; q < incs.size(); ++q) {
    require(is_subgroup(g, incidence_groups[q]), "incidence set is not a subgroup");
    const ElementSet& hv = vertex_groups[h.vertex_index(incs[q].vertex)];
    const ElementSet& he = edge_groups[h.edge_index(incs[q].edge)];
    require(std::includes(hv.begin(), hv.end(), incidence_groups[q].begin(),
                          incidence_groups[q].end()) &&
                std::includes(he.begin(), he.end(), incidence_groups[q].begin(),
                              incidence_groups[q].end()),
            "incidence subgroup not contained in its endpoints");
  }
  return FiniteRealisation{std::move(h), std::move(g), std::move(vertex_groups),
                           std::move(edge_groups), std::move(incidence_groups)};
}

FiniteRealisation from_colouring(const Hypergraph& h, const std::map<std::string, int>& colouring,
                                 int n) {
  require(n >= 3, "colour stabilisers need n >= 3");
  require(h.is_two_uniform(), "colouring realisations need a graph with 2-edges");
  auto colour_of = [&](const std::string& v) {
    auto it = colouring.find(v);
    require(it != colouring.end(), "missing colour for vertex " + v);
    require(it->second >= 1 && it->second <= n, "colour out of range for vertex " + v);
    return it->second - 1;
  };
  for (const auto& e : h.edges())
    require(colour_of(e.vertices[0]) != colour_of(e.vertices[1]),
            "improper colouring on edge " + e.id);

  PermGroup g = PermGroup::symmetric(n);
  std::vector<ElementSet> vgs;
  for (const auto& v : h.vertices()) vgs.push_back(g.point_stabiliser(colour_of(v)));
  std::vector<ElementSet> egs;
  for (const auto& e : h.edges())
    egs.push_back(intersect_sets(vgs[h.vertex_index(e.vertices[0])],
                                 vgs[h.vertex_index(e.vertices[1])]));
  std::vector<ElementSet> igs;
  for (const auto& inc : incidence_set(h))
    igs.push_back(intersect_sets(vgs[h.vertex_index(inc.vertex)], egs[h.edge_index(inc.edge)]));
  return make_finite_realisation(h, std::move(g), std::move(vgs), std::move(egs), std::move(igs));
}

namespace {

/// Partitions the group into left cosets of the subgroup; positions are
/// ordered by canonical (least-index) representative.
void enumerate_cosets(const PermGroup& g, const ElementSet& sub,
                      std::vector<ElementSet>& fibre, std::vector<std::uint32_t>& coset_of) {
  fibre.clear();
  coset_of.assign(g.order(), 0);
  std::vector<bool> seen(g.order(), false);
  for (std::uint32_t rep = 0; rep < g.order(); ++rep) {
    if (seen[rep]) continue;
    ElementSet coset = left_coset(g, rep, sub);
    std::uint32_t pos = static_cast<std::uint32_t>(fibre.size());
    for (std::uint32_t e : coset) {
      seen[e] = true;
      coset_of[e] = pos;
    }
    fibre.push_back(std::move(coset));
  }
}

} // namespace

std::size_t CosetGraph::node_count() const {
  std::size_t n = 0;
  for (const auto& f : fibres) n += f.size();
  return n;
}

std::size_t CosetGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& f : incidence_fibres) n += f.size();
  return n;
}

CosetGraph coset_graph(const FiniteRealisation& r, std::size_t cap) {
  require(r.group.order() <= cap, "group too large for coset enumeration");
  CosetGraph x;
  x.realisation = &r;
  const Hypergraph& h = r.hypergraph;
  const std::size_t nv = h.vertices().size();
  const std::size_t ne = h.edges().size();
  x.fibres.resize(nv + ne);
  x.coset_of.resize(nv + ne);
  for (std::size_t i = 0; i < nv; ++i)
    enumerate_cosets(r.group, r.vertex_groups[i], x.fibres[i], x.coset_of[i]);
  for (std::size_t i = 0; i < ne; ++i)
    enumerate_cosets(r.group, r.edge_groups[i], x.fibres[nv + i], x.coset_of[nv + i]);

  auto incs = incidence_set(h);
  x.incidence_fibres.resize(incs.size());
  for (std::size_t q = 0; q < incs.size(); ++q) {
    std::size_t vi = h.vertex_index(incs[q].vertex);
    std::size_t ei = nv + h.edge_index(incs[q].edge);
    std::vector<bool> seen(r.group.order(), false);
    for (std::uint32_t rep = 0; rep < r.group.order(); ++rep) {
      if (seen[rep]) continue;
      ElementSet coset = left_coset(r.group, rep, r.incidence_groups[q]);
      for (std::uint32_t e : coset) seen[e] = true;
      CosetGraph::EdgeClass ec;
      ec.vertex_coset = x.coset_of[vi][rep];
      ec.edge_coset = x.coset_of[ei][rep];
      ec.coset = std::move(coset);
      x.incidence_fibres[q].push_back(std::move(ec));
    }
  }
  return x;
}

std::vector<Section> enumerate_sections(const CosetGraph& x) {
  const FiniteRealisation& r = *x.realisation;
  IncidenceGraph ig = incidence_graph(r.hypergraph);
  const std::size_t n = ig.node_count();

  // breadth-first order from a maximum-degree node, restarted per component
  std::vector<std::size_t> order;
  std::vector<bool> visited(n, false);
  std::vector<std::size_t> degree(n);
  for (std::size_t i = 0; i < n; ++i) degree[i] = ig.adjacency[i].size();
  while (order.size() < n) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!visited[i] && (best == n || degree[i] > degree[best])) best = i;
    std::queue<std::size_t> bfs;
    bfs.push(best);
    visited[best] = true;
    while (!bfs.empty()) {
      std::size_t cur = bfs.front();
      bfs.pop();
      order.push_back(cur);
      for (std::size_t qi : ig.adjacency[cur]) {
        auto [a, b] = ig.links[qi];
        std::size_t other = a == cur ? b : a;
        if (!visited[other]) {
          visited[other] = true;
          bfs.push(other);
        }
      }
    }
  }

  // adjacency tests go through the per-element coset lookup: two cosets are
  // joined over incidence q iff they share a group element
  auto compatible = [&](std::size_t node_a, std::uint32_t ca, std::size_t node_b, std::uint32_t cb) {
    const ElementSet& set_a = x.fibres[node_a][ca];
    for (std::uint32_t g : set_a)
      if (x.coset_of[node_b][g] == cb) return true;
    return false;
  };

  std::vector<Section> out;
  std::vector<std::uint32_t> choice(n, 0);
  std::vector<bool> assigned(n, false);

  auto feasible = [&](std::size_t node, std::uint32_t c) {
    for (std::size_t qi : ig.adjacency[node]) {
      auto [a, b] = ig.links[qi];
      std::size_t other = a == node ? b : a;
      if (!assigned[other]) continue;
      if (!compatible(node, c, other, choice[other])) return false;
    }
    return true;
  };

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == order.size()) {
      out.push_back(Section{choice});
      return;
    }
    std::size_t node = order[k];
    for (std::uint32_t c = 0; c < x.fibres[node].size(); ++c) {
      if (!feasible(node, c)) continue;
      choice[node] = c;
      assigned[node] = true;
      rec(k + 1);
      assigned[node] = false;
    }
  };
  rec(0);

  std::sort(out.begin(), out.end(),
            [](const Section& a, const Section& b) { return a.choice < b.choice; });
  return out;
}

bool is_globally_rigid_finite(const FiniteRealisation& r) {
  CosetGraph x = coset_graph(r);
  for (const Section& s : enumerate_sections(x)) {
    const std::size_t n = x.fibres.size();
    ElementSet common = n == 0 ? ElementSet{} : x.fibres[0][s.choice[0]];
    for (std::size_t t = 1; t < n && !common.empty(); ++t)
      common = intersect_sets(common, x.fibres[t][s.choice[t]]);
    if (n > 0 && common.empty()) return false;
  }
  return true;
}

long tensor_sections(const Hypergraph& gamma, const Hypergraph& lambda) {
  require(gamma.is_two_uniform() && lambda.is_two_uniform(), "tensor product needs graphs");
  const std::size_t gn = gamma.vertices().size();
  const std::size_t ln = lambda.vertices().size();

  std::vector<std::vector<bool>> ladj(ln, std::vector<bool>(ln, false));
  for (const auto& e : lambda.edges()) {
    std::size_t a = lambda.vertex_index(e.vertices[0]);
    std::size_t b = lambda.vertex_index(e.vertices[1]);
    ladj[a][b] = ladj[b][a] = true;
  }
  std::vector<std::vector<std::size_t>> gadj(gn);
  for (const auto& e : gamma.edges()) {
    std::size_t a = gamma.vertex_index(e.vertices[0]);
    std::size_t b = gamma.vertex_index(e.vertices[1]);
    gadj[a].push_back(b);
    gadj[b].push_back(a);
  }

  // fibres of the projection from the tensor product are {x} x V(lambda);
  // a section picks one lambda-vertex per gamma-vertex so tensor edges
  // cover the gamma edges
  std::vector<std::size_t> order(gn);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return gadj[a].size() > gadj[b].size(); });

  std::vector<int> pick(gn, -1);
  long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == gn) {
      ++count;
      return;
    }
    std::size_t x = order[k];
    for (std::size_t y = 0; y < ln; ++y) {
      bool ok = true;
      for (std::size_t nb : gadj[x]) {
        if (pick[nb] < 0) continue;
        if (!ladj[y][static_cast<std::size_t>(pick[nb])]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      pick[x] = static_cast<int>(y);
      rec(k + 1);
      pick[x] = -1;
    }
  };
  rec(0);
  return count;
}

} // namespace gog
